"""CountRecord and its CSV / JSONL serializations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .partitions import Partition, format_partition, parse_partition

METHODS = ("positive", "hook", "frobenius", "brute")
CSV_HEADER = ("n", "lambda", "mu", "count")


@dataclass(frozen=True)
class CountRecord:
    n: int
    lam: Partition
    mu: Partition
    method: str
    count: int
    nu: Partition | None = None

    def __post_init__(self):
        object.__setattr__(self, "lam", Partition(self.lam))
        object.__setattr__(self, "mu", Partition(self.mu))
        nu = Partition((self.n,)) if self.nu is None else Partition(self.nu)
        object.__setattr__(self, "nu", nu)
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.count < 0:
            raise ValueError(f"count must be nonnegative, got {self.count}")
        for name, p in (("lambda", self.lam), ("mu", self.mu), ("nu", self.nu)):
            if p.n != self.n:
                raise ValueError(f"{name}=[{p}] is not a partition of {self.n}")

    def to_json(self, include_nu: bool = False) -> str:
        obj = {"n": self.n, "lambda": list(self.lam), "mu": list(self.mu)}
        if include_nu:
            obj["nu"] = list(self.nu)
        # counts travel as decimal strings so no consumer rounds them
        obj["count"] = str(self.count)
        obj["method"] = self.method
        return json.dumps(obj)

    @classmethod
    def from_json(cls, line: str, method: str | None = None) -> CountRecord:
        obj = json.loads(line)
        nu = obj.get("nu")
        return cls(
            n=int(obj["n"]),
            lam=Partition(obj["lambda"]),
            mu=Partition(obj["mu"]),
            method=obj.get("method", method),
            count=int(obj["count"]),
            nu=Partition(nu) if nu is not None else None,
        )


def write_csv(records: Iterable[CountRecord], out: TextIO) -> None:
    writer = csv.writer(out, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    out.write(",".join(CSV_HEADER) + "\n")
    for rec in records:
        writer.writerow([rec.n, format_partition(rec.lam), format_partition(rec.mu), rec.count])
        out.flush()


def write_jsonl(records: Iterable[CountRecord], out: TextIO) -> None:
    for rec in records:
        out.write(rec.to_json() + "\n")
        out.flush()


def read_csv(text: str | TextIO, method: str = "positive") -> list[CountRecord]:
    stream = io.StringIO(text) if isinstance(text, str) else text
    rows = csv.reader(stream)
    header = next(rows)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    return [
        CountRecord(
            n=int(n),
            lam=parse_partition(lam),
            mu=parse_partition(mu),
            method=method,
            count=int(count),
        )
        for n, lam, mu, count in rows
    ]


def read_jsonl(text: str | TextIO) -> Iterator[CountRecord]:
    stream = io.StringIO(text) if isinstance(text, str) else text
    for line in stream:
        if line.strip():
            yield CountRecord.from_json(line)
