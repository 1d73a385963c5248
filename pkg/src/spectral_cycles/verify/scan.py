"""Extremal scans over graph sources under a forbidden-cycle constraint."""

from __future__ import annotations

import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import partial
from itertools import islice
from typing import Iterable, Iterator, TextIO

from ..cycles import DEFAULT_BUDGET, BudgetExceeded, cycle_lengths_dp, has_cycle_length_in
from ..graph import Graph, GraphDomainError, construct_snk, construct_snk_plus, is_snk, is_snk_plus
from ..spectral import spectral_radius
from .graph6 import parse_graph6, to_g6_str

TIE_WINDOW = 1e-9
CHUNK = 2048


@dataclass(frozen=True)
class CycleConstraint:
    """Forbidden cycle lengths ``lo..hi``; ``hi=None`` means unbounded."""

    mode: str
    lo: int
    hi: int | None = None

    def __post_init__(self):
        if self.mode not in ("atleast", "exactly", "window"):
            raise GraphDomainError(f"unknown constraint mode {self.mode!r}")
        if self.lo < 3:
            raise GraphDomainError("forbidden cycle lengths must be >= 3")
        if self.hi is not None and self.hi < self.lo:
            raise GraphDomainError("window needs lo <= hi")

    @classmethod
    def at_least(cls, ell: int) -> "CycleConstraint":
        return cls("atleast", ell)

    @classmethod
    def exactly(cls, ell: int) -> "CycleConstraint":
        return cls("exactly", ell, ell)

    @classmethod
    def window(cls, lo: int, hi: int) -> "CycleConstraint":
        return cls("window", lo, hi)

    @classmethod
    def parse(cls, text: str) -> "CycleConstraint":
        parts = text.lower().split(":")
        try:
            if parts[0] == "atleast" and len(parts) == 2:
                return cls.at_least(int(parts[1]))
            if parts[0] == "exactly" and len(parts) == 2:
                return cls.exactly(int(parts[1]))
            if parts[0] == "window" and len(parts) == 3:
                return cls.window(int(parts[1]), int(parts[2]))
        except ValueError:
            pass
        raise GraphDomainError(f"cannot parse constraint {text!r}")

    def __str__(self) -> str:
        if self.mode == "atleast":
            return f"atleast:{self.lo}"
        if self.mode == "exactly":
            return f"exactly:{self.lo}"
        return f"window:{self.lo}:{self.hi}"

    def upper(self, n: int) -> int:
        return n if self.hi is None else self.hi

    def forbids(self, length: int) -> bool:
        return self.lo <= length and (self.hi is None or length <= self.hi)

    def is_free(self, g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
        return not has_cycle_length_in(g, self.lo, self.upper(g.n), budget)


class Target(str, Enum):
    SNK = "snk"
    SNK_PLUS = "snkp"

    def build(self, n: int, k: int) -> Graph:
        return construct_snk(n, k) if self is Target.SNK else construct_snk_plus(n, k)

    def recognize(self, g: Graph, k: int) -> bool:
        return is_snk(g, k) if self is Target.SNK else is_snk_plus(g, k)


class ScanVerdict(str, Enum):
    UNIQUE_MAX = "TargetIsUniqueMax"
    TIED = "TargetTied"
    BEATEN = "TargetBeaten"
    NOT_FREE = "TargetNotFree"


@dataclass(frozen=True)
class ScanRecord:
    graph: str
    n: int
    k: int
    constraint: str
    mu: float | None  # only computed for constraint-free graphs
    is_free: bool | None
    is_target: bool
    error: str | None = None

    def to_dict(self) -> dict:
        d = {
            "graph": self.graph, "n": self.n, "k": self.k, "constraint": self.constraint,
            "mu": self.mu, "is_free": self.is_free, "is_target": self.is_target,
        }
        if self.error is not None:
            d["error"] = self.error
        return d


@dataclass
class ScanReport:
    parameters: dict
    count_scanned: int
    records: list[ScanRecord]
    maximizers: list[ScanRecord]
    mu_target: float
    target_free: bool
    verdict: ScanVerdict
    errors: int = 0
    cross_validated: bool | None = None

    @property
    def complete(self) -> bool:
        return self.errors == 0

    def summary(self) -> dict:
        return {
            "parameters": self.parameters,
            "count_scanned": self.count_scanned,
            "maximizers": [{"graph": r.graph, "mu": r.mu, "is_target": r.is_target} for r in self.maximizers],
            "mu_target": self.mu_target,
            "target_free": self.target_free,
            "verdict": self.verdict.value,
            "errors": self.errors,
            "complete": self.complete,
            "cross_validated": self.cross_validated,
        }

    def write_jsonl(self, fh: TextIO, *, include_records: bool = True) -> None:
        if include_records:
            for r in self.records:
                fh.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")
        fh.write(json.dumps({"summary": self.summary()}, sort_keys=True) + "\n")

    def to_jsonl(self, **kw) -> str:
        buf = io.StringIO()
        self.write_jsonl(buf, **kw)
        return buf.getvalue()


def scan_graph(g: Graph, k: int, constraint: CycleConstraint, target: Target, budget: int = DEFAULT_BUDGET) -> ScanRecord:
    g6 = to_g6_str(g)
    is_target = target.recognize(g, k)
    try:
        free = constraint.is_free(g, budget)
    except BudgetExceeded as exc:
        return ScanRecord(g6, g.n, k, str(constraint), None, None, is_target, error=str(exc))
    mu = spectral_radius(g).mu if free else None
    return ScanRecord(g6, g.n, k, str(constraint), mu, free, is_target)


def _scan_chunk(graphs: list[Graph], k, constraint, target, budget) -> list[ScanRecord]:
    return [scan_graph(g, k, constraint, target, budget) for g in graphs]


def _chunks(it: Iterable[Graph], n: int, size: int) -> Iterator[list[Graph]]:
    it = iter(it)
    while chunk := list(islice(it, size)):
        for g in chunk:
            if g.n != n:
                raise GraphDomainError(f"source graph of order {g.n} in a scan at n={n}")
        yield chunk


def scan_extremal(
    source: Iterable[Graph],
    n: int,
    k: int,
    constraint: CycleConstraint,
    target: Target | str = Target.SNK,
    *,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    source_label: str = "corpus",
) -> ScanReport:
    """Find the constraint-free graphs of largest spectral radius in ``source``.

    Records come back in source order whatever ``jobs`` is, so the report is
    byte-identical across worker counts.
    """
    target = Target(target)
    work = partial(_scan_chunk, k=k, constraint=constraint, target=target, budget=budget)
    records: list[ScanRecord] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(work, _chunks(source, n, CHUNK)):
                records.extend(part)
    else:
        for chunk in _chunks(source, n, CHUNK):
            records.extend(work(chunk))

    target_graph = target.build(n, k)
    target_free = constraint.is_free(target_graph, budget)
    mu_target = spectral_radius(target_graph).mu

    free = [r for r in records if r.is_free]
    maximizers: list[ScanRecord] = []
    if free:
        top = max(r.mu for r in free)
        maximizers = sorted((r for r in free if r.mu >= top - TIE_WINDOW), key=lambda r: r.graph)

    if not target_free:
        verdict = ScanVerdict.NOT_FREE
    elif maximizers and max(r.mu for r in maximizers) > mu_target + TIE_WINDOW:
        verdict = ScanVerdict.BEATEN
    elif any(not r.is_target and r.mu >= mu_target - TIE_WINDOW for r in maximizers):
        verdict = ScanVerdict.TIED
    else:
        verdict = ScanVerdict.UNIQUE_MAX

    report = ScanReport(
        parameters={"n": n, "k": k, "constraint": str(constraint), "target": target.value, "source": source_label},
        count_scanned=len(records),
        records=records,
        maximizers=maximizers,
        mu_target=mu_target,
        target_free=target_free,
        verdict=verdict,
        errors=sum(r.error is not None for r in records),
    )
    report.cross_validated = cross_validate(report, constraint)
    return report


def cross_validate(report: ScanReport, constraint: CycleConstraint) -> bool | None:
    """Re-check every maximizer's freeness with the subset-DP oracle."""
    if not report.maximizers or report.parameters["n"] > 20:
        return None
    for r in report.maximizers:
        lengths = cycle_lengths_dp(parse_graph6(r.graph))
        if any(constraint.forbids(ell) for ell in lengths):
            return False
    return True


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)
