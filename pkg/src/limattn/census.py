"""Exhaustive census of small choice universes and fixture verification.

The census enumerates every total choice function on n <= 4
alternatives, classifies each one, and tallies the class-diagram
regions. Enumeration order is mixed-radix over menus in ascending set
encoding (first menu most significant), so contiguous index ranges
partition the work deterministically across any worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _bulk, fixtures
from .axioms import FilterKind, is_filter, optimal_filter_conditions
from .classify import classify
from .core import ChoiceFunction
from .errors import SizeTooLargeError
from .forward import FilterOrder, simulate

CENSUS_MAX_N = 4

REGION_NAMES = (
    "cla_only",
    "ccla_only",
    "csla_only",
    "csla_ccla",
    "cola_only",
    "cola_ccla",
    "cola_csla",
    "cola_csla_ccla",
)


@dataclass(frozen=True)
class CensusReport:
    """Counts from one full enumeration.

    ``regions`` splits the plain-limited-attention count into the eight
    cells of the optimal/salient/competitive diagram; ``cssla_core`` is
    the rationalizable kernel inside the triple cell. ``cla_per_24`` is
    an exploratory convenience: the plain-attention count divided by 24,
    for comparison against external tallies that quotient the n=4
    universe by that factor. It is reported, never asserted.
    """

    n: int
    total: int
    counts: dict[str, int]
    regions: dict[str, int]
    cssla_core: int
    elapsed_seconds: float
    workers: int
    note: str = field(
        default="cla_per_24 is exploratory: raw count divided by 24, no acceptance meaning"
    )

    @property
    def cla_per_24(self) -> float:
        return self.counts["cla"] / 24.0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "counts": dict(self.counts),
            "regions": dict(self.regions),
            "cssla_core": self.cssla_core,
            "cla_per_24": self.cla_per_24,
            "elapsed_seconds": self.elapsed_seconds,
            "workers": self.workers,
            "note": self.note,
        }

    def to_text(self) -> str:
        lines = [f"n: {self.n}", f"total: {self.total}"]
        for name in ("rat", "cla", "cola", "csla", "ccla", "pilc"):
            lines.append(f"{name}: {self.counts[name]}")
        for name in REGION_NAMES:
            lines.append(f"region {name}: {self.regions[name]}")
        lines.append(f"cssla_core: {self.cssla_core}")
        lines.append(f"cla_per_24: {self.cla_per_24:g}")
        lines.append(f"elapsed_seconds: {self.elapsed_seconds:.3f}")
        lines.append(f"workers: {self.workers}")
        lines.append(f"note: {self.note}")
        return "\n".join(lines) + "\n"


def enumerate_choice_functions(n: int) -> Iterator[ChoiceFunction]:
    """Yield every total choice function on n alternatives exactly once.

    Universe sizes: 2 -> 2, 3 -> 24, 4 -> 20736. Larger ground sets are
    refused; the n=5 universe (about 3.1e11 functions) is out of reach
    for exact enumeration.
    """
    if not 2 <= n <= CENSUS_MAX_N:
        raise SizeTooLargeError(f"census enumerates n in 2..{CENSUS_MAX_N}, got {n}")
    ground = fixtures.ground_n(n)
    size = 1 << n
    menus = list(range(1, size))
    options = [_members_cached(mask) for mask in menus]

    def rec(pos: int, acc: list[int]) -> Iterator[ChoiceFunction]:
        if pos == len(menus):
            yield ChoiceFunction(ground, tuple([-1] + acc))
            return
        for pick in options[pos]:
            acc.append(pick)
            yield from rec(pos + 1, acc)
            acc.pop()

    yield from rec(0, [])


def _members_cached(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if (mask >> i) & 1]


def _census_chunk(args: tuple[int, int, int]) -> dict:
    n, start, stop = args
    idx = np.arange(start, stop, dtype=np.int64)
    rows = _bulk.decode_functions(n, idx)
    flags = _bulk.classify_batch(n, rows)
    counts = {name: int(flags[name].sum()) for name in ("rat", "cla", "cola", "csla", "ccla", "pilc")}
    cla = flags["cla"]
    code = (
        flags["cola"].astype(np.int64) * 4
        + flags["csla"].astype(np.int64) * 2
        + flags["ccla"].astype(np.int64)
    )
    region_counts = np.bincount(code[cla], minlength=8)
    regions = {REGION_NAMES[i]: int(region_counts[i]) for i in range(8)}
    return {
        "counts": counts,
        "regions": regions,
        "cssla_core": int((flags["rat"] & cla).sum()),
    }


def run_census(n: int, workers: int = 1) -> CensusReport:
    """Classify the whole universe and tally the region map.

    Work is split into contiguous index ranges (fixed leading digits);
    merging is plain count addition, so the report is identical for
    every worker count.
    """
    if not 2 <= n <= CENSUS_MAX_N:
        raise SizeTooLargeError(f"census handles n in 2..{CENSUS_MAX_N}, got {n}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    started = time.perf_counter()
    total = _bulk.total_functions(n)
    chunk_count = max(workers * 4, 1) if workers > 1 else 1
    bounds = np.linspace(0, total, chunk_count + 1, dtype=np.int64)
    jobs = [(n, int(bounds[i]), int(bounds[i + 1])) for i in range(chunk_count)]
    jobs = [job for job in jobs if job[1] < job[2]]

    if workers == 1:
        partials = [_census_chunk(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_census_chunk, jobs))

    counts = {name: 0 for name in ("rat", "cla", "cola", "csla", "ccla", "pilc")}
    regions = {name: 0 for name in REGION_NAMES}
    cssla_core = 0
    for part in partials:
        for name, value in part["counts"].items():
            counts[name] += value
        for name, value in part["regions"].items():
            regions[name] += value
        cssla_core += part["cssla_core"]

    return CensusReport(
        n=n,
        total=total,
        counts=counts,
        regions=regions,
        cssla_core=cssla_core,
        elapsed_seconds=time.perf_counter() - started,
        workers=workers,
    )


@dataclass(frozen=True)
class FixtureCheck:
    label: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class FixtureResult:
    name: str
    checks: tuple[FixtureCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)


@dataclass(frozen=True)
class FixtureReport:
    results: tuple[FixtureResult, ...]

    @property
    def ok(self) -> bool:
        return all(result.ok for result in self.results)

    def to_text(self) -> str:
        lines = []
        for result in self.results:
            lines.append(f"{result.name}: {'pass' if result.ok else 'FAIL'}")
            for check in result.checks:
                if not check.ok:
                    lines.append(f"  FAIL {check.label}: {check.detail}")
        lines.append(f"overall: {'pass' if self.ok else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "overall": self.ok,
            "fixtures": {
                result.name: {
                    "ok": result.ok,
                    "checks": [
                        {"label": c.label, "ok": c.ok, "detail": c.detail}
                        for c in result.checks
                    ],
                }
                for result in self.results
            },
        }


def _flag_checks(name: str, c: ChoiceFunction) -> list[FixtureCheck]:
    membership = classify(c).flags()
    expected = dict(fixtures.EXPECTED_FLAGS[name])
    # Membership in any documented class implies plain limited attention,
    # and a documented miss anywhere rules out rationalizability.
    expected.setdefault("cla", True)
    expected.setdefault("rat", False)
    checks = []
    for flag, want in sorted(expected.items()):
        got = membership[flag]
        checks.append(
            FixtureCheck(
                label=f"{flag} is {str(want).lower()}",
                ok=got == want,
                detail="" if got == want else f"classifier says {got}",
            )
        )
    return checks


def verify_fixtures() -> FixtureReport:
    """Re-derive every documented property of the benchmark catalog."""
    results: list[FixtureResult] = []

    for name, build in fixtures.CHOICE_FIXTURES.items():
        results.append(FixtureResult(name, tuple(_flag_checks(name, build()))))

    for name, build in fixtures.CORR_FIXTURES.items():
        corr = build()
        conditions = optimal_filter_conditions(corr)
        want_bad = fixtures.REMARK_EXPECTED_VIOLATION[name]
        checks = []
        for cond in ("a", "b", "c"):
            want_ok = cond != want_bad
            got_ok = conditions[cond].ok
            checks.append(
                FixtureCheck(
                    label=f"condition {cond} {'holds' if want_ok else 'fails'}",
                    ok=got_ok == want_ok,
                    detail="" if got_ok == want_ok else f"check returned {got_ok}",
                )
            )
        results.append(FixtureResult(name, tuple(checks)))

    corr = fixtures.c4_pi_filter()
    order = fixtures.c4_pi_order()
    c4 = fixtures.c4()
    pi_check = is_filter(corr, FilterKind.PATH_INDEPENDENT)
    comp_check = is_filter(corr, FilterKind.COMPETITIVE, order)
    expected_witness_menu = c4.ground.mask_of(("w", "x", "y"))
    simulated = simulate(FilterOrder(corr, order))
    checks = [
        FixtureCheck("path independence holds", pi_check.ok),
        FixtureCheck(
            "competitive check fails",
            not comp_check.ok,
            "" if not comp_check.ok else "check unexpectedly passed",
        ),
        FixtureCheck(
            "competitive witness is the documented menu",
            comp_check.witness is not None
            and comp_check.witness.menus[0] == expected_witness_menu,
            "" if comp_check.witness else "no witness produced",
        ),
        FixtureCheck(
            "filter and order reproduce c4",
            simulated.choices == c4.choices,
        ),
    ]
    results.append(FixtureResult("c4-pi-filter", tuple(checks)))

    return FixtureReport(tuple(results))
