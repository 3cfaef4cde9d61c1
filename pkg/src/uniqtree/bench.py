"""Effectiveness sweeps, timing curves and log-log polynomial-degree fits."""

from __future__ import annotations

import csv
import io
import math
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .compare import match_graphs
from .gen import GENERATOR_ID, GenConfig, GenerationError, isomorphic_pair, perturbed_pair, random_graph, sub_seed

__all__ = [
    "CSV_HEADER",
    "BenchRecord",
    "FitError",
    "FitResult",
    "loglog_fit",
    "make_pair",
    "read_csv",
    "run_sweep",
    "write_csv",
]

CSV_HEADER = ["n", "pair_kind", "pairs", "elapsed_ms", "iso_verdicts", "noniso_verdicts", "seed", "generator"]
PAIR_KINDS = ("iso", "perturbed")
MAX_RETRIES = 100


class FitError(ValueError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    n: int
    pair_kind: str
    pairs: int
    elapsed_ms: float
    iso_verdicts: int
    noniso_verdicts: int
    seed: int = 0
    generator: str = GENERATOR_ID

    def __post_init__(self):
        if self.iso_verdicts + self.noniso_verdicts != self.pairs:
            raise ValueError("verdict counts must sum to pairs")


@dataclass(frozen=True)
class FitResult:
    slope: float
    intercept: float
    r_squared: float
    n_range: tuple[int, int]
    points: int


def make_pair(kind: str, n: int, edge_probability: float, seed: int):
    """Deterministic (g, h) pair of the given kind for sub-seed ``seed``.

    Perturbed pairs whose base graph is empty or complete are redrawn from a
    fresh sub-seed, at most ``MAX_RETRIES`` times.
    """
    if kind not in PAIR_KINDS:
        raise ValueError(f"unknown pair kind {kind!r}")
    for attempt in range(MAX_RETRIES):
        s = sub_seed(seed, attempt)
        g = random_graph(GenConfig(n, edge_probability, sub_seed(s, 0)))
        if kind == "iso":
            return g, isomorphic_pair(g, sub_seed(s, 1))[0]
        try:
            return g, perturbed_pair(g, sub_seed(s, 1))
        except GenerationError:
            continue
    raise GenerationError(f"no perturbable graph with n={n}, p={edge_probability} after {MAX_RETRIES} draws")


def _verdicts(args) -> int:
    kind, n, p, seeds, mode = args
    return sum(match_graphs(*make_pair(kind, n, p, s), mode=mode).isomorphic for s in seeds)


def run_sweep(
    kind: str,
    n_min: int,
    n_max: int,
    pairs_per_n: int,
    edge_probability: float = 0.5,
    seed: int = 0,
    *,
    mode: str = "profile",
    workers: int = 1,
    progress=None,
) -> list[BenchRecord]:
    """One :class:`BenchRecord` per ``n`` in ``[n_min, n_max]``.

    Only :func:`match_graphs` is timed; pair generation is not.  With
    ``workers > 1`` verdicts are computed in parallel processes and
    ``elapsed_ms`` is NaN, since contended timings are meaningless.
    """
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"bad size range [{n_min}, {n_max}]")
    if pairs_per_n < 1:
        raise ValueError("pairs_per_n must be at least 1")
    if kind not in PAIR_KINDS:
        raise ValueError(f"unknown pair kind {kind!r}")

    sizes = range(n_min, n_max + 1)
    seeds = {n: [sub_seed(seed, n, i) for i in range(pairs_per_n)] for n in sizes}
    records = []
    if workers > 1:
        jobs = [(kind, n, edge_probability, seeds[n], mode) for n in sizes]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for n, iso in zip(sizes, pool.map(_verdicts, jobs)):
                records.append(BenchRecord(n, kind, pairs_per_n, math.nan, iso, pairs_per_n - iso, seed))
        return records

    for n in sizes:
        elapsed_ns = 0
        iso = 0
        for s in seeds[n]:
            g, h = make_pair(kind, n, edge_probability, s)
            t0 = time.perf_counter_ns()
            result = match_graphs(g, h, mode=mode)
            elapsed_ns += time.perf_counter_ns() - t0
            iso += result.isomorphic
        rec = BenchRecord(n, kind, pairs_per_n, elapsed_ns / 1e6, iso, pairs_per_n - iso, seed)
        records.append(rec)
        if progress is not None:
            progress(rec)
    return records


def loglog_fit(records: list[BenchRecord], n_min_fit: int = 21) -> FitResult:
    """Least-squares line through ``(ln n, ln elapsed_ms)`` for ``n >= n_min_fit``."""
    usable = [r for r in records if r.n >= n_min_fit]
    dropped = [r.n for r in usable if not r.elapsed_ms > 0]
    if dropped:
        warnings.warn(f"excluding {len(dropped)} records with non-positive or missing time: n={dropped}")
    usable = [r for r in usable if r.elapsed_ms > 0]
    if len(usable) < 3:
        raise FitError(f"need at least 3 timed records with n >= {n_min_fit}, have {len(usable)}")
    x = np.log([r.n for r in usable])
    y = np.log([r.elapsed_ms for r in usable])
    if np.ptp(x) == 0:
        raise FitError("all usable records share one n")
    xc = x - x.mean()
    yc = y - y.mean()
    slope = float(xc @ yc / (xc @ xc))
    intercept = float(y.mean() - slope * x.mean())
    ss_res = float(np.sum((yc - slope * xc) ** 2))
    ss_tot = float(yc @ yc)
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    r2 = min(1.0, max(0.0, r2))
    ns = [r.n for r in usable]
    return FitResult(slope, intercept, r2, (min(ns), max(ns)), len(usable))


def write_csv(records: list[BenchRecord], fp) -> None:
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow([r.n, r.pair_kind, r.pairs, repr(r.elapsed_ms), r.iso_verdicts, r.noniso_verdicts, r.seed, r.generator])


def read_csv(fp) -> list[BenchRecord]:
    if isinstance(fp, str):
        fp = io.StringIO(fp)
    reader = csv.reader(fp)
    header = next(reader)
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    return [
        BenchRecord(int(n), kind, int(pairs), float(ms), int(iso), int(non), int(seed), gen)
        for n, kind, pairs, ms, iso, non, seed, gen in reader
    ]
