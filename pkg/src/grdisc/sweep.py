"""Grid sweeps over random instances, written as deterministic CSV.

Each row runs one greedy variant on one seeded random instance and reports
the largest prefix discrepancy against ``max{p, 1-p} * C(n-1, k-1)``. The
``ratio`` column is an empirical probe of the constant in that bound.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .constructions import random_uniform, round_half_up
from .formats import decimal
from .greedy import GreedyVariant, order
from .hypergraph import binomial

HEADER = ["n", "k", "m", "p", "seed", "variant", "max_disc", "bound", "ratio", "within_bound"]


@dataclass(frozen=True)
class SweepRow:
    n: int
    k: int
    m: int
    p_decimal: str
    seed: int
    variant: str
    max_disc: str
    bound: str
    ratio: str
    within_bound: Optional[bool]
    error: str = ""

    def cells(self) -> list:
        flag = "" if self.within_bound is None else str(self.within_bound).lower()
        return [
            self.n, self.k, self.m, self.p_decimal, self.seed, self.variant,
            self.max_disc, self.bound, self.ratio, flag,
        ]


def edges_for_density(n: int, k: int, q) -> int:
    """Nearest-integer edge count for target density ``q`` (halves round up)."""
    return round_half_up(Fraction(str(q)) * binomial(n, k))


def summarize(H, result, seed: int) -> SweepRow:
    """Sweep row for a finished greedy run on ``H``."""
    den = binomial(H.n, H.k)
    cert = result.certificate
    ratio = Fraction(cert.max_abs_scaled, cert.bound_scaled) if cert.bound_scaled else Fraction(0)
    return SweepRow(
        n=H.n,
        k=H.k,
        m=H.m,
        p_decimal=decimal(H.m, den),
        seed=seed,
        variant=result.variant.value,
        max_disc=decimal(cert.max_abs_scaled, den),
        bound=decimal(cert.bound_scaled, den),
        ratio=decimal(ratio.numerator, ratio.denominator),
        within_bound=cert.within_bound,
    )


def sweep_row(n: int, k: int, q, seed: int, variant) -> SweepRow:
    variant = GreedyVariant.parse(variant)
    m = 0
    try:
        m = edges_for_density(n, k, q)
        H = random_uniform(n, k, m, seed)
        result = order(H, variant)
    except Exception as exc:  # recorded per row; the sweep keeps going
        return SweepRow(n, k, m, "", seed, variant.value, "", "", "", None, f"{type(exc).__name__}: {exc}")
    return summarize(H, result, seed)


def _run(args):
    return sweep_row(*args)


def grid(k: int, ns: Iterable[int], ps: Iterable, seeds: int, variants: Iterable) -> list:
    """Grid points in emission order: n, then p, then seed, then variant."""
    ps = list(ps)
    variants = [GreedyVariant.parse(v) for v in variants]
    return [
        (n, k, q, seed, v)
        for n in ns
        for q in ps
        for seed in range(seeds)
        for v in variants
    ]


def run_sweep(k, ns, ps, seeds, variants=("proof", "exact"), workers: int = 1) -> list:
    points = grid(k, ns, ps, seeds, variants)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run, points, chunksize=4))
    return [_run(pt) for pt in points]


def sweep_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    with_errors = any(row.error for row in rows)
    writer.writerow(HEADER + (["error"] if with_errors else []))
    for row in rows:
        writer.writerow(row.cells() + ([row.error] if with_errors else []))
    return buf.getvalue()
