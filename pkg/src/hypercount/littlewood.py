"""Characters at m*lambda factor through the m-split (Littlewood), and the
content polynomial factors the same way."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .characters import chi
from .partitions import (
    Partition,
    as_partition,
    content_factor_value,
    content_poly,
    m_split,
    partitions_of,
    poly_eval,
    scale,
    sign_theta,
    z_of,
)


def component_order(m: int) -> list[int]:
    """Residue class feeding the 1-based component theta^(i), i = 1..m.

    The content-polynomial factorization only holds with theta^(i) read off
    residue class m - i; the character factorization sums over all
    decompositions and does not care.
    """
    return [m - i for i in range(1, m + 1)]


def decompositions(lam: Partition, sizes: Sequence[int]) -> list[tuple[Partition, ...]]:
    """Ways to distribute the parts of ``lam`` into len(sizes) partitions of
    the given sizes (ordered across components, unordered within)."""
    if sum(sizes) != sum(lam):
        raise ValueError("sizes must add up to |lam|")
    mult = sorted(Counter(lam).items(), reverse=True)
    out = []

    def rec(idx: int, remaining: list[int], chosen: list[Partition]):
        if idx == len(sizes) - 1:
            rest = tuple(sorted((p for p, k in zip(parts, remaining) for _ in range(k)), reverse=True))
            if sum(rest) == sizes[idx]:
                out.append(tuple(chosen) + (rest,))
            return
        for take in product(*(range(k + 1) for k in remaining)):
            if sum(p * t for p, t in zip(parts, take)) != sizes[idx]:
                continue
            comp = tuple(p for p, t in zip(parts, take) for _ in range(t))
            rec(idx + 1, [k - t for k, t in zip(remaining, take)], chosen + [comp])

    parts = [p for p, _ in mult]
    if not sizes:
        return [()] if not lam else []
    rec(0, [k for _, k in mult], [])
    return out


def littlewood_rhs(theta: Partition, lam: Partition, m: int) -> int:
    """z_lam sgn_theta sum over decompositions of prod chi^{theta^(i)}_{lam^(i)} / z_{lam^(i)}."""
    theta, lam = as_partition(theta), as_partition(lam)
    if sum(theta) != m * sum(lam):
        raise ValueError("need |theta| = m |lam|")
    split = m_split(theta, m)
    if split is None:
        raise ValueError(f"{theta} is not {m}-splittable")
    comps = [split[c] for c in component_order(m)]
    sizes = [sum(c) for c in comps]
    total = Fraction(0)
    for dec in decompositions(lam, sizes):
        term = Fraction(1)
        for shape, part in zip(comps, dec):
            term *= Fraction(chi(shape, part), z_of(part))
        total += term
    total *= z_of(lam) * sign_theta(theta, m)
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral Littlewood sum {total}")
    return int(total)


@dataclass
class LittlewoodReport:
    m: int
    max_size: int
    checked: int = 0
    splittable: int = 0
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "max_size": self.max_size,
            "checked": self.checked,
            "splittable": self.splittable,
            "failures": self.failures,
        }


def _check_theta(theta: Partition, m: int) -> tuple[int, int, list[dict]]:
    n = sum(theta) // m
    split = m_split(theta, m)
    failures = []
    checked = 0
    for lam in partitions_of(n):
        lhs = chi(theta, scale(lam, m))
        rhs = littlewood_rhs(theta, lam, m) if split is not None else 0
        checked += 1
        if lhs != rhs:
            failures.append({"theta": list(theta), "lambda": list(lam), "chi": lhs, "rhs": rhs})
    return checked, int(split is not None), failures


def verify_littlewood(max_size: int, m: int, threads: Optional[int] = None) -> LittlewoodReport:
    if m < 2:
        raise ValueError("m must be >= 2")
    report = LittlewoodReport(m, max_size)
    thetas = [t for mn in range(m, max_size + 1, m) for t in partitions_of(mn)]
    fn = lambda t: _check_theta(t, m)  # noqa: E731
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(fn, thetas))
    else:
        results = [fn(t) for t in thetas]
    for checked, split, failures in results:
        report.checked += checked
        report.splittable += split
        report.failures.extend(failures)
    return report


def verify_content_factorization(theta: Partition, m: int) -> bool:
    """Compare H_theta with its factorized form at |theta| + 1 integer points."""
    theta = as_partition(theta)
    split = m_split(theta, m)
    if split is None:
        raise ValueError(f"{theta} is not {m}-splittable")
    h = content_poly(theta)
    order = component_order(m)
    return all(
        poly_eval(h, x) == content_factor_value(split, order, m, x)
        for x in range(sum(theta) + 1)
    )
