"""Hypermaps as a positive combination of marked constellations.

The weights c^{(m)}_{k} come from averaging powers of the shifted derivative
sum over its m shifts; they are positive integers, which is checked hard.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .census import (
    CONSTELLATION,
    HYPERMAP,
    CountQuery,
    build_censuses,
    count_constellations,
    count_hypermaps,
    genus_series,
)
from .series import LinearForm, Series, substitute


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` non-negative entries."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def mark_vectors(m: int, max_order: int) -> Iterator[tuple[int, ...]]:
    for order in range(max_order + 1):
        yield from compositions(order, m - 1)


def _check_index(m: int, ks: Sequence[int]) -> tuple[int, ...]:
    if m < 2:
        raise ValueError("m must be >= 2")
    ks = tuple(ks)
    if len(ks) != m - 1 or any(k < 0 for k in ks):
        raise ValueError(f"need m-1 = {m - 1} non-negative indices, got {ks}")
    return ks


def e_coeff(m: int, j: int, ks: Sequence[int]) -> int:
    """prod over i != j of (i - j)^{k_{(i - j) mod m}}, indices k_1..k_{m-1}."""
    ks = _check_index(m, ks)
    if not 1 <= j <= m:
        raise ValueError("need 1 <= j <= m")
    out = 1
    for i in range(1, m + 1):
        if i != j:
            out *= (i - j) ** ks[(i - j) % m - 1]
    return out


def d_coeff(m: int, ks: Sequence[int]) -> int:
    ks = _check_index(m, ks)
    p = m // 2
    d = 2 * sum(e_coeff(m, j, ks) for j in range(1, p + 1))
    if m % 2:
        d += e_coeff(m, p + 1, ks)
    if d <= 0 or d % m:
        raise ArithmeticError(f"d^({m})_{ks} = {d} is not a positive multiple of {m}")
    return d


def c_coeff(m: int, ks: Sequence[int]) -> int:
    return d_coeff(m, ks) // m


def closed_form_c(m: int, ks: Sequence[int]) -> Fraction:
    """The explicit m = 3 and m = 4 weights, with the exponent on the first
    mark index as they are usually displayed."""
    ks = _check_index(m, ks)
    if m == 3:
        l = ks[0]
        return Fraction(2 * 2**l + (-1) ** l, 3)
    if m == 4:
        l1, l2 = ks[0], ks[1]
        return Fraction(2 * (3**l1 * 2**l2 + 2**l2 * (-1) ** l1), 4)
    raise ValueError("closed forms exist for m = 3 and m = 4 only")


def orbit_key(ks: Sequence[int]) -> tuple[int, ...]:
    """Mark vectors with equal padded multisets give equal constellation counts."""
    return tuple(sorted(tuple(ks) + (0,)))


def orbit_sums(m: int, max_order: int, weight) -> dict[tuple[int, ...], Fraction]:
    sums: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for ks in mark_vectors(m, max_order):
        sums[orbit_key(ks)] += Fraction(weight(m, ks))
    return dict(sums)


def telescoping_holds(m: int, j: int, ks: Sequence[int]) -> bool:
    """|e^{j+1}| <= |e^j|, and <= j/(m-j) |e^j| when k_{m-j} >= 1 (j <= m/2)."""
    a = abs(e_coeff(m, j + 1, ks))
    b = abs(e_coeff(m, j, ks))
    if a > b:
        return False
    if ks[m - j - 1] >= 1 and Fraction(a) > Fraction(j, m - j) * b:
        return False
    return True


def relation_rhs(n: int, m: int, g: int, degrees: Optional[Iterable[int]] = None, threads=None) -> int:
    """sum_i m^{2g-2i} sum_{|k| = 2i} c_k C^{(g-i, k)}_{n,m,D}."""
    degrees = None if degrees is None else frozenset(degrees)
    total = 0
    for i in range(g + 1):
        inner = 0
        for ks in compositions(2 * i, m - 1):
            q = CountQuery(m, n, g - i, degrees, ks)
            inner += c_coeff(m, ks) * count_constellations(q, threads)
        total += m ** (2 * g - 2 * i) * inner
    return total


@dataclass
class RelationReport:
    m: int
    n_max: int
    g_max: int
    degrees: Optional[list[int]]
    cases: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n_max": self.n_max,
            "g_max": self.g_max,
            "degrees": self.degrees,
            "cases": self.cases,
            "failures": self.failures,
        }


def verify_relation(n_max: int, m: int, g_max: int, degrees=None, threads=None) -> RelationReport:
    degrees = None if degrees is None else frozenset(degrees)
    report = RelationReport(m, n_max, g_max, None if degrees is None else sorted(degrees))
    build_censuses(HYPERMAP, m, n_max, threads)
    build_censuses(CONSTELLATION, m, n_max, threads)
    for n in range(1, n_max + 1):
        for g in range(g_max + 1):
            h = count_hypermaps(CountQuery(m, n, g, degrees), threads)
            rhs = relation_rhs(n, m, g, degrees, threads)
            row = {"n": n, "genus": g, "hypermaps": h, "rhs": rhs}
            report.cases.append(row)
            if h != rhs:
                report.failures.append(row)
    return report


def asymptotic_table(m: int, g: int, degrees, n_list: Sequence[int], threads=None) -> list[tuple[int, Fraction]]:
    """(n, H / (m^{2g} C)) for every n with C != 0."""
    degrees = None if degrees is None else frozenset(degrees)
    rows = []
    for n in n_list:
        c = count_constellations(CountQuery(m, n, g, degrees), threads)
        if c == 0:
            continue
        h = count_hypermaps(CountQuery(m, n, g, degrees), threads)
        rows.append((n, Fraction(h, m ** (2 * g) * c)))
    return rows


def series_relation_gap(m: int, n_max: int, threads=None) -> Series:
    """H - m sum_j C(x_i <- (x + (i-j)u)/m, y_i <- y_i/m, z <- m^{m-1} z, u);
    zero when the generating series satisfy the hypermap/constellation link."""
    hs = genus_series(build_censuses(HYPERMAP, m, n_max, threads))
    cs = genus_series(build_censuses(CONSTELLATION, m, n_max, threads))
    acc = Series.zero(1, n_max, n_max)
    for j in range(1, m + 1):
        forms = [LinearForm((Fraction(1, m),), Fraction(i - j, m)) for i in range(1, m + 1)]
        acc = acc + substitute(cs, x=forms, y=Fraction(1, m), z=m ** (m - 1))
    return hs - acc.scale(m)
