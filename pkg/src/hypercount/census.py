"""Exact counts of rooted m-hypermaps and m-constellations from characters.

Raw factorization counts come from the content-polynomial form of the
Frobenius formula; transitive counts from the logarithm of the exponential
generating series; rooted map counts from dividing by the size of the
relabelling group.  The genus of each monomial follows from Euler's relation.
"""

from __future__ import annotations

import os
import threading
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Mapping, Optional, Sequence

from .characters import chi
from .partitions import Partition, content_poly, dimension, partitions_of, scale, z_of
from .series import Series, log1p

HYPERMAP = "hypermap"
CONSTELLATION = "constellation"
KINDS = (HYPERMAP, CONSTELLATION)

# (vertex counts per colour, or (V,) for hypermaps; face profile mu)
RawKey = tuple[tuple[int, ...], Partition]


def default_threads() -> int:
    return os.cpu_count() or 1


def genus_of(V: int, F: int, n: int, m: int) -> int:
    """Genus from V vertices, F hyperfaces and n hyperedges of size m."""
    twice = 2 - V - F - n + m * n
    if twice % 2:
        raise ValueError(f"parity violation: V={V}, F={F}, n={n}, m={m}")
    if twice < 0:
        raise ValueError(f"negative genus: V={V}, F={F}, n={n}, m={m}")
    return twice // 2


@dataclass(frozen=True)
class CensusEntry:
    genus: int
    mu: Partition
    colors: tuple[int, ...]
    count: int

    def to_json(self, kind: str) -> dict:
        colors = self.colors[0] if kind == HYPERMAP else list(self.colors)
        return {"genus": self.genus, "mu": list(self.mu), "colors": colors, "count": self.count}


@dataclass(frozen=True)
class Census:
    """Transitive factorization counts for one (kind, m, n).

    ``counts`` maps (colors, mu) to the number of transitive factorizations;
    ``rooted`` divides by the relabelling group to get rooted maps.
    """

    kind: str
    m: int
    n: int
    counts: Mapping[RawKey, int] = field(default_factory=dict)

    @property
    def divisor(self) -> int:
        if self.kind == CONSTELLATION:
            return factorial(self.n - 1)
        return factorial(self.n - 1) * self.m ** (self.n - 1)

    def genus(self, key: RawKey) -> int:
        colors, mu = key
        return genus_of(sum(colors), len(mu), self.n, self.m)

    def entries(self) -> list[CensusEntry]:
        out = []
        for key in sorted(self.counts):
            q, r = divmod(self.counts[key], self.divisor)
            if r:
                raise ArithmeticError(f"{self.counts[key]} not divisible by {self.divisor} at {key}")
            colors, mu = key
            out.append(CensusEntry(self.genus(key), mu, colors, q))
        out.sort(key=lambda e: (e.genus, e.mu, e.colors))
        return out

    def to_json(self) -> list[dict]:
        return [e.to_json(self.kind) for e in self.entries()]

    def total(self) -> int:
        return sum(self.counts.values())


def allowed(mu: Partition, degrees: Optional[Iterable[int]]) -> bool:
    if degrees is None:
        return True
    d = set(degrees)
    return all(p in d for p in mu)


def marked_total(
    census: Census,
    marks: Sequence[int] = (),
    genus: Optional[int] = None,
    degrees: Optional[Iterable[int]] = None,
) -> int:
    """Rooted maps weighted by prod_i binom(v_i, k_i): the number of maps with
    k_i unordered marked vertices of colour i."""
    if census.kind == HYPERMAP and any(marks):
        raise ValueError("hypermaps carry no vertex marks")
    if len(marks) > max(census.m, 1):
        raise ValueError("too many mark entries")
    degrees = None if degrees is None else frozenset(degrees)
    total = 0
    for (colors, mu), count in census.counts.items():
        if not allowed(mu, degrees):
            continue
        if genus is not None and census.genus((colors, mu)) != genus:
            continue
        weight = prod(comb(v, k) for v, k in zip(colors, marks))
        total += count * weight
    q, r = divmod(total, census.divisor)
    if r:
        raise ArithmeticError(f"marked total {total} not divisible by {census.divisor}")
    return q


# -- raw (not necessarily transitive) counts ----------------------------------

def _map(fn, items, threads):
    items = list(items)
    threads = threads or default_threads()
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _merge(parts: Iterable[Mapping]) -> dict:
    out: dict = defaultdict(int)
    for part in parts:
        for k, v in part.items():
            out[k] += v
    return out


def rc_census(n: int, m: int, threads: Optional[int] = None) -> dict[RawKey, int]:
    """Counts of sigma_1 ... sigma_m phi = id in S_n keyed by
    ((l(sigma_1), ..., l(sigma_m)), type(phi))."""
    mus = partitions_of(n)

    def one_theta(theta):
        h = content_poly(theta)
        support = [(d, c) for d, c in enumerate(h) if c]
        f = dimension(theta)
        out = {}
        for mu in mus:
            w = f * chi(theta, mu)
            if not w:
                continue
            for combo in product(support, repeat=m):
                key = (tuple(d for d, _ in combo), mu)
                out[key] = out.get(key, 0) + w * prod(c for _, c in combo)
        return out

    merged = _merge(_map(one_theta, partitions_of(n), threads))
    result = {}
    for (ls, mu), num in merged.items():
        q, r = divmod(num, z_of(mu))
        if r:
            raise ArithmeticError(f"non-integral constellation count at {ls}, {mu}")
        if q:
            result[(ls, mu)] = q
    return result


def rh_census(n: int, m: int, threads: Optional[int] = None) -> dict[RawKey, int]:
    """Counts of sigma tau phi = id in S_{mn} with tau fixed of type [m^n] and
    phi of type m*mu, keyed by ((l(sigma),), mu)."""
    mus = partitions_of(n)
    block = (m,) * n

    def one_theta(theta):
        c_block = chi(theta, block)
        if not c_block:
            return {}
        h = content_poly(theta)
        out = {}
        for mu in mus:
            w = c_block * chi(theta, scale(mu, m))
            if not w:
                continue
            for V, c in enumerate(h):
                if c:
                    out[((V,), mu)] = out.get(((V,), mu), 0) + w * c
        return out

    merged = _merge(_map(one_theta, partitions_of(m * n), threads))
    result = {}
    for (vs, mu), num in merged.items():
        den = m ** len(mu) * z_of(mu)
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError(f"non-integral hypermap count at {vs}, {mu}")
        if q:
            result[(vs, mu)] = q
    return result


# -- transitive counts ----------------------------------------------------------

def _y_exponents(mu: Partition, width: int) -> tuple[int, ...]:
    ys = [0] * width
    for p in mu:
        ys[p - 1] += 1
    return tuple(ys)


def _mu_from_y(ys: Sequence[int]) -> Partition:
    return tuple(sorted((i + 1 for i, e in enumerate(ys) for _ in range(e)), reverse=True))


def raw_series(raw: Mapping[int, Mapping[RawKey, int]], n_max: int, nx: int) -> Series:
    """sum_n z^n/n! sum_keys count x^colors y_mu (without the constant 1)."""
    terms = {}
    for n in range(1, n_max + 1):
        for (colors, mu), count in raw[n].items():
            terms[(n, 0, tuple(colors), _y_exponents(mu, n_max))] = Fraction(count, factorial(n))
    return Series(nx, n_max, n_max, None, terms)


def connected_census(raw: Mapping[int, Mapping[RawKey, int]], n_max: int) -> dict[int, dict[RawKey, int]]:
    """Transitive counts from raw counts through log(1 + R)."""
    nx = len(next(iter(raw[1]))[0])
    log = log1p(raw_series(raw, n_max, nx))
    out: dict[int, dict[RawKey, int]] = {n: {} for n in range(1, n_max + 1)}
    for (n, _, xs, ys), c in log.terms.items():
        val = c * factorial(n)
        if val.denominator != 1:
            raise ArithmeticError(f"non-integral transitive count {val}")
        out[n][(xs, _mu_from_y(ys))] = int(val)
    return out


_CACHE: dict[tuple[str, int], tuple[Census, ...]] = {}
_CACHE_LOCK = threading.Lock()


def build_censuses(kind: str, m: int, n_max: int, threads: Optional[int] = None) -> tuple[Census, ...]:
    """Transitive censuses for n = 1..n_max (index n-1), memoized per (kind, m)."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if m < 2:
        raise ValueError("m must be >= 2")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    cached = _CACHE.get((kind, m))
    if cached is not None and len(cached) >= n_max:
        return cached[:n_max]
    builder = rc_census if kind == CONSTELLATION else rh_census
    raw = {n: builder(n, m, threads) for n in range(1, n_max + 1)}
    trans = connected_census(raw, n_max)
    result = tuple(Census(kind, m, n, trans[n]) for n in range(1, n_max + 1))
    with _CACHE_LOCK:
        current = _CACHE.get((kind, m))
        if current is None or len(current) < len(result):
            _CACHE[(kind, m)] = result
    return result


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


def census(kind: str, m: int, n: int, threads: Optional[int] = None) -> Census:
    return build_censuses(kind, m, n, threads)[n - 1]


@dataclass(frozen=True)
class CountQuery:
    m: int
    n: int
    genus: int
    degrees: Optional[frozenset[int]] = None
    marks: tuple[int, ...] = ()

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("m must be >= 2")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.genus < 0:
            raise ValueError("genus must be >= 0")
        if any(k < 0 for k in self.marks):
            raise ValueError("marks must be >= 0")
        if len(self.marks) > self.m:
            raise ValueError(f"at most {self.m} mark entries")
        if self.degrees is not None:
            object.__setattr__(self, "degrees", frozenset(self.degrees))
            if any(d < 1 for d in self.degrees):
                raise ValueError("degrees must be positive")
        object.__setattr__(self, "marks", tuple(self.marks))

    def to_json(self, kind: str) -> dict:
        return {
            "kind": kind,
            "m": self.m,
            "n": self.n,
            "genus": self.genus,
            "degrees": None if self.degrees is None else sorted(self.degrees),
            "marks": list(self.marks),
        }


def count_constellations(q: CountQuery, threads: Optional[int] = None) -> int:
    """Rooted m-constellations of genus g with n hyperedges, hyperface degrees
    in m*D and k_i marked vertices of colour i."""
    return marked_total(census(CONSTELLATION, q.m, q.n, threads), q.marks, q.genus, q.degrees)


def count_hypermaps(q: CountQuery, threads: Optional[int] = None) -> int:
    if any(q.marks):
        raise ValueError("hypermap queries take no marks")
    return marked_total(census(HYPERMAP, q.m, q.n, threads), (), q.genus, q.degrees)


# -- generating series with the genus variable ----------------------------------

def genus_series(censuses: Sequence[Census]) -> Series:
    """sum over rooted maps of x^colors y_mu z^n u^{2g}."""
    n_max = len(censuses)
    nx = census_width(censuses[0])
    terms = {}
    for c in censuses:
        for e in c.entries():
            terms[(c.n, 2 * e.genus, e.colors, _y_exponents(e.mu, n_max))] = Fraction(e.count)
    return Series(nx, n_max, n_max, None, terms)


def census_width(c: Census) -> int:
    return c.m if c.kind == CONSTELLATION else 1
