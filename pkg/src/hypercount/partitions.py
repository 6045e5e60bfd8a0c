"""Partition arithmetic, beta-sets and m-splits.

Partitions are plain tuples of positive ints in weakly decreasing order; the
empty tuple is the empty partition.  Integer polynomials are tuples of
coefficients indexed by degree.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Iterator, Optional, Sequence

Partition = tuple[int, ...]
IntPoly = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse ``"6,6,4"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(t) for t in text.split(","))


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return ()

    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(gen(n, n))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def z_of(p: Partition) -> int:
    """Centralizer order: prod over i of i^{m_i} m_i!."""
    return prod(i**k * factorial(k) for i, k in Counter(p).items())


def scale(lam: Partition, m: int) -> Partition:
    if m < 1:
        raise ValueError("scale factor must be >= 1")
    return tuple(m * x for x in lam)


def cells(p: Partition) -> Iterator[tuple[int, int]]:
    """(row, column) pairs, 0-based."""
    for i, row in enumerate(p):
        for j in range(row):
            yield i, j


@lru_cache(maxsize=None)
def dimension(p: Partition) -> int:
    """Number of standard Young tableaux, by the hook-length formula."""
    conj = conjugate(p)
    hooks = prod(p[i] - j + conj[j] - i - 1 for i, j in cells(p))
    return factorial(sum(p)) // hooks


# -- integer polynomials ------------------------------------------------------

def poly_trim(c: Sequence[int]) -> IntPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(a: Sequence, b: Sequence) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_eval(c: Sequence, x):
    acc = 0
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


def rising_factorial(shift: int, n: int) -> IntPoly:
    """Coefficients of (x + shift)^{(n)} = (x+shift)(x+shift+1)...(x+shift+n-1)."""
    out: IntPoly = (1,)
    for k in range(n):
        out = poly_mul(out, (shift + k, 1))
    return out


@lru_cache(maxsize=None)
def content_poly(theta: Partition) -> IntPoly:
    """H_theta(x) = prod over cells w of (x + c(w)), c(w) = column - row."""
    out: IntPoly = (1,)
    for i, j in cells(theta):
        out = poly_mul(out, (j - i, 1))
    return out


def content_poly_rising(theta: Partition) -> IntPoly:
    """Same polynomial built row by row from rising factorials."""
    out: IntPoly = (1,)
    for i, row in enumerate(theta):
        out = poly_mul(out, rising_factorial(-i, row))
    return out


# -- beta-sets ------------------------------------------------------------------

@dataclass(frozen=True)
class BetaSet:
    """A subset S of the integers with finitely many non-negative members and
    finitely many missing negatives.

    ``positives`` holds S ∩ {0, 1, ...}; ``negative_absent`` holds the negative
    integers not in S.  The charge is ``len(positives) - len(negative_absent)``;
    partitions correspond exactly to charge-zero sets.
    """

    positives: frozenset[int]
    negative_absent: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "positives", frozenset(self.positives))
        object.__setattr__(self, "negative_absent", frozenset(self.negative_absent))
        if any(x < 0 for x in self.positives):
            raise ValueError("positives must be >= 0")
        if any(x >= 0 for x in self.negative_absent):
            raise ValueError("negative_absent must be < 0")

    @property
    def charge(self) -> int:
        return len(self.positives) - len(self.negative_absent)

    def floor(self) -> int:
        """Every integer strictly below this value belongs to the set."""
        return min(self.negative_absent, default=0)

    def __contains__(self, k: int) -> bool:
        if k >= 0:
            return k in self.positives
        return k not in self.negative_absent

    def members_above(self, bound: int) -> list[int]:
        """Members >= bound, decreasing."""
        top = max(self.positives, default=-1)
        return [k for k in range(top, bound - 1, -1) if k in self]


def to_beta(p: Partition) -> BetaSet:
    """S = {p_i - i : i >= 1} with p_i = 0 past the last part."""
    pos = {x - i for i, x in enumerate(p, start=1) if x - i >= 0}
    occupied = {x - i for i, x in enumerate(p, start=1)}
    absent = {k for k in range(-len(p), 0) if k not in occupied}
    return BetaSet(frozenset(pos), frozenset(absent))


def from_beta(b: BetaSet) -> Partition:
    if b.charge != 0:
        raise ValueError(f"beta-set violates the charge condition (charge {b.charge})")
    lo = b.floor() - 1
    members = b.members_above(lo)
    parts = [s + i for i, s in enumerate(members, start=1)]
    return tuple(x for x in parts if x > 0)


def beta_positions(p: Partition, length: int) -> list[int]:
    """The first ``length`` members of S_p, decreasing (length >= len(p))."""
    return [(p[i] if i < len(p) else 0) - i - 1 for i in range(length)]


def partition_from_positions(pos: Sequence[int]) -> Partition:
    """Inverse of :func:`beta_positions` (positions in any order)."""
    parts = [s + i for i, s in enumerate(sorted(pos, reverse=True), start=1)]
    return tuple(x for x in parts if x > 0)


def split_beta(b: BetaSet, m: int) -> list[BetaSet]:
    """Residue-class split: component i is {a : m*a + i in S}."""
    comps = []
    for i in range(m):
        pos = frozenset((s - i) // m for s in b.positives if s % m == i)
        absent = frozenset((s - i) // m for s in b.negative_absent if s % m == i)
        comps.append(BetaSet(pos, absent))
    return comps


def m_split(theta: Partition, m: int) -> Optional[list[Partition]]:
    """The m-split (index = residue class), or None if theta is not m-splittable."""
    if m < 2:
        raise ValueError("m must be >= 2")
    comps = split_beta(to_beta(theta), m)
    if any(c.charge != 0 for c in comps):
        return None
    return [from_beta(c) for c in comps]


def is_splittable(theta: Partition, m: int) -> bool:
    return m_split(theta, m) is not None


# -- the global sign of the character factorization ---------------------------

def _strip_moves(positions: list[int], m: int) -> list[int]:
    occupied = set(positions)
    return [p for p in positions if p - m not in occupied and p - m >= -len(positions)]


Chooser = Callable[[list[int]], int]


def inter_class_jumps(theta: Partition, m: int, choose: Chooser = max) -> int:
    """Remove m-strips from theta until empty, counting jump-overs between
    particles of different residue classes.

    ``choose`` picks the source position among the available jumps.
    """
    if m_split(theta, m) is None:
        raise ValueError(f"{theta} is not {m}-splittable")
    # m extra slots keep the window wide enough for every jump
    positions = beta_positions(theta, len(theta) + m)
    total = 0
    while True:
        moves = _strip_moves(positions, m)
        if not moves:
            break
        src = choose(moves)
        dst = src - m
        total += sum(1 for q in positions if dst < q < src and (q - src) % m != 0)
        positions = [dst if q == src else q for q in positions]
    if partition_from_positions(positions) != ():
        raise AssertionError("strip removal stalled on a splittable partition")
    return total


def sign_theta(theta: Partition, m: int) -> int:
    return -1 if inter_class_jumps(theta, m) % 2 else 1


def random_chooser(seed: int) -> Chooser:
    rng = random.Random(seed)
    return lambda moves: rng.choice(sorted(moves))


def content_factor_value(theta_split: Sequence[Partition], order: Sequence[int], m: int, x) -> Fraction:
    """m^{mn} prod_{i=1..m} prod_{j=0..m-1} H_{theta^(i)}((x - i + j + 1)/m),
    with theta^(i) taken as ``theta_split[order[i-1]]``."""
    n = sum(sum(p) for p in theta_split)
    acc = Fraction(m) ** (m * n)
    for i in range(1, m + 1):
        h = content_poly(theta_split[order[i - 1]])
        for j in range(m):
            acc *= poly_eval(h, Fraction(x - i + j + 1, m))
    return acc
