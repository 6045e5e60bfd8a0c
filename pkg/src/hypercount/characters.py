"""Irreducible characters of the symmetric group (Murnaghan-Nakayama) and the
Frobenius count of factorizations of a fixed permutation.
"""

from __future__ import annotations

import os
import pickle
import threading
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import NamedTuple, Sequence

from .partitions import (
    Partition,
    as_partition,
    beta_positions,
    dimension,
    partition_from_positions,
    partitions_of,
    z_of,
)

CACHE_VERSION = "hypercount-chi-v1"
CACHE_ENV = "HYPERCOUNT_CACHE_DIR"


class StripRemoval(NamedTuple):
    remaining: Partition
    height: int


def border_strips(theta: Partition, k: int) -> list[StripRemoval]:
    """Every way to remove a border strip of length ``k`` from ``theta``.

    A strip removal is a particle of the beta-set jumping k steps down into a
    hole; the height is the number of particles jumped over.
    """
    if k < 1:
        raise ValueError("strip length must be >= 1")
    pos = beta_positions(theta, len(theta))
    occupied = set(pos)
    floor = -len(pos)
    out = []
    for p in pos:
        q = p - k
        if q < floor or q in occupied:
            continue
        height = sum(1 for r in pos if q < r < p)
        rest = [q if r == p else r for r in pos]
        out.append(StripRemoval(partition_from_positions(rest), height))
    return out


class CharacterTable:
    """Memo table for chi^lambda_mu.

    Reads are lock-free; inserts are serialized.  Values never change once
    stored, so results do not depend on thread interleaving.
    """

    def __init__(self):
        self._values: dict[tuple[Partition, Partition], int] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._values)

    def clear(self) -> None:
        with self._lock:
            self._values.clear()

    def chi(self, lam: Partition, mu: Partition) -> int:
        lam = tuple(lam)
        mu = tuple(sorted(mu, reverse=True))
        if sum(lam) != sum(mu):
            raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
        return self._chi(lam, mu)

    def _chi(self, lam: Partition, mu: Partition) -> int:
        if not mu:
            return 1
        key = (lam, mu)
        hit = self._values.get(key)
        if hit is not None:
            return hit
        rest = mu[1:]
        value = 0
        for strip in border_strips(lam, mu[0]):
            term = self._chi(strip.remaining, rest)
            value += -term if strip.height % 2 else term
        with self._lock:
            self._values.setdefault(key, value)
        return value

    def chi_ordered(self, lam: Partition, parts: Sequence[int]) -> int:
        """Murnaghan-Nakayama consuming ``parts`` in the given order, uncached."""
        if not parts:
            return 1 if not lam else 0
        total = 0
        for strip in border_strips(tuple(lam), parts[0]):
            term = self.chi_ordered(strip.remaining, parts[1:])
            total += -term if strip.height % 2 else term
        return total

    def dump(self, path: Path) -> None:
        items = sorted(self._values.items())
        with open(path, "wb") as fh:
            pickle.dump((CACHE_VERSION, items), fh)

    def load(self, path: Path) -> bool:
        """Merge a dump into the table; returns False on a missing or stale file."""
        try:
            with open(path, "rb") as fh:
                version, items = pickle.load(fh)
        except (OSError, pickle.UnpicklingError, EOFError, ValueError):
            return False
        if version != CACHE_VERSION:
            return False
        with self._lock:
            for key, value in items:
                self._values.setdefault(tuple(key), value)
        return True


TABLE = CharacterTable()


def chi(lam: Partition, mu: Partition) -> int:
    return TABLE.chi(lam, mu)


def cache_path() -> Path | None:
    d = os.environ.get(CACHE_ENV)
    return Path(d) / f"{CACHE_VERSION}.pkl" if d else None


def frobenius_count(alpha: Partition, betas: Sequence[Partition]) -> int:
    """Number of tuples (t_1, ..., t_k), t_i of type betas[i], with
    t_1 ... t_k s = id for one fixed s of type alpha."""
    alpha = as_partition(alpha)
    n = sum(alpha)
    betas = [as_partition(b) for b in betas]
    if any(sum(b) != n for b in betas):
        raise ValueError("all partitions must have the same size")
    k = len(betas)
    nf = factorial(n)
    total = Fraction(0)
    for theta in partitions_of(n):
        f = dimension(theta)
        term = Fraction(chi(theta, alpha), nf) * Fraction(1, f) ** (k - 1)
        for b in betas:
            term *= Fraction(nf * chi(theta, b), z_of(b))
        total += term
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral factorization count {total}")
    return int(total)


def class_size(p: Partition) -> int:
    return factorial(sum(p)) // z_of(p)


def column_sum(alpha: Partition, beta: Partition) -> int:
    return sum(chi(t, alpha) * chi(t, beta) for t in partitions_of(sum(alpha)))


def dimension_square_sum(n: int) -> int:
    return sum(dimension(t) ** 2 for t in partitions_of(n))


def content_class_sum(theta: Partition) -> tuple[Fraction, ...]:
    """Coefficients of n! sum_alpha z_alpha^{-1} chi^theta_alpha x^{l(alpha)}."""
    n = sum(theta)
    coeffs = [Fraction(0)] * (n + 1)
    for alpha in partitions_of(n):
        coeffs[len(alpha)] += Fraction(factorial(n) * chi(theta, alpha), z_of(alpha))
    return tuple(coeffs)

