"""Ground truth by exhaustive search over symmetric groups.

Permutations are tuples of images of 0..n-1 and compose left to right:
``compose(a, b)`` applies ``a`` first.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations, product
from math import factorial
from typing import Iterator, Optional, Sequence

from .census import CONSTELLATION, HYPERMAP, Census, default_threads, marked_total
from .partitions import partitions_of, scale, z_of

Perm = tuple[int, ...]

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    return tuple(b[i] for i in a)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def cycles(a: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = a[i]
        out.append(tuple(cyc))
    return out


def cycle_type(a: Perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(a)), reverse=True))


def num_cycles(a: Perm) -> int:
    return len(cycles(a))


def from_cycles(n: int, cycs: Sequence[Sequence[int]]) -> Perm:
    out = list(range(n))
    for c in cycs:
        for i, x in enumerate(c):
            out[x] = c[(i + 1) % len(c)]
    return tuple(out)


def is_transitive(perms: Sequence[Perm]) -> bool:
    """One orbit under the group generated by ``perms`` (union-find)."""
    n = len(perms[0])
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    parts = n
    for p in perms:
        for i, j in enumerate(p):
            a, b = find(i), find(j)
            if a != b:
                parent[a] = b
                parts -= 1
    return parts == 1


def _chunks(items, threads):
    threads = threads or default_threads()
    return [items[i::threads] for i in range(threads)] if threads > 1 else [items]


def _run(task, items, threads) -> Counter:
    chunks = [c for c in _chunks(items, threads) if c]
    if len(chunks) <= 1:
        return task(items)
    total: Counter = Counter()
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        for part in pool.map(task, chunks):
            total.update(part)
    return total


def brute_constellations(n: int, m: int, threads: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> Census:
    """All transitive (m+1)-factorizations sigma_1 ... sigma_m phi = id in S_n."""
    size = factorial(n) ** m
    if size > budget:
        raise BudgetExceeded(f"{size} tuples exceed the budget of {budget}")
    group = list(permutations(range(n)))

    def task(firsts):
        local: Counter = Counter()
        for s1 in firsts:
            for rest in product(group, repeat=m - 1):
                tup = (s1,) + rest
                if not is_transitive(tup):
                    continue
                prod_ = s1
                for s in rest:
                    prod_ = compose(prod_, s)
                phi = inverse(prod_)
                key = (tuple(num_cycles(s) for s in tup), cycle_type(phi))
                local[key] += 1
        return local

    counts = _run(task, group, threads)
    return Census(CONSTELLATION, m, n, dict(counts))


def divisible_cycle_perms(N: int, m: int) -> Iterator[Perm]:
    """Permutations of 0..N-1 whose cycle lengths are all multiples of m."""

    def rec(unused: tuple[int, ...], acc: list):
        if not unused:
            yield from_cycles(N, acc)
            return
        first, rest = unused[0], unused[1:]
        for length in range(m, len(unused) + 1, m):
            for tail in permutations(rest, length - 1):
                left = tuple(x for x in rest if x not in tail)
                acc.append((first,) + tail)
                yield from rec(left, acc)
                acc.pop()

    yield from rec(tuple(range(N)), [])


def hypermap_candidates(n: int, m: int) -> int:
    N = m * n
    return sum(factorial(N) // z_of(scale(mu, m)) for mu in partitions_of(n))


def block_permutation(n: int, m: int) -> Perm:
    """(0 1 ... m-1)(m ... 2m-1)..."""
    return from_cycles(m * n, [tuple(range(b * m, (b + 1) * m)) for b in range(n)])


def brute_hypermaps(n: int, m: int, threads: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> Census:
    """All transitive sigma tau phi = id in S_{mn}, tau fixed of type [m^n]."""
    size = hypermap_candidates(n, m)
    if size > budget:
        raise BudgetExceeded(f"{size} candidates exceed the budget of {budget}")
    tau = block_permutation(n, m)
    phis = list(divisible_cycle_perms(m * n, m))

    def task(chunk):
        local: Counter = Counter()
        for phi in chunk:
            if not is_transitive((tau, phi)):
                continue
            sigma = inverse(compose(tau, phi))
            mu = tuple(L // m for L in cycle_type(phi))
            local[((num_cycles(sigma),), mu)] += 1
        return local

    counts = _run(task, phis, threads)
    return Census(HYPERMAP, m, n, dict(counts))


def brute(kind: str, n: int, m: int, threads: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> Census:
    if kind == CONSTELLATION:
        return brute_constellations(n, m, threads, budget)
    if kind == HYPERMAP:
        return brute_hypermaps(n, m, threads, budget)
    raise ValueError(f"unknown kind {kind!r}")


def marked_counts(census: Census, marks: Sequence[int], genus: Optional[int] = None, degrees=None) -> int:
    return marked_total(census, marks, genus, degrees)


def fixed_factorizations(alpha: Sequence[int], k: int) -> Counter:
    """Tally of (type t_1, ..., type t_k) over tuples with t_1 ... t_k s = id
    for one fixed s of type ``alpha``."""
    n = sum(alpha)
    cycs, start = [], 0
    for part in alpha:
        cycs.append(tuple(range(start, start + part)))
        start += part
    s_inv = inverse(from_cycles(n, cycs))
    group = list(permutations(range(n)))
    tally: Counter = Counter()
    if k == 0:
        tally[()] += int(s_inv == identity(n))
        return tally
    for ts in product(group, repeat=k - 1):
        p = identity(n)
        for t in ts:
            p = compose(p, t)
        last = compose(inverse(p), s_inv)
        tally[tuple(cycle_type(t) for t in ts) + (cycle_type(last),)] += 1
    return tally
