"""Independent reference implementations working on Young diagrams as cell
sets, used to check the beta-set machinery."""

from functools import lru_cache
from itertools import permutations

from hypercount.partitions import cells


def subpartitions(p):
    """All partitions contained in p."""
    if not p:
        yield ()
        return
    for first in range(p[0], -1, -1):
        for rest in subpartitions(tuple(min(x, first) for x in p[1:])):
            out = (first,) + rest
            yield tuple(x for x in out if x)


def is_border_strip(outer, inner):
    skew = set(cells(outer)) - set(cells(inner))
    if not skew:
        return False
    for (r, c) in skew:
        if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= skew:
            return False
    # edge connectivity
    start = next(iter(skew))
    seen, stack = {start}, [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in skew and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(skew)


def strips_by_cells(p, k):
    out = []
    for q in subpartitions(p):
        if sum(p) - sum(q) == k and is_border_strip(p, q):
            rows = {r for r, _ in set(cells(p)) - set(cells(q))}
            out.append((q, len(rows) - 1))
    return sorted(out)


@lru_cache(maxsize=None)
def reaches_empty(p, m):
    if not p:
        return True
    return any(reaches_empty(q, m) for q, _ in strips_by_cells(p, m))


def ribbon_character(lam, mu):
    """Sum over ribbon tableaux (strips removed in the order of mu's parts)."""
    if not mu:
        return 1 if not lam else 0
    return sum((-1) ** h * ribbon_character(q, mu[1:]) for q, h in strips_by_cells(lam, mu[0]))


def count_syt(p):
    """Standard Young tableaux by removing corners recursively."""
    if not p:
        return 1
    total = 0
    for i, x in enumerate(p):
        if i + 1 == len(p) or p[i + 1] < x:
            q = list(p)
            q[i] -= 1
            total += count_syt(tuple(y for y in q if y))
    return total


def contents(p):
    return sorted(c - r for r, c in cells(p))


def brute_character(lam, perm_type):
    """chi^lam at a permutation of the given type via the Frobenius formula:
    coefficient of x^{lam + delta} in a_delta * p_mu (sympy-free, dict polys)."""
    n = len(lam) if lam else 1
    delta = tuple(range(n - 1, -1, -1))
    target = tuple(l + d for l, d in zip(tuple(lam) + (0,) * (n - len(lam)), delta))
    # a_delta as a dict of exponent tuples
    poly = {}
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        exps = tuple(delta[perm[i]] for i in range(n))
        poly[exps] = poly.get(exps, 0) + sign
    for part in perm_type:
        new = {}
        for exps, c in poly.items():
            for i in range(n):
                e = list(exps)
                e[i] += part
                e = tuple(e)
                new[e] = new.get(e, 0) + c
        poly = new
    return poly.get(target, 0)
