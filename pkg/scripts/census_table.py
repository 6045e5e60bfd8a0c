#!/usr/bin/env python3
"""Rooted map counts by genus for n = 1..n_max, optionally cross-checked
against the brute-force oracle."""

import argparse
from collections import defaultdict
from dataclasses import dataclass

from hypercount.census import KINDS, build_censuses
from hypercount.oracle import BudgetExceeded, brute


@dataclass(frozen=True)
class TableConfig:
    kind: str = "hypermap"
    m: int = 2
    n_max: int = 5
    check: bool = False
    budget: int = 10**6


def genus_totals(c):
    out = defaultdict(int)
    for e in c.entries():
        out[e.genus] += e.count
    return dict(out)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kind", choices=KINDS, default="hypermap")
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--check", action="store_true", help="compare with the oracle where affordable")
    ap.add_argument("--budget", type=int, default=10**6)
    cfg = TableConfig(**vars(ap.parse_args()))

    censuses = build_censuses(cfg.kind, cfg.m, cfg.n_max)
    for c in censuses:
        totals = genus_totals(c)
        line = f"n={c.n}: " + ", ".join(f"g{g}={v}" for g, v in sorted(totals.items()))
        if cfg.check:
            try:
                line += "  oracle " + ("ok" if brute(cfg.kind, c.n, cfg.m, budget=cfg.budget).counts == c.counts else "MISMATCH")
            except BudgetExceeded:
                line += "  oracle skipped"
        print(line)


if __name__ == "__main__":
    main()
