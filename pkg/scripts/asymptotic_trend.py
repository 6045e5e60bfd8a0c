#!/usr/bin/env python3
"""Exact ratios H / (m^{2g} C) for a range of sizes, with a decimal column
for eyeballing the approach to 1."""

import argparse
from dataclasses import dataclass, field

from hypercount.relation import asymptotic_table


@dataclass
class TrendConfig:
    m: int = 2
    genus: int = 1
    n_max: int = 6
    degrees: list[int] | None = None
    threads: int | None = None
    sizes: list[int] = field(init=False)

    def __post_init__(self):
        self.sizes = list(range(1, self.n_max + 1))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--genus", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--degrees", type=lambda s: [int(x) for x in s.split(",")], default=None)
    ap.add_argument("--threads", type=int, default=None)
    cfg = TrendConfig(**{k: v for k, v in vars(ap.parse_args()).items()})

    degrees = None if cfg.degrees is None else frozenset(cfg.degrees)
    print(f"{'n':>3}  {'ratio':>24}  approx")
    for n, r in asymptotic_table(cfg.m, cfg.genus, degrees, cfg.sizes, cfg.threads):
        print(f"{n:>3}  {str(r):>24}  {r.numerator / r.denominator:.6f}")


if __name__ == "__main__":
    main()
