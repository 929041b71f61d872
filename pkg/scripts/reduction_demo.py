#!/usr/bin/env python3
"""Reduce a polynomial to a quantum digraph and evaluate it on sample hosts."""

import argparse
import sys
from fractions import Fraction

from tournhom.digraphs import random_tournament
from tournhom.gadgets import rotational_tournament, toy_family
from tournhom.reduction import (
    build_reduction,
    eval_reduced,
    parse_poly_text,
    reduction_rhs,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--poly", default="x1")
    parser.add_argument("--hosts", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    p = parse_poly_text(args.poly)
    family = toy_family(3, tuple(2 - i for i in range(p.s)))
    rq = build_reduction(p, family, mode="minimal")
    print(f"p = {args.poly}; clearing exponents E = {list(rq.E)}; {len(rq.terms)} terms")

    hosts = [rotational_tournament(7), rotational_tournament(9)]
    hosts += [random_tournament(5 + s % 3, args.seed + s) for s in range(args.hosts)]
    for idx, T in enumerate(hosts):
        value = eval_reduced(rq, T)
        rhs = reduction_rhs(rq, T)
        tag = "degenerate" if rhs is None else ("exact match" if value == rhs else "MISMATCH")
        print(f"host {idx:2d} (n={T.n}): value = {magnitude(value)}  [{tag}]")
    return 0


def magnitude(v: Fraction) -> str:
    """Sign and decimal order of an exact rational too small for floats."""
    if v == 0:
        return "0"
    sign = "-" if v < 0 else "+"
    exponent = len(str(abs(v.numerator))) - len(str(v.denominator))
    return f"{sign}~10^{exponent}"


if __name__ == "__main__":
    sys.exit(main())
