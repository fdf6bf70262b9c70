#!/usr/bin/env python3
"""Scan the built-in psi tables for deformed-binomial breakdown witnesses.

For each table, report the smallest n where (A+B)^n stops matching the
deformed binomial expansion, or confirm agreement through the scan range.
"""

import sys

from psicalc import binomial_nogo, by_name, smallest_witness
from psicalc.psi import BUILTIN_PSIS
from psicalc.verify import render_bivariate


def main() -> int:
    up_to = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    for name in sorted(BUILTIN_PSIS):
        psi = by_name(name)
        w = smallest_witness(psi, up_to)
        if w is None:
            print(f"{name:10s} no witness up to n={up_to}")
        else:
            residual = binomial_nogo(psi, w).residual
            print(f"{name:10s} witness at n={w}: residual = {render_bivariate(residual)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
