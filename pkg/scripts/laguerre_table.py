#!/usr/bin/env python3
"""Print the closed-form q-Laguerre basic polynomials next to the solve oracle.

Usage: python scripts/laguerre_table.py [N]
"""

import sys

from psicalc import basic_sequence, laguerre_delta, q_laguerre_closed, qgauss


def main() -> int:
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 6
    psi = qgauss(max(16, top + 2))
    oracle = basic_sequence(laguerre_delta(psi, top + 1), top, method="solve")
    width = 0
    rows = []
    for n in range(top + 1):
        closed = q_laguerre_closed(psi, n)
        agree = "ok" if closed == oracle.polys[n] else "MISMATCH"
        text = " + ".join(
            f"({c.render()}) x^{k}" for k, c in enumerate(closed.coeffs) if c
        ) or "1"
        rows.append((n, agree, text))
        width = max(width, len(text))
    for n, agree, text in rows:
        print(f"n={n:<2d} [{agree:>8s}]  {text}")
    return 0 if all(r[1] == "ok" for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
