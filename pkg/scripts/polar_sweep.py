#!/usr/bin/env python3
"""Sweep spins and deformation values, tabulating polar-decomposition residuals."""

import numpy as np

from psicalc import polar_decompose, su2_build

Q_VALUES = (None, 0.5, 1.5, 2.0, np.exp(1j * np.pi / 7), np.exp(1j * np.pi / 12))


def label(q) -> str:
    if q is None:
        return "undeformed"
    qc = complex(q)
    return f"{qc.real:g}" if qc.imag == 0 else f"exp(i*{np.angle(qc):.4f})"


def main() -> int:
    print(f"{'j':>4s}  {'q':>16s}  {'worst residual':>14s}  convention")
    for j2 in range(1, 13):
        for q in Q_VALUES:
            rep = su2_build(j2 / 2, q=q)
            try:
                pol = polar_decompose(rep)
            except ValueError as exc:
                print(f"{j2 / 2:4.1f}  {label(q):>16s}  {'-':>14s}  skipped: {exc}")
                continue
            worst = max(pol.residuals.values())
            print(f"{j2 / 2:4.1f}  {label(q):>16s}  {worst:14.3e}  {pol.convention}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
