"""Generalized Pauli (clock and shift) pair with the Sylvester transform.

For dimension n and omega = exp(2*pi*i/n): sigma1 is the cyclic shift,
sigma2 the diagonal clock omega^Q with Q = diag(0..n-1), and the unitary
Sylvester matrix (omega^{kl}/sqrt(n)) conjugates the clock into the shift.
P = S^dagger Q S realizes sigma1 as omega^P.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrices import adjoint, ident, inf_norm, power_int


def cyclic_shift(n: int) -> np.ndarray:
    """Ones on the superdiagonal plus a bottom-left corner entry."""
    m = np.zeros((n, n), dtype=complex)
    for i in range(n - 1):
        m[i, i + 1] = 1.0
    m[n - 1, 0] = 1.0
    return m


def sylvester_matrix(n: int) -> np.ndarray:
    k = np.arange(n)
    omega_powers = np.exp(2j * np.pi * np.outer(k, k) / n)
    return omega_powers / np.sqrt(n)


@dataclass(frozen=True, eq=False)
class WeylPair:
    n: int
    omega: complex
    sigma1: np.ndarray
    sigma2: np.ndarray
    qmat: np.ndarray
    pmat: np.ndarray
    smat: np.ndarray
    omega_p: np.ndarray  # S^dagger sigma2 S, the conjugated clock


def weyl_build(n: int) -> WeylPair:
    """Construct the full set of dimension-n generators.

    Q = diag(0, 1, ..., n-1): the clock sigma2 = omega^Q fixes the 0 in the
    first slot (a diagonal starting at 1 would not reproduce sigma2's unit
    top-left entry).  omega^P is computed by conjugating sigma2 with the
    Sylvester matrix rather than exponentiating P, which keeps the
    functional calculus exact up to rounding.
    """
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    omega = complex(np.exp(2j * np.pi / n))
    qmat = np.diag(np.arange(n, dtype=complex))
    sigma2 = np.diag(np.exp(2j * np.pi * np.arange(n) / n))
    sigma1 = cyclic_shift(n)
    smat = sylvester_matrix(n)
    pmat = adjoint(smat) @ qmat @ smat
    omega_p = adjoint(smat) @ sigma2 @ smat
    return WeylPair(n, omega, sigma1, sigma2, qmat, pmat, smat, omega_p)


def p_closed_form(n: int) -> np.ndarray:
    """Entrywise formula for S^dagger Q S.

    Off the diagonal the geometric-sum identity gives 1/(omega^{col-row} - 1);
    the diagonal averages Q's trace to (n-1)/2.  Some treatments print a zero
    diagonal, which contradicts trace preservation under conjugation.
    """
    omega = np.exp(2j * np.pi / n)
    out = np.full((n, n), (n - 1) / 2.0, dtype=complex)
    for a in range(n):
        for b in range(n):
            if a != b:
                out[a, b] = 1.0 / (omega ** (b - a) - 1.0)
    return out


PRINTED_DIAGONAL_NOTE = (
    "computed diagonal of P is (n-1)/2 from trace preservation; the "
    "commonly printed zero diagonal deviates from S^dagger Q S"
)


@dataclass(frozen=True)
class WeylReport:
    n: int
    sign: int
    convention: str  # which of sigma1 / adjoint(sigma1) equals omega^P
    residuals: dict
    tolerances: dict
    printed_diagonal_note: str
    ok: bool


def weyl_check(
    pair: WeylPair,
    tol_pow: float = 1e-10,
    tol_weyl: float = 1e-10,
    tol_unitary: float = 1e-12,
    tol_conj: float = 1e-8,
    tol_p: float = 1e-10,
) -> WeylReport:
    """Run every generator identity and report residual magnitudes."""
    n = pair.n
    eye = ident(n)
    res = {
        "sigma1_pow_n": inf_norm(power_int(pair.sigma1, n) - eye),
        "sigma2_pow_n": inf_norm(power_int(pair.sigma2, n) - eye),
        "s_unitary": inf_norm(adjoint(pair.smat) @ pair.smat - eye),
    }
    plus = inf_norm(pair.sigma1 @ pair.sigma2 - pair.omega * pair.sigma2 @ pair.sigma1)
    minus = inf_norm(
        pair.sigma1 @ pair.sigma2 - np.conj(pair.omega) * pair.sigma2 @ pair.sigma1
    )
    # ties (n = 2, omega = -1) report the anticommutation sign
    sign = -1 if minus <= plus else 1
    res["weyl_relation"] = min(plus, minus)

    direct = inf_norm(pair.omega_p - pair.sigma1)
    flipped = inf_norm(pair.omega_p - adjoint(pair.sigma1))
    if direct <= flipped:
        convention, res["omega_p_vs_shift"] = "sigma1", direct
    else:
        convention, res["omega_p_vs_shift"] = "adjoint(sigma1)", flipped

    closed = p_closed_form(n)
    diff = pair.pmat - closed
    off = diff - np.diag(np.diag(diff))
    res["p_offdiagonal"] = inf_norm(off)
    res["p_diagonal"] = inf_norm(np.diag(pair.pmat) - (n - 1) / 2.0)

    tolerances = {
        "sigma1_pow_n": tol_pow,
        "sigma2_pow_n": tol_pow,
        "weyl_relation": tol_weyl,
        "s_unitary": tol_unitary,
        "omega_p_vs_shift": tol_conj,
        "p_offdiagonal": tol_p,
        "p_diagonal": tol_p,
    }
    ok = all(res[k] <= tolerances[k] for k in res)
    return WeylReport(
        n, sign, convention, res, tolerances, PRINTED_DIAGONAL_NOTE, ok
    )


def shift_spectrum_residual(pair: WeylPair) -> float:
    """Largest |det(omega^k I - sigma1)| over the n-th roots of unity."""
    n = pair.n
    worst = 0.0
    for k in range(n):
        lam = np.exp(2j * np.pi * k / n)
        worst = max(worst, abs(np.linalg.det(lam * ident(n) - pair.sigma1)))
    return worst
