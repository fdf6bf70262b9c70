"""Operator expansion in a delta operator and its dual raising map.

Every linear operator preserving a truncated polynomial space has a
unique expansion T = sum_n g_n(xhat_Q) Q^n, where xhat_Q shifts the basic
sequence of Q up by one.  The coefficients g_n come out of a triangular
solve over the basic basis; reconstruction must reproduce T exactly,
which is what the roundtrip checks assert.
"""

from __future__ import annotations

from dataclasses import dataclass

from .operators import DeltaOperator, OperatorMatrix
from .poly import Poly
from .psi import monomial
from .ratfun import ONE, ZERO, RationalFunction
from .sequences import BasicSequence, basic_sequence


def to_basic_coords(polys: tuple[Poly, ...], p: Poly) -> list[RationalFunction]:
    """Coordinates of p in the (triangular) basic basis."""
    coords = [ZERO] * len(polys)
    rem = p
    while rem.coeffs:
        d = rem.degree
        if d >= len(polys):
            raise ValueError(f"degree {d} exceeds basis of size {len(polys)}")
        c = rem.coeffs[-1] / polys[d].coeffs[-1]
        coords[d] = c
        rem = rem - polys[d].scale(c)
    return coords


def from_basic_coords(polys: tuple[Poly, ...], coords) -> Poly:
    acc = Poly()
    for k, c in enumerate(coords):
        if c:
            acc = acc + polys[k].scale(c)
    return acc


def dual_xhat(Q: DeltaOperator, n: int, basic: BasicSequence | None = None) -> OperatorMatrix:
    """Table of the raising map p_k -> p_{k+1} on monomials of degree <= n."""
    if basic is None or basic.top < n + 1:
        basic = basic_sequence(Q, n + 1, method="solve")
    polys = basic.polys
    cols = []
    for j in range(n + 1):
        coords = to_basic_coords(polys[: j + 1], monomial(j))
        img = Poly()
        for k, c in enumerate(coords):
            if c:
                img = img + polys[k + 1].scale(c)
        cols.append(img)
    return OperatorMatrix(tuple(cols))


def expand_operator(
    T: OperatorMatrix, Q: DeltaOperator, basic: BasicSequence | None = None
) -> list[Poly]:
    """Coefficient polynomials g_0 ... g_N with T = sum g_n(xhat_Q) Q^n.

    The table T must not raise degree past its own size.  Processing images
    of the basic sequence by increasing index makes the system triangular:
    the index-m image pins down g_m once g_0 ... g_{m-1} are known.
    """
    N = T.dim - 1
    if T.max_degree() > N:
        raise ValueError("truncation exceeded")
    psi = Q.psi
    if basic is None or basic.top < N:
        basic = basic_sequence(Q, N, method="solve")
    polys = basic.polys
    images = [to_basic_coords(polys, T.apply(polys[m])) for m in range(N + 1)]
    coeff_rows: list[list[RationalFunction]] = []
    for m in range(N + 1):
        # the index-m pivot is falling(m, m) = m_psi!
        fact = psi.factorial(m)
        row = [ZERO] * (N + 1)
        for i in range(N + 1):
            s = images[m][i]
            for n in range(m):
                idx = i - m + n
                if 0 <= idx <= N:
                    c = coeff_rows[n][idx]
                    if c:
                        s = s - psi.falling(m, n) * c
            row[i] = s / fact
        coeff_rows.append(row)
    return [Poly(row) for row in coeff_rows]


def reconstruct_operator(
    coeff_polys: list[Poly],
    Q: DeltaOperator,
    dim: int,
    basic: BasicSequence | None = None,
) -> OperatorMatrix:
    """Assemble sum_n g_n(xhat_Q) Q^n as a table on monomials x^0..x^{dim-1}."""
    N = dim - 1
    psi = Q.psi
    extra = max((g.degree - n for n, g in enumerate(coeff_polys) if g.coeffs), default=0)
    M = N + max(extra, 0)
    if basic is None or basic.top < M:
        basic = basic_sequence(Q, M, method="solve")
    polys = basic.polys
    cols = []
    for j in range(dim):
        a = to_basic_coords(polys[: j + 1], monomial(j))
        out = [ZERO] * (M + 1)
        for n, g in enumerate(coeff_polys):
            if n > j or not g.coeffs:
                continue
            for m in range(n, j + 1):
                am = a[m]
                if not am:
                    continue
                base = am * psi.falling(m, n)
                for t, ct in enumerate(g.coeffs):
                    if ct:
                        out[m - n + t] = out[m - n + t] + base * ct
        cols.append(from_basic_coords(polys, out))
    return OperatorMatrix(tuple(cols))


@dataclass(frozen=True)
class MutatorReport:
    """Residuals of Q xhat_Q - qhat xhat_Q Q - id applied to the basic basis."""

    psi_name: str
    delta_name: str
    residuals: tuple[Poly, ...]

    @property
    def ok(self) -> bool:
        return all(r.is_zero() for r in self.residuals)


def mutator_eigenvalue(psi, n: int) -> RationalFunction:
    """Diagonal value ((n+1)_psi - 1)/n_psi of the deformed-bracket operator."""
    return (psi.number(n + 1) - ONE) / psi.number(n)


def _mutator_scale(psi, polys: tuple[Poly, ...], p: Poly) -> Poly:
    coords = to_basic_coords(polys, p)
    out = Poly()
    for n, c in enumerate(coords):
        if c:
            out = out + polys[n].scale(c * mutator_eigenvalue(psi, n))
    return out


def qmutator_check(
    Q: DeltaOperator, n_top: int, delta_name: str = "?", basic: BasicSequence | None = None
) -> MutatorReport:
    """Verify the deformed bracket of (Q, xhat_Q) acts as the identity.

    Checks Q xhat_Q p_n - qhat xhat_Q Q p_n = p_n exactly for n < n_top.
    The qhat factor multiplies the index-n component by
    ((n+1)_psi - 1)/n_psi; components on p_0 are always zero here, so the
    undefined n = 0 eigenvalue is never evaluated.
    """
    psi = Q.psi
    if basic is None or basic.top < n_top:
        basic = basic_sequence(Q, n_top, method="solve")
    raise_map = dual_xhat(Q, n_top - 1, basic=basic)
    residuals = []
    for n in range(n_top):
        p_n = basic.polys[n]
        first = Q.apply(raise_map.apply(p_n))
        lowered = Q.apply(p_n)
        second = (
            _mutator_scale(psi, basic.polys, raise_map.apply(lowered))
            if lowered.coeffs
            else Poly()
        )
        residuals.append(first - second - p_n)
    return MutatorReport(psi.name, delta_name, tuple(residuals))
