import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from psicalc.matrices import (
    adjoint,
    cmatrix,
    diag_sqrt,
    ident,
    inf_norm,
    is_diagonal,
    power_int,
)


def test_adjoint_is_involution():
    a = cmatrix([[1 + 2j, 3], [0, -1j]])
    assert inf_norm(adjoint(adjoint(a)) - a) == 0


def test_diag_sqrt_simple():
    got = diag_sqrt(np.diag([4.0, 9.0]).astype(complex))
    assert inf_norm(got - np.diag([2.0, 3.0])) == 0


def test_inf_norm_of_zero():
    assert inf_norm(ident(3) - ident(3)) == 0


def test_not_diagonal_rejected():
    with pytest.raises(ValueError, match="not diagonal"):
        diag_sqrt(cmatrix([[1, 1], [0, 1]]))


def test_negative_real_part_rejected():
    with pytest.raises(ValueError):
        diag_sqrt(np.diag([-1.0, 1.0]).astype(complex))


def test_dimension_checks():
    with pytest.raises(ValueError, match="dimension mismatch"):
        cmatrix([[1, 2, 3]])
    a, b = ident(2), ident(3)
    with pytest.raises(ValueError):
        a @ b


def test_power_int():
    x = cmatrix([[0, 1], [1, 0]])
    assert inf_norm(power_int(x, 2) - ident(2)) == 0
    assert inf_norm(power_int(x, -1) - x) == 0


def test_is_diagonal():
    assert is_diagonal(np.diag([1.0, 2.0]).astype(complex))
    assert not is_diagonal(cmatrix([[1, 0.1], [0, 1]]))


@given(st.lists(st.floats(min_value=1e-6, max_value=100.0), min_size=1, max_size=8))
@settings(max_examples=80)
def test_diag_sqrt_squares_back(entries):
    d = np.diag(np.array(entries, dtype=complex))
    r = diag_sqrt(d)
    assert inf_norm(r @ r - d) <= 1e-13
