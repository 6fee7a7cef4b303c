from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_matrices, brute_rank, kernel_count, solvable
from quiverhom.exactla import (
    QQ,
    FieldSpec,
    Matrix,
    coimage_projection,
    kernel_basis,
    rank,
    rref,
    solve,
)

F2, F3 = FieldSpec.prime(2), FieldSpec.prime(3)


def M(rows, field=QQ, cols=None):
    return Matrix.from_rows(field, rows, cols)


def test_field_validation():
    with pytest.raises(ValueError):
        FieldSpec.prime(4)
    with pytest.raises(ValueError):
        FieldSpec("complex")
    assert F3(Fraction(1, 2)) == 2
    assert F3(-1) == 2
    assert QQ("3/6") == Fraction(1, 2)


# -- spec examples ---------------------------------------------------------------


def test_rref_examples():
    assert rref(Matrix.zeros(QQ, 0, 0)) == (Matrix.zeros(QQ, 0, 0), [])
    assert rref(Matrix.identity(QQ, 2)) == (Matrix.identity(QQ, 2), [0, 1])
    # hand elimination: R2 <- R2 - 2 R1
    assert rref(M([[1, 2], [2, 4]])) == (M([[1, 2], [0, 0]]), [0])


def test_rank_examples():
    assert rank(Matrix.zeros(QQ, 3, 3)) == 0
    assert rank(Matrix.identity(QQ, 4)) == 4
    m = [[1, 2], [2, 4]]
    assert brute_rank(np.array(m), 2) == 1
    assert rank(M(m, F2)) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(QQ, 2)).shape == (2, 0)
    assert kernel_basis(Matrix.zeros(QQ, 2, 3)) == Matrix.identity(QQ, 3)
    k = kernel_basis(M([[1, 1]]))
    assert k.shape == (2, 1)
    assert k.col(0)[0] == -k.col(0)[1] != 0


def test_solve_examples():
    b = M([[3], [4]])
    assert solve(Matrix.identity(QQ, 2), b) == b
    assert solve(M([[1], [0]]), M([[0], [1]])) is None
    assert solve(M([[2]]), M([[1]])) == M([[Fraction(1, 2)]])
    with pytest.raises(ValueError):
        solve(M([[1]]), M([[1], [2]]))


def test_coimage_examples():
    q, d = coimage_projection(Matrix.identity(QQ, 3))
    assert (q.shape, d) == ((0, 3), 0)
    q, d = coimage_projection(Matrix.zeros(QQ, 2, 2))
    assert (q, d) == (Matrix.identity(QQ, 2), 2)
    q, d = coimage_projection(M([[1], [0]]))
    assert (q, d) == (M([[0, 1]]), 1)


# -- properties over Q -----------------------------------------------------------

small_ints = st.integers(-3, 3)


@st.composite
def rational_matrices(draw, max_dim=4):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3),
                            min_size=r * c, max_size=r * c))
    return Matrix(QQ, r, c, tuple(QQ(x) for x in entries))


@given(rational_matrices())
@settings(max_examples=150, deadline=None)
def test_rational_properties(m):
    assert rank(m) == rank(m.T)
    k = kernel_basis(m)
    assert k.cols == m.cols - rank(m)
    assert (m @ k).is_zero()
    assert rank(k) == k.cols
    r, piv = rref(m)
    assert rref(r)[0] == r
    assert len(piv) == rank(m)
    q, d = coimage_projection(m)
    assert d == m.rows - rank(m)
    assert (q @ m).is_zero()
    assert rank(q) == d


@given(rational_matrices(), st.data())
@settings(max_examples=100, deadline=None)
def test_solve_round_trip(m, data):
    x0 = Matrix(QQ, m.cols, 1, tuple(QQ(data.draw(small_ints)) for _ in range(m.cols)))
    b = m @ x0
    x = solve(m, b)
    assert x is not None and m @ x == b


# -- exhaustive comparison with enumeration oracles over F_2 and F_3 ---------------


@pytest.mark.parametrize("p", [2, 3])
def test_exhaustive_small_prime_fields(p):
    F = FieldSpec.prime(p)
    checked = 0
    for r in range(0, 4):
        for c in range(0, 4):
            for a in all_matrices(p, r, c):
                m = Matrix.from_rows(F, a.tolist(), c) if r else Matrix.zeros(F, 0, c)
                rk = brute_rank(a, p) if r and c else 0
                assert rank(m) == rk
                assert p ** kernel_basis(m).cols == kernel_count(a, p)
                q, d = coimage_projection(m)
                assert d == r - rk and (q @ m).is_zero() and rank(q) == d
                assert rref(rref(m)[0])[0] == rref(m)[0]
                if r:
                    b = np.arange(1, r + 1) % p
                    x = solve(m, Matrix.from_rows(F, [[int(v)] for v in b], 1))
                    assert (x is not None) == solvable(a, b, p)
                checked += 1
    assert checked == sum(p ** (r * c) for r in range(4) for c in range(4))
