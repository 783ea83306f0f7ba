import json
import random

import pytest

from thompson_leavitt import correspondence, leavitt, matrices, thompson
from thompson_leavitt.leavitt import Monomial, PForm, PFORM_ONE, PFORM_ZERO


def test_identity_matrix():
    I = matrices.identity(3, 2)
    assert matrices.is_identity(I)
    assert matrices.is_unitary(I)
    assert matrices.is_pform_matrix(I)
    assert matrices.mat_mul(I, I) == I


def test_mat_star_reverses_products():
    rng = random.Random(21)
    for _ in range(30):
        A = correspondence.symbol_to_matrix(
            thompson.random_symbol(3, 2, 4, rng)).base
        B = correspondence.symbol_to_matrix(
            thompson.random_symbol(3, 2, 4, rng)).base
        assert (matrices.mat_star(matrices.mat_mul(A, B))
                == matrices.mat_mul(matrices.mat_star(B), matrices.mat_star(A)))
        assert matrices.mat_star(matrices.mat_star(A)) == A


def _nf_product(A, B):
    """Independent product: entrywise normal-form arithmetic only."""
    rows, cols, inner = A.rows, B.cols, A.cols
    grid = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = leavitt.zero(A.n)
            for k in range(inner):
                acc = leavitt.add(acc, leavitt.mul(A.nf_entry(i, k),
                                                   B.nf_entry(k, j)))
            row.append(acc)
        grid.append(row)
    return matrices.LMatrix(rows, cols, A.n, grid)


def test_pform_product_agrees_with_nf_product():
    rng = random.Random(22)
    for _ in range(40):
        n = rng.randint(2, 3)
        r = rng.randint(1, 3)
        A = correspondence.symbol_to_matrix(
            thompson.random_symbol(n, r, 4, rng)).base
        B = correspondence.symbol_to_matrix(
            thompson.random_symbol(n, r, 4, rng)).base
        fast = matrices.mat_mul(A, B)
        assert matrices.is_pform_matrix(fast)
        assert fast == _nf_product(A, B)


def test_unitarity_check():
    # a single isometry x_1 is not unitary: y_1 x_1 != 1
    X = matrices.from_pform_grid([[PForm([leavitt.x_gen(1)])]], 2)
    assert not matrices.is_unitary(X)
    with pytest.raises(matrices.NotUnitaryError):
        matrices.UnitaryPMatrix(X)


def test_unitary_pmatrix_group_ops():
    rng = random.Random(23)
    U = correspondence.symbol_to_matrix(thompson.random_symbol(2, 2, 5, rng))
    V = correspondence.symbol_to_matrix(thompson.random_symbol(2, 2, 5, rng))
    W = U * V
    assert matrices.is_identity(matrices.mat_mul(W.base,
                                                 matrices.mat_star(W.base)))
    assert (U * U.star()).base == matrices.identity(2, 2)


def test_non_square_rejected_as_unitary():
    col = matrices.LMatrix(2, 1, 2, [[PFORM_ONE], [PFORM_ZERO]])
    with pytest.raises(matrices.NotUnitaryError):
        matrices.UnitaryPMatrix(col)


def test_to_json_shape():
    I = matrices.identity(2, 3)
    data = json.loads(I.to_json())
    assert data["rows"] == 2 and data["cols"] == 2 and data["n"] == 3
    assert data["entries"][0][0] == "+1·1"
    assert data["entries"][0][1] == "0"


def test_matrix_equality_is_by_normal_form():
    # y_2 x_2 and 1 - y_1 x_1 are the same element of L_2
    n = 2
    A = matrices.from_pform_grid([[PForm([Monomial((2,), (2,))])]], n)
    B = matrices.LMatrix(1, 1, n, [[leavitt.normalize(
        [(1, leavitt.ONE_MONOMIAL), (-1, Monomial((1,), (1,)))], n)]])
    assert A == B
