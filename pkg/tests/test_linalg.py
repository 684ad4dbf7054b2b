"""Exact integer linear algebra: Smith forms, kernels, cokernels.

Frozen values below were derived from the gcd-of-minors description of
the invariant factors, which the harness reimplements here as an
independent oracle.
"""

import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torika.linalg import (FinAbGroup, IntMatrix, cokernel, kernel_basis,
                           smith_normal_form, solve_integer)
from torika.linalg import _coords_in_basis, _det, _is_unimodular

from conftest import rand_unimodular


def minor_invariant_factors(m: IntMatrix):
    """Invariant factors via gcds of k x k minors; independent oracle."""
    rows, cols = m.shape
    factors = []
    previous = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                sub = IntMatrix([[m[i, j] for j in ci] for i in ri])
                g = math.gcd(g, _det(sub))
        if g == 0:
            break
        factors.append(g // previous)
        previous = g
    return factors


def assert_valid_smith(m: IntMatrix):
    dec = smith_normal_form(m)
    assert dec.u @ m @ dec.v == dec.s
    assert _is_unimodular(dec.u) and _is_unimodular(dec.v)
    diag = list(dec.diagonal)
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    # zeros trail and the divisibility chain holds
    assert diag[:len(nonzero)] == nonzero
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    for i in range(dec.s.rows):
        for j in range(dec.s.cols):
            if i != j:
                assert dec.s[i, j] == 0
    return dec


def test_smith_frozen_values():
    assert list(smith_normal_form(IntMatrix([[1, 2], [3, 4]])).diagonal) == [1, 2]
    assert list(smith_normal_form(IntMatrix([[2, 4], [6, 8]])).diagonal) == [2, 4]
    # gcd(2, 3) = 1, so the chain is 1 | 6 even though the input is diagonal
    assert list(smith_normal_form(IntMatrix([[2, 0], [0, 3]])).diagonal) == [1, 6]
    assert list(smith_normal_form(IntMatrix([[0, 0], [0, 0]])).diagonal) == [0, 0]


def test_smith_empty_shapes():
    for shape in [(0, 3), (3, 0), (0, 0)]:
        m = IntMatrix.zeros(*shape)
        dec = smith_normal_form(m)
        assert dec.s.shape == shape
        assert dec.u.shape == (shape[0], shape[0])
        assert dec.v.shape == (shape[1], shape[1])


def test_kernel_frozen():
    k = kernel_basis(IntMatrix([[1, -1]]))
    assert k.shape == (2, 1)
    assert tuple(k.column(0)) in {(1, 1), (-1, -1)}


def test_kernel_is_saturated():
    # the quotient by the kernel sublattice must be torsion free
    m = IntMatrix([[2, 4, 6], [0, 2, 4]])
    k = kernel_basis(m)
    assert all(x == 0 for x in (m @ k).entries)
    assert cokernel(k).torsion == ()


def test_cokernel_frozen():
    assert cokernel(IntMatrix([[3]])) == FinAbGroup(0, (3,))
    assert cokernel(IntMatrix([[2, 0], [0, 4]])) == FinAbGroup(0, (2, 4))
    assert cokernel(IntMatrix([[1, 0], [0, 1]])).is_trivial
    assert cokernel(IntMatrix([[2, 0], [0, 3]])) == FinAbGroup(0, (6,))
    # extra zero rows contribute free rank
    assert cokernel(IntMatrix([[1, 0], [0, 2], [0, 0]])) == FinAbGroup(1, (2,))
    assert cokernel(IntMatrix.zeros(0, 2)).is_trivial


def test_solve_integer():
    m = IntMatrix([[2, 0], [0, 3]])
    assert solve_integer(m, (4, 9)) == (2, 3)
    assert solve_integer(m, (1, 1)) is None
    assert solve_integer(IntMatrix.zeros(2, 0), (0, 0)) == ()
    assert solve_integer(IntMatrix.zeros(2, 0), (1, 0)) is None


def test_finabgroup_canonical():
    assert str(FinAbGroup.trivial()) == "0"
    assert str(FinAbGroup.free(1)) == "Z"
    assert str(FinAbGroup(2, (2, 6))) == "Z^2 x Z/2 x Z/6"
    assert FinAbGroup(0, (2,)).order() == 2
    assert FinAbGroup(1, ()).is_finite is False
    with pytest.raises(ValueError):
        FinAbGroup(0, (3, 2))
    with pytest.raises(ValueError):
        FinAbGroup(0, (1,))
    with pytest.raises(ValueError):
        FinAbGroup(-1, ())


def test_finabgroup_direct_sum():
    assert FinAbGroup(0, (2,)).direct_sum(FinAbGroup(0, (3,))) == FinAbGroup(0, (6,))
    assert FinAbGroup(0, (2, 2)).direct_sum(FinAbGroup(0, (4,))) == FinAbGroup(0, (2, 2, 4))
    assert FinAbGroup(0, (4,)).direct_sum(FinAbGroup(0, (6,))) == FinAbGroup(0, (2, 12))
    assert FinAbGroup(1, ()).direct_sum(FinAbGroup(2, (5,))) == FinAbGroup(3, (5,))


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-30, 30), min_size=c, max_size=c),
            min_size=r, max_size=r)))


@settings(max_examples=80, deadline=None)
@given(small_matrices)
def test_smith_properties(rows):
    m = IntMatrix(rows)
    dec = assert_valid_smith(m)
    nonzero = [d for d in dec.diagonal if d]
    assert nonzero == minor_invariant_factors(m)


@settings(max_examples=60, deadline=None)
@given(small_matrices)
def test_kernel_property(rows):
    m = IntMatrix(rows)
    k = kernel_basis(m)
    assert all(x == 0 for x in (m @ k).entries)
    # columns are a basis: full column rank
    assert len([d for d in smith_normal_form(k).diagonal if d]) == k.cols


@settings(max_examples=60, deadline=None)
@given(small_matrices, st.integers(0, 2 ** 30))
def test_solve_roundtrip(rows, seed):
    import random

    m = IntMatrix(rows)
    rng = random.Random(seed)
    x0 = tuple(rng.randint(-5, 5) for _ in range(m.cols))
    b = m.apply(x0)
    x = solve_integer(m, b)
    assert x is not None
    assert m.apply(x) == b


def test_coords_in_basis():
    basis = IntMatrix([[2, 0], [0, 3]]).to_array()
    target = IntMatrix([[4], [3]]).to_array()
    coords = _coords_in_basis(basis, target)
    assert [int(coords[i, 0]) for i in range(2)] == [2, 1]
    outside = IntMatrix([[1], [0]]).to_array()
    with pytest.raises(ValueError):
        _coords_in_basis(basis, outside)


def test_rand_unimodular_is_unimodular():
    import random

    rng = random.Random(7)
    for n in (1, 2, 3, 4):
        for _ in range(10):
            assert _is_unimodular(rand_unimodular(rng, n))
