import sympy as sp
from hypothesis import given

from oracles import matrix, rank
from strategies import small_matrix
from vertex_algebroids.linalg import Subspace, dense_to_sparse, nullspace, solve, sparse_to_dense
from vertex_algebroids.scalars import ZERO


@given(small_matrix())
def test_nullspace_against_sympy(rows):
    n = len(rows[0])
    ns = nullspace(rows, n)
    assert len(ns) == n - rank(rows)
    M = matrix(rows)
    for v in ns:
        assert (M * matrix([v]).T).applyfunc(sp.expand).is_zero_matrix


@given(small_matrix())
def test_subspace_dimension_is_rank(rows):
    s = Subspace(dense_to_sparse(r) for r in rows)
    assert s.dim == rank(rows)
    for r in rows:
        assert s.contains(dense_to_sparse(r))
        assert not s.reduce(dense_to_sparse(r))


@given(small_matrix())
def test_reduce_is_idempotent_and_pivot_free(rows):
    s = Subspace(dense_to_sparse(r) for r in rows[1:])
    v = s.reduce(dense_to_sparse(rows[0]))
    assert s.reduce(v) == v
    assert not set(v) & set(s.pivots())


@given(small_matrix())
def test_solve_consistent_system(rows):
    n = len(rows[0])
    x = [row[0] for row in rows][:n] + [ZERO] * max(0, n - len(rows))
    rhs = [sum((a * b for a, b in zip(r, x)), ZERO) for r in rows]
    sol = solve(rows, rhs, n)
    assert sol is not None
    assert [sum((a * b for a, b in zip(r, sol)), ZERO) for r in rows] == rhs


def test_dense_sparse_round_trip():
    from vertex_algebroids.scalars import Q

    row = [ZERO, Q(2), ZERO, Q("i")]
    assert sparse_to_dense(dense_to_sparse(row), 4) == row
