import pytest
from hypothesis import given, strategies as st

from oracles import partitions
from vertex_algebroids import build_m1, construct, heisenberg_check, partition_count
from vertex_algebroids.heisenberg import (
    NoSquareRoot,
    NotHeisenbergFamily,
    partitions_enumerated,
    partitions_pentagonal,
)
from vertex_algebroids.scalars import ONE, Q


@given(st.integers(0, 30))
def test_partitions_agree_with_sympy(n):
    assert partitions_pentagonal(n) == partitions_enumerated(n) == partition_count(n) == partitions(n)


def test_partition_errors():
    with pytest.raises(ValueError):
        partition_count(-1)


def test_fock_space():
    F = build_m1(6)
    assert [F.dim(n) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    assert F.commutator_failures(6) == []
    # h(1) h(-1) 1 = 1, h(2) h(-2) 1 = 2
    vac = F.vacuum()
    assert F.h(1, F.h(-1, vac)) == vac
    assert F.h(2, F.h(-2, vac)) == {k: 2 * c for k, c in vac.items()}
    assert F.h(0, F.h(-1, vac)) == {}


@pytest.mark.parametrize(
    "family, params, c",
    [
        ("dim2_solvable", {"alpha2": "2"}, "1"),
        ("dim2_solvable", {"alpha2": "-8"}, "-4"),
        ("dim3_type_c", {"gamma1": "0"}, "1"),
        ("dim3_type_b", {"s": "2", "gamma1": "3"}, "4"),
    ],
)
def test_heisenberg_quotient(family, params, c):
    r = heisenberg_check(construct(family, params), N=5)
    assert r.c == Q(c)
    assert r.rescale_factor * r.rescale_factor == r.c
    assert r.quotient_dims == [1, 1, 2, 3, 5, 7]
    assert r.verdict and r.intertwining_checked > 0


def test_non_square_c_skips_products():
    V = construct("dim2_solvable", {"alpha2": "3"})
    r = heisenberg_check(V, N=4)
    assert r.c == Q("3/2") and r.rescale_factor is None
    assert r.quotient_dims == [1, 1, 2, 3, 5] and all(r.bijective)
    assert r.intertwining_skipped and not r.verdict
    with pytest.raises(NoSquareRoot):
        heisenberg_check(V, N=4, strict=True)


@pytest.mark.parametrize(
    "family, params",
    [
        ("dim2_nilpotent", {"beta2": "0"}),
        ("dim3_nilpotent", {"gamma0": "0", "gamma1": "1"}),
        ("dim2_solvable", {"alpha2": "0"}),
        ("dim3_type_c", {"gamma1": "-1"}),
        ("dim3_type_d", {"gamma0": "1", "gamma1": "-2"}),
    ],
)
def test_not_heisenberg(family, params):
    with pytest.raises(NotHeisenbergFamily):
        heisenberg_check(construct(family, params), N=3)


def test_non_local_algebra_reported():
    r = heisenberg_check(construct("dim3_type_d", {"gamma0": "0", "gamma1": "0"}), N=3)
    assert r.c is None and not r.verdict
    assert r.quotient_dims[0] == 2


def test_product_failure_is_reported(monkeypatch):
    """Rescaling by a wrong root of c breaks the products but not the dimensions."""
    import vertex_algebroids.heisenberg as h

    monkeypatch.setattr(h, "sqrt_if_square", lambda c: ONE)
    r = heisenberg_check(construct("dim2_solvable", {"alpha2": "8"}), N=3)
    assert all(r.bijective)
    assert not r.verdict
    du, u, n, v = r.intertwining_failure
    assert du <= 2
