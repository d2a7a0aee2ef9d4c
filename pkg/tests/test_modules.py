import pytest

from oracles import partitions
from samples import VALID
from vertex_algebroids import construct, induced_module
from vertex_algebroids.algebroid import BadModuleData
from vertex_algebroids.scalars import ONE, ZERO

N = 4
LAMBDAS = ["0", "1", "-2", "3/2", "i"]
HEIS = {"dim2_solvable", "dim3_type_b", "dim3_type_c"}


@pytest.mark.parametrize("family", sorted(VALID))
def test_module_structure(family):
    V = construct(family, VALID[family][0])
    for lam in LAMBDAS:
        M = induced_module(V, lam, N)
        assert M.dim_MB(0) == M.dim_L(0) == 1
        assert M.relations[0].dim == 0
        for n in range(N + 1):
            assert M.dim_J(n) == M.dim_MB(n) - M.J_pairing_dims[n]
            assert M.dim_L(n) <= M.dim_MB(n) <= M.dim_M(n)
        assert M.radical_witness() is None
        assert M.fixpoint_failures() == []


@pytest.mark.parametrize("family", sorted(VALID))
def test_simple_quotient_dimensions(family):
    M = induced_module(construct(family, VALID[family][0]), "3/2", N)
    dims = [M.dim_L(n) for n in range(N + 1)]
    if family in HEIS:
        assert dims == [partitions(n) for n in range(N + 1)]
    else:
        assert dims == [1] + [0] * N


def test_pbw_dimensions():
    M = induced_module(construct("dim2_solvable", {"alpha2": "2"}), "0", N)
    # one creator per degree from A, one from B; generating function prod 1/(1-q^n)^2
    assert [M.dim_M(n) for n in range(N + 1)] == [1, 2, 5, 10, 20]


def test_rejects_non_module_data():
    V = construct("dim2_nilpotent", {"beta2": "0"})
    with pytest.raises(BadModuleData):
        induced_module(V, "1", 2, algebra_action=[ONE, ONE])
    with pytest.raises(BadModuleData):
        induced_module(V, "1", 2, algebra_action=[ZERO, ZERO])
