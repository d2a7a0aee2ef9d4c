import pytest

from samples import VALID
from vertex_algebroids import build_vb, construct
from vertex_algebroids.linalg import add_into
from vertex_algebroids.scalars import ONE, Q
from vertex_algebroids.vertex import CapTooSmall, radical_vectors

N = 4
GRADED = {f: build_vb(construct(f, VALID[f][0]), N) for f in VALID}


@pytest.mark.parametrize("family", sorted(VALID))
def test_low_degrees(family):
    G = GRADED[family]
    V = G.V
    assert (G.dim(0), G.dim(1)) == (V.A.dim, V.B_dim)
    for n in range(N + 1):
        assert G.certificates[n] == "exact"


@pytest.mark.parametrize("family", sorted(VALID))
def test_fixpoint_skew_commutator(family):
    G = GRADED[family]
    assert G.fixpoint_failures() == []
    assert G.skew_symmetry_failures() == []
    assert G.commutator_failures(modes=range(-1, 2), w_degree=1) == []


@pytest.mark.parametrize("family", sorted(VALID))
def test_vacuum_and_degree_one_structure(family):
    G = GRADED[family]
    V = G.V
    vac = G.vacuum()
    for j in range(V.B_dim):
        u = G.from_B(V.b_basis(j))
        assert G.product(u, -1, vac) == G.reduce(u)
        assert G.product(vac, -1, u) == G.reduce(u)
        # D u = u_{-2} 1
        assert G.reduce(G.translation_D(u)) == G.product(u, -2, vac)
        for k in range(V.B_dim):
            v = G.from_B(V.b_basis(k))
            assert G.to_B(G.product(u, 0, v)) == V.br(V.b_basis(j), V.b_basis(k))
            assert G.to_A(G.product(u, 1, v)) == V.pair(V.b_basis(j), V.b_basis(k))
        for i in range(V.A.dim):
            x = G.from_A(V.a_basis(i))
            assert G.to_A(G.product(u, 0, x)) == V.anc(V.b_basis(j), V.a_basis(i))
            assert G.to_B(G.product(x, -1, u)) == V.act(V.a_basis(i), V.b_basis(j))
    for i in range(V.A.dim):
        for k in range(V.A.dim):
            x, y = G.from_A(V.a_basis(i)), G.from_A(V.a_basis(k))
            assert G.to_A(G.product(x, -1, y)) == V.A.multiply(V.a_basis(i), V.a_basis(k))
            # D on A is d
            assert G.to_B(G.translation_D(x)) == V.d(V.a_basis(i))


def test_linear_in_first_argument():
    G = GRADED["dim3_type_c"]
    V = G.V
    u = G.from_B([ONE, Q(2), Q("i")])
    w = G.product(G.from_B(V.b_basis(0)), -1, G.from_B(V.b_basis(1)))
    total = {}
    for j, c in enumerate([ONE, Q(2), Q("i")]):
        add_into(total, G.product(G.from_B(V.b_basis(j)), -1, w), c)
    assert G.product(u, -1, w) == G.reduce(total)


def test_cap_too_small():
    V = construct("dim2_solvable", {"alpha2": "2"})
    with pytest.raises(CapTooSmall) as info:
        build_vb(V, 4, 3)
    part = info.value.partial
    assert [part.certificates[n] for n in range(5)] == ["exact"] * 3 + ["upper"] * 2
    assert part.dim(1) == 2


def test_more_generous_cap_agrees():
    V = construct("dim3_type_d", {"gamma0": "1", "gamma1": "-2"})
    a = build_vb(V, 4, 5)
    b = build_vb(V, 4, 9)
    assert [a.dim(n) for n in range(5)] == [b.dim(n) for n in range(5)]


@pytest.mark.parametrize("family", sorted(VALID))
def test_radical_ideal_proper_and_nonzero(family):
    G = GRADED[family]
    Q_ = G.degree0_ideal_quotient(radical_vectors(G.V))
    assert Q_.dim(0) == 1
    assert all(d > 0 for d in Q_.ideal_dims()[:2])
    assert Q_.fixpoint_failures() == []


def test_invalid_bundle_collapses_degree_one():
    """An algebroid failing the identities cannot embed B in degree 1."""
    G = build_vb(construct("dim3_type_d", {"gamma0": "0", "gamma1": "0"}), 2)
    assert G.dim(1) < 3
