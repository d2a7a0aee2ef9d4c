import pytest
from hypothesis import given, strategies as st

from oracles import from_sympy, leibniz_relation
from strategies import gaussian
from vertex_algebroids import construct
from vertex_algebroids.leibniz import (
    IsLie,
    NotCyclicOrInconclusive,
    check_left_leibniz,
    classify_cyclic,
    classify_form,
    cyclic_form,
    find_cyclic_generator,
    is_lie,
    new_leibniz,
    type_b_alphas,
)
from vertex_algebroids.scalars import ONE, ZERO, Q

EXPECTED_TAG = {
    ("dim2_nilpotent", "beta2", "0"): "dim2-null",
    ("dim2_solvable", "alpha2", "2"): "dim2-idem",
    ("dim3_nilpotent", "gamma1", "0"): "3a",
    ("dim3_type_c", "gamma1", "0"): "3c",
    ("dim3_type_d", "gamma1", "-2"): "3d",
}


def bracket_of(family, params):
    V = construct(family, params)
    return new_leibniz(V.B_dim, V.bracket0)


def cyclic_algebra(rel):
    """Cyclic left Leibniz algebra with [b, b^k] = b^{k+1} and the given top relation."""
    n = len(rel) + 1
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for k in range(n - 1):
        table[0][k][k + 1] = ONE
    table[0][n - 1] = [ZERO] + list(rel)
    return new_leibniz(n, table)


@pytest.mark.parametrize("key, tag", sorted(EXPECTED_TAG.items()))
def test_family_tags(key, tag):
    family, name, value = key
    params = {name: value}
    if family == "dim3_type_d":
        params["gamma0"] = "1"
    L = bracket_of(family, params)
    assert check_left_leibniz(L) == (True, None)
    assert not is_lie(L)
    assert classify_cyclic(L).type_tag == tag


@pytest.mark.parametrize("s", ["2", "3", "1+i"])
def test_type_b_mu(s):
    s = Q(s)
    cl = classify_cyclic(bracket_of("dim3_type_b", {"s": str(s)}))
    assert cl.type_tag == "3b"
    assert cl.scaling_invariant == -((s * s + 1) ** 2) / (s * s)
    assert set(map(str, cl.alphas)) == {str(s * s), str((s * s).inv())}


def test_type_c_mu():
    assert classify_cyclic(bracket_of("dim3_type_c", {"gamma1": "0"})).scaling_invariant == Q(-4)


@pytest.mark.parametrize("family, params", [("dim3_type_c", {"gamma1": "1"}), ("dim3_type_b", {"s": "2"})])
def test_relation_against_sympy(family, params):
    L = bracket_of(family, params)
    form = cyclic_form(L, L.basis(0))
    rel = [from_sympy(c) for c in leibniz_relation(L, L.basis(0))]
    assert rel[0] == ZERO
    assert tuple(rel[1:]) == form.relation_coeffs


@given(gaussian(nonzero=True), st.sampled_from(["dim3_type_b", "dim3_type_c", "dim3_type_d", "dim2_solvable"]))
def test_rescaling_invariance(t, family):
    params = {"dim3_type_b": {"s": "3"}, "dim3_type_c": {}, "dim3_type_d": {}, "dim2_solvable": {"alpha2": "1"}}[family]
    L = bracket_of(family, params)
    base = classify_cyclic(L)
    scaled = classify_form(L.dim, cyclic_form(L, [t * c for c in L.basis(0)]).relation_coeffs)
    assert (scaled.type_tag, scaled.scaling_invariant) == (base.type_tag, base.scaling_invariant)


@given(st.lists(gaussian(), min_size=3, max_size=3))
def test_change_of_generator_keeps_tag(v):
    L = bracket_of("dim3_type_c", {"gamma1": "0"})
    form = cyclic_form(L, v)
    if form is not None:
        assert classify_form(3, form.relation_coeffs).type_tag == "3c"


@given(gaussian(), gaussian())
def test_random_cyclic_algebras_are_leibniz(c0, c1):
    L = cyclic_algebra((c0, c1))
    assert check_left_leibniz(L)[0]
    assert classify_cyclic(L).relation_coeffs == (c0, c1)


def test_lie_rejected():
    # sl2-like antisymmetric bracket
    n = 3
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    table[0][1] = [ZERO, ZERO, ONE]
    table[1][0] = [ZERO, ZERO, -ONE]
    L = new_leibniz(3, table)
    assert is_lie(L)
    with pytest.raises(IsLie):
        classify_cyclic(L)


def test_leibniz_failure_witness():
    table = [[[ZERO, ZERO], [ZERO, ZERO]], [[ONE, ZERO], [ZERO, ZERO]]]
    table[0][0] = [ZERO, ONE]
    ok, witness = check_left_leibniz(new_leibniz(2, table))
    assert not ok and len(witness) == 3


def test_abelian_not_cyclic():
    L = new_leibniz(2, [[[ZERO, ZERO]] * 2] * 2)
    assert find_cyclic_generator(L, samples=20) is None
    table = [[[ZERO, ZERO], [ZERO, ZERO]], [[ZERO, ZERO], [ZERO, ZERO]]]
    table[0][0] = [ZERO, ONE]
    table[0][1] = [ONE, ZERO]
    with pytest.raises(NotCyclicOrInconclusive):
        cyclic_form(new_leibniz(2, table), [ONE, ZERO])


def test_alphas():
    assert set(map(str, type_b_alphas(Q("-25/4")))) == {"4", "1/4"}
    assert type_b_alphas(Q(3)) == ()
