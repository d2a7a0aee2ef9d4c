"""The six classified families of bundles over cyclic non-Lie Leibniz algebras.

Two-dimensional families use bases ``A = {1, a}`` and ``B = {b, da}``;
three-dimensional ones use ``A = {1, a, c}`` with ``c = b_0 a`` and
``B = {b, da, dc}``.  Only the residual free parameters are accepted; the
constrained quantities are computed.
"""

from __future__ import annotations

from .algebra import new_algebra
from .algebroid import VertexAlgebroid, build_from_generator
from .scalars import ONE, ZERO, GaussianRational, I

__all__ = [
    "BadParameter",
    "FAMILIES",
    "dim2_nilpotent",
    "dim2_solvable",
    "dim3_nilpotent",
    "dim3_type_b",
    "dim3_type_c",
    "dim3_type_d",
    "construct",
]


class BadParameter(ValueError):
    pass


HALF = GaussianRational(1) / 2
Z2, Z3 = [ZERO] * 2, [ZERO] * 3


def _q(x):
    return GaussianRational.coerce(x)


def _dim2(a_sq, b0a, a_b, a_da, name, params) -> VertexAlgebroid:
    """``a_sq``, ``b0a`` in A-coordinates; ``a_b``, ``a_da`` in B-coordinates."""
    one = [ONE, ZERO]
    sc = [[one, [ZERO, ONE]], [[ZERO, ONE], a_sq]]
    A = new_algebra(2, ("1", "a"), 0, sc)
    action = [
        [[ONE, ZERO], [ZERO, ONE]],
        [a_b, a_da],
    ]
    return build_from_generator(
        A,
        ("b", "da"),
        del_=[Z2, [ZERO, ONE]],
        gen=0,
        b0b=[ZERO, HALF],
        b1b=[ZERO, ONE],
        b0_on_A=[Z2, b0a],
        action=action,
        name=name,
        params=params,
    )


def dim2_nilpotent(beta2=0) -> VertexAlgebroid:
    """``b_0(b_0 b) = 0``; ``a*a = 0`` and ``a.b = beta2 da``."""
    beta2 = _q(beta2)
    return _dim2(Z2, Z2, [ZERO, beta2], Z2, "dim2_nilpotent", {"beta2": beta2})


def dim2_solvable(alpha2) -> VertexAlgebroid:
    """``b_0(b_0 b) = b_0 b``; ``a*a = alpha2 a - alpha2^2/4``."""
    al = _q(alpha2)
    h = al * HALF
    return _dim2(
        [-h * h, al],
        [-h, ONE],
        [h, h - 1],
        [ZERO, h],
        "dim2_solvable",
        {"alpha2": al},
    )


def _dim3(chi, c0, c1, a_sq, a_c, a_b, c_b, a_da, a_dc, name, params) -> VertexAlgebroid:
    """A-coordinates in (1, a, c), B-coordinates in (b, da, dc)."""
    e1, ea, ec = [ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]
    sc = [
        [e1, ea, ec],
        [ea, a_sq, a_c],
        [ec, a_c, Z3],
    ]
    A = new_algebra(3, ("1", "a", "c"), 0, sc)
    action = [
        [[ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]],
        [a_b, a_da, a_dc],
        [c_b, Z3, Z3],
    ]
    return build_from_generator(
        A,
        ("b", "da", "dc"),
        del_=[Z3, [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]],
        gen=0,
        b0b=[ZERO, HALF, ZERO],
        b1b=[ZERO, ONE, ZERO],
        b0_on_A=[Z3, ec, [chi, c0, c1]],
        action=action,
        name=name,
        params=params,
    )


def dim3_nilpotent(gamma0=0, gamma1=0) -> VertexAlgebroid:
    """``b_0 d(b_0 a) = 0``."""
    g0, g1 = _q(gamma0), _q(gamma1)
    return _dim3(
        chi=ZERO,
        c0=ZERO,
        c1=ZERO,
        a_sq=[ZERO, ZERO, g0],
        a_c=Z3,
        a_b=[ZERO, g0, g1],
        c_b=[ZERO, ZERO, 3 * g0 / 4],
        a_da=[ZERO, ZERO, g0 * HALF],
        a_dc=Z3,
        name="dim3_nilpotent",
        params={"gamma0": g0, "gamma1": g1},
    )


def type_b_k(s) -> GaussianRational:
    """``k = ((s^2+1)/s) i``, so that ``b_0 d(b_0 a) = da - k d(b_0 a)``."""
    s = _q(s)
    if not s:
        raise BadParameter("s must be nonzero")
    if s * s == ONE:
        raise BadParameter("s^2 must differ from 1")
    return (s * s + 1) / s * I


def dim3_type_b(s, gamma1=0) -> VertexAlgebroid:
    """``b^4 = b^2 - k b^3`` with ``alpha = s^2``."""
    s, g1 = _q(s), _q(gamma1)
    k = type_b_k(s)
    g = g1 + 1
    return _dim3(
        chi=-g,
        c0=ONE,
        c1=-k,
        a_sq=[-g * g, 2 * g, ZERO],
        a_c=[ZERO, ZERO, g],
        a_b=[g, g * k, g1],
        c_b=[ZERO, g1, k],
        a_da=[ZERO, g, ZERO],
        a_dc=[ZERO, ZERO, g],
        name="dim3_type_b",
        params={"s": s, "gamma1": g1},
    )


def dim3_type_c(gamma1=0) -> VertexAlgebroid:
    """``b^4 = b^2 + 2i b^3``."""
    g1 = _q(gamma1)
    g = g1 + 1
    return _dim3(
        chi=-g,
        c0=ONE,
        c1=2 * I,
        a_sq=[-g * g, 2 * g, ZERO],
        a_c=[ZERO, ZERO, g],
        a_b=[g, -2 * I * g, g1],
        c_b=[ZERO, g1, -2 * I],
        a_da=[ZERO, g, ZERO],
        a_dc=[ZERO, ZERO, g],
        name="dim3_type_c",
        params={"gamma1": g1},
    )


def dim3_type_d(gamma0=0, gamma1=0) -> VertexAlgebroid:
    """``b^4 = b^3``; ``beta = gamma0 + gamma1 + 1``."""
    g0, g1 = _q(gamma0), _q(gamma1)
    beta = g0 + g1 + 1
    return _dim3(
        chi=ZERO,
        c0=ZERO,
        c1=ONE,
        a_sq=[ZERO, beta, beta],
        a_c=[ZERO, ZERO, beta],
        a_b=[beta, g0, g1],
        c_b=[ZERO, beta / 4, 3 * beta / 4 - 1],
        a_da=[ZERO, beta * HALF, beta * HALF],
        a_dc=[ZERO, ZERO, beta],
        name="dim3_type_d",
        params={"gamma0": g0, "gamma1": g1},
    )


FAMILIES = {
    "dim2_nilpotent": (dim2_nilpotent, ("beta2",)),
    "dim2_solvable": (dim2_solvable, ("alpha2",)),
    "dim3_nilpotent": (dim3_nilpotent, ("gamma0", "gamma1")),
    "dim3_type_b": (dim3_type_b, ("s", "gamma1")),
    "dim3_type_c": (dim3_type_c, ("gamma1",)),
    "dim3_type_d": (dim3_type_d, ("gamma0", "gamma1")),
}


def construct(family: str, params: dict | None = None) -> VertexAlgebroid:
    if family not in FAMILIES:
        raise BadParameter(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    fn, names = FAMILIES[family]
    params = dict(params or {})
    unknown = set(params) - set(names)
    if unknown:
        raise BadParameter(f"unknown parameters for {family}: {', '.join(sorted(unknown))}")
    missing = [n for n in names if n not in params]
    if family in ("dim2_solvable", "dim3_type_b") and missing and names[0] in missing:
        raise BadParameter(f"{family} requires parameter {names[0]!r}")
    kwargs = {}
    for n in names:
        if n in params:
            try:
                kwargs[n] = GaussianRational.coerce(params[n])
            except (TypeError, ValueError) as exc:
                raise BadParameter(f"parameter {n}: {exc}") from exc
    return fn(**kwargs)
