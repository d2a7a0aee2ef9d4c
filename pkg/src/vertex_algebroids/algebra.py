"""Unital commutative associative algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Subspace, dense_to_sparse, nullspace, solve, sparse_to_dense
from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "AlgebraError",
    "NotCommutative",
    "NotAssociative",
    "NoUnit",
    "NotLocal",
    "UnknownTemplate",
    "DimMismatch",
    "FiniteAlgebra",
    "LocalProfile",
    "new_algebra",
    "local_profile",
    "profile_matches",
    "radical",
    "residue",
    "TEMPLATES",
]


class AlgebraError(ValueError):
    pass


class NotCommutative(AlgebraError):
    pass


class NotAssociative(AlgebraError):
    pass


class NoUnit(AlgebraError):
    pass


class NotLocal(AlgebraError):
    pass


class UnknownTemplate(AlgebraError):
    pass


class DimMismatch(AlgebraError):
    pass


def _vec(coords, n):
    v = [GaussianRational.coerce(c) for c in coords]
    if len(v) != n:
        raise DimMismatch(f"expected {n} coordinates, got {len(v)}")
    return v


@dataclass(frozen=True)
class FiniteAlgebra:
    """``e_i * e_j = sum_k sc[i][j][k] e_k``; elements are coordinate lists."""

    dim: int
    labels: tuple
    unit_index: int
    sc: tuple

    def basis(self, i: int) -> list:
        return [ONE if j == i else ZERO for j in range(self.dim)]

    @property
    def one(self) -> list:
        return self.basis(self.unit_index)

    def zero(self) -> list:
        return [ZERO] * self.dim

    def element(self, coords) -> list:
        return _vec(coords, self.dim)

    def multiply(self, x, y) -> list:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimMismatch(f"algebra has dim {self.dim}")
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, s in enumerate(self.sc[i][j]):
                    if s:
                        out[k] = out[k] + c * s
        return out

    def power(self, x, n: int) -> list:
        out = self.one
        for _ in range(n):
            out = self.multiply(out, x)
        return out

    def mult_matrix(self, x) -> list:
        """Matrix of ``y -> x * y``; column j is ``x * e_j``."""
        cols = [self.multiply(x, self.basis(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def trace_form(self, x, y):
        prod = self.multiply(x, y)
        t = ZERO
        for j in range(self.dim):
            t = t + self.multiply(prod, self.basis(j))[j]
        return t

    def label(self, coords) -> str:
        parts = []
        for c, lab in zip(coords, self.labels):
            if c:
                parts.append(f"({c}){lab}")
        return " + ".join(parts) or "0"


def new_algebra(dim, labels, unit_index, structure_constants) -> FiniteAlgebra:
    """Validate and build a :class:`FiniteAlgebra`.

    Raises NotCommutative, NotAssociative or NoUnit naming the first
    offending basis pair or triple.
    """
    labels = tuple(labels)
    if len(labels) != dim:
        raise DimMismatch(f"{len(labels)} labels for dim {dim}")
    if not 0 <= unit_index < dim:
        raise NoUnit(f"unit index {unit_index} out of range")
    sc = []
    for i in range(dim):
        if len(structure_constants[i]) != dim:
            raise DimMismatch(f"row {i} of the structure constants has wrong length")
        sc.append(tuple(tuple(_vec(structure_constants[i][j], dim)) for j in range(dim)))
    A = FiniteAlgebra(dim, labels, unit_index, tuple(sc))
    for i in range(dim):
        for j in range(dim):
            if A.sc[i][j] != A.sc[j][i]:
                raise NotCommutative(f"e_{labels[i]} * e_{labels[j]} != e_{labels[j]} * e_{labels[i]}")
    for j in range(dim):
        if list(A.sc[unit_index][j]) != A.basis(j):
            raise NoUnit(f"{labels[unit_index]} * {labels[j]} != {labels[j]}")
    for i in range(dim):
        ei = A.basis(i)
        for j in range(dim):
            ej = A.basis(j)
            eij = A.multiply(ei, ej)
            for k in range(dim):
                ek = A.basis(k)
                if A.multiply(eij, ek) != A.multiply(ei, A.multiply(ej, ek)):
                    raise NotAssociative(
                        f"({labels[i]}*{labels[j]})*{labels[k]} != {labels[i]}*({labels[j]}*{labels[k]})"
                    )
    return A


@dataclass(frozen=True)
class LocalProfile:
    radical_basis: tuple
    nilpotency_index: int
    power_dims: tuple

    @property
    def radical_dim(self) -> int:
        return len(self.radical_basis)


def radical(A: FiniteAlgebra) -> list:
    """Kernel of the trace form; equals the nilradical in characteristic 0."""
    gram = [[A.trace_form(A.basis(i), A.basis(j)) for j in range(A.dim)] for i in range(A.dim)]
    return nullspace(gram, A.dim)


def _span_products(A, xs, ys) -> list:
    s = Subspace()
    for x in xs:
        for y in ys:
            s.add(dense_to_sparse(A.multiply(x, y)))
    return [sparse_to_dense(v, A.dim) for v in s.basis()]


def local_profile(A: FiniteAlgebra) -> LocalProfile:
    rad = radical(A)
    if len(rad) != A.dim - 1:
        raise NotLocal(f"radical has dimension {len(rad)}, algebra has dimension {A.dim}")
    dims = [len(rad)]
    power = rad
    index = 1
    while power:
        power = _span_products(A, rad, power)
        dims.append(len(power))
        index += 1
        if index > A.dim + 1:
            raise AlgebraError("radical is not nilpotent")
    if not rad:
        index = 1
    return LocalProfile(tuple(tuple(r) for r in rad), index, tuple(dims))


def residue(A: FiniteAlgebra, x, profile: LocalProfile | None = None):
    """The scalar ``c`` with ``x - c 1_A`` in the radical of a local algebra."""
    profile = profile or local_profile(A)
    rows = [list(col) for col in zip(A.one, *profile.radical_basis)]
    sol = solve(rows, list(x), 1 + len(profile.radical_basis))
    if sol is None:
        raise NotLocal("element has no residue")
    return sol[0]


TEMPLATES = {
    "C[x]/(x^2)": (2, (1, 0), 2),
    "C[x]/(x^3)": (3, (2, 1, 0), 3),
    "C[x,y]/(x^2,xy,y^2)": (3, (2, 0), 2),
}


def profile_matches(A: FiniteAlgebra, template: str) -> bool:
    """True when ``A`` has the local profile of the named truncated polynomial ring.

    The comparison uses (dim, radical power dims, nilpotency index), which
    already tells these three rings apart and is insensitive to the
    translation ``x -> x - c`` that moves a generator into the radical.
    """
    if template not in TEMPLATES:
        raise UnknownTemplate(template)
    try:
        prof = local_profile(A)
    except NotLocal:
        return False
    return (A.dim, prof.power_dims, prof.nilpotency_index) == TEMPLATES[template]

