"""Small left Leibniz algebras: identity checks, cyclic generators, classification.

A cyclic non-Lie left Leibniz algebra of dimension 2 or 3 is pinned down by
how left multiplication by a generator ``b`` acts on the span of its
squares.  In dimension 3 the relation ``b^4 = c0 b^2 + c1 b^3`` changes
under ``b -> t b`` as ``(c0, c1) -> (t^2 c0, t c1)``, so ``c1^2 / c0`` is an
invariant whenever ``c0 != 0``; it separates the one-parameter family from
the exceptional algebra without taking square roots.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .linalg import Subspace, dense_to_sparse, solve
from .scalars import ONE, ZERO, GaussianRational, sqrt_if_square

__all__ = [
    "LeibnizAlgebra",
    "CyclicForm",
    "Classification",
    "NotCyclicOrInconclusive",
    "IsLie",
    "new_leibniz",
    "check_left_leibniz",
    "is_lie",
    "cyclic_form",
    "find_cyclic_generator",
    "classify_cyclic",
    "classify_form",
    "type_b_alphas",
]


class NotCyclicOrInconclusive(ValueError):
    pass


class IsLie(ValueError):
    pass


@dataclass(frozen=True)
class LeibnizAlgebra:
    dim: int
    bracket_table: tuple  # [e_i, e_j] = sum_k bracket_table[i][j][k] e_k
    labels: tuple = ()

    def bracket(self, x, y) -> list:
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, s in enumerate(self.bracket_table[i][j]):
                    if s:
                        out[k] = out[k] + c * s
        return out

    def basis(self, i) -> list:
        return [ONE if j == i else ZERO for j in range(self.dim)]

    def powers(self, x, count: int) -> list:
        """``[x, x^2, ..., x^count]`` with ``x^{n+1} = [x, x^n]``."""
        out = [list(x)]
        while len(out) < count:
            out.append(self.bracket(x, out[-1]))
        return out

    def change_basis(self, P) -> "LeibnizAlgebra":
        """Same algebra in the basis whose j-th vector has old coordinates ``P[j]``."""
        n = self.dim
        cols = [[P[j][i] for j in range(n)] for i in range(n)]
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                v = self.bracket(P[i], P[j])
                row.append(tuple(solve(cols, v, n)))
            table.append(tuple(row))
        return LeibnizAlgebra(n, tuple(table), self.labels)


def new_leibniz(dim: int, bracket, labels=()) -> LeibnizAlgebra:
    table = tuple(
        tuple(tuple(GaussianRational.coerce(c) for c in bracket[i][j]) for j in range(dim))
        for i in range(dim)
    )
    for i in range(dim):
        for j in range(dim):
            if len(table[i][j]) != dim:
                raise ValueError(f"bracket entry [{i}][{j}] has wrong length")
    return LeibnizAlgebra(dim, table, tuple(labels))


def check_left_leibniz(L: LeibnizAlgebra):
    """``(True, None)`` or ``(False, (i, j, k))`` for the first failing basis triple."""
    for i, j, k in itertools.product(range(L.dim), repeat=3):
        x, y, z = L.basis(i), L.basis(j), L.basis(k)
        lhs = L.bracket(x, L.bracket(y, z))
        rhs1 = L.bracket(L.bracket(x, y), z)
        rhs2 = L.bracket(y, L.bracket(x, z))
        if lhs != [p + q for p, q in zip(rhs1, rhs2)]:
            return False, (i, j, k)
    return True, None


def is_lie(L: LeibnizAlgebra) -> bool:
    for i in range(L.dim):
        for j in range(i, L.dim):
            if list(L.bracket_table[i][j]) != [-c for c in L.bracket_table[j][i]]:
                return False
    return True


@dataclass(frozen=True)
class CyclicForm:
    generator: tuple
    powers: tuple
    relation_coeffs: tuple  # (c,) in dim 2; (c0, c1) in dim 3


@dataclass(frozen=True)
class Classification:
    type_tag: str
    scaling_invariant: GaussianRational | None
    relation_coeffs: tuple
    alphas: tuple = ()


def cyclic_form(L: LeibnizAlgebra, v) -> CyclicForm | None:
    """Relation data for generator ``v``, or None if its powers do not span ``L``."""
    n = L.dim
    v = [GaussianRational.coerce(c) for c in v]
    pw = L.powers(v, n + 1)
    span = Subspace(dense_to_sparse(p) for p in pw[:n])
    if span.dim != n:
        return None
    cols = [[pw[j][i] for j in range(n)] for i in range(n)]
    coeffs = solve(cols, pw[n], n)
    # higher powers lie in the left-central ideal spanned by the squares
    if coeffs[0]:
        raise NotCyclicOrInconclusive(f"power {n + 1} has a component along the generator")
    rel = tuple(coeffs[1:])
    return CyclicForm(tuple(v), tuple(tuple(p) for p in pw[:n]), rel)


def _candidates(n: int, seed: int, samples: int):
    basis = [[ONE if j == i else ZERO for j in range(n)] for i in range(n)]
    yield from basis
    for i, j in itertools.combinations(range(n), 2):
        yield [a + b for a, b in zip(basis[i], basis[j])]
        yield [a - b for a, b in zip(basis[i], basis[j])]
    yield [ONE] * n
    rng = random.Random(seed)
    for _ in range(samples):
        yield [GaussianRational(rng.randint(-3, 3), 0) for _ in range(n)]


def find_cyclic_generator(L: LeibnizAlgebra, seed: int = 0, samples: int = 200) -> CyclicForm | None:
    """Search a bounded pattern set, then random small vectors, for a generator.

    ``None`` means nothing was found within the budget; it is not a proof
    that ``L`` is not cyclic.
    """
    for v in _candidates(L.dim, seed, samples):
        form = cyclic_form(L, v)
        if form is not None:
            return form
    return None


def type_b_alphas(mu) -> tuple:
    """Roots of ``mu = -(alpha+1)^2/alpha``, i.e. ``alpha^2 + (2+mu) alpha + 1 = 0``.

    Returns the pair ``(alpha, 1/alpha)`` when the discriminant is a square
    in Q(i), otherwise an empty tuple.
    """
    p = 2 + GaussianRational.coerce(mu)
    root = sqrt_if_square(p * p - 4)
    if root is None:
        return ()
    return tuple(sorted({str(r): r for r in ((-p + root) / 2, (-p - root) / 2)}.values(), key=str))


def classify_form(dim: int, rel: tuple) -> Classification:
    if dim == 2:
        (c,) = rel
        return Classification("dim2-null" if not c else "dim2-idem", None, rel)
    if dim != 3:
        raise NotCyclicOrInconclusive(f"dimension {dim} is not covered")
    c0, c1 = rel
    if not c0 and not c1:
        return Classification("3a", None, rel)
    if not c0:
        return Classification("3d", None, rel)
    mu = c1 * c1 / c0
    if mu == GaussianRational(-4):
        return Classification("3c", mu, rel)
    return Classification("3b", mu, rel, type_b_alphas(mu))


def classify_cyclic(L: LeibnizAlgebra, form: CyclicForm | None = None, seed: int = 0) -> Classification:
    if is_lie(L):
        raise IsLie("algebra is Lie")
    if form is None:
        form = find_cyclic_generator(L, seed=seed)
    if form is None:
        raise NotCyclicOrInconclusive("no cyclic generator found within the search budget")
    return classify_form(L.dim, form.relation_coeffs)
