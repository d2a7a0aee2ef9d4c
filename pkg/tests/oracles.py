"""Independent reference computations built on sympy."""

import sympy as sp
from sympy.functions.combinatorial.numbers import partition

from vertex_algebroids.scalars import GaussianRational


def to_sympy(x: GaussianRational):
    return sp.Rational(int(x.re.numerator), int(x.re.denominator)) + sp.I * sp.Rational(
        int(x.im.numerator), int(x.im.denominator)
    )


def from_sympy(e) -> GaussianRational:
    e = sp.nsimplify(sp.expand(e))
    re, im = sp.re(e), sp.im(e)
    return GaussianRational.coerce(f"{re}") + GaussianRational(0, 1) * GaussianRational.coerce(f"{im}")


def matrix(rows):
    return sp.Matrix([[to_sympy(c) for c in r] for r in rows])


def rank(rows):
    return matrix(rows).rank(simplify=True) if rows else 0


def algebra_matrices(A):
    """Left multiplication matrices of the basis, columns are images."""
    return [sp.Matrix(A.dim, A.dim, lambda r, c: to_sympy(A.sc[i][c][r])) for i in range(A.dim)]


def nilpotent(M) -> bool:
    return (M ** M.shape[0]).is_zero_matrix


def characters(A):
    """All algebra homomorphisms ``A -> C`` via an exhaustive polynomial solve."""
    xs = sp.symbols(f"r0:{A.dim}")
    eqs = [xs[A.unit_index] - 1]
    for i in range(A.dim):
        for k in range(A.dim):
            prod = sum(to_sympy(c) * xs[t] for t, c in enumerate(A.sc[i][k]))
            eqs.append(sp.expand(prod - xs[i] * xs[k]))
    return [tuple(sol[x] for x in xs) for sol in sp.solve(eqs, xs, dict=True)]


def idempotents(A, span):
    """Solutions of ``e*e = e`` with ``e`` in the span of the given vectors."""
    ts = sp.symbols(f"t0:{len(span)}")
    e = [sum(ts[j] * to_sympy(span[j][i]) for j in range(len(span))) for i in range(A.dim)]
    sq = [0] * A.dim
    for i in range(A.dim):
        for k in range(A.dim):
            for t, c in enumerate(A.sc[i][k]):
                if c:
                    sq[t] += e[i] * e[k] * to_sympy(c)
    sols = sp.solve([sp.expand(sq[t] - e[t]) for t in range(A.dim)], ts, dict=True)
    return [[sp.simplify(x.subs(s)) for x in e] for s in sols]


def partitions(n: int) -> int:
    return int(partition(n))


def leibniz_relation(L, v):
    """Coefficients ``(c0, ..., c_{n-1})`` with ``v^{n+1} = sum c_k v^{k+1}``, solved by sympy."""
    n = L.dim
    pw = L.powers(v, n + 1)
    M = sp.Matrix([[to_sympy(pw[k][i]) for k in range(n)] for i in range(n)])
    rhs = sp.Matrix([to_sympy(c) for c in pw[n]])
    return list(M.LUsolve(rhs))
