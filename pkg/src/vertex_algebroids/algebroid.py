"""Vertex A-algebroids, their axiom checker, and the Lie algebroid quotient.

Elements of ``A`` and ``B`` are dense coordinate lists.  A bundle stores
five tables::

    del_[i]          = d(e_i)             (A -> B)
    action[i][j]     = e_i . f_j          (A x B -> B)
    bracket0[j][k]   = f_j _0 f_k         (B x B -> B)
    pairing1[j][k]   = f_j _1 f_k         (B x B -> A)
    anchor[j][i]     = f_j _0 e_i         (B x A -> A)

and the checker evaluates every identity on all basis tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import FiniteAlgebra, local_profile
from .linalg import Subspace, dense_to_sparse, solve, sparse_to_dense
from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "VertexAlgebroid",
    "IdentityResult",
    "AxiomReport",
    "InconsistentParameters",
    "QuotientIllDefined",
    "BadModuleData",
    "LieAlgebroid",
    "OneDimModules",
    "Dim3Constraints",
    "build_from_generator",
    "check_axioms",
    "derive_dim3_constraints",
    "a_del_a_ideal",
    "lie_algebroid_quotient",
    "one_dim_modules",
]


class InconsistentParameters(ValueError):
    pass


class QuotientIllDefined(ValueError):
    pass


class BadModuleData(ValueError):
    pass


def _bilinear(table, x, y, n):
    out = [ZERO] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            c = xi * yj
            for k, s in enumerate(row[j]):
                if s:
                    out[k] = out[k] + c * s
    return out


def _linear(table, x, n):
    out = [ZERO] * n
    for i, xi in enumerate(x):
        if xi:
            for k, s in enumerate(table[i]):
                if s:
                    out[k] = out[k] + xi * s
    return out


def _add(*vs):
    return [sum(cs, ZERO) for cs in zip(*vs)]


def _sub(x, y):
    return [p - q for p, q in zip(x, y)]


def _neg(x):
    return [-p for p in x]


def _smul(c, x):
    return [c * p for p in x]


@dataclass(frozen=True)
class VertexAlgebroid:
    A: FiniteAlgebra
    B_dim: int
    B_labels: tuple
    del_: tuple
    action: tuple
    bracket0: tuple
    pairing1: tuple
    anchor: tuple
    name: str = ""
    params: dict = field(default_factory=dict, compare=False)

    # -- element helpers ------------------------------------------------------
    def a_basis(self, i):
        return self.A.basis(i)

    def b_basis(self, j):
        return [ONE if k == j else ZERO for k in range(self.B_dim)]

    def a_zero(self):
        return [ZERO] * self.A.dim

    def b_zero(self):
        return [ZERO] * self.B_dim

    # -- operations -----------------------------------------------------------
    def d(self, x):
        return _linear(self.del_, x, self.B_dim)

    def act(self, x, u):
        return _bilinear(self.action, x, u, self.B_dim)

    def br(self, u, v):
        return _bilinear(self.bracket0, u, v, self.B_dim)

    def pair(self, u, v):
        return _bilinear(self.pairing1, u, v, self.A.dim)

    def anc(self, u, x):
        return _bilinear(self.anchor, u, x, self.A.dim)

    def mul(self, x, y):
        return self.A.multiply(x, y)

    def b_label(self, u) -> str:
        parts = [f"({c}){lab}" for c, lab in zip(u, self.B_labels) if c]
        return " + ".join(parts) or "0"


def _table(rows):
    return tuple(tuple(tuple(GaussianRational.coerce(c) for c in v) for v in row) for row in rows)


def build_from_generator(A: FiniteAlgebra, B_labels, del_, gen: int, b0b, b1b, b0_on_A, action, name="", params=None):
    """Fill in all bundle tables from the data of a generator ``b = f_gen``.

    ``B`` must be spanned by ``b`` and ``d(A)``.  The remaining entries follow
    from ``(dx)_0 = 0``, ``(dx)_1 v = v_0 x``, ``b_0 dx = d(b_0 x)`` and
    ``u_0 v + v_0 u = d(u_1 v)``.  ``action`` is the full ``A x B`` table.
    """
    nA, nB = A.dim, len(B_labels)
    del_ = _table([del_])[0]
    b0b = [GaussianRational.coerce(c) for c in b0b]
    b1b = [GaussianRational.coerce(c) for c in b1b]
    b0_on_A = _table([b0_on_A])[0]

    def d(x):
        return _linear(del_, x, nB)

    # each non-generator basis vector of B as d of some element of A
    cols = [[del_[i][k] for i in range(nA)] for k in range(nB)]
    pre = {}
    for j in range(nB):
        if j == gen:
            continue
        target = [ONE if k == j else ZERO for k in range(nB)]
        x = solve(cols, target, nA)
        if x is None:
            raise ValueError(f"{B_labels[j]} is not in the image of d")
        pre[j] = x

    def anchor_b(x):
        return _linear(b0_on_A, x, nA)

    anchor = [[A.zero() for _ in range(nA)] for _ in range(nB)]
    for i in range(nA):
        anchor[gen][i] = list(b0_on_A[i])
    bracket = [[[ZERO] * nB for _ in range(nB)] for _ in range(nB)]
    pairing = [[A.zero() for _ in range(nB)] for _ in range(nB)]
    bracket[gen][gen] = b0b
    pairing[gen][gen] = b1b
    for j, x in pre.items():
        bx = anchor_b(x)
        bracket[gen][j] = d(bx)
        pairing[gen][j] = bx
        pairing[j][gen] = bx
        # f_j _0 b = -b_0 f_j + d(<f_j, b>) = -d(b_0 x) + d(b_0 x) = 0
    return VertexAlgebroid(
        A=A,
        B_dim=nB,
        B_labels=tuple(B_labels),
        del_=del_,
        action=_table(action),
        bracket0=_table(bracket),
        pairing1=_table(pairing),
        anchor=_table(anchor),
        name=name,
        params=dict(params or {}),
    )


# -- axiom checker ---------------------------------------------------------------


@dataclass(frozen=True)
class IdentityResult:
    group: str
    name: str
    passed: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class AxiomReport:
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def get(self, name) -> IdentityResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


class _Checker:
    def __init__(self, V: VertexAlgebroid):
        self.V = V
        self.results = []

    def run(self, group, name, ranges, fn):
        """``ranges`` lists 'A' / 'B' / 'C' slots; ``fn`` returns True when the identity holds."""
        V = self.V
        nA, nB = V.A.dim, V.B_dim
        sizes = {"A": nA, "B": nB, "C": nA + nB}
        for idx in itertools.product(*(range(sizes[r]) for r in ranges)):
            if not fn(*idx):
                self.results.append(IdentityResult(group, name, False, self._labels(ranges, idx)))
                return
        self.results.append(IdentityResult(group, name, True, None))

    def _labels(self, ranges, idx):
        V = self.V
        out = []
        for r, i in zip(ranges, idx):
            if r == "A":
                out.append(V.A.labels[i])
            elif r == "B":
                out.append(V.B_labels[i])
            else:
                out.append(V.A.labels[i] if i < V.A.dim else V.B_labels[i - V.A.dim])
        return tuple(out)


class _Conformal:
    """``C = A + B`` with the 0- and 1-products induced by the bundle."""

    def __init__(self, V: VertexAlgebroid):
        self.V = V
        self.nA = V.A.dim
        self.n = V.A.dim + V.B_dim

    def basis(self, i):
        return [ONE if k == i else ZERO for k in range(self.n)]

    def split(self, x):
        return x[: self.nA], x[self.nA :]

    def join(self, a, b):
        return list(a) + list(b)

    def prod(self, i, x, y):
        V = self.V
        xa, xb = self.split(x)
        ya, yb = self.split(y)
        if i == 0:
            a = _sub(V.anc(xb, ya), V.anc(yb, xa))
            return self.join(a, V.br(xb, yb))
        if i == 1:
            return self.join(V.pair(xb, yb), V.b_zero())
        raise ValueError(i)

    def d(self, x):
        V = self.V
        xa, xb = self.split(x)
        return self.join(V.a_zero(), V.d(xa))


def check_axioms(V: VertexAlgebroid) -> AxiomReport:
    """Evaluate every bundle identity on all basis tuples."""
    ck = _Checker(V)
    A = V.A
    ea, eb = V.a_basis, V.b_basis
    one = A.one

    # structure of the data
    ck.run("structure", "1_A.v = v", "B", lambda j: V.act(one, eb(j)) == eb(j))
    ck.run(
        "structure",
        "[u,[v,w]] = [[u,v],w] + [v,[u,w]]",
        "BBB",
        lambda i, j, k: V.br(eb(i), V.br(eb(j), eb(k)))
        == _add(V.br(V.br(eb(i), eb(j)), eb(k)), V.br(eb(j), V.br(eb(i), eb(k)))),
    )
    ck.run(
        "structure",
        "pi(u) is a derivation",
        "BAA",
        lambda j, i, k: V.anc(eb(j), A.multiply(ea(i), ea(k)))
        == _add(A.multiply(V.anc(eb(j), ea(i)), ea(k)), A.multiply(ea(i), V.anc(eb(j), ea(k)))),
    )
    ck.run(
        "structure",
        "pi([u,v]) = [pi(u),pi(v)]",
        "BBA",
        lambda i, j, k: V.anc(V.br(eb(i), eb(j)), ea(k))
        == _sub(V.anc(eb(i), V.anc(eb(j), ea(k))), V.anc(eb(j), V.anc(eb(i), ea(k)))),
    )
    ck.run("structure", "pi o d = 0", "AA", lambda i, k: not any(V.anc(V.d(ea(i)), ea(k))))
    ck.run("structure", "u_1v = v_1u", "BB", lambda i, j: V.pair(eb(i), eb(j)) == V.pair(eb(j), eb(i)))

    # the nine bundle identities
    ck.run(
        "bundle",
        "a.(a'.v) - (a*a').v = pi(v)(a).d(a') + pi(v)(a').d(a)",
        "AAB",
        lambda i, k, j: _sub(V.act(ea(i), V.act(ea(k), eb(j))), V.act(A.multiply(ea(i), ea(k)), eb(j)))
        == _add(V.act(V.anc(eb(j), ea(i)), V.d(ea(k))), V.act(V.anc(eb(j), ea(k)), V.d(ea(i)))),
    )
    ck.run(
        "bundle",
        "[u,a.v] = pi(u)(a).v + a.[u,v]",
        "BAB",
        lambda i, k, j: V.br(eb(i), V.act(ea(k), eb(j)))
        == _add(V.act(V.anc(eb(i), ea(k)), eb(j)), V.act(ea(k), V.br(eb(i), eb(j)))),
    )
    ck.run(
        "bundle",
        "[u,v] + [v,u] = d(<u,v>)",
        "BB",
        lambda i, j: _add(V.br(eb(i), eb(j)), V.br(eb(j), eb(i))) == V.d(V.pair(eb(i), eb(j))),
    )
    ck.run(
        "bundle",
        "pi(a.v) = a pi(v)",
        "ABA",
        lambda i, j, k: V.anc(V.act(ea(i), eb(j)), ea(k)) == A.multiply(ea(i), V.anc(eb(j), ea(k))),
    )
    ck.run(
        "bundle",
        "<a.u,v> = a*<u,v> - pi(u)(pi(v)(a))",
        "ABB",
        lambda k, i, j: V.pair(V.act(ea(k), eb(i)), eb(j))
        == _sub(A.multiply(ea(k), V.pair(eb(i), eb(j))), V.anc(eb(i), V.anc(eb(j), ea(k)))),
    )
    ck.run(
        "bundle",
        "pi(v)(<v1,v2>) = <[v,v1],v2> + <v1,[v,v2]>",
        "BBB",
        lambda i, j, k: V.anc(eb(i), V.pair(eb(j), eb(k)))
        == _add(V.pair(V.br(eb(i), eb(j)), eb(k)), V.pair(eb(j), V.br(eb(i), eb(k)))),
    )
    ck.run(
        "bundle",
        "d(a*a') = a.d(a') + a'.d(a)",
        "AA",
        lambda i, k: V.d(A.multiply(ea(i), ea(k))) == _add(V.act(ea(i), V.d(ea(k))), V.act(ea(k), V.d(ea(i)))),
    )
    ck.run(
        "bundle",
        "[v,d(a)] = d(pi(v)(a))",
        "BA",
        lambda j, i: V.br(eb(j), V.d(ea(i))) == V.d(V.anc(eb(j), ea(i))),
    )
    ck.run(
        "bundle",
        "<v,d(a)> = pi(v)(a)",
        "BA",
        lambda j, i: V.pair(eb(j), V.d(ea(i))) == V.anc(eb(j), ea(i)),
    )

    # 1-truncated conformal algebra axioms on C = A + B
    C = _Conformal(V)
    ec = C.basis
    nA = A.dim
    zero_c = [ZERO] * C.n

    def _is_a(i):
        return i < nA

    ck.run(
        "conformal",
        "(da)_0 = 0",
        "AC",
        lambda i, k: C.prod(0, C.d(ec(i)), ec(k)) == zero_c,
    )
    ck.run(
        "conformal",
        "(da)_1 = -a_0",
        "AC",
        lambda i, k: C.prod(1, C.d(ec(i)), ec(k)) == _neg(C.prod(0, ec(i), ec(k))),
    )
    ck.run(
        "conformal",
        "d(u_0a) = u_0 da",
        "BA",
        lambda j, i: C.d(C.prod(0, ec(nA + j), ec(i))) == C.prod(0, ec(nA + j), C.d(ec(i))),
    )
    ck.run(
        "conformal",
        "u_0a = -a_0u",
        "BA",
        lambda j, i: C.prod(0, ec(nA + j), ec(i)) == _neg(C.prod(0, ec(i), ec(nA + j))),
    )
    ck.run(
        "conformal",
        "u_0v = -v_0u + d(u_1v)",
        "BB",
        lambda i, j: C.prod(0, ec(nA + i), ec(nA + j))
        == _add(_neg(C.prod(0, ec(nA + j), ec(nA + i))), C.d(C.prod(1, ec(nA + i), ec(nA + j)))),
    )
    ck.run(
        "conformal",
        "u_1v = v_1u (on C)",
        "BB",
        lambda i, j: C.prod(1, ec(nA + i), ec(nA + j)) == C.prod(1, ec(nA + j), ec(nA + i)),
    )
    for n in (0, 1):
        ck.run(
            "conformal",
            f"x_0 y_{n} z = y_{n} x_0 z + (x_0 y)_{n} z",
            "CCC",
            lambda i, j, k, n=n: C.prod(0, ec(i), C.prod(n, ec(j), ec(k)))
            == _add(C.prod(n, ec(j), C.prod(0, ec(i), ec(k))), C.prod(n, C.prod(0, ec(i), ec(j)), ec(k))),
        )

    # compatibility conditions for C to come from a bundle
    ck.run(
        "compatibility",
        "a.(a'.u) - (a*a').u = (u_0a).da' + (u_0a').da",
        "AAB",
        lambda i, k, j: _sub(V.act(ea(i), V.act(ea(k), eb(j))), V.act(A.multiply(ea(i), ea(k)), eb(j)))
        == _add(V.act(V.anc(eb(j), ea(i)), V.d(ea(k))), V.act(V.anc(eb(j), ea(k)), V.d(ea(i)))),
    )
    ck.run(
        "compatibility",
        "u_0(a.v) - a.(u_0v) = (u_0a).v",
        "BAB",
        lambda i, k, j: _sub(V.br(eb(i), V.act(ea(k), eb(j))), V.act(ea(k), V.br(eb(i), eb(j))))
        == V.act(V.anc(eb(i), ea(k)), eb(j)),
    )
    ck.run(
        "compatibility",
        "u_0(a*a') = a*(u_0a') + (u_0a)*a'",
        "BAA",
        lambda j, i, k: V.anc(eb(j), A.multiply(ea(i), ea(k)))
        == _add(A.multiply(ea(i), V.anc(eb(j), ea(k))), A.multiply(V.anc(eb(j), ea(i)), ea(k))),
    )
    ck.run(
        "compatibility",
        "a_0(a'.v) = a'*(a_0v)",
        "AAB",
        lambda i, k, j: _neg(V.anc(V.act(ea(k), eb(j)), ea(i))) == A.multiply(ea(k), _neg(V.anc(eb(j), ea(i)))),
    )
    ck.run(
        "compatibility",
        "(a.u)_1v = a*(u_1v) - u_0v_0a",
        "ABB",
        lambda k, i, j: V.pair(V.act(ea(k), eb(i)), eb(j))
        == _sub(A.multiply(ea(k), V.pair(eb(i), eb(j))), V.anc(eb(i), V.anc(eb(j), ea(k)))),
    )
    ck.run(
        "compatibility",
        "d(a*a') = a.da' + a'.da",
        "AA",
        lambda i, k: V.d(A.multiply(ea(i), ea(k))) == _add(V.act(ea(i), V.d(ea(k))), V.act(ea(k), V.d(ea(i)))),
    )
    return AxiomReport(tuple(ck.results))


# -- dim 3 constraint solver --------------------------------------------------------


@dataclass(frozen=True)
class Dim3Constraints:
    c0: GaussianRational
    c1: GaussianRational
    gamma0: GaussianRational
    gamma1: GaussianRational
    beta: GaussianRational
    e: GaussianRational  # gamma0 + (gamma1+1) c1, the b0a-coefficient of a*a
    chi_must_vanish: bool
    a_times_a: tuple  # coefficients of (1_A, a, b0a), chi kept symbolic as ("chi", k)
    a_del_a: tuple  # coefficients of (da, d(b0a))
    a_times_b0a: tuple
    b0a_times_b0a: tuple


def derive_dim3_constraints(c0, c1, gamma0, gamma1) -> Dim3Constraints:
    """Constraints a three-dimensional bundle places on ``(c0, c1, gamma0, gamma1)``.

    Here ``b0 d(b0a) = c0 da + c1 d(b0a)`` and
    ``a.b = beta b + gamma0 da + gamma1 d(b0a)``.
    """
    c0, c1, g0, g1 = (GaussianRational.coerce(x) for x in (c0, c1, gamma0, gamma1))
    e = g0 + (g1 + 1) * c1
    if e * c0:
        raise InconsistentParameters(f"(gamma0 + (gamma1+1) c1) c0 = {e * c0} != 0")
    beta = (g1 + 1) * c0 + e * c1
    a_a = (("chi", g1 + 1), beta + (g1 + 1) * c0, e)
    a_da = ((beta + (g1 + 1) * c0) / 2, e / 2)
    return Dim3Constraints(
        c0, c1, g0, g1, beta, e, bool(e), a_a, a_da, (ZERO, ZERO, beta), (ZERO, ZERO, ZERO)
    )


# -- ideal A d(A) and the Lie algebroid quotient ------------------------------------------


def a_del_a_ideal(V: VertexAlgebroid) -> Subspace:
    s = Subspace()
    for i in range(V.A.dim):
        for k in range(V.A.dim):
            s.add(dense_to_sparse(V.act(V.a_basis(i), V.d(V.a_basis(k)))))
    return s


@dataclass(frozen=True)
class LieAlgebroid:
    A: FiniteAlgebra
    Q_dim: int
    bracket: tuple  # [q_i, q_j] in Q coordinates
    action: tuple  # e_i . q_j
    anchor: tuple  # q_j (e_i)
    projection: tuple  # projection[j] = coordinates of the class of f_j
    representatives: tuple  # B-vectors lifting each q_j

    def br(self, x, y):
        return _bilinear(self.bracket, x, y, self.Q_dim)

    def act(self, a, q):
        return _bilinear(self.action, a, q, self.Q_dim)

    def anc(self, q, a):
        return _bilinear(self.anchor, q, a, self.A.dim)

    def check(self):
        """``(True, None)`` or ``(False, (identity, witness))``."""
        A, n = self.A, self.Q_dim
        eq = lambda j: [ONE if k == j else ZERO for k in range(n)]  # noqa: E731
        for i, j in itertools.product(range(n), repeat=2):
            if self.br(eq(i), eq(j)) != _neg(self.br(eq(j), eq(i))):
                return False, ("antisymmetry", (i, j))
        for i, j, k in itertools.product(range(n), repeat=3):
            x, y, z = eq(i), eq(j), eq(k)
            jac = _add(self.br(x, self.br(y, z)), self.br(y, self.br(z, x)), self.br(z, self.br(x, y)))
            if any(jac):
                return False, ("Jacobi", (i, j, k))
        for i, j, k in itertools.product(range(n), range(A.dim), range(n)):
            u, a, v = eq(i), A.basis(j), eq(k)
            lhs = self.br(u, self.act(a, v))
            rhs = _add(self.act(a, self.br(u, v)), self.act(self.anc(u, a), v))
            if lhs != rhs:
                return False, ("[u,av] = a[u,v] + (ua)v", (i, A.labels[j], k))
        for j, i, k in itertools.product(range(A.dim), range(n), range(A.dim)):
            a, u, a2 = A.basis(j), eq(i), A.basis(k)
            if A.multiply(a, self.anc(u, a2)) != self.anc(self.act(a, u), a2):
                return False, ("a(ua') = (au)a'", (A.labels[j], i, A.labels[k]))
        for i, j in itertools.product(range(n), range(n)):
            for k in range(A.dim):
                # anchor is a Lie algebra action on A
                a = A.basis(k)
                lhs = self.anc(self.br(eq(i), eq(j)), a)
                rhs = _sub(self.anc(eq(i), self.anc(eq(j), a)), self.anc(eq(j), self.anc(eq(i), a)))
                if lhs != rhs:
                    return False, ("anchor is a Lie action", (i, j, A.labels[k]))
        return True, None


def lie_algebroid_quotient(V: VertexAlgebroid) -> LieAlgebroid:
    """``B / A d(A)`` with its induced bracket, A-action and anchor."""
    I = a_del_a_ideal(V)
    nB = V.B_dim
    free = [j for j in range(nB) if j not in I.pivots()]
    reps = [V.b_basis(j) for j in free]
    q = len(free)

    def project(u):
        r = I.reduce(dense_to_sparse(u))
        if any(k not in free for k in r):
            raise QuotientIllDefined(f"reduction left a pivot coordinate: {r}")
        return [r.get(j, ZERO) for j in free]

    # well-definedness: each operation must send the ideal to the ideal
    # (or to zero for the anchor)
    ideal_basis = [sparse_to_dense(v, nB) for v in I.basis()]
    for w in ideal_basis:
        for j in range(nB):
            if any(project(V.br(V.b_basis(j), w))) or any(project(V.br(w, V.b_basis(j)))):
                raise QuotientIllDefined(f"bracket with {V.b_label(w)} leaves the ideal")
        for i in range(V.A.dim):
            if any(project(V.act(V.a_basis(i), w))):
                raise QuotientIllDefined(f"A-action on {V.b_label(w)} leaves the ideal")
            if any(V.anc(w, V.a_basis(i))):
                raise QuotientIllDefined(f"{V.b_label(w)} acts nontrivially on A")
    bracket = tuple(tuple(tuple(project(V.br(u, v))) for v in reps) for u in reps)
    action = tuple(tuple(tuple(project(V.act(V.a_basis(i), u))) for u in reps) for i in range(V.A.dim))
    anchor = tuple(tuple(tuple(V.anc(u, V.a_basis(i))) for i in range(V.A.dim)) for u in reps)
    projection = tuple(tuple(project(V.b_basis(j))) for j in range(nB))
    return LieAlgebroid(V.A, q, bracket, action, anchor, projection, tuple(tuple(r) for r in reps))


# -- one-dimensional modules --------------------------------------------------------


@dataclass(frozen=True)
class ModuleCheck:
    passed: bool
    violated: str | None = None
    witness: tuple | None = None


@dataclass(frozen=True)
class OneDimModules:
    """Rule for the one-dimensional modules ``C v_lambda`` of ``B / A d(A)``.

    ``b`` acts by ``lambda``, ``1_A`` by 1 and the maximal ideal of ``A`` by 0.
    """

    V: VertexAlgebroid
    Q: LieAlgebroid
    residues: tuple  # residue of each basis element of A

    def standard_action(self):
        return list(self.residues)

    def verify(self, lam, algebra_action=None) -> ModuleCheck:
        """Check the Lie algebroid module identities on ``C v``.

        ``algebra_action[i]`` is the scalar by which ``e_i`` acts; ``lam``
        is the scalar for the class of the generator (and all of ``Q``
        when ``Q`` is one-dimensional).
        """
        A, Q = self.V.A, self.Q
        lam = GaussianRational.coerce(lam)
        rho = [GaussianRational.coerce(c) for c in (algebra_action or self.residues)]
        if len(rho) != A.dim:
            raise BadModuleData(f"expected {A.dim} algebra scalars, got {len(rho)}")
        if Q.Q_dim != 1:
            raise BadModuleData("quotient is not one-dimensional")

        def rho_of(x):
            return sum((c * r for c, r in zip(x, rho)), ZERO)

        def lam_of(q):
            return q[0] * lam

        if rho_of(A.one) != ONE:
            return ModuleCheck(False, "1_A w = w", (A.labels[A.unit_index],))
        for i, k in itertools.product(range(A.dim), repeat=2):
            if rho_of(A.multiply(A.basis(i), A.basis(k))) != rho[i] * rho[k]:
                return ModuleCheck(False, "a(a'w) = (a*a')w", (A.labels[i], A.labels[k]))
        u = [ONE]
        for i in range(A.dim):
            a = A.basis(i)
            # u(aw) - a(uw) = (ua)w; the left side vanishes on a line
            if rho_of(Q.anc(u, a)):
                return ModuleCheck(False, "u(aw) - a(uw) = (ua)w", (A.labels[i],))
            if rho[i] * lam_of(u) != lam_of(Q.act(a, u)):
                return ModuleCheck(False, "a(uw) = (au)w", (A.labels[i],))
        return ModuleCheck(True)


def one_dim_modules(V: VertexAlgebroid) -> OneDimModules:
    Q = lie_algebroid_quotient(V)
    prof = local_profile(V.A)
    rows = [list(col) for col in zip(V.A.one, *prof.radical_basis)]
    residues = []
    for i in range(V.A.dim):
        sol = solve(rows, V.a_basis(i), 1 + prof.radical_dim)
        residues.append(sol[0])
    return OneDimModules(V, Q, tuple(residues))
