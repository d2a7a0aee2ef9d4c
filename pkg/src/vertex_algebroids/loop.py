"""The graded Lie algebra ``L = L(A + B) / dhat L(A)`` of a vertex algebroid.

A raw mode is a pair ``(g, m)`` standing for ``e_g (x) t^m`` where ``g``
indexes the combined basis of ``A + B`` (A first).  Its degree is
``wt(g) - m - 1`` with ``wt = 0`` on ``A`` and ``1`` on ``B``.  In each
degree ``d`` the relations ``dhat(e_i (x) t^{-d}) = (d e_i)(-d) - d e_i(-d-1)``
are eliminated pivoting on B-coordinates first, so every basis element of
``L`` is a single raw mode.  Basis elements are identified by ``(-d, g)``,
which sorts higher degrees first.
"""

from __future__ import annotations

from .algebroid import VertexAlgebroid
from .linalg import Subspace, add_into
from .scalars import ONE, GaussianRational

__all__ = ["LoopAlgebra", "build_loop"]


class LoopAlgebra:
    def __init__(self, V: VertexAlgebroid):
        self.V = V
        self.nA = V.A.dim
        self.nB = V.B_dim
        self.ngen = self.nA + self.nB
        self.labels = tuple(V.A.labels) + tuple(V.B_labels)
        self._spaces = {}
        self._bracket = {}

    # -- gradings ---------------------------------------------------------------
    def weight(self, g: int) -> int:
        return 0 if g < self.nA else 1

    def mode_degree(self, g: int, m: int) -> int:
        return self.weight(g) - m - 1

    @staticmethod
    def degree(o) -> int:
        return -o[0]

    def mode(self, o):
        """Raw ``(g, m)`` of basis element ``o``."""
        d, g = -o[0], o[1]
        return g, self.weight(g) - d - 1

    def name(self, o) -> str:
        g, m = self.mode(o)
        return f"{self.labels[g]}({m})"

    # -- per-degree quotient ------------------------------------------------------
    def _space(self, d: int) -> Subspace:
        s = self._spaces.get(d)
        if s is None:
            s = Subspace()
            V = self.V
            for i in range(self.nA):
                rel = {}
                for k, c in enumerate(V.del_[i]):
                    if c:
                        rel[self.nA + k] = c
                if d:
                    add_into(rel, {i: GaussianRational(-d)})
                s.add(rel)
            self._spaces[d] = s
        return s

    def basis(self, d: int) -> list:
        s = self._space(d)
        return [(-d, g) for g in range(self.ngen) if g not in s.rows]

    def reduce_raw(self, g: int, m: int) -> dict:
        """``e_g (x) t^m`` as a combination of basis elements."""
        d = self.mode_degree(g, m)
        r = self._space(d).reduce({g: ONE})
        return {(-d, k): c for k, c in r.items()}

    def element(self, vec, m: int, offset: int) -> dict:
        """``x (x) t^m`` for a dense coordinate vector ``x`` (offset 0 for A, nA for B)."""
        out = {}
        for k, c in enumerate(vec):
            if c:
                add_into(out, self.reduce_raw(offset + k, m), c)
        return out

    # -- brackets -----------------------------------------------------------------
    def raw_bracket(self, g1, m1, g2, m2) -> dict:
        V, nA = self.V, self.nA
        out = {}
        if g1 < nA and g2 < nA:
            return out
        if g1 < nA:
            # [a(m), u(n)] = (a_0 u)(m+n) = -(u_0 a)(m+n)
            a, u = V.a_basis(g1), V.b_basis(g2 - nA)
            return self.element([-c for c in V.anc(u, a)], m1 + m2, 0)
        if g2 < nA:
            u, a = V.b_basis(g1 - nA), V.a_basis(g2)
            return self.element(V.anc(u, a), m1 + m2, 0)
        u, v = V.b_basis(g1 - nA), V.b_basis(g2 - nA)
        add_into(out, self.element(V.br(u, v), m1 + m2, nA))
        if m1:
            add_into(out, self.element(V.pair(u, v), m1 + m2 - 1, 0), GaussianRational(m1))
        return out

    def bracket(self, o1, o2) -> dict:
        key = (o1, o2)
        r = self._bracket.get(key)
        if r is None:
            g1, m1 = self.mode(o1)
            g2, m2 = self.mode(o2)
            r = self.raw_bracket(g1, m1, g2, m2)
            self._bracket[key] = r
        return r

    def d_action(self, o) -> dict:
        """``[D, x(m)] = -m x(m-1)``."""
        g, m = self.mode(o)
        if not m:
            return {}
        return {k: c * GaussianRational(-m) for k, c in self.reduce_raw(g, m - 1).items()}

    # -- degree-0 action on the vacuum sector ----------------------------------------
    def is_a_mode(self, o) -> bool:
        return o[1] < self.nA


def build_loop(V: VertexAlgebroid, N: int | None = None) -> LoopAlgebra:
    """The loop algebra of ``V``; degrees are materialised lazily, ``N`` pre-builds ``|d| <= N+1``."""
    L = LoopAlgebra(V)
    if N is not None:
        for d in range(-N - 1, N + 2):
            L.basis(d)
    return L
