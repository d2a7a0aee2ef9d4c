"""Truncated graded pieces of the vertex algebra ``V_B = V_L / I_B``.

Working space.  ``V_L`` is the vacuum module of the loop algebra ``L``;
its degree-0 creators ``x(-1)`` (x in A) commute with each other, so we
collapse every string of them at the vacuum using the relations
``x(-1)y(-1)1 = (x*y)(-1)1`` and ``1_A(-1)1 = 1``, which already lie in
``I_B``.  The result ``R`` has the finite basis

    g1 g2 ... gk t(-1)1      (g_i creators of positive degree, sorted; t in A)

and is still an ``L``-module.  ``K_n`` is the image of ``I_B`` in ``R_n``.

Closure.  Writing ``I_B = C[D] U(L+) Y`` with ``Y`` concentrated in degrees
0 and 1 gives, for ``n >= 2``,

    K_n = sum_g g K_{n - deg g} + D K_{n-1},

while ``K_0 + K_1`` is the closure of the seeds under every operator that
keeps the degree in ``{0, 1}``.  The seeds are the images of ``E_1`` and of
``D E_0``; ``E_0`` itself is already zero in ``R``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import radical
from .algebroid import VertexAlgebroid
from .linalg import Subspace, add_into, solve
from .loop import LoopAlgebra
from .pbw import DegreeOverflow, LengthOverflow, PBWSpace, ordered_words
from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "GradedVA",
    "CapTooSmall",
    "DegreeOverflow",
    "LengthOverflow",
    "build_vb",
    "DegreeDim",
]


class CapTooSmall(ValueError):
    """The word-length cap cannot hold every normal word up to the requested degree."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


@dataclass(frozen=True)
class DegreeDim:
    degree: int
    dim: int
    certificate: str  # "exact" or "upper"


def _word_length(key, unit) -> int:
    word, tail = key
    return len(word) + (0 if tail == unit else 1)


class GradedVA:
    """``V_B`` (or a quotient of it by a further ideal) in degrees ``0..N``."""

    def __init__(self, V: VertexAlgebroid, N: int, length_cap: int):
        self.V = V
        self.N = N
        self.length_cap = length_cap
        self.loop = LoopAlgebra(V)
        self.nA = V.A.dim
        self.unit = V.A.unit_index
        self.space = PBWSpace(self.loop, N, self._ground, tails=range(self.nA))
        self.creators = {d: self.loop.basis(d) for d in range(1, N + 1)}
        self.words = {}
        for n in range(N + 1):
            keys = []
            for w in ordered_words(self.creators, n):
                for t in range(self.nA):
                    keys.append((w, t))
            self.words[n] = keys
        self.relations = {n: Subspace() for n in range(N + 1)}
        self.certificates = {}
        self.parent = None
        self.ideal_seeds = ()

    # -- ground rule on the vacuum sector ---------------------------------------------
    def _ground(self, o, tail):
        V, g = self.V, o[1]
        t = V.a_basis(tail)
        if g < self.nA:
            vec = V.A.multiply(V.a_basis(g), t)
        else:
            vec = V.anc(V.b_basis(g - self.nA), t)
        return {k: c for k, c in enumerate(vec) if c}

    # -- elements -------------------------------------------------------------------
    def vacuum(self) -> dict:
        return {((), self.unit): ONE}

    def from_A(self, x) -> dict:
        """``x(-1) 1`` for ``x`` in A."""
        return {((), k): GaussianRational.coerce(c) for k, c in enumerate(x) if c}

    def from_B(self, u) -> dict:
        """``u(-1) 1`` for ``u`` in B."""
        return self.space.apply_combo(self.loop.element(u, -1, self.nA), self.vacuum())

    def generator(self, g: int) -> dict:
        """The degree-0 or degree-1 vector of combined basis element ``g``."""
        if g < self.nA:
            return self.from_A(self.V.a_basis(g))
        return self.from_B(self.V.b_basis(g - self.nA))

    def degree_of(self, vec):
        d = self.space.vec_degree(vec)
        return 0 if d is None else d

    def raw_word(self, key):
        """Raw modes whose ordered product on the vacuum gives ``key``."""
        word, tail = key
        raw = [self.loop.mode(o) for o in word]
        if tail != self.unit:
            raw.append((tail, -1))
        return tuple(raw)

    # -- reduction --------------------------------------------------------------------
    def reduce(self, vec: dict) -> dict:
        out = {}
        by_deg = {}
        for k, c in vec.items():
            by_deg.setdefault(self.space.key_degree(k), {})[k] = c
        for d, part in by_deg.items():
            if d > self.N:
                raise DegreeOverflow(f"degree {d} > {self.N}")
            add_into(out, self.relations[d].reduce(part))
        return out

    def is_zero(self, vec) -> bool:
        return not self.reduce(vec)

    def quotient_basis(self, n: int) -> list:
        piv = self.relations[n].rows
        return [k for k in self.words[n] if k not in piv]

    def dim(self, n: int) -> int:
        return len(self.words[n]) - self.relations[n].dim

    def coords(self, vec, n: int) -> list:
        r = self.reduce(vec)
        return [r.get(k, ZERO) for k in self.quotient_basis(n)]

    # -- translation -------------------------------------------------------------------
    def D_key(self, key) -> dict:
        word, tail = key
        if self.space.key_degree(key) + 1 > self.N:
            raise DegreeOverflow(f"D leaves the window at degree {self.N}")
        sp, loop = self.space, self.loop
        base = {((), tail): ONE}
        out = {}
        # t(-1) -> t(-2)
        tv = sp.apply_raw(tail, -2, {((), self.unit): ONE})
        if tv:
            add_into(out, sp.apply_word(word, tv))
        for i, o in enumerate(word):
            v = sp.apply_word(word[i + 1 :], base)
            v = sp.apply_combo(loop.d_action(o), v)
            if v:
                add_into(out, sp.apply_word(word[:i], v))
        return out

    def translation_D(self, vec: dict) -> dict:
        out = {}
        for k, c in vec.items():
            add_into(out, self.D_key(k), c)
        return out

    # -- vertex algebra products ----------------------------------------------------------
    def product(self, u: dict, n: int, v: dict, reduce: bool = True) -> dict:
        """``u_n v`` for vectors of ``R``; both sides may be unreduced."""
        out = {}
        for k, c in u.items():
            if _word_length(k, self.unit) > self.length_cap:
                raise LengthOverflow(f"left factor longer than the cap {self.length_cap}")
            add_into(out, self.space.product(self.raw_word(k), n, v), c)
        return self.reduce(out) if reduce else out

    # -- closure --------------------------------------------------------------------------
    def _low_ops(self):
        ops = []
        for d in (-1, 0, 1):
            ops.extend(self.loop.basis(d))
        return ops

    def _close(self, seeds, upto: int):
        """Add ``seeds`` to the relations and close them in degrees ``0..upto``."""
        rel = self.relations
        queue = []
        for s in seeds:
            d = self.degree_of(s)
            if d <= min(1, upto) and s and rel[d].add(s):
                queue.append(s)
            elif d > 1:
                rel[d].add(s)
        low = self._low_ops()
        while queue:
            v = queue.pop()
            d = self.degree_of(v)
            for o in low:
                nd = d + self.loop.degree(o)
                if 0 <= nd <= min(1, upto):
                    w = self.space.apply_vec(o, v)
                    if w and rel[nd].add(w):
                        queue.append(w)
            if d == 0 and upto >= 1:
                w = self.translation_D(v)
                if w and rel[1].add(w):
                    queue.append(w)
        for n in range(2, upto + 1):
            self._raise_into(n)

    def _raise_into(self, n: int):
        rel = self.relations
        for d in range(1, n + 1):
            for g in self.creators[d]:
                for r in rel[n - d].basis():
                    w = self.space.apply_vec(g, r)
                    if w:
                        rel[n].add(w)
        for r in rel[n - 1].basis():
            w = self.translation_D(r)
            if w:
                rel[n].add(w)

    def seeds_E(self) -> list:
        V, sp = self.V, self.space
        seeds = []
        vac = self.vacuum()
        # E_1: a(-1) u(-1) 1 - (a.u)(-1) 1
        for i in range(self.nA):
            for j in range(V.B_dim):
                u = V.b_basis(j)
                lhs = sp.apply_raw(i, -1, self.from_B(u))
                rhs = self.from_B(V.act(V.a_basis(i), u))
                seeds.append(add_into(dict(lhs), rhs, -ONE))
        # D applied to E_0 before collapsing: x(-2)y(-1)1 + x(-1)y(-2)1 - (x*y)(-2)1
        for i in range(self.nA):
            for k in range(i, self.nA):
                v = sp.apply_raw(i, -2, {((), k): ONE})
                add_into(v, sp.apply_raw(i, -1, sp.apply_raw(k, -2, vac)))
                xy = V.A.multiply(V.a_basis(i), V.a_basis(k))
                for t, c in enumerate(xy):
                    if c:
                        add_into(v, sp.apply_raw(t, -2, vac), -c)
                seeds.append(v)
        return [s for s in seeds if s]

    # -- checks ---------------------------------------------------------------------------
    def fixpoint_failures(self, limit: int | None = None) -> list:
        """Relation basis vectors that some in-window mode sends outside the relations."""
        bad = []
        ops = {d: self.loop.basis(d) for d in range(-self.N, self.N + 1)}
        for n in range(self.N + 1):
            for r in self.relations[n].basis():
                for d, os in ops.items():
                    if not 0 <= n + d <= self.N:
                        continue
                    for o in os:
                        w = self.space.apply_vec(o, r)
                        if w and not self.relations[n + d].contains(w):
                            bad.append((n, self.loop.name(o)))
                            if limit and len(bad) >= limit:
                                return bad
                if n < self.N:
                    w = self.translation_D(r)
                    if w and not self.relations[n + 1].contains(w):
                        bad.append((n, "D"))
        return bad

    def b_to_vb_matrix(self):
        """Columns: coordinates of ``f_j(-1)1`` in the degree-1 quotient basis."""
        return [self.coords(self.from_B(self.V.b_basis(j)), 1) for j in range(self.V.B_dim)]

    def to_B(self, vec):
        """Inverse of ``B -> (V_B)_1`` on a degree-1 vector, or None when not in its image."""
        cols = self.b_to_vb_matrix()
        target = self.coords(vec, 1)
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(target))]
        return solve(rows, target, len(cols))

    def to_A(self, vec):
        cols = [self.coords(self.from_A(self.V.a_basis(i)), 0) for i in range(self.nA)]
        target = self.coords(vec, 0)
        rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(target))]
        return solve(rows, target, len(cols))

    def element_from_C(self, x) -> dict:
        """Vector of ``x`` in ``A + B`` (dense, combined coordinates)."""
        out = self.from_A(x[: self.nA])
        add_into(out, self.from_B(x[self.nA :]))
        return out

    def check_skew_symmetry(self, u: dict, v: dict, n_range=None):
        """``u_n v = sum_j (-1)^(n+j+1) D^j (v_(n+j) u) / j!`` for in-window ``n``.

        Returns ``(True, None)`` or ``(False, n)``.
        """
        du, dv = self.degree_of(u), self.degree_of(v)
        top = du + dv - 1
        ns = n_range if n_range is not None else range(du + dv - 1 - self.N, top + 1)
        for n in ns:
            if not 0 <= du + dv - n - 1 <= self.N:
                continue
            lhs = self.product(u, n, v)
            rhs = {}
            j = 0
            fact = 1
            while du + dv - (n + j) - 1 >= 0:
                w = self.product(v, n + j, u, reduce=False)
                for _ in range(j):
                    w = self.translation_D(w) if w else w
                sign = -1 if (n + j + 1) % 2 else 1
                add_into(rhs, w, GaussianRational(sign) / fact)
                j += 1
                fact *= j
            if self.reduce(rhs) != lhs:
                return False, n
        return True, None

    def check_commutator(self, x: int, y: int, m: int, n: int, ws) -> tuple:
        """``[x(m), y(n)] w = (x_0 y)(m+n) w + m (x_1 y)(m+n-1) w`` on every ``w`` in ``ws``.

        ``x`` and ``y`` index the combined basis of ``A + B``.  Both sides
        are evaluated with :meth:`product`; the products ``x_0 y`` and
        ``x_1 y`` are mapped back to ``A + B`` through the degree-0/1
        identifications.
        """
        gx, gy = self.generator(x), self.generator(y)
        prods = {}
        for i in (0, 1):
            p = self.product(gx, i, gy)
            deg = self.degree_of(gx) + self.degree_of(gy) - i - 1
            if not p or deg < 0:
                prods[i] = None
                continue
            if deg == 0:
                a = self.to_A(p)
                prods[i] = self.from_A(a)
            else:
                b = self.to_B(p)
                prods[i] = self.from_B(b)
        for w in ws:
            lhs = self.product(gx, m, self.product(gy, n, w, reduce=False), reduce=False)
            add_into(lhs, self.product(gy, n, self.product(gx, m, w, reduce=False), reduce=False), -ONE)
            rhs = {}
            if prods[0]:
                add_into(rhs, self.product(prods[0], m + n, w, reduce=False))
            if prods[1] and m:
                add_into(rhs, self.product(prods[1], m + n - 1, w, reduce=False), GaussianRational(m))
            if self.reduce(lhs) != self.reduce(rhs):
                return False, w
        return True, None

    def commutator_failures(self, modes=range(-2, 3), w_degree: int = 2) -> list:
        """Run :meth:`check_commutator` on all generator pairs, modes in ``modes`` and
        quotient basis vectors ``w`` of degree at most ``w_degree`` with every
        intermediate vector inside the window."""
        ng = self.nA + self.V.B_dim
        ws = [{k: ONE} for n in range(min(w_degree, self.N) + 1) for k in self.quotient_basis(n)]
        wt = [0] * self.nA + [1] * self.V.B_dim
        bad = []
        for x in range(ng):
            for y in range(ng):
                for m in modes:
                    for n in modes:
                        ok = [
                            w
                            for w in ws
                            if all(
                                0 <= d <= self.N
                                for d in (
                                    self.degree_of(w) + wt[x] + wt[y] - m - n - 2,
                                    self.degree_of(w) + wt[y] - n - 1,
                                    self.degree_of(w) + wt[x] - m - 1,
                                )
                            )
                        ]
                        if ok and not self.check_commutator(x, y, m, n, ok)[0]:
                            bad.append((x, y, m, n))
        return bad

    def skew_symmetry_failures(self) -> list:
        ng = self.nA + self.V.B_dim
        return [
            (x, y, r[1])
            for x in range(ng)
            for y in range(ng)
            for r in [self.check_skew_symmetry(self.generator(x), self.generator(y))]
            if not r[0]
        ]

    # -- ideals -------------------------------------------------------------------------------
    def degree0_ideal_quotient(self, S) -> "GradedVA":
        """Quotient by the ideal generated by ``s(-1)1`` for ``s`` in ``S`` (vectors of A)."""
        q = GradedVA.__new__(GradedVA)
        q.__dict__.update(self.__dict__)
        q.relations = {n: s.copy() for n, s in self.relations.items()}
        q.parent = self
        q.ideal_seeds = tuple(tuple(s) for s in S)
        q.certificates = dict(self.certificates)
        q._close([q.from_A(s) for s in S], self.N)
        return q

    def ideal_dims(self) -> list:
        """Per-degree dimension of the ideal when this is a quotient of ``parent``."""
        if self.parent is None:
            return [0] * (self.N + 1)
        return [self.parent.dim(n) - self.dim(n) for n in range(self.N + 1)]

    def character(self) -> list:
        return [DegreeDim(n, self.dim(n), self.certificates.get(n, "upper")) for n in range(self.N + 1)]


def _certify(G: GradedVA):
    """Degree ``n`` is exact when caps ``L``, ``L+1``, ``L+2`` all admit the same words."""
    for n in range(G.N + 1):
        counts = [
            sum(1 for k in G.words[n] if _word_length(k, G.unit) <= cap)
            for cap in (G.length_cap, G.length_cap + 1, G.length_cap + 2)
        ]
        full = len(G.words[n])
        G.certificates[n] = "exact" if counts[0] == counts[1] == counts[2] == full else "upper"


def build_vb(V: VertexAlgebroid, N: int = 6, length_cap: int = 8) -> GradedVA:
    """Graded pieces of ``V_B`` in degrees ``0..N``.

    Normal words in degree ``n`` have at most ``n + 1`` letters, so the
    computation is exact once ``length_cap >= N + 1``; with a smaller cap
    the degrees above ``length_cap - 1`` are left uncertified and
    :class:`CapTooSmall` is raised carrying the partial result.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    G = GradedVA(V, N, length_cap)
    G._close(G.seeds_E(), N)
    _certify(G)
    if length_cap < N + 1:
        raise CapTooSmall(
            f"words of degree {length_cap} and above need more than {length_cap} letters",
            partial=G,
        )
    return G


def radical_vectors(V: VertexAlgebroid) -> list:
    return [list(r) for r in radical(V.A)]

