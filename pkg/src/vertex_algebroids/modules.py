"""Induced modules ``M(U)``, ``M_B(U) = M(U) / U(L) W(U)`` and ``L(U) = M_B(U) / J(U)``.

``U = C v`` is one-dimensional: ``A`` acts through ``rho`` (by default the
residue map, so the maximal ideal acts as zero) and the class of the
generator of ``B / A d(A)`` acts by ``lambda``.  ``M(U)`` has the PBW basis
of sorted creator words applied to ``v``.

``W(U)`` is spanned by the modes ``y_n v`` of the relation vectors ``y``.
We take ``y`` in the span ``Y`` of ``E`` and everything the non-creating
modes ``x(i)``, ``i >= 0``, make from it inside ``V_L``.  By the commutator
formula ``x(m) y_n v = sum_i C(m,i) (x_i y)_(m+n-i) v`` for ``x(m)`` killing
``v``, the span of these modes is stable under all non-creating operators,
so ``U(L) W(U)`` is obtained by applying creators only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebroid import BadModuleData, VertexAlgebroid, one_dim_modules
from .linalg import Subspace, add_into, dense_to_sparse, nullspace
from .loop import LoopAlgebra
from .pbw import PBWSpace, ordered_words
from .scalars import ONE, ZERO, GaussianRational

__all__ = ["GradedModule", "induced_module", "relation_span_Y", "BadModuleData"]


def _raw_ground(V: VertexAlgebroid, nA: int):
    """Degree-0 operators on ``t1(-1)...tk(-1) 1`` in ``V_L`` (tails are sorted index tuples)."""

    def ground(o, tail):
        g = o[1]
        if g < nA:
            return {tuple(sorted(tail + (g,))): ONE}
        u = V.b_basis(g - nA)
        out = {}
        for j, t in enumerate(tail):
            img = V.anc(u, V.a_basis(t))
            rest = tail[:j] + tail[j + 1 :]
            for k, c in enumerate(img):
                if c:
                    add_into(out, {tuple(sorted(rest + (k,))): c})
        return out

    return ground


def relation_span_Y(V: VertexAlgebroid, loop: LoopAlgebra | None = None):
    """``Y``: ``E`` closed under all modes ``x(i)``, ``i >= 0``, as vectors of ``V_L``.

    Returns ``(space, basis)`` where ``space`` is the raw PBW space (degrees
    0 and 1, tails are tuples of A-indices) and ``basis`` a list of vectors.
    """
    loop = loop or LoopAlgebra(V)
    nA = V.A.dim
    sp = PBWSpace(loop, 1, _raw_ground(V, nA))
    vac = {((), ()): ONE}

    def from_B(u):
        return sp.apply_combo(loop.element(u, -1, nA), vac)

    seeds = []
    unit = V.A.unit_index
    seeds.append({((), (unit,)): ONE, ((), ()): -ONE})
    for i in range(nA):
        for k in range(i, nA):
            v = {((), (i, k)): ONE}
            for t, c in enumerate(V.A.multiply(V.a_basis(i), V.a_basis(k))):
                if c:
                    add_into(v, {((), (t,)): -c})
            seeds.append(v)
    for i in range(nA):
        for j in range(V.B_dim):
            u = V.b_basis(j)
            v = sp.apply_raw(i, -1, from_B(u))
            add_into(v, from_B(V.act(V.a_basis(i), u)), -ONE)
            if v:
                seeds.append(v)
    ops = [o for d in (-1, 0) for o in loop.basis(d) if d < 0 or o[1] >= nA]
    spaces = {0: Subspace(), 1: Subspace()}
    basis, queue = [], []
    for s in seeds:
        d = sp.vec_degree(s)
        if s and spaces[d].add(s):
            basis.append(s)
            queue.append(s)
    while queue:
        v = queue.pop()
        for o in ops:
            w = sp.apply_vec(o, v)
            if not w:
                continue
            d = sp.vec_degree(w)
            if spaces[d].add(w):
                basis.append(w)
                queue.append(w)
    return sp, basis


def _raw_word_of(loop, key):
    word, tail = key
    return tuple(loop.mode(o) for o in word) + tuple((t, -1) for t in tail)


@dataclass
class GradedModule:
    V: VertexAlgebroid
    lam: GaussianRational
    rho: tuple
    N: int
    loop: LoopAlgebra
    space: PBWSpace
    words: dict
    relations: dict  # U(L) W(U) per degree
    J: dict  # J(U) per degree, as subspaces containing the relations
    J_pairing_dims: dict

    def dim_M(self, n):
        return len(self.words[n])

    def dim_MB(self, n):
        return len(self.words[n]) - self.relations[n].dim

    def dim_J(self, n):
        return self.J[n].dim - self.relations[n].dim

    def dim_L(self, n):
        return len(self.words[n]) - self.J[n].dim

    def character(self):
        return [(n, self.dim_MB(n), self.dim_L(n)) for n in range(self.N + 1)]

    def lowering_ops(self, n):
        return [o for d in range(1, n + 1) for o in self.loop.basis(-d)]

    def radical_witness(self):
        """A nonzero ``L(U)`` vector killed by every lowering operator, or None."""
        for n in range(1, self.N + 1):
            T = self.J[n]
            for key in self.words[n]:
                v = T.reduce({key: ONE})
                if not v:
                    continue
                if all(
                    not self.J[n + self.loop.degree(o)].reduce(self.space.apply_vec(o, v))
                    for o in self.lowering_ops(n)
                ):
                    return (n, key)
        return None

    def fixpoint_failures(self):
        bad = []
        ops = {d: self.loop.basis(d) for d in range(-self.N, self.N + 1)}
        for n in range(self.N + 1):
            for r in self.relations[n].basis():
                for d, os in ops.items():
                    if 0 <= n + d <= self.N:
                        for o in os:
                            w = self.space.apply_vec(o, r)
                            if w and not self.relations[n + d].contains(w):
                                bad.append((n, self.loop.name(o)))
        return bad


def _module_ground(V, rho, lam_of_b, nA):
    def ground(o, tail):
        g = o[1]
        c = rho[g] if g < nA else lam_of_b[g - nA]
        return {tail: c} if c else {}

    return ground


def _kernel_vectors(images, keys):
    """Kernel of ``q_i -> images[i]`` as combinations of ``keys``."""
    coords = sorted({k for im in images for k in im})
    idx = {k: r for r, k in enumerate(coords)}
    rows = [[ZERO] * len(keys) for _ in coords]
    for col, im in enumerate(images):
        for k, c in im.items():
            rows[idx[k]][col] = c
    if not coords:
        rows = []
    ns = nullspace(rows, len(keys)) if rows else [[ONE if j == i else ZERO for j in range(len(keys))] for i in range(len(keys))]
    out = []
    for v in ns:
        out.append({keys[j]: c for j, c in enumerate(v) if c})
    return out


def induced_module(V: VertexAlgebroid, lam, N: int = 4, algebra_action=None) -> GradedModule:
    """Build ``M(U)``, ``M_B(U)`` and ``L(U)`` in degrees ``0..N``."""
    lam = GaussianRational.coerce(lam)
    odm = one_dim_modules(V)
    check = odm.verify(lam, algebra_action)
    if not check.passed:
        raise BadModuleData(f"not a module: {check.violated} fails at {check.witness}")
    rho = tuple(GaussianRational.coerce(c) for c in (algebra_action or odm.residues))
    nA = V.A.dim
    lam_of_b = [odm.Q.projection[j][0] * lam for j in range(V.B_dim)]
    loop = LoopAlgebra(V)
    space = PBWSpace(loop, N, _module_ground(V, rho, lam_of_b, nA))
    creators = {d: loop.basis(d) for d in range(1, N + 1)}
    words = {n: [(w, None) for w in ordered_words(creators, n)] for n in range(N + 1)}
    v0 = {((), None): ONE}

    # W(U) from the modes of Y
    raw_sp, Y = relation_span_Y(V, loop)
    relations = {n: Subspace() for n in range(N + 1)}
    for y in Y:
        dy = raw_sp.vec_degree(y)
        for n in range(dy - 1 - N, dy):
            out = {}
            for key, c in y.items():
                add_into(out, space.product(_raw_word_of(loop, key), n, v0), c)
            if out:
                relations[dy - n - 1].add(out)
    for n in range(1, N + 1):
        for d in range(1, n + 1):
            for g in creators[d]:
                for r in relations[n - d].basis():
                    w = space.apply_vec(g, r)
                    if w:
                        relations[n].add(w)

    # J(U) by recursion: w in J_n iff every lowering operator sends it into J
    J = {0: relations[0].copy()}
    for n in range(1, N + 1):
        T = relations[n].copy()
        free = [k for k in words[n] if k not in T.rows]
        images = []
        for k in free:
            v = T.reduce({k: ONE})
            im = {}
            for d in range(1, n + 1):
                for o in loop.basis(-d):
                    w = J[n - d].reduce(space.apply_vec(o, v))
                    for kk, c in w.items():
                        im[(o, kk)] = c
            images.append(im)
        for vec in _kernel_vectors(images, free):
            T.add(vec)
        J[n] = T

    # second computation: pairing against all lowering words into degree 0
    pairing_dims = {0: len(words[0]) - relations[0].dim}
    for n in range(1, N + 1):
        seqs = _lowering_sequences(loop, n)
        free = [k for k in words[n] if k not in relations[n].rows]
        rows = []
        for seq in seqs:
            row = []
            for k in free:
                w = relations[0].reduce(space.apply_word(seq, relations[n].reduce({k: ONE})))
                row.append(w.get(((), None), ZERO))
            rows.append(row)
        pairing_dims[n] = Subspace(dense_to_sparse(r) for r in rows).dim
    return GradedModule(V, lam, rho, N, loop, space, words, relations, J, pairing_dims)


def _lowering_sequences(loop, n):
    """Ordered tuples of lowering basis operators with total degree ``-n``."""
    out = []
    for parts in _compositions(n):
        for combo in itertools.product(*(loop.basis(-p) for p in parts)):
            out.append(combo)
    return out


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest
