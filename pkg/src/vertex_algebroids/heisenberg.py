"""The rank-one Heisenberg vertex algebra ``M(1)`` and the comparison map to ``V_B / (a')``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebroid import VertexAlgebroid
from .leibniz import find_cyclic_generator, new_leibniz
from .linalg import Subspace, add_into, solve
from .pbw import PBWSpace, ordered_words
from .scalars import ONE, GaussianRational, sqrt_if_square
from .vertex import GradedVA, build_vb, radical_vectors

__all__ = [
    "partition_count",
    "partitions_pentagonal",
    "partitions_enumerated",
    "HeisenbergLie",
    "FockTruncation",
    "build_m1",
    "VAHomomorphismReport",
    "NotHeisenbergFamily",
    "NoSquareRoot",
    "heisenberg_check",
]


class NotHeisenbergFamily(ValueError):
    pass


class NoSquareRoot(ValueError):
    pass


# -- partitions -------------------------------------------------------------------


@lru_cache(maxsize=None)
def partitions_pentagonal(n: int) -> int:
    """Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partitions_pentagonal(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partitions_pentagonal(n - g2)
        k += 1
    return total


def partitions_enumerated(n: int) -> int:
    """Count by listing every non-increasing sequence of positive parts."""

    def rec(remaining, largest):
        if remaining == 0:
            return 1
        return sum(rec(remaining - part, part) for part in range(min(remaining, largest), 0, -1))

    return rec(n, n)


def partition_count(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = partitions_pentagonal(n), partitions_enumerated(n)
    if a != b:
        raise ArithmeticError(f"partition counts disagree at n={n}: {a} vs {b}")
    return a


# -- Fock space -----------------------------------------------------------------------

CENTRAL = (0, 1)


class HeisenbergLie:
    """``h(m)`` has id ``(m, 0)`` and degree ``-m``; ``[h(m), h(n)] = m delta_{m+n,0} k``."""

    @staticmethod
    def degree(o) -> int:
        return -o[0]

    @staticmethod
    def weight(g) -> int:
        return 1

    @staticmethod
    def reduce_raw(g, m):
        return {(m, 0): ONE}

    @staticmethod
    def bracket(o1, o2):
        if o1 == CENTRAL or o2 == CENTRAL:
            return {}
        m, n = o1[0], o2[0]
        if m + n == 0 and m:
            return {CENTRAL: GaussianRational(m)}
        return {}

    @staticmethod
    def name(o) -> str:
        return "k" if o == CENTRAL else f"h({o[0]})"


@dataclass
class FockTruncation:
    N: int
    space: PBWSpace
    words: dict

    def dim(self, n) -> int:
        return len(self.words[n])

    def h(self, m: int, vec: dict) -> dict:
        return self.space.apply_vec((m, 0), vec)

    def vacuum(self):
        return {((), None): ONE}

    def raw_word(self, key):
        return tuple((0, o[0]) for o in key[0])

    def product(self, u_key, n, v: dict) -> dict:
        return self.space.product(self.raw_word(u_key), n, v)

    def commutator_failures(self, bound: int | None = None):
        """Triples ``(m, n, key)`` where ``[h(m), h(n)] w != m delta_{m+n,0} w``."""
        bound = self.N if bound is None else bound
        bad = []
        for deg, keys in self.words.items():
            for key in keys:
                w = {key: ONE}
                for m in range(-bound, bound + 1):
                    for n in range(-bound, bound + 1):
                        if not (0 <= deg - m - n <= self.N and 0 <= deg - n <= self.N and 0 <= deg - m <= self.N):
                            continue
                        lhs = self.h(m, self.h(n, w))
                        add_into(lhs, self.h(n, self.h(m, w)), -ONE)
                        if m + n == 0 and m:
                            add_into(lhs, w, GaussianRational(-m))
                        if lhs:
                            bad.append((m, n, key))
        return bad


def build_m1(N: int) -> FockTruncation:
    if N < 0:
        raise ValueError("N must be non-negative")
    space = PBWSpace(HeisenbergLie, N, lambda o, tail: {}, central=CENTRAL)
    creators = {d: [(-d, 0)] for d in range(1, N + 1)}
    words = {n: [(w, None) for w in ordered_words(creators, n)] for n in range(N + 1)}
    return FockTruncation(N, space, words)


# -- comparison map -----------------------------------------------------------------------


@dataclass
class VAHomomorphismReport:
    family: str
    N: int
    c: GaussianRational | None
    rescale_factor: GaussianRational | None
    quotient_dims: list
    partition_dims: list
    certificates: list
    bijective: list
    intertwining_checked: int = 0
    intertwining_failure: tuple | None = None
    intertwining_skipped: bool = False
    notes: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return (
            all(self.bijective)
            and self.quotient_dims == self.partition_dims
            and all(c == "exact" for c in self.certificates)
            and self.intertwining_failure is None
            and not self.intertwining_skipped
        )


def _generator(V: VertexAlgebroid):
    form = find_cyclic_generator(new_leibniz(V.B_dim, V.bracket0))
    if form is None:
        return V.b_basis(0)
    return list(form.generator)


def _residue_mod(V, x, rad):
    rows = [list(col) for col in zip(V.A.one, *rad)]
    sol = solve(rows, list(x), 1 + len(rad))
    return None if sol is None else sol[0]


def heisenberg_check(V: VertexAlgebroid, N: int = 6, length_cap: int = 8, G: GradedVA | None = None, strict=False):
    """Compare ``V_B / (a')`` with ``M(1)`` in degrees ``0..N``.

    ``a'`` is the nilradical of ``A``.  Raises NotHeisenbergFamily when the
    residue ``c`` of ``b_1 b`` is zero.  When ``c`` is not a square in
    Q(i) the dimension comparison still runs and the product check is
    skipped (or NoSquareRoot is raised with ``strict=True``).
    """
    rad = radical_vectors(V)
    b = _generator(V)
    bb = V.pair(b, b)
    c = _residue_mod(V, bb, rad)
    notes = []
    if c is None:
        notes.append("b_1 b has no residue: A modulo its radical is not one-dimensional")
    elif not c:
        raise NotHeisenbergFamily("b_1 b lies in the radical of A (c = 0)")
    s = sqrt_if_square(c) if c is not None else None
    if c is not None and s is None:
        if strict:
            raise NoSquareRoot(f"c = {c} is not a square in Q(i)")
        notes.append(f"c = {c} is not a square in Q(i); product check skipped")
    if G is None:
        G = build_vb(V, N, length_cap)
    Q = G.degree0_ideal_quotient(rad)
    F = build_m1(N)
    qdims = [Q.dim(n) for n in range(N + 1)]
    pdims = [partition_count(n) for n in range(N + 1)]
    certs = [Q.certificates.get(n, "upper") for n in range(N + 1)]
    report = VAHomomorphismReport(V.name, N, c, s, qdims, pdims, certs, [], notes=notes)

    scale = s.inv() if s else ONE
    loop, sp = G.loop, G.space
    nA = V.A.dim

    def bbar_mode(m, vec):
        return sp.apply_combo(loop.element([x * scale for x in b], m, nA), vec)

    def f_key(key):
        vec = G.vacuum()
        for o in reversed(key[0]):
            vec = bbar_mode(o[0], vec)
        return vec

    images = {}
    for n in range(N + 1):
        img = [Q.reduce(f_key(k)) for k in F.words[n]]
        for k, v in zip(F.words[n], img):
            images[k] = v
        r = Subspace(img).dim if img else 0
        report.bijective.append(r == len(F.words[n]) == qdims[n])
    if s is None:
        report.intertwining_skipped = True
        return report

    def f_vec(vec):
        out = {}
        for k, co in vec.items():
            add_into(out, images[k], co)
        return out

    small = [k for n in range(min(2, N) + 1) for k in F.words[n]]
    for u in small:
        du = F.space.key_degree(u)
        coeff = scale ** len(u[0])
        for v in small:
            dv = F.space.key_degree(v)
            for n in range(du + dv - 1 - N, du + dv):
                lhs = Q.reduce(f_vec(F.product(u, n, {v: ONE})))
                rhs = {}
                # f(u) = coeff * b(m1) ... b(mk) 1 as a sum of raw words of V_B
                for word, wc in _expand_b_word(V, b, [o[0] for o in u[0]]):
                    add_into(rhs, sp.product(word, n, images[v]), wc * coeff)
                rhs = Q.reduce(rhs)
                report.intertwining_checked += 1
                if lhs != rhs:
                    report.intertwining_failure = (F.space.key_degree(u), u, n, v)
                    return report
    return report


def _expand_b_word(V, b, modes):
    """Expand ``b(m1)...b(mk) 1`` (b a B-vector) into raw words over basis generators."""
    nA = V.A.dim
    terms = [((), ONE)]
    for m in modes:
        new = []
        for word, c in terms:
            for j, bj in enumerate(b):
                if bj:
                    new.append((word + ((nA + j, m),), c * bj))
        terms = new
    return terms
