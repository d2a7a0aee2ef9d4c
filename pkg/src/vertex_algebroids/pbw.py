"""Normal-ordered PBW spaces for graded Lie algebras and the iterate formula.

A :class:`PBWSpace` has basis keys ``(word, tail)`` where ``word`` is a
sorted tuple of creation operators (positive degree) and ``tail`` labels a
vector of the degree-0 "ground" space on which degree-0 operators act
through a user-supplied rule.  Vectors are sparse dicts over keys.  Any
operator is moved to the right through the word with its commutators, so
the only data needed is the Lie bracket and the ground rule.
"""

from __future__ import annotations

from math import comb

from .linalg import add_into
from .scalars import ONE, GaussianRational

__all__ = ["PBWSpace", "LengthOverflow", "DegreeOverflow", "binom", "ordered_words"]


class DegreeOverflow(ValueError):
    pass


class LengthOverflow(ValueError):
    pass


def binom(m: int, i: int) -> int:
    """Generalised binomial coefficient ``m(m-1)...(m-i+1)/i!`` for any integer ``m``."""
    if i < 0:
        return 0
    if m >= 0:
        return comb(m, i)
    return (-1) ** i * comb(i - m - 1, i)


class PBWSpace:
    """Graded PBW space truncated at ``max_degree``.

    ``lie`` must provide ``degree(o)``, ``bracket(o1, o2)`` (dict of
    operators) and ``reduce_raw(g, m)``, ``weight(g)``; ``ground(o, tail)``
    returns the dict of tails for a degree-0 operator on an empty word.
    Operators of negative degree kill every empty-word key.
    """

    def __init__(self, lie, max_degree: int, ground, tails=(None,), central=None):
        self.lie = lie
        self.N = max_degree
        self.ground = ground
        self.tails = tuple(tails)
        self.central = central
        self._apply = {}
        self._prod = {}

    # -- basic helpers ------------------------------------------------------------
    def word_degree(self, word) -> int:
        return -sum(o[0] for o in word)

    def key_degree(self, key) -> int:
        return -sum(o[0] for o in key[0])

    def vec_degree(self, vec):
        for k in vec:
            return self.key_degree(k)
        return None

    # -- operator action -------------------------------------------------------------
    def apply(self, o, key) -> dict:
        word, tail = key
        d = self.lie.degree(o)
        target = self.key_degree(key) + d
        if target > self.N or target < 0:
            return {}
        if o == self.central:
            return {key: ONE}
        ck = (o, word, tail)
        hit = self._apply.get(ck)
        if hit is not None:
            return hit
        if d > 0 and (not word or o <= word[0]):
            res = {((o,) + word, tail): ONE}
        elif not word:
            res = {} if d < 0 else {((), t): c for t, c in self.ground(o, tail).items() if c}
        else:
            g1, rest = word[0], word[1:]
            res = {}
            for k, c in self.apply(o, (rest, tail)).items():
                add_into(res, self.apply(g1, k), c)
            for o2, c in self.lie.bracket(o, g1).items():
                add_into(res, self.apply(o2, (rest, tail)), c)
        self._apply[ck] = res
        return res

    def apply_vec(self, o, vec: dict) -> dict:
        out = {}
        for k, c in vec.items():
            r = self.apply(o, k)
            if r:
                add_into(out, r, c)
        return out

    def apply_combo(self, ops: dict, vec: dict) -> dict:
        """Apply a linear combination of operators."""
        out = {}
        for o, c in ops.items():
            r = self.apply_vec(o, vec)
            if r:
                add_into(out, r, c)
        return out

    def apply_raw(self, g: int, m: int, vec: dict) -> dict:
        return self.apply_combo(self.lie.reduce_raw(g, m), vec)

    def apply_word(self, ops, vec: dict) -> dict:
        """Apply basis operators right to left: ``ops[0] ops[1] ... vec``."""
        for o in reversed(ops):
            vec = self.apply_vec(o, vec)
            if not vec:
                break
        return vec

    # -- vertex operators of words ----------------------------------------------------
    def raw_degree(self, raw_word) -> int:
        return sum(self.lie.weight(g) - m - 1 for g, m in raw_word)

    def product(self, raw_word, n: int, vec: dict) -> dict:
        """``u_n vec`` for ``u = x1(m1) x2(m2) ... 1`` given as raw modes.

        Uses the iterate formula
        ``(x(m) w)_n = sum_i (-1)^i C(m,i) [x(m-i) w_(n+i) - (-1)^m w_(m+n-i) x(i)]``
        with ``1_n = delta_{n,-1}``.
        """
        out = {}
        for k, c in vec.items():
            r = self._product_key(tuple(raw_word), n, k)
            if r:
                add_into(out, r, c)
        return out

    def _product_key(self, raw_word, n, key) -> dict:
        if not raw_word:
            return {key: ONE} if n == -1 else {}
        vdeg = self.key_degree(key)
        final = self.raw_degree(raw_word) + vdeg - n - 1
        if final < 0:
            return {}
        if final > self.N:
            raise DegreeOverflow(f"product lands in degree {final} > {self.N}")
        ck = (raw_word, n, key)
        hit = self._prod.get(ck)
        if hit is not None:
            return hit
        (g, m), rest = raw_word[0], raw_word[1:]
        wt = self.lie.weight(g)
        rdeg = self.raw_degree(rest)
        out = {}
        # x(m-i) (w_(n+i) v): the inner vector needs degree >= 0
        top = rdeg + vdeg - n - 1
        for i in range(0, max(top, -1) + 1):
            c = binom(m, i) * (-1) ** i
            if not c:
                continue
            inner = self._product_key(rest, n + i, key)
            if inner:
                add_into(out, self.apply_raw(g, m - i, inner), GaussianRational(c))
        # - (-1)^m w_(m+n-i) (x(i) v): x(i) v needs degree >= 0
        sign = -1 if m % 2 == 0 else 1
        for i in range(0, vdeg + wt):
            c = binom(m, i) * (-1) ** i * sign
            if not c:
                continue
            xv = self.apply_raw(g, i, {key: ONE})
            if xv:
                add_into(out, self.product(rest, m + n - i, xv), GaussianRational(c))
        self._prod[ck] = out
        return out


def ordered_words(creators_by_degree: dict, n: int, max_len: int | None = None):
    """All sorted tuples of creators with total degree ``n``.

    ``creators_by_degree[d]`` lists the creators of degree ``d`` (ids sort
    higher degrees first).
    """
    ops = sorted(o for d in creators_by_degree for o in creators_by_degree[d] if d <= n)
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for idx in range(start, len(ops)):
            o = ops[idx]
            d = -o[0]
            if d <= remaining:
                acc.append(o)
                rec(idx, remaining - d, acc)
                acc.pop()

    rec(0, n, [])
    return out

