"""Sparse exact linear algebra over Q(i).

Vectors are plain dicts ``{key: GaussianRational}`` with no zero entries.
Keys only need to be hashable and mutually orderable.
:class:`Subspace` keeps a reduced row echelon basis so that reduction
modulo the subspace is a single pass over the vector.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "add_into",
    "axpy",
    "scale",
    "vsub",
    "vadd",
    "Subspace",
    "rank",
    "nullspace",
    "solve",
    "dense_to_sparse",
    "sparse_to_dense",
]


def add_into(target: dict, vec: dict, coeff=ONE) -> dict:
    """``target += coeff * vec`` in place; returns ``target``."""
    if coeff == ONE:
        for k, c in vec.items():
            s = target.get(k)
            if s is None:
                target[k] = c
            else:
                s = s + c
                if s:
                    target[k] = s
                else:
                    del target[k]
        return target
    for k, c in vec.items():
        t = c * coeff
        s = target.get(k)
        if s is None:
            if t:
                target[k] = t
        else:
            s = s + t
            if s:
                target[k] = s
            else:
                del target[k]
    return target


def axpy(coeff, x: dict, y: dict) -> dict:
    """Return ``coeff * x + y`` as a new dict."""
    return add_into(dict(y), x, coeff)


def scale(vec: dict, coeff) -> dict:
    if not coeff:
        return {}
    if coeff == ONE:
        return dict(vec)
    return {k: c * coeff for k, c in vec.items()}


def vadd(x: dict, y: dict) -> dict:
    return add_into(dict(x), y)


def vsub(x: dict, y: dict) -> dict:
    return add_into(dict(x), y, -ONE)


class Subspace:
    """A subspace of a sparse vector space, held in reduced echelon form."""

    def __init__(self, vectors=()):
        self.rows: dict = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def copy(self) -> "Subspace":
        s = Subspace()
        s.rows = {p: dict(r) for p, r in self.rows.items()}
        return s

    def reduce(self, vec: dict) -> dict:
        """Canonical representative of ``vec`` modulo the subspace."""
        rows = self.rows
        out = dict(vec)
        for k in [k for k in vec if k in rows]:
            c = out.get(k)
            if c:
                add_into(out, rows[k], -c)
        return out

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; returns True when the dimension grew."""
        r = self.reduce(vec)
        if not r:
            return False
        pivot = max(r)
        inv = r[pivot].inv()
        if inv != ONE:
            r = {k: c * inv for k, c in r.items()}
        for row in self.rows.values():
            c = row.get(pivot)
            if c:
                add_into(row, r, -c)
        self.rows[pivot] = r
        return True

    def pivots(self):
        return set(self.rows)

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]


def rank(vectors) -> int:
    return Subspace(vectors).dim


def dense_to_sparse(row) -> dict:
    return {j: GaussianRational.coerce(c) for j, c in enumerate(row) if c}


def sparse_to_dense(vec: dict, n: int) -> list:
    return [vec.get(j, ZERO) for j in range(n)]


def nullspace(rows, ncols: int) -> list[list]:
    """Basis of ``{x : rows @ x = 0}`` for a dense list-of-lists matrix."""
    m = [[GaussianRational.coerce(c) for c in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c].inv()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for i, p in enumerate(pivots):
            x[p] = -m[i][f]
        basis.append(x)
    return basis


def solve(rows, rhs, ncols: int):
    """One solution of ``rows @ x = rhs`` (dense), or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ns = nullspace(aug, ncols + 1)
    for v in ns:
        if v[ncols]:
            t = -v[ncols].inv()
            return [x * t for x in v[:ncols]]
    if all(not b for b in rhs):
        return [ZERO] * ncols
    return None
