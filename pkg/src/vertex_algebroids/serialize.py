"""JSON encodings of algebras, Leibniz algebras and vertex algebroids.

Scalars are written as canonical text (``"1/2-3i"``) and reports are
dumped with sorted keys, so equal inputs give byte-identical output.
"""

from __future__ import annotations

import json

from .algebra import FiniteAlgebra, new_algebra
from .algebroid import VertexAlgebroid
from .leibniz import LeibnizAlgebra, new_leibniz
from .scalars import GaussianRational, parse_scalar

__all__ = [
    "FormatError",
    "encode",
    "dumps",
    "algebra_to_json",
    "algebra_from_json",
    "leibniz_to_json",
    "leibniz_from_json",
    "bundle_to_json",
    "bundle_from_json",
]


class FormatError(ValueError):
    pass


def encode(x):
    """Recursively turn scalars into text and tuples into lists."""
    if isinstance(x, GaussianRational):
        return str(x)
    if isinstance(x, dict):
        return {str(k): encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    return x


def dumps(obj) -> str:
    return json.dumps(encode(obj), sort_keys=True, indent=2, ensure_ascii=False)


def _scalars(x, shape, what):
    """Parse a nested list of scalar text with the given shape."""
    if not shape:
        try:
            return parse_scalar(x)
        except (TypeError, ValueError) as exc:
            raise FormatError(f"{what}: {exc}") from exc
    if not isinstance(x, list) or len(x) != shape[0]:
        raise FormatError(f"{what}: expected a list of length {shape[0]}")
    return tuple(_scalars(v, shape[1:], what) for v in x)


def _get(obj, key, what):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{what}: missing field {key!r}")
    return obj[key]


def _dim(obj, key, what):
    n = _get(obj, key, what)
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"{what}: {key} must be a positive integer")
    return n


def algebra_to_json(A: FiniteAlgebra) -> dict:
    return {"dim": A.dim, "labels": list(A.labels), "unit": A.unit_index, "sc": encode(A.sc)}


def algebra_from_json(obj) -> FiniteAlgebra:
    n = _dim(obj, "dim", "algebra")
    labels = obj.get("labels") or [f"e{i}" for i in range(n)]
    unit = _get(obj, "unit", "algebra")
    sc = _scalars(_get(obj, "sc", "algebra"), (n, n, n), "algebra sc")
    return new_algebra(n, labels, unit, sc)


def leibniz_to_json(L: LeibnizAlgebra) -> dict:
    out = {"dim": L.dim, "bracket": encode(L.bracket_table)}
    if L.labels:
        out["labels"] = list(L.labels)
    return out


def leibniz_from_json(obj) -> LeibnizAlgebra:
    n = _dim(obj, "dim", "leibniz")
    table = _scalars(_get(obj, "bracket", "leibniz"), (n, n, n), "leibniz bracket")
    return new_leibniz(n, table)


def bundle_to_json(V: VertexAlgebroid) -> dict:
    out = {
        "A": algebra_to_json(V.A),
        "B_dim": V.B_dim,
        "B_labels": list(V.B_labels),
        "del": encode(V.del_),
        "action": encode(V.action),
        "bracket0": encode(V.bracket0),
        "pairing1": encode(V.pairing1),
        "anchor": encode(V.anchor),
    }
    if V.name:
        out["name"] = V.name
    if V.params:
        out["params"] = encode(V.params)
    return out


def bundle_from_json(obj) -> VertexAlgebroid:
    A = algebra_from_json(_get(obj, "A", "bundle"))
    nA = A.dim
    nB = _dim(obj, "B_dim", "bundle")
    labels = obj.get("B_labels") or [f"f{j}" for j in range(nB)]
    if len(labels) != nB:
        raise FormatError("bundle: B_labels has the wrong length")
    params = obj.get("params") or {}
    return VertexAlgebroid(
        A,
        nB,
        tuple(labels),
        _scalars(_get(obj, "del", "bundle"), (nA, nB), "del"),
        _scalars(_get(obj, "action", "bundle"), (nA, nB, nB), "action"),
        _scalars(_get(obj, "bracket0", "bundle"), (nB, nB, nB), "bracket0"),
        _scalars(_get(obj, "pairing1", "bundle"), (nB, nB, nA), "pairing1"),
        _scalars(_get(obj, "anchor", "bundle"), (nB, nA, nA), "anchor"),
        name=str(obj.get("name", "")),
        params={k: parse_scalar(v) for k, v in params.items()},
    )
