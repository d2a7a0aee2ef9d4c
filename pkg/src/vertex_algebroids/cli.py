"""Command-line front end.

Every verb prints a report (human-readable, or canonical JSON with
``--json``) and exits 0 on success, 1 when a verification fails and 2 on
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, algebroid, families, heisenberg, leibniz, modules, serialize, vertex
from .scalars import parse_scalar

OK, FAIL, INPUT_ERROR = 0, 1, 2

INPUT_ERRORS = (
    serialize.FormatError,
    families.BadParameter,
    algebra.UnknownTemplate,
    json.JSONDecodeError,
    OSError,
)


class UsageError(Exception):
    pass


# -- inputs --------------------------------------------------------------------------


def _load_json(args):
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            return json.load(fh)
    return json.load(sys.stdin)


def _params(args) -> dict:
    if not args.params:
        return {}
    obj = json.loads(args.params)
    if not isinstance(obj, dict):
        raise UsageError("--params must be a JSON object")
    return obj


def _bundle(args) -> algebroid.VertexAlgebroid:
    """The bundle named by ``--family``/``--params``, else read from ``--input`` or stdin."""
    if args.family:
        return families.construct(args.family, _params(args))
    return serialize.bundle_from_json(_load_json(args))


# -- verbs ---------------------------------------------------------------------------------


def cmd_verify_algebra(args):
    try:
        A = serialize.algebra_from_json(_load_json(args))
    except algebra.AlgebraError as exc:
        if isinstance(exc, (algebra.NotCommutative, algebra.NotAssociative, algebra.NoUnit)):
            return FAIL, {"valid": False, "error": type(exc).__name__, "witness": str(exc)}
        raise
    rep = {"valid": True, "dim": A.dim, "radical_dim": len(algebra.radical(A))}
    try:
        prof = algebra.local_profile(A)
        rep.update(local=True, power_dims=list(prof.power_dims), nilpotency_index=prof.nilpotency_index)
        rep["templates"] = [t for t in algebra.TEMPLATES if algebra.profile_matches(A, t)]
    except algebra.NotLocal:
        rep["local"] = False
    if args.template:
        rep["template"] = args.template
        rep["matches"] = algebra.profile_matches(A, args.template)
        return (OK if rep["matches"] else FAIL), rep
    return OK, rep


def cmd_verify_leibniz(args):
    L = serialize.leibniz_from_json(_load_json(args))
    ok, witness = leibniz.check_left_leibniz(L)
    rep = {"left_leibniz": ok, "witness": list(witness) if witness else None, "lie": leibniz.is_lie(L)}
    return (OK if ok else FAIL), rep


def cmd_classify_leibniz(args):
    L = serialize.leibniz_from_json(_load_json(args))
    try:
        cl = leibniz.classify_cyclic(L, seed=args.seed)
    except leibniz.IsLie:
        return FAIL, {"error": "IsLie"}
    except leibniz.NotCyclicOrInconclusive as exc:
        return FAIL, {"error": "NotCyclicOrInconclusive", "detail": str(exc)}
    return OK, {
        "type": cl.type_tag,
        "mu": cl.scaling_invariant,
        "relation": list(cl.relation_coeffs),
        "alphas": list(cl.alphas),
    }


def cmd_construct(args):
    if not args.family:
        raise UsageError("construct needs --family")
    V = families.construct(args.family, _params(args))
    return OK, serialize.bundle_to_json(V)


def cmd_verify_axioms(args):
    V = _bundle(args)
    rep = algebroid.check_axioms(V)
    out = {
        "passed": rep.passed,
        "checked": len(rep.results),
        "failures": [{"group": r.group, "identity": r.name, "witness": list(r.witness or ())} for r in rep.failures()],
    }
    return (OK if rep.passed else FAIL), out


def cmd_quotient_lie_algebroid(args):
    V = _bundle(args)
    Q = algebroid.lie_algebroid_quotient(V)
    ok, witness = Q.check()
    return (OK if ok else FAIL), {
        "dim": Q.Q_dim,
        "ideal_dim": V.B_dim - Q.Q_dim,
        "bracket": Q.bracket,
        "action": Q.action,
        "anchor": Q.anchor,
        "lie_algebroid": ok,
        "witness": list(witness) if witness else None,
    }


def cmd_modules(args):
    V = _bundle(args)
    lam = parse_scalar(args.lam if args.lam is not None else "0")
    odm = algebroid.one_dim_modules(V)
    check = odm.verify(lam)
    rep = {"lambda": lam, "module": check.passed}
    if not check.passed:
        rep.update(violated=check.violated, witness=list(check.witness or ()))
        return FAIL, rep
    N = 4 if args.degree is None else args.degree
    M = modules.induced_module(V, lam, N)
    rep["degrees"] = [
        {"degree": n, "M": M.dim_M(n), "M_B": M.dim_MB(n), "J": M.dim_J(n), "L": M.dim_L(n), "J_by_pairing": M.dim_MB(n) - M.J_pairing_dims[n]}
        for n in range(N + 1)
    ]
    agree = all(M.dim_J(n) == M.dim_MB(n) - M.J_pairing_dims[n] for n in range(N + 1))
    rep["J_methods_agree"] = agree
    return (OK if agree else FAIL), rep


def _graded(args, V):
    N = 6 if args.degree is None else args.degree
    try:
        return vertex.build_vb(V, N, args.cap), None
    except vertex.CapTooSmall as exc:
        return exc.partial, str(exc)


def _character(G):
    return [{"degree": d.degree, "dim": d.dim, "certificate": d.certificate} for d in G.character()]


def cmd_build_va(args):
    V = _bundle(args)
    G, warn = _graded(args, V)
    fix = G.fixpoint_failures()
    rep = {
        "degrees": _character(G),
        "degree0_matches_A": G.dim(0) == V.A.dim,
        "degree1_matches_B": G.dim(1) == V.B_dim,
        "fixpoint_failures": len(fix),
    }
    if warn:
        rep["warning"] = warn
    ok = not warn and not fix and rep["degree0_matches_A"] and rep["degree1_matches_B"]
    return (OK if ok else FAIL), rep


def cmd_character(args):
    G, warn = _graded(args, _bundle(args))
    rep = {"degrees": _character(G)}
    if warn:
        rep["warning"] = warn
    return (FAIL if warn else OK), rep


def cmd_quotient(args):
    if args.ideal != "radical":
        raise UsageError("only --ideal radical is supported")
    V = _bundle(args)
    G, warn = _graded(args, V)
    Q = G.degree0_ideal_quotient(vertex.radical_vectors(V))
    ideal = Q.ideal_dims()
    rep = {"degrees": _character(Q), "ideal_dims": ideal, "proper_nonzero": any(ideal) and Q.dim(0) > 0}
    if warn:
        rep["warning"] = warn
    return (OK if rep["proper_nonzero"] and not warn else FAIL), rep


def _fock_word(key) -> str:
    return " ".join(f"h({o[0]})" for o in key[0]) + (" 1" if key[0] else "1")


def cmd_heis_check(args):
    V = _bundle(args)
    N = 6 if args.degree is None else args.degree
    try:
        r = heisenberg.heisenberg_check(V, N, args.cap)
    except heisenberg.NotHeisenbergFamily as exc:
        return FAIL, {"error": "NotHeisenbergFamily", "detail": str(exc)}
    except vertex.CapTooSmall as exc:
        return FAIL, {"error": "CapTooSmall", "detail": str(exc)}
    fail = None
    if r.intertwining_failure:
        du, u, n, v = r.intertwining_failure
        fail = {"u": _fock_word(u), "n": n, "v": _fock_word(v)}
    return (OK if r.verdict else FAIL), {
        "c": r.c,
        "rescale": r.rescale_factor,
        "degrees": [
            {"degree": n, "quotient": q, "partitions": p, "certificate": c, "bijective": b}
            for n, (q, p, c, b) in enumerate(zip(r.quotient_dims, r.partition_dims, r.certificates, r.bijective))
        ],
        "products_checked": r.intertwining_checked,
        "products_skipped": r.intertwining_skipped,
        "failing_triple": fail,
        "notes": r.notes,
        "verdict": r.verdict,
    }


def cmd_derive_dim3(args):
    p = _params(args)
    unknown = set(p) - {"c0", "c1", "gamma0", "gamma1"}
    if unknown:
        raise UsageError(f"unknown parameters: {', '.join(sorted(unknown))}")
    vals = {k: parse_scalar(p.get(k, "0")) for k in ("c0", "c1", "gamma0", "gamma1")}
    try:
        d = algebroid.derive_dim3_constraints(**vals)
    except algebroid.InconsistentParameters as exc:
        return FAIL, {"error": "InconsistentParameters", "detail": str(exc)}
    a_a = [f"{x[1]}*{x[0]}" if isinstance(x, tuple) else x for x in d.a_times_a]
    return OK, {
        "beta": d.beta,
        "e": d.e,
        "chi_must_vanish": d.chi_must_vanish,
        "a*a": a_a,
        "a.d(a)": list(d.a_del_a),
        "a*b0a": list(d.a_times_b0a),
        "b0a*b0a": list(d.b0a_times_b0a),
    }


VERBS = {
    "verify-algebra": (cmd_verify_algebra, "check a commutative associative unital algebra"),
    "verify-leibniz": (cmd_verify_leibniz, "check the left Leibniz identity"),
    "classify-leibniz": (cmd_classify_leibniz, "classify a cyclic Leibniz algebra"),
    "construct": (cmd_construct, "emit the bundle of a named family"),
    "verify-axioms": (cmd_verify_axioms, "run the vertex algebroid axiom suite"),
    "quotient-lie-algebroid": (cmd_quotient_lie_algebroid, "B / A d(A) and its Lie algebroid check"),
    "modules": (cmd_modules, "one-dimensional modules and their induced modules"),
    "build-va": (cmd_build_va, "graded pieces of V_B with consistency checks"),
    "character": (cmd_character, "graded dimensions of V_B"),
    "quotient": (cmd_quotient, "graded dimensions of V_B modulo a degree-0 ideal"),
    "heis-check": (cmd_heis_check, "compare V_B / (a') with the Heisenberg vertex algebra"),
    "derive-dim3": (cmd_derive_dim3, "constraints on three-dimensional bundle parameters"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vertex-algebroids", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")
    for verb, (_, help_text) in VERBS.items():
        s = sub.add_parser(verb, help=help_text)
        s.add_argument("--family", choices=sorted(families.FAMILIES))
        s.add_argument("--params", help="JSON object of parameters, scalars as text")
        s.add_argument("--input", help="JSON input file (default: stdin)")
        s.add_argument("--degree", type=int, help="truncation degree N")
        s.add_argument("--cap", type=int, default=8, help="word length cap (default 8)")
        s.add_argument("--lambda", dest="lam", help="scalar by which the generator acts")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--json", action="store_true", help="canonical JSON output")
        if verb == "verify-algebra":
            s.add_argument("--template", help="expected ring, e.g. 'C[x]/(x^2)'")
        if verb == "quotient":
            s.add_argument("--ideal", default="radical")
    return p


def _human(rep, indent=0) -> str:
    pad = " " * indent
    lines = []
    for k in sorted(rep):
        v = rep[k]
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            cols = list(v[0])
            lines.append(f"{pad}{k}:")
            lines.append(pad + "  " + "  ".join(f"{c:>12}" for c in cols))
            for row in v:
                lines.append(pad + "  " + "  ".join(f"{str(serialize.encode(row[c])):>12}" for c in cols))
        elif isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_human(v, indent + 2))
        else:
            lines.append(f"{pad}{k}: {json.dumps(serialize.encode(v), ensure_ascii=False)}")
    return "\n".join(lines)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    if args.degree is not None and args.degree < 1:
        print("error: --degree must be at least 1", file=stderr)
        return INPUT_ERROR
    if args.cap < 1:
        print("error: --cap must be at least 1", file=stderr)
        return INPUT_ERROR
    fn = VERBS[args.verb][0]
    try:
        code, rep = fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return INPUT_ERROR
    except INPUT_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return INPUT_ERROR
    except (algebra.AlgebraError, algebroid.BadModuleData, algebroid.QuotientIllDefined, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return FAIL
    if args.json or args.verb == "construct":
        print(serialize.dumps(rep), file=stdout)
    else:
        print(_human(rep), file=stdout)
    if code == FAIL:
        reason = rep.get("error") or rep.get("violated") or "verification failed"
        print(f"{args.verb}: {reason}", file=stderr)
    return code


def main() -> None:
    sys.exit(run())

