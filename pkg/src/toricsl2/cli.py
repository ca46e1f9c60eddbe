"""Batch command-line interface.

Every subcommand prints ``key=value`` lines (or one JSON object with
``--machine``) and exits 0 on success, 1 when a verification check fails and
2 on malformed input.

Vectors are written ``1,0,0`` and vector lists ``1,0,0;0,1,0``.  Structured
inputs can also come from JSON files: cones as ``{"dim", "rays"}``, systems as
``{"vars", "equalities", "congruences": [{"row", "mod"}]}`` and weight data as
``{"vars", "torus", "finite": [{"row", "mod"}]}``.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .cone import (
    RayCone, contains, dualize, edges_from_facets, extremal_rays, is_strongly_convex,
)
from .quotient import WeightData, invariant_generators
from .semigroup import (
    DiophantineSystem, brute_force_basis, default_bound, generates_up_to, hilbert_basis_of_cone,
    hilbert_basis_of_system,
)
from .sl2 import (
    EmbeddingData, cl_group, embedding_cone, embedding_toric_data, embedding_weights, height,
    is_toric, toricity, verify,
)
from .toric import (
    AffineToricData, TDivisor, class_group, degree_map, divisor_class, linearly_equivalent,
    pd_points, principal_divisor,
)

SUCCESS, CHECK_FAILURE, INPUT_ERROR = "success", "check_failure", "input_error"
EXIT_CODES = {SUCCESS: 0, CHECK_FAILURE: 1, INPUT_ERROR: 2}


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class InputError(Exception):
    """Malformed command-line or file input; the message names the field."""


# --------------------------------------------------------------------------
# parsing helpers


def parse_vector(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"{what}: expected comma-separated integers, got {text!r}") from None


def parse_vectors(text: str, what: str) -> list[tuple[int, ...]]:
    text = text.strip()
    if not text:
        return []
    return [parse_vector(part, f"{what}[{i}]") for i, part in enumerate(text.split(";"))]


def parse_congruences(text: str, what: str) -> list[tuple[tuple[int, ...], int]]:
    """``row:mod;row:mod``, e.g. ``1,1,0,0:4``."""
    out = []
    for i, part in enumerate(t for t in text.split(";") if t.strip()):
        row, sep, mod = part.partition(":")
        if not sep:
            raise InputError(f"{what}[{i}]: expected 'row:mod', got {part!r}")
        try:
            out.append((parse_vector(row, f"{what}[{i}].row"), int(mod)))
        except ValueError:
            raise InputError(f"{what}[{i}].mod: not an integer: {mod!r}") from None
    return out


def load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"--file: cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be an object")
    return data


def _from_dict(kind, data: dict, source: str):
    try:
        return kind.from_dict(data)
    except KeyError as exc:
        raise InputError(f"{source}: missing field {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        raise InputError(f"{source}: {exc}") from None


def cone_from_args(args) -> RayCone:
    if getattr(args, "file", None):
        return _from_dict(RayCone, load_json(args.file), args.file)
    if args.p is not None or args.q is not None or args.r is not None:
        return embedding_cone(_toric_embedding(args))
    if args.rays is None:
        raise InputError("--rays: required (or --file, or --p/--q/--r)")
    rays = parse_vectors(args.rays, "--rays")
    dim = args.dim if args.dim is not None else (len(rays[0]) if rays else None)
    if dim is None:
        raise InputError("--dim: required when --rays is empty")
    try:
        return RayCone(dim, rays)
    except ValueError as exc:
        raise InputError(f"--rays: {exc}") from None


def embedding_from_args(args) -> EmbeddingData:
    for name in ("p", "q", "r"):
        if getattr(args, name) is None:
            raise InputError(f"--{name}: required")
    try:
        return EmbeddingData(args.p, args.q, args.r)
    except ValueError as exc:
        raise InputError(f"--p/--q/--r: {exc}") from None


def _toric_embedding(args) -> EmbeddingData:
    emb = embedding_from_args(args)
    ok, reason = toricity(emb)
    if not ok:
        raise InputError(f"--p/--q/--r: not toric: {reason}")
    return emb


# --------------------------------------------------------------------------
# output


def fmt_vectors(vs) -> str:
    return ";".join(",".join(str(x) for x in v) for v in vs)


def fmt_fraction(f) -> str:
    return f"{f.numerator}/{f.denominator}"


def _lines(payload: dict, prefix: str = "") -> list[str]:
    out = []
    for key, val in payload.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            out.extend(_lines(val, name + "."))
        elif isinstance(val, bool):
            out.append(f"{name}={'true' if val else 'false'}")
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            for i, item in enumerate(val):
                out.extend(_lines(item, f"{name}.{i}."))
        elif isinstance(val, list) and val and isinstance(val[0], (list, tuple)):
            out.append(f"{name}={fmt_vectors(val)}")
        elif isinstance(val, (list, tuple)):
            out.append(f"{name}={','.join(str(x) for x in val)}")
        elif val is None:
            out.append(f"{name}=none")
        else:
            out.append(f"{name}={val}")
    return out


def render(result: CommandResult, machine: bool) -> str:
    if machine:
        return json.dumps({"status": result.status, **result.payload}, sort_keys=True)
    return "\n".join([f"status={result.status}"] + _lines(result.payload))


# --------------------------------------------------------------------------
# commands


def _classification(emb: EmbeddingData) -> dict:
    ok, reason = toricity(emb)
    out = {"p": emb.p, "q": emb.q, "r": emb.r, "toric": ok, "reason": reason}
    out["l"] = emb.l if ok else None
    out["class_group"] = str(cl_group(emb)) if emb.q > emb.p else None
    out["height"] = fmt_fraction(height(emb).value)
    return out


def cmd_classify(args) -> CommandResult:
    return CommandResult(SUCCESS, _classification(embedding_from_args(args)))


def cmd_cone(args) -> CommandResult:
    c = cone_from_args(args)
    ext = extremal_rays(c)
    pointed = is_strongly_convex(c)
    out = {"dim": c.ambient_dim, "rays": [list(r) for r in ext.rays], "strongly_convex": pointed,
           "halfspaces": [list(w) for w in c.halfspaces().normals]}
    if pointed:
        out["facet_edges"] = [list(r) for r in edges_from_facets(c.halfspaces()).rays]
    if args.contains:
        v = parse_vector(args.contains, "--contains")
        if len(v) != c.ambient_dim:
            raise InputError(f"--contains: length {len(v)} does not match dim {c.ambient_dim}")
        out["contains"] = contains(c, v)
    return CommandResult(SUCCESS, out)


def cmd_dual(args) -> CommandResult:
    c = cone_from_args(args)
    d = dualize(c)
    return CommandResult(SUCCESS, {"dim": d.ambient_dim, "rays": [list(r) for r in d.rays]})


def _system_from_args(args) -> Optional[DiophantineSystem]:
    if args.file:
        data = load_json(args.file)
        if "rays" in data:
            return None
        return _from_dict(DiophantineSystem, data, args.file)
    if args.equalities is None and args.congruences is None:
        return None
    eqs = parse_vectors(args.equalities or "", "--equalities")
    cons = parse_congruences(args.congruences or "", "--congruences")
    n = args.vars or (len(eqs[0]) if eqs else len(cons[0][0]) if cons else None)
    if n is None:
        raise InputError("--vars: required when no rows are given")
    try:
        return DiophantineSystem(n, tuple(eqs), tuple(cons))
    except ValueError as exc:
        raise InputError(f"--equalities/--congruences: {exc}") from None


def cmd_hilbert(args) -> CommandResult:
    system = _system_from_args(args)
    obj = system if system is not None else cone_from_args(args)
    if isinstance(obj, RayCone) and not is_strongly_convex(obj):
        raise InputError("--rays: cone contains a line; its monoid has no unique Hilbert basis")
    basis = hilbert_basis_of_system(obj) if system is not None else hilbert_basis_of_cone(obj)
    out = {"kind": "system" if system is not None else "cone", "size": len(basis),
           "basis": [list(e) for e in basis]}
    status = SUCCESS
    if args.oracle:
        bound = args.bound if args.bound is not None else default_bound(obj)
        oracle = brute_force_basis(obj, bound)
        inside = [e for e in basis if max(abs(x) for x in e) <= bound]
        agree = list(oracle.elements) == inside
        gen = generates_up_to(basis, obj, bound)
        out["oracle"] = {"bound": bound, "agree": agree, "generates": gen,
                         "oracle_basis": [list(e) for e in oracle]}
        if not (agree and gen):
            status = CHECK_FAILURE
    return CommandResult(status, out)


def _weights_from_args(args) -> WeightData:
    if args.file:
        return _from_dict(WeightData, load_json(args.file), args.file)
    if args.torus is not None or args.finite is not None:
        torus = parse_vectors(args.torus or "", "--torus")
        finite = parse_congruences(args.finite or "", "--finite")
        n = args.vars or (len(torus[0]) if torus else len(finite[0][0]) if finite else None)
        if n is None:
            raise InputError("--vars: required when no rows are given")
        try:
            return WeightData(n, tuple(torus), tuple(finite))
        except ValueError as exc:
            raise InputError(f"--torus/--finite: {exc}") from None
    return embedding_weights(_toric_embedding(args))


def cmd_invariants(args) -> CommandResult:
    w = _weights_from_args(args)
    gens = invariant_generators(w)
    return CommandResult(SUCCESS, {"weights": w.to_dict(), "size": len(gens),
                                   "generators": [list(g) for g in gens]})


def _toric_from_args(args) -> AffineToricData:
    if args.p is not None or args.q is not None or args.r is not None:
        return embedding_toric_data(_toric_embedding(args))
    c = cone_from_args(args)
    if not is_strongly_convex(c):
        raise InputError("--rays: cone must be strongly convex")
    return AffineToricData(c)


def cmd_class_group(args) -> CommandResult:
    t = _toric_from_args(args)
    try:
        group = class_group(t)
    except ValueError as exc:
        raise InputError(f"--rays: {exc}") from None
    return CommandResult(SUCCESS, {"rays": [list(r) for r in t.rays], "class_group": str(group),
                                   "free_rank": group.free_rank,
                                   "torsion": list(group.invariant_factors),
                                   "degrees": [list(d) for d in degree_map(t)]})


def cmd_divisor(args) -> CommandResult:
    t = _toric_from_args(args)
    out: dict = {"rays": [list(r) for r in t.rays]}
    if args.m is not None:
        m = parse_vector(args.m, "--m")
        if len(m) != t.ambient_dim:
            raise InputError(f"--m: length {len(m)} does not match dim {t.ambient_dim}")
        out["principal"] = list(principal_divisor(t, m).coefficients)
    if args.divisor is not None:
        coeffs = parse_vector(args.divisor, "--divisor")
        if len(coeffs) != len(t.rays):
            raise InputError(f"--divisor: expected {len(t.rays)} coefficients, got {len(coeffs)}")
        d = TDivisor(coeffs)
        out["divisor"] = list(coeffs)
        out["class"] = list(divisor_class(t, d))
        out["principal_class"] = linearly_equivalent(t, d, TDivisor((0,) * len(t.rays)))
        if args.box is not None:
            if args.box < 0:
                raise InputError("--box: must be nonnegative")
            out["pd_points"] = [list(m) for m in pd_points(t, d, args.box)]
    if args.equivalent is not None:
        if args.divisor is None:
            raise InputError("--equivalent: needs --divisor")
        other = parse_vector(args.equivalent, "--equivalent")
        if len(other) != len(t.rays):
            raise InputError(f"--equivalent: expected {len(t.rays)} coefficients")
        out["equivalent"] = linearly_equivalent(t, TDivisor(coeffs), TDivisor(other))
    return CommandResult(SUCCESS, out)


def cmd_verify(args) -> CommandResult:
    emb = _toric_embedding(args)
    if args.bound is not None and args.bound < 1:
        raise InputError("--bound: must be at least 1")
    rep = verify(emb, args.bound)
    payload = rep.to_dict()
    return CommandResult(SUCCESS if rep.passed else CHECK_FAILURE, payload)


def cmd_grid(args) -> CommandResult:
    if args.Q < 1 or args.R < 1:
        raise InputError("--Q/--R: must be positive")
    rows = []
    for q in range(1, args.Q + 1):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            for r in range(1, args.R + 1):
                rows.append(_classification(EmbeddingData(p, q, r)))
    if args.machine:
        return CommandResult(SUCCESS, {"cells": rows, "toric_count": sum(c["toric"] for c in rows)})
    table = {f"cell.{c['p']}/{c['q']}.r{c['r']}": (
        f"toric={'true' if c['toric'] else 'false'} l={c['l'] if c['l'] is not None else '-'} "
        f"class_group={c['class_group'] or '-'} height={c['height']}") for c in rows}
    table["toric_count"] = sum(c["toric"] for c in rows)
    return CommandResult(SUCCESS, table)


# --------------------------------------------------------------------------


def _add_embedding_flags(p: argparse.ArgumentParser):
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)


def _add_cone_flags(p: argparse.ArgumentParser):
    p.add_argument("--dim", type=int)
    p.add_argument("--rays", help="semicolon-separated rays, e.g. '1,0;1,2'")
    p.add_argument("--file", help="JSON cone file")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toricsl2", description=__doc__.splitlines()[0])
    parser.add_argument("--machine", action="store_true", help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="toricity, l, class group and height of (p/q, r)")
    _add_embedding_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cone", help="extremal rays and halfspaces of a cone")
    _add_cone_flags(p)
    _add_embedding_flags(p)
    p.add_argument("--contains", help="vector to test for membership")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("dual", help="dual cone")
    _add_cone_flags(p)
    _add_embedding_flags(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("hilbert", help="Hilbert basis of a cone or a diophantine system")
    _add_cone_flags(p)
    _add_embedding_flags(p)
    p.add_argument("--vars", type=int)
    p.add_argument("--equalities", help="rows w with <w,e> = 0, e.g. '1,1,-2,-2'")
    p.add_argument("--congruences", help="rows w:k with <w,e> = 0 mod k, e.g. '1,1,0,0:4'")
    p.add_argument("--oracle", action="store_true", help="cross-check against box enumeration")
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("invariants", help="invariant monomials of a diagonal quasitorus action")
    _add_embedding_flags(p)
    p.add_argument("--file", help="JSON weight-data file")
    p.add_argument("--vars", type=int)
    p.add_argument("--torus", help="torus weight rows, e.g. '1,1,-2,-2'")
    p.add_argument("--finite", help="cyclic rows w:k, e.g. '1,1,0,0:4'")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("class-group", help="class group and Cox degrees of an affine toric variety")
    _add_cone_flags(p)
    _add_embedding_flags(p)
    p.set_defaults(func=cmd_class_group)

    p = sub.add_parser("divisor", help="principal divisors, classes and P_D lattice points")
    _add_cone_flags(p)
    _add_embedding_flags(p)
    p.add_argument("--m", help="character whose divisor to print")
    p.add_argument("--divisor", help="coefficients in ray order")
    p.add_argument("--equivalent", help="second divisor to compare with --divisor")
    p.add_argument("--box", type=int, help="sup-norm window for P_D points")
    p.set_defaults(func=cmd_divisor)

    p = sub.add_parser("verify", help="cross-check every construction for a toric (p/q, r)")
    _add_embedding_flags(p)
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("grid", help="classification table for p < q <= Q, r <= R")
    p.add_argument("--Q", type=int, default=6)
    p.add_argument("--R", type=int, default=12)
    p.set_defaults(func=cmd_grid)
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
        return args.func(args)
    except InputError as exc:
        return CommandResult(INPUT_ERROR, {"error": str(exc)})


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    machine = "--machine" in argv
    result = run(argv)
    print(render(result, machine))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
