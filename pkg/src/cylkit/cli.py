"""Command line front end.

Exit status: 0 when every verdict is a YES, 1 on any NO (or invalid data for
``validate``), 2 on EXHAUSTED without NO, 64 on usage errors and unreadable
input files.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import io
from .verdict import Verdict, exit_code

EX_USAGE = 64
VERSION = "0.1.0"
DEFAULT_STAGE_BUDGET = 3
DEFAULT_TRUNCATION_J = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EX_USAGE)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("budgets must be positive")
    return v


def _natural(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("expected a natural number")
    return v


# -- configuration and reports --------------------------------------------------------

def run_config(args):
    env = os.environ.get("CYLKIT_MAX_DIM")
    max_dim = args.max_dim
    if max_dim is None and env:
        try:
            max_dim = _positive(env)
        except argparse.ArgumentTypeError as e:
            raise UsageError(f"CYLKIT_MAX_DIM: {e}") from None
    return {
        "max_dim": max_dim,
        "max_dim_source": "flag" if args.max_dim is not None else ("env" if env else "default"),
        "stage_budget": args.stage_budget,
        "seed": args.seed,
        "format": args.format,
        "truncation_J": args.truncation_j,
    }


def verdict_payload(v):
    out = v.summary()
    w = v.witness
    if w is not None:
        out["witness"] = _describe(w)
    return out


def _describe(w):
    from .anodyne import ExpansionCertificate, RetractCertificate
    from .lifting import LiftingProblem
    from .maps import SimplicialMap
    if isinstance(w, LiftingProblem):
        return w.describe()
    if isinstance(w, ExpansionCertificate):
        return {"inner_expansion": [[repr(x) for x in step] for step in w.steps]}
    if isinstance(w, RetractCertificate):
        return {"retract": {"middle": w.left.target.name, "counts": list(w.left.target.counts())}}
    if isinstance(w, SimplicialMap):
        return {"map": f"{w.source.name} -> {w.target.name}"}
    if isinstance(w, dict):
        return {str(k): _describe(v) for k, v in sorted(w.items(), key=lambda kv: str(kv[0]))}
    if isinstance(w, (list, tuple)):
        return [_describe(x) for x in w]
    if isinstance(w, (str, int, float, bool)) or w is None:
        return w
    name = getattr(w, "name", None)
    return name if isinstance(name, str) else type(w).__name__


def _text(d, prefix=""):
    lines = []
    for k in sorted(d):
        v = d[k]
        key = f"{prefix}{k}"
        if isinstance(v, dict) and v:
            lines.extend(_text(v, key + "."))
        elif isinstance(v, (list, tuple)):
            lines.append(f"{key}: {json.dumps(v, ensure_ascii=False, sort_keys=True)}")
        else:
            lines.append(f"{key}: {v}")
    return lines


def emit(report, fmt, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(io.dumps(report))
    else:
        out.write("\n".join(_text(report)) + "\n")


def _load(path, expect=None):
    try:
        return io.load(path, expect)
    except FileNotFoundError:
        raise UsageError(f"{path}: no such file") from None
    except io.MalformedJSON as e:
        raise UsageError(str(e)) from None
    except io.FormatError as e:
        raise UsageError(f"{path}: {e}") from None


def _load_obj(path, expect):
    return _load(path, expect)[1]


def _write_or_emit(args, obj_json, report, config):
    """Save ``obj_json`` to ``-o`` and print the report, or print the object itself."""
    if args.output:
        io.save(args.output, obj_json)
        report = dict(report, written=args.output, config=config)
        emit(report, args.format)
    else:
        sys.stdout.write(io.dumps(obj_json))
    return 0


# -- commands ---------------------------------------------------------------------

_OBJECT_KINDS = {"simplex": 1, "boundary": 1, "horn": 2, "spine": 1, "J": 1, "point": 0,
                 "empty": 0}
_MAP_KINDS = {"horn-inclusion": 2, "boundary-inclusion": 1, "spine-inclusion": 1,
              "vertex-inclusion": 2}


def cmd_gen(args, config):
    from . import standard
    from .category import nerve, ordinal
    from .maps import to_point
    kind, params = args.kind, args.params
    want = {**_OBJECT_KINDS, **_MAP_KINDS, "ordinal": 1, "nerve": 1, "to-point": 1}
    if kind not in want:
        raise UsageError(f"unknown kind {kind!r}; choose from {', '.join(sorted(want))}")
    if len(params) != want[kind]:
        raise UsageError(f"{kind} takes {want[kind]} parameter(s)")
    if kind in ("nerve", "to-point"):
        src = _load_obj(params[0], io.CATEGORY_FORMAT if kind == "nerve" else io.SSET_FORMAT)
        if kind == "nerve":
            trunc = config["truncation_J"] if not src.non_identity_graph_acyclic() else None
            X = nerve(src, truncation=trunc)
            obj = io.sset_to_json(X)
        else:
            obj = io.map_to_json(to_point(src))
        return _write_or_emit(args, obj, {"kind": kind}, config)
    try:
        ints = [int(p) for p in params]
    except ValueError:
        raise UsageError(f"{kind} parameters must be integers") from None
    try:
        if kind == "ordinal":
            obj = io.category_to_json(ordinal(ints[0]))
        elif kind == "point":
            obj = io.sset_to_json(standard.point())
        elif kind == "empty":
            obj = io.sset_to_json(standard.empty())
        elif kind == "J":
            obj = io.sset_to_json(standard.J_truncated(ints[0]))
        elif kind in _OBJECT_KINDS:
            obj = io.sset_to_json(standard.standard(kind, *ints))
        else:
            fn = {"horn-inclusion": standard.horn_inclusion,
                  "boundary-inclusion": standard.boundary_inclusion,
                  "spine-inclusion": standard.spine_inclusion,
                  "vertex-inclusion": standard.vertex_inclusion}[kind]
            obj = io.map_to_json(fn(*ints))
    except (ValueError, KeyError, IndexError) as e:
        raise UsageError(f"{kind} {' '.join(params)}: {e}") from None
    return _write_or_emit(args, obj, {"kind": kind, "params": ints}, config)


def cmd_validate(args, config):
    try:
        fmt, obj = io.load(args.file)
    except FileNotFoundError:
        raise UsageError(f"{args.file}: no such file") from None
    except io.MalformedJSON as e:
        raise UsageError(str(e)) from None
    except io.FormatError as e:
        emit({"file": args.file, "valid": False, "error": str(e), "where": e.where,
              "config": config}, args.format)
        return 1
    report = {"file": args.file, "valid": True, "format": fmt, "config": config}
    if fmt == io.SSET_FORMAT:
        report.update(name=obj.name, generators=obj.size(), counts=list(obj.counts()))
    elif fmt == io.MAP_FORMAT:
        report.update(source=obj.source.name, target=obj.target.name,
                      generators=obj.source.size())
    elif fmt == io.CYLINDER_FORMAT:
        report.update(generators=obj.total.size(), counts=list(obj.total.counts()),
                      A=obj.A.name, B=obj.B.name)
    elif fmt == io.CATEGORY_FORMAT:
        report.update(name=obj.name, objects=len(obj.objects), morphisms=len(obj.morphisms()))
    else:
        report.update(elements=len(obj.elements()))
    emit(report, args.format)
    return 0


def cmd_map_check(args, config):
    from .maps import is_epi, is_iso, is_mono, map_props, surjective_on_vertices
    f = _load_obj(args.file, io.MAP_FORMAT)
    props = map_props(f, config["max_dim"])
    props.update(mono_by_generators=is_mono(f), epi_by_generators=is_epi(f), iso=is_iso(f),
                 surjective_on_vertices=surjective_on_vertices(f))
    consistent = props["mono"] == props["mono_by_generators"] and \
        props["epi"] == props["epi_by_generators"]
    emit({"file": args.file, "source": f.source.name, "target": f.target.name,
          "properties": props, "routes_agree": consistent, "config": config}, args.format)
    return 0 if consistent else 1


def cmd_classify(args, config):
    from .classify import classify_fibration, is_isofibration
    f = _load_obj(args.map, io.MAP_FORMAT)
    if args.kind == "isofibration":
        v = is_isofibration(f, config["max_dim"], check_objects=True)
    else:
        v = classify_fibration(f, args.kind, config["max_dim"])
    emit({"map": f"{f.source.name} -> {f.target.name}", "kind": args.kind,
          "truncation": _truncations(f.source, f.target), "verdict": verdict_payload(v),
          "config": config}, args.format)
    return exit_code([v])


def _truncations(*objs):
    return {X.name: X.meta.get("truncation") for X in objs if X.meta.get("truncated")}


def cmd_certify(args, config):
    from .anodyne import certify_inner_anodyne, is_absolute_wce
    from .maps import is_mono
    f = _load_obj(args.map, io.MAP_FORMAT)
    if args.wce:
        v = is_absolute_wce(f, config["stage_budget"], config["max_dim"])
    else:
        if not is_mono(f):
            raise UsageError("certify-anodyne needs a monomorphism (use --wce otherwise)")
        v = certify_inner_anodyne(f, config["stage_budget"], config["max_dim"])
    emit({"map": f"{f.source.name} -> {f.target.name}",
          "question": "absolute weak categorical equivalence" if args.wce else "inner anodyne",
          "verdict": verdict_payload(v), "config": config}, args.format)
    return exit_code([v])


def cmd_factor(args, config):
    from .anodyne import soa_factor
    f = _load_obj(args.map, io.MAP_FORMAT)
    fac = soa_factor(f, args.family, config["stage_budget"], config["max_dim"])
    fac.replay()
    report = {"map": f"{f.source.name} -> {f.target.name}", "family": args.family,
              "status": fac.status, "cells": len(fac.cells), "report": fac.report,
              "middle_counts": list(fac.middle.counts()), "replayed": True, "config": config}
    if args.output:
        io.save(args.output, io.map_to_json(fac.right_part))
        report["written"] = args.output
    emit(report, args.format)
    return 0 if fac.status == "SATURATED" else 2


# -- cylinder commands ------------------------------------------------------------------

def cmd_cyl(args, config):
    handler = {"make": _cyl_make, "tfae": _cyl_tfae, "pushforward": _cyl_pushforward,
               "divide": _cyl_divide, "presheaf": _cyl_presheaf, "cone": _cyl_cone,
               "collage": _cyl_collage, "dual": _cyl_dual}[args.action]
    return handler(args, config)


def _one_input(args, n=1):
    if len(args.inputs) != n:
        raise UsageError(f"cyl {args.action} takes {n} input file(s)")
    return args.inputs


def _cyl_make(args, config):
    from .cylinders.core import CylinderError, make_cylinder, split_cylinder
    (path,) = _one_input(args)
    fmt, obj = _load(path)
    try:
        if fmt == io.MAP_FORMAT:
            X = make_cylinder(obj.source, obj)
        elif fmt == io.SSET_FORMAT:
            if not args.zero:
                raise UsageError("cyl make on a simplicial set needs --zero v1,v2,...")
            X = split_cylinder(obj, args.zero.split(","))
        else:
            raise UsageError("cyl make takes a map to Delta[1] or a simplicial set with --zero")
    except CylinderError as e:
        raise UsageError(str(e)) from None
    return _write_or_emit(args, io.cylinder_to_json(X),
                          {"counts": list(X.total.counts()), "A": X.A.name, "B": X.B.name},
                          config)


def _cyl_tfae(args, config):
    from .cylinders.reedy import verify_tfae
    (path,) = _one_input(args)
    X = _load_obj(path, io.CYLINDER_FORMAT)
    rep = verify_tfae(X, config["max_dim"])
    report = {"cylinder": X.total.name, "counts": list(X.total.counts()),
              "conditions": {k: verdict_payload(v) for k, v in rep.verdicts.items()},
              "components": {k: v.status for k, v in rep.components.items()},
              "contradiction": rep.contradiction, "config": config}
    emit(report, args.format)
    if rep.contradiction:
        return 1
    return exit_code(list(rep.verdicts.values()))


def _cyl_pushforward(args, config):
    from .cylinders.basechange import pushforward
    (path,) = _one_input(args)
    if not (args.u and args.v):
        raise UsageError("cyl pushforward needs --u and --v maps")
    X = _load_obj(path, io.CYLINDER_FORMAT)
    u = _load_obj(args.u, io.MAP_FORMAT)
    v = _load_obj(args.v, io.MAP_FORMAT)
    if u.source != X.A or v.source != X.B:
        raise UsageError("--u and --v must start at the ends of the cylinder")
    F = pushforward(u, v, X)
    return _write_or_emit(args, io.cylinder_to_json(F.cylinder),
                          {"counts": list(F.cylinder.total.counts())}, config)


def _cyl_divide(args, config):
    from .cylinders.division import divide
    (path,) = _one_input(args)
    if not args.weight:
        raise UsageError("cyl divide needs --weight")
    X = _load_obj(path, io.CYLINDER_FORMAT)
    w = _load_obj(args.weight, io.MAP_FORMAT)
    end = X.A if args.side == "L" else X.B
    if w.target != end:
        raise UsageError(f"the weight must land in the {'A' if args.side == 'L' else 'B'} end")
    D = divide(X, w, args.side)
    v = Verdict(D.status, note="division computed exactly" if D.exact
                else "division exceeded the level budget")
    report = {"cylinder": X.total.name, "side": args.side, "exact": D.exact,
              "levels": {str(k): len(vs) for k, vs in sorted(D.levels.items())},
              "counts": list(D.obj.counts()), "verdict": verdict_payload(v), "config": config}
    if args.output:
        io.save(args.output, io.map_to_json(D.structure))
        report["written"] = args.output
    emit(report, args.format)
    return exit_code([v])


def _cyl_presheaf(args, config):
    from .cylinders.presheaf import to_presheaf
    (path,) = _one_input(args)
    X = _load_obj(path, io.CYLINDER_FORMAT)
    P = to_presheaf(X)
    P.check_functoriality()
    values = {f"{a!r}|{b!r}": list(xs) for (a, b), xs in sorted(P.values.items(),
                                                               key=lambda kv: repr(kv[0]))}
    emit({"cylinder": X.total.name, "truncation": P.N, "values": values,
          "functorial": True, "config": config}, args.format)
    return 0


def _cyl_cone(args, config):
    from .cylinders.core import left_cone
    (path,) = _one_input(args)
    m = _load_obj(path, io.MAP_FORMAT)
    C, _ = left_cone(m.source, m)
    return _write_or_emit(args, io.sset_to_json(C), {"counts": list(C.counts())}, config)


def _cyl_collage(args, config):
    from .category import CategoryError
    from .cylinders.collage import collage_nerve
    (path,) = _one_input(args)
    P = _load_obj(path, io.PROFUNCTOR_FORMAT)
    try:
        X = collage_nerve(P)
    except CategoryError as e:
        raise UsageError(str(e)) from None
    return _write_or_emit(args, io.cylinder_to_json(X), {"counts": list(X.total.counts())},
                          config)


def _cyl_dual(args, config):
    from .cylinders.core import dual_cylinder
    (path,) = _one_input(args)
    X = dual_cylinder(_load_obj(path, io.CYLINDER_FORMAT))
    return _write_or_emit(args, io.cylinder_to_json(X), {"counts": list(X.total.counts())},
                          config)


def cmd_suite(args, config):
    from .suite import run_suite

    lines = []

    def show(r):
        if args.format == "text":
            print(r.line(timing=False), flush=True)
        lines.append(r)

    results = run_suite(args.seed, args.only, on_result=show)
    if not results:
        raise UsageError(f"no criterion matches {args.only!r}")
    passed = all(r.passed for r in results)
    if args.format == "json":
        emit({"seed": args.seed, "config": config, "passed": passed,
              "criteria": [r.to_dict() for r in results]}, "json")
    else:
        print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed (seed {args.seed})")
    return 0 if passed else 1


# -- parser -------------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--max-dim", type=_positive, default=None,
                        help="dimension cutoff for lifting checks (env CYLKIT_MAX_DIM)")
    common.add_argument("--stage-budget", type=_positive, default=DEFAULT_STAGE_BUDGET)
    common.add_argument("--seed", type=_natural, default=42)
    common.add_argument("--truncation-J", dest="truncation_j", type=_positive,
                        default=DEFAULT_TRUNCATION_J)

    p = _Parser(prog="cylkit", description="Finite simplicial sets, lifting problems and "
                "cylinders.")
    p.add_argument("--version", action="version", version=f"cylkit {VERSION}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="write a standard object or map")
    g.add_argument("kind")
    g.add_argument("params", nargs="*")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", parents=[common], help="check a JSON v1 file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    m = sub.add_parser("map-check", parents=[common], help="check a map and its properties")
    m.add_argument("file")
    m.set_defaults(func=cmd_map_check)

    c = sub.add_parser("classify", parents=[common], help="decide a fibration class")
    c.add_argument("--map", required=True)
    c.add_argument("--kind", required=True,
                   choices=("inner", "left", "right", "kan", "trivial", "isofibration"))
    c.set_defaults(func=cmd_classify)

    a = sub.add_parser("certify-anodyne", parents=[common], help="certify or refute inner anodyne")
    a.add_argument("map")
    a.add_argument("--wce", action="store_true",
                   help="ask for an absolute weak categorical equivalence instead")
    a.set_defaults(func=cmd_certify)

    f = sub.add_parser("factor", parents=[common], help="small object argument factorization")
    f.add_argument("map")
    f.add_argument("--family", default="inner_horns",
                   choices=("inner_horns", "left_horns", "right_horns", "all_horns",
                            "boundaries"))
    f.add_argument("-o", "--output", help="write the right part as Map JSON")
    f.set_defaults(func=cmd_factor)

    y = sub.add_parser("cyl", parents=[common], help="cylinder operations")
    y.add_argument("action", choices=("make", "tfae", "pushforward", "divide", "presheaf",
                                      "cone", "collage", "dual"))
    y.add_argument("inputs", nargs="*")
    y.add_argument("--zero", help="vertices over 0, for 'make' on a simplicial set")
    y.add_argument("--u")
    y.add_argument("--v")
    y.add_argument("--weight")
    y.add_argument("--side", choices=("L", "R"), default="L")
    y.add_argument("-o", "--output")
    y.set_defaults(func=cmd_cyl)

    s = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    s.add_argument("--only", help="criterion number or tag, comma separated")
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = run_config(args)
        return args.func(args, config)
    except UsageError as e:
        sys.stderr.write(f"cylkit: error: {e}\n")
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
