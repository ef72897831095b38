"""Command-line front end.

Subcommands: build (export the table), verify (run certification checks),
eval (one character value), classes (list the class representatives).
Reports are JSON on stdout; the exit code is 0 exactly when every requested
check passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle, table
from .characters import char_value, enumerate_chars, parse_label
from .classes import class_equation_check, enumerate_class_reps
from .ffield import FieldCtx, FieldError, field_make
from .group import format_element, parse_element


def _load_config(path):
    if not path:
        return {}
    with open(path) as fh:
        return json.load(fh)


def _make_ctx(args) -> FieldCtx:
    poly = None
    if getattr(args, "poly", None):
        poly = [int(c) for c in args.poly.split(",")]
    elif args.config:
        cfg = _load_config(args.config)
        poly = (cfg.get("polys") or {}).get(f"{args.p},{args.a}")
    return field_make(args.p, args.a, poly)


def _field_args(sub):
    sub.add_argument("--p", type=int, required=True, help="prime")
    sub.add_argument("--a", type=int, default=1, help="extension degree")
    sub.add_argument("--poly", help="defining polynomial, comma-separated "
                                    "coefficients, constant term first")
    sub.add_argument("--config", help="JSON config file; polys[\"p,a\"] pins "
                                      "the defining polynomial")


def cmd_build(args) -> int:
    ctx = _make_ctx(args)
    t = table.build_table(ctx, materialize=False)
    doc = table.export(t, args.format, args.value_mode)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc)
        print(json.dumps({"command": "build", "q": ctx.q,
                          "rows": t.n_rows, "cols": t.n_cols,
                          "format": args.format, "out": args.out, "ok": True}))
    else:
        sys.stdout.write(doc)
    return 0


def cmd_verify(args) -> int:
    ctx = _make_ctx(args)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    known = {"counts", "orthogonality", "oracle", "tau"}
    bad = [c for c in checks if c not in known]
    report = {"command": "verify", "p": ctx.p, "a": ctx.a, "q": ctx.q,
              "poly": list(ctx.poly), "checks": [], "ok": True}
    if bad:
        report["ok"] = False
        report["error"] = f"unknown checks: {bad}; known: {sorted(known)}"
        print(json.dumps(report))
        return 1
    t = None
    for check in checks:
        if check == "counts":
            if t is None:
                t = table.build_table(ctx, materialize=False)
            res = table.verify_counts(t)
            res["classes_equation_ok"] = class_equation_check(ctx)
            res["ok"] = res["ok"] and res["classes_equation_ok"]
        elif check == "orthogonality":
            if t is None:
                t = table.build_table(ctx)
            res = table.verify_orthogonality(t, args.mode,
                                            samples=args.samples)
        elif check == "tau":
            res = table.verify_tau_equivariance(ctx)
        else:  # oracle
            if ctx.q > 3:
                res = {"check": "oracle", "ok": False,
                       "error": "brute-force oracle requires q <= 3"}
            else:
                reps = enumerate_class_reps(ctx)
                cls = oracle.verify_classes(ctx, reps)
                con = oracle.verify_constructions(ctx, enumerate_chars(ctx),
                                                  reps)
                res = {"check": "oracle", "classes": cls,
                       "constructions": {"checked": con["checked"],
                                         "ok": con["ok"],
                                         "mismatches": con["mismatches"]},
                       "ok": cls["ok"] and con["ok"]}
        report["checks"].append(res)
        report["ok"] = report["ok"] and bool(res["ok"])
    print(json.dumps(report))
    return 0 if report["ok"] else 1


def cmd_eval(args) -> int:
    ctx = _make_ctx(args)
    label = parse_label(ctx, args.char)
    elem = parse_element(ctx, args.elem)
    val = char_value(label, elem)
    z = val.to_complex()
    print(json.dumps({"command": "eval", "q": ctx.q,
                      "char": label.to_record()["label"],
                      "elem": format_element(elem),
                      "value_coeffs": list(val.c),
                      "value_float": [z.real, z.imag], "ok": True}))
    return 0


def cmd_classes(args) -> int:
    ctx = _make_ctx(args)
    reps = enumerate_class_reps(ctx)
    print(json.dumps({"command": "classes", "q": ctx.q,
                      "count": len(reps),
                      "classes": [r.to_record() for r in reps], "ok": True}))
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="ud4table",
        description="generic character table of the Sylow p-subgroup of D4(q)")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build and export the table")
    _field_args(b)
    b.add_argument("--format", choices=("json", "csv", "latex"),
                   default="json")
    b.add_argument("--value-mode", choices=("exact", "float"),
                   default="exact", dest="value_mode")
    b.add_argument("--out", help="output file (stdout if omitted)")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run certification checks")
    _field_args(v)
    v.add_argument("--checks", default="counts,orthogonality",
                   help="comma list from counts,orthogonality,oracle,tau")
    v.add_argument("--mode", choices=("full", "sampled"), default="full")
    v.add_argument("--samples", type=int, default=150,
                   help="row sample size in sampled mode")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate one character at one element")
    _field_args(e)
    e.add_argument("--char", required=True,
                   help='character label, e.g. "F11[a11=1,b5=0,b6=2,b7=0,b3=1]"')
    e.add_argument("--elem", required=True,
                   help='element, e.g. "x3(1)*x8(2)" (field elements by index)')
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("classes", help="list the conjugacy class representatives")
    _field_args(c)
    c.set_defaults(func=cmd_classes)

    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (FieldError, ValueError) as exc:
        print(json.dumps({"command": args.command, "ok": False,
                          "error": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
