"""Command line interface.

Subcommands: commute, insert, rsk, lr-coeff, schur-product, verify, golden.
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import golden as golden_mod
from . import verify as verify_mod
from .commutor import (rho1_internal, rho1_scratch, rho1_switching, switching)
from .insertion import (GluedPair, glued_pair, lr_violation, order_word_steps)
from .knuth import rsk
from .schur import lr_coefficient, schur_product
from .tableaux import (SkewTableau, as_partition, from_json_dict, from_text,
                       to_json_dict, to_text)


class UsageError(Exception):
    pass


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")


def parse_tableau(text: str) -> SkewTableau:
    text = text.strip()
    if not text:
        return SkewTableau((), (), ())
    try:
        if text.startswith("{"):
            return from_json_dict(json.loads(text))
        return from_text(text)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse tableau: {exc}")


def parse_partition(text: str):
    try:
        if text.strip().startswith("["):
            return as_partition(json.loads(text))
        if text.strip() in ("", "0", "()"):
            return ()
        return as_partition(int(x) for x in text.split(","))
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse partition {text!r}: {exc}")


def parse_word(text: str):
    text = text.strip()
    try:
        if text.startswith("["):
            return tuple(int(x) for x in json.loads(text))
        if "," in text:
            return tuple(int(x) for x in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise UsageError(f"cannot parse word {text!r}: {exc}")


def emit_tableau(t: SkewTableau, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_json_dict(t))
    return to_text(t)


def _emit_pair(p: GluedPair, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"yam": to_json_dict(p.yam),
                           "skew": to_json_dict(p.skew)})
    return to_text(p.skew)


def _cells_json(cells) -> list:
    return [[r, c, val, color] for (r, c), (val, color) in sorted(cells.items())]


def cmd_commute(args) -> int:
    skew = parse_tableau(_read_input(args.input))
    pair = glued_pair(skew)
    why = lr_violation(pair)
    if why:
        raise UsageError(f"input is not a ballot pair: {why}")
    frames = []
    if args.method in ("switching", "infusion"):
        strategy = "infusion" if args.method == "infusion" else "greedy"
        if args.trace:
            def on_frame(site, cells):
                frames.append({"switch": [list(site.cell_u), list(site.cell_v)],
                               "cells": _cells_json(cells)})
            s, h = switching(pair.yam, pair.skew, strategy=strategy,
                             seed=args.seed, on_frame=on_frame)
            result = GluedPair(s, h)
        else:
            result = rho1_switching(pair, strategy=strategy, seed=args.seed)
    elif args.method == "internal":
        result = rho1_internal(pair)
        if args.trace:
            frames = _insertion_frames(pair)
    else:
        result = rho1_scratch(pair)
        if args.trace:
            frames = _insertion_frames(pair)
    print(_emit_pair(result, args.format))
    if args.trace:
        print(json.dumps(frames))
    return 0


def _insertion_frames(pair: GluedPair) -> list:
    from .commutor import _chi_skew
    from .insertion import internal_insert
    from .tableaux import EMPTY
    t = pair.skew
    cur = EMPTY
    frames = []

    def record(op, i, trace=None):
        entry = {"op": op, "row": i, "state": to_json_dict(cur)}
        if trace is not None:
            entry["trace"] = {"vacated": list(trace.vacated),
                              "route": [list(c) for c in trace.route],
                              "created": list(trace.created)}
        frames.append(entry)

    for k in range(len(t.outer)):
        i = k + 1
        row = t.rows[k]
        v_word = [x for x in row if x < i]
        for _ in range(len(row) - len(v_word)):
            cur, tr = internal_insert(cur, i)
            record("insert", i, tr)
        for x in reversed(v_word):
            cur, tr = internal_insert(cur, x)
            record("insert", x, tr)
        for _ in range(t.inner[k]):
            cur = _chi_skew(cur, i)
            record("append", i)
    return frames


def cmd_insert(args) -> int:
    t = parse_tableau(_read_input(args.input))
    word = parse_word(args.word)
    try:
        result, traces = order_word_steps(t, word)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(emit_tableau(result, args.format))
    if args.trace:
        print(json.dumps([{"vacated": list(tr.vacated),
                           "route": [list(c) for c in tr.route],
                           "created": list(tr.created)} for tr in traces]))
    return 0


def cmd_rsk(args) -> int:
    word = parse_word(args.word)
    pair = rsk(word)
    if args.format == "json":
        print(json.dumps({"p": to_json_dict(pair.p), "q": to_json_dict(pair.q)}))
    else:
        print("P:")
        print(to_text(pair.p))
        print("Q:")
        print(to_text(pair.q))
    return 0


def cmd_lr_coeff(args) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    print(lr_coefficient(lam, mu, nu))
    return 0


def cmd_schur_product(args) -> int:
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    max_rows = args.max_rows
    if max_rows is None:
        max_rows = sum(mu) + sum(nu) if mu or nu else 1
    try:
        terms = schur_product(mu, nu, max_rows)
    except ValueError as exc:
        raise UsageError(str(exc))
    items = sorted(terms.items(), key=lambda kv: (-kv[1], kv[0]))
    if args.format == "json":
        print(json.dumps([{"shape": list(lam), "coeff": c}
                          for lam, c in sorted(terms.items())]))
    else:
        for lam, c in items:
            print(f"{c} * s{lam}")
    return 0


def cmd_verify(args) -> int:
    names = args.checks.split(",") if args.checks else sorted(verify_mod.CHECKS)
    try:
        reports = verify_mod.run_checks(names, max_size=args.max_size,
                                        seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc))
    failed = False
    for rep in reports:
        print(rep.line())
        for f in rep.failures[:5]:
            print(f"    {f}")
        failed = failed or not rep.passed
    return 1 if failed else 0


def cmd_golden(args) -> int:
    ids = args.only.split(",") if args.only else None
    try:
        results = golden_mod.run_golden(ids)
    except ValueError as exc:
        raise UsageError(str(exc))
    failed = False
    for res in results:
        print(res.line())
        for m in res.messages:
            print("    " + m.replace("\n", "\n    "))
        failed = failed or not res.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lrcommute",
        description="Littlewood-Richardson commutor toolkit: switching, "
                    "internal row insertion, LR coefficients, verification.")
    ap.add_argument("--format", choices=("json", "text"), default="text")
    ap.add_argument("--seed", type=int, default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("commute", help="apply the LR commutor to a ballot pair")
    p.add_argument("input", help="skew tableau (JSON or grid), path or - for stdin")
    p.add_argument("--method", choices=("switching", "internal", "scratch",
                                        "infusion"), default="switching")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=cmd_commute)

    p = sub.add_parser("insert", help="apply an internal insertion order word")
    p.add_argument("input", help="skew tableau (JSON or grid), path or - for stdin")
    p.add_argument("word", help="order word, e.g. 12121 or [1,2,1,2,1]")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=cmd_insert)

    p = sub.add_parser("rsk", help="insertion and recording tableaux of a word")
    p.add_argument("word")
    p.set_defaults(fn=cmd_rsk)

    p = sub.add_parser("lr-coeff", help="one Littlewood-Richardson coefficient")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.set_defaults(fn=cmd_lr_coeff)

    p = sub.add_parser("schur-product", help="expand a product of Schur functions")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--max-rows", type=int, default=None)
    p.set_defaults(fn=cmd_schur_product)

    p = sub.add_parser("verify", help="run exhaustive property sweeps")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--checks", default=None,
                   help="comma separated, from: " + ", ".join(sorted(verify_mod.CHECKS)))
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("golden", help="replay the worked examples")
    p.add_argument("--only", default=None,
                   help="comma separated example ids, from: "
                        + ", ".join(golden_mod.RUNNERS))
    p.set_defaults(fn=cmd_golden)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
