"""Command-line interface.

Exit status: 0 success, 1 validation failure (a JSON violation list is
printed), 2 input/output or format error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Optional

from . import janusz
from .catalog import classify
from .chartab import fs_indicator, parse_table, twisted_indicator
from .errors import BlockError, DualityMismatch, FormatError
from .examples import run_examples
from .formtype import (
    HookTypeAssignment,
    anchor_types_from_indicators,
    d_plus_from_parameters,
    normal_defect_type,
    resolve_type,
)
from .render import tree_to_dot, tube_to_dot, tube_to_text
from .star import StarCase, StarParams
from .tree import assign_hook_signs, canonical_labels, edge_families, parse_tree, stem_stats
from .tube import TubePosition, distances, self_dual_census, self_dual_columns

CASES = {c.value: c for c in StarCase}


class UsageError(Exception):
    pass


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc


def _load_tree(path: str):
    return parse_tree(_read(path))


def _params(args, tree=None) -> StarParams:
    if tree is not None:
        return StarParams.for_tree(tree)
    if args.e is None or args.m is None:
        raise UsageError("give a tree file or --e and --m")
    case = CASES[args.case] if args.case else (
        StarCase.ONE_SELF_DUAL_SIMPLE if args.e % 2 else None)
    if case is None:
        raise UsageError("--case is required when e is even")
    return StarParams(args.e, args.m, case)


# -- subcommands ------------------------------------------------------------------


def cmd_validate(args) -> tuple[int, object]:
    tree = _load_tree(args.tree)
    b, kappa = stem_stats(tree)
    fam = edge_families(tree)
    doc = {
        "ok": True,
        "e": tree.e,
        "m": tree.m,
        "b": b,
        "kappa": kappa,
        "reflection": dict(sorted(tree.reflection.edge_map.items())),
        "families": {"stem": list(fam.stem), "upper": list(fam.upper), "lower": list(fam.lower)},
        "labels": dict(sorted(canonical_labels(tree).items())),
    }
    if tree.positive_vertex is not None:
        doc["signs"] = dict(sorted(assign_hook_signs(tree).sign.items()))
    return 0, doc


def cmd_selfdual(args) -> tuple[int, object]:
    tree = _load_tree(args.tree)
    doc = classify(tree).to_document()
    if args.format == "table":
        tot = doc["totals"]
        lines = [f"b = {doc['b']}, kappa = {doc['kappa']}",
                 f"irreducibles {tot['irr']}, pims {tot['pim']}"]
        lines += [f"family {k}: {v}" for k, v in tot["paths"].items()]
        lines.append(f"non-projective total {tot['nonprojective']}")
        lines += [f"  {p['family']:>5}  {janusz.JanuszDescriptor.from_document(p['descriptor'])}" for p in doc["paths"]]
        return 0, "\n".join(lines)
    return 0, doc


def cmd_tube(args) -> tuple[int, object]:
    p = _params(args)
    census = self_dual_census(p)
    if args.dot:
        Path(args.dot).write_text(tube_to_dot(p), encoding="utf-8")
    if args.format == "table":
        return 0, tube_to_text(p).rstrip("\n")
    doc = census.to_document()
    doc.update({"e": p.e, "m": p.m, "case": p.star_case.value, "zero_star": p.zero_star})
    return 0, doc


def _hook_types(args, p: StarParams) -> Optional[HookTypeAssignment]:
    hooks = None
    if args.hook_types:
        text = args.hook_types
        if text.endswith(".json") or Path(text).is_file():
            hooks = HookTypeAssignment.from_mapping(p, json.loads(_read(text)))
        else:
            hooks = HookTypeAssignment.parse(p, text)
    if args.table and args.fs:
        table = parse_table(_read(args.table))
        data = {}
        for item in args.fs.split(","):
            key, _, chi = item.partition("=")
            nu = fs_indicator(table, chi.strip())
            if key.strip() == "exceptional":
                data.setdefault("exceptional", []).append(nu)
            else:
                data[key.strip()] = nu
        if hooks is not None:
            data.update({k: v for k, v in hooks.types.items() if v is not None})
        hooks = anchor_types_from_indicators(p, data)
    return hooks


def cmd_type(args) -> tuple[int, object]:
    tree = _load_tree(args.tree) if args.tree else None
    doc: dict = {}
    if args.table and args.mu and args.chi:
        table = parse_table(_read(args.table))
        eps = twisted_indicator(table, args.mu, args.chi)
        doc["normal_defect"] = {"epsilon": eps, "type": normal_defect_type(eps).value}
        if args.level is None and args.dplus is None and args.n is None:
            return 0, doc
    p = _params(args, tree)
    if args.n is not None or args.eta is not None:
        if args.n is None or args.eta is None:
            raise UsageError("--n and --eta go together")
        d_plus = d_plus_from_parameters(args.n, args.eta, p.e)
    elif args.dplus is not None:
        d_plus = args.dplus
    elif args.level is not None:
        d_plus = args.level - 1
    else:
        raise UsageError("give --level, --dplus or --n/--eta")
    level = d_plus + 1
    if not 1 <= level <= p.em:
        raise UsageError(f"level {level} outside 1..{p.em}")
    hooks = _hook_types(args, p)
    columns = [args.column % p.e] if args.column is not None else list(self_dual_columns(p, level))
    verdicts = [resolve_type(p, TubePosition(c, level), hooks) for c in columns]
    if not verdicts:
        raise UsageError(f"no self-dual module at level {level}")
    d_minus = distances(p, TubePosition(columns[0], level))[1]
    doc.update({
        "e": p.e, "m": p.m, "case": p.star_case.value,
        "level": level, "d_plus": d_plus, "d_minus": d_minus,
        "symbolic": verdicts[0].provenance,
        "candidates": [dict(v.to_document(), column=c) for c, v in zip(columns, verdicts)],
    })
    if p.star_case is StarCase.TWO_SELF_DUAL_SIMPLES:
        doc["i"] = d_plus // 2
    elif p.star_case is StarCase.NO_SELF_DUAL_SIMPLE:
        doc["j"] = d_minus // 2
    if hooks is not None:
        doc["hook_types"] = hooks.to_document()
    return 0, doc


def cmd_indicator(args) -> tuple[int, object]:
    table = parse_table(_read(args.table))
    if args.mu:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", DualityMismatch)
            eps = twisted_indicator(table, args.mu, args.chi)
        doc = {"mu": args.mu, "chi": args.chi, "twisted": eps, "normal_defect_type": normal_defect_type(eps).value
               if eps in (1, -1) else None}
        if caught:
            doc["warning"] = str(caught[0].message)
        return 0, doc
    return 0, {"chi": args.chi, "fs": fs_indicator(table, args.chi)}


def cmd_render(args) -> tuple[int, object]:
    if args.tree:
        tree = _load_tree(args.tree)
        pv = args.positive_vertex or tree.positive_vertex
        signs = assign_hook_signs(tree, pv).sign if pv else None
        text = tree_to_dot(tree, signs)
    else:
        p = _params(args)
        text = tube_to_dot(p) if args.dot else tube_to_text(p)
        if not args.dot:
            return 0, text.rstrip("\n")
    if args.dot:
        Path(args.dot).write_text(text, encoding="utf-8")
        return 0, {"written": args.dot}
    return 0, text.rstrip("\n")


def cmd_examples(args) -> tuple[int, object]:
    results = run_examples()
    ok = all(r["ok"] for r in results)
    if args.format == "table":
        return (0 if ok else 1), "\n".join(f"{'PASS' if r['ok'] else 'FAIL'}  {r['name']}" for r in results)
    return (0 if ok else 1), {"ok": ok, "results": results}


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="realblocks", description="Self-dual modules of real blocks with cyclic defect.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, star=False):
        sp.add_argument("--format", choices=("json", "table"), default="json")
        if star:
            sp.add_argument("--e", type=int)
            sp.add_argument("--m", type=int)
            sp.add_argument("--case", choices=sorted(CASES))

    sp = sub.add_parser("validate", help="check a tree file")
    sp.add_argument("tree")
    common(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("selfdual", help="catalog of self-dual modules")
    sp.add_argument("tree")
    common(sp)
    sp.set_defaults(func=cmd_selfdual)

    sp = sub.add_parser("tube", help="self-dual census of the tube")
    common(sp, star=True)
    sp.add_argument("--dot")
    sp.set_defaults(func=cmd_tube)

    sp = sub.add_parser("type", help="orthogonal or symplectic type")
    sp.add_argument("tree", nargs="?")
    common(sp, star=True)
    sp.add_argument("--level", type=int)
    sp.add_argument("--dplus", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--eta", type=int)
    sp.add_argument("--column", type=int)
    sp.add_argument("--hook-types")
    sp.add_argument("--table")
    sp.add_argument("--fs", help="hook=character pairs whose indicators type the hooks; "
                    "exceptional=character may be repeated")
    sp.add_argument("--mu")
    sp.add_argument("--chi")
    sp.set_defaults(func=cmd_type)

    sp = sub.add_parser("indicator", help="Frobenius-Schur or twisted indicator")
    sp.add_argument("table")
    sp.add_argument("--chi", required=True)
    sp.add_argument("--mu")
    common(sp)
    sp.set_defaults(func=cmd_indicator)

    sp = sub.add_parser("render", help="DOT for a tree, DOT or text for a tube")
    sp.add_argument("tree", nargs="?")
    common(sp, star=True)
    sp.add_argument("--dot")
    sp.add_argument("--positive-vertex")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("examples", help="run the built-in fixtures")
    common(sp)
    sp.set_defaults(func=cmd_examples)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        code, out = args.func(args)
    except FormatError as exc:
        print(dumps({"ok": False, "error": exc.as_dict()}))
        return 2
    except UsageError as exc:
        print(dumps({"ok": False, "error": {"code": "UsageError", "message": str(exc)}}))
        return 2
    except BlockError as exc:
        print(dumps({"ok": False, "violations": [exc.as_dict()]}))
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(dumps({"ok": False, "error": {"code": type(exc).__name__, "message": str(exc)}}))
        return 2
    print(out if isinstance(out, str) else dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
