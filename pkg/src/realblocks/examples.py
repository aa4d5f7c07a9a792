"""Built-in fixtures and the checks run by ``realblocks examples``."""

from __future__ import annotations

import json
from importlib import resources
from typing import Callable

from . import janusz
from .catalog import classify, star_module
from .chartab import CharacterTable, fs_indicator, parse_table, twisted_indicator
from .formtype import (
    anchor_types_from_indicators,
    d_plus_from_parameters,
    normal_defect_type,
    symbolic_anchor,
)
from .janusz import JanuszDescriptor
from .star import StarCase, StarParams
from .tree import PlanarBrauerTree, parse_tree, stem_stats


def data_path(name: str):
    return resources.files("realblocks") / "data" / name


def load_tree(name: str) -> PlanarBrauerTree:
    return parse_tree(data_path(f"{name}.tree.json").read_text(encoding="utf-8"))


def load_table(name: str) -> CharacterTable:
    return parse_table(data_path(f"{name}.table.json").read_text(encoding="utf-8"))


def load_expectations() -> dict:
    return json.loads(data_path("expectations.json").read_text(encoding="utf-8"))


def _ree() -> dict:
    tree = load_tree("ree")
    cat = classify(tree)
    b, kappa = stem_stats(tree)
    sizes = cat.family_sizes()
    p = StarParams.for_tree(tree)
    d_plus = d_plus_from_parameters(33, 4, tree.e)
    return {
        "b": b,
        "kappa": kappa,
        "irreducibles": len(cat.irreducibles),
        "pims": len(cat.pims),
        "families": [sizes["d-i"], sizes["d-ii"], sizes["d-iii"], sizes["d-iv"]],
        "nonprojective": cat.nonprojective,
        "descriptors": len(janusz.enumerate_descriptors(tree)),
        "d_plus": d_plus,
        "symbolic": symbolic_anchor(p, d_plus + 1),
    }


def _star3() -> dict:
    tree = load_tree("star3")
    cat = classify(tree)
    modules = [star_module(tree, JanuszDescriptor((x,), (1, 1), 0)) for x in cat.irreducibles]
    modules += [star_module(tree, d) for d in cat.descriptors()]
    return {"modules": sorted(str(M) for M in modules), "descriptors": len(janusz.enumerate_descriptors(tree))}


def _single_edge() -> dict:
    tree = load_tree("single_edge")
    return {"nonprojective": classify(tree).nonprojective, "descriptors": len(janusz.enumerate_descriptors(tree))}


def _c3() -> dict:
    t = load_table("c3")
    return {"fs": {x: fs_indicator(t, x) for x in ("trivial", "omega", "omegabar")}}


def _c5c4() -> dict:
    t = load_table("c5c4")
    p = StarParams(2, 2, StarCase.NO_SELF_DUAL_SIMPLE)
    exc = [fs_indicator(t, "exc1"), fs_indicator(t, "exc2")]
    eps = [twisted_indicator(t, "lambda", x) for x in ("chi", "chibar")]
    hooks = anchor_types_from_indicators(p, {"exceptional": exc})
    return {
        "fs_exceptional": exc,
        "twisted": eps,
        "hook_types": hooks.to_document(),
        "normal_defect": [normal_defect_type(x).value for x in eps],
    }


def _c15c4() -> dict:
    t = load_table("c15c4")
    p = StarParams(2, 2, StarCase.TWO_SELF_DUAL_SIMPLES)
    fs = {"S": fs_indicator(t, "S"), "T": fs_indicator(t, "T")}
    hooks = anchor_types_from_indicators(p, {"column_E0": fs["S"], "column_Eh": fs["T"]})
    return {"fs": fs, "fs_exceptional": [fs_indicator(t, "exc1"), fs_indicator(t, "exc2")],
            "hook_types": hooks.to_document()}


def _c15c8() -> dict:
    t = load_table("c15c8")
    eps = {x: twisted_indicator(t, "X3", x) for x in ("X11", "X12")}
    return {"twisted": eps, "normal_defect": {x: normal_defect_type(v).value for x, v in eps.items()}}


CHECKS: dict[str, Callable[[], dict]] = {
    "ree": _ree,
    "star3": _star3,
    "single_edge": _single_edge,
    "c3": _c3,
    "c5c4": _c5c4,
    "c15c4": _c15c4,
    "c15c8": _c15c8,
}


def run_examples() -> list[dict]:
    expected = load_expectations()
    results = []
    for name, check in CHECKS.items():
        actual = json.loads(json.dumps(check()))
        results.append({"name": name, "ok": actual == expected.get(name), "actual": actual,
                        "expected": expected.get(name)})
    return results
