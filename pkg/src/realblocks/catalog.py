"""Catalog of the self-dual indecomposable modules of a real block.

Families:
  c     m = 1: geodesic of an off-stem edge followed by its mirror image
  d-i   the same for edges meeting the stem away from the exceptional vertex
  d-ii  the same for edges meeting the stem at the exceptional vertex, 1 <= mu <= m
  d-iii a d-i path with a detour along the stem to the exceptional vertex and back
  d-iv  from a stem edge to the exceptional vertex and straight back
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import janusz
from .errors import CaseMismatch, InternalCountMismatch, NeedsDistance
from .janusz import JanuszDescriptor
from .star import StarModule, StarParams
from .tree import PlanarBrauerTree, contact_data, stem_stats
from .tube import TubePosition, self_dual_columns

FAMILIES = ("c", "d-i", "d-ii", "d-iii", "d-iv")


@dataclass(frozen=True)
class CatalogEntry:
    descriptor: JanuszDescriptor
    family: str


@dataclass
class SelfDualCatalog:
    tree: PlanarBrauerTree
    b: int
    kappa: int
    irreducibles: list[str]
    pims: list[str]
    paths: list[CatalogEntry] = field(default_factory=list)

    def family_sizes(self) -> dict[str, int]:
        sizes = {f: 0 for f in FAMILIES}
        for entry in self.paths:
            sizes[entry.family] += 1
        return sizes

    @property
    def nonprojective(self) -> int:
        return len(self.irreducibles) + len(self.paths)

    def descriptors(self) -> list[JanuszDescriptor]:
        return [entry.descriptor for entry in self.paths]

    def to_document(self) -> dict:
        sizes = self.family_sizes()
        return {
            "tree": self.tree.to_document(),
            "b": self.b,
            "kappa": self.kappa,
            "irreducibles": list(self.irreducibles),
            "pims": list(self.pims),
            "paths": [
                {"descriptor": entry.descriptor.to_document(), "family": entry.family, "count_index": k}
                for k, entry in enumerate(self.paths)
            ],
            "totals": {
                "irr": len(self.irreducibles),
                "pim": len(self.pims),
                "paths": {"i": sizes["d-i"], "ii": sizes["d-ii"], "iii": sizes["d-iii"],
                          "iv": sizes["d-iv"], "c": sizes["c"]},
                "nonprojective": self.nonprojective,
            },
        }


def expected_count(e: int, b: int, kappa: int, m: int) -> int:
    """Non-irreducible self-dual non-projectives predicted by the counting identity."""
    if m == 1:
        return e - b
    return kappa + (e - b - kappa) * m + kappa * (m - 1) + b * (m - 1)


def _stem_route(tree: PlanarBrauerTree, v: str) -> list[str]:
    """Stem edges from stem vertex ``v`` to the exceptional vertex."""
    stem = tree.real_stem
    i, j = stem.index(v), stem.index(tree.exceptional)
    step = 1 if j > i else -1
    return [tree.edge_between(stem[k], stem[k + step]) for k in range(i, j, step)]


def classify(tree: PlanarBrauerTree) -> SelfDualCatalog:
    refl = tree.reflection
    b, kappa = stem_stats(tree)
    m = tree.m
    stem_edges = tree.stem_edges
    stem_set = set(stem_edges)
    paths: list[CatalogEntry] = []

    def emit(edges, family, mus):
        for mu in mus:
            d = janusz.canonical(tree, JanuszDescriptor(tuple(edges), (1, -1), mu))
            paths.append(CatalogEntry(d, family))

    for x in tree.edge_ids:
        if x in stem_set:
            continue
        contact, geo = contact_data(tree, x)
        sym = list(geo) + [refl(y) for y in reversed(geo)]
        if m == 1:
            emit(sym, "c", [0])
        elif contact != tree.exceptional:
            emit(sym, "d-i", [0])
            route = _stem_route(tree, contact)
            detour = list(geo) + route + route[::-1] + [refl(y) for y in reversed(geo)]
            emit(detour, "d-iii", range(2, m + 1))
        else:
            emit(sym, "d-ii", range(1, m + 1))
    if m >= 2:
        for y in stem_edges:
            a, c = tree.ends(y)
            stem = tree.real_stem
            far = a if abs(stem.index(a) - stem.index(tree.exceptional)) > abs(stem.index(c) - stem.index(tree.exceptional)) else c
            route = _stem_route(tree, far)
            emit(route + route[::-1], "d-iv", range(2, m + 1))

    order = {f: k for k, f in enumerate(FAMILIES)}
    paths.sort(key=lambda entry: (order[entry.family], janusz.sort_key(tree, entry.descriptor)))
    cat = SelfDualCatalog(tree, b, kappa, list(stem_edges), list(stem_edges), paths)

    expected = expected_count(tree.e, b, kappa, m)
    distinct = {entry.descriptor for entry in paths}
    if len(paths) != expected or len(distinct) != len(paths) or cat.nonprojective != tree.e * m:
        raise InternalCountMismatch(
            f"catalog has {len(paths)} paths ({len(distinct)} distinct), identity predicts {expected}",
            found=len(paths), expected=expected)
    for entry in paths:
        problems = janusz.validate_descriptor(tree, entry.descriptor)
        if problems or not janusz.is_self_dual(tree, entry.descriptor):
            raise InternalCountMismatch(f"catalog entry {entry.descriptor} is not a valid self-dual descriptor",
                                        problems=problems)
    return cat


# -- star trees and tube positions ---------------------------------------------------


def star_labels(tree: PlanarBrauerTree) -> dict[str, int]:
    """Star index of every edge, counterclockwise around the exceptional centre,
    with E_0 a stem edge (or, without stem edges, the edge just after the axis)."""
    if not tree.is_star:
        raise CaseMismatch("star labels need every edge at the exceptional vertex")
    rot = tree.rotation[tree.exceptional]
    start = 0
    if tree.stem_edges:
        start = rot.index(next(x for x in tree.stem_edges))
    return {rot[(start + j) % len(rot)]: j for j in range(len(rot))}


def star_module(tree: PlanarBrauerTree, d: JanuszDescriptor) -> StarModule:
    """Star module named by a descriptor on a star tree."""
    labels = star_labels(tree)
    factors = janusz.ordered_factors(tree, d)
    return StarModule(labels[factors[-1]], len(factors))


@dataclass(frozen=True)
class Location:
    level: int
    candidates: tuple[TubePosition, ...]

    @property
    def position(self) -> Optional[TubePosition]:
        return self.candidates[0] if len(self.candidates) == 1 else None

    def to_document(self) -> dict:
        return {"level": self.level, "candidates": [c.as_list() for c in self.candidates]}


def _at_level(p: StarParams, level: int) -> Location:
    cols = self_dual_columns(p, level)
    if not cols:
        raise InternalCountMismatch(f"no self-dual position at level {level}, yet a self-dual module sits there")
    return Location(level, tuple(TubePosition(c, level) for c in cols))


def locate(tree: PlanarBrauerTree, entry, p: StarParams, d_plus: Optional[int] = None, signs=None) -> Location:
    """Tube position of a catalog entry.

    ``entry`` is a stem edge id (irreducible) or a :class:`CatalogEntry` /
    descriptor.  Hooks are placed on the rim from ``signs``; star trees by
    composition length; anything else needs the positive distance ``d_plus``.
    """
    d = entry.descriptor if isinstance(entry, CatalogEntry) else entry
    if isinstance(d, str):
        d = JanuszDescriptor((d,), (1, 1), 0)
    if d_plus is not None:
        return _at_level(p, d_plus + 1)
    if tree.is_star:
        M = star_module(tree, d)
        return Location(M.length, (TubePosition(M.socle, M.length),))
    if signs is not None:
        canon = janusz.canonical(tree, d)
        for x in tree.edge_ids:
            for c in tree.ends(x):
                if janusz.canonical(tree, janusz.hook_descriptor(tree, x, c)) == canon:
                    return _at_level(p, 1 if signs[c] == 1 else p.em)
    raise NeedsDistance("the positive distance d+ is needed to place this module", descriptor=d.to_document())
