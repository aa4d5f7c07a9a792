"""Planar-embedded Brauer trees with a designated real stem.

A tree is given by its edges, a counterclockwise rotation of the incident
edges around every vertex, the exceptional vertex with its multiplicity, and
the real stem (the path fixed by complex conjugation).  Duality acts on the
tree as the reflection in the stem; :func:`derive_reflection` reconstructs
that reflection from the rotation system and rejects trees that are not
mirror-symmetric.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import (
    BadMultiplicity,
    BadRotation,
    BadStem,
    EdgeOnStem,
    FormatError,
    NotATree,
    NotReflectionSymmetric,
)

TREE_FIELDS = {"edges", "rotations", "exceptional", "multiplicity", "real_stem", "positive_vertex"}
REQUIRED_TREE_FIELDS = TREE_FIELDS - {"positive_vertex"}


@dataclass(frozen=True)
class Reflection:
    vertex_map: Mapping[str, str]
    edge_map: Mapping[str, str]

    def __call__(self, edge: str) -> str:
        return self.edge_map[edge]

    def vertex(self, v: str) -> str:
        return self.vertex_map[v]


@dataclass(frozen=True)
class EdgeFamilies:
    stem: tuple[str, ...]
    upper: tuple[str, ...]
    lower: tuple[str, ...]


@dataclass(frozen=True)
class HookSigns:
    sign: Mapping[str, int]

    def __getitem__(self, v: str) -> int:
        return self.sign[v]


@dataclass(frozen=True, eq=False)
class PlanarBrauerTree:
    """Immutable planar Brauer tree; structural invariants are checked on construction.

    Mirror symmetry is *not* checked here (see :func:`derive_reflection`);
    :func:`parse_tree` checks both.
    """

    edges: tuple[tuple[str, tuple[str, str]], ...]
    rotation: Mapping[str, tuple[str, ...]]
    exceptional: str
    multiplicity: int
    real_stem: tuple[str, ...]
    positive_vertex: Optional[str] = None
    _ends: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((str(x), (str(a), str(b))) for x, (a, b) in self.edges))
        object.__setattr__(self, "rotation", {str(v): tuple(r) for v, r in self.rotation.items()})
        object.__setattr__(self, "real_stem", tuple(self.real_stem))
        self._validate()

    # -- construction checks -------------------------------------------------

    def _validate(self):
        if not isinstance(self.multiplicity, int) or isinstance(self.multiplicity, bool) or self.multiplicity < 1:
            raise BadMultiplicity(f"multiplicity must be a positive integer, got {self.multiplicity!r}")
        if not self.edges:
            raise NotATree("a Brauer tree needs at least one edge")
        ends = self._ends
        incident: dict[str, list[str]] = {}
        for x, (a, b) in self.edges:
            if x in ends:
                raise NotATree(f"duplicate edge id {x!r}", edge=x)
            if a == b:
                raise NotATree(f"edge {x!r} is a loop", edge=x)
            ends[x] = (a, b)
            incident.setdefault(a, []).append(x)
            incident.setdefault(b, []).append(x)
        if len(incident) != len(self.edges) + 1:
            raise NotATree(f"{len(self.edges)} edges on {len(incident)} vertices cannot form a tree")
        start = next(iter(incident))
        seen = {start}
        todo = [start]
        while todo:
            v = todo.pop()
            for x in incident[v]:
                w = self.other_end(x, v)
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != len(incident):
            raise NotATree("edge set is disconnected (and therefore contains a cycle)")

        if set(self.rotation) != set(incident):
            missing = sorted(set(incident) - set(self.rotation))
            extra = sorted(set(self.rotation) - set(incident))
            raise BadRotation("rotation keys must be exactly the vertices", missing=missing, extra=extra)
        for v, rot in self.rotation.items():
            if len(rot) != len(incident[v]) or set(rot) != set(incident[v]):
                raise BadRotation(f"rotation at {v!r} is not a permutation of its incident edges", vertex=v)

        if self.exceptional not in incident:
            raise BadStem(f"exceptional vertex {self.exceptional!r} is not a vertex of the tree")
        stem = self.real_stem
        if not stem:
            raise BadStem("real stem is empty")
        if len(set(stem)) != len(stem):
            raise BadStem("real stem repeats a vertex")
        for v in stem:
            if v not in incident:
                raise BadStem(f"stem vertex {v!r} is not in the tree", vertex=v)
        for a, b in zip(stem, stem[1:]):
            if self.edge_between(a, b) is None:
                raise BadStem(f"stem vertices {a!r} and {b!r} are not adjacent", vertex=a)
        if self.exceptional not in stem:
            raise BadStem("real stem must contain the exceptional vertex")
        if (self.e - self.b) % 2:
            raise BadStem(f"e - b = {self.e - self.b} must be even")
        if self.positive_vertex is not None and self.positive_vertex not in incident:
            raise BadStem(f"positive vertex {self.positive_vertex!r} is not in the tree")

    # -- basic queries -------------------------------------------------------

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def m(self) -> int:
        return self.multiplicity

    @property
    def b(self) -> int:
        return len(self.real_stem) - 1

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(x for x, _ in self.edges)

    @property
    def vertices(self) -> tuple[str, ...]:
        out = []
        for _, (a, b) in self.edges:
            for v in (a, b):
                if v not in out:
                    out.append(v)
        return tuple(out)

    def ends(self, edge: str) -> tuple[str, str]:
        return self._ends[edge]

    def other_end(self, edge: str, v: str) -> str:
        a, b = self._ends[edge]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"{v!r} is not an endpoint of {edge!r}")

    def edge_between(self, u: str, v: str) -> Optional[str]:
        for x in self.rotation.get(u, ()):
            if self.other_end(x, u) == v:
                return x
        return None

    def valence(self, v: str) -> int:
        return len(self.rotation[v])

    def vertex_multiplicity(self, v: str) -> int:
        """Number of full turns the projective cover's arm makes around ``v``."""
        return self.multiplicity if v == self.exceptional else 1

    def is_exceptional_adjacent(self, edge: str) -> bool:
        return self.exceptional in self._ends[edge]

    def common_vertices(self, x: str, y: str) -> set[str]:
        return set(self._ends[x]) & set(self._ends[y])

    def ccw_successor(self, v: str, edge: str) -> str:
        rot = self.rotation[v]
        return rot[(rot.index(edge) + 1) % len(rot)]

    def ccw_predecessor(self, v: str, edge: str) -> str:
        rot = self.rotation[v]
        return rot[(rot.index(edge) - 1) % len(rot)]

    def ccw_walk(self, v: str, start: str, stop: str, turns: int = 0) -> list[str]:
        """Edges met walking counterclockwise around ``v`` from ``start`` to ``stop``.

        Both ends are included.  ``turns`` extra full circles are inserted; when
        ``start == stop`` at least one circle is walked.
        """
        rot = self.rotation[v]
        k = len(rot)
        i = rot.index(start)
        steps = (rot.index(stop) - i) % k + turns * k
        return [rot[(i + j) % k] for j in range(steps + 1)]

    @property
    def is_star(self) -> bool:
        return all(self.exceptional in self._ends[x] for x in self.edge_ids)

    @cached_property
    def stem_edges(self) -> tuple[str, ...]:
        return tuple(self.edge_between(a, b) for a, b in zip(self.real_stem, self.real_stem[1:]))

    @cached_property
    def reflection(self) -> Reflection:
        return derive_reflection(self)

    @cached_property
    def edge_order(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.edge_ids)}

    # -- serialization -------------------------------------------------------

    def to_document(self) -> dict:
        doc = {
            "edges": [{"id": x, "ends": [a, b]} for x, (a, b) in self.edges],
            "rotations": {v: list(r) for v, r in self.rotation.items()},
            "exceptional": self.exceptional,
            "multiplicity": self.multiplicity,
            "real_stem": list(self.real_stem),
        }
        if self.positive_vertex is not None:
            doc["positive_vertex"] = self.positive_vertex
        return doc


def tree_from_document(doc: Mapping) -> PlanarBrauerTree:
    """Build a tree from a decoded JSON document (structure checks only)."""
    if not isinstance(doc, Mapping):
        raise FormatError("tree document must be a JSON object")
    unknown = set(doc) - TREE_FIELDS
    if unknown:
        raise FormatError(f"unknown tree fields: {sorted(unknown)}")
    missing = REQUIRED_TREE_FIELDS - set(doc)
    if missing:
        raise FormatError(f"missing tree fields: {sorted(missing)}")
    edges = []
    for item in doc["edges"]:
        if not isinstance(item, Mapping) or set(item) != {"id", "ends"}:
            raise FormatError("each edge must be an object with exactly 'id' and 'ends'")
        ends = item["ends"]
        if not isinstance(ends, list) or len(ends) != 2:
            raise FormatError(f"edge {item['id']!r} must have two ends")
        edges.append((str(item["id"]), (str(ends[0]), str(ends[1]))))
    if not isinstance(doc["rotations"], Mapping):
        raise FormatError("'rotations' must be an object")
    if not isinstance(doc["real_stem"], list):
        raise FormatError("'real_stem' must be a list of vertex ids")
    return PlanarBrauerTree(
        edges=tuple(edges),
        rotation={str(v): tuple(str(x) for x in r) for v, r in doc["rotations"].items()},
        exceptional=str(doc["exceptional"]),
        multiplicity=doc["multiplicity"],
        real_stem=tuple(str(v) for v in doc["real_stem"]),
        positive_vertex=doc.get("positive_vertex"),
    )


def parse_tree(document: str | bytes | Mapping) -> PlanarBrauerTree:
    """Parse a tree file (JSON text or decoded object) and check every invariant,
    including mirror symmetry about the stem."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not valid JSON: {exc}") from exc
    tree = tree_from_document(document)
    derive_reflection(tree)
    return tree


def dump_tree(tree: PlanarBrauerTree) -> str:
    return json.dumps(tree.to_document(), sort_keys=True, indent=2) + "\n"


# -- reflection ---------------------------------------------------------------


def _stem_pairing(tree: PlanarBrauerTree, v: str) -> list[tuple[str, str]]:
    """Pairs (x, sigma(x)) of edges at the stem vertex ``v``."""
    rot = tree.rotation[v]
    k = len(rot)
    stem_here = [x for x in tree.stem_edges if x in rot]
    if not stem_here:
        # lone-vertex stem: the axis runs between the last and the first edge
        if k % 2:
            raise NotReflectionSymmetric(
                f"stem vertex {v!r} has odd valence {k} but no stem edge", vertex=v)
        return [(rot[j], rot[k - 1 - j]) for j in range(k)]
    p = rot.index(stem_here[0])
    pairs = [(rot[(p + j) % k], rot[(p - j) % k]) for j in range(k)]
    if len(stem_here) == 2:
        if k % 2 or rot[(p + k // 2) % k] != stem_here[1]:
            raise NotReflectionSymmetric(
                f"the two stem edges at {v!r} do not split its rotation into equal halves", vertex=v)
    elif k % 2 == 0:
        raise NotReflectionSymmetric(
            f"stem end {v!r} has even valence {k}: edge {rot[(p + k // 2) % k]!r} would be "
            "self-dual but lies off the stem", vertex=v)
    return pairs


def derive_reflection(tree: PlanarBrauerTree) -> Reflection:
    """Reflection of the planar tree in its real stem.

    Stem vertices are processed from the exceptional vertex outward; each
    off-stem pair is then propagated away from the stem by matching the
    counterclockwise rotation at a vertex with the clockwise rotation at its
    mirror image.
    """
    stem = tree.real_stem
    stem_set = set(stem)
    vmap = {v: v for v in stem}
    emap = {x: x for x in tree.stem_edges}
    queue: deque[tuple[str, str, str, str]] = deque()
    centre = stem.index(tree.exceptional)
    for idx in sorted(range(len(stem)), key=lambda i: (abs(i - centre), i)):
        v = stem[idx]
        for x, y in _stem_pairing(tree, v):
            if x in emap:
                if emap[x] != y:
                    raise NotReflectionSymmetric(f"edge {x!r} mirrored inconsistently", vertex=v)
                continue
            emap[x] = y
            emap[y] = x
            if x != y:
                queue.append((tree.other_end(x, v), tree.other_end(y, v), x, y))
    while queue:
        w, w2, x, x2 = queue.popleft()
        if w in stem_set or w2 in stem_set or w == w2:
            raise NotReflectionSymmetric(f"mirror edges {x!r}/{x2!r} meet the stem twice", vertex=w)
        vmap[w] = w2
        vmap[w2] = w
        rot = tree.rotation[w]
        rot2 = tree.rotation[w2]
        k = len(rot)
        if len(rot2) != k:
            raise NotReflectionSymmetric(
                f"vertex {w!r} has valence {k} but its mirror {w2!r} has valence {len(rot2)}", vertex=w)
        i, i2 = rot.index(x), rot2.index(x2)
        for j in range(1, k):
            y = rot[(i + j) % k]
            y2 = rot2[(i2 - j) % k]
            if y in emap or y2 in emap:
                raise NotReflectionSymmetric(f"edge {y!r} reached twice while mirroring", vertex=w)
            emap[y] = y2
            emap[y2] = y
            queue.append((tree.other_end(y, w), tree.other_end(y2, w2), y, y2))
    refl = Reflection(vertex_map=dict(vmap), edge_map=dict(emap))
    _check_reflection(tree, refl)
    return refl


def _check_reflection(tree: PlanarBrauerTree, refl: Reflection) -> None:
    if set(refl.edge_map) != set(tree.edge_ids) or set(refl.vertex_map) != set(tree.rotation):
        raise NotReflectionSymmetric("reflection does not cover the whole tree")
    stem_edges = set(tree.stem_edges)
    for x in tree.edge_ids:
        y = refl.edge_map[x]
        if refl.edge_map[y] != x:
            raise NotReflectionSymmetric(f"edge map is not an involution at {x!r}")
        if (x == y) != (x in stem_edges):
            raise NotReflectionSymmetric(f"edge {x!r} is fixed but not on the stem")
        a, b = tree.ends(x)
        if {refl.vertex_map[a], refl.vertex_map[b]} != set(tree.ends(y)):
            raise NotReflectionSymmetric(f"edge map is incompatible with incidence at {x!r}")
    for v, rot in tree.rotation.items():
        image = [refl.edge_map[x] for x in rot]
        target = tree.rotation[refl.vertex_map[v]]
        reversed_image = image[::-1]
        k = len(target)
        s = target.index(reversed_image[0])
        if [target[(s + j) % k] for j in range(k)] != reversed_image:
            raise NotReflectionSymmetric(f"reflection does not reverse the rotation at {v!r}", vertex=v)


# -- stem statistics ----------------------------------------------------------


def _stem_distances(tree: PlanarBrauerTree) -> tuple[dict[str, int], dict[str, str]]:
    """Distance of every vertex to the stem and the edge leading one step closer."""
    dist = {v: 0 for v in tree.real_stem}
    towards: dict[str, str] = {}
    queue = deque(tree.real_stem)
    while queue:
        v = queue.popleft()
        for x in tree.rotation[v]:
            w = tree.other_end(x, v)
            if w not in dist:
                dist[w] = dist[v] + 1
                towards[w] = x
                queue.append(w)
    return dist, towards


def contact_data(tree: PlanarBrauerTree, edge: str) -> tuple[str, tuple[str, ...]]:
    """Stem vertex where ``edge``'s geodesic lands, and the geodesic itself
    (``edge`` first, the stem-adjacent edge last)."""
    if edge in tree.stem_edges:
        raise EdgeOnStem(f"{edge!r} lies on the real stem", edge=edge)
    dist, towards = _stem_distances(tree)
    a, b = tree.ends(edge)
    near = a if dist[a] < dist[b] else b
    path = [edge]
    v = near
    while dist[v] > 0:
        x = towards[v]
        path.append(x)
        v = tree.other_end(x, v)
    return v, tuple(path)


def stem_stats(tree: PlanarBrauerTree) -> tuple[int, int]:
    """(b, kappa): stem edge count and the number of off-stem edges whose
    geodesic meets the stem away from the exceptional vertex."""
    stem = set(tree.stem_edges)
    kappa = 0
    for x in tree.edge_ids:
        if x in stem:
            continue
        contact, _ = contact_data(tree, x)
        if contact != tree.exceptional:
            kappa += 1
    return tree.b, kappa


def edge_families(tree: PlanarBrauerTree) -> EdgeFamilies:
    refl = tree.reflection
    stem = tree.real_stem
    side: dict[str, str] = {}
    for i, v in enumerate(stem):
        rot = tree.rotation[v]
        k = len(rot)
        if len(stem) == 1:
            upper = rot[: k // 2]
        elif i == 0:
            p = rot.index(tree.edge_between(v, stem[1]))
            upper = [rot[(p + j) % k] for j in range(1, (k + 1) // 2)]
        elif i == len(stem) - 1:
            p = rot.index(tree.edge_between(v, stem[i - 1]))
            upper = [refl(rot[(p + j) % k]) for j in range(1, (k + 1) // 2)]
        else:
            p = rot.index(tree.edge_between(v, stem[i + 1]))
            upper = [rot[(p + j) % k] for j in range(1, k // 2)]
        for x in upper:
            side[x] = "upper"
            side[refl(x)] = "lower"
    stem_edges = tree.stem_edges
    upper_all, lower_all = [], []
    # breadth-first from the stem so that labels grow outward
    order = sorted(
        (x for x in tree.edge_ids if x not in stem_edges),
        key=lambda x: (len(contact_data(tree, x)[1]), tree.edge_order[x]),
    )
    for x in order:
        anchor = contact_data(tree, x)[1][-1]
        if side[anchor] == "upper":
            upper_all.append(x)
    lower_all = [refl(x) for x in upper_all]
    return EdgeFamilies(stem=tuple(stem_edges), upper=tuple(upper_all), lower=tuple(lower_all))


def canonical_labels(tree: PlanarBrauerTree) -> dict[str, str]:
    """Edge labels E_0 .. E_{e-1}: stem first, then the upper half; lower edges get a star."""
    fam = edge_families(tree)
    labels = {x: f"E_{i}" for i, x in enumerate(fam.stem)}
    for i, x in enumerate(fam.upper, start=len(fam.stem)):
        labels[x] = f"E_{i}"
        labels[tree.reflection(x)] = f"E_{i}*"
    return labels


def assign_hook_signs(tree: PlanarBrauerTree, positive_vertex: Optional[str] = None) -> HookSigns:
    """Proper two-colouring by +1/-1 with ``positive_vertex`` positive."""
    start = positive_vertex if positive_vertex is not None else tree.positive_vertex
    if start is None or start not in tree.rotation:
        raise BadStem(f"positive vertex {start!r} is not a vertex of the tree")
    sign = {start: 1}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for x in tree.rotation[v]:
            w = tree.other_end(x, v)
            if w not in sign:
                sign[w] = -sign[v]
                queue.append(w)
    return HookSigns(sign=sign)


def star_tree(e: int, m: int, stem_edges: int, labels: Optional[Iterable[str]] = None) -> PlanarBrauerTree:
    """Star with ``e`` edges around the exceptional centre ``X``.

    ``stem_edges`` is 0, 1 or 2; the edges are numbered counterclockwise, the
    stem runs through ``E0`` (and ``E{e/2}`` when there are two stem edges).
    """
    names = list(labels) if labels is not None else [f"E{i}" for i in range(e)]
    edges = tuple((names[i], ("X", f"v{i}")) for i in range(e))
    rotation = {"X": tuple(names)}
    rotation.update({f"v{i}": (names[i],) for i in range(e)})
    if stem_edges == 0:
        stem = ("X",)
    elif stem_edges == 1:
        stem = ("X", "v0")
    elif stem_edges == 2:
        stem = (f"v{e // 2}", "X", "v0")
    else:
        raise ValueError("a star has at most two stem edges")
    return PlanarBrauerTree(edges=edges, rotation=rotation, exceptional="X", multiplicity=m, real_stem=stem)
