"""Path descriptors for the indecomposable modules of a Brauer tree algebra.

A descriptor is a walk ``S_1, ..., S_t`` of edges together with a direction
``(eps_1, eps_t)`` and a multiplicity ``mu``.  Edges with ``eps = +1`` lie in
the head, the others in the socle, alternating along the walk.  Between two
consecutive edges sits a uniserial leg obtained by walking counterclockwise
around their shared vertex from the head edge down to the socle edge; at the
exceptional vertex the leg makes extra full turns so that its top edge occurs
``mu`` times.

A walk never steps back along the edge it just used, except for at most one
*bounce* ``S_i = S_{i+1}`` at the exceptional vertex.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence

from .errors import CountMismatch, InvalidDescriptor
from .tree import PlanarBrauerTree, Reflection


class Kind(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"


@dataclass(frozen=True)
class JanuszDescriptor:
    edges: tuple[str, ...]
    direction: tuple[int, int]
    multiplicity: int = 0

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "direction", tuple(self.direction))

    @property
    def t(self) -> int:
        return len(self.edges)

    @property
    def mu(self) -> int:
        return self.multiplicity

    def signs(self) -> list[int]:
        return [self.direction[0] * (-1) ** i for i in range(self.t)]

    def mirror(self) -> "JanuszDescriptor":
        """The same module read from the other end."""
        return JanuszDescriptor(self.edges[::-1], (self.direction[1], self.direction[0]), self.multiplicity)

    def to_document(self) -> dict:
        return {"edges": list(self.edges), "dir": list(self.direction), "mu": self.multiplicity}

    @classmethod
    def from_document(cls, doc) -> "JanuszDescriptor":
        return cls(tuple(doc["edges"]), tuple(doc["dir"]), int(doc.get("mu", 0)))

    def __str__(self) -> str:
        return f"({', '.join(self.edges)}), ({self.direction[0]:+d},{self.direction[1]:+d}), mu={self.multiplicity}"


@dataclass(frozen=True)
class Walk:
    """Vertex sequence chi_1..chi_{t+1} behind a descriptor plus its shape data."""

    vertices: tuple[str, ...]
    bounce: Optional[int]  # index i (0-based) with S_i == S_{i+1}
    exc_index: Optional[int]  # position of the exceptional vertex in ``vertices``
    r: int = 0
    l: int = 0
    s: int = 0


@dataclass(frozen=True)
class Leg:
    """Uniserial piece from a head edge down to a socle edge around ``vertex``."""

    vertex: str
    factors: tuple[str, ...]  # head first


@dataclass(frozen=True)
class Composition:
    legs: tuple[Leg, ...]
    factors: Counter

    @property
    def length(self) -> int:
        return sum(self.factors.values())


@dataclass(frozen=True)
class HookPair:
    edge: str
    vertices: tuple[str, str]
    hook_a: tuple[str, ...]
    hook_b: tuple[str, ...]

    def hook_at(self, v: str) -> tuple[str, ...]:
        return self.hook_a if v == self.vertices[0] else self.hook_b


# -- walks ---------------------------------------------------------------------


def _trace_walk(tree: PlanarBrauerTree, edges: Sequence[str]) -> tuple[Optional[Walk], list[str]]:
    t = len(edges)
    if t == 1:
        return Walk(vertices=tree.ends(edges[0]), bounce=None, exc_index=None), []
    exc = tree.exceptional
    x, y = edges[0], edges[1]
    if x == y:
        if exc not in tree.ends(x):
            return None, [f"edge {x} repeats away from the exceptional vertex"]
        second = exc
    else:
        common = tree.common_vertices(x, y)
        if not common:
            return None, [f"consecutive edges {x}, {y} share no vertex"]
        second = common.pop()
    verts = [tree.other_end(x, second), second]
    bounce = None
    for i in range(1, t):
        prev, cur = edges[i - 1], edges[i]
        here = verts[i]
        if here not in tree.ends(cur):
            return None, [f"edges {edges[i - 1]}, {cur} do not continue the walk (turn at one vertex)"]
        if cur == prev:
            if here != exc:
                return None, [f"walk steps back along {cur} away from the exceptional vertex"]
            if bounce is not None:
                return None, ["walk turns back more than once"]
            bounce = i - 1
        verts.append(tree.other_end(cur, here))
    touches = [k for k, v in enumerate(verts) if v == exc]
    exc_index = touches[0] if touches else None
    if len(touches) > 1:
        return None, ["walk visits the exceptional vertex twice"]
    if bounce is None and len(set(verts)) != len(verts):
        return None, ["walk revisits a vertex"]
    r = l = s = 0
    if exc_index is not None:
        if bounce is not None:
            l = 1
            while bounce - l >= 0 and bounce + 1 + l < t and edges[bounce - l] == edges[bounce + 1 + l]:
                l += 1
            r = exc_index - l
            s = t - r - 2 * l
            # the outgoing branch must be new
            tail = verts[exc_index + l:]
            head_part = verts[: exc_index + 1]
            if len(set(tail)) != len(tail) or len(set(head_part)) != len(head_part):
                return None, ["walk revisits a vertex"]
            if set(verts[exc_index + l + 1:]) & set(head_part):
                return None, ["walk revisits a vertex"]
        else:
            r, s = exc_index, t - exc_index
    return Walk(tuple(verts), bounce, exc_index, r, l, s), []


def walk_of(tree: PlanarBrauerTree, d: JanuszDescriptor) -> Walk:
    w, problems = _trace_walk(tree, d.edges)
    if w is None:
        raise InvalidDescriptor(problems[0], descriptor=d.to_document())
    return w


def kind_of(tree: PlanarBrauerTree, d: JanuszDescriptor) -> Kind:
    w = walk_of(tree, d)
    if tree.m >= 2 and d.t >= 2 and w.exc_index is not None:
        return Kind.TYPE_II
    return Kind.TYPE_I


def mu_range(tree: PlanarBrauerTree, w: Walk, t: int) -> range:
    """Admissible multiplicities for a walk."""
    if t == 1 or tree.m == 1 or w.exc_index is None:
        return range(0, 1)
    if w.bounce is not None:
        return range(2, tree.m + 1)
    if w.exc_index in (0, t):
        return range(1, 2)
    return range(1, tree.m + 1)


def validate_descriptor(tree: PlanarBrauerTree, d: JanuszDescriptor) -> list[str]:
    """Grammar violations of ``d`` on ``tree``; the empty list means valid."""
    if not d.edges:
        return ["descriptor has no edges"]
    unknown = [x for x in d.edges if x not in tree.edge_order]
    if unknown:
        return [f"unknown edge {unknown[0]}"]
    e1, et = d.direction
    if e1 not in (1, -1) or et not in (1, -1):
        return ["direction entries must be +1 or -1"]
    if et != e1 * (-1) ** (d.t - 1):
        return ["direction does not alternate along the walk"]
    if not isinstance(d.multiplicity, int) or d.multiplicity < 0:
        return ["multiplicity must be a non-negative integer"]
    w, problems = _trace_walk(tree, d.edges)
    if w is None:
        return problems
    allowed = mu_range(tree, w, d.t)
    if d.multiplicity not in allowed:
        if d.multiplicity == 0 and w.exc_index is not None and tree.m >= 2:
            return ["TypeI edge adjacent to exceptional vertex"]
        if w.bounce is not None:
            return [f"walk turning at the exceptional vertex needs 2 <= mu <= {tree.m}"]
        if w.exc_index is None or d.t == 1 or tree.m == 1:
            return ["TypeI descriptor needs mu = 0"]
        if w.exc_index in (0, d.t):
            return ["walk ending at the exceptional vertex needs mu = 1"]
        return [f"walk through the exceptional vertex needs 1 <= mu <= {tree.m}"]
    return []


def check(tree: PlanarBrauerTree, d: JanuszDescriptor) -> Walk:
    problems = validate_descriptor(tree, d)
    if problems:
        raise InvalidDescriptor(problems[0], descriptor=d.to_document())
    return walk_of(tree, d)


# -- module structure ----------------------------------------------------------


def top_socle(tree: PlanarBrauerTree, d: JanuszDescriptor) -> tuple[Counter, Counter]:
    check(tree, d)
    head, socle = Counter(), Counter()
    for x, sgn in zip(d.edges, d.signs()):
        (head if sgn == 1 else socle)[x] += 1
    return head, socle


def composition_factors(tree: PlanarBrauerTree, d: JanuszDescriptor) -> Composition:
    w = check(tree, d)
    signs = d.signs()
    legs = []
    factors = Counter(d.edges)
    for i in range(d.t - 1):
        c = w.vertices[i + 1]
        top, bottom = (d.edges[i], d.edges[i + 1]) if signs[i] == 1 else (d.edges[i + 1], d.edges[i])
        turns = d.multiplicity - 1 if c == tree.exceptional and d.multiplicity >= 1 else 0
        walk = tree.ccw_walk(c, top, bottom, turns)
        legs.append(Leg(c, tuple(walk)))
        factors.update(walk[1:-1])
    return Composition(tuple(legs), factors)


def ordered_factors(tree: PlanarBrauerTree, d: JanuszDescriptor) -> list[str]:
    """Composition factors of a uniserial descriptor, head first."""
    comp = composition_factors(tree, d)
    if d.t == 1:
        return [d.edges[0]]
    if len(comp.legs) != 1:
        raise InvalidDescriptor("descriptor is not uniserial", descriptor=d.to_document())
    return list(comp.legs[0].factors)


# -- duality and canonical form ------------------------------------------------


def _key(tree: PlanarBrauerTree, d: JanuszDescriptor) -> tuple:
    order = tree.edge_order
    return (order[d.edges[0]], 0 if d.direction[0] == 1 else 1, tuple(order[x] for x in d.edges), d.direction)


def canonical(tree: PlanarBrauerTree, d: JanuszDescriptor) -> JanuszDescriptor:
    """Representative of the mirror pair ``{d, d.mirror()}``."""
    if d.t == 1:
        # a single edge is the simple module whichever way it is read
        return JanuszDescriptor(d.edges, (1, 1), d.multiplicity)
    m = d.mirror()
    return d if _key(tree, d) <= _key(tree, m) else m


def dual_descriptor(tree: PlanarBrauerTree, d: JanuszDescriptor, refl: Optional[Reflection] = None) -> JanuszDescriptor:
    check(tree, d)
    refl = refl or tree.reflection
    image = JanuszDescriptor(
        tuple(refl(x) for x in d.edges), (-d.direction[0], -d.direction[1]), d.multiplicity
    )
    return canonical(tree, image)


def is_self_dual(tree: PlanarBrauerTree, d: JanuszDescriptor) -> bool:
    return dual_descriptor(tree, d) == canonical(tree, d)


# -- hooks and projectives -------------------------------------------------------


def hook_descriptor(tree: PlanarBrauerTree, edge: str, vertex: str) -> JanuszDescriptor:
    """Descriptor of the hook of ``edge`` whose leg runs around ``vertex``."""
    prev = tree.ccw_predecessor(vertex, edge)
    exc = vertex == tree.exceptional and tree.m >= 2
    if prev == edge and not exc:
        return JanuszDescriptor((edge,), (1, 1), 0)
    if exc:
        mu = tree.m
    else:
        # the walk ends at the exceptional vertex: its edge occurs once
        mu = 1 if tree.m >= 2 and tree.exceptional in tree.ends(edge) + tree.ends(prev) else 0
    return JanuszDescriptor((edge, prev), (1, -1), mu)


def hooks(tree: PlanarBrauerTree, edge: str) -> HookPair:
    a, b = tree.ends(edge)
    legs = []
    for c in (a, b):
        k = tree.valence(c)
        turns = tree.vertex_multiplicity(c) - 1
        legs.append(tuple(tree.ccw_walk(c, edge, tree.ccw_predecessor(c, edge), turns))[: tree.vertex_multiplicity(c) * k])
    return HookPair(edge, (a, b), legs[0], legs[1])


def pim_structure(tree: PlanarBrauerTree, edge: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """The two uniserial pieces of rad P(E) / soc P(E)."""
    pair = hooks(tree, edge)
    return pair.hook_a[1:], pair.hook_b[1:]


def all_hooks(tree: PlanarBrauerTree, signs=None) -> list[tuple[str, str, JanuszDescriptor, Optional[int]]]:
    out = []
    for x in tree.edge_ids:
        for c in tree.ends(x):
            out.append((x, c, hook_descriptor(tree, x, c), None if signs is None else signs[c]))
    return out


# -- shapes ------------------------------------------------------------------------


def uniserial_shape(tree: PlanarBrauerTree, d: JanuszDescriptor) -> dict:
    """Uniserial tag (U1..U5) and self-dual uniserial tag (USD1..USD3), if any."""
    w = check(tree, d)
    refl = tree.reflection
    if d.t != 2:
        return {"uniserial": d.t == 1, "shape": "irreducible" if d.t == 1 else None, "self_dual": None}
    x, y = d.edges
    exc = tree.m >= 2 and w.exc_index is not None
    if not exc:
        shape = "U1"
    elif w.bounce is not None:
        shape = "U5"
    elif w.exc_index == 2:
        shape = "U2"
    elif w.exc_index == 0:
        shape = "U3"
    else:
        shape = "U4"
    tag = None
    if shape == "U1" and y == refl(x) and x != y:
        tag = "USD1"
    elif shape == "U4" and y == refl(x):
        tag = "USD2"
    elif shape == "U5" and x == refl(x):
        tag = "USD3"
    return {"uniserial": True, "shape": shape, "self_dual": tag}


# -- enumeration ---------------------------------------------------------------------


def _simple_paths_from(tree: PlanarBrauerTree, start: str, banned: frozenset = frozenset()) -> Iterator[tuple[list[str], list[str]]]:
    """All non-empty simple edge paths leaving ``start`` (edges, vertices)."""
    stack = [([], [start])]
    while stack:
        edges, verts = stack.pop()
        v = verts[-1]
        for x in tree.rotation[v]:
            if edges and x == edges[-1]:
                continue
            if not edges and x in banned:
                continue
            w = tree.other_end(x, v)
            if w in verts:
                continue
            item = (edges + [x], verts + [w])
            yield item
            stack.append(item)


def iter_walks(tree: PlanarBrauerTree) -> Iterator[tuple[tuple[str, ...], Walk]]:
    """Every walk with at least two edges (both orientations)."""
    for start in tree.rotation:
        for edges, _ in _simple_paths_from(tree, start):
            if len(edges) >= 2:
                w, _ = _trace_walk(tree, edges)
                yield tuple(edges), w
    if tree.m < 2:
        return
    exc = tree.exceptional
    for start in tree.rotation:
        if start == exc:
            continue
        for approach, verts in _simple_paths_from(tree, start):
            if verts[-1] != exc:
                continue
            n = len(approach)
            for l in range(1, n + 1):
                back = approach[n - l:][::-1]
                base = approach + back
                pivot = verts[n - l]
                banned = frozenset(x for x in (approach[n - l - 1] if n - l >= 1 else None, approach[n - l]) if x)
                w, _ = _trace_walk(tree, base)
                yield tuple(base), w
                for tail, _ in _simple_paths_from(tree, pivot, banned):
                    edges = base + tail
                    w, problems = _trace_walk(tree, edges)
                    if w is not None:
                        yield tuple(edges), w


def enumerate_descriptors(tree: PlanarBrauerTree, check_count: bool = True) -> list[JanuszDescriptor]:
    """Canonical descriptors of all non-projective, non-irreducible indecomposables."""
    seen = set()
    for edges, w in iter_walks(tree):
        for mu in mu_range(tree, w, len(edges)):
            for eps in (1, -1):
                d = JanuszDescriptor(edges, (eps, eps * (-1) ** (len(edges) - 1)), mu)
                seen.add(canonical(tree, d))
    out = sorted(seen, key=lambda d: _key(tree, d) + (d.multiplicity,))
    expected = tree.e * (tree.e * tree.m - 1)
    if check_count and len(out) != expected:
        raise CountMismatch(f"enumerated {len(out)} descriptors, expected e(em-1) = {expected}",
                            found=len(out), expected=expected)
    return out


def self_dual_descriptors(tree: PlanarBrauerTree) -> list[JanuszDescriptor]:
    return [d for d in enumerate_descriptors(tree) if is_self_dual(tree, d)]


def sort_key(tree: PlanarBrauerTree, d: JanuszDescriptor) -> tuple:
    return _key(tree, d) + (d.multiplicity,)
