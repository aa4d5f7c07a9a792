"""DOT and plain-text renderings of trees and tubes."""

from __future__ import annotations

from typing import Optional

from .star import StarParams
from .tree import PlanarBrauerTree, edge_families
from .tube import self_dual_census


def _q(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def tree_to_dot(tree: PlanarBrauerTree, signs: Optional[dict] = None) -> str:
    """Undirected drawing as a DOT digraph (arrowheads off).

    Stem vertices share a rank; every other vertex is tagged with the half of
    the tree it lies in.  Output is sorted by vertex and edge id.
    """
    fam = edge_families(tree)
    half = {v: "stem" for v in tree.real_stem}
    for name, edges in (("upper", fam.upper), ("lower", fam.lower)):
        for x in edges:
            for v in tree.ends(x):
                half.setdefault(v, name)
    lines = ["digraph brauer_tree {", "  edge [dir=none];"]
    for v in sorted(tree.rotation):
        attrs = [f"half={_q(half[v])}"]
        if v == tree.exceptional:
            attrs += ["style=filled", "fillcolor=black", "fontcolor=white", f"multiplicity={tree.m}"]
        else:
            attrs += ["style=solid"]
        if signs is not None:
            attrs.append(f"xlabel={_q('+' if signs[v] == 1 else '-')}")
        lines.append(f"  {_q(v)} [{', '.join(attrs)}];")
    lines.append("  { rank=same; " + " ".join(_q(v) for v in tree.real_stem) + "; }")
    stem = set(tree.stem_edges)
    for x in sorted(tree.edge_ids):
        a, b = tree.ends(x)
        extra = ", penwidth=2" if x in stem else ""
        lines.append(f"  {_q(a)} -> {_q(b)} [label={_q(x)}{extra}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tube_to_dot(p: StarParams) -> str:
    """Tube positions; self-dual ones drawn as double circles.

    Arrows are the irreducible maps [i, l] -> [i, l+1] and [i, l+1] -> [i-1, l].
    """
    census = self_dual_census(p)
    marked = {(c, l) for l, cols in census.levels.items() for c in cols}
    lines = ["digraph tube {"]
    for l in range(1, p.em + 1):
        for c in range(p.e):
            shape = "doublecircle" if (c, l) in marked else "circle"
            lines.append(f"  \"{c},{l}\" [shape={shape}];")
    for l in range(1, p.em):
        for c in range(p.e):
            lines.append(f"  \"{c},{l}\" -> \"{c},{l + 1}\";")
            lines.append(f"  \"{c},{l + 1}\" -> \"{(c - 1) % p.e},{l}\";")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tube_to_text(p: StarParams) -> str:
    """Aligned grid, top rim first: '*' self-dual, 'H' self-dual hook, '.' otherwise."""
    census = self_dual_census(p)
    hooks = {(h.column, h.level) for h in census.hooks}
    width = max(len(str(p.em)), 5)
    cw = max(len(str(p.e - 1)), 1) + 1
    out = [" " * width + " |" + "".join(str(c).rjust(cw) for c in range(p.e))]
    for l in range(p.em, 0, -1):
        row = []
        for c in range(p.e):
            mark = "H" if (c, l) in hooks else "*" if c in census.levels[l] else "."
            row.append(mark.rjust(cw))
        out.append(str(l).rjust(width) + " |" + "".join(row))
    return "\n".join(out) + "\n"
