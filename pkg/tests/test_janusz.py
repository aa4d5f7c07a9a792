import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from realblocks.catalog import star_module
from realblocks.errors import InvalidDescriptor
from realblocks.janusz import (
    JanuszDescriptor as D,
    Kind,
    canonical,
    composition_factors,
    dual_descriptor,
    enumerate_descriptors,
    hook_descriptor,
    hooks,
    kind_of,
    ordered_factors,
    pim_structure,
    top_socle,
    uniserial_shape,
    validate_descriptor,
)
from realblocks.star import StarModule
from realblocks.tree import PlanarBrauerTree, star_tree
from treegen import symmetric_tree


def _with_m(tree, m):
    return PlanarBrauerTree(tree.edges, tree.rotation, tree.exceptional, m, tree.real_stem, tree.positive_vertex)


# -- grammar ---------------------------------------------------------------------------


def test_ree_type_one_path_is_valid(ree):
    d = D(("E6", "E4", "E4*", "E6*"), (1, -1), 0)
    assert validate_descriptor(ree, d) == []
    assert kind_of(ree, d) is Kind.TYPE_I


def test_star_type_two_path_is_valid(star3):
    d = D(("E1", "E1*"), (1, -1), 1)
    assert validate_descriptor(star3, d) == []
    assert kind_of(star3, d) is Kind.TYPE_II


def test_type_one_next_to_exceptional_rejected(star3):
    problems = validate_descriptor(star3, D(("E1", "E1*"), (1, -1), 0))
    assert problems == ["TypeI edge adjacent to exceptional vertex"]


@pytest.mark.parametrize("d, fragment", [
    (D((), (1, 1), 0), "no edges"),
    (D(("E9",), (1, 1), 0), "unknown edge"),
    (D(("E1", "E1*"), (1, 1), 1), "alternate"),
    (D(("E0", "E0"), (1, -1), 1), "2 <= mu"),
    (D(("E1", "E1*"), (1, -1), 3), "1 <= mu"),
])
def test_grammar_violations(star3, d, fragment):
    problems = validate_descriptor(star3, d)
    assert problems and fragment in problems[0]


def test_invalid_raises_on_use(star3):
    with pytest.raises(InvalidDescriptor):
        composition_factors(star3, D(("E1", "E1*"), (1, -1), 0))


def test_walk_must_be_connected(ree):
    problems = validate_descriptor(ree, D(("E6", "E1"), (1, -1), 0))
    assert problems


# -- head, socle, composition ---------------------------------------------------------------


def test_top_socle_examples(star3, ree):
    head, socle = top_socle(star3, D(("E1", "E1*"), (1, -1), 1))
    assert head == Counter({"E1": 1}) and socle == Counter({"E1*": 1})
    head, socle = top_socle(ree, D(("E6", "E4", "E4*", "E6*"), (1, -1), 0))
    assert head == Counter({"E6": 1, "E4*": 1})
    assert socle == Counter({"E4": 1, "E6*": 1})


def test_top_socle_single_edge(star3):
    head, socle = top_socle(star3, D(("E0",), (-1, -1), 0))
    assert not head and socle == Counter({"E0": 1})


def test_star_composition_examples(star3):
    assert ordered_factors(star3, D(("E1*", "E1"), (1, -1), 1)) == ["E1*", "E0", "E1"]
    assert star_module(star3, D(("E1*", "E1"), (1, -1), 1)) == StarModule(1, 3)
    assert ordered_factors(star3, D(("E1", "E1*"), (1, -1), 1)) == ["E1", "E1*"]
    assert star_module(star3, D(("E1", "E1*"), (1, -1), 1)) == StarModule(2, 2)
    assert composition_factors(star3, D(("E0", "E0"), (1, -1), 2)).length == 4
    assert star_module(star3, D(("E0", "E0"), (1, -1), 2)) == StarModule(0, 4)


def test_exceptional_edge_occurs_mu_times(star3):
    for mu in (1, 2):
        comp = composition_factors(star3, D(("E1", "E1*"), (1, -1), mu))
        assert comp.factors["E1*"] == mu


# -- duality ---------------------------------------------------------------------------------


def test_dual_examples(ree):
    d = D(("E5", "E4", "E4*", "E5*"), (1, -1), 0)
    assert dual_descriptor(ree, d) == canonical(ree, d)
    # reflected edges in the same order with the direction negated, read from the other end
    assert dual_descriptor(ree, D(("E6", "E4"), (1, -1), 0)) == canonical(ree, D(("E4*", "E6*"), (1, -1), 0))
    stem = D(("E0", "E1"), (1, -1), 0)
    assert dual_descriptor(ree, stem) == canonical(ree, D(("E0", "E1"), (-1, 1), 0))


def test_dual_is_involution_on_catalog_trees(ree, star3):
    for tree in (star3, _with_m(ree, 2)):
        for d in enumerate_descriptors(tree):
            dd = dual_descriptor(tree, d)
            assert dual_descriptor(tree, dd) == d


def test_canonical_ignores_reading_direction(ree):
    for d in enumerate_descriptors(_with_m(ree, 2))[:200]:
        assert canonical(ree, d) == canonical(ree, d.mirror())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_duality_reflects_factors(seed):
    rng = random.Random(seed)
    t = symmetric_tree(rng, max_edges=7, max_m=3)
    r = t.reflection
    ds = enumerate_descriptors(t)
    for d in rng.sample(ds, min(25, len(ds))):
        dd = dual_descriptor(t, d)
        assert composition_factors(t, dd).factors == Counter({r(x): k for x, k in composition_factors(t, d).factors.items()})
        head, socle = top_socle(t, d)
        h2, s2 = top_socle(t, dd)
        assert h2 == Counter({r(x): k for x, k in socle.items()})
        assert s2 == Counter({r(x): k for x, k in head.items()})


def test_uniserial_dual_reverses_factor_sequence(star3):
    r = star3.reflection
    for d in enumerate_descriptors(star3):
        seq = ordered_factors(star3, d)
        dual_seq = ordered_factors(star3, dual_descriptor(star3, d))
        assert dual_seq == [r(x) for x in reversed(seq)]


# -- hooks -----------------------------------------------------------------------------------


def cartan_column(tree, edge):
    # multiplicity of each simple in P(edge): shared vertices weighted by m_v
    out = Counter()
    for y in tree.edge_ids:
        for v in tree.common_vertices(edge, y):
            out[y] += tree.vertex_multiplicity(v)
    return out


@pytest.mark.parametrize("name", ["ree", "star3", "single_edge"])
def test_hooks_add_up_to_projective(request, name):
    tree = request.getfixturevalue(name)
    for x in tree.edge_ids:
        pair = hooks(tree, x)
        assert Counter(pair.hook_a) + Counter(pair.hook_b) == cartan_column(tree, x)
        qa, qb = pim_structure(tree, x)
        assert len(qa) + len(qb) + 2 == sum(cartan_column(tree, x).values())
        for c in pair.vertices:
            assert pair.hook_at(c)[0] == x
            assert len(pair.hook_at(c)) == tree.vertex_multiplicity(c) * tree.valence(c)


def test_hook_descriptor_matches_hook_content(ree, star3):
    for tree in (ree, star3):
        for x in tree.edge_ids:
            pair = hooks(tree, x)
            for c in pair.vertices:
                d = hook_descriptor(tree, x, c)
                assert validate_descriptor(tree, d) == []
                assert composition_factors(tree, d).factors == Counter(pair.hook_at(c))


def test_single_edge_hooks():
    t = star_tree(1, 4, 1)
    pair = hooks(t, "E0")
    lengths = sorted(len(h) for h in (pair.hook_a, pair.hook_b))
    assert lengths == [1, 4]


def test_ree_branch_hook(ree):
    assert hook_descriptor(ree, "E1", "v2") == D(("E1", "E4"), (1, -1), 0)


# -- shapes ------------------------------------------------------------------------------------


def test_uniserial_shapes(star3, ree):
    assert uniserial_shape(star3, D(("E1", "E1*"), (1, -1), 1))["self_dual"] == "USD2"
    assert uniserial_shape(star3, D(("E0", "E0"), (1, -1), 2))["self_dual"] == "USD3"
    shape = uniserial_shape(star3, D(("E0", "E1"), (1, -1), 1))
    assert shape["shape"] in {"U2", "U3", "U4"} and shape["self_dual"] is None
    assert uniserial_shape(ree, D(("E4", "E4*"), (1, -1), 0))["self_dual"] == "USD1"
    assert uniserial_shape(ree, D(("E6", "E4", "E4*", "E6*"), (1, -1), 0))["uniserial"] is False


# -- enumeration -------------------------------------------------------------------------------


@pytest.mark.parametrize("e, m, b, count", [(1, 4, 1, 3), (2, 2, 0, 6), (2, 2, 2, 6), (3, 2, 1, 15)])
def test_small_star_counts(e, m, b, count):
    assert len(enumerate_descriptors(star_tree(e, m, b))) == count


def test_single_edge_descriptors():
    ds = enumerate_descriptors(star_tree(1, 4, 1))
    assert sorted(d.multiplicity for d in ds) == [2, 3, 4]


def test_star_descriptors_biject_onto_uniserials():
    for e in range(1, 5):
        for m in range(1, 5):
            for b in (0, 1, 2):
                if (e - b) % 2 or (b == 2 and e < 2) or (e % 2 and m % 2):
                    continue
                tree = star_tree(e, m, b)
                ds = enumerate_descriptors(tree)
                mods = [star_module(tree, d) for d in ds]
                assert len(set(mods)) == len(mods) == e * (e * m - 1)
                assert {M.length for M in mods} == set(range(2, e * m + 1))


def test_ree_count_with_m_two(ree):
    tree = _with_m(ree, 2)
    assert len(enumerate_descriptors(tree)) == 12 * 23
