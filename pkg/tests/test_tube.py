from hypothesis import given, strategies as st

from realblocks.star import StarCase, StarModule, StarParams, consistent_cases, heller
from realblocks.tube import (
    TubePosition,
    distances,
    dual_position,
    is_self_dual_position,
    omega,
    omega2,
    omega_pow,
    position,
    self_dual_census,
    self_dual_columns,
)
from strategies import every_params, params


def grid(p):
    return [TubePosition(c, l) for l in range(1, p.em + 1) for c in range(p.e)]


def inverse_omega2(p, pos):
    return TubePosition((pos.column - 1) % p.e, pos.level)


def test_omega_agrees_with_star_heller():
    for p in every_params(6, 4):
        for pos in grid(p):
            M = heller(p, StarModule(pos.column, pos.level))
            assert omega(p, pos) == TubePosition(M.socle, M.length)


def test_duality_algebra_exhaustive():
    for p in every_params():
        for pos in grid(p):
            assert omega(p, omega(p, pos)) == omega2(p, pos)
            assert omega(p, pos).level == p.em + 1 - pos.level
            assert omega_pow(p, pos, 2 * p.e) == pos
            assert dual_position(p, dual_position(p, pos)) == pos
            assert dual_position(p, omega2(p, pos)) == inverse_omega2(p, dual_position(p, pos))
            d_plus, d_minus = distances(p, pos)
            assert d_plus + d_minus == p.em - 1


def test_rim_orbits_have_size_e():
    for p in every_params():
        orbit = {TubePosition(0, 1)}
        pos = TubePosition(0, 1)
        for _ in range(p.e):
            pos = omega2(p, pos)
            orbit.add(pos)
        assert len(orbit) == p.e
        assert len(grid(p)) == p.e * p.em


def test_census_exhaustive():
    for p in every_params():
        census = self_dual_census(p)
        assert census.total == p.em
        for level, cols in census.levels.items():
            if p.e % 2:
                assert len(cols) == 1
            else:
                assert len(cols) in (0, 2)
        h0, h1 = census.hooks
        assert omega_pow(p, h0, p.e) == h1
        assert (h0.level == h1.level) == (p.e % 2 == 0)


def test_census_e3_m2():
    p = StarParams(3, 2, "one-sd")
    census = self_dual_census(p)
    assert census.levels == {1: (0,), 2: (2,), 3: (1,), 4: (0,), 5: (2,), 6: (1,)}
    assert set(census.hooks) == {TubePosition(0, 1), TubePosition(1, 6)}


@given(params(), st.integers(1, 200))
def test_odd_e_column_determined_by_level(p, level):
    if p.e % 2 == 0:
        return
    level = 1 + (level - 1) % p.em
    cols = self_dual_columns(p, level)
    assert len(cols) == 1
    assert is_self_dual_position(p, TubePosition(cols[0], level))


def test_position_normalises():
    p = StarParams(4, 2, StarCase.TWO_SELF_DUAL_SIMPLES)
    assert position(p, -1, 3) == TubePosition(3, 3)


def test_document_shape():
    p = StarParams(2, 2, "no-sds")
    doc = self_dual_census(p).to_document()
    assert doc["total"] == 4
    assert doc["levels"]["1"] == [] and len(doc["levels"]["2"]) == 2
    assert [consistent_cases(2, 2)] == [[StarCase.NO_SELF_DUAL_SIMPLE, StarCase.TWO_SELF_DUAL_SIMPLES]]
