"""Positions in the stable Auslander-Reiten tube of a cyclic-defect block.

A position ``(column, level)`` stands for the star module ``[column, level]``
of the Green correspondent.  Level 1 is the rim of positive hooks and level
``em`` the rim of negative hooks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CaseMismatch
from .star import StarParams, StarCase


@dataclass(frozen=True, order=True)
class TubePosition:
    column: int
    level: int

    def as_list(self) -> list[int]:
        return [self.column, self.level]


@dataclass(frozen=True)
class SelfDualCensus:
    levels: dict[int, tuple[int, ...]]
    hooks: tuple[TubePosition, TubePosition]

    @property
    def total(self) -> int:
        return sum(len(c) for c in self.levels.values())

    def positions(self) -> list[TubePosition]:
        return [TubePosition(c, l) for l, cols in sorted(self.levels.items()) for c in cols]

    def to_document(self) -> dict:
        return {
            "levels": {str(l): list(c) for l, c in sorted(self.levels.items())},
            "hooks": [h.as_list() for h in self.hooks],
            "total": self.total,
        }


def position(p: StarParams, column: int, level: int) -> TubePosition:
    if not 1 <= level <= p.em:
        raise ValueError(f"level {level} outside 1..{p.em}")
    return TubePosition(column % p.e, level)


def omega(p: StarParams, pos: TubePosition) -> TubePosition:
    return TubePosition((pos.column - pos.level + 1) % p.e, p.em + 1 - pos.level)


def omega2(p: StarParams, pos: TubePosition) -> TubePosition:
    return TubePosition((pos.column + 1) % p.e, pos.level)


def omega_pow(p: StarParams, pos: TubePosition, n: int) -> TubePosition:
    # Omega has order 2e, so any power reduces to 0..2e-1
    for _ in range(n % (2 * p.e)):
        pos = omega(p, pos)
    return pos


def dual_position(p: StarParams, pos: TubePosition) -> TubePosition:
    return TubePosition((p.zero_star - (pos.column - pos.level + 1)) % p.e, pos.level)


def is_self_dual_position(p: StarParams, pos: TubePosition) -> bool:
    return dual_position(p, pos) == TubePosition(pos.column % p.e, pos.level)


def self_dual_columns(p: StarParams, level: int) -> tuple[int, ...]:
    return tuple(c for c in range(p.e) if is_self_dual_position(p, TubePosition(c, level)))


def self_dual_census(p: StarParams) -> SelfDualCensus:
    levels = {l: self_dual_columns(p, l) for l in range(1, p.em + 1)}
    rim = [TubePosition(c, 1) for c in levels[1]] + [TubePosition(c, p.em) for c in levels[p.em]]
    if len(rim) != 2:
        raise CaseMismatch(f"expected two self-dual hooks, found {len(rim)}")
    if p.star_case is StarCase.NO_SELF_DUAL_SIMPLE and levels[1]:
        raise CaseMismatch("self-dual simple found with no self-dual simples declared")
    return SelfDualCensus(levels=levels, hooks=(rim[0], rim[1]))


def distances(p: StarParams, pos: TubePosition) -> tuple[int, int]:
    """(d+, d-): steps from the positive and from the negative rim."""
    return pos.level - 1, p.em - pos.level
