"""The uniserial star block: modules [i, l], duality and the Heller translate.

A module ``[i, l]`` is the uniserial module with socle ``E_i`` and composition
length ``l``; its factors from socle to head are ``E_i, E_{i-1}, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CaseMismatch, ProjectiveInput


class StarCase(str, Enum):
    NO_SELF_DUAL_SIMPLE = "no-sds"
    TWO_SELF_DUAL_SIMPLES = "two-sds"
    ONE_SELF_DUAL_SIMPLE = "one-sd"

    @classmethod
    def from_stem_edges(cls, b: int) -> "StarCase":
        return {0: cls.NO_SELF_DUAL_SIMPLE, 1: cls.ONE_SELF_DUAL_SIMPLE, 2: cls.TWO_SELF_DUAL_SIMPLES}[b]


@dataclass(frozen=True)
class StarParams:
    e: int
    m: int
    star_case: StarCase

    def __post_init__(self):
        object.__setattr__(self, "star_case", StarCase(self.star_case))
        if self.e < 1 or self.m < 1:
            raise CaseMismatch(f"need e >= 1 and m >= 1, got e={self.e}, m={self.m}")
        odd = self.e % 2 == 1
        if odd != (self.star_case is StarCase.ONE_SELF_DUAL_SIMPLE):
            raise CaseMismatch(f"case {self.star_case.value} is inconsistent with e={self.e}")
        if odd and self.m % 2:
            raise CaseMismatch(f"e={self.e} is odd, so m must be even (got m={self.m})")

    @property
    def em(self) -> int:
        return self.e * self.m

    @property
    def zero_star(self) -> int:
        return -1 if self.star_case is StarCase.NO_SELF_DUAL_SIMPLE else 0

    @property
    def h(self) -> int:
        return self.e // 2

    @classmethod
    def for_tree(cls, tree) -> "StarParams":
        """Parameters of the star correspondent of a tree; the case is read off the stem."""
        if tree.e % 2:
            case = StarCase.ONE_SELF_DUAL_SIMPLE
        elif tree.b == 0:
            case = StarCase.NO_SELF_DUAL_SIMPLE
        else:
            case = StarCase.TWO_SELF_DUAL_SIMPLES
        return cls(tree.e, tree.m, case)


def consistent_cases(e: int, m: int) -> list[StarCase]:
    if e % 2:
        return [StarCase.ONE_SELF_DUAL_SIMPLE] if m % 2 == 0 else []
    return [StarCase.NO_SELF_DUAL_SIMPLE, StarCase.TWO_SELF_DUAL_SIMPLES]


@dataclass(frozen=True, order=True)
class StarModule:
    socle: int
    length: int

    def normalized(self, p: StarParams) -> "StarModule":
        return StarModule(self.socle % p.e, self.length)

    def factors(self, p: StarParams) -> list[int]:
        """Composition factors from socle to head."""
        return [(self.socle - j) % p.e for j in range(self.length)]

    def __str__(self) -> str:
        return f"[{self.socle},{self.length}]"


def module(p: StarParams, i: int, length: int) -> StarModule:
    if not 1 <= length <= p.em + 1:
        raise ValueError(f"length {length} outside 1..{p.em + 1}")
    return StarModule(i % p.e, length)


def star_involution(p: StarParams, i: int) -> int:
    return (p.zero_star - i) % p.e


def _non_projective(p: StarParams, M: StarModule) -> None:
    if M.length > p.em:
        raise ProjectiveInput(f"{M} is projective")


def dual_module(p: StarParams, M: StarModule) -> StarModule:
    _non_projective(p, M)
    return StarModule(star_involution(p, M.socle - M.length + 1), M.length)


def is_self_dual(p: StarParams, M: StarModule) -> bool:
    if M.length > p.em:
        return M.socle % p.e == star_involution(p, M.socle)
    return (M.length - (M.socle - star_involution(p, M.socle) + 1)) % p.e == 0


def heller(p: StarParams, M: StarModule) -> StarModule:
    """Kernel of the projective cover ``[i-l+1, em+1] -> [i, l]``."""
    _non_projective(p, M)
    return StarModule((M.socle - M.length + 1) % p.e, p.em + 1 - M.length)


def submodule_of(p: StarParams, A: StarModule, B: StarModule) -> bool:
    return A.socle % p.e == B.socle % p.e and A.length <= B.length


def quotient_of(p: StarParams, A: StarModule, B: StarModule) -> bool:
    return (A.socle - A.length - (B.socle - B.length)) % p.e == 0 and A.length <= B.length


@dataclass(frozen=True)
class StarFamily:
    anchor: StarModule
    members: tuple[StarModule, ...]


def classify_star_self_duals(p: StarParams) -> tuple[StarFamily, StarFamily]:
    """The em non-projective self-dual modules, split into the two families that
    share the type of their anchor hook."""
    e, em, h = p.e, p.em, p.h
    case = p.star_case
    if case is StarCase.NO_SELF_DUAL_SIMPLE:
        n = em // 2
        fam1 = [StarModule(i % e, 2 * i + 2) for i in range(n)]
        fam2 = [StarModule((h + i) % e, 2 * i + 2) for i in range(n)]
        anchors = (fam1[-1], fam2[-1])
    elif case is StarCase.TWO_SELF_DUAL_SIMPLES:
        n = em // 2
        fam1 = [StarModule(i % e, 2 * i + 1) for i in range(n)]
        fam2 = [StarModule((h + i) % e, 2 * i + 1) for i in range(n)]
        anchors = (fam1[0], fam2[0])
    else:
        n = em // 2
        fam1 = [StarModule(i % e, 2 * i + 1) for i in range(n)]
        fam2 = [StarModule((p.zero_star - h + i) % e, 2 * i + 2) for i in range(n)]
        anchors = (fam1[0], fam2[-1])
    for M in fam1 + fam2:
        if not is_self_dual(p, M):
            raise CaseMismatch(f"family formula produced {M}, which is not self-dual")
    if len(set(fam1 + fam2)) != em:
        raise CaseMismatch("family formulas do not give em distinct modules")
    return StarFamily(anchors[0], tuple(fam1)), StarFamily(anchors[1], tuple(fam2))


def all_self_duals(p: StarParams) -> list[StarModule]:
    """Brute-force list of non-projective self-dual modules."""
    return [StarModule(i, l) for l in range(1, p.em + 1) for i in range(p.e) if is_self_dual(p, StarModule(i, l))]
