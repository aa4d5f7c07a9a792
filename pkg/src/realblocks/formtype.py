"""Orthogonal versus symplectic type of self-dual modules.

A self-dual module takes the type of one of the two self-dual hooks, reached
by moving along its Heller orbit to the rim.  Which hook depends on the star
case and the level; the hook types themselves come from indicator data or are
supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional

from .errors import BadEpsilon, InconsistentAnchors, MissingAnchor, NotSelfDualPosition, ParityMismatch
from .star import StarCase, StarParams
from .tube import TubePosition, is_self_dual_position, omega_pow


class FormType(str, Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"

    @property
    def sign(self) -> str:
        return "+" if self is FormType.ORTHOGONAL else "-"


def parse_form_type(value) -> Optional[FormType]:
    """'orthogonal'/'symplectic'/'+'/'-'/+1/-1; '?' or None means unknown."""
    if value is None or value == "?":
        return None
    if isinstance(value, FormType):
        return value
    text = str(value).strip().lower()
    if text in ("orthogonal", "o", "+", "+1", "1"):
        return FormType.ORTHOGONAL
    if text in ("symplectic", "s", "sp", "-", "-1"):
        return FormType.SYMPLECTIC
    raise ValueError(f"unknown type {value!r}")


def hook_keys(p: StarParams) -> tuple[str, str]:
    if p.star_case is StarCase.ONE_SELF_DUAL_SIMPLE:
        return "bottom", "top"
    return "column_E0", "column_Eh"


@dataclass(frozen=True)
class HookTypeAssignment:
    types: Mapping[str, Optional[FormType]]

    def get(self, key: str) -> Optional[FormType]:
        return self.types.get(key)

    def to_document(self) -> dict:
        return {k: (v.value if v else "?") for k, v in sorted(self.types.items())}

    @classmethod
    def from_mapping(cls, p: StarParams, data: Mapping) -> "HookTypeAssignment":
        keys = hook_keys(p)
        unknown = set(data) - set(keys)
        if unknown:
            raise MissingAnchor(f"hook keys for case {p.star_case.value} are {list(keys)}, got {sorted(unknown)}")
        return cls({k: parse_form_type(data.get(k)) for k in keys})

    @classmethod
    def parse(cls, p: StarParams, text: str) -> "HookTypeAssignment":
        """Parse ``key=value,key=value``."""
        data = {}
        for item in filter(None, (s.strip() for s in text.split(","))):
            key, _, value = item.partition("=")
            data[key.strip()] = value.strip() or None
        if p.star_case is not StarCase.ONE_SELF_DUAL_SIMPLE:
            # accept the rim names as aliases for the two columns
            data = {{"bottom": "column_E0", "top": "column_Eh"}.get(k, k): v for k, v in data.items()}
        return cls.from_mapping(p, data)


@dataclass(frozen=True)
class TypeVerdict:
    value: Optional[FormType]
    anchor: str  # which hook decides, e.g. "column_E0"
    hook_position: TubePosition
    provenance: str

    def to_document(self) -> dict:
        return {
            "type": self.value.value if self.value else None,
            "anchor": self.anchor,
            "hook_position": self.hook_position.as_list(),
            "provenance": self.provenance,
        }


def anchor_positions(p: StarParams) -> dict[str, TubePosition]:
    """Rim positions of the two self-dual hooks, keyed as in hook assignments."""
    e, m, h = p.e, p.m, p.h
    if p.star_case is StarCase.TWO_SELF_DUAL_SIMPLES:
        return {"column_E0": TubePosition(0, 1), "column_Eh": TubePosition(h % e, 1)}
    if p.star_case is StarCase.NO_SELF_DUAL_SIMPLE:
        return {"column_E0": TubePosition((m * h - 1) % e, p.em), "column_Eh": TubePosition((m * h + h - 1) % e, p.em)}
    return {"bottom": TubePosition(0, 1), "top": omega_pow(p, TubePosition(0, 1), e)}


def _check_anchors(p: StarParams, hooks: Optional[HookTypeAssignment]) -> None:
    if hooks is None or p.star_case is not StarCase.TWO_SELF_DUAL_SIMPLES or p.m % 2 == 0:
        return
    a, b = hooks.get("column_E0"), hooks.get("column_Eh")
    if a is not None and b is not None and a is not b:
        raise InconsistentAnchors("with m odd both self-dual simples must have the same type",
                                  column_E0=a.value, column_Eh=b.value)


def resolve_type(p: StarParams, pos: TubePosition, hooks: Optional[HookTypeAssignment] = None) -> TypeVerdict:
    """Type of the self-dual module at ``pos``; symbolic when the hook is unassigned."""
    pos = TubePosition(pos.column % p.e, pos.level)
    if not 1 <= pos.level <= p.em or not is_self_dual_position(p, pos):
        raise NotSelfDualPosition(f"{pos.as_list()} is not a self-dual position", position=pos.as_list())
    _check_anchors(p, hooks)
    anchors = anchor_positions(p)
    level, case = pos.level, p.star_case
    if case is StarCase.TWO_SELF_DUAL_SIMPLES:
        if level % 2 == 0:
            raise ParityMismatch(f"level {level} must be odd when there are two self-dual simples")
        i = (level - 1) // 2
        reached = TubePosition((pos.column - i) % p.e, 1)
        symbol = f"type = type(Ω^{{-{2 * i}}}(H⁺))"
    elif case is StarCase.NO_SELF_DUAL_SIMPLE:
        if level % 2:
            raise ParityMismatch(f"level {level} must be even when there is no self-dual simple")
        j = (p.em - level) // 2
        reached = TubePosition((pos.column + j) % p.e, p.em)
        symbol = f"type = type(Ω^{{{2 * j + 1}}}(H⁺))"
    else:
        if (level - 1) % 2 == 0:
            reached, symbol = anchors["bottom"], "type = type(g(E_0))"
        else:
            reached, symbol = anchors["top"], f"type = type(Ω^{{{p.e}}}(g(E_0)))"
    key = next((k for k, v in anchors.items() if v == reached), None)
    if key is None:
        raise ParityMismatch(f"rim position {reached.as_list()} reached from {pos.as_list()} is not a self-dual hook")
    value = hooks.get(key) if hooks is not None else None
    return TypeVerdict(value, key, reached, symbol)


def symbolic_anchor(p: StarParams, level: int) -> str:
    """The column-free statement of which hook decides the type at ``level``."""
    from .tube import self_dual_columns

    cols = self_dual_columns(p, level)
    if not cols:
        raise NotSelfDualPosition(f"no self-dual position at level {level}")
    return resolve_type(p, TubePosition(cols[0], level)).provenance


def fs_to_type(nu: int) -> FormType:
    if nu == 1:
        return FormType.ORTHOGONAL
    if nu == -1:
        return FormType.SYMPLECTIC
    raise MissingAnchor(f"indicator {nu} does not come from a real character")


def anchor_types_from_indicators(p: StarParams, fs_data: Mapping) -> HookTypeAssignment:
    """Hook types from Frobenius-Schur indicators.

    ``fs_data`` maps hook keys to the indicator of the real character lifting
    that irreducible anchor (or directly to a type for anchors known by other
    means).  The optional key ``"exceptional"`` lists indicators of real
    exceptional characters; if they agree they fix every anchor.
    """
    keys = hook_keys(p)
    types: dict[str, Optional[FormType]] = {}
    exceptional = fs_data.get("exceptional")
    shared = None
    if exceptional:
        if isinstance(exceptional, int):
            exceptional = [exceptional]
        values = {int(v) for v in exceptional}
        if len(values) == 1:
            shared = fs_to_type(values.pop())
    for k in keys:
        v = fs_data.get(k)
        if v is None:
            types[k] = shared
        elif isinstance(v, int) and not isinstance(v, bool):
            types[k] = fs_to_type(v)
        else:
            types[k] = parse_form_type(v)
    missing = [k for k in keys if types[k] is None]
    if missing:
        raise MissingAnchor(f"no type known for hook(s) {missing}", missing=missing)
    hooks = HookTypeAssignment(types)
    _check_anchors(p, hooks)
    return hooks


def normal_defect_type(epsilon: int) -> FormType:
    """Type from the twisted indicator when the defect group is normal (note the sign flip)."""
    if epsilon == -1:
        return FormType.ORTHOGONAL
    if epsilon == 1:
        return FormType.SYMPLECTIC
    raise BadEpsilon(f"twisted indicator must be +1 or -1, got {epsilon!r}")


def d_plus_from_parameters(n: int, eta: int, e: int) -> int:
    """Positive distance via the instance formula (n - 1)/2 + eta*e."""
    if n % 2 == 0:
        raise ValueError("n must be odd")
    return (n - 1) // 2 + eta * e
