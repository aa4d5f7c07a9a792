"""Character tables and (twisted) Frobenius-Schur indicators."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    BadSquareMap,
    DualityMismatch,
    FormatError,
    NoIdentityClass,
    NotLinear,
    NumericallyUnstable,
    SizeSumMismatch,
    TableError,
)

TOL = 1e-6


@dataclass(frozen=True)
class ConjugacyClass:
    name: str
    size: int
    square: int


@dataclass(frozen=True)
class CharacterTable:
    order: int
    classes: tuple[ConjugacyClass, ...]
    characters: Mapping[str, tuple[complex, ...]]

    def __post_init__(self):
        n = len(self.classes)
        if sum(c.size for c in self.classes) != self.order:
            raise SizeSumMismatch(f"class sizes sum to {sum(c.size for c in self.classes)}, not {self.order}")
        for c in self.classes:
            if not 0 <= c.square < n:
                raise BadSquareMap(f"class {c.name!r} squares to index {c.square} out of range")
        for name, row in self.characters.items():
            if len(row) != n:
                raise TableError(f"character {name!r} has {len(row)} values for {n} classes")
        self.identity  # validates

    @property
    def identity(self) -> int:
        for k, c in enumerate(self.classes):
            if c.size != 1 or c.square != k:
                continue
            rows = list(self.characters.values())
            degs = [row[k] for row in rows]
            if all(abs(d.imag) < TOL and d.real > 0.5 and abs(d.real - round(d.real)) < TOL for d in degs):
                if all(all(abs(v) <= d.real + TOL for v in row) for row, d in zip(rows, degs)):
                    return k
        raise NoIdentityClass("no class of size 1 fixed by squaring carries the character degrees")

    def degree(self, chi: str) -> int:
        return int(round(self.row(chi)[self.identity].real))

    def row(self, chi: str) -> tuple[complex, ...]:
        try:
            return self.characters[chi]
        except KeyError:
            raise TableError(f"unknown character {chi!r}") from None

    def conjugate(self, chi: str) -> tuple[complex, ...]:
        return tuple(v.conjugate() for v in self.row(chi))

    def inner(self, a: Sequence[complex], b: Sequence[complex]) -> complex:
        return sum(c.size * x * y.conjugate() for c, x, y in zip(self.classes, a, b)) / self.order

    def to_document(self) -> dict:
        return {
            "order": self.order,
            "classes": [{"name": c.name, "size": c.size, "square": c.square} for c in self.classes],
            "characters": [
                {"name": name, "values": [[_clean(v.real), _clean(v.imag)] for v in row]}
                for name, row in self.characters.items()
            ],
        }


def _clean(x: float) -> float:
    return 0.0 if abs(x) < 1e-15 else x


def parse_table(document: str | bytes | Mapping) -> CharacterTable:
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, Mapping) or set(document) != {"order", "classes", "characters"}:
        raise FormatError("a table needs exactly the fields 'order', 'classes' and 'characters'")
    try:
        classes = tuple(ConjugacyClass(str(c["name"]), int(c["size"]), int(c["square"])) for c in document["classes"])
        chars = {}
        for ch in document["characters"]:
            name = str(ch["name"])
            if name in chars:
                raise FormatError(f"duplicate character {name!r}")
            chars[name] = tuple(complex(float(re), float(im)) for re, im in ch["values"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed table: {exc}") from exc
    return CharacterTable(int(document["order"]), classes, chars)


def dump_table(table: CharacterTable) -> str:
    return json.dumps(table.to_document(), sort_keys=True, indent=2) + "\n"


def _snap(value: complex, what: str) -> int:
    k = round(value.real)
    residual = max(abs(value.real - k), abs(value.imag))
    if residual > TOL or k not in (-1, 0, 1):
        raise NumericallyUnstable(f"{what} = {value} is not within {TOL} of -1, 0 or 1", value=[value.real, value.imag])
    return int(k)


def _squared(table: CharacterTable, chi: str) -> list[complex]:
    row = table.row(chi)
    return [row[c.square] for c in table.classes]


def fs_indicator(table: CharacterTable, chi: str) -> int:
    """(1/|G|) sum over g of chi(g^2)."""
    total = sum(c.size * v for c, v in zip(table.classes, _squared(table, chi))) / table.order
    return _snap(total, f"indicator of {chi}")


def twisted_indicator(table: CharacterTable, mu: str, chi: str) -> int:
    """(1/|G|) sum over g of mu(g) chi(g^2), for a linear character ``mu``."""
    lam = table.row(mu)
    if table.degree(mu) != 1:
        raise NotLinear(f"{mu} has degree {table.degree(mu)}, not 1")
    row = table.row(chi)
    if any(abs(v.conjugate() - l * x) > TOL for v, l, x in zip(row, lam, row)):
        warnings.warn(f"conjugate of {chi} is not {mu} times {chi}", DualityMismatch, stacklevel=2)
    total = sum(c.size * l * v for c, l, v in zip(table.classes, lam, _squared(table, chi))) / table.order
    return _snap(total, f"twisted indicator <{mu}, {chi}^(2)>")


def product_row(table: CharacterTable, a: str, b: str) -> tuple[complex, ...]:
    return tuple(x * y for x, y in zip(table.row(a), table.row(b)))


def find_character(table: CharacterTable, values: Sequence[complex]) -> str:
    for name, row in table.characters.items():
        if all(abs(x - y) < TOL for x, y in zip(row, values)):
            return name
    raise TableError("no character with the given values")
