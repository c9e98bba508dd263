"""Exact many-valued logic on the n-th roots of unity.

A logic value is the root z_n^e = exp(2*pi*i*e/n), stored as the residue
exponent e modulo the arity n.  All operations work on exponents in the
ring Z_n, so table equality is exact; the complex form is a derived view
for display and cross-checking only.

Two generator operations build everything else:

* ``exponent_product(n, a, b)`` returns z_n^(a*b),
* ``cyclic_shift(n, k, v)`` rotates a value by k positions, z_n^(e+k).

From these the module enumerates the complete families of one-argument
(n^n members) and two-argument (n^(n*n) members) logic functions, checks
their pairwise distinctness, and, for arity 2, classifies each table
against the standard boolean connectives.  A bundled label catalog records
the names the 4 + 16 arity-2 tables are conventionally printed with;
``label_report`` compares those labels against the computed classification
and flags every disagreement instead of adopting either side.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Literal

#: Full unary enumeration is refused above this arity (n^n tables) unless
#: the caller passes allow_large=True.
UNARY_ENUM_LIMIT = 8
#: Full binary enumeration is refused above this arity (n^(n*n) tables).
BINARY_ENUM_LIMIT = 3


class EnumerationTooLarge(ValueError):
    """A full family enumeration would exceed the configured guard."""


def _check_arity(n: int) -> None:
    if n < 2:
        raise ValueError(f"arity too small: need n >= 2, got {n}")


@dataclass(frozen=True)
class LogicValue:
    """The root of unity z_n^e, kept as an exact residue exponent."""

    modulus: int
    exponent: int

    def __post_init__(self) -> None:
        _check_arity(self.modulus)
        if not 0 <= self.exponent < self.modulus:
            raise ValueError(
                f"exponent {self.exponent} not in [0, {self.modulus})"
            )

    def __str__(self) -> str:
        return f"z{self.modulus}^{self.exponent}"


def make_value(n: int, a: int) -> LogicValue:
    """Build z_n^a, normalizing any integer a into [0, n)."""
    _check_arity(n)
    return LogicValue(n, a % n)


def to_complex(v: LogicValue) -> tuple[float, float]:
    """Return (re, im) of the value as a point on the unit circle."""
    angle = 2.0 * math.pi * v.exponent / v.modulus
    return (math.cos(angle), math.sin(angle))


def exponent_product(n: int, a: int, b: int) -> LogicValue:
    """The two-argument generator: (z_n^a, z_n^b) -> z_n^(a*b)."""
    _check_arity(n)
    if not 0 <= a < n:
        raise ValueError(f"first argument {a} out of range [0, {n})")
    if not 0 <= b < n:
        raise ValueError(f"second argument {b} out of range [0, {n})")
    return LogicValue(n, (a * b) % n)


def cyclic_shift(n: int, k: int, v: LogicValue) -> LogicValue:
    """The one-argument generator: rotate z_n^e to z_n^(e+k)."""
    _check_arity(n)
    if v.modulus != n:
        raise ValueError(f"modulus mismatch: value has {v.modulus}, expected {n}")
    if not 0 <= k < n:
        raise ValueError(f"shift {k} out of range [0, {n})")
    return LogicValue(n, (v.exponent + k) % n)


@dataclass(frozen=True)
class UnaryIndex:
    """Index vector (i_0, ..., i_{n-1}) selecting one unary table."""

    modulus: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_arity(self.modulus)
        if len(self.indices) != self.modulus:
            raise ValueError(
                f"index vector has {len(self.indices)} entries, expected {self.modulus}"
            )
        for i in self.indices:
            if not 0 <= i < self.modulus:
                raise ValueError(f"index entry {i} out of range [0, {self.modulus})")


@dataclass(frozen=True)
class BinaryIndex:
    """n x n index matrix; row = first-argument exponent, column = second."""

    modulus: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_arity(self.modulus)
        if len(self.matrix) != self.modulus:
            raise ValueError(
                f"index matrix has {len(self.matrix)} rows, expected {self.modulus}"
            )
        for row in self.matrix:
            if len(row) != self.modulus:
                raise ValueError(
                    f"index matrix row has {len(row)} entries, expected {self.modulus}"
                )
            for i in row:
                if not 0 <= i < self.modulus:
                    raise ValueError(
                        f"index entry {i} out of range [0, {self.modulus})"
                    )


@dataclass(frozen=True)
class UnaryTable:
    """Truth table of a one-argument function; slot a holds the output for z_n^a."""

    modulus: int
    outputs: tuple[LogicValue, ...]

    def __post_init__(self) -> None:
        if len(self.outputs) != self.modulus:
            raise ValueError("output count must equal the modulus")
        for out in self.outputs:
            if out.modulus != self.modulus:
                raise ValueError("table outputs must share the table's modulus")


@dataclass(frozen=True)
class BinaryTable:
    """Truth table of a two-argument function; cell (a, b) holds the output."""

    modulus: int
    outputs: tuple[tuple[LogicValue, ...], ...]

    def __post_init__(self) -> None:
        if len(self.outputs) != self.modulus:
            raise ValueError("row count must equal the modulus")
        for row in self.outputs:
            if len(row) != self.modulus:
                raise ValueError("column count must equal the modulus")
            for out in row:
                if out.modulus != self.modulus:
                    raise ValueError("table outputs must share the table's modulus")


@dataclass(frozen=True)
class TruthConvention:
    """Which exponent of z_2 names boolean true (0 by default)."""

    true_exponent: int = 0

    def __post_init__(self) -> None:
        if self.true_exponent not in (0, 1):
            raise ValueError("true_exponent must be 0 or 1")


def unary_from_index(idx: UnaryIndex) -> UnaryTable:
    """Table of a |-> shift(z_n^a, i_a) for the given index vector."""
    n = idx.modulus
    outputs = tuple(
        cyclic_shift(n, idx.indices[a], LogicValue(n, a)) for a in range(n)
    )
    return UnaryTable(n, outputs)


def binary_from_index(idx: BinaryIndex) -> BinaryTable:
    """Table of (a, b) |-> shift(z_n^(a*b), i_ab) for the given index matrix."""
    n = idx.modulus
    outputs = tuple(
        tuple(
            cyclic_shift(n, idx.matrix[a][b], exponent_product(n, a, b))
            for b in range(n)
        )
        for a in range(n)
    )
    return BinaryTable(n, outputs)


def enumerate_unary(
    n: int, allow_large: bool = False
) -> Iterator[tuple[UnaryIndex, UnaryTable]]:
    """Yield all n^n unary (index, table) pairs, indexes in lexicographic order.

    The first index is the all-zero vector.  Refuses n > UNARY_ENUM_LIMIT
    at call time unless allow_large is set.
    """
    _check_arity(n)
    if n > UNARY_ENUM_LIMIT and not allow_large:
        raise EnumerationTooLarge(
            f"unary enumeration for n={n} yields {n}^{n} tables; "
            f"pass allow_large=True to force it"
        )

    def generate() -> Iterator[tuple[UnaryIndex, UnaryTable]]:
        for combo in itertools.product(range(n), repeat=n):
            idx = UnaryIndex(n, combo)
            yield idx, unary_from_index(idx)

    return generate()


def enumerate_binary(
    n: int, allow_large: bool = False
) -> Iterator[tuple[BinaryIndex, BinaryTable]]:
    """Yield all n^(n*n) binary (index, table) pairs in lexicographic order."""
    _check_arity(n)
    if n > BINARY_ENUM_LIMIT and not allow_large:
        raise EnumerationTooLarge(
            f"binary enumeration for n={n} yields {n}^{n * n} tables; "
            f"pass allow_large=True to force it"
        )

    def generate() -> Iterator[tuple[BinaryIndex, BinaryTable]]:
        for combo in itertools.product(range(n), repeat=n * n):
            matrix = tuple(combo[r * n : (r + 1) * n] for r in range(n))
            idx = BinaryIndex(n, matrix)
            yield idx, binary_from_index(idx)

    return generate()


def distinctness_report(
    n: int, family: Literal["unary", "binary"], allow_large: bool = False
) -> tuple[int, int]:
    """Materialize a whole family and return (total, distinct) table counts."""
    if family == "unary":
        pairs = enumerate_unary(n, allow_large)
    elif family == "binary":
        pairs = enumerate_binary(n, allow_large)
    else:
        raise ValueError(f"unknown family {family!r}")
    total = 0
    seen: set[UnaryTable | BinaryTable] = set()
    for _, table in pairs:
        total += 1
        seen.add(table)
    return total, len(seen)


def apply_unary(t: UnaryTable, v: LogicValue) -> LogicValue:
    """Look up the table output for v."""
    if v.modulus != t.modulus:
        raise ValueError(f"modulus mismatch: value has {v.modulus}, table {t.modulus}")
    return t.outputs[v.exponent]


def apply_binary(t: BinaryTable, a: LogicValue, b: LogicValue) -> LogicValue:
    """Look up the table output for the pair (a, b)."""
    if a.modulus != t.modulus or b.modulus != t.modulus:
        raise ValueError("modulus mismatch between arguments and table")
    return t.outputs[a.exponent][b.exponent]


UNARY_NAMES = ("identity", "negation", "constant-true", "constant-false")

BINARY_NAMES = (
    "and", "or", "nand", "nor", "xor", "iff",
    "implies", "converse-implies", "not-implies", "not-converse-implies",
    "left-projection", "right-projection", "left-complement", "right-complement",
    "constant-true", "constant-false",
)

# Keyed by (f(T,T), f(T,F), f(F,T), f(F,F)).
_BINARY_PATTERNS = {
    (True, False, False, False): "and",
    (True, True, True, False): "or",
    (False, True, True, True): "nand",
    (False, False, False, True): "nor",
    (False, True, True, False): "xor",
    (True, False, False, True): "iff",
    (True, False, True, True): "implies",
    (True, True, False, True): "converse-implies",
    (False, True, False, False): "not-implies",
    (False, False, True, False): "not-converse-implies",
    (True, True, False, False): "left-projection",
    (True, False, True, False): "right-projection",
    (False, False, True, True): "left-complement",
    (False, True, False, True): "right-complement",
    (True, True, True, True): "constant-true",
    (False, False, False, False): "constant-false",
}


def _require_boolean(modulus: int) -> None:
    if modulus != 2:
        raise ValueError(f"not boolean: classification needs modulus 2, got {modulus}")


def classify_unary(t: UnaryTable, conv: TruthConvention = TruthConvention()) -> str:
    """Name a modulus-2 unary table as one of the four boolean functions."""
    _require_boolean(t.modulus)
    true_e = conv.true_exponent
    out_on_true = t.outputs[true_e].exponent == true_e
    out_on_false = t.outputs[1 - true_e].exponent == true_e
    if out_on_true and not out_on_false:
        return "identity"
    if not out_on_true and out_on_false:
        return "negation"
    if out_on_true:
        return "constant-true"
    return "constant-false"


def classify_binary(t: BinaryTable, conv: TruthConvention = TruthConvention()) -> str:
    """Name a modulus-2 binary table as one of the sixteen boolean connectives."""
    _require_boolean(t.modulus)
    true_e = conv.true_exponent
    false_e = 1 - true_e

    def truth(a_exp: int, b_exp: int) -> bool:
        return t.outputs[a_exp][b_exp].exponent == true_e

    pattern = (
        truth(true_e, true_e),
        truth(true_e, false_e),
        truth(false_e, true_e),
        truth(false_e, false_e),
    )
    return _BINARY_PATTERNS[pattern]


# ---------------------------------------------------------------------------
# Label catalog
#
# The catalog below records, for every arity-2 generated table, the label it
# is conventionally printed with.  Several entries do not name the function
# the table actually computes (under either truth convention); label_report
# makes those disagreements explicit rather than silently correcting them.
# ---------------------------------------------------------------------------

UNARY_CATALOG: dict[tuple[int, ...], str] = {
    (0, 0): "self projection",
    (0, 1): "antilogy",
    (1, 0): "tautology",
    (1, 1): "complementation",
}

BINARY_CATALOG: dict[tuple[int, ...], str] = {
    (0, 0, 0, 0): "nand",
    (0, 0, 0, 1): "antilogy",
    (0, 0, 1, 0): "left complementation",
    (0, 0, 1, 1): "if ... then",
    (0, 1, 0, 0): "right projection",
    (0, 1, 0, 1): "if",
    (0, 1, 1, 0): "neither ... nor",
    (0, 1, 1, 1): "if and only if (iff)",
    (1, 0, 0, 0): "xor",
    (1, 0, 0, 1): "or",
    (1, 0, 1, 0): "not ... but",
    (1, 0, 1, 1): "right projection",
    (1, 1, 0, 0): "but not",
    (1, 1, 0, 1): "left projection",
    (1, 1, 1, 0): "tautology",
    (1, 1, 1, 1): "and",
}

# Catalog vocabulary -> classifier vocabulary, so the two can be compared.
CATALOG_TO_CONNECTIVE: dict[str, str] = {
    "self projection": "identity",
    "complementation": "negation",
    "antilogy": "constant-false",
    "tautology": "constant-true",
    "nand": "nand",
    "and": "and",
    "or": "or",
    "xor": "xor",
    "neither ... nor": "nor",
    "if and only if (iff)": "iff",
    "if ... then": "implies",
    "if": "converse-implies",
    "but not": "not-implies",
    "not ... but": "not-converse-implies",
    "left projection": "left-projection",
    "right projection": "right-projection",
    "left complementation": "left-complement",
    "right complementation": "right-complement",
}


def catalog_label(kind: Literal["unary", "binary"], index: tuple[int, ...]) -> str | None:
    """Catalog label for a flattened arity-2 index, or None if uncataloged."""
    table = UNARY_CATALOG if kind == "unary" else BINARY_CATALOG
    return table.get(tuple(index))


@dataclass(frozen=True)
class LabelCheck:
    """One catalog entry compared against the computed classification."""

    index: tuple[int, ...]
    computed: str
    catalog: str
    catalog_connective: str
    agrees: bool


def label_report(
    kind: Literal["unary", "binary"] = "binary",
    conv: TruthConvention = TruthConvention(),
) -> tuple[LabelCheck, ...]:
    """Compare every arity-2 catalog label with the computed connective name."""
    checks = []
    if kind == "unary":
        for idx, table in enumerate_unary(2):
            flat = idx.indices
            computed = classify_unary(table, conv)
            label = UNARY_CATALOG[flat]
            normalized = CATALOG_TO_CONNECTIVE[label]
            checks.append(LabelCheck(flat, computed, label, normalized, computed == normalized))
    elif kind == "binary":
        for idx, table in enumerate_binary(2):
            flat = idx.matrix[0] + idx.matrix[1]
            computed = classify_binary(table, conv)
            label = BINARY_CATALOG[flat]
            normalized = CATALOG_TO_CONNECTIVE[label]
            checks.append(LabelCheck(flat, computed, label, normalized, computed == normalized))
    else:
        raise ValueError(f"unknown family {kind!r}")
    return tuple(checks)
