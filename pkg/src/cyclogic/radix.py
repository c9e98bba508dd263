"""Words as positional digit strings with exact big-integer values.

A RadixWord is a base-b digit sequence stored least-significant-first, so
the word (A0, A1, ..., A_{l-1}) has value sum(A_i * b**i).  Values are
plain Python integers (arbitrary precision — the bases of interest grow
like 2**(l*l), past any fixed-width type already at l = 3).

``rebase`` changes the digit base while preserving the value exactly.
One combination gets a normative padding rule: a length-l word in base
b = 2**(l*l) rebases to binary as exactly l**3 digits, making the cubic
length law a testable equality instead of an asymptotic claim.

``symbol_shift`` rotates a single digit by k modulo the base — the digit
sequence is exactly a word over logic values of arity b, and the shift is
the cyclic-shift generator acting on one symbol.  ``exponent_identity_check``
asks whether two words name the same root of unity z_n^e, i.e. whether
their values agree modulo n.
"""

from __future__ import annotations

from dataclasses import dataclass


class WordSpecError(ValueError):
    """The ``b:<base>|<digits>`` text form could not be parsed."""


@dataclass(frozen=True)
class RadixWord:
    """Base-b digit sequence, least-significant digit first.

    Most-significant zero digits are legal and significant: they change
    the word's length, not its value.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range [0, {self.base})")

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class PowerTable:
    """Memorized constants base**0 ... base**(count-1)."""

    base: int
    powers: tuple[int, ...]


def make_power_table(base: int, count: int) -> PowerTable:
    """Build base**0 ... base**(count-1) by iterated multiplication."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    powers = [1]
    for _ in range(count - 1):
        powers.append(powers[-1] * base)
    return PowerTable(base, tuple(powers))


def word_value(w: RadixWord, table: PowerTable | None = None) -> int:
    """Evaluate sum(digit_i * base**i) using a table of memorized powers."""
    if not w.digits:
        return 0
    if table is None:
        table = make_power_table(w.base, len(w.digits))
    elif table.base != w.base or len(table.powers) < len(w.digits):
        raise ValueError("power table does not cover this word")
    return sum(d * p for d, p in zip(w.digits, table.powers))


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def rebase(w: RadixWord, new_base: int) -> RadixWord:
    """Re-encode the word in another base, preserving its value exactly.

    Rebasing to the word's own base is the identity.  A length-l word in
    base 2**(l*l) rebases to binary as exactly l**3 digits (zero-padded).
    Every other case yields the minimal digit count: value 0 keeps one
    digit when the input was nonempty, and the empty word stays empty.
    """
    if new_base < 2:
        raise ValueError(f"bad base: must be >= 2, got {new_base}")
    if new_base == w.base:
        return w
    value = word_value(w)
    l = len(w.digits)
    if new_base == 2 and l >= 1 and w.base == 2 ** (l * l):
        return RadixWord(2, _digits_of(value, 2, pad_to=l**3))
    if not w.digits:
        return RadixWord(new_base, ())
    return RadixWord(new_base, _digits_of(value, new_base))


def _digits_of(value: int, base: int, pad_to: int = 1) -> tuple[int, ...]:
    digits = []
    while value:
        value, d = divmod(value, base)
        digits.append(d)
    while len(digits) < pad_to:
        digits.append(0)
    return tuple(digits)


def rebased_length(l: int, b: int) -> int:
    """Binary length of a length-l base-b word, b a power of two.

    Equals log2(b) * l, which is l**3 in the b = 2**(l*l) case.
    """
    if l < 0:
        raise ValueError(f"length must be >= 0, got {l}")
    if b < 2 or not _is_power_of_two(b):
        raise ValueError(f"not a power of two: {b}")
    return (b.bit_length() - 1) * l


def exponent_identity_check(w1: RadixWord, w2: RadixWord, n: int) -> bool:
    """Do the two words denote the same root of unity z_n^e?

    True iff their values agree modulo n; exact residue arithmetic, no
    complex numbers involved.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    return word_value(w1) % n == word_value(w2) % n


def symbol_shift(w: RadixWord, i: int, k: int) -> RadixWord:
    """Rotate digit i by k modulo the base, leaving the others untouched."""
    if not 0 <= i < len(w.digits):
        raise ValueError(f"digit index {i} out of range [0, {len(w.digits)})")
    if not 0 <= k < w.base:
        raise ValueError(f"shift {k} out of range [0, {w.base})")
    shifted = (w.digits[i] + k) % w.base
    return RadixWord(w.base, w.digits[:i] + (shifted,) + w.digits[i + 1 :])


def format_word(w: RadixWord) -> str:
    """Text form ``b:<base>|<d0>,<d1>,...`` with digits least-significant first."""
    return f"b:{w.base}|{','.join(str(d) for d in w.digits)}"


def parse_word(text: str) -> RadixWord:
    """Parse the ``b:<base>|<digits>`` text form back into a RadixWord.

    Syntax problems raise WordSpecError; a syntactically fine spec whose
    digits violate the base raises plain ValueError from the constructor.
    """
    head, sep, body = text.partition("|")
    if not sep or not head.startswith("b:"):
        raise WordSpecError(f"malformed word spec {text!r}; expected b:<base>|<digits>")
    try:
        base = int(head[2:])
        digits = tuple(int(part) for part in body.split(",") if part != "")
    except ValueError:
        raise WordSpecError(f"malformed word spec {text!r}") from None
    return RadixWord(base, digits)
