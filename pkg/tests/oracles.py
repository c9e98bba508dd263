"""Independent oracles the library is checked against.

Nothing here calls into the engine's step logic: the brute-force acceptor
re-implements the step semantics from scratch (plain recursion over all
transition-choice sequences, no visited sets), and the value oracle uses
Horner evaluation instead of a power table.
"""

from __future__ import annotations

from functools import reduce

from cyclogic.turing import InstantaneousDescription, TuringMachine


def naive_value(digits, base):
    """Horner-scheme base conversion, most-significant digit first."""
    return reduce(lambda acc, d: acc * base + d, reversed(tuple(digits)), 0)


def naive_binary_digits(value, length=None):
    """LSB-first bits of a value, optionally zero-padded."""
    bits = []
    while value:
        bits.append(value & 1)
        value >>= 1
    if not bits:
        bits.append(0)
    if length is not None:
        while len(bits) < length:
            bits.append(0)
    return tuple(bits)


def _apply_choice(m: TuringMachine, desc, tr):
    """One step by direct transcription of the step rules; None if the
    transition orders a head off the left end."""
    tapes = []
    heads = []
    for j in range(m.tapes):
        word = list(desc.tapes[j])
        i = desc.heads[j]
        if tr.moves[j] == "L" and i == 1:
            return None
        if i == len(word) + 1:
            word = word + [tr.writes[j]]
        else:
            word[i - 1] = tr.writes[j]
        tapes.append(tuple(word))
        heads.append(i + 1 if tr.moves[j] == "R" else i - 1)
    return InstantaneousDescription(tr.next_state, tuple(tapes), tuple(heads))


def brute_force_accepts(m: TuringMachine, word, t: int) -> bool:
    """Enumerate every transition-choice sequence of length <= t."""
    start = InstantaneousDescription(
        m.initial, (tuple(word),) + ((),) * (m.tapes - 1), (1,) * m.tapes
    )

    def explore(desc, depth):
        if desc.state == m.accept:
            return True
        if depth == t or desc.state == m.reject:
            return False
        scanned = tuple(
            tape[i - 1] if i <= len(tape) else m.blank
            for tape, i in zip(desc.tapes, desc.heads)
        )
        for tr in m.transitions.get((desc.state, scanned), ()):
            nxt = _apply_choice(m, desc, tr)
            if nxt is not None and explore(nxt, depth + 1):
                return True
        return False

    return explore(start, 0)


def step_rule_violations(m: TuringMachine, parent, child) -> list[str]:
    """Check one parent -> child pair against the step rules."""
    problems = []
    for j in range(m.tapes):
        old, new = parent.tapes[j], child.tapes[j]
        i, i2 = parent.heads[j], child.heads[j]
        if i2 not in (i - 1, i + 1):
            problems.append(f"tape {j}: head moved {i} -> {i2}, not by one")
        if i2 < 1:
            problems.append(f"tape {j}: head left the tape ({i2})")
        if i == 1 and i2 == 0:
            problems.append(f"tape {j}: moved left from square 1")
        if len(new) not in (len(old), len(old) + 1):
            problems.append(f"tape {j}: length {len(old)} -> {len(new)}")
        if (len(new) == len(old) + 1) != (i == len(old) + 1):
            problems.append(f"tape {j}: grew without the head just past the word")
        for k in range(min(len(old), len(new))):
            if k + 1 != i and old[k] != new[k]:
                problems.append(f"tape {j}: square {k + 1} changed away from the head")
        if any(s == m.blank for s in new):
            problems.append(f"tape {j}: stores the blank")
        if not 1 <= i2 <= len(new) + 1:
            problems.append(f"tape {j}: head {i2} outside [1, {len(new) + 1}]")
    return problems


# ---------------------------------------------------------------------------
# Frozen expected tables: cell-for-cell transcriptions of the 4 + 16
# cataloged arity-2 tables (output exponents; unary slot = input exponent,
# binary grids indexed [first argument][second argument]).
# ---------------------------------------------------------------------------

PRINTED_UNARY_TABLES = {
    (0, 0): (0, 1),
    (0, 1): (0, 0),
    (1, 0): (1, 1),
    (1, 1): (1, 0),
}

PRINTED_BINARY_TABLES = {
    (0, 0, 0, 0): ((0, 0), (0, 1)),
    (0, 0, 0, 1): ((0, 0), (0, 0)),
    (0, 0, 1, 0): ((0, 0), (1, 1)),
    (0, 0, 1, 1): ((0, 0), (1, 0)),
    (0, 1, 0, 0): ((0, 1), (0, 1)),
    (0, 1, 0, 1): ((0, 1), (0, 0)),
    (0, 1, 1, 0): ((0, 1), (1, 1)),
    (0, 1, 1, 1): ((0, 1), (1, 0)),
    (1, 0, 0, 0): ((1, 0), (0, 1)),
    (1, 0, 0, 1): ((1, 0), (0, 0)),
    (1, 0, 1, 0): ((1, 0), (1, 1)),
    (1, 0, 1, 1): ((1, 0), (1, 0)),
    (1, 1, 0, 0): ((1, 1), (0, 1)),
    (1, 1, 0, 1): ((1, 1), (0, 0)),
    (1, 1, 1, 0): ((1, 1), (1, 1)),
    (1, 1, 1, 1): ((1, 1), (1, 0)),
}


def unary_exponents(table):
    return tuple(v.exponent for v in table.outputs)


def binary_exponents(table):
    return tuple(tuple(v.exponent for v in row) for row in table.outputs)
