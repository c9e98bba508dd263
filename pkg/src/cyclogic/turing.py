"""Multi-tape deterministic and nondeterministic Turing machine engine.

A machine is the 8-tuple (states, tape alphabet, blank, input alphabet,
transition table, initial, accept, reject) over m one-way-infinite tapes.
A configuration (instantaneous description) is <q; tape words; head
positions>: the state, the visited non-blank portion of each tape, and
1-based head positions with 1 <= i <= len(word) + 1.

One step applies a transition chosen from delta(state, scanned symbols):

1. each tape gets its write symbol at the scanned square,
2. every other square is unchanged,
3. the word grows by exactly one symbol when the head sat just past it,
4. a transition ordering a head left from square 1 cannot fire
   (that branch dies without accepting),
5. every head then moves one square left or right.

Machines never print the blank, so the stored words stay blank-free; a
head at position len(word) + 1 is scanning the blank on the first
unvisited square.

Bounded acceptance searches the step graph breadth-first with visited-set
deduplication, so an accepting outcome always carries a minimal-length
witness path.  The space-bounded variant additionally prunes every
configuration whose head positions exceed the bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

Word = Sequence[str]
TransitionKey = tuple[str, tuple[str, ...]]

VERDICT_ACCEPTED = "accepted"
VERDICT_REJECTED = "rejected"
VERDICT_DEAD_END = "dead-end"
VERDICT_BOUND_EXCEEDED = "bound-exceeded"


class NotDeterministic(ValueError):
    """A deterministic run was requested on a nondeterministic machine."""


@dataclass(frozen=True)
class Transition:
    """One transition target: next state, per-tape writes, per-tape moves."""

    next_state: str
    writes: tuple[str, ...]
    moves: tuple[str, ...]


@dataclass(frozen=True)
class TuringMachine:
    states: frozenset[str]
    tape_alphabet: frozenset[str]
    blank: str
    input_alphabet: frozenset[str]
    transitions: Mapping[TransitionKey, tuple[Transition, ...]]
    initial: str
    accept: str
    reject: str
    tapes: int = 1


def make_machine(
    states: Iterable[str],
    tape_alphabet: Iterable[str],
    blank: str,
    input_alphabet: Iterable[str],
    transitions: Mapping[TransitionKey, Iterable[Transition]],
    initial: str,
    accept: str,
    reject: str,
    tapes: int = 1,
) -> TuringMachine:
    """Build a TuringMachine, freezing all the container fields."""
    return TuringMachine(
        states=frozenset(states),
        tape_alphabet=frozenset(tape_alphabet),
        blank=blank,
        input_alphabet=frozenset(input_alphabet),
        transitions={key: tuple(targets) for key, targets in transitions.items()},
        initial=initial,
        accept=accept,
        reject=reject,
        tapes=tapes,
    )


@dataclass(frozen=True)
class InstantaneousDescription:
    """Configuration <state; visited tape words; 1-based head positions>."""

    state: str
    tapes: tuple[tuple[str, ...], ...]
    heads: tuple[int, ...]

    def __str__(self) -> str:
        words = ", ".join(_format_tape(t) for t in self.tapes)
        heads = ", ".join(str(i) for i in self.heads)
        return f"<{self.state}; {words}; {heads}>"


def _format_tape(tape: tuple[str, ...]) -> str:
    if not tape:
        return "Λ"  # the empty word
    if all(len(s) == 1 for s in tape):
        return "".join(tape)
    return " ".join(tape)


@dataclass(frozen=True)
class RunOutcome:
    """Result of a bounded run or search."""

    verdict: str
    steps_used: int
    max_head_position: int
    trace: tuple[InstantaneousDescription, ...] | None = None


@dataclass(frozen=True)
class Violation:
    """One validation finding; warnings flag permitted-but-partial tables."""

    severity: str  # "error" or "warning"
    message: str


def validate(m: TuringMachine) -> list[Violation]:
    """Check every clause of the machine definition.

    Returns an empty list only for a fully well-formed machine with a total
    transition table.  Missing (state, scanned) entries are legal — they
    act as dead ends — so they come back as warnings, not errors.
    """
    out: list[Violation] = []

    def err(msg: str) -> None:
        out.append(Violation("error", msg))

    if m.tapes < 1:
        err(f"tape count must be >= 1, got {m.tapes}")
    for role, q in (("initial", m.initial), ("accept", m.accept), ("reject", m.reject)):
        if q not in m.states:
            err(f"{role} state {q!r} not in the state set")
    if m.blank not in m.tape_alphabet:
        err(f"blank {m.blank!r} not in the tape alphabet")
    for s in m.input_alphabet:
        if s == m.blank:
            err("input alphabet contains the blank")
        elif s not in m.tape_alphabet:
            err(f"input symbol {s!r} not in the tape alphabet")

    for (q, scanned), targets in m.transitions.items():
        key = f"({q}; {','.join(scanned)})"
        if q not in m.states:
            err(f"transition {key} keyed on unknown state {q!r}")
        elif q in (m.accept, m.reject):
            err(f"transition {key} keyed on final state {q!r}")
        if len(scanned) != m.tapes:
            err(f"transition {key} scans {len(scanned)} symbols, expected {m.tapes}")
        for s in scanned:
            if s not in m.tape_alphabet:
                err(f"transition {key} scans unknown symbol {s!r}")
        if not targets:
            err(f"transition {key} has an empty target set")
        for t in targets:
            if t.next_state not in m.states:
                err(f"transition {key} moves to unknown state {t.next_state!r}")
            if len(t.writes) != m.tapes or len(t.moves) != m.tapes:
                err(f"transition {key} target tuple lengths do not match the tape count")
                continue
            for w in t.writes:
                if w == m.blank:
                    err(f"transition {key} writes blank")
                elif w not in m.tape_alphabet:
                    err(f"transition {key} writes unknown symbol {w!r}")
            for mv in t.moves:
                if mv not in ("L", "R"):
                    err(f"transition {key} has move {mv!r}, expected L or R")

    if not any(v.severity == "error" for v in out):
        non_final = sorted(m.states - {m.accept, m.reject})
        for q in non_final:
            for scanned in itertools.product(sorted(m.tape_alphabet), repeat=m.tapes):
                if (q, scanned) not in m.transitions:
                    out.append(
                        Violation(
                            "warning",
                            f"no transition for ({q}; {','.join(scanned)}); "
                            f"that configuration is a dead end",
                        )
                    )
    return out


def validation_errors(m: TuringMachine) -> list[Violation]:
    """Only the error-severity findings of validate()."""
    return [v for v in validate(m) if v.severity == "error"]


def is_deterministic(m: TuringMachine) -> bool:
    """True iff every transition target set is a singleton (vacuously true
    for an empty table)."""
    return all(len(targets) == 1 for targets in m.transitions.values())


def initial_id(
    m: TuringMachine, w: Word, heads: Sequence[int] | None = None
) -> InstantaneousDescription:
    """Initial configuration: input on tape 1, other tapes empty, heads at 1.

    ``heads`` overrides the start positions for experimentation; each must
    still satisfy 1 <= head <= len(tape) + 1 — no other semantics are
    assigned to nonstandard positions.
    """
    word = tuple(w)
    for s in word:
        if s not in m.input_alphabet:
            raise ValueError(f"symbol {s!r} not in the input alphabet")
    tapes = (word,) + ((),) * (m.tapes - 1)
    if heads is None:
        head_tuple = (1,) * m.tapes
    else:
        head_tuple = tuple(heads)
        if len(head_tuple) != m.tapes:
            raise ValueError(f"expected {m.tapes} head positions, got {len(head_tuple)}")
        for tape, i in zip(tapes, head_tuple):
            if not 1 <= i <= len(tape) + 1:
                raise ValueError(
                    f"head position {i} outside [1, {len(tape) + 1}]"
                )
    return InstantaneousDescription(m.initial, tapes, head_tuple)


def scanned_symbols(m: TuringMachine, desc: InstantaneousDescription) -> tuple[str, ...]:
    """Symbol under each head; the square just past the word scans blank."""
    return tuple(
        tape[i - 1] if i <= len(tape) else m.blank
        for tape, i in zip(desc.tapes, desc.heads)
    )


def successors(
    m: TuringMachine, desc: InstantaneousDescription
) -> list[InstantaneousDescription]:
    """All configurations one step away, in transition-table order.

    Final states have no successors.  A transition that orders any head
    left from square 1 is discarded.  A missing table entry yields the
    empty list (a dead end).
    """
    if desc.state in (m.accept, m.reject):
        return []
    scanned = scanned_symbols(m, desc)
    results: dict[InstantaneousDescription, None] = {}
    for tr in m.transitions.get((desc.state, scanned), ()):
        nxt = _apply(desc, tr)
        if nxt is not None:
            results[nxt] = None
    return list(results)


def _apply(
    desc: InstantaneousDescription, tr: Transition
) -> InstantaneousDescription | None:
    for i, mv in zip(desc.heads, tr.moves):
        if mv == "L" and i == 1:
            return None
    new_tapes = []
    new_heads = []
    for tape, i, w, mv in zip(desc.tapes, desc.heads, tr.writes, tr.moves):
        if i == len(tape) + 1:
            new_tapes.append(tape + (w,))
        else:
            new_tapes.append(tape[: i - 1] + (w,) + tape[i:])
        new_heads.append(i + 1 if mv == "R" else i - 1)
    return InstantaneousDescription(tr.next_state, tuple(new_tapes), tuple(new_heads))


def run_deterministic(
    m: TuringMachine, w: Word, max_steps: int, want_trace: bool = False
) -> RunOutcome:
    """Iterate the unique step of a deterministic machine from the input.

    Verdicts: accepted/rejected on reaching a final state, dead-end when no
    transition applies, bound-exceeded after max_steps steps.
    """
    if not is_deterministic(m):
        raise NotDeterministic("machine has a non-singleton transition target set")
    cur = initial_id(m, w)
    steps = 0
    max_head = max(cur.heads)
    trace = [cur] if want_trace else None
    while True:
        if cur.state == m.accept:
            verdict = VERDICT_ACCEPTED
            break
        if cur.state == m.reject:
            verdict = VERDICT_REJECTED
            break
        if steps >= max_steps:
            verdict = VERDICT_BOUND_EXCEEDED
            break
        nxt = successors(m, cur)
        if not nxt:
            verdict = VERDICT_DEAD_END
            break
        cur = nxt[0]
        steps += 1
        max_head = max(max_head, max(cur.heads))
        if trace is not None:
            trace.append(cur)
    return RunOutcome(verdict, steps, max_head, tuple(trace) if trace is not None else None)


def accepts_within(
    m: TuringMachine, w: Word, t: int, want_trace: bool = True
) -> RunOutcome:
    """Breadth-first bounded acceptance: accepted iff some path of at most
    t steps reaches the accept state.

    On acceptance the trace is one minimal-length witness path.  Otherwise
    the verdict is dead-end if the whole step graph was exhausted before
    the bound, or bound-exceeded if unexplored configurations remained.
    """
    return _bounded_search(m, w, t, space=None, want_trace=want_trace)


def accepts_within_space(
    m: TuringMachine, w: Word, t: int, s: int, want_trace: bool = True
) -> RunOutcome:
    """As accepts_within, but every configuration on the path (initial and
    accepting ones included) must keep all heads at positions <= s."""
    if s < 1:
        raise ValueError(f"space bound must be >= 1, got {s}")
    return _bounded_search(m, w, t, space=s, want_trace=want_trace)


def _bounded_search(
    m: TuringMachine,
    w: Word,
    t: int,
    space: int | None,
    want_trace: bool,
) -> RunOutcome:
    if t < 0:
        raise ValueError(f"step bound must be >= 0, got {t}")
    start = initial_id(m, w)
    if space is not None and max(start.heads) > space:
        return RunOutcome(VERDICT_DEAD_END, 0, max(start.heads))

    parents: dict[InstantaneousDescription, InstantaneousDescription | None] = {start: None}
    frontier = [start]
    max_head = max(start.heads)
    depth = 0
    while True:
        for desc in frontier:
            if desc.state == m.accept:
                trace = _witness(parents, desc) if want_trace else None
                return RunOutcome(VERDICT_ACCEPTED, depth, max_head, trace)
        if depth == t:
            return RunOutcome(VERDICT_BOUND_EXCEEDED, t, max_head)
        nxt = []
        for desc in frontier:
            for child in successors(m, desc):
                if space is not None and max(child.heads) > space:
                    continue
                if child in parents:
                    continue
                parents[child] = desc
                nxt.append(child)
                max_head = max(max_head, max(child.heads))
        if not nxt:
            return RunOutcome(VERDICT_DEAD_END, depth, max_head)
        frontier = nxt
        depth += 1


def _witness(
    parents: dict[InstantaneousDescription, InstantaneousDescription | None],
    last: InstantaneousDescription,
) -> tuple[InstantaneousDescription, ...]:
    path = [last]
    cur: InstantaneousDescription | None = last
    while (cur := parents[cur]) is not None:
        path.append(cur)
    path.reverse()
    return tuple(path)


@dataclass(frozen=True)
class TimeBoundRow:
    """One word checked against a time bound."""

    word: tuple[str, ...]
    length: int
    bound: int
    accepted: bool


@dataclass(frozen=True)
class TimeBoundReport:
    rows: tuple[TimeBoundRow, ...]
    holds: bool


def check_time_bound(
    m: TuringMachine, words: Iterable[Word], bound: Callable[[int], int]
) -> TimeBoundReport:
    """Check that each word is accepted within bound(len(word)) steps.

    The sample should consist of words the machine accepts at all; the
    summary flag holds iff every row was accepted within its bound.
    """
    rows = []
    for w in words:
        word = tuple(w)
        limit = bound(len(word))
        if limit < 0:
            raise ValueError(f"time bound must be >= 0, got {limit} for length {len(word)}")
        outcome = accepts_within(m, word, limit, want_trace=False)
        rows.append(
            TimeBoundRow(word, len(word), limit, outcome.verdict == VERDICT_ACCEPTED)
        )
    return TimeBoundReport(tuple(rows), all(r.accepted for r in rows))
