#!/usr/bin/env python3
"""Deterministic runs, nondeterministic search, and bounded acceptance.

Machines are values; every run returns a verdict, the step count, and
(on acceptance) a minimal witness path of configurations.
"""

from cyclogic import (
    accepts_within,
    accepts_within_space,
    check_time_bound,
    is_deterministic,
    run_deterministic,
    validate,
)
from cyclogic.fixtures import (
    copy_machine,
    even_a_machine,
    guess_bit_machine,
    real_time_scanner,
    walk_right_machine,
)

print("== a deterministic run, configuration by configuration ==")
even_a = even_a_machine()
print(f"  deterministic: {is_deterministic(even_a)}")
out = run_deterministic(even_a, "aaaa", max_steps=100, want_trace=True)
for desc in out.trace:
    print(f"    {desc}")
print(f"  verdict: {out.verdict} after {out.steps_used} steps")
print(f"  'aaa' -> {run_deterministic(even_a, 'aaa', 100).verdict}")

print()
print("== validation separates errors from dead-end warnings ==")
findings = validate(even_a)
for v in findings:
    print(f"  [{v.severity}] {v.message}")

print()
print("== nondeterministic acceptance finds a minimal witness ==")
guess = guess_bit_machine()
hit = accepts_within(guess, "0", t=2)
print(f"  within 2 steps: {hit.verdict}; witness: "
      + " -> ".join(d.state for d in hit.trace))
miss = accepts_within(guess, "0", t=1)
print(f"  within 1 step:  {miss.verdict}")

print()
print("== space bounds prune configurations by head position ==")
walker = walk_right_machine(3)
for s in (4, 3):
    out = accepts_within_space(walker, "aaa", t=10, s=s)
    print(f"  heads <= {s}: {out.verdict}")

print()
print("== a real-time machine meets the bound l+1 but not l-1 ==")
scanner = real_time_scanner()
words = ["a", "ab", "bab", "aabb"]
print(f"  T(l) = l+1 holds: {check_time_bound(scanner, words, lambda l: l + 1).holds}")
print(f"  T(l) = l-1 holds: {check_time_bound(scanner, words, lambda l: l - 1).holds}")

print()
print("== machines can use several tapes ==")
copier = copy_machine()
out = accepts_within(copier, "aaa", t=10)
print(f"  final configuration: {out.trace[-1]}")
