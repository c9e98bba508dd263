#!/usr/bin/env python3
"""Run a step-count experiment: wide-alphabet machines vs binary twins.

Each sampled base-b word runs on a machine with b digit symbols while its
binary re-encoding runs on a two-symbol twin; both sides must agree on
acceptance, and the step counts show how much the narrow alphabet pays.
"""

import io
import sys

from cyclogic import ExperimentSpec, emit_report, run_experiment
from cyclogic.harness import summary_line

spec = ExperimentSpec(
    lengths=(1, 2, 3),
    base_rule="square",       # b = 2**(l*l): 2, 16, 512
    words_per_length=6,
    seed=2026,
    machine_family="scan-accept",
    step_cap=2048,
)

print("== sampled step counts (scan-accept family) ==")
report = run_experiment(spec)
print(f"  {'l':>2} {'b':>4} {'word':24} {'wide':>5} {'binary':>7} agree")
for row in report.rows:
    print(f"  {row.length:>2} {row.base:>4} {str(row.word):24} "
          f"{row.steps_wide:>5} {row.steps_binary:>7} {row.agree}")

print()
print("== summary ==")
print(" ", summary_line(report))

print()
print("== the same report as CSV ==")
buf = io.StringIO()
emit_report(report, "csv", buf)
sys.stdout.write("  " + "\n  ".join(buf.getvalue().splitlines()[:5]) + "\n  ...\n")

print()
print("== a nondeterministic family: guess a nonzero digit ==")
guess_spec = ExperimentSpec(
    lengths=(1, 2),
    base_rule="square",
    words_per_length=6,
    seed=7,
    machine_family="guessed-digit",
    step_cap=256,
)
guess_report = run_experiment(guess_spec)
for row in guess_report.rows:
    verdict = "accepted" if row.steps_wide is not None else "rejected"
    print(f"  {str(row.word):16} wide={row.steps_wide} binary={row.steps_binary} "
          f"agree={row.agree} ({verdict} on both sides)")
