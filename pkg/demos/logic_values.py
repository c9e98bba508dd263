#!/usr/bin/env python3
"""Walk through the exact logic values and their two generator functions.

Values of arity n are the n-th roots of unity, stored as residue
exponents so every comparison is exact integer arithmetic.
"""

from cyclogic import (
    cyclic_shift,
    exponent_product,
    make_value,
    to_complex,
)

print("== values are residue exponents ==")
for n, a in [(2, 0), (2, 3), (5, -1)]:
    v = make_value(n, a)
    print(f"make_value({n}, {a:>2}) = {v}   complex view: {to_complex(v)}")

print()
print("== the product generator: (z^a, z^b) -> z^(a*b) ==")
n = 3
for a in range(n):
    row = [str(exponent_product(n, a, b)) for b in range(n)]
    print(f"  a={a}: {row}")

print()
print("== the shift generator is a cyclic rotation ==")
n = 5
v = make_value(n, 2)
for k in range(n):
    print(f"  shift by {k}: {v} -> {cyclic_shift(n, k, v)}")

print()
print("== shifts compose additively (a group action) ==")
v = make_value(5, 1)
one_then_three = cyclic_shift(5, 3, cyclic_shift(5, 1, v))
four_at_once = cyclic_shift(5, 4, v)
print(f"  shift 1 then 3: {one_then_three}")
print(f"  shift 4:        {four_at_once}")
assert one_then_three == four_at_once

print()
print("== the complex view sits on the unit circle ==")
for e in range(5):
    re, im = to_complex(make_value(5, e))
    print(f"  z5^{e} = ({re:+.4f}, {im:+.4f})  |.| = {(re*re + im*im) ** 0.5:.12f}")
