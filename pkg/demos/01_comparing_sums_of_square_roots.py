#!/usr/bin/env python3
"""Compare sums of square roots exactly, the motivating computation.

Which polygonal path is longer: one with segment lengths sqrt(5), sqrt(6),
sqrt(18), or one with segments sqrt(4), sqrt(12), sqrt(12)?  Floating point
can silently get such comparisons wrong when the difference is tiny; here
the sign comes with a certificate interval that excludes zero.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"))

from sqrtgap import RadicalSum, certify_sign

path_a = [5, 6, 18]
path_b = [4, 12, 12]

difference = RadicalSum.from_terms(
    [(1, s) for s in path_a] + [(-1, s) for s in path_b]
)
print(f"path A lengths: {['sqrt(%d)' % s for s in path_a]}")
print(f"path B lengths: {['sqrt(%d)' % s for s in path_b]}")
print(f"difference in canonical square-free form: {difference}")

sign, enclosure = certify_sign(difference)
verdict = {1: "A is longer", -1: "B is longer", 0: "exactly equal"}[sign]
print(f"certified sign: {sign:+d} ({verdict})")
print(f"certificate interval: [{float(enclosure.lo):.3e}, {float(enclosure.hi):.3e}]")
print(f"precision used: {enclosure.precision_bits} bits")

# A contrived near-tie: the Pell convergent 19601/13860 of sqrt(2) makes
# 19601 - 13860*sqrt(2) about 2.6e-5, far below what a glance at the
# segment lengths suggests.
near_tie = RadicalSum.from_terms([(-13860, 2)], offset=-19601)
sign, enclosure = certify_sign(near_tie)
print(f"\nnear-tie 19601 - 13860*sqrt(2): sign {sign:+d}, "
      f"value in [{float(enclosure.lo):.6e}, {float(enclosure.hi):.6e}]")

# And a disguised zero: sqrt(2) + sqrt(2) - sqrt(8) is exactly nothing.
zero = RadicalSum.from_terms([(1, 2), (1, 2), (-1, 8)])
sign, _ = certify_sign(zero)
print(f"sqrt(2) + sqrt(2) - sqrt(8): canonical form '{zero}', sign {sign} (exact zero, "
      "decided algebraically, not numerically)")
