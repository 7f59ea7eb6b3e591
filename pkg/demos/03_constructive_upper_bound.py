#!/usr/bin/env python3
"""Constructive upper bounds: short lattice rows ARE tiny radical sums.

Every row (s, a_1, ..., a_k) of the reduced basis encodes an integer
combination sum(a_i * sqrt(sf_i)) that lands within (|s| + sum|a_i|/2)/N
of an integer b.  Reducing at a larger N squeezes the witness roughly like
N^(-k/(k+1)): the exponent below marches toward -k/(k+1) of the scale
exponent as N grows.
"""

import math
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"))

from sqrtgap import brute_force, upper_bound_from_reduction

k = 10
print(f"k = {k}; ideal exponent ratio -k/(k+1) = {-k/(k+1):.4f}\n")
print(f"{'N':>8} {'certified |value|':>20} {'exponent ratio':>15} {'max a_i^2*sf_i':>15}")
for exp in (20, 40, 60, 80):
    witness = upper_bound_from_reduction(k, 10**exp)
    hi = witness.bound.hi
    log10_hi = (math.log(hi.numerator) - math.log(hi.denominator)) / math.log(10)
    print(f"10^{exp:<5} {f'10^{log10_hi:.1f}':>20} {log10_hi / exp:>15.4f} "
          f"{witness.n_effective:>15}")

witness = upper_bound_from_reduction(k, 10**40)
print(f"\nthe 10^40 witness, written out: {witness.value}")
print(f"coefficients a_i: {witness.coefficients}")
print(f"integer part b:   {witness.offset}")
print(f"row inequality:   |value| <= (|{witness.first_coord}| + sum|a_i|/2)/N "
      f"= {float(witness.row_inequality_rhs()):.3e}")

# For k small enough to brute force, the witness really is an upper bound
# on the true minimum: the exhaustive minimum can only be smaller.
k_small, height = 3, 5
truth = brute_force(height, k_small, "R")
small_witness = upper_bound_from_reduction(k_small, 10**6)
print(f"\nsanity at k = {k_small}: exhaustive minimum at height {height} is "
      f"{truth.value.approx():.6f} ({truth.witness}); a height-"
      f"{small_witness.n_effective} lattice witness gives {float(small_witness.bound.hi):.2e}")
