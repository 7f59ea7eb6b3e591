#!/usr/bin/env python3
"""Certify a lower bound on the minimum gap for k signed square roots.

The story for k = 5 (radicands 2, 3, 5, 6, 7):

 1. build the lattice whose short vectors encode good integer relations
    among N*sqrt(2), ..., N*sqrt(7);
 2. see why orthogonalizing the raw basis is useless (the floor is
    always 1);
 3. block-reduce, recompute the exact Gram-Schmidt floor, and compare it
    against the certification threshold by an exact radical-isolation test;
 4. grow N until the comparison passes: the result is a certificate that
    every nonzero |e1*sqrt(s1) + ... + e5*sqrt(s5) - t| with s_i <= 7
    exceeds 1/N.

The root-separation baseline for the same instance is shown last; the
lattice route beats it by many orders of magnitude.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"))

from sqrtgap import (
    build_basis,
    bkz,
    certification_threshold,
    find_lower_bound,
    gram_schmidt,
    nth_squarefree,
    reduced_profile,
    root_separation_log10,
    squarefree_upto,
)

k = 5
radicands = squarefree_upto(k)
print(f"k = {k}, radicands = {radicands}, sigma(k) = {nth_squarefree(k)}")

scale = 10**12
basis = build_basis(radicands, scale)
print(f"\nlattice basis at N = 10^12 (first coordinates only):")
print(f"  row 0: {basis.rows[0][0]}")
for row, s in zip(basis.rows[1:], radicands):
    print(f"  row for sqrt({s}): {row[0]}  (= nearest integer to N*sqrt({s}))")

raw = gram_schmidt(basis)
print(f"\nGram-Schmidt floor of the RAW basis: {raw.min_norm_sq} "
      "(always exactly 1, no matter how large N is; the unit tails survive)")

reduced = bkz(basis)
profile = reduced_profile(reduced)
threshold = certification_threshold(k)
print(f"after block reduction: floor^2 = {float(profile.min_norm_sq):.2f} "
      f"vs threshold^2 = {threshold.approx():.2f}")
print(f"threshold exceeded exactly? {threshold.exceeded_by(profile.min_norm_sq)}")

print("\nscaling N upward until the certificate lands:")
cert = find_lower_bound(
    k,
    step=10**3,
    start_scale=10**6,
    progress=lambda c: print(
        f"  N = 10^{len(str(c.scale)) - 1:>3}: floor^2 ~ {float(c.min_gs_norm_sq):9.1f} "
        f"-> {'certified' if c.threshold_passed else 'not yet'}"
    ),
)
print(f"\ncertificate: every gap at this height exceeds 1/N = 10^{cert.claimed_bound.log10:.0f}")

baseline = root_separation_log10(nth_squarefree(k), k, "R")
print(f"root-separation baseline for the same instance: 10^{baseline.log10:.0f}")
print(f"at this small k the certificate is ahead by "
      f"{cert.claimed_bound.log10 - baseline.log10:.0f} orders of magnitude; "
      "the gap explodes with k:")
for kk in (10, 20):
    sep = root_separation_log10(nth_squarefree(kk), kk, "R")
    print(f"  k = {kk}: separation baseline 10^{sep.log10:.0f} vs lattice "
          f"certificates around 10^{-2 * kk} and better")
