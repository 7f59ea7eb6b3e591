"""Lower-bound certification, constructive upper bounds, and baselines.

Write G(k) for the minimum positive value of |e_1*sqrt(s_1) + ... +
e_k*sqrt(s_k) - t| over integers t, signs e_i in {1, 0, -1}, and positive
integers s_i up to the k-th square-free integer.  The certification route:

  * any such expression rewrites over the square-free basis as
    sum(a_i * sqrt(sf_i)) - b with sum|a_i| <= k*sqrt(sf_k) and
    sum(a_i^2) <= k^2 * sf_k;
  * the lattice row (sum a_i [N*sqrt(sf_i)] - b*N, a_1, ..., a_k) then has
    squared length at least lambda^2, the squared length of the shortest
    nonzero lattice vector;
  * if lambda^2 exceeds (1 + k*sqrt(sf_k)/2)^2 + k^2*sf_k, unwinding the
    rounding errors [N*sqrt(s)] - N*sqrt(s) in the first coordinate forces
    |sum(a_i*sqrt(sf_i)) - b| >= 1/N.

The reduction pipeline only ever certifies a lower bound on lambda via the
minimum Gram-Schmidt norm of a reduced basis, so every certificate here is
sound regardless of reduction quality; quality only affects how small an N
can be certified.  In the other direction, any short reduced row yields a
concrete integer combination with |sum(a_i*sqrt(sf_i)) - b| at most
(|s| + sum|a_i|/2) / N, a constructive upper bound.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import squarefree
from .exactnum import (
    DEFAULT_PRECISION_CAP,
    Enclosure,
    LogBound,
    PrecisionExhausted,
    RadicalSum,
    compare_abs,
    enclose_radical_sum,
)
from .lattice import LatticeBasis, build_basis
from .reduction import ReductionParams, bkz, reduced_profile

DEFAULT_STEP = 10**5
DEFAULT_MAX_ITERS = 200


class NoCertificateError(RuntimeError):
    """The scale search ran out of iterations without certifying a bound."""

    def __init__(self, message: str, last_certificate=None):
        super().__init__(message)
        self.last_certificate = last_certificate


@dataclass(frozen=True)
class SqrtThreshold:
    """Exact comparator against the value rational_part + coeff*sqrt(radicand).

    The radicand is square-free and >= 2, so the radical is irrational and a
    rational x never equals the threshold; x exceeds it iff
    x - rational_part > 0 and (x - rational_part)^2 > coeff^2 * radicand,
    both checks on rationals.
    """

    rational_part: Fraction
    radical_coeff: int
    radicand: int

    def exceeded_by(self, x: Fraction | int) -> bool:
        d = Fraction(x) - self.rational_part
        if d <= 0:
            return False
        return d * d > self.radical_coeff**2 * self.radicand

    def approx(self) -> float:
        return float(self.rational_part) + self.radical_coeff * math.sqrt(self.radicand)


def certification_threshold(k: int) -> SqrtThreshold:
    """Squared-length bar the shortest lattice vector must clear for level k.

    (1 + k*sqrt(s)/2)^2 + k^2*s expands to 1 + k*sqrt(s) + (5/4)*k^2*s with
    s the k-th square-free integer; isolating the single radical keeps the
    comparison with rational squared norms exact.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    s = squarefree.nth_squarefree(k)
    return SqrtThreshold(1 + Fraction(5, 4) * k * k * s, k, s)


@dataclass(frozen=True)
class LowerBoundCertificate:
    k: int
    sigma_k: int
    scale: int  # the certified bound is 1/scale
    min_gs_norm_sq: Fraction
    threshold: SqrtThreshold
    difference: Fraction  # min_gs_norm_sq - threshold.rational_part
    threshold_passed: bool
    claimed_bound: LogBound


def certify_lower_bound(
    k: int,
    scale: int,
    params: ReductionParams | None = None,
) -> LowerBoundCertificate:
    """Attempt to certify G(k) >= 1/scale at the given scale.

    Builds the lattice over the first k square-free integers, block-reduces,
    takes the exact minimum Gram-Schmidt norm of the reduced basis, and
    compares it against the certification threshold by radical isolation.
    A certificate with threshold_passed False is a failed attempt, not an
    error; the exact norm it carries shows how far the comparison missed.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    radicands = squarefree.squarefree_upto(k)
    basis = build_basis(radicands, scale)
    reduced = bkz(basis, params or ReductionParams())
    profile = reduced_profile(reduced)
    threshold = certification_threshold(k)
    min_norm = profile.min_norm_sq
    return LowerBoundCertificate(
        k=k,
        sigma_k=radicands[-1],
        scale=scale,
        min_gs_norm_sq=min_norm,
        threshold=threshold,
        difference=min_norm - threshold.rational_part,
        threshold_passed=threshold.exceeded_by(min_norm),
        claimed_bound=LogBound.from_reciprocal_int(scale),
    )


def find_lower_bound(
    k: int,
    *,
    step: int = DEFAULT_STEP,
    start_scale: int | None = None,
    max_iters: int = DEFAULT_MAX_ITERS,
    params: ReductionParams | None = None,
    progress: Callable[[LowerBoundCertificate], None] | None = None,
) -> LowerBoundCertificate:
    """Grow the scale geometrically until a lower bound certifies.

    Scales start at start_scale (default 10**(2k), which skips the small
    scales that cannot certify) and multiply by step until the exact
    threshold comparison passes.  Returns the first passing certificate;
    raises NoCertificateError carrying the last failed certificate if
    max_iters scales are exhausted.
    """
    if step < 2:
        raise ValueError(f"step must be >= 2, got {step}")
    if max_iters < 1:
        raise ValueError(f"max_iters must be >= 1, got {max_iters}")
    scale = 10 ** (2 * k) if start_scale is None else start_scale
    if scale < 1:
        raise ValueError(f"start_scale must be >= 1, got {scale}")
    last: Optional[LowerBoundCertificate] = None
    for _ in range(max_iters):
        cert = certify_lower_bound(k, scale, params)
        if progress is not None:
            progress(cert)
        if cert.threshold_passed:
            return cert
        last = cert
        scale *= step
    raise NoCertificateError(
        f"no certificate for k={k} within {max_iters} scales (last scale {scale // step})",
        last_certificate=last,
    )


@dataclass(frozen=True)
class UpperBoundWitness:
    """A lattice row certifying a small positive value of the radical sum.

    (first_coord, coefficients) is a vector of the lattice at this scale;
    offset is the integer b recovered from the first coordinate, and bound
    encloses |sum(a_i * sqrt(sf_i)) - b|.  n_effective = max(a_i^2 * sf_i)
    is the height at which the witness bounds the minimum gap from above.
    """

    coefficients: tuple[int, ...]
    offset: int
    radicands: tuple[int, ...]
    scale: int
    first_coord: int
    value: RadicalSum
    bound: Enclosure
    n_effective: int

    def row_inequality_rhs(self) -> Fraction:
        half_sum = Fraction(sum(abs(a) for a in self.coefficients), 2)
        return (abs(self.first_coord) + half_sum) / self.scale


def row_witness(basis: LatticeBasis, row: Sequence[int]) -> Optional[UpperBoundWitness]:
    """Convert one lattice row into an upper-bound witness.

    Returns None when every radical coefficient vanishes (rows proportional
    to the all-zero-tail generator carry no information).  The enclosure of
    the witness value is refined until it decides the row inequality
    |value| <= (|s| + sum|a_i|/2)/scale, then recomputed at twice that
    precision, so the stored bound is certified with margin.
    """
    first = row[0]
    coeffs = tuple(row[1:])
    if not any(coeffs):
        return None
    scaled_roots = [r[0] for r in basis.rows[1:]]
    acc = sum(a * m for a, m in zip(coeffs, scaled_roots)) - first
    if acc % basis.scale != 0:
        raise ValueError("row is not a vector of this lattice")
    offset = acc // basis.scale
    value = RadicalSum.from_terms(zip(coeffs, basis.radicands), offset=offset)
    rhs = Fraction(2 * abs(first) + sum(abs(a) for a in coeffs), 2 * basis.scale)
    bits = 64
    while True:
        enc = enclose_radical_sum(value, bits).abs()
        if enc.hi <= rhs:
            break
        if enc.lo > rhs:
            raise ArithmeticError(
                f"row inequality violated: |{value}| > {rhs}"
            )  # mathematically impossible for a lattice row
        if bits >= DEFAULT_PRECISION_CAP:
            raise PrecisionExhausted(f"row inequality undecided at {bits} bits")
        bits *= 2
    certified = enclose_radical_sum(value, 2 * bits).abs()
    if certified.hi > rhs:
        raise ArithmeticError("refined enclosure lost the row inequality")
    return UpperBoundWitness(
        coefficients=coeffs,
        offset=offset,
        radicands=basis.radicands,
        scale=basis.scale,
        first_coord=first,
        value=value,
        bound=certified,
        n_effective=max(a * a * s for a, s in zip(coeffs, basis.radicands) if a),
    )


def upper_bound_from_reduction(
    k: int,
    scale: int,
    params: ReductionParams | None = None,
) -> UpperBoundWitness:
    """Best constructive upper-bound witness from one block reduction.

    Scans every reduced row with a nonzero coefficient vector and keeps the
    one whose certified |value| is smallest (exact comparison, escalating
    precision on enclosure overlap); any row satisfies the row inequality,
    but the shortest row is not always the best witness.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if scale < 2:
        raise ValueError(f"scale must be >= 2, got {scale}")
    basis = build_basis(squarefree.squarefree_upto(k), scale)
    reduced = bkz(basis, params or ReductionParams())
    best: Optional[UpperBoundWitness] = None
    for row in reduced.rows:
        witness = row_witness(basis, row)
        if witness is None:
            continue
        if best is None or compare_abs(witness.value, best.value) < 0:
            best = witness
    if best is None:
        raise ArithmeticError("no row with nonzero coefficients (impossible for scale >= 2)")
    return best


def root_separation_log10(n: int, k: int, variant: str = "R") -> LogBound:
    """Classic root-separation lower bound, as a base-10 logarithm.

    The gap is at least max(base**eneg1, base**eneg2) with base = k*sqrt(n)
    for the all-positive-signs variant ("r1") and base = 2k*sqrt(n) for the
    signed variant ("R"), and exponents -2**(k-1) and -2**(pi(n)-1); the max
    picks the smaller of the two exponents.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if variant not in ("r1", "R"):
        raise ValueError(f"variant must be 'r1' or 'R', got {variant!r}")
    factor = k if variant == "r1" else 2 * k
    base_log10 = math.log10(factor) + 0.5 * math.log10(n)
    exponent = 1 << (min(k, squarefree.prime_count(n)) - 1)
    try:
        value = -float(exponent) * base_log10
    except OverflowError:
        raise ValueError(f"exponent 2**{exponent.bit_length() - 1} exceeds double range")
    return LogBound(value)


@dataclass(frozen=True)
class QianWangInstance:
    """The alternating binomial sum sum((-1)^i * C(k,i) * sqrt(t+i)) and its bound.

    The sum telescopes to something below (1*3*5*...*(2k-3)) / (2^k * t^(k-1/2)).
    rhs_sq is the exact square of that right-hand side, so the inequality
    |sum| <= rhs is decidable by squaring dyadic enclosure endpoints.
    """

    k: int
    t: int
    value: RadicalSum
    rhs_sq: Fraction
    rhs_log10: LogBound

    def satisfied(self, *, start_bits: int = 64, max_bits: int = DEFAULT_PRECISION_CAP) -> bool:
        """Exact decision of |value| <= rhs."""
        if self.value.is_zero():
            return True
        bits = start_bits
        while True:
            enc = enclose_radical_sum(self.value, bits).abs()
            if enc.hi * enc.hi <= self.rhs_sq:
                return True
            if enc.lo * enc.lo > self.rhs_sq:
                return False
            if bits >= max_bits:
                raise PrecisionExhausted(f"inequality undecided at {bits} bits")
            bits *= 2


def qian_wang_instance(k: int, t: int) -> QianWangInstance:
    """Build the alternating binomial instance at offset t.

    Radicands C(k,i)^2 * (t+i) are decomposed to square-free form inside
    RadicalSum, so perfect-square parts fold into the rational offset and
    shared square-free parts merge.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    terms = []
    for i in range(k + 1):
        c = math.comb(k, i)
        terms.append((c if i % 2 == 0 else -c, t + i))
    value = RadicalSum.from_terms(terms)
    odd_product = 1
    for odd in range(1, 2 * k - 2, 2):
        odd_product *= odd
    rhs_sq = Fraction(odd_product * odd_product, 4**k * t ** (2 * k - 1))
    rhs_log10 = LogBound(
        math.log10(odd_product) - k * math.log10(2) - (k - 0.5) * math.log10(t)
    )
    return QianWangInstance(k=k, t=t, value=value, rhs_sq=rhs_sq, rhs_log10=rhs_log10)


@dataclass(frozen=True)
class RatioCell:
    """One cell of the reduction-quality scan: lambda* against scale^(1/(k+1))."""

    k: int
    log10_scale: int
    shortest_row_norm_sq: int | None = None
    min_gs_norm_sq: Fraction | None = None
    ratio: float | None = None
    conjecture_violation: bool | None = None
    error: str | None = None


def _ln_fraction(x: Fraction) -> float:
    return math.log(x.numerator) - math.log(x.denominator)


def _scan_cell(k: int, log10_scale: int, params: ReductionParams | None) -> RatioCell:
    try:
        scale = 10**log10_scale
        basis = build_basis(squarefree.squarefree_upto(k), scale)
        reduced = bkz(basis, params or ReductionParams())
        profile = reduced_profile(reduced)
        min_norm = profile.min_norm_sq
        l_sq = min(sum(c * c for c in row) for row in reduced.rows)
        ratio = math.exp(0.5 * _ln_fraction(min_norm) - log10_scale * math.log(10) / (k + 1))
        # Exact certificate-side conjecture check: lambda* <= scale^(1/(k+1))/k
        # iff (lambda*^2 * k^2)^(k+1) <= scale^2.
        lhs = (min_norm * k * k) ** (k + 1)
        violation = lhs <= scale * scale
        return RatioCell(
            k=k,
            log10_scale=log10_scale,
            shortest_row_norm_sq=l_sq,
            min_gs_norm_sq=min_norm,
            ratio=ratio,
            conjecture_violation=violation,
        )
    except Exception as exc:  # per-cell failures must not kill the scan
        return RatioCell(k=k, log10_scale=log10_scale, error=f"{type(exc).__name__}: {exc}")


def ratio_scan(
    k_list: Sequence[int],
    log10_scale_list: Sequence[int],
    params: ReductionParams | None = None,
    threads: int = 1,
) -> list[RatioCell]:
    """Reduce a grid of (k, scale) cells and report lambda*/scale^(1/(k+1)).

    Cells are independent; with threads > 1 they run on a thread pool.
    Results are returned in grid order either way, and each cell's output is
    deterministic, so the thread count never changes the report.  A cell
    whose ratio falls at or below 1/k is flagged: that would contradict the
    expected shortest-vector growth on the certificate side (the reduced
    lambda* lower bound, not the true shortest length).
    """
    if not k_list or not log10_scale_list:
        raise ValueError("k_list and log10_scale_list must be non-empty")
    cells = [(k, e) for k in k_list for e in log10_scale_list]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda ke: _scan_cell(ke[0], ke[1], params), cells))
    return [_scan_cell(k, e, params) for k, e in cells]
