"""Exact integer, rational, and interval arithmetic for sums of square roots.

Everything here is exact or outward-rounded.  An Enclosure is a pair of
dyadic rationals guaranteed to bracket a real value; the only rounding in
the whole library happens when a square root is bracketed, and that step
rounds outward.  Sign decisions are therefore certificates, never floating
point guesses: a RadicalSum is exactly zero iff its canonical form (integer
coefficients over distinct square-free radicands) vanishes, because square
roots of distinct square-free integers are linearly independent over the
rationals, and any nonzero value separates from zero at finite precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import squarefree

DEFAULT_PRECISION_CAP = 1 << 20
DEFAULT_START_BITS = 64
MIN_PRECISION_BITS = 16

NEGATIVE, ZERO, POSITIVE = -1, 0, 1


class PrecisionExhausted(RuntimeError):
    """Raised when a sign could not be separated within the precision cap."""


def isqrt(m: int) -> int:
    """Floor of the square root of a nonnegative integer, exactly."""
    if m < 0:
        raise ValueError(f"isqrt of negative value {m}")
    return math.isqrt(m)


def scaled_nearest_sqrt(radicand: int, scale: int) -> int:
    """Integer nearest scale*sqrt(radicand), computed without floating point.

    Rounds halves up, matching floor(x + 1/2).  With t = isqrt(4*scale^2*s),
    the answer is (t+1)//2 in every case: t is the floor of twice the target,
    and the parity of t settles which integer is nearest.
    """
    if radicand < 1:
        raise ValueError(f"radicand must be >= 1, got {radicand}")
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    t = math.isqrt(4 * scale * scale * radicand)
    return (t + 1) // 2


@dataclass(frozen=True)
class Enclosure:
    """Interval [lo, hi] of dyadic rationals containing a real value."""

    lo: Fraction
    hi: Fraction
    precision_bits: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")
        if self.precision_bits < 1:
            raise ValueError(f"precision_bits must be >= 1, got {self.precision_bits}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def contains(self, other: "Enclosure") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def abs(self) -> "Enclosure":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return Enclosure(-self.hi, -self.lo, self.precision_bits)
        return Enclosure(Fraction(0), max(-self.lo, self.hi), self.precision_bits)

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo, self.precision_bits)

    def __add__(self, other: "Enclosure") -> "Enclosure":
        return Enclosure(
            self.lo + other.lo,
            self.hi + other.hi,
            min(self.precision_bits, other.precision_bits),
        )

    def shift(self, c: int | Fraction) -> "Enclosure":
        return Enclosure(self.lo + c, self.hi + c, self.precision_bits)

    def scaled(self, c: int) -> "Enclosure":
        if c >= 0:
            return Enclosure(c * self.lo, c * self.hi, self.precision_bits)
        return Enclosure(c * self.hi, c * self.lo, self.precision_bits)

    def approx(self) -> float:
        return float(self.midpoint())

    def __repr__(self) -> str:
        return f"Enclosure({float(self.lo):.6g}, {float(self.hi):.6g}, bits={self.precision_bits})"


@lru_cache(maxsize=4096)
def _sqrt_bracket(radicand: int, bits: int) -> tuple[int, int]:
    """Return integers (m_lo, m_hi) with m_lo/2^bits <= sqrt(radicand) <= m_hi/2^bits."""
    m = math.isqrt(radicand << (2 * bits))
    if m * m == radicand << (2 * bits):
        return m, m
    return m, m + 1


def sqrt_enclosure(radicand: int, precision_bits: int) -> Enclosure:
    """Outward-rounded dyadic enclosure of sqrt(radicand), width <= 2^-bits."""
    if radicand < 0:
        raise ValueError(f"sqrt of negative value {radicand}")
    m_lo, m_hi = _sqrt_bracket(radicand, precision_bits)
    unit = Fraction(1, 1 << precision_bits)
    return Enclosure(m_lo * unit, m_hi * unit, precision_bits)


@dataclass(frozen=True)
class RadicalSum:
    """Exact value sum(a_i * sqrt(s_i)) - offset in canonical form.

    Canonical means: radicands are pairwise distinct square-free integers
    >= 2 in increasing order, all coefficients nonzero, and rational terms
    (radicand 1) are folded into the offset.  Construct via from_terms.
    """

    terms: tuple[tuple[int, int], ...]  # (coefficient, radicand)
    offset: int = 0

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]], offset: int = 0) -> "RadicalSum":
        merged: dict[int, int] = {}
        rational = -offset
        for coeff, radicand in terms:
            if radicand < 1:
                raise ValueError(f"radicand must be >= 1, got {radicand}")
            if coeff == 0:
                continue
            a, s = squarefree.squarefree_decompose(radicand)
            if s == 1:
                rational += coeff * a
            else:
                merged[s] = merged.get(s, 0) + coeff * a
        canon = tuple(sorted((s, c) for s, c in merged.items() if c != 0))
        return cls(tuple((c, s) for s, c in canon), -rational)

    def is_zero(self) -> bool:
        return not self.terms and self.offset == 0

    def negate(self) -> "RadicalSum":
        return RadicalSum(tuple((-c, s) for c, s in self.terms), -self.offset)

    def with_offset(self, offset: int) -> "RadicalSum":
        return RadicalSum(self.terms, offset)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        pieces: list[str] = []
        for c, s in self.terms:
            term = f"{'' if abs(c) == 1 else abs(c)}√{s}"
            if not pieces:
                pieces.append(term if c > 0 else f"-{term}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {term}")
        if self.offset:
            if not pieces:
                pieces.append(str(-self.offset))
            else:
                pieces.append(f"{'-' if self.offset > 0 else '+'} {abs(self.offset)}")
        return " ".join(pieces)


def enclose_radical_sum(value: RadicalSum, precision_bits: int = DEFAULT_START_BITS) -> Enclosure:
    """Outward-rounded enclosure of a RadicalSum.

    Endpoint arithmetic on dyadic rationals is exact, so the only width
    comes from the square-root brackets: at p bits the result is at most
    sum(|a_i|) * 2^-p wide, and enclosures at higher precision nest inside
    enclosures at lower precision.
    """
    if precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
    zero = Fraction(0)
    total = Enclosure(zero, zero, precision_bits)
    for coeff, radicand in value.terms:
        total = total + sqrt_enclosure(radicand, precision_bits).scaled(coeff)
    return total.shift(-value.offset)


def certify_sign(
    value: RadicalSum,
    *,
    start_bits: int = DEFAULT_START_BITS,
    max_bits: int = DEFAULT_PRECISION_CAP,
) -> tuple[int, Enclosure]:
    """Certified sign of a RadicalSum, with the separating enclosure.

    Zero is decided exactly from the canonical form; otherwise precision is
    doubled until the enclosure excludes zero.  Never returns a wrong sign.
    Raises PrecisionExhausted past max_bits (unreachable for canonical input,
    kept as a safety valve).
    """
    if value.is_zero():
        zero = Fraction(0)
        return ZERO, Enclosure(zero, zero, start_bits)
    bits = start_bits
    while True:
        enc = enclose_radical_sum(value, bits)
        if enc.lo > 0:
            return POSITIVE, enc
        if enc.hi < 0:
            return NEGATIVE, enc
        if bits >= max_bits:
            raise PrecisionExhausted(
                f"sign of {value} not separated at {bits} bits"
            )
        bits = min(2 * bits, max_bits)


def compare_abs(
    left: RadicalSum,
    right: RadicalSum,
    *,
    start_bits: int = DEFAULT_START_BITS,
    max_bits: int = DEFAULT_PRECISION_CAP,
) -> int:
    """Compare |left| with |right| exactly: -1, 0, or +1.

    Because canonical forms represent values uniquely, |left| == |right|
    iff left == right or left == -right; every other case separates at
    finite precision.
    """
    if left == right or left == right.negate():
        return 0
    bits = start_bits
    while True:
        el = enclose_radical_sum(left, bits).abs()
        er = enclose_radical_sum(right, bits).abs()
        if el.hi < er.lo:
            return -1
        if er.hi < el.lo:
            return 1
        if bits >= max_bits:
            raise PrecisionExhausted(f"could not order |{left}| vs |{right}|")
        bits = min(2 * bits, max_bits)


@dataclass(frozen=True)
class LogBound:
    """A positive real recorded as its base-10 logarithm.

    Used for bounds far outside floating-point range, e.g. root-separation
    values like 10^-468635490828.  The exponent itself is a double; the
    represented value is 10**log10.
    """

    log10: float

    @classmethod
    def from_reciprocal_int(cls, n: int) -> "LogBound":
        if n < 1:
            raise ValueError(f"expected a positive integer, got {n}")
        return cls(-math.log10(n))

    def value(self) -> float:
        """The bound as a double; underflows to 0.0 or overflows to inf."""
        try:
            return 10.0 ** self.log10
        except OverflowError:
            return math.inf

    def __repr__(self) -> str:
        return f"LogBound(10^{self.log10:.6g})"


def dyadic_decimal(value: Fraction) -> str:
    """Exact decimal string of a dyadic rational (denominator a power of 2)."""
    num, den = value.numerator, value.denominator
    e = den.bit_length() - 1
    if den != 1 << e:
        raise ValueError(f"{value} is not dyadic")
    if e == 0:
        return str(num)
    scaled = num * 5**e  # value = scaled / 10^e
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(e + 1, "0")
    return f"{sign}{digits[:-e]}.{digits[-e:]}"
