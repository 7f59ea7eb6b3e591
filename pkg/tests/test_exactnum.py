import random
from fractions import Fraction

import pytest

from sqrtgap.exactnum import (
    Enclosure,
    LogBound,
    NEGATIVE,
    POSITIVE,
    RadicalSum,
    ZERO,
    certify_sign,
    compare_abs,
    dyadic_decimal,
    enclose_radical_sum,
    isqrt,
    scaled_nearest_sqrt,
    sqrt_enclosure,
)


def test_isqrt_examples():
    assert isqrt(0) == 0
    assert isqrt(169) == 13
    assert isqrt(165) == 12  # 12^2 = 144 <= 165 < 169 = 13^2


def test_isqrt_rejects_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


def test_isqrt_bracket_property():
    rng = random.Random(1)
    for _ in range(500):
        m = rng.randrange(0, 10**30)
        r = isqrt(m)
        assert r * r <= m < (r + 1) * (r + 1)


def test_scaled_nearest_sqrt_examples():
    assert scaled_nearest_sqrt(1, 7) == 7
    assert scaled_nearest_sqrt(2, 100) == 141  # 141.42...
    assert scaled_nearest_sqrt(2, 10) == 14  # 14.142...


def test_scaled_nearest_sqrt_half_cases():
    # 2*sqrt(9/4)... engineered halves: scale*sqrt(s) = m + 1/2 exactly
    # happens iff 4*scale^2*s = (2m+1)^2; e.g. s = 25, scale = 1 gives 5 (exact),
    # s = 2, scale = 2: sqrt(32) = 5.656 -> 6.
    assert scaled_nearest_sqrt(25, 1) == 5
    assert scaled_nearest_sqrt(2, 2) == 3  # 2.828 rounds to 3
    # exact half: scale*sqrt(s) = 2.5 for s = 25, scale = ... use s=1 trick:
    # 4*scale^2*s a perfect odd square: s = 25, scale = 1 handled; do a direct one:
    # sqrt(6.25) via s = 625, scale = 1 -> 25 exact; half-integer case s=9, scale=?:
    # there is no integer half case for square-free s, so test via s = 49/4 style
    # composites only: 4*1^2*12 = 48 not a square; keep the bracket property instead.


def test_scaled_nearest_sqrt_bracket_property():
    rng = random.Random(2)
    for _ in range(500):
        s = rng.randrange(1, 10**6)
        scale = rng.randrange(1, 10**12)
        r = scaled_nearest_sqrt(s, scale)
        m = 4 * scale * scale * s
        # round-half-up: scale*sqrt(s) in [r - 1/2, r + 1/2)
        assert (2 * r - 1) ** 2 <= m
        assert m < (2 * r + 1) ** 2


def test_sqrt_enclosure_bracket_and_width():
    for s in (2, 3, 5, 165, 2**40 + 1):
        for bits in (16, 64, 100):
            enc = sqrt_enclosure(s, bits)
            assert enc.lo * enc.lo <= s <= enc.hi * enc.hi
            assert enc.width <= Fraction(1, 2**bits)


def test_sqrt_enclosure_exact_squares():
    enc = sqrt_enclosure(49, 64)
    assert enc.lo == enc.hi == 7


def test_radical_sum_canonicalization():
    v = RadicalSum.from_terms([(1, 8)])  # sqrt(8) = 2*sqrt(2)
    assert v.terms == ((2, 2),)
    v = RadicalSum.from_terms([(3, 4)], offset=1)  # 3*sqrt(4) = 6
    assert v.terms == () and v.offset == -5
    v = RadicalSum.from_terms([(1, 2), (1, 2), (-1, 8)])  # cancels exactly
    assert v.is_zero()
    v = RadicalSum.from_terms([(1, 12), (1, 3)])  # 2*sqrt(3) + sqrt(3)
    assert v.terms == ((3, 3),)


def test_radical_sum_rejects_bad_radicand():
    with pytest.raises(ValueError):
        RadicalSum.from_terms([(1, 0)])


def test_enclose_empty_sum_is_exact_zero():
    enc = enclose_radical_sum(RadicalSum.from_terms([]), 64)
    assert enc.lo == enc.hi == 0


def test_enclose_examples():
    # 2*sqrt(2) - sqrt(3) - 1 ~ 0.0963763171773128
    v = RadicalSum.from_terms([(2, 2), (-1, 3)], offset=1)
    enc = enclose_radical_sum(v, 64)
    assert abs(enc.approx() - 0.09637631717731280) < 1e-15
    assert enc.width <= Fraction(3, 2**64)
    # a coarse enclosure still brackets the rounded decimal
    coarse = enclose_radical_sum(v, 16)
    assert coarse.lo <= Fraction(963763, 10**7) <= coarse.hi
    # sqrt(2) - 1 ~ 0.4142135623730951
    v = RadicalSum.from_terms([(1, 2)], offset=1)
    enc = enclose_radical_sum(v, 64)
    assert abs(enc.approx() - 0.41421356237309515) < 1e-15


def test_enclose_rejects_low_precision():
    with pytest.raises(ValueError):
        enclose_radical_sum(RadicalSum.from_terms([(1, 2)]), 8)


def test_enclosure_monotone_refinement():
    rng = random.Random(3)
    for _ in range(50):
        terms = [(rng.randint(-5, 5), rng.randint(1, 30)) for _ in range(rng.randint(0, 4))]
        v = RadicalSum.from_terms(terms, offset=rng.randint(-3, 3))
        coarse = enclose_radical_sum(v, 32)
        fine = enclose_radical_sum(v, 64)
        finest = enclose_radical_sum(v, 128)
        assert coarse.contains(fine)
        assert fine.contains(finest)


def test_enclosure_width_bound():
    v = RadicalSum.from_terms([(3, 2), (-2, 3), (5, 7)])
    for bits in (16, 32, 64):
        enc = enclose_radical_sum(v, bits)
        assert enc.width <= Fraction(3 + 2 + 5, 2**bits)


def test_certify_sign_examples():
    sign, _ = certify_sign(RadicalSum.from_terms([(1, 2), (1, 3)], offset=3))
    assert sign == POSITIVE  # sqrt(2) + sqrt(3) - 3 = 0.146...
    sign, enc = certify_sign(RadicalSum.from_terms([(1, 2), (-1, 2)]))
    assert sign == ZERO and enc.lo == enc.hi == 0
    sign, enc = certify_sign(RadicalSum.from_terms([(2, 2), (-1, 3)], offset=1))
    assert sign == POSITIVE
    assert Fraction(962, 10**4) <= enc.lo and enc.hi <= Fraction(964, 10**4)
    sign, _ = certify_sign(RadicalSum.from_terms([(1, 2)], offset=2))
    assert sign == NEGATIVE  # sqrt(2) - 2 < 0


def test_certify_sign_agrees_with_exact_zero_test():
    # disguised zeros and near-zeros must never be confused
    rng = random.Random(4)
    for _ in range(100):
        base = [(rng.randint(-4, 4), rng.randint(1, 20)) for _ in range(3)]
        v = RadicalSum.from_terms(base, offset=rng.randint(-5, 5))
        sign, _ = certify_sign(v)
        assert (sign == ZERO) == v.is_zero()


def test_certify_sign_escalates_on_pell_near_misses():
    # Pell convergents p/q of sqrt(2) give |p - q*sqrt(2)| ~ 1/(2p); with
    # q ~ 1e11 the 64-bit enclosure is far wider than the value, so the
    # doubling loop has to run.
    p, q = 3, 2
    while q < 10**11:
        p, q = p + 2 * q, p + q
    value = RadicalSum.from_terms([(-q, 2)], offset=-p)  # p - q*sqrt(2)
    sign, enc = certify_sign(value)
    assert sign == (POSITIVE if p * p - 2 * q * q > 0 else NEGATIVE)
    assert not enc.contains_zero()
    assert enc.precision_bits > 64  # escalation actually happened


def test_compare_abs():
    a = RadicalSum.from_terms([(1, 2)], offset=1)  # 0.4142
    b = RadicalSum.from_terms([(1, 3)], offset=1)  # 0.7320
    assert compare_abs(a, b) == -1
    assert compare_abs(b, a) == 1
    assert compare_abs(a, a.negate()) == 0
    assert compare_abs(a, a) == 0


def test_enclosure_algebra():
    e = Enclosure(Fraction(1, 4), Fraction(1, 2), 16)
    assert (-e).lo == Fraction(-1, 2)
    assert e.scaled(-2).lo == -1
    assert e.shift(1).hi == Fraction(3, 2)
    assert e.abs() == e
    f = Enclosure(Fraction(-1, 4), Fraction(1, 8), 16)
    assert f.abs().lo == 0 and f.abs().hi == Fraction(1, 4)
    with pytest.raises(ValueError):
        Enclosure(Fraction(1), Fraction(0), 16)


def test_dyadic_decimal():
    assert dyadic_decimal(Fraction(3, 4)) == "0.75"
    assert dyadic_decimal(Fraction(-5, 8)) == "-0.625"
    assert dyadic_decimal(Fraction(7)) == "7"
    with pytest.raises(ValueError):
        dyadic_decimal(Fraction(1, 3))


def test_log_bound():
    lb = LogBound.from_reciprocal_int(10**20)
    assert lb.log10 == -20.0
    assert lb.value() == 1e-20
    tiny = LogBound(-468635490828.0)
    assert tiny.value() == 0.0  # underflows cleanly
