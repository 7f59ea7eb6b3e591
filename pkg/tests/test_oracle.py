import itertools
import math

import pytest

from sqrtgap.exactnum import certify_sign
from sqrtgap.oracle import EnumerationCapError, brute_force


def _naive_minimum(n, k, variant, t_range=8):
    """Independent oracle: enumerate raw tuples in floats, no symmetry tricks."""
    best = None
    if variant == "r1":
        pos = k // 2
        for s in itertools.product(range(1, n + 1), repeat=k):
            v = sum(math.sqrt(x) for x in s[:pos]) - sum(math.sqrt(x) for x in s[pos:])
            if abs(v) > 1e-9 and (best is None or abs(v) < best):
                best = abs(v)
        return best
    if variant == "r2":
        for s in itertools.combinations(range(1, n + 1), k):
            v = sum(math.sqrt(x) for x in s)
            for t in range(0, 4 * k + 4):
                if abs(v - t) > 1e-9 and (best is None or abs(v - t) < best):
                    best = abs(v - t)
        return best
    for e in itertools.product((1, 0, -1), repeat=k):
        for s in itertools.product(range(1, n + 1), repeat=k):
            v = sum(ei * math.sqrt(si) for ei, si in zip(e, s))
            for t in range(-t_range, t_range + 1):
                if abs(v - t) > 1e-9 and (best is None or abs(v - t) < best):
                    best = abs(v - t)
    return best


def test_worked_examples_r1_r2():
    assert abs(brute_force(3, 3, "r1").value.approx() - (2 - math.sqrt(3))) < 1e-12
    assert abs(
        brute_force(3, 3, "r2").value.approx() - (math.sqrt(2) + math.sqrt(3) - 3)
    ) < 1e-12


def test_true_minimum_R33():
    # The minimum of |e1*sqrt(s1)+e2*sqrt(s2)+e3*sqrt(s3) - t| over s_i <= 3
    # is 2*sqrt(3) - sqrt(2) - 2 = 0.049888..., achieved by (1,1,-1) on
    # (3,3,2) with t=2.  (The often-quoted 2*sqrt(2)-sqrt(3)-1 = 0.0963 is a
    # valid instance but not minimal.)
    res = brute_force(3, 3, "R")
    expected = 2 * math.sqrt(3) - math.sqrt(2) - 2
    assert abs(res.value.approx() - expected) < 1e-12
    assert dict(((s, c) for c, s in res.witness.terms)) == {2: -1, 3: 2}


def test_matches_naive_enumeration():
    for n, k in [(2, 2), (3, 2), (3, 3), (2, 3)]:
        for variant in ("r1", "r2", "R"):
            if variant == "r2" and k > n:
                continue
            got = brute_force(n, k, variant).value.approx()
            want = _naive_minimum(n, k, variant)
            assert abs(got - want) < 1e-7, (n, k, variant, got, want)


def test_variant_ordering_invariant():
    # the signed variant searches a superset of both others, so its minimum
    # can only be smaller; enclosures are ~1e-19 wide so lo/hi ordering works
    for n, k in [(3, 3), (4, 3), (5, 3), (6, 4)]:
        r = brute_force(n, k, "R").value
        r1 = brute_force(n, k, "r1").value
        assert r.lo <= r1.hi
        if k <= n:
            r2 = brute_force(n, k, "r2").value
            assert r.lo <= r2.hi


def test_R_non_increasing_in_n_and_k():
    values_n = [brute_force(n, 3, "R").value.approx() for n in (2, 3, 4, 5)]
    assert all(a >= b - 1e-15 for a, b in zip(values_n, values_n[1:]))
    values_k = [brute_force(3, k, "R").value.approx() for k in (1, 2, 3, 4)]
    assert all(a >= b - 1e-15 for a, b in zip(values_k, values_k[1:]))


def test_witness_reevaluation():
    for variant in ("r1", "r2", "R"):
        res = brute_force(3, 3, variant)
        sign, enc = certify_sign(res.witness)
        assert sign == 1  # witness is stored value-positive
        assert enc.lo <= res.value.hi and res.value.lo <= enc.hi
        assert res.value.lo > 0


def test_exact_zero_instances_are_skipped():
    # n=8 admits sqrt(2)+sqrt(2)-sqrt(8) = 0 exactly; the minimum must
    # still come out positive.
    res = brute_force(8, 3, "R")
    assert res.value.lo > 0


def test_instance_count_reported():
    res = brute_force(2, 2, "r1")
    # 2 positive-group choices... k=2: 1 positive, 1 negative: 2*2 = 4
    assert res.instance_count == 4


def test_enumeration_cap():
    with pytest.raises(EnumerationCapError):
        brute_force(50, 10, "R", cap=1000)


def test_validation():
    with pytest.raises(ValueError):
        brute_force(0, 3, "R")
    with pytest.raises(ValueError):
        brute_force(3, 0, "R")
    with pytest.raises(ValueError):
        brute_force(3, 3, "bogus")
    with pytest.raises(ValueError):
        brute_force(3, 4, "r2")  # needs k distinct radicands <= n
