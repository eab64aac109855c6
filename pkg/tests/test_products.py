import math
import random
from fractions import Fraction
from itertools import product

import pytest

from ramsum import (
    DomainError,
    ScaleError,
    dedekind_psi,
    distinct_prime_count,
    e_g_direct,
    e_g_fast,
    e_shift,
    g_r_value,
    h_value,
    is_squarefree,
    mobius,
    prime_power_profile,
    r_func,
    r_g_direct,
    r_g_fast,
    r_prime_power,
    r_shift,
    ramanujan_sum,
)

CORPUS = ("x", "x-1", "x-2", "x+1", "x^2-1", "x^2+x+1", "2x-1")


def linear_system(shifts):
    return tuple(f"x-{a}" if a >= 0 else f"x+{-a}" for a in shifts)


def test_e_g_known_values():
    assert e_g_direct("x", (5,)) == 0
    assert e_g_direct(("x", "x"), (6, 6)) == 2
    assert e_g_direct("x^2-1", (8,)) == 2
    assert e_g_fast(("x", "x"), (6, 6)) == 2
    assert e_g_fast("x^2-1", (4,)) == 1
    assert e_g_fast(("x", "x", "x"), (1, 1, 1)) == 1


def test_r_g_known_values():
    assert r_g_direct(("x-1", "x-1"), (3, 3)) == 5
    assert r_g_direct("x^2-1", (4,)) == 4
    assert r_g_fast(("x-1", "x-1"), (4, 4)) == 8
    assert r_g_fast(("x-1", "x-1"), (4, 2)) == 0
    assert r_g_fast("x^2-1", (8,)) == 16
    assert r_g_direct("x-1", (1,)) == 1


def test_oracle_scale_guard():
    with pytest.raises(ScaleError):
        e_g_direct("x", (10**6 + 3,))
    with pytest.raises(ScaleError):
        r_g_direct("x", (10**6 + 3,))


def test_arity_mismatch():
    with pytest.raises(DomainError):
        e_g_fast(("x", "x"), (6,))
    with pytest.raises(DomainError):
        e_shift((1, 2), (6,))


def test_fast_equals_direct_small_sweep():
    for g in CORPUS:
        for ms in product(range(1, 9), repeat=2):
            sys_ = (g, g)
            assert e_g_fast(sys_, ms) == e_g_direct(sys_, ms), (g, ms)
            assert r_g_fast(sys_, ms) == r_g_direct(sys_, ms), (g, ms)


def test_fast_equals_direct_mixed_systems():
    rng = random.Random(31)
    for _ in range(250):
        r = rng.randint(1, 3)
        sys_ = tuple(rng.choice(CORPUS) for _ in range(r))
        ms = tuple(rng.randint(1, 10) for _ in range(r))
        assert e_g_fast(sys_, ms) == e_g_direct(sys_, ms), (sys_, ms)
        assert r_g_fast(sys_, ms) == r_g_direct(sys_, ms), (sys_, ms)


def test_multiplicativity_over_coprime_tuples():
    rng = random.Random(37)
    for _ in range(200):
        r = rng.randint(1, 3)
        g = rng.choice(CORPUS)
        while True:
            ms = [rng.randint(1, 30) for _ in range(r)]
            ns = [rng.randint(1, 30) for _ in range(r)]
            if math.gcd(math.prod(ms), math.prod(ns)) == 1:
                break
        both = [m * n for m, n in zip(ms, ns)]
        sys_ = (g,) * r
        assert e_g_fast(sys_, both) == e_g_fast(sys_, ms) * e_g_fast(sys_, ns)
        assert r_g_fast(sys_, both) == r_g_fast(sys_, ms) * r_g_fast(sys_, ns)


def test_single_polynomial_coprime_moduli_collapse():
    # same polynomial at every position, pairwise coprime moduli: the
    # multivariable coprime sum equals the one-variable value at the lcm
    rng = random.Random(41)
    for _ in range(150):
        g = rng.choice(CORPUS)
        r = rng.randint(2, 3)
        while True:
            ms = [rng.randint(1, 20) for _ in range(r)]
            if all(
                math.gcd(ms[i], ms[j]) == 1 for i in range(r) for j in range(i + 1, r)
            ):
                break
        assert r_g_fast((g,) * r, ms) == r_g_fast((g,), (math.lcm(*ms),))


def test_e_shift_known_values():
    assert e_shift((0, 1), (6, 6)) == 1
    assert e_shift((0, 1), (4, 4)) == 0
    assert e_shift((0, 1), (6, 6), strategy="general") == 1
    assert e_shift((0,), (5,)) == 0


def test_e_shift_zero_vector_is_plain_product_sum():
    for r in (1, 2, 3):
        for ms in product(range(1, 7), repeat=r):
            assert e_shift((0,) * r, ms) == e_g_direct(("x",) * r, ms)


def test_e_shift_equals_direct_oracle():
    rng = random.Random(43)
    for _ in range(300):
        r = rng.randint(1, 3)
        sh = tuple(rng.randint(-8, 8) for _ in range(r))
        ms = tuple(rng.randint(1, 12) for _ in range(r))
        want = e_g_direct(linear_system(sh), ms)
        assert e_shift(sh, ms) == want
        assert e_shift(sh, ms, strategy="general") == want


def test_adjacent_shift_rule():
    for m1 in range(1, 41):
        for m2 in range(1, 41):
            for a in (-3, 0, 2):
                got = e_shift((a, a + 1), (m1, m2))
                if m1 == m2 and is_squarefree(m1):
                    assert got == (-1) ** distinct_prime_count(m1)
                else:
                    assert got == 0
                assert got == e_shift((a, a + 1), (m1, m2), strategy="general")


def test_r_shift_known_values():
    assert r_shift((1, 2), (3, 3)) == -4
    assert r_shift((0, 1), (2, 3)) == -1
    assert r_shift((5,), (12,)) == mobius(12) * ramanujan_sum(12, 5)


def test_r_shift_equals_direct_oracle():
    rng = random.Random(47)
    for _ in range(300):
        r = rng.randint(1, 3)
        sh = tuple(rng.randint(-8, 8) for _ in range(r))
        ms = tuple(rng.randint(1, 12) for _ in range(r))
        want = r_g_direct(linear_system(sh), ms)
        assert r_shift(sh, ms) == want
        assert r_shift(sh, ms, strategy="general") == want


def test_single_variable_shift_rule():
    for n in range(1, 201):
        for a in range(-50, 51):
            assert r_shift((a,), (n,), strategy="general") == mobius(n) * ramanujan_sum(n, a)


def test_pairwise_coprime_shift_rule():
    rng = random.Random(53)
    for _ in range(200):
        r = rng.randint(1, 3)
        while True:
            ms = [rng.randint(1, 30) for _ in range(r)]
            if all(
                math.gcd(ms[i], ms[j]) == 1 for i in range(r) for j in range(i + 1, r)
            ):
                break
        sh = [rng.randint(-10, 10) for _ in range(r)]
        want = mobius(math.lcm(*ms))
        for mi, ai in zip(ms, sh):
            want *= ramanujan_sum(mi, ai)
        assert r_shift(sh, ms) == want
        assert r_shift(sh, ms, strategy="general") == want


def test_unit_adjacent_shift_rule():
    for m1 in range(1, 41):
        for m2 in range(1, 41):
            for a1 in (-3, 1, 4):
                a2 = a1 + 1
                if math.gcd(a1, m1) != 1 or math.gcd(a2, m2) != 1:
                    continue
                got = r_shift((a1, a2), (m1, m2), strategy="general")
                if is_squarefree(m1) and is_squarefree(m2):
                    g = math.gcd(m1, m2)
                    assert got == (-1) ** distinct_prime_count(g) * dedekind_psi(g)
                else:
                    assert got == 0


def test_r_func_known_values():
    assert r_func((3, 3)) == 5
    assert r_func((4, 4)) == 8
    assert r_func((3, 3, 3)) == 7
    assert r_func((1,)) == 1


def test_r_func_nonnegative_and_matches_oracle():
    for ms in product(range(1, 9), repeat=2):
        val = r_func(ms)
        assert val >= 0
        assert val == r_g_direct(("x-1", "x-1"), ms)
    rng = random.Random(59)
    for _ in range(100):
        r = rng.randint(1, 4)
        ms = tuple(rng.randint(1, 12) for _ in range(r))
        val = r_func(ms)
        assert val >= 0
        assert val == r_g_direct(("x-1",) * r, ms)


def test_h_value_closed_forms():
    assert all(h_value(1, x) == 0 for x in range(2, 30))
    assert all(h_value(2, x) == 1 for x in range(2, 30))
    assert all(h_value(3, x) == x - 2 for x in range(2, 30))
    for s in range(1, 9):
        for x in range(2, 50):
            assert ((x - 1) ** (s - 1) + (-1) ** s) == h_value(s, x) * x


def test_prime_power_profile_fields():
    prof = prime_power_profile(2, (1, 3, 3, 2))
    assert prof.exponents == (3, 3, 2, 1)
    assert prof.e == 3 and prof.s == 2 and prof.v == 9 - 4 - 3 + 1
    with pytest.raises(DomainError):
        prime_power_profile(4, (1,))
    with pytest.raises(DomainError):
        prime_power_profile(3, (0, 1))
    with pytest.raises(DomainError):
        prime_power_profile(3, ())


def test_r_prime_power_known_values():
    assert r_prime_power(prime_power_profile(3, (1, 1))) == 5
    assert r_prime_power(prime_power_profile(2, (2, 2))) == 8
    assert r_prime_power(prime_power_profile(2, (3, 1))) == 0
    assert r_prime_power(prime_power_profile(3, (2, 2, 2))) == 162


def test_r_prime_power_matches_oracle():
    for p in (2, 3):
        for r in (1, 2, 3):
            for exps in product((1, 2), repeat=r):
                prof = prime_power_profile(p, exps)
                assert r_prime_power(prof) == r_g_direct(
                    ("x-1",) * r, tuple(p**e for e in exps)
                ), (p, exps)


def test_r_prime_power_zero_classification():
    for p in (2, 3, 5):
        for r in (1, 2, 3, 4):
            for exps in product((1, 2, 3), repeat=r):
                prof = prime_power_profile(p, exps)
                val = r_prime_power(prof)
                assert val >= 0
                vanishes = prof.e > 1 and (prof.s == 1 or (prof.s % 2 == 1 and p == 2))
                assert (val == 0) == vanishes, (p, exps)


def test_two_variable_prime_power_cases():
    for p in (2, 3, 5):
        for e in (2, 3):
            assert r_prime_power(prime_power_profile(p, (e, e))) == p ** (2 * e - 1) * (p - 1)
        assert r_prime_power(prime_power_profile(p, (1, 1))) == p**2 - p - 1
        assert r_prime_power(prime_power_profile(p, (3, 2))) == 0


def test_g_r_known_values():
    assert g_r_value(2, 4) == 2
    assert g_r_value(2, 3) == Fraction(5, 3)
    assert g_r_value(2, 1) == 1
    assert g_r_value(1, 30) == Fraction(1, 30)


def test_g_r_matches_definition():
    for r in (1, 2, 3):
        for m in range(1, 30):
            assert g_r_value(r, m) == Fraction(r_g_direct(("x-1",) * r, (m,) * r), m)
