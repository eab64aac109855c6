"""Sums of products of Ramanujan sums over residue classes.

For a system G = (g_1, ..., g_r) of integer polynomials and moduli
(m_1, ..., m_r) with m = lcm(m_1, ..., m_r):

  * ``e_g_direct``/``e_g_fast`` compute the averaged full-range sum
    (1/m) * sum_{k=1..m} c_{m_1}(g_1(k)) ... c_{m_r}(g_r(k));
  * ``r_g_direct``/``r_g_fast`` compute the same product summed over the
    k coprime to m (no averaging).

The fast paths rewrite the sums as divisor-tuple convolutions weighted by
root counts of the congruence system and evaluate them prime by prime, so
their cost is governed by the exponent profile of m rather than by m
itself.  ``e_shift``/``r_shift`` specialize to linear systems x - a_i
where the root counts have closed forms, and ``r_prime_power`` evaluates
the all-ones-shift function R on prime-power tuples directly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian

import numpy as np

from .arith import (
    _as_factored,
    as_moduli_tuple,
    dedekind_psi,
    distinct_prime_count,
    factorize,
    is_squarefree,
    mobius,
    multiplicative_eval,
)
from .congruences import IntPolynomial, _local_root_count, as_poly_system, poly_eval_mod
from .errors import ConsistencyError, DomainError, ScaleError
from .ramanujan import ramanujan_row, ramanujan_sum

_ORACLE_CAP = 10**6
_INT64_SAFE = 1 << 62


# ---------------------------------------------------------------------------
# definitional oracles


@lru_cache(maxsize=1024)
def _poly_c_values(coeffs: tuple[int, ...], m: int):
    """c_m(g(x)) for x = 0..m-1, as a read-only int64 array plus its max abs."""
    row = ramanujan_row(m)
    g = IntPolynomial(coeffs)
    vals = [row[poly_eval_mod(g, x, m)] for x in range(m)]
    arr = np.array(vals, dtype=np.int64)
    arr.flags.writeable = False
    return arr, max(1, max(abs(v) for v in vals))


@lru_cache(maxsize=64)
def _coprime_mask(m: int):
    """Boolean array over residues 0..m-1 marking gcd(k, m) = 1."""
    mask = np.ones(m, dtype=bool)
    if m > 1:
        for p, _ in factorize(m).factors:
            mask[::p] = False
    arr = mask
    arr.flags.writeable = False
    return arr


def _product_sum(system, mt, coprime_only: bool) -> int:
    """sum over residues k mod m of prod_i c_{m_i}(g_i(k)), exactly.

    Uses a vectorized int64 path when a conservative bound on every
    partial result fits in 62 bits, otherwise falls back to unbounded
    Python integers; overflow is excluded up front, never wrapped.
    """
    m = mt.lcm.value
    parts = []
    bound = m
    for g, mi in zip(system.polys, mt.moduli):
        arr, vmax = _poly_c_values(g.coeffs, mi)
        parts.append((arr, mi))
        bound *= vmax
    if bound < _INT64_SAFE:
        acc = np.ones(m, dtype=np.int64)
        for arr, mi in parts:
            acc *= np.tile(arr, m // mi)
        if coprime_only:
            return int(acc[_coprime_mask(m)].sum())
        return int(acc.sum())
    rows = [([int(v) for v in arr], mi) for arr, mi in parts]
    total = 0
    for k in range(m):
        if coprime_only and math.gcd(k, m) != 1:
            continue
        prod = 1
        for vals, mi in rows:
            prod *= vals[k % mi]
        total += prod
    return total


def e_g_direct(system, moduli) -> int:
    """(1/m) sum_{k=1..m} prod_i c_{m_i}(g_i(k)) by definitional summation.

    The raw sum is always divisible by m; a failed division is an
    internal error, not a property of the input.
    """
    sys_ = as_poly_system(system)
    mt = as_moduli_tuple(moduli)
    if len(sys_) != len(mt):
        raise DomainError(f"{len(sys_)} polynomials but {len(mt)} moduli")
    m = mt.lcm.value
    if m > _ORACLE_CAP:
        raise ScaleError(f"definitional oracle capped at lcm <= 10^6, got {m}")
    raw = _product_sum(sys_, mt, coprime_only=False)
    q, rem = divmod(raw, m)
    if rem:
        raise ConsistencyError(f"raw sum {raw} not divisible by m={m}")
    return q


def r_g_direct(system, moduli) -> int:
    """sum over k <= m coprime to m of prod_i c_{m_i}(g_i(k))."""
    sys_ = as_poly_system(system)
    mt = as_moduli_tuple(moduli)
    if len(sys_) != len(mt):
        raise DomainError(f"{len(sys_)} polynomials but {len(mt)} moduli")
    if mt.lcm.value > _ORACLE_CAP:
        raise ScaleError(f"definitional oracle capped at lcm <= 10^6, got {mt.lcm.value}")
    return _product_sum(sys_, mt, coprime_only=True)


# ---------------------------------------------------------------------------
# divisor-convolution fast paths, evaluated prime-locally


def _mu_terms(avec):
    """Divisor exponent tuples surviving the mu weights, with their sign.

    For each position only j_i = a_i (sign +) and j_i = a_i - 1 (sign -)
    contribute; yields (jvec, sign) pairs.
    """
    options = []
    for a in avec:
        opts = [(a, 1)]
        if a >= 1:
            opts.append((a - 1, -1))
        options.append(opts)
    for combo in cartesian(*options):
        jvec = tuple(j for j, _ in combo)
        sign = 1
        for _, sg in combo:
            sign *= sg
        yield jvec, sign


def _phi_ratio(p: int, a: int, j: int) -> int:
    """phi(p^a) / phi(p^j) for a >= j >= 0, always an integer."""
    if j >= 1:
        return p ** (a - j)
    return p ** (a - 1) * (p - 1)


def e_g_fast(system, moduli) -> int:
    """Averaged product sum via the divisor convolution with root counts.

    Equals ``e_g_direct`` everywhere; cost is per-prime in the moduli.
    """
    sys_ = as_poly_system(system)
    mt = as_moduli_tuple(moduli)
    if len(sys_) != len(mt):
        raise DomainError(f"{len(sys_)} polynomials but {len(mt)} moduli")
    key = tuple(g.coeffs for g in sys_.polys)

    def local(p, avec):
        acc = 0
        for jvec, sign in _mu_terms(avec):
            nloc = _local_root_count(key, p, jvec, False)
            if nloc:
                acc += sign * p ** (sum(jvec) - max(jvec)) * nloc
        return acc

    return multiplicative_eval(local, mt)


def r_g_fast(system, moduli) -> int:
    """Coprime product sum via the phi-weighted divisor convolution.

    Equals ``r_g_direct`` everywhere.
    """
    sys_ = as_poly_system(system)
    mt = as_moduli_tuple(moduli)
    if len(sys_) != len(mt):
        raise DomainError(f"{len(sys_)} polynomials but {len(mt)} moduli")
    key = tuple(g.coeffs for g in sys_.polys)

    def local(p, avec):
        amax = max(avec)
        acc = 0
        for jvec, sign in _mu_terms(avec):
            eta = _local_root_count(key, p, jvec, True)
            if eta:
                acc += sign * p ** sum(jvec) * eta * _phi_ratio(p, amax, max(jvec))
        return acc

    return multiplicative_eval(local, mt)


# ---------------------------------------------------------------------------
# linear-shift specializations


def _shift_solvable(p, jvec, shifts) -> bool:
    r = len(jvec)
    for i in range(r):
        for j in range(i + 1, r):
            e = min(jvec[i], jvec[j])
            if e and (shifts[i] - shifts[j]) % p**e:
                return False
    return True


def e_shift(shifts, moduli, strategy: str = "auto") -> int:
    """(1/m) sum_{k=1..m} c_{m_1}(k - a_1) ... c_{m_r}(k - a_r).

    Strategy "auto" takes the closed form for two shifts differing by 1
    (nonzero only for equal squarefree moduli, value (-1)^omega); strategy
    "general" always runs the divisor convolution, here with the CRT
    solvability indicator in place of generic root counts.
    """
    sh = tuple(int(a) for a in shifts)
    mt = as_moduli_tuple(moduli)
    if len(sh) != len(mt):
        raise DomainError(f"{len(sh)} shifts but {len(mt)} moduli")
    if strategy not in ("auto", "general"):
        raise DomainError(f"unknown strategy {strategy!r}")
    if strategy == "auto" and len(sh) == 2 and abs(sh[0] - sh[1]) == 1:
        m1, m2 = mt.moduli
        if m1 == m2 and is_squarefree(m1):
            return (-1) ** distinct_prime_count(m1)
        return 0

    def local(p, avec):
        acc = 0
        for jvec, sign in _mu_terms(avec):
            if _shift_solvable(p, jvec, sh):
                acc += sign * p ** (sum(jvec) - max(jvec))
        return acc

    return multiplicative_eval(local, mt)


def r_shift(shifts, moduli, strategy: str = "auto") -> int:
    """sum over k <= m coprime to m of c_{m_1}(k - a_1) ... c_{m_r}(k - a_r).

    Strategy "auto" short-circuits two hypothesis-checked closed forms:
    pairwise coprime moduli give mu(m) * prod_i c_{m_i}(a_i); two shifts
    differing by 1 with gcd(a_i, m_i) = 1 give, for squarefree moduli,
    (-1)^omega(g) * psi(g) with g = gcd(m_1, m_2), and 0 otherwise.
    Strategy "general" always runs the phi-weighted divisor convolution.
    """
    sh = tuple(int(a) for a in shifts)
    mt = as_moduli_tuple(moduli)
    if len(sh) != len(mt):
        raise DomainError(f"{len(sh)} shifts but {len(mt)} moduli")
    if strategy not in ("auto", "general"):
        raise DomainError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        ms = mt.moduli
        if all(
            math.gcd(ms[i], ms[j]) == 1 for i in range(len(ms)) for j in range(i + 1, len(ms))
        ):
            out = mobius(mt.lcm)
            for mi, ai in zip(ms, sh):
                if out == 0:
                    return 0
                out *= ramanujan_sum(mi, ai)
            return out
        if (
            len(sh) == 2
            and abs(sh[0] - sh[1]) == 1
            and math.gcd(sh[0], ms[0]) == 1
            and math.gcd(sh[1], ms[1]) == 1
        ):
            if is_squarefree(ms[0]) and is_squarefree(ms[1]):
                g = math.gcd(ms[0], ms[1])
                return (-1) ** distinct_prime_count(g) * dedekind_psi(g)
            return 0

    def local(p, avec):
        amax = max(avec)
        acc = 0
        for jvec, sign in _mu_terms(avec):
            if any(j and a % p == 0 for j, a in zip(jvec, sh)):
                continue
            if _shift_solvable(p, jvec, sh):
                acc += sign * p ** sum(jvec) * _phi_ratio(p, amax, max(jvec))
        return acc

    return multiplicative_eval(local, mt)


def r_func(moduli) -> int:
    """R(m_1, ..., m_r): the coprime product sum with every shift equal to 1.

    All values are nonnegative.
    """
    mt = as_moduli_tuple(moduli)
    return r_shift((1,) * len(mt), mt)


# ---------------------------------------------------------------------------
# prime-power closed form and the normalized diagonal function


@dataclass(frozen=True)
class PrimePowerProfile:
    """Exponent profile of a prime-power moduli tuple (p^e_1, ..., p^e_r).

    ``exponents`` is sorted descending with every entry >= 1; ``e`` is the
    top exponent, ``s`` its multiplicity and ``v = sum(e_j) - r - e + 1``.
    """

    p: int
    exponents: tuple[int, ...]
    e: int
    s: int
    v: int


def prime_power_profile(p: int, exponents) -> PrimePowerProfile:
    exps = tuple(sorted((int(e) for e in exponents), reverse=True))
    if not exps:
        raise DomainError("at least one exponent required")
    if exps[-1] < 1:
        raise DomainError(f"exponents must be >= 1, got {exps}")
    if factorize(p).factors != ((p, 1),):
        raise DomainError(f"{p} is not prime")
    e = exps[0]
    s = exps.count(e)
    v = sum(exps) - len(exps) - e + 1
    return PrimePowerProfile(p, exps, e, s, v)


def h_value(s: int, x: int) -> int:
    """((x-1)^(s-1) + (-1)^s) / x as a checked exact integer division."""
    if s < 1:
        raise DomainError(f"s must be >= 1, got {s}")
    num = (x - 1) ** (s - 1) + (-1) ** s
    q, rem = divmod(num, x)
    if rem:
        raise ConsistencyError(f"h numerator {num} not divisible by {x}")
    return q


def r_prime_power(profile: PrimePowerProfile) -> int:
    """R on a prime-power tuple, directly from the exponent profile.

    For top exponent e > 1 the value is p^(v+e) * (p-1)^(r-s+1) * h_s(p)
    with h_s(x) = ((x-1)^(s-1) + (-1)^s) / x; for e = 1 it is
    (p-1)^r + (-1)^r * (p-2).
    """
    p, r, s = profile.p, len(profile.exponents), profile.s
    if profile.e == 1:
        return (p - 1) ** r + (-1) ** r * (p - 2)
    return p ** (profile.v + profile.e) * (p - 1) ** (r - s + 1) * h_value(s, p)


def g_r_value(r: int, m) -> Fraction:
    """R(m, ..., m) / m (r copies), assembled multiplicatively.

    Not an integer in general: on primes the local value is
    ((p-1)^r + (-1)^r (p-2)) / p.
    """
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    fm = _as_factored(m)
    out = Fraction(1)
    for p, e in fm.factors:
        out *= Fraction(r_prime_power(prime_power_profile(p, (e,) * r)), p**e)
    return out
