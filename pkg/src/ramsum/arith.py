"""Exact integer number theory primitives.

Factorization, the classical multiplicative functions, CRT for arbitrary
(not necessarily coprime) moduli, and a generic evaluator for
multiplicative functions of several variables.  Everything is exact:
unbounded Python integers throughout, `fractions.Fraction` wherever a
value is not guaranteed to be an integer.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ScaleError

# Exact fraction type used for all non-integer values in the package.
ExactRational = Fraction


@dataclass(frozen=True)
class FactoredNat:
    """A positive integer together with its canonical prime factorization.

    ``factors`` lists ``(prime, exponent)`` pairs with strictly increasing
    primes and exponents >= 1; the empty tuple represents 1.
    """

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise DomainError(f"positive integer required, got {self.value}")
        acc = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise DomainError("factors must list increasing primes with exponents >= 1")
            prev = p
            acc *= p**e
        if acc != self.value:
            raise DomainError(f"factor product {acc} does not reconstruct {self.value}")

    def __int__(self) -> int:
        return self.value


# Increments of the mod-30 wheel, starting from 7.
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> FactoredNat:
    """Factor ``n >= 1`` by deterministic trial division (2-3-5 wheel)."""
    if n < 1:
        raise DomainError(f"cannot factor {n}: positive integer required")
    m = n
    factors = []
    for p in (2, 3, 5):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    f, i = 7, 0
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            factors.append((f, e))
        f += _WHEEL[i]
        i = (i + 1) & 7
    if m > 1:
        factors.append((m, 1))
    return FactoredNat(n, tuple(factors))


def _as_factored(n) -> FactoredNat:
    return n if isinstance(n, FactoredNat) else factorize(n)


def _valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def divisors(n) -> list[int]:
    """All divisors of ``n`` in increasing order."""
    fn = _as_factored(n)
    divs = [1]
    for p, e in fn.factors:
        pk, powers = 1, []
        for _ in range(e):
            pk *= p
            powers.append(pk)
        divs += [d * q for d in divs for q in powers]
    divs.sort()
    return divs


def mobius(n) -> int:
    """mu(n): 0 on non-squarefree n, else (-1)^(number of prime factors)."""
    fn = _as_factored(n)
    if any(e > 1 for _, e in fn.factors):
        return 0
    return -1 if len(fn.factors) % 2 else 1


def euler_phi(n) -> int:
    """phi(n) = n * prod_{p|n} (1 - 1/p), computed exactly."""
    fn = _as_factored(n)
    out = 1
    for p, e in fn.factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def dedekind_psi(n) -> int:
    """psi(n) = n * prod_{p|n} (1 + 1/p), computed exactly."""
    fn = _as_factored(n)
    out = 1
    for p, e in fn.factors:
        out *= p ** (e - 1) * (p + 1)
    return out


def distinct_prime_count(n) -> int:
    """omega(n), the number of distinct prime factors."""
    return len(_as_factored(n).factors)


def is_squarefree(n) -> bool:
    return all(e == 1 for _, e in _as_factored(n).factors)


@dataclass(frozen=True)
class ModuliTuple:
    """An ordered tuple of positive moduli with its lcm and prime profile.

    ``profile`` pairs each prime of the lcm with the exponent vector
    (v_p(m_1), ..., v_p(m_r)); the maximum of each vector is v_p(lcm).
    """

    moduli: tuple[int, ...]
    lcm: FactoredNat
    profile: tuple[tuple[int, tuple[int, ...]], ...]

    def __len__(self) -> int:
        return len(self.moduli)


def moduli_tuple(moduli) -> ModuliTuple:
    """Build a :class:`ModuliTuple` from a sequence of positive integers."""
    ms = tuple(int(m) for m in moduli)
    if not ms:
        raise DomainError("at least one modulus required")
    if any(m < 1 for m in ms):
        raise DomainError(f"moduli must be positive, got {ms}")
    flcm = factorize(math.lcm(*ms))
    profile = tuple((p, tuple(_valuation(m, p) for m in ms)) for p, _ in flcm.factors)
    return ModuliTuple(ms, flcm, profile)


def as_moduli_tuple(moduli) -> ModuliTuple:
    return moduli if isinstance(moduli, ModuliTuple) else moduli_tuple(moduli)


def multiplicative_eval(local_rule, moduli):
    """Evaluate a multiplicative function of several variables.

    ``local_rule(p, (e_1, ..., e_r))`` must return the function's value on
    the prime-power tuple (p^e_1, ..., p^e_r) and must equal 1 on the
    all-zero exponent vector.  The result is the product of local values
    over the primes of lcm(moduli); for the all-ones tuple the empty
    product gives 1.
    """
    mt = as_moduli_tuple(moduli)
    out = 1
    for p, evec in mt.profile:
        out = out * local_rule(p, evec)
    return out


def crt_solve(congruences):
    """Solve the simultaneous congruences x = a_i (mod d_i).

    Returns ``(x, L)`` with ``0 <= x < L = lcm(d_1, ..., d_r)`` when the
    system is solvable, i.e. gcd(d_i, d_j) divides a_i - a_j for every
    pair; returns ``None`` otherwise.
    """
    x, lcm = 0, 1
    for a, d in congruences:
        if d < 1:
            raise DomainError(f"modulus must be positive, got {d}")
        g = math.gcd(lcm, d)
        if (a - x) % g:
            return None
        dd = d // g
        if dd > 1:
            t = ((a - x) // g) * pow((lcm // g) % dd, -1, dd) % dd
            x += lcm * t
        lcm *= dd
        x %= lcm
    return x, lcm


def coprime_count_in_class(n: int, d: int, x: int) -> int:
    """Count k <= n with k = x (mod d) and gcd(k, n) = 1.

    Requires d | n, 1 <= x <= d and gcd(x, d) = 1; the result always
    equals phi(n)/phi(d).
    """
    if n < 1 or d < 1 or n % d:
        raise DomainError(f"need d | n, got n={n}, d={d}")
    if not 1 <= x <= d or math.gcd(x, d) != 1:
        raise DomainError(f"need 1 <= x <= d with gcd(x, d) = 1, got x={x}, d={d}")
    if n > 10**7:
        raise ScaleError(f"direct residue-class scan capped at n <= 10^7, got {n}")
    return sum(1 for k in range(x, n + 1, d) if math.gcd(k, n) == 1)


def brauer_rademacher_sides(n: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_{d|n, gcd(d,k)=1} d*mu(n/d)/phi(d) = mu(n)c_n(k)/phi(n).

    Returns ``(lhs, rhs)`` as exact fractions; the two are always equal.
    """
    if n < 1 or k < 1:
        raise DomainError("n and k must be positive")
    from .ramanujan import ramanujan_sum

    lhs = Fraction(0)
    for d in divisors(n):
        if math.gcd(d, k) == 1:
            w = mobius(n // d)
            if w:
                lhs += Fraction(d * w, euler_phi(d))
    rhs = Fraction(mobius(n) * ramanujan_sum(n, k), euler_phi(n))
    return lhs, rhs
