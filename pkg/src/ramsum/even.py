"""Algebra of s-even functions and the modified orthogonality sum T_a.

An s-even function satisfies f(n) = f(gcd(n, s)) for all n, so it is
determined by its values on the divisors of s and is s-periodic; that is
exactly how it is stored here.  Every such function has unique expansion
coefficients alpha(d), d | s, with f(n) = sum_{d|s} alpha(d) c_d(n), and
Cauchy convolution acts diagonally on them: alpha_{f (x) g} = s alpha_f alpha_g.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import as_moduli_tuple, divisors, euler_phi, mobius
from .errors import ConsistencyError, DomainError, ScaleError
from .ramanujan import ramanujan_row, ramanujan_sum

_T_DIRECT_CAP = 10**7


@dataclass(frozen=True)
class SEvenFunction:
    """An s-even function stored by its values on the divisors of s."""

    s: int
    values: dict

    def __post_init__(self):
        if self.s < 1:
            raise DomainError(f"period must be positive, got {self.s}")
        divs = divisors(self.s)
        if set(self.values) != set(divs):
            raise DomainError(f"values must be keyed by exactly the divisors of {self.s}")
        for d in divs:
            self.values[d] = Fraction(self.values[d])

    def __call__(self, n: int) -> Fraction:
        return self.values[math.gcd(n % self.s, self.s)]


@dataclass(frozen=True)
class FourierCoefficients:
    """Expansion coefficients alpha(d) of an s-even function, d | s."""

    s: int
    alpha: dict

    def __post_init__(self):
        if self.s < 1:
            raise DomainError(f"period must be positive, got {self.s}")
        divs = divisors(self.s)
        if set(self.alpha) != set(divs):
            raise DomainError(f"coefficients must be keyed by exactly the divisors of {self.s}")
        for d in divs:
            self.alpha[d] = Fraction(self.alpha[d])


def s_even(s: int, values) -> SEvenFunction:
    return SEvenFunction(s, dict(values))


def constant_even(s: int, value) -> SEvenFunction:
    return SEvenFunction(s, {d: Fraction(value) for d in divisors(s)})


def ramanujan_even(n: int, s: int | None = None) -> SEvenFunction:
    """c_n viewed as an s-even function for any multiple s of n (default n)."""
    s = n if s is None else s
    if s % n:
        raise DomainError(f"{n} does not divide the requested period {s}")
    return SEvenFunction(s, {d: Fraction(ramanujan_sum(n, d)) for d in divisors(s)})


def evaluate(f: SEvenFunction, n: int) -> Fraction:
    """f(n) = f(gcd(n mod s, s)), with gcd(0, s) = s."""
    return f(n)


def fourier_coefficients(f: SEvenFunction) -> FourierCoefficients:
    """alpha(d) = (1/s) sum_{e|s} f(e) c_{s/e}(s/d), exactly."""
    s = f.s
    divs = divisors(s)
    alpha = {}
    for d in divs:
        acc = Fraction(0)
        for e in divs:
            fe = f.values[e]
            if fe:
                acc += fe * ramanujan_sum(s // e, s // d)
        alpha[d] = acc / s
    return FourierCoefficients(s, alpha)


def from_fourier(coeffs: FourierCoefficients) -> SEvenFunction:
    """The s-even function f(n) = sum_{d|s} alpha(d) c_d(n)."""
    s = coeffs.s
    values = {}
    for e in divisors(s):
        acc = Fraction(0)
        for d, a in coeffs.alpha.items():
            if a:
                acc += a * ramanujan_sum(d, e)
        values[e] = acc
    return SEvenFunction(s, values)


def cauchy_convolve(f: SEvenFunction, g: SEvenFunction, strategy: str = "spectral") -> SEvenFunction:
    """(f (x) g)(n) = sum_{k mod s} f(k) g(n - k).

    Strategy "naive" evaluates the defining sum on each divisor of s;
    "spectral" multiplies expansion coefficients (alpha -> s*alpha_f*alpha_g)
    and transforms back.  Both produce identical exact results.
    """
    if f.s != g.s:
        raise DomainError(f"period mismatch: {f.s} != {g.s}")
    s = f.s
    if strategy == "naive":
        values = {}
        for d in divisors(s):
            acc = Fraction(0)
            for k in range(s):
                fk = f(k)
                if fk:
                    acc += fk * g(d - k)
            values[d] = acc
        return SEvenFunction(s, values)
    if strategy == "spectral":
        af = fourier_coefficients(f).alpha
        ag = fourier_coefficients(g).alpha
        return from_fourier(FourierCoefficients(s, {d: s * af[d] * ag[d] for d in af}))
    raise DomainError(f"unknown strategy {strategy!r}")


def coprime_shift_sum(f: SEvenFunction, a: int) -> Fraction:
    """sum_{k <= s, gcd(k, s) = 1} f(a - k).

    Computed both directly and through the coefficient identity
    phi(s) * sum_{d|s} alpha(d) mu(d) c_d(a) / phi(d); the two sides must
    agree exactly.
    """
    s = f.s
    direct = Fraction(0)
    for k in range(1, s + 1):
        if math.gcd(k, s) == 1:
            direct += f(a - k)
    spectral = Fraction(0)
    for d, alpha in fourier_coefficients(f).alpha.items():
        if alpha:
            w = mobius(d)
            if w:
                spectral += alpha * w * ramanujan_sum(d, a) / euler_phi(d)
    spectral *= euler_phi(s)
    if direct != spectral:
        raise ConsistencyError(
            f"coprime shift sum mismatch for s={s}, a={a}: {direct} != {spectral}"
        )
    return direct


def t_a(moduli, a: int, strategy: str = "closed") -> int:
    """The modified orthogonality sum over r moduli with shift a.

    T_a(m_1, ..., m_r) sums c_{m_1}(k_1) ... c_{m_{r-1}}(k_{r-1})
    c_{m_r}(k_1 + ... + k_{r-1} + l - a) over k_i mod m and l mod m
    coprime to m.  It vanishes unless m_1 = ... = m_r = m, where it equals
    m^(r-1) mu(m) c_m(a).

    Strategies: "closed" applies that evaluation; "spectral" convolves the
    c_{m_i} as m-even functions and applies the coprime shift sum;
    "direct" iterates the defining grid (scale-capped).  All agree.
    """
    mt = as_moduli_tuple(moduli)
    m = mt.lcm.value
    r = len(mt)
    if strategy == "closed":
        if all(mi == m for mi in mt.moduli):
            return m ** (r - 1) * mobius(mt.lcm) * ramanujan_sum(m, a)
        return 0
    if strategy == "spectral":
        kernel = ramanujan_even(mt.moduli[0], m)
        for mi in mt.moduli[1:]:
            kernel = cauchy_convolve(kernel, ramanujan_even(mi, m))
        val = coprime_shift_sum(kernel, a)
        if val.denominator != 1:
            raise ConsistencyError(f"non-integer T value {val}")
        return int(val)
    if strategy == "direct":
        if m**r > _T_DIRECT_CAP:
            raise ScaleError(f"direct grid m^r = {m**r} exceeds 10^7")
        rows = [ramanujan_row(mi) for mi in mt.moduli]
        last, m_last = rows[-1], mt.moduli[-1]
        units = [l for l in range(m) if math.gcd(l, m) == 1]
        total = 0
        from itertools import product as cartesian

        for kvec in cartesian(range(m), repeat=r - 1):
            c = 1
            for row, mi, k in zip(rows, mt.moduli, kvec):
                c *= row[k % mi]
            if c:
                base = sum(kvec) - a
                for l in units:
                    total += c * last[(base + l) % m_last]
        return total
    raise DomainError(f"unknown strategy {strategy!r}")
