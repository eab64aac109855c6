"""Exact Ramanujan sums and sums of their products over residue classes.

The library computes everything twice where it matters: definitional
residue-scan oracles sit next to fast multiplicative/convolution paths,
and the test suite holds them equal.  All production arithmetic is exact
(unbounded integers, `fractions.Fraction`); floating point appears only
in the exponential-sum cross-check and in final asymptotic reports.
"""

from .arith import (
    ExactRational,
    FactoredNat,
    ModuliTuple,
    as_moduli_tuple,
    brauer_rademacher_sides,
    coprime_count_in_class,
    crt_solve,
    dedekind_psi,
    distinct_prime_count,
    divisors,
    euler_phi,
    factorize,
    is_squarefree,
    mobius,
    moduli_tuple,
    multiplicative_eval,
)
from .asymptotics import (
    AsymptoticReport,
    EulerFactorData,
    alpha_r,
    asymptotic_report,
    dirichlet_decomposition_check,
    euler_factor,
    euler_factor_data,
    g_r_partial_sum,
    g_r_sieve,
    x_r_value,
)
from .congruences import (
    IntPolynomial,
    PolySystem,
    RootCount,
    as_poly_system,
    count_roots,
    linear_shift_poly,
    linear_system_root_count,
    parse_polynomial,
    poly_eval_mod,
)
from .errors import ConsistencyError, DomainError, PolynomialSyntaxError, ScaleError
from .even import (
    FourierCoefficients,
    SEvenFunction,
    cauchy_convolve,
    constant_even,
    coprime_shift_sum,
    evaluate,
    fourier_coefficients,
    from_fourier,
    ramanujan_even,
    s_even,
    t_a,
)
from .products import (
    PrimePowerProfile,
    e_g_direct,
    e_g_fast,
    e_shift,
    g_r_value,
    h_value,
    prime_power_profile,
    r_func,
    r_g_direct,
    r_g_fast,
    r_prime_power,
    r_shift,
)
from .ramanujan import (
    RamanujanTable,
    ramanujan_row,
    ramanujan_sum,
    ramanujan_sum_exponential,
    ramanujan_sum_totient_form,
    ramanujan_table,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticReport",
    "ConsistencyError",
    "DomainError",
    "EulerFactorData",
    "ExactRational",
    "FactoredNat",
    "FourierCoefficients",
    "IntPolynomial",
    "ModuliTuple",
    "PolySystem",
    "PolynomialSyntaxError",
    "PrimePowerProfile",
    "RamanujanTable",
    "RootCount",
    "SEvenFunction",
    "ScaleError",
    "alpha_r",
    "as_moduli_tuple",
    "as_poly_system",
    "asymptotic_report",
    "brauer_rademacher_sides",
    "cauchy_convolve",
    "constant_even",
    "coprime_count_in_class",
    "coprime_shift_sum",
    "count_roots",
    "crt_solve",
    "dedekind_psi",
    "dirichlet_decomposition_check",
    "distinct_prime_count",
    "divisors",
    "e_g_direct",
    "e_g_fast",
    "e_shift",
    "euler_factor",
    "euler_factor_data",
    "euler_phi",
    "evaluate",
    "factorize",
    "fourier_coefficients",
    "from_fourier",
    "g_r_partial_sum",
    "g_r_sieve",
    "g_r_value",
    "h_value",
    "is_squarefree",
    "linear_shift_poly",
    "linear_system_root_count",
    "mobius",
    "moduli_tuple",
    "multiplicative_eval",
    "parse_polynomial",
    "poly_eval_mod",
    "prime_power_profile",
    "r_func",
    "r_g_direct",
    "r_g_fast",
    "r_prime_power",
    "r_shift",
    "ramanujan_even",
    "ramanujan_row",
    "ramanujan_sum",
    "ramanujan_sum_exponential",
    "ramanujan_sum_totient_form",
    "ramanujan_table",
    "s_even",
    "t_a",
    "x_r_value",
]
