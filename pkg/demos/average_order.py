#!/usr/bin/env python3
"""Average order of the normalized diagonal sum g_r(m) = R(m, ..., m)/m.

Partial sums of g_r grow like (alpha_r / r) x^r, with alpha_r a
convergent Euler product.  The demo shows the product settling as the
prime bound grows and the empirical/predicted ratio approaching 1.
"""

from ramsum import alpha_r, asymptotic_report, dirichlet_decomposition_check, g_r_sieve


def product_convergence(r=2):
    print(f"alpha_{r} as the prime bound grows:")
    for bound in (10, 100, 1000, 10**4, 10**5):
        print(f"  primes <= {bound:>6}: {alpha_r(r, bound):.10f}")


def first_values(r=2, x=12):
    print(f"\ng_{r}(m) for m <= {x} (exact):")
    vals = g_r_sieve(r, x)
    print("  " + ", ".join(f"g({m})={vals[m]}" for m in range(1, x + 1)))


def ratio_table(r=2):
    print(f"\nempirical / predicted ratio for r = {r}:")
    for x in (100, 500, 1000, 2000, 5000):
        rep = asymptotic_report(r, x, 10**5)
        print(f"  x={x:>5}: ratio = {rep.ratio:.5f}")


def decomposition():
    print("\nconvolution decomposition g_r = F_r * id_(r-1), checked exactly:")
    for r in (2, 3, 4):
        ok = dirichlet_decomposition_check(r, 2000)
        print(f"  r={r}, m <= 2000: {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    product_convergence()
    first_values()
    ratio_table(2)
    ratio_table(3)
    decomposition()
