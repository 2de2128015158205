"""Independent reference computations used only by the tests.

None of these reuse the package's fold, reduction or threshold code.
"""

from collections import defaultdict
from fractions import Fraction


def factorize(m):
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def lcm_by_prime_exponents(values):
    """lcm as the product of p^max_exponent over the factorizations of ``values``."""
    best = defaultdict(int)
    for v in values:
        for p, e in factorize(v).items():
            best[p] = max(best[p], e)
    result = 1
    for p, e in best.items():
        result *= p**e
    return result


def lcm_by_multiples(values):
    """Smallest positive multiple of max(values) divisible by every value. Tiny inputs only."""
    top = max(values)
    m = top
    while any(m % v for v in values):
        m += top
    return m


def terms(u0, r, n, k=0):
    return [u0 + i * r for i in range(k, n + 1)]


def c_by_product(u0, r, n, k=0):
    num = 1
    for t in terms(u0, r, n, k):
        num *= t
    den = 1
    for i in range(2, n - k + 1):
        den *= i
    return Fraction(num, den)


def threshold_by_search(u0, r, n):
    """k_n with the floor found by stepping q up while (q + 1)(r + 1) <= n - u0."""
    q = -(abs(n - u0) + 1)
    while (q + 1) * (r + 1) <= n - u0:
        q += 1
    return max(0, q + 1)


def tight_pairs_by_enumeration(alpha_max, r_max):
    pairs = set()
    for alpha in range(2, alpha_max + 1):
        for r in range(2, r_max + 1):
            power = 1
            for _ in range(alpha):
                power *= r
            if 2 * alpha * r >= power + 1:
                pairs.add((alpha, r))
    return pairs
