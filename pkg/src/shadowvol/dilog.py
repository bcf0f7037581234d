"""Principal logarithm and dilogarithm.

Branch conventions: Im log lies in (-pi, pi]; a negative real argument gets
+pi i whatever the sign of its zero imaginary part.  ``li2`` on the real cut
(1, inf) returns the limit from below, which is the value consistent with
``log1m`` treating real z > 1 as z - i0.
"""

import cmath
import math
from fractions import Fraction

PI2_6 = math.pi ** 2 / 6


def plog(z):
    z = complex(z)
    if z == 0:
        raise ValueError("log of zero")
    if z.imag == 0 and z.real < 0:
        return complex(math.log(-z.real), math.pi)
    return cmath.log(z)


def log1m(z):
    """log(1 - z) with the principal branch."""
    return plog(1 - complex(z))


def _bernoulli_even(count):
    # B_0..B_{2 count} via the standard recurrence, exact rationals
    n_max = 2 * count
    b = [Fraction(0)] * (n_max + 1)
    b[0] = Fraction(1)
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += Fraction(math.comb(m + 1, k)) * b[k]
        b[m] = -acc / (m + 1)
    return [float(b[2 * k] / math.factorial(2 * k + 1)) for k in range(1, count + 1)]


_SERIES = _bernoulli_even(22)


def _li2_series(z):
    # Li2(z) = sum B_n u^(n+1)/(n+1)!, u = -log(1-z); valid for |u| < 2 pi
    u = -log1m(z)
    u2 = u * u
    total = u - u2 / 4
    power = u
    for c in _SERIES:
        power *= u2
        term = c * power
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return total


def li2(z):
    z = complex(z)
    if z == 0:
        return 0j
    if z == 1:
        return complex(PI2_6)
    if abs(z) > 1:
        lz = plog(-z)
        return -PI2_6 - 0.5 * lz * lz - _li2_unit(1 / z)
    return _li2_unit(z)


def _li2_power(z):
    total = 0j
    power = 1 + 0j
    for k in range(1, 80):
        power *= z
        term = power / (k * k)
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return total


def _li2_unit(z):
    if z == 1:
        return complex(PI2_6)
    if abs(z) <= 0.5:
        return _li2_power(z)
    if z.real > 0.5:
        return PI2_6 - plog(z) * log1m(z) - _li2_series(1 - z)
    return _li2_series(z)
