"""Conjugation quandle on parabolic vectors.

A parabolic vector is a nonzero pair (alpha, beta) in C^2, taken up to sign.
The pair stored on a ``ParabolicVector`` is the fixed representative; the
library never flips signs on its own, because determinants of
representatives are only well defined once a sign has been chosen.
"""

from dataclasses import dataclass

TOL_ZERO = 1e-12
TOL_EQ = 1e-9


class _Infinity:
    """The point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


def is_infinity(z):
    return z is INFINITY


@dataclass(frozen=True)
class ParabolicVector:
    alpha: complex
    beta: complex

    def __post_init__(self):
        a = complex(self.alpha)
        b = complex(self.beta)
        for x in (a, b):
            if x != x or abs(x) == float("inf"):
                raise ValueError("parabolic vector entries must be finite")
        if max(abs(a), abs(b)) <= TOL_ZERO:
            raise ValueError("parabolic vector must be nonzero")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def __neg__(self):
        return ParabolicVector(-self.alpha, -self.beta)

    def scaled(self, c):
        return ParabolicVector(c * self.alpha, c * self.beta)

    def conjugate(self):
        return ParabolicVector(self.alpha.conjugate(), self.beta.conjugate())

    def as_tuple(self):
        return (self.alpha, self.beta)


def vec(alpha, beta):
    return ParabolicVector(alpha, beta)


def qop(a, b):
    """Quandle operation a*b: the parabolic matrix of b applied to a."""
    g, d = b.alpha, b.beta
    x, y = a.alpha, a.beta
    return ParabolicVector((1 + g * d) * x - g * g * y, d * d * x + (1 - g * d) * y)


def qop_inv(a, b):
    """Inverse operation, so that qop(qop_inv(a, b), b) == a."""
    g, d = b.alpha, b.beta
    x, y = a.alpha, a.beta
    return ParabolicVector((1 - g * d) * x + g * g * y, -d * d * x + (1 + g * d) * y)


def hopf(a, tol=TOL_ZERO):
    if abs(a.beta) <= tol:
        return INFINITY
    return a.alpha / a.beta


def det2(a, b):
    return a.alpha * b.beta - a.beta * b.alpha


def to_matrix(a):
    x, y = a.alpha, a.beta
    return ((1 + x * y, -x * x), (y * y, 1 - x * y))


def mobius_apply(m, z, tol=TOL_ZERO):
    (a, b), (c, d) = m
    if is_infinity(z):
        if abs(c) <= tol:
            return INFINITY
        return a / c
    den = c * z + d
    if abs(den) <= tol * max(1.0, abs(a * z + b)):
        return INFINITY
    return (a * z + b) / den


def eq_up_to_sign(a, b, tol=TOL_EQ):
    def close(u, v):
        return abs(u.alpha - v.alpha) <= tol and abs(u.beta - v.beta) <= tol

    return close(a, b) or close(a, -b)


def sign_relative(a, b, tol=TOL_EQ):
    """Return +1 or -1 if a == +-b within tol, otherwise None."""
    if abs(a.alpha - b.alpha) <= tol and abs(a.beta - b.beta) <= tol:
        return 1
    if abs(a.alpha + b.alpha) <= tol and abs(a.beta + b.beta) <= tol:
        return -1
    return None


def chordal_distance(z, w):
    """Chordal distance on C u {inf}; symmetric and finite at infinity."""
    if is_infinity(z) and is_infinity(w):
        return 0.0
    if is_infinity(z):
        return 2.0 / (1 + abs(w) ** 2) ** 0.5
    if is_infinity(w):
        return 2.0 / (1 + abs(z) ** 2) ** 0.5
    return 2.0 * abs(z - w) / ((1 + abs(z) ** 2) ** 0.5 * (1 + abs(w) ** 2) ** 0.5)


def hopf_distance(a, b):
    """Chordal distance between hopf(a) and hopf(b), computed without division."""
    num = abs(det2(a, b))
    na = (abs(a.alpha) ** 2 + abs(a.beta) ** 2) ** 0.5
    nb = (abs(b.alpha) ** 2 + abs(b.beta) ** 2) ** 0.5
    return 2.0 * num / (na * nb)


def vector_to_json(a):
    return [[a.alpha.real, a.alpha.imag], [a.beta.real, a.beta.imag]]


def _num_from_json(x):
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise ValueError("complex literal must be [re, im]")
        return complex(float(x[0]), float(x[1]))
    return complex(float(x))


def vector_from_json(obj):
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise ValueError("parabolic vector must be a two-element array")
    return ParabolicVector(_num_from_json(obj[0]), _num_from_json(obj[1]))
