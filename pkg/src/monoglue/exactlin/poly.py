"""Univariate polynomials over the rationals.

Covers what the monodromy computations need: characteristic polynomials,
exact division, gcds and complete factorization into monic irreducibles.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, isqrt
from typing import Sequence

from ..errors import NotSquare, UnsupportedDegree, ZeroPolynomial
from .matrix import Matrix, format_rational, to_rational

#: largest degree handed to the Kronecker factor search
MAX_SEARCH_DEGREE = 8


class Polynomial:
    """Immutable polynomial in ``t``; coefficients are stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = [to_rational(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, c=1) -> Polynomial:
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots) -> Polynomial:
        return reduce(lambda acc, r: acc * cls([-to_rational(r), 1]), roots, cls([1]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> Polynomial:
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no monic associate")
        return self.scale(1 / self.lead)

    def scale(self, c) -> Polynomial:
        c = to_rational(c)
        return Polynomial([c * a for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    def __neg__(self) -> Polynomial:
        return self.scale(-1)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def __pow__(self, n: int) -> Polynomial:
        result = Polynomial([1])
        for _ in range(n):
            result = result * self
        return result

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv = 1 / other.lead
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + other.degree] * inv
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(q), Polynomial(rem[:other.degree] if other.degree > 0 else [])

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return self.divmod(other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return self.divmod(other)[1]

    def divides(self, other: Polynomial) -> bool:
        return (other % self).is_zero()

    def derivative(self) -> Polynomial:
        return Polynomial([i * a for i, a in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def eval_matrix(self, A: Matrix) -> Matrix:
        if not A.is_square:
            raise NotSquare("polynomial evaluated at a non-square matrix")
        acc = Matrix.zeros(A.rows, A.cols)
        for a in reversed(self.coeffs):
            acc = acc @ A + Matrix.scalar(A.rows, a)
        return acc

    def reciprocal(self) -> Polynomial:
        """``t^deg * p(1/t)``; undefined information is lost if p(0) == 0."""
        return Polynomial(tuple(reversed(self.coeffs)))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if k == 0:
                term = format_rational(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                term = var if mag == 1 else f"{format_rational(mag)}*{var}"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += sign + term
        return out

    def __repr__(self):
        return f"Polynomial({self})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def charpoly(A: Matrix) -> Polynomial:
    """``det(tI - A)`` by the Faddeev-LeVerrier recursion (exact over Q)."""
    if not A.is_square:
        raise NotSquare(f"characteristic polynomial of a {A.rows}x{A.cols} matrix")
    n = A.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = Matrix.zeros(n, n)
    I = Matrix.identity(n)
    for k in range(1, n + 1):
        M = A @ M + I.scale(coeffs[n - k + 1])
        AM = A @ M
        trace = sum((AM[i, i] for i in range(n)), Fraction(0))
        coeffs[n - k] = -trace / k
    return Polynomial(coeffs)


def root_multiplicity(p: Polynomial, root) -> int:
    lin = Polynomial([-to_rational(root), 1])
    m = 0
    while not p.is_zero() and lin.divides(p):
        p = p // lin
        m += 1
    return m


# -- factorization -------------------------------------------------------------


def _primitive_integer(p: Polynomial) -> list[int]:
    den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in p.coeffs), 1)
    ints = [int(c * den) for c in p.coeffs]
    g = reduce(gcd, ints, 0) or 1
    ints = [x // g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _squarefree_parts(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Monic squarefree ``(part, multiplicity)`` pairs with p = prod part**mult."""
    a = p.monic()
    y = poly_gcd(a, a.derivative())
    w = a // y
    out = []
    i = 1
    while w.degree > 0:
        z = poly_gcd(w, y)
        part = w // z
        if part.degree > 0:
            out.append((part.monic(), i))
        w = z
        y = y // z
        i += 1
    return out


def _rational_roots(p: Polynomial) -> list[Fraction]:
    ints = _primitive_integer(p)
    if ints[0] == 0:
        return [Fraction(0)] + _rational_roots(Polynomial(p.coeffs[1:]))
    roots = []
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            for r in (Fraction(a, b), Fraction(-a, b)):
                if r not in roots and p(r) == 0:
                    roots.append(r)
    return sorted(roots)


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> Polynomial:
    result = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        result = result + basis.scale(Fraction(yi) / denom)
    return result


def _kronecker_factor(p: Polynomial) -> Polynomial | None:
    """A nontrivial factor of the primitive integer polynomial ``p``, or None."""
    n = p.degree
    if n > MAX_SEARCH_DEGREE:
        raise UnsupportedDegree(f"factor search limited to degree {MAX_SEARCH_DEGREE}, got {n}")
    candidates = [x for x in range(-3 * n - 6, 3 * n + 7) if p(x) != 0]
    candidates.sort(key=lambda x: (len(_divisors(int(p(x)))), abs(x), x))
    for d in range(2, n // 2 + 1):
        xs = sorted(candidates[: d + 1])
        vals = [int(p(x)) for x in xs]
        choices = [[v for dv in _divisors(val) for v in (dv, -dv)] for val in vals]
        choices[0] = _divisors(vals[0])
        for ys in product(*choices):
            g = _interpolate(xs, ys)
            if g.degree != d or any(c.denominator != 1 for c in g.coeffs):
                continue
            if g.divides(p):
                return g
    return None


def _split_irreducible(p: Polynomial) -> list[Polynomial]:
    """Monic irreducible factors of a squarefree polynomial without rational roots."""
    if p.degree <= 1:
        return [p.monic()]
    ip = Polynomial(_primitive_integer(p))
    g = _kronecker_factor(ip)
    if g is None:
        return [p.monic()]
    return _split_irreducible(g) + _split_irreducible(ip // g)


def _factor_key(item: tuple[Polynomial, int]):
    f, m = item
    return (f.degree, f.coeffs, m)


def factor_rational_poly(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Factor a nonzero polynomial into monic irreducibles over Q.

    Returns ``(factor, multiplicity)`` pairs sorted by degree and then by
    coefficients.  Rational roots are peeled off first; what remains goes
    through a Kronecker interpolation search, which is limited to degree
    ``MAX_SEARCH_DEGREE`` (larger leftovers raise ``UnsupportedDegree``).
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if p.degree == 0:
        return []
    counts: dict[Polynomial, int] = {}
    for part, mult in _squarefree_parts(p):
        rest = part
        for r in _rational_roots(part):
            lin = Polynomial([-r, 1])
            counts[lin] = counts.get(lin, 0) + mult
            rest = rest // lin
        if rest.degree > 0:
            for f in _split_irreducible(rest):
                counts[f] = counts.get(f, 0) + mult
    return sorted(counts.items(), key=_factor_key)


def multiply_factors(factors) -> Polynomial:
    out = Polynomial([1])
    for f, m in factors:
        out = out * f ** m
    return out
