"""Polynomials over a FieldTower.

Coefficients are canonical element ints, ascending degree, stored trimmed;
the zero polynomial has degree -1.  Provides the pieces the code machinery
needs: evaluation, Frobenius twisting, division/gcd, irreducibility
testing, Lagrange interpolation, and a deterministic search for monic
polynomials without roots in the field.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence, Tuple

from .field import Element, FieldTower


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldTower, coeffs: Iterable[Element] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not 0 <= c < field.order:
                raise ValueError(f"coefficient {c} out of range for {field!r}")
        self.field = field
        self.coeffs: Tuple[Element, ...] = tuple(cs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field: FieldTower) -> "Poly":
        return cls(field)

    @classmethod
    def one(cls, field: FieldTower) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldTower) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: FieldTower, c: Element) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: FieldTower, degree: int, c: Element = 1) -> "Poly":
        return cls(field, (0,) * degree + (c,))

    # -- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient; -1 for the zero poly."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Element:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, (F.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly(F, out)

    def scaled(self, c: Element) -> "Poly":
        F = self.field
        return Poly(F, (F.mul(c, x) for x in self.coeffs))

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lc_inv = F.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = F.mul(rem[-1], lc_inv)
            shift = len(rem) - 1 - db
            quot[shift] = c
            for j, y in enumerate(other.coeffs):
                rem[shift + j] = F.sub(rem[shift + j], F.mul(c, y))
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __call__(self, point: Element) -> Element:
        F = self.field
        acc: Element = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, point), c)
        return acc

    def frobenius(self) -> "Poly":
        """The polynomial equal to f(x)**q: coefficient f_i**q at exponent i*q,
        so evaluating it at any point a gives f(a)**q."""
        F = self.field
        if self.is_zero():
            return Poly(F)
        out = [0] * (self.degree * F.q + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * F.q] = F.frobenius(c)
        return Poly(F, out)

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {self.coeffs})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd."""
    while not b.is_zero():
        a, b = b, a % b
    if not a.is_zero():
        a = a.scaled(a.field.inv(a.coeffs[-1]))
    return a


def pow_mod(base: Poly, exp: int, mod: Poly) -> Poly:
    result = Poly.one(base.field)
    base = base % mod
    while exp:
        if exp & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        exp >>= 1
    return result


def is_irreducible(f: Poly) -> bool:
    """Irreducibility over the big field GF(q^2).

    A reducible polynomial of degree d has an irreducible factor of degree
    at most d/2, and x**(Q**i) - x is the product of all irreducibles whose
    degree divides i, so f is irreducible iff gcd(x**(Q**i) - x, f) is
    trivial for every i up to d/2.  (Iterating h -> h**Q commutes with
    reduction mod f because Q is a power of the characteristic.)
    """
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    F = f.field
    Q = F.order
    x = Poly.x(F)
    h = x
    for _ in range(d // 2):
        h = pow_mod(h, Q, f)
        if poly_gcd(f, h - x).degree > 0:
            return False
    return True


@functools.lru_cache(maxsize=None)
def root_free_monic(field: FieldTower, degree: int) -> Poly:
    """First monic polynomial of the given degree >= 2 with no root in the
    field, enumerating coefficients in ascending order with the constant
    term fastest-varying.  Irreducibility implies rootlessness at degree >= 2,
    and testing it is cheaper than evaluating at every element for each
    candidate."""
    if degree < 2:
        raise ValueError(f"degree must be at least 2, got {degree}")
    Q = field.order
    idx = 0
    while True:
        coeffs = []
        m = idx
        for _ in range(degree):
            m, r = divmod(m, Q)
            coeffs.append(r)
        if m:
            raise RuntimeError("no irreducible polynomial found")  # cannot happen
        coeffs.append(1)
        cand = Poly(field, coeffs)
        if is_irreducible(cand):
            return cand
        idx += 1


def lagrange_interpolate(
    field: FieldTower, points: Sequence[Element], values: Sequence[Element]
) -> Poly:
    """Unique polynomial of degree <= n-1 through the n given pairs."""
    if len(points) != len(values):
        raise ValueError("points and values must have equal length")
    n = len(points)
    if n == 0:
        raise ValueError("at least one interpolation point is required")
    if len(set(points)) != n:
        raise ValueError("interpolation points must be distinct")
    F = field
    full = Poly.one(F)
    for a in points:
        full = full * Poly(F, (F.neg(a), 1))
    acc = Poly.zero(F)
    for a, y in zip(points, values):
        if y == 0:
            continue
        cofactor = full // Poly(F, (F.neg(a), 1))
        acc = acc + cofactor.scaled(F.mul(y, F.inv(cofactor(a))))
    return acc
