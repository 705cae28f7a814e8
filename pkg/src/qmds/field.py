"""Exact arithmetic in GF(q^2) together with its subfield GF(q), q = p^e.

A tower is built once from (p, e).  The modulus is the lexicographically
smallest monic irreducible polynomial of degree 2e over GF(p) (constant
term fastest-varying), and the generator is the primitive element with
the smallest packed coefficient vector.  Both choices are deterministic,
so element encodings are stable across runs and machines.

Elements are plain ints in canonical encoding:

    0      -> the zero element
    1 + j  -> generator**j   for 0 <= j <= q**2 - 2

Equality of elements is equality of ints.  Multiplication, inversion and
powering are index arithmetic on discrete logs; addition uses Zech
logarithms.  All operations are exact, and a tower is immutable after
construction, so it is safe to share freely.
"""

from __future__ import annotations

import functools
from typing import Dict, List, Tuple

#: Elements are canonical integer encodings (see module docstring).
Element = int

#: Largest allowed number of elements of GF(q^2); full log/exp/Zech tables
#: are materialised, so this caps table memory and construction time.
DEFAULT_ELEMENT_BOUND = 2 ** 14


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(q: int) -> Tuple[int, int]:
    """Split q into (p, e) with q == p**e, p prime; ValueError otherwise."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = ps[0]
    e = 0
    m = q
    while m > 1:
        m //= p
        e += 1
    if p ** e != q:
        raise ValueError(f"{q} is not a prime power")
    return p, e


# ----------------------------------------------------------------------
# Polynomials over the prime field GF(p): coefficient lists, ascending
# degree, used only to find the modulus and to bootstrap the tables.
# ----------------------------------------------------------------------

def _pf_trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pf_mul(p: int, a: List[int], b: List[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pf_trim(out)


def _pf_mod(p: int, a: List[int], m: List[int]) -> List[int]:
    # m need not be monic; reduce via an inverse of its leading coefficient
    a = list(a)
    dm = len(m) - 1
    lc_inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        c = (a[-1] * lc_inv) % p
        shift = len(a) - 1 - dm
        for j, y in enumerate(m):
            a[shift + j] = (a[shift + j] - c * y) % p
        _pf_trim(a)
    return a


def _pf_mulmod(p: int, a: List[int], b: List[int], m: List[int]) -> List[int]:
    return _pf_mod(p, _pf_mul(p, a, b), m)


def _pf_powmod(p: int, base: List[int], exp: int, m: List[int]) -> List[int]:
    result = [1]
    base = _pf_mod(p, base, m)
    while exp:
        if exp & 1:
            result = _pf_mulmod(p, result, base, m)
        base = _pf_mulmod(p, base, base, m)
        exp >>= 1
    return result


def _pf_gcd(p: int, a: List[int], b: List[int]) -> List[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pf_mod(p, a, b)
    if a:
        lc_inv = pow(a[-1], p - 2, p)
        a = [(c * lc_inv) % p for c in a]
    return a


def _pf_is_irreducible(p: int, f: List[int]) -> bool:
    """Irreducibility of f over GF(p) via the Frobenius power criterion."""
    n = len(f) - 1
    if n < 1 or f[-1] == 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    powers = {}  # i -> x^(p^i) mod f
    h = x
    for i in range(1, n + 1):
        h = _pf_powmod(p, h, p, f)
        powers[i] = h
    # x^(p^n) must reduce to x
    if _pf_trim(list(powers[n])) != x:
        return False
    for r in prime_factors(n):
        diff = list(powers[n // r])
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _pf_gcd(p, f, _pf_trim(diff))
        if len(g) - 1 > 0:
            return False
    return True


def _smallest_irreducible(p: int, n: int) -> Tuple[int, ...]:
    """First monic irreducible of degree n over GF(p), constant term
    fastest-varying in the enumeration."""
    for idx in range(p ** n):
        coeffs = []
        m = idx
        for _ in range(n):
            m, r = divmod(m, p)
            coeffs.append(r)
        coeffs.append(1)
        if _pf_is_irreducible(p, coeffs):
            return tuple(coeffs)
    raise RuntimeError(f"no irreducible polynomial of degree {n} over GF({p})")


# ----------------------------------------------------------------------
# The tower itself
# ----------------------------------------------------------------------

class FieldTower:
    """GF(q^2) with its index-2 subfield GF(q), q = p**e.

    Attributes:
        p, e: prime and extension degree, q = p**e.
        q: subfield size.
        order: q**2, the number of elements.
        modulus: monic irreducible of degree 2e over GF(p), ascending coeffs.
        generator: canonical encoding of the primitive element (always 2).
    """

    zero: Element = 0
    one: Element = 1

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if e < 1:
            raise ValueError(f"extension degree must be positive, got {e}")
        self.p = p
        self.e = e
        self.q = p ** e
        self.order = self.q ** 2
        self.modulus: Tuple[int, ...] = _smallest_irreducible(p, 2 * e)
        self._build_tables()

    # -- construction ---------------------------------------------------

    def _unpack(self, packed: int) -> List[int]:
        digits = []
        for _ in range(2 * self.e):
            packed, r = divmod(packed, self.p)
            digits.append(r)
        return digits

    def _pack(self, digits: List[int]) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d
        return out

    def _vadd(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = self._unpack(a), self._unpack(b)
        return self._pack([(x + y) % self.p for x, y in zip(da, db)])

    def _vmul(self, a: int, b: int) -> int:
        p, n = self.p, 2 * self.e
        da, db = self._unpack(a), self._unpack(b)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(len(prod) - 1, n - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(n):
                    prod[i - n + j] = (prod[i - n + j] - c * self.modulus[j]) % p
        return self._pack(prod[:n])

    def _vpow(self, a: int, m: int) -> int:
        result = 1
        while m:
            if m & 1:
                result = self._vmul(result, a)
            a = self._vmul(a, a)
            m >>= 1
        return result

    def _build_tables(self) -> None:
        M = self.order - 1
        factors = prime_factors(M)
        gen_packed = 0
        for cand in range(2, self.order):
            if all(self._vpow(cand, M // r) != 1 for r in factors):
                gen_packed = cand
                break
        if not gen_packed:
            raise RuntimeError("no primitive element found")  # cannot happen

        exp = [0] * M
        log: Dict[int, int] = {}
        cur = 1
        for j in range(M):
            if cur in log:
                raise RuntimeError("generator order is too small")
            exp[j] = cur
            log[cur] = j
            cur = self._vmul(cur, gen_packed)
        if cur != 1:
            raise RuntimeError("generator order check failed")
        self._exp = exp
        self._log = log
        self.generator: Element = 1 + log[gen_packed]  # always 2 by construction

        # Zech logarithms: zech[d] = log(1 + generator**d), None when the sum is 0
        zech: List[int | None] = [None] * M
        for d in range(M):
            s = self._vadd(1, exp[d])
            zech[d] = None if s == 0 else log[s]
        self._zech = zech
        self._neg_shift = 0 if self.p == 2 else M // 2

        frob = [0] * self.order
        for j in range(M):
            frob[1 + j] = 1 + (j * self.q) % M
        self._frob = frob

        # subfield enumeration: 0 first, then ascending powers of norm(generator)
        g = self.norm(self.generator)
        sub = [0]
        x: Element = 1
        for _ in range(self.q - 1):
            sub.append(x)
            x = self.mul(x, g)
        self._subfield = tuple(sub)

        fixed = sum(1 for y in range(self.order) if frob[y] == y)
        if fixed != self.q or any(frob[y] != y for y in sub):
            raise RuntimeError("subfield verification failed")

    # -- element arithmetic ----------------------------------------------

    def add(self, x: Element, y: Element) -> Element:
        if x == 0:
            return y
        if y == 0:
            return x
        M = self.order - 1
        i, j = x - 1, y - 1
        t = self._zech[(j - i) % M]
        if t is None:
            return 0
        return 1 + (i + t) % M

    def neg(self, x: Element) -> Element:
        if x == 0 or self.p == 2:
            return x
        return 1 + (x - 1 + self._neg_shift) % (self.order - 1)

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def mul(self, x: Element, y: Element) -> Element:
        if x == 0 or y == 0:
            return 0
        return 1 + (x + y - 2) % (self.order - 1)

    def inv(self, x: Element) -> Element:
        if x == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return 1 + (1 - x) % (self.order - 1)

    def div(self, x: Element, y: Element) -> Element:
        return self.mul(x, self.inv(y))

    def pow(self, x: Element, m: int) -> Element:
        """x**m with the evaluation convention 0**0 == 1."""
        if x == 0:
            if m > 0:
                return 0
            if m == 0:
                return 1
            raise ZeroDivisionError("zero to a negative power")
        return 1 + ((x - 1) * m) % (self.order - 1)

    # -- tower structure ---------------------------------------------------

    def frobenius(self, x: Element) -> Element:
        """The automorphism x -> x**q; fixes exactly the subfield."""
        return self._frob[x]

    def norm(self, x: Element) -> Element:
        """x -> x**(q+1), a surjection of GF(q^2)* onto GF(q)*."""
        return self.pow(x, self.q + 1)

    def solve_norm(self, w: Element) -> Element:
        """Smallest-discrete-log v with v**(q+1) == w, for w in GF(q)*.

        norm(generator) generates GF(q)*, so w == norm(generator)**j for a
        unique 0 <= j <= q-2; the returned v is generator**j.
        """
        if w == 0:
            raise ValueError("norm equation has no nonzero solution for 0")
        if not self.in_subfield(w):
            raise ValueError(f"element {w} is not in the subfield GF({self.q})")
        g = self.norm(self.generator)
        cur: Element = 1
        for j in range(self.q - 1):
            if cur == w:
                return 1 + j
            cur = self.mul(cur, g)
        raise RuntimeError("norm is not surjective onto GF(q)*")  # cannot happen

    def root_of_unity(self, order: int) -> Element:
        """Primitive root of unity of the given order (must divide q^2 - 1)."""
        M = self.order - 1
        if order < 1 or M % order:
            raise ValueError(f"order {order} does not divide {M}")
        return self.pow(self.generator, M // order)

    def in_subfield(self, x: Element) -> bool:
        return self._frob[x] == x

    def subfield_elements(self) -> Tuple[Element, ...]:
        """GF(q) in canonical enumeration order: 0, then ascending powers
        of norm(generator)."""
        return self._subfield

    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    def from_int(self, c: int) -> Element:
        """Embed the prime-field integer c (mod p)."""
        c %= self.p
        x: Element = 0
        for _ in range(c):
            x = self.add(x, 1)
        return x

    # -- misc -------------------------------------------------------------

    def as_dict(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldTower):
            return NotImplemented
        return (self.p, self.e) == (other.p, other.e)

    def __hash__(self) -> int:
        return hash((self.p, self.e))

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, e={self.e})"


@functools.lru_cache(maxsize=None)
def _build_field(p: int, e: int) -> FieldTower:
    return FieldTower(p, e)


def make_field(p: int, e: int, element_bound: int = DEFAULT_ELEMENT_BOUND) -> FieldTower:
    """GF(p^(2e)) with subfield GF(p^e), enforcing the element-count bound."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if e < 1:
        raise ValueError(f"extension degree must be positive, got {e}")
    if p ** (2 * e) > element_bound:
        raise ValueError(
            f"field with {p ** (2 * e)} elements exceeds the bound {element_bound}"
        )
    return _build_field(p, e)


def field_for_prime_power(q: int, element_bound: int = DEFAULT_ELEMENT_BOUND) -> FieldTower:
    """The tower whose subfield has exactly q elements."""
    p, e = factor_prime_power(q)
    return make_field(p, e, element_bound)
