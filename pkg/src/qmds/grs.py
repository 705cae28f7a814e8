"""Generalized Reed-Solomon codes over GF(q^2), plain and extended, with
their dual descriptions, Hermitian-orthogonality checks, and independent
verification primitives (nullspace duals, brute-force minimum distance,
k-column rank tests).

A plain GRS code evaluates polynomials of degree < k at n distinct points,
scaling coordinate i by a nonzero multiplier v_i.  The extended variant
appends one coordinate carrying the degree-(k-1) coefficient of the
message polynomial.  Both are MDS by construction.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .field import Element, FieldTower
from .linalg import Matrix, nullspace, rank
from .poly import Poly, lagrange_interpolate

#: Default cap on the number of codewords enumerated by the brute-force
#: distance check.
BRUTE_FORCE_CAP = 10 ** 6

#: Default cap on the number of column subsets examined by the rank test.
RANK_TEST_CAP = 10 ** 5


class CapExceeded(ValueError):
    """An enumeration-based check would exceed its configured cap."""


@dataclass(frozen=True)
class GRSCode:
    """Evaluation points `a`, column multipliers `v`, dimension `k`.

    Length is n = len(a) when plain, n + 1 when extended.
    """

    field: FieldTower
    a: Tuple[Element, ...]
    v: Tuple[Element, ...]
    k: int
    extended: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "v", tuple(self.v))
        n = len(self.a)
        if n == 0:
            raise ValueError("at least one evaluation point is required")
        if len(self.v) != n:
            raise ValueError("multiplier vector length must match the point count")
        order = self.field.order
        for x in self.a:
            if not 0 <= x < order:
                raise ValueError(f"evaluation point {x} out of range")
        if len(set(self.a)) != n:
            raise ValueError("evaluation points must be distinct")
        for x in self.v:
            if not 1 <= x < order:
                raise ValueError("column multipliers must be nonzero field elements")
        max_k = n + 1 if self.extended else n
        if not 1 <= self.k <= max_k:
            raise ValueError(f"dimension k={self.k} out of range for length {max_k}")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def length(self) -> int:
        return self.n + 1 if self.extended else self.n


@dataclass(frozen=True)
class LinearCode:
    """A linear code given by a full-row-rank generator matrix."""

    field: FieldTower
    rows: Tuple[Tuple[Element, ...], ...]
    length: int = -1

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("generator rows must all have the same length")
            if self.length == -1:
                object.__setattr__(self, "length", width)
            elif self.length != width:
                raise ValueError("declared length disagrees with the generator rows")
            if rank(self.field, rows) != len(rows):
                raise ValueError("generator matrix must have full row rank")
        elif self.length < 0:
            raise ValueError("length is required for a zero-dimensional code")

    @property
    def dim(self) -> int:
        return len(self.rows)


def generator_matrix(code: GRSCode) -> Matrix:
    """k x length matrix: row r is (v_i * a_i**r); the extended variant has
    one extra column equal to the k-th standard basis vector."""
    F = code.field
    rows: Matrix = []
    for r in range(code.k):
        row = [F.mul(vi, F.pow(ai, r)) for ai, vi in zip(code.a, code.v)]
        if code.extended:
            row.append(1 if r == code.k - 1 else 0)
        rows.append(row)
    return rows


def generator_rows(code) -> Tuple[Tuple[Element, ...], ...]:
    """Generator rows of a GRSCode or LinearCode, as tuples."""
    if isinstance(code, GRSCode):
        return tuple(tuple(r) for r in generator_matrix(code))
    return code.rows


def as_linear_code(code: GRSCode) -> LinearCode:
    return LinearCode(code.field, generator_rows(code), code.length)


def encode(code: GRSCode, f: Poly) -> Tuple[Element, ...]:
    """(v_1 f(a_1), ..., v_n f(a_n)) plus, when extended, the coefficient
    of x**(k-1)."""
    if f.degree > code.k - 1:
        raise ValueError(f"message degree {f.degree} exceeds k-1 = {code.k - 1}")
    F = code.field
    word = [F.mul(vi, f(ai)) for ai, vi in zip(code.a, code.v)]
    if code.extended:
        word.append(f.coeff(code.k - 1))
    return tuple(word)


def w_vector(field: FieldTower, points: Sequence[Element]) -> List[Element]:
    """w_i = inverse of prod_{j != i}(a_i - a_j); the multipliers appearing
    in every dual description of a unit-multiplier GRS code."""
    n = len(points)
    if len(set(points)) != n:
        raise ValueError("points must be distinct")
    out = []
    for i in range(n):
        acc: Element = 1
        for j in range(n):
            if j != i:
                acc = field.mul(acc, field.sub(points[i], points[j]))
        out.append(field.inv(acc))
    return out


def dual_basis(field: FieldTower, points: Sequence[Element], k: int) -> Matrix:
    """Basis of the Euclidean dual of the unit-multiplier GRS code of
    dimension k: rows (w_1 g(a_1), ..., w_n g(a_n)) for g = x**j,
    j = 0..n-k-1.  Empty for k == n."""
    n = len(points)
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range for {n} points")
    w = w_vector(field, points)
    rows: Matrix = []
    for j in range(n - k):
        rows.append([field.mul(wi, field.pow(ai, j)) for ai, wi in zip(points, w)])
    return rows


def extended_dual_basis(field: FieldTower, points: Sequence[Element], k: int) -> Matrix:
    """Basis of the Euclidean dual of the extended unit-multiplier GRS code:
    rows (w_1 g(a_1), ..., w_n g(a_n), -g_{n-k}) for g = x**j, j = 0..n-k.
    The last coordinate is -1 exactly for j = n-k and 0 otherwise."""
    n = len(points)
    if not 1 <= k <= n + 1:
        raise ValueError(f"k={k} out of range for extended length {n + 1}")
    w = w_vector(field, points)
    rows: Matrix = []
    for j in range(n - k + 1):
        row = [field.mul(wi, field.pow(ai, j)) for ai, wi in zip(points, w)]
        row.append(field.neg(1) if j == n - k else 0)
        rows.append(row)
    return rows


def nullspace_dual(code: LinearCode, hermitian: bool = False) -> LinearCode:
    """Dual code computed from the generator's nullspace.

    Euclidean: basis of {u : G u^T = 0}.  Hermitian: basis of
    {u : u^(q) G^T = 0} where u^(q) is the coordinatewise q-th power;
    since Frobenius is an involutive automorphism this is the entrywise
    Frobenius image of the Euclidean dual.
    """
    F = code.field
    basis = nullspace(F, code.rows, width=code.length)
    if hermitian:
        basis = [[F.frobenius(x) for x in row] for row in basis]
    return LinearCode(F, tuple(tuple(r) for r in basis), code.length)


def hermitian_gram(field: FieldTower, rows: Sequence[Sequence[Element]]) -> Matrix:
    """G^(q) * G^T for the given generator rows."""
    out: Matrix = []
    for r in rows:
        rq = [field.frobenius(x) for x in r]
        out_row = []
        for s in rows:
            acc: Element = 0
            for x, y in zip(rq, s):
                if x and y:
                    acc = field.add(acc, field.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def is_hermitian_self_orthogonal(code) -> Tuple[bool, Optional[Tuple[int, int, Element]]]:
    """Whether the code is contained in its Hermitian dual, i.e. whether
    G^(q) * G^T is the zero matrix.  On failure the witness is a violating
    (row, row, value) triple."""
    F = code.field
    rows = generator_rows(code)
    gram = hermitian_gram(F, rows)
    for i, row in enumerate(gram):
        for j, val in enumerate(row):
            if val != 0:
                return False, (i, j, val)
    return True, None


def hermitian_dual_contains(code, word: Sequence[Element]) -> bool:
    """Direct membership of a word in the Hermitian dual: word^(q) G^T == 0."""
    F = code.field
    rows = generator_rows(code)
    wq = [F.frobenius(x) for x in word]
    for row in rows:
        acc: Element = 0
        for x, y in zip(wq, row):
            if x and y:
                acc = F.add(acc, F.mul(x, y))
        if acc != 0:
            return False
    return True


def in_hermitian_dual(code: GRSCode, f: Poly) -> bool:
    """Whether the codeword of message f lies in the code's Hermitian dual,
    decided by interpolation.

    The word is in the dual iff some g matches w_i g(a_i) = v_i**(q+1)
    f(a_i)**q at every point with deg(g) <= n-k-1 (plain), respectively
    deg(g) <= n-k and g_{n-k} = -(f_{k-1})**q (extended).  The degree-(n-1)
    interpolant through those values is the only candidate, which makes the
    existential condition a deterministic check.
    """
    if f.degree > code.k - 1:
        raise ValueError(f"message degree {f.degree} exceeds k-1 = {code.k - 1}")
    F = code.field
    n = code.n
    w = w_vector(F, code.a)
    values = [
        F.mul(F.inv(wi), F.mul(F.norm(vi), F.frobenius(f(ai))))
        for ai, vi, wi in zip(code.a, code.v, w)
    ]
    g = lagrange_interpolate(F, code.a, values)
    if not code.extended:
        return g.degree <= n - code.k - 1
    if g.degree > n - code.k:
        return False
    return g.coeff(n - code.k) == F.neg(F.frobenius(f.coeff(code.k - 1)))


@functools.lru_cache(maxsize=None)
def min_distance_bruteforce(code, cap: int = BRUTE_FORCE_CAP) -> int:
    """Minimum Hamming weight over all nonzero codewords.

    Enumerates one representative per scalar class (highest nonzero message
    coordinate normalized to 1), which covers every weight since scaling
    preserves weights.  Refuses to run when the code has more than `cap`
    codewords.
    """
    F = code.field
    rows = generator_rows(code)
    k = len(rows)
    if k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    length = len(rows[0])
    if F.order ** k > cap:
        raise CapExceeded(
            f"{F.order ** k} codewords exceed the enumeration cap {cap}"
        )
    add = F.add
    mul = F.mul
    order = F.order
    # scalar multiples of every generator row, indexed [row][scalar]
    scaled = [
        [tuple(mul(c, x) for x in row) for c in range(order)] for row in rows
    ]
    best = length
    for lead in range(k):
        base = scaled[lead][1]
        for prefix in itertools.product(range(order), repeat=lead):
            word = base
            for c, srow in zip(prefix, scaled):
                if c:
                    row = srow[c]
                    word = tuple(add(x, y) for x, y in zip(word, row))
            wt = length - word.count(0)
            if wt < best:
                best = wt
    return best


@functools.lru_cache(maxsize=None)
def is_mds_by_rank(code, cap: int = RANK_TEST_CAP) -> bool:
    """MDS test via the standard equivalence: distance N-k+1 iff every
    k-column submatrix of the generator is nonsingular."""
    F = code.field
    rows = generator_rows(code)
    k = len(rows)
    if k == 0:
        raise ValueError("the zero code has no distance")
    length = len(rows[0])
    n_subsets = math.comb(length, k)
    if n_subsets > cap:
        raise CapExceeded(f"{n_subsets} column subsets exceed the cap {cap}")
    for cols in itertools.combinations(range(length), k):
        sub = [[row[c] for c in cols] for row in rows]
        if rank(F, sub) != k:
            return False
    return True
