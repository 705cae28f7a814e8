"""The two Hermitian self-orthogonal code families and their quantum
parameters.

Family one evaluates on a union of t additive cosets of GF(q) inside
GF(q^2) (length tq) and picks multipliers by solving norm equations so
that the resulting GRS code sits inside its Hermitian dual.  Family two
evaluates on t multiplicative cosets of the order-(q+1) subgroup plus the
zero point, extends the code by one coordinate (length t(q+1)+2), and
scales by a root-free polynomial times norm-equation solutions.

Every closed-form product here has a brute-force counterpart in the test
suite; both families are re-verified independently by the verifier module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .field import (
    DEFAULT_ELEMENT_BOUND,
    Element,
    FieldTower,
    field_for_prime_power,
)
from .grs import GRSCode, is_hermitian_self_orthogonal
from .poly import Poly, root_free_monic

#: Provenance tokens carried by serialized results.
PROVENANCE_ADDITIVE = "theorem1"
PROVENANCE_EXTENDED = "prop1-general"
PROVENANCE_EXTENDED_SPECIAL = "prop1-special"


class ParameterError(ValueError):
    """Construction parameters outside the admissible range."""


class ExcludedParameters(ParameterError):
    """Parameters on the excluded boundary: even characteristic with
    t = q-1 and classical dimension q-1 (quantum distance q), where the
    special-case multiplier argument degenerates."""


@dataclass(frozen=True)
class QuantumParams:
    """[[n, k, d]]_q parameters; always saturate k = n - 2d + 2."""

    n: int
    k: int
    d: int
    q: int
    provenance: str
    degenerate: bool = False

    def __post_init__(self) -> None:
        if self.k != self.n - 2 * self.d + 2:
            raise ValueError(
                f"[[{self.n},{self.k},{self.d}]] violates k = n - 2d + 2"
            )


@dataclass(frozen=True)
class ConstructionResult:
    """A constructed code plus its quantum parameters and the intermediate
    values (witnesses) that determine the multipliers."""

    code: GRSCode
    quantum: QuantumParams
    witnesses: Dict[str, List[Element]]


def dimension_bound(q: int, t: int) -> int:
    """Largest admissible classical dimension for the additive family."""
    return (t * q + q - 1) // (q + 1)


# ----------------------------------------------------------------------
# Additive-coset point design (length tq)
# ----------------------------------------------------------------------

class AdditiveCosetDesign:
    """Evaluation points: the union of cosets GF(q) + beta_i * alpha for the
    first t entries of the canonical GF(q) enumeration, with alpha the field
    generator (never in GF(q)).  Points are ordered coset by coset, within
    each coset by the canonical GF(q) order."""

    def __init__(self, field: FieldTower, t: int):
        q = field.q
        if not 1 <= t <= q:
            raise ParameterError(f"t={t} out of range 1..{q}")
        self.field = field
        self.t = t
        self.alpha: Element = field.generator
        if field.in_subfield(self.alpha):
            raise RuntimeError("generator unexpectedly lies in the subfield")
        sub = field.subfield_elements()
        self.betas: Tuple[Element, ...] = sub[:t]
        pts: List[Element] = []
        for beta in self.betas:
            shift = field.mul(beta, self.alpha)
            pts.extend(field.add(x, shift) for x in sub)
        self.points: Tuple[Element, ...] = tuple(pts)
        if len(set(self.points)) != t * q:
            raise RuntimeError("coset points are not distinct")

    @property
    def n(self) -> int:
        return self.t * self.field.q

    def coset_of(self, i: int) -> int:
        return i // self.field.q

    def coset_elements(self, s: int) -> Tuple[Element, ...]:
        q = self.field.q
        return self.points[s * q : (s + 1) * q]

    # -- closed forms for products of point differences -------------------

    def full_span_product(self, tau: Element) -> Element:
        """prod over h in GF(q) of (tau*alpha - h), in closed form
        tau * (alpha**q - alpha)."""
        F = self.field
        if not F.in_subfield(tau):
            raise ValueError("tau must lie in the subfield")
        return F.mul(tau, F.sub(F.frobenius(self.alpha), self.alpha))

    def within_coset_product(self) -> Element:
        """prod over the q-1 differences between a point and its coset
        mates, in closed form (-1)**q (independent of the point)."""
        F = self.field
        return F.pow(F.neg(1), F.q)

    def cross_coset_product(self, s: int, j: int) -> Element:
        """prod over h in coset j of (b - h) for any b in coset s, in closed
        form (beta_s - beta_j) * (alpha**q - alpha)."""
        if s == j:
            raise ValueError("cosets must differ")
        F = self.field
        gap = F.sub(self.betas[s], self.betas[j])
        return F.mul(gap, F.sub(F.frobenius(self.alpha), self.alpha))

    def difference_product(self, i: int) -> Element:
        """Closed form of prod_{j != i}(a_i - a_j); its inverse is w_i."""
        if not 0 <= i < self.n:
            raise ValueError(f"index {i} out of range")
        F = self.field
        s = self.coset_of(i)
        acc = self.within_coset_product()
        span = F.sub(F.frobenius(self.alpha), self.alpha)
        acc = F.mul(acc, F.pow(span, self.t - 1))
        for j in range(self.t):
            if j != s:
                acc = F.mul(acc, F.sub(self.betas[s], self.betas[j]))
        return acc

    def w(self, i: int) -> Element:
        return self.field.inv(self.difference_product(i))

    def subfield_unit(self, i: int) -> Element:
        """w_i * (alpha**q - alpha)**(t-1), which always lands in GF(q)*."""
        F = self.field
        span = F.sub(F.frobenius(self.alpha), self.alpha)
        u = F.mul(self.w(i), F.pow(span, self.t - 1))
        if u == 0 or not F.in_subfield(u):
            raise RuntimeError("scaled multiplier is not a subfield unit")
        return u


def additive_coset_code(
    q: int, t: int, k: int, element_bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionResult:
    """Hermitian self-orthogonal [tq, k, tq-k+1] GRS code and the derived
    [[tq, tq-2k, k+1]]_q parameters, for 1 <= t <= q and
    1 <= k <= floor((tq+q-1)/(q+1))."""
    field = field_for_prime_power(q, element_bound)
    if not 1 <= t <= q:
        raise ParameterError(f"t={t} out of range 1..{q}")
    bound = dimension_bound(q, t)
    if not 1 <= k <= bound:
        raise ParameterError(f"k={k} out of range 1..{bound} for q={q}, t={t}")
    return _additive_code_any_k(field, t, k)


def _additive_code_any_k(field: FieldTower, t: int, k: int) -> ConstructionResult:
    # No dimension-bound check: the verifier's probe uses this to examine
    # what happens just past the admissible range.
    q = field.q
    design = AdditiveCosetDesign(field, t)
    w = [design.w(i) for i in range(design.n)]
    v = tuple(field.solve_norm(design.subfield_unit(i)) for i in range(design.n))
    code = GRSCode(field, design.points, v, k)
    quantum = QuantumParams(
        n=t * q, k=t * q - 2 * k, d=k + 1, q=q, provenance=PROVENANCE_ADDITIVE
    )
    return ConstructionResult(code=code, quantum=quantum, witnesses={"w": w})


# ----------------------------------------------------------------------
# Multiplicative-coset point design (length t(q+1)+1, then extended)
# ----------------------------------------------------------------------

class MultiplicativeCosetDesign:
    """Evaluation points: t cosets beta_s * <theta> of the order-(q+1)
    subgroup of GF(q^2)*, followed by the zero point.  The representatives
    are generator**0 .. generator**(t-1), which hit t distinct cosets since
    the subgroup has index q-1.  Within a coset, points are ordered by
    ascending power of theta."""

    def __init__(self, field: FieldTower, t: int):
        q = field.q
        if not 1 <= t <= q - 1:
            raise ParameterError(f"t={t} out of range 1..{q - 1}")
        self.field = field
        self.t = t
        self.theta: Element = field.root_of_unity(q + 1)
        self.betas: Tuple[Element, ...] = tuple(
            field.pow(field.generator, s) for s in range(t)
        )
        norms = [field.norm(b) for b in self.betas]
        if len(set(norms)) != t:
            raise RuntimeError("coset representatives are not in distinct cosets")
        pts: List[Element] = []
        for beta in self.betas:
            pts.extend(field.mul(beta, field.pow(self.theta, l)) for l in range(q + 1))
        pts.append(0)
        self.points: Tuple[Element, ...] = tuple(pts)
        if len(set(self.points)) != t * (q + 1) + 1:
            raise RuntimeError("coset points are not distinct")

    @property
    def n(self) -> int:
        return self.t * (self.field.q + 1) + 1

    def coset_of(self, i: int) -> int:
        if i == self.n - 1:
            raise ValueError("the zero point belongs to no coset")
        return i // (self.field.q + 1)

    # -- closed forms ------------------------------------------------------

    def zero_difference_product(self) -> Element:
        """Closed form of prod_{i < n-1}(0 - a_i):
        (-1)**(n-1+qt) * prod_s beta_s**(q+1); always in GF(q)."""
        F = self.field
        q = self.field.q
        acc = F.pow(F.neg(1), self.n - 1 + q * self.t)
        for beta in self.betas:
            acc = F.mul(acc, F.norm(beta))
        return acc

    def nonzero_difference_product(self, i: int) -> Element:
        """Closed form of prod_{j != i}(a_i - a_j) for a nonzero point:
        a_i**(q+1) * prod_{s != r}(beta_r**(q+1) - beta_s**(q+1)); in GF(q)."""
        if not 0 <= i < self.n - 1:
            raise ValueError(f"index {i} is not a nonzero point")
        F = self.field
        r = self.coset_of(i)
        acc = F.norm(self.points[i])
        for s in range(self.t):
            if s != r:
                acc = F.mul(acc, F.sub(F.norm(self.betas[r]), F.norm(self.betas[s])))
        return acc

    def difference_product(self, i: int) -> Element:
        if i == self.n - 1:
            return self.zero_difference_product()
        return self.nonzero_difference_product(i)

    def w(self, i: int) -> Element:
        return self.field.inv(self.difference_product(i))

    def gamma(self) -> Tuple[Element, ...]:
        """Norm-equation solutions gamma_i with gamma_i**(q+1) == -w_i."""
        F = self.field
        return tuple(F.solve_norm(F.neg(self.w(i))) for i in range(self.n))


def select_scaling_poly(design: MultiplicativeCosetDesign, k: int) -> Poly:
    """Monic polynomial of degree t+1-k that vanishes at no evaluation point.

    Degree >= 2: the first root-free monic polynomial.  Degree 1: x minus
    the first unused field element (one exists since the points do not
    exhaust the field when t < q-1).  Degree 0: the constant 1.  The corner
    (t, k) = (q-1, q-1) uses x**q + x - pi with pi outside GF(q), whose
    values a**q + a - pi stay nonzero on the whole field; it needs odd
    characteristic.
    """
    F = design.field
    q, t = F.q, design.t
    if not 1 <= k <= t + 1:
        raise ParameterError(f"k={k} out of range 1..{t + 1}")
    if (t, k) == (q - 1, q - 1):
        if F.p == 2:
            raise ExcludedParameters(
                f"no construction for even characteristic with t=q-1={t} and "
                f"k=q-1={k} (quantum distance d=q={q})"
            )
        pi = F.generator
        coeffs = [0] * (q + 1)
        coeffs[0] = F.neg(pi)
        coeffs[1] = F.add(coeffs[1], 1)
        coeffs[q] = F.add(coeffs[q], 1)
        m = Poly(F, coeffs)
    else:
        ell = t + 1 - k
        if ell == 0:
            m = Poly.one(F)
        elif ell == 1:
            used = set(design.points)
            spare = next(x for x in F.elements() if x not in used)
            m = Poly(F, (F.neg(spare), 1))
        else:
            m = root_free_monic(F, ell)
    if any(m(a) == 0 for a in design.points):
        raise RuntimeError("scaling polynomial vanishes at an evaluation point")
    return m


def multiplicative_coset_code(
    q: int, t: int, k: int, element_bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionResult:
    """Hermitian self-orthogonal extended GRS code with parameters
    [t(q+1)+2, k, t(q+1)+3-k] and the derived
    [[t(q+1)+2, t(q+1)-2k+2, k+1]]_q parameters, for 1 <= t <= q-1 and
    1 <= k <= t+1, excluding even characteristic with (t, k) = (q-1, q-1)."""
    field = field_for_prime_power(q, element_bound)
    if not 1 <= t <= q - 1:
        raise ParameterError(f"t={t} out of range 1..{q - 1}")
    if not 1 <= k <= t + 1:
        raise ParameterError(f"k={k} out of range 1..{t + 1} for t={t}")
    design = MultiplicativeCosetDesign(field, t)
    m = select_scaling_poly(design, k)  # raises on the excluded corner
    gamma = design.gamma()
    special = (t, k) == (q - 1, q - 1)
    if special:
        half = field.inv(field.from_int(2))
        unit = field.solve_norm(half)
        v = tuple(
            field.mul(unit, field.mul(m(a), g)) for a, g in zip(design.points, gamma)
        )
        provenance = PROVENANCE_EXTENDED_SPECIAL
    else:
        v = tuple(field.mul(m(a), g) for a, g in zip(design.points, gamma))
        provenance = PROVENANCE_EXTENDED
    code = GRSCode(field, design.points, v, k, extended=True)
    length = t * (q + 1) + 2
    quantum = QuantumParams(
        n=length, k=length - 2 * k, d=k + 1, q=q, provenance=provenance
    )
    witnesses = {
        "w": [design.w(i) for i in range(design.n)],
        "m_coeffs": list(m.coeffs),
        "gamma": list(gamma),
    }
    return ConstructionResult(code=code, quantum=quantum, witnesses=witnesses)


def quantum_params_for_distance(
    q: int, t: int, d: int, element_bound: int = DEFAULT_ELEMENT_BOUND
) -> ConstructionResult:
    """The extended-family construction parameterized by quantum distance d:
    [[t(q+1)+2, t(q+1)-2d+4, d]]_q via classical dimension k = d-1.
    Excluded: even characteristic with (t, d) = (q-1, q)."""
    field = field_for_prime_power(q, element_bound)
    if not 1 <= t <= q - 1:
        raise ParameterError(f"t={t} out of range 1..{q - 1}")
    if not 2 <= d <= t + 2:
        raise ParameterError(f"d={d} out of range 2..{t + 2} for t={t}")
    if field.p == 2 and t == q - 1 and d == q:
        raise ExcludedParameters(
            f"no construction for even characteristic with t=q-1={t} and d=q={q}"
        )
    return multiplicative_coset_code(q, t, d - 1, element_bound)


def derive_quantum(code, provenance: str, check_mds: bool = True) -> QuantumParams:
    """[[N, N-2k, k+1]]_q from a Hermitian self-orthogonal classical [N, k]
    MDS code over GF(q^2); raises if either premise fails.

    GRS codes are MDS by construction; a bare LinearCode gets a distance
    check through the brute-force/rank ladder when check_mds is set.  The
    k = 0 edge yields the degenerate [[N, N, 1]] parameters, flagged.
    """
    ok, witness = is_hermitian_self_orthogonal(code)
    if not ok:
        raise ValueError(f"code is not Hermitian self-orthogonal: witness {witness}")
    q = code.field.q
    N = code.length
    k = _dim_of(code)
    if check_mds and not isinstance(code, GRSCode) and k:
        from .grs import CapExceeded, is_mds_by_rank, min_distance_bruteforce

        try:
            dist = min_distance_bruteforce(code)
            mds = dist == N - k + 1
        except CapExceeded:
            try:
                mds = is_mds_by_rank(code)
            except CapExceeded as exc:
                raise ValueError("cannot certify the MDS premise") from exc
        if not mds:
            raise ValueError("code is not MDS")
    return QuantumParams(
        n=N, k=N - 2 * k, d=k + 1, q=q, provenance=provenance, degenerate=(k == 0)
    )


def _dim_of(code) -> int:
    if isinstance(code, GRSCode):
        return code.k
    return code.dim


def reconstruct_multipliers(result: ConstructionResult) -> Tuple[Element, ...]:
    """Recompute the code's multipliers from the recorded witnesses; equality
    with code.v is the witness-consistency invariant."""
    code = result.code
    F = code.field
    q = result.quantum.q
    if result.quantum.provenance == PROVENANCE_ADDITIVE:
        t = code.n // q
        span = F.sub(F.frobenius(F.generator), F.generator)
        scale = F.pow(span, t - 1)
        return tuple(
            F.solve_norm(F.mul(wi, scale)) for wi in result.witnesses["w"]
        )
    m = Poly(F, result.witnesses["m_coeffs"])
    gamma = result.witnesses["gamma"]
    if result.quantum.provenance == PROVENANCE_EXTENDED_SPECIAL:
        unit = F.solve_norm(F.inv(F.from_int(2)))
        return tuple(
            F.mul(unit, F.mul(m(a), g)) for a, g in zip(code.a, gamma)
        )
    return tuple(F.mul(m(a), g) for a, g in zip(code.a, gamma))
