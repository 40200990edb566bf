"""Order-8 dihedral extensions of F_q((T)) in characteristic 2.

A reduction to the Klein quotient is a pair (a, c) of sparse polynomials in
T^(-1) with support in {0} union the odd integers; its lifts through the
central extension are parametrised by a third polynomial b of the same
shape, and carry an explicit last-jump formula

    max( w(b' - a c'),  w(a)/2 + w(c),  w(c)/2 + w(a) )

with w the pole order and x' = T dx/dT.  The formula is evaluated in exact
rational arithmetic for any input, but is trusted as the last jump only
when (a, c) is totally ramified, which is where the brute-force oracle
compares it against the closed-form answer w(a) + w(c) for the smallest
lift jump.

The module also carries the finite-level commutator machinery for
elementary abelian kernel and quotient: the alternating pairing
(x, y) -> x1*y2 - x2*y1 and the induced bound on the jump of the
correction term built from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import asw
from .errors import (
    BudgetExceededError,
    MixedFieldsError,
    NotTotallyRamifiedError,
    UnsupportedShapeError,
)
from .gf import (
    FieldDescriptor,
    FieldElement,
    coset_representative,
    embed,
    field_for_order,
    wp_transversal,
)
from .witt import WittVector

MAX_JUMP = 64
DEFAULT_BUDGET = 5_000_000


class SparseTPoly:
    """sum c_e T^(-e) with finitely many nonzero c_e, exponents e >= 0."""

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldDescriptor, terms: dict[int, FieldElement]):
        self.field = field
        self.terms = terms

    @classmethod
    def zero(cls, field: FieldDescriptor) -> "SparseTPoly":
        return cls(field, {})

    @classmethod
    def from_terms(cls, field: FieldDescriptor,
                   entries: dict[int, FieldElement]) -> "SparseTPoly":
        terms = {}
        for e, c in entries.items():
            if e < 0:
                raise ValueError(f"exponent {e} must be nonnegative")
            if c.field != field:
                raise MixedFieldsError("coefficient from a different field")
            if c:
                terms[int(e)] = c
        return cls(field, terms)

    @classmethod
    def monomial(cls, field: FieldDescriptor, e: int,
                 c: FieldElement | None = None) -> "SparseTPoly":
        return cls.from_terms(field, {e: field.one if c is None else c})

    def _check(self, other: "SparseTPoly") -> None:
        if self.field != other.field:
            raise MixedFieldsError("polynomials over different fields")

    def __add__(self, other: "SparseTPoly") -> "SparseTPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            total = c if s is None else s + c
            if total:
                terms[e] = total
            else:
                terms.pop(e, None)
        return SparseTPoly(self.field, terms)

    def __sub__(self, other: "SparseTPoly") -> "SparseTPoly":
        self._check(other)
        negated = SparseTPoly(other.field,
                              {e: -c for e, c in other.terms.items()})
        return self + negated

    def __mul__(self, other: "SparseTPoly") -> "SparseTPoly":
        self._check(other)
        terms: dict[int, FieldElement] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                prod_c = c1 * c2
                s = terms.get(e)
                total = prod_c if s is None else s + prod_c
                if total:
                    terms[e] = total
                else:
                    terms.pop(e, None)
        return SparseTPoly(self.field, terms)

    def add_constant(self, c: FieldElement) -> "SparseTPoly":
        return self + SparseTPoly.from_terms(self.field, {0: c})

    def pole_order(self) -> int:
        """w(x) = max(0, -v_T(x)): the largest exponent in the support."""
        return max(self.terms, default=0)

    def t_derivative(self) -> "SparseTPoly":
        """x' = T dx/dT; kills exponents divisible by the characteristic."""
        p = self.field.p
        terms = {}
        for e, c in self.terms.items():
            k = (-e) % p
            if k:
                scaled = self.field.from_prime(k) * c
                if scaled:
                    terms[e] = scaled
        return SparseTPoly(self.field, terms)

    def ramified_part(self) -> "SparseTPoly":
        return SparseTPoly(self.field,
                           {e: c for e, c in self.terms.items() if e >= 1})

    def constant_term(self) -> FieldElement:
        return self.terms.get(0, self.field.zero)

    def canonicalized(self) -> "SparseTPoly":
        """Replace the exponent-0 coefficient by its fixed coset representative."""
        c0 = self.constant_term()
        rep = coset_representative(c0)
        if rep == c0:
            return self
        terms = {e: c for e, c in self.terms.items() if e != 0}
        if rep:
            terms[0] = rep
        return SparseTPoly(self.field, terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, SparseTPoly)
                and self.field == other.field and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field.p, self.field.n, tuple(sorted(
            (e, c.coeffs) for e, c in self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.field.digits(self.terms[e])
            bits.append(f"{c}*T^-{e}" if e else c)
        return " + ".join(bits)


def _validate_datum_poly(x: SparseTPoly) -> None:
    if x.field.p != 2:
        raise ValueError("dihedral data live in characteristic 2")
    for e in x.terms:
        if e > 0 and e % 2 == 0:
            raise ValueError(f"support exponent {e} must be 0 or odd")


@dataclass(frozen=True)
class D4Datum:
    """A lift datum (a, c, b); constants normalised to the fixed transversal."""

    a: SparseTPoly
    c: SparseTPoly
    b: SparseTPoly

    def __post_init__(self):
        for x in (self.a, self.c, self.b):
            _validate_datum_poly(x)
        if not (self.a.field == self.c.field == self.b.field):
            raise MixedFieldsError("datum components over different fields")
        for name in ("a", "c", "b"):
            object.__setattr__(self, name, getattr(self, name).canonicalized())


def d4_last_jump(a: SparseTPoly, c: SparseTPoly, b: SparseTPoly) -> Fraction:
    """Exact rational value of the dihedral jump formula (halves possible)."""
    wa, wc = a.pole_order(), c.pole_order()
    main = (b.t_derivative() + a * c.t_derivative()).pole_order()
    return max(Fraction(main), Fraction(wa, 2) + wc, Fraction(wc, 2) + wa)


def datum_last_jump(d: D4Datum) -> Fraction:
    return d4_last_jump(d.a, d.c, d.b)


def min_lift_jump(a: SparseTPoly, c: SparseTPoly) -> int:
    """Smallest last jump among all lifts of the reduction (a, c)."""
    _validate_datum_poly(a)
    _validate_datum_poly(c)
    return a.pole_order() + c.pole_order()


def is_totally_ramified(a: SparseTPoly, c: SparseTPoly) -> bool:
    """Full inertia image: a, c and a + c all have nonzero ramified part."""
    ra, rc = a.ramified_part(), c.ramified_part()
    return bool(ra) and bool(rc) and ra != rc


@lru_cache(maxsize=None)
def _canonical_b_pool(field: FieldDescriptor, bound: int):
    """Canonical third coordinates with pole order <= bound, with their
    precomputed derivative terms (exponent: coefficient pairs)."""
    odd = [e for e in range(1, bound + 1) if e % 2]
    consts = wp_transversal(field)
    nonzero = [c for c in field.elements() if c]
    pool = []
    for c0 in consts:
        for chosen in product([None] + nonzero, repeat=len(odd)):
            terms = {}
            if c0:
                terms[0] = c0
            for e, c in zip(odd, chosen):
                if c is not None:
                    terms[e] = c
            b = SparseTPoly(field, terms)
            # odd exponents survive the derivative unchanged in char 2
            deriv = {e: c for e, c in terms.items() if e}
            pool.append((b, deriv))
    return tuple(pool)


def _jump_against(deriv_terms: dict, ac_deriv: SparseTPoly, side: Fraction):
    diff = dict(ac_deriv.terms)
    for e, c in deriv_terms.items():
        s = diff.get(e)
        total = c if s is None else s + c
        if total:
            diff[e] = total
        else:
            diff.pop(e, None)
    main = max(diff, default=0)
    return max(Fraction(main), side)


def _side_bound(a: SparseTPoly, c: SparseTPoly) -> Fraction:
    wa, wc = a.pole_order(), c.pole_order()
    return max(Fraction(wa, 2) + wc, Fraction(wc, 2) + wa)


def min_lift_jump_bruteforce(a: SparseTPoly, c: SparseTPoly, b_bound: int,
                             budget: int = DEFAULT_BUDGET) -> Fraction:
    """Minimum of the jump formula over canonical b with w(b) <= b_bound.

    Only meaningful for totally ramified reductions, where the b-space
    parametrises all lifts; pole orders beyond the bound cannot shrink the
    minimum because they dominate the formula.
    """
    if not is_totally_ramified(a, c):
        raise NotTotallyRamifiedError(
            "the lift parametrisation needs a full inertia image")
    if b_bound < min_lift_jump(a, c):
        raise ValueError("bound must cover the expected minimum")
    pool = _canonical_b_pool(a.field, b_bound)
    if len(pool) > budget:
        raise BudgetExceededError(f"{len(pool)} candidates exceed {budget}")
    ac_deriv = a * c.t_derivative()
    side = _side_bound(a, c)
    return min(_jump_against(deriv, ac_deriv, side) for _, deriv in pool)


# ---------------------------------------------------------------------------
# lift distributions and unramified-twist invariance
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LiftDistribution:
    """Lift counts by last jump; no mass below the minimal lift jump."""

    minlift: int
    counts: tuple[tuple[int, int], ...]  # (jump, count), ascending

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)


def _kernel_homs_up_to(q: int, v: int) -> int:
    """#{order-2 central characters with jump <= v} = 2 q^ceil(v/2)."""
    return 2 * q ** ((v + 1) // 2)


def _kernel_homs_exactly(q: int, v: int) -> int:
    if v == 0:
        return 2
    if v % 2 == 0:
        return 0
    return 2 * (q - 1) * q ** ((v - 1) // 2)


def lift_jump_distribution(a: SparseTPoly, c: SparseTPoly,
                           v_max: int) -> LiftDistribution:
    """Counts of lifts of (a, c) by last jump, for jumps up to v_max.

    Zero below the minimal lift jump; all central twists of bounded jump at
    the minimum; twists of exact jump above it.
    """
    if v_max > MAX_JUMP:
        raise ValueError(f"v_max {v_max} exceeds {MAX_JUMP}")
    q = a.field.q
    m = min_lift_jump(a, c)
    counts = []
    for v in range(v_max + 1):
        if v < m:
            counts.append((v, 0))
        elif v == m:
            counts.append((v, _kernel_homs_up_to(q, v)))
        else:
            counts.append((v, _kernel_homs_exactly(q, v)))
    return LiftDistribution(m, tuple(counts))


def enumerated_lift_distribution(a: SparseTPoly, c: SparseTPoly,
                                 v_max: int) -> dict[Fraction, int]:
    """Jump tallies over the explicit b-parametrisation (totally ramified only)."""
    if not is_totally_ramified(a, c):
        raise NotTotallyRamifiedError(
            "the lift parametrisation needs a full inertia image")
    pool = _canonical_b_pool(a.field, v_max)
    ac_deriv = a * c.t_derivative()
    side = _side_bound(a, c)
    tally: dict[Fraction, int] = {}
    for _, deriv in pool:
        jump = _jump_against(deriv, ac_deriv, side)
        if jump <= v_max:
            tally[jump] = tally.get(jump, 0) + 1
    return tally


@dataclass(frozen=True)
class TwistComparison:
    alpha: FieldElement
    gamma: FieldElement
    closed_form_equal: bool
    enumerated_equal: bool | None  # None when the b-parametrisation is unusable


@dataclass(frozen=True)
class TwistInvarianceReport:
    base_distribution: LiftDistribution
    comparisons: tuple[TwistComparison, ...]
    all_equal: bool


def unramified_twist_report(a: SparseTPoly, c: SparseTPoly,
                            v_max: int) -> TwistInvarianceReport:
    """Compare lift distributions of (a, c) against all constant twists.

    Every (alpha, gamma) in F_q^2 shifts the reduction by an unramified
    character pair; the resulting distributions must coincide.  Where the
    reduction is totally ramified the explicitly enumerated distributions
    are compared as well.
    """
    field = a.field
    base = lift_jump_distribution(a, c, v_max)
    base_enum = (enumerated_lift_distribution(a, c, v_max)
                 if is_totally_ramified(a, c) else None)
    comparisons = []
    all_equal = True
    for alpha in field.elements():
        for gamma in field.elements():
            ta, tc = a.add_constant(alpha), c.add_constant(gamma)
            closed_eq = lift_jump_distribution(ta, tc, v_max) == base
            enum_eq = None
            if base_enum is not None and is_totally_ramified(ta, tc):
                enum_eq = enumerated_lift_distribution(ta, tc, v_max) == base_enum
            ok = closed_eq and enum_eq is not False
            all_equal = all_equal and ok
            comparisons.append(TwistComparison(alpha, gamma, closed_eq, enum_eq))
    return TwistInvarianceReport(base, tuple(comparisons), all_equal)


# ---------------------------------------------------------------------------
# local counts
# ---------------------------------------------------------------------------

def count_min_lift(q: int, v: int, mode: str = "closed_form",
                   budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    """Quarter-count of Klein reductions with minimal lift jump exactly v.

    closed_form evaluates the three-case formula; enumeration counts pairs
    of ramified supports directly.  The two must agree.
    """
    if v < 0:
        raise ValueError("jump must be nonnegative")
    if mode == "closed_form":
        if v == 0:
            return 1
        if v % 2:
            return 2 * q ** ((v - 1) // 2) * (q - 1)
        return (v // 2) * q ** (v // 2 - 1) * (q - 1) ** 2
    if mode != "enumeration":
        raise ValueError(f"unknown mode {mode!r}")
    field = field_for_order(q, p=2)
    odd = [e for e in range(1, v + 1) if e % 2]
    size = q ** len(odd)
    if size * size > budget:
        raise BudgetExceededError(f"{size * size} pairs exceed {budget}")
    pool = []
    for chosen in product(field.elements(), repeat=len(odd)):
        terms = {e: c for e, c in zip(odd, chosen) if c}
        pool.append(max(terms, default=0))
    if threads > 1:
        from .shard import sum_over_shards
        shards = [(tuple(pool), v, wa) for wa in pool]
        return sum_over_shards(_min_lift_shard, shards, threads)
    return sum(1 for wa in pool for wc in pool if wa + wc == v)


def _min_lift_shard(args) -> int:
    pool, v, wa = args
    return sum(1 for wc in pool if wa + wc == v)


def count_d4_le(q: int, v: int) -> int:
    """One-eighth of the number of dihedral data with last jump <= v."""
    if v > MAX_JUMP:
        raise ValueError(f"jump {v} exceeds {MAX_JUMP}")
    if v < 0:
        return 0
    total = sum(count_min_lift(q, w) for w in range(v + 1))
    return q ** ((v + 1) // 2) * total


def count_d4_exact(q: int, v: int) -> int:
    """One-eighth of the number of dihedral data with last jump exactly v.

    A polynomial identity in q, so residue cardinalities q^d can be plugged
    in directly without constructing any field.
    """
    if v == 0:
        return 1
    return count_d4_le(q, v) - count_d4_le(q, v - 1)


# ---------------------------------------------------------------------------
# commutator pairing at finite level
# ---------------------------------------------------------------------------

def _pairing_components(x) -> tuple[FieldElement, FieldElement]:
    if isinstance(x, asw.GroupWittElement):
        if x.shape.exponents != (1, 1):
            raise UnsupportedShapeError(
                "pairing needs an elementary abelian rank-2 source")
        return (x.parts[0].components[0], x.parts[1].components[0])
    x1, x2 = x
    if isinstance(x1, WittVector):
        if x1.length != 1 or x2.length != 1:
            raise UnsupportedShapeError("pairing needs length-1 components")
        return (x1.components[0], x2.components[0])
    return (x1, x2)


def commutator_pairing(x, y) -> FieldElement:
    """The alternating bilinear form x1*y2 - x2*y1 on rank-2 coefficients."""
    x1, x2 = _pairing_components(x)
    y1, y2 = _pairing_components(y)
    return x1 * y2 - x2 * y1


@dataclass(frozen=True)
class EpsilonBoundReport:
    source_jump: int
    epsilon_jump: int
    bounded: bool
    epsilon: asw.ReducedCocycle


def epsilon_bound_report(m_rho: asw.ReducedCocycle,
                         g_delta: tuple[FieldElement, FieldElement],
                         ) -> EpsilonBoundReport:
    """Build the correction datum by pairing coefficients with g_delta and
    check its jump against the source jump.

    The source lives over F_q with elementary abelian rank-2 shape; g_delta
    lives over an extension F_q', where the output datum is formed.
    """
    if m_rho.shape.exponents != (1, 1):
        raise UnsupportedShapeError("source must be elementary abelian of rank 2")
    big = g_delta[0].field
    if g_delta[1].field != big:
        raise MixedFieldsError("pairing components over different fields")
    target_shape = asw.GroupShape(m_rho.shape.p, (1,))
    entries = {}
    for n, value in m_rho.support.items():
        lifted = (embed(value.parts[0].components[0], big),
                  embed(value.parts[1].components[0], big))
        paired = commutator_pairing(lifted, g_delta)
        if paired:
            entries[n] = asw.GroupWittElement(
                target_shape, big, (WittVector(big, (paired,)),))
    eps = asw.ReducedCocycle(target_shape, big, entries)
    source_jump = asw.last_jump(m_rho)
    eps_jump = asw.last_jump(eps)
    return EpsilonBoundReport(source_jump, eps_jump,
                              eps_jump <= source_jump, eps)


# ---------------------------------------------------------------------------
# bridges to the abelian machinery
# ---------------------------------------------------------------------------

def pair_to_cocycle(a: SparseTPoly, c: SparseTPoly) -> asw.ReducedCocycle:
    """The rank-2 elementary abelian datum carried by the pair (a, c)."""
    _validate_datum_poly(a)
    _validate_datum_poly(c)
    field = a.field
    shape = asw.GroupShape(2, (1, 1))
    entries = {}
    for n in sorted(set(a.terms) | set(c.terms)):
        entries[n] = asw.GroupWittElement(shape, field, (
            WittVector(field, (a.terms.get(n, field.zero),)),
            WittVector(field, (c.terms.get(n, field.zero),))))
    return asw.make_cocycle(shape, field, entries)
