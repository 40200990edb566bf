"""Rank-3 Heisenberg extensions ramified at a single degree-p place, p odd.

For the order-p^3 group of unipotent upper-triangular 3x3 matrices over
F_p, the number of homomorphisms whose local behaviour at a fixed degree-p
place realises the smallest possible wild discriminant exponent differs
between the local field and the global field.  Both counts are assembled
here case by case: inertia inside the centre first, then inertia over each
of the p+1 lines of the Klein-type quotient.  Every case factor reduces to
counts of elementary abelian data with last jump 1 and prescribed inertia,
which has both a closed form and a brute-force evaluation through the
abelian machinery.

The per-case assembly must reproduce the closed-form totals exactly; a
mismatch raises instead of being patched over.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import asw
from .errors import (
    BudgetExceededError,
    InternalInconsistencyError,
    OddPrimeRequiredError,
)
from .gf import field_for_order, make_field
from .witt import WittVector

BRUTEFORCE_CAP = 10 ** 7


def _check_setting(p: int, q: int) -> None:
    if p == 2:
        raise OddPrimeRequiredError("the construction needs an odd prime")
    field_for_order(q, p=p)  # validates that q is a power of p


def count_line_inertia(p: int, q: int, r: int, mode: str = "closed_form",
                       budget: int = BRUTEFORCE_CAP) -> int:
    """Homomorphisms to F_p^r over the degree-p place with inertia exactly a
    fixed order-p subgroup and last jump 1.

    The residue field of the place has q^p elements.  closed_form returns
    p^r (q^p - 1); bruteforce enumerates all data with support in {0, 1}
    over that residue field and filters on jump and inertia image.
    """
    _check_setting(p, q)
    if r < 1:
        raise ValueError("rank must be positive")
    closed = p ** r * (q ** p - 1)
    if mode == "closed_form":
        return closed
    if mode != "bruteforce":
        raise ValueError(f"unknown mode {mode!r}")
    if p ** r * q ** p > budget:
        raise BudgetExceededError(f"p^r * q^p = {p ** r * q ** p} exceeds {budget}")
    residue_order = q ** p
    enumeration = residue_order ** r * p ** r
    if enumeration > budget:
        raise BudgetExceededError(
            f"enumeration over {enumeration} data exceeds {budget}")
    shape = asw.GroupShape(p, (1,) * r)
    residue = field_for_order(residue_order, p=p)
    # fix the subgroup spanned by the first coordinate axis
    axis = frozenset(tuple(k if i == 0 else 0 for i in range(r))
                     for k in range(p))
    count = 0
    for m0 in asw.transversal_elements(shape, residue):
        for m1 in asw.iter_module_elements(shape, residue):
            entries = {}
            if m0:
                entries[0] = m0
            if m1:
                entries[1] = m1
            datum = asw.ReducedCocycle(shape, residue, entries)
            if asw.last_jump(datum) != 1:
                continue
            if asw.inertia_image(datum) == axis:
                count += 1
    return count


@dataclass(frozen=True)
class CaseCount:
    total: int
    breakdown: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict[str, int]:
        return dict(self.breakdown)


def _line_labels(p: int) -> list[str]:
    # fixed enumeration of the p+1 lines of F_p^2: [1:0], then [s:1]
    labels = ["line(1:0)"]
    labels.extend(f"line({s}:1)" for s in range(p))
    return labels


def local_heisenberg_count(p: int, q: int) -> CaseCount:
    """Local homomorphism count at the smallest wild discriminant exponent.

    Centre-valued inertia: p^2 unramified reductions, each with
    p (q^p - 1) central characters of jump 1.  Inertia over a line: p
    order-p subgroups above each of the p+1 lines, and for each the
    rank-2 count with that inertia.  Total must equal p^3 (p+2) (q^p - 1).
    """
    _check_setting(p, q)
    rank1 = count_line_inertia(p, q, 1)
    rank2 = count_line_inertia(p, q, 2)
    cases = [("center_inertia", p ** 2 * rank1)]
    for label in _line_labels(p):
        cases.append((label, p * rank2))
    total = sum(v for _, v in cases)
    closed = p ** 3 * (p + 2) * (q ** p - 1)
    if total != closed:
        raise InternalInconsistencyError(
            f"local cases sum to {total}, closed form gives {closed}")
    return CaseCount(total, tuple(cases))


def global_heisenberg_count(p: int, q: int) -> CaseCount:
    """Global count, unramified outside the place, same local behaviour.

    The centre case matches the local one.  Over a line, the p^2 (q^p - 1)
    rank-2 reductions with that inertia each admit exactly p admissible
    central twists, because the Frobenius at a degree-p place acts trivially
    on exponent-p groups, leaving a free choice; with p subgroups per line
    the total becomes p^3 (p^2 + p + 1) (q^p - 1).
    """
    _check_setting(p, q)
    rank1 = count_line_inertia(p, q, 1)
    rank2 = count_line_inertia(p, q, 2)
    cases = [("center_inertia", p ** 2 * rank1)]
    for label in _line_labels(p):
        cases.append((label, p * rank2 * p))
    total = sum(v for _, v in cases)
    closed = p ** 3 * (p ** 2 + p + 1) * (q ** p - 1)
    if total != closed:
        raise InternalInconsistencyError(
            f"global cases sum to {total}, closed form gives {closed}")
    return CaseCount(total, tuple(cases))


@dataclass(frozen=True)
class CounterexampleReport:
    p: int
    q: int
    local_count: int
    global_count: int
    local_breakdown: tuple[tuple[str, int], ...]
    global_breakdown: tuple[tuple[str, int], ...]
    discrepancy_ratio: Fraction


def counterexample_report(p: int, q: int) -> CounterexampleReport:
    """Local and global counts side by side; their ratio exceeds 1."""
    local = local_heisenberg_count(p, q)
    glob = global_heisenberg_count(p, q)
    ratio = Fraction(glob.total, local.total)
    expected = Fraction(p ** 2 + p + 1, p + 2)
    if ratio != expected:
        raise InternalInconsistencyError(
            f"ratio {ratio} differs from (p^2+p+1)/(p+2) = {expected}")
    return CounterexampleReport(p, q, local.total, glob.total,
                                local.breakdown, glob.breakdown, ratio)


def discrepancy_ratio_formula(p: int) -> Fraction:
    """(p^2 + p + 1)/(p + 2); greater than 1 for every p >= 2."""
    return Fraction(p ** 2 + p + 1, p + 2)


# ---------------------------------------------------------------------------
# the discriminant gate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscriminantGateReport:
    p: int
    value: int
    is_smallest_positive: bool
    out_of_setting: bool


def smallest_wild_discriminant(p: int, q: int | None = None) -> DiscriminantGateReport:
    """The smallest positive discriminant exponent for an order-p^3 image.

    Inertia of size p with last jump 1 gives 2 p^2 (p - 1) through the
    ramification integral (two unit intervals, image size p on both).  Any
    other ramified profile is strictly larger: image sizes are powers of p,
    at least p on [(-1, 0]] and on every interval up to the last jump.
    p = 2 evaluates fine but lies outside the odd-prime setting and is
    flagged as such.
    """
    if q is not None:
        field_for_order(q, p=p)
    order = p ** 3
    value = asw.ramification_integral(order, [p, p])
    assert value == 2 * p ** 2 * (p - 1)
    smallest = True
    for jump in range(1, 4):
        for profile in _nonincreasing_profiles(p, jump + 1):
            candidate = asw.ramification_integral(order, list(profile))
            if candidate < value:
                smallest = False
    report = DiscriminantGateReport(p, value, smallest, p == 2)
    if p != 2:
        _cross_check_via_abelian_datum(p, value)
    return report


def _nonincreasing_profiles(p: int, length: int):
    """Nonincreasing image-size profiles, entries in {p, p^2, p^3}."""
    sizes = [p, p ** 2, p ** 3]

    def rec(prefix, remaining):
        if not remaining:
            yield tuple(prefix)
            return
        for s in sizes:
            if not prefix or s <= prefix[-1]:
                yield from rec(prefix + [s], remaining - 1)

    yield from rec([], length)


def _cross_check_via_abelian_datum(p: int, expected: int) -> None:
    """An elementary abelian rank-3 datum with one ramified line and jump 1
    realises the same filtration sizes, so its discriminant must agree."""
    field = make_field(p, 1)
    shape = asw.GroupShape(p, (1, 1, 1))
    coeff = asw.GroupWittElement(shape, field, (
        WittVector(field, (field.one,)),
        WittVector(field, (field.zero,)),
        WittVector(field, (field.zero,))))
    datum = asw.make_cocycle(shape, field, {1: coeff})
    got = asw.discriminant_exponent(datum)
    if got != expected:
        raise InternalInconsistencyError(
            f"abelian cross-check gives {got}, expected {expected}")
