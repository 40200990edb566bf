"""Dihedral lift heights, distributions, twist invariance, local counts."""

from fractions import Fraction

import pytest

from ramcount import asw, d4, gf
from ramcount.d4 import SparseTPoly
from ramcount.errors import NotTotallyRamifiedError, UnsupportedShapeError
from ramcount.witt import WittVector

F2 = gf.make_field(2, 1)
F4 = gf.make_field(2, 2)


def poly(field, *exponents):
    """Polynomial with coefficient 1 at each listed exponent."""
    return SparseTPoly.from_terms(field, {e: field.one for e in exponents})


# ---------------------------------------------------------------------------
# pole order and derivative
# ---------------------------------------------------------------------------

def test_pole_order():
    assert poly(F2, 3, 1).pole_order() == 3
    assert SparseTPoly.zero(F2).pole_order() == 0
    assert poly(F2, 0).pole_order() == 0


def test_t_derivative():
    assert poly(F2, 3).t_derivative() == poly(F2, 3)
    assert not poly(F2, 0).t_derivative()
    assert poly(F2, 1, 0).t_derivative() == poly(F2, 1)
    # even exponents die in characteristic 2 (they only arise in products)
    prod = poly(F2, 1) * poly(F2, 1)
    assert prod.pole_order() == 2 and not prod.t_derivative()


def test_t_derivative_odd_characteristic():
    f3 = gf.make_field(3, 1)
    x = SparseTPoly.from_terms(f3, {1: f3.one, 2: f3.one, 3: f3.one})
    d = x.t_derivative()
    assert d.terms[1] == f3.from_prime(2)
    assert d.terms[2] == f3.from_prime(1)
    assert 3 not in d.terms


# ---------------------------------------------------------------------------
# jump formula
# ---------------------------------------------------------------------------

def test_jump_formula_examples():
    a = c = poly(F2, 1)
    assert d4.d4_last_jump(a, c, SparseTPoly.zero(F2)) == 2
    a, c = poly(F2, 1), poly(F2, 3)
    assert d4.d4_last_jump(a, c, SparseTPoly.zero(F2)) == 4
    z = SparseTPoly.zero(F2)
    assert d4.d4_last_jump(z, z, poly(F2, 1)) == 1


def test_jump_formula_uses_exact_rationals():
    a, c = poly(F2, 3), poly(F2, 1)
    jump = d4.d4_last_jump(a, c, SparseTPoly.zero(F2))
    assert isinstance(jump, Fraction)
    assert jump == 4  # w(b'-ac') = 3+1 dominates the side terms 7/2 and 5/2
    # on odd-support data the half-integer side terms are always dominated:
    # the even-exponent top of a*c' cannot be cancelled by b'
    for exps_a in ((), (1,), (3,), (1, 3)):
        for exps_c in ((), (1,), (5,)):
            for exps_b in ((), (0,), (1,), (3, 1)):
                value = d4.d4_last_jump(poly(F2, *exps_a), poly(F2, *exps_c),
                                        poly(F2, *exps_b))
                assert value.denominator == 1


def test_datum_normalises_constants_and_validates_support():
    # over F_2 the map x -> x^2 - x has image {0}, so both constants are reps
    d = d4.D4Datum(poly(F2, 1, 0), poly(F2, 3), poly(F2, 0))
    assert d.a == poly(F2, 1, 0)
    trans = gf.wp_transversal(F4)
    shifted = SparseTPoly.from_terms(F4, {0: F4.one, 1: F4.one})
    d = d4.D4Datum(shifted, poly(F4, 3), SparseTPoly.zero(F4))
    assert d.a.constant_term() in trans
    assert d4.datum_last_jump(d4.D4Datum(poly(F2, 1), poly(F2, 1),
                                         SparseTPoly.zero(F2))) == 2
    with pytest.raises(ValueError):
        d4.D4Datum(poly(F2, 2), poly(F2, 1), SparseTPoly.zero(F2))
    with pytest.raises(ValueError):
        d4.D4Datum(poly(gf.make_field(3, 1), 1), poly(gf.make_field(3, 1), 1),
                   SparseTPoly.zero(gf.make_field(3, 1)))


def test_min_lift_jump_examples():
    assert d4.min_lift_jump(poly(F2, 1), poly(F2, 1)) == 2
    assert d4.min_lift_jump(SparseTPoly.zero(F2), poly(F2, 3)) == 3
    assert d4.min_lift_jump(SparseTPoly.zero(F2), SparseTPoly.zero(F2)) == 0


def test_total_ramification_detection():
    assert d4.is_totally_ramified(poly(F2, 1), poly(F2, 3))
    assert not d4.is_totally_ramified(poly(F2, 1), poly(F2, 1))
    assert not d4.is_totally_ramified(poly(F2, 1), SparseTPoly.zero(F2))
    # constants do not affect the inertia image
    assert d4.is_totally_ramified(poly(F2, 1, 0), poly(F2, 3))
    # over F_4 distinct scalar multiples are independent
    two_gen = SparseTPoly.from_terms(F4, {1: F4.gen})
    assert d4.is_totally_ramified(poly(F4, 1), two_gen)


def test_bruteforce_matches_closed_minimum():
    got = d4.min_lift_jump_bruteforce(poly(F2, 1), poly(F2, 3), 6)
    assert got == 4
    got = d4.min_lift_jump_bruteforce(poly(F2, 1), poly(F2, 1, 3), 6)
    assert got == 4
    with pytest.raises(NotTotallyRamifiedError):
        d4.min_lift_jump_bruteforce(poly(F2, 1), poly(F2, 1), 6)


@pytest.mark.parametrize("q,wmax", [(2, 6), (4, 4)])
def test_bruteforce_equals_formula_on_all_totally_ramified_pairs(q, wmax):
    field = gf.field_for_order(q)
    odd = [1, 3, 5]
    pool = []
    from itertools import product as iproduct
    for chosen in iproduct(field.elements(), repeat=len(odd)):
        terms = {e: c for e, c in zip(odd, chosen) if c}
        pool.append(SparseTPoly(field, terms))
    seen = 0
    for a in pool:
        for c in pool:
            if a.pole_order() + c.pole_order() > wmax:
                continue
            if not d4.is_totally_ramified(a, c):
                continue
            seen += 1
            expected = d4.min_lift_jump(a, c)
            assert d4.min_lift_jump_bruteforce(a, c, wmax) == expected
    assert seen > 0


# ---------------------------------------------------------------------------
# lift distributions
# ---------------------------------------------------------------------------

def test_lift_distribution_examples():
    dist = d4.lift_jump_distribution(poly(F2, 1), poly(F2, 1), 2)
    assert dist.minlift == 2
    assert dist.as_dict()[2] == 4
    assert dist.as_dict()[1] == 0
    zero = SparseTPoly.zero(F2)
    dist = d4.lift_jump_distribution(zero, zero, 0)
    assert dist.as_dict()[0] == 2


def test_enumerated_distribution_matches_closed_form():
    for field, pairs in [(F2, [(poly(F2, 1), poly(F2, 3)),
                               (poly(F2, 1), poly(F2, 1, 3)),
                               (poly(F2, 1, 0), poly(F2, 5))]),
                         (F4, [(poly(F4, 1), SparseTPoly.from_terms(F4, {1: F4.gen})),
                               (poly(F4, 1), poly(F4, 3))])]:
        for a, c in pairs:
            v_max = d4.min_lift_jump(a, c) + 3
            closed = {v: n for v, n in
                      d4.lift_jump_distribution(a, c, v_max).counts if n}
            enum = d4.enumerated_lift_distribution(a, c, v_max)
            assert enum == closed


def test_enumerated_distribution_confirms_four_minimal_lifts():
    # at the diagonal's minimum every bounded b attains the jump
    tally = d4.enumerated_lift_distribution(poly(F2, 1), poly(F2, 3), 4)
    assert tally[Fraction(4)] == 8  # 2 * q^(ceil(4/2)) at q = 2


# ---------------------------------------------------------------------------
# twist invariance
# ---------------------------------------------------------------------------

def test_twist_invariance_on_a_ramified_pair():
    report = d4.unramified_twist_report(poly(F2, 1), poly(F2, 3), 6)
    assert report.all_equal
    assert len(report.comparisons) == 4
    assert all(cmp.enumerated_equal for cmp in report.comparisons)


def test_twist_invariance_trivial_pair():
    zero = SparseTPoly.zero(F2)
    report = d4.unramified_twist_report(zero, zero, 3)
    assert report.all_equal
    assert all(cmp.enumerated_equal is None for cmp in report.comparisons)


def test_twist_invariance_over_f4():
    a = poly(F4, 1)
    c = SparseTPoly.from_terms(F4, {1: F4.gen})
    report = d4.unramified_twist_report(a, c, 4)
    assert report.all_equal
    assert len(report.comparisons) == 16


# ---------------------------------------------------------------------------
# relations with minimal lifts
# ---------------------------------------------------------------------------

def test_minimal_lift_bound_by_reduction_jump():
    for q in (2, 4):
        field = gf.field_for_order(q)
        from itertools import product as iproduct
        odd = [1, 3, 5]
        pool = []
        for chosen in iproduct(field.elements(), repeat=len(odd)):
            terms = {e: c for e, c in zip(odd, chosen) if c}
            pool.append(SparseTPoly(field, terms))
        for a in pool:
            for c in pool:
                reduction_jump = asw.last_jump(d4.pair_to_cocycle(a, c))
                assert d4.min_lift_jump(a, c) >= reduction_jump


def test_nonintegral_or_even_jumps_are_minimal():
    # across totally ramified fibers, a lift whose jump is even or fractional
    # must attain the fiber minimum
    from itertools import product as iproduct
    odd = [1, 3, 5]
    pool = []
    for chosen in iproduct(F2.elements(), repeat=len(odd)):
        terms = {e: c for e, c in zip(odd, chosen) if c}
        pool.append(SparseTPoly(F2, terms))
    for a in pool:
        for c in pool:
            if not d4.is_totally_ramified(a, c):
                continue
            if a.pole_order() + c.pole_order() > 6:
                continue
            tally = d4.enumerated_lift_distribution(a, c, 6)
            fiber_min = min(tally)
            for jump in tally:
                if jump.denominator > 1 or (jump % 2 == 0 and jump > 0):
                    assert jump == fiber_min


def test_central_twist_jump_identity():
    # for a fiber-minimal b, twisting by e moves the jump to max(jump, w(e))
    from itertools import product as iproduct
    pairs = [(poly(F2, 1), poly(F2, 3)), (poly(F2, 1), poly(F2, 1, 3)),
             (poly(F2, 1, 0), poly(F2, 3)), (poly(F2, 3), poly(F2, 5))]
    twists = []
    for c0 in (None, 0):
        for chosen in iproduct((None, 1), repeat=3):
            exps = [e for e, keep in zip((1, 3, 5), chosen) if keep is not None]
            if c0 is not None:
                exps.append(0)
            twists.append(poly(F2, *exps) if exps else SparseTPoly.zero(F2))
    for a, c in pairs:
        m = d4.min_lift_jump(a, c)
        minimal_b = None
        for b, _ in d4._canonical_b_pool(F2, m):
            if d4.d4_last_jump(a, c, b) == m:
                minimal_b = b
                break
        assert minimal_b is not None
        for e in twists:
            twisted = minimal_b + e
            expected = max(Fraction(m), Fraction(e.pole_order()))
            assert d4.d4_last_jump(a, c, twisted) == expected


# ---------------------------------------------------------------------------
# counts
# ---------------------------------------------------------------------------

def test_count_min_lift_closed_form_values():
    assert d4.count_min_lift(2, 0) == 1
    assert d4.count_min_lift(2, 3) == 4
    assert d4.count_min_lift(2, 4) == 4


@pytest.mark.parametrize("q", [2, 4])
def test_count_min_lift_enumeration_matches_closed_form(q):
    for v in range(6):
        closed = d4.count_min_lift(q, v)
        enum = d4.count_min_lift(q, v, mode="enumeration")
        assert closed == enum


def test_count_min_lift_sharded():
    assert (d4.count_min_lift(4, 5, mode="enumeration", threads=2)
            == d4.count_min_lift(4, 5))


def test_count_d4_le_values():
    assert d4.count_d4_le(2, 0) == 1
    assert d4.count_d4_le(2, 1) == 6
    assert d4.count_d4_le(2, 2) == 8


def test_count_d4_exact_values():
    assert d4.count_d4_exact(12345, 0) == 1
    assert d4.count_d4_exact(2, 1) == 5
    assert d4.count_d4_exact(4, 1) == 27


def test_count_d4_exact_polynomial_identity_at_jump_one():
    for q in (2, 4, 8, 9, 16, 2 ** 10):
        assert d4.count_d4_exact(q, 1) == q * (2 * q - 1) - 1


# ---------------------------------------------------------------------------
# pairing and the correction bound
# ---------------------------------------------------------------------------

def test_pairing_on_standard_basis():
    x = (F2.one, F2.zero)
    y = (F2.zero, F2.one)
    assert d4.commutator_pairing(x, y) == F2.one
    assert not d4.commutator_pairing(x, x)


def test_pairing_over_f4():
    x = (F4.gen, F4.zero)
    y = (F4.zero, F4.gen)
    assert d4.commutator_pairing(x, y) == F4.gen * F4.gen


def test_pairing_is_bilinear_and_alternating():
    elems = list(F4.iter_elements())
    for x1 in elems:
        for x2 in elems:
            assert not d4.commutator_pairing((x1, x2), (x1, x2))
            for y1 in elems:
                for y2 in elems:
                    lhs = d4.commutator_pairing((x1 + y1, x2 + y2), (y1, y2))
                    rhs = (d4.commutator_pairing((x1, x2), (y1, y2))
                           + d4.commutator_pairing((y1, y2), (y1, y2)))
                    assert lhs == rhs


def test_pairing_rejects_wrong_shape():
    shape = asw.GroupShape(2, (2,))
    bad = asw.GroupWittElement(shape, F2, (WittVector.one(F2, 2),))
    with pytest.raises(UnsupportedShapeError):
        d4.commutator_pairing(bad, bad)


def _rank2_cocycle(field, entries):
    shape = asw.GroupShape(2, (1, 1))
    return asw.make_cocycle(shape, field, {
        n: asw.GroupWittElement(shape, field, (
            WittVector(field, (x,)), WittVector(field, (y,))))
        for n, (x, y) in entries.items()})


def test_epsilon_report_zero_source():
    m = _rank2_cocycle(F2, {})
    report = d4.epsilon_bound_report(m, (F4.zero, F4.gen))
    assert report.source_jump == 0 and report.epsilon_jump == 0
    assert report.bounded


def test_epsilon_report_example():
    m = _rank2_cocycle(F2, {1: (F2.one, F2.zero)})
    report = d4.epsilon_bound_report(m, (F4.zero, F4.gen))
    assert report.source_jump == 1 and report.epsilon_jump == 1
    assert report.bounded
    coeff = report.epsilon.coefficient(1)
    assert coeff.parts[0].components[0] == F4.gen


def test_epsilon_report_zero_pairing_vector():
    m = _rank2_cocycle(F2, {1: (F2.one, F2.one), 3: (F2.zero, F2.one)})
    report = d4.epsilon_bound_report(m, (F4.zero, F4.zero))
    assert report.epsilon_jump == 0 and report.bounded


def test_epsilon_bound_exhaustive_small():
    fields = [F2, F4, gf.make_field(2, 4)]
    sources = []
    for x1 in F2.iter_elements():
        for x2 in F2.iter_elements():
            for y1 in F2.iter_elements():
                for y2 in F2.iter_elements():
                    entries = {}
                    if x1 or x2:
                        entries[1] = (x1, x2)
                    if y1 or y2:
                        entries[3] = (y1, y2)
                    sources.append(_rank2_cocycle(F2, entries))
    for big in fields:
        for m in sources:
            for g1 in big.iter_elements():
                for g2 in big.iter_elements():
                    assert d4.epsilon_bound_report(m, (g1, g2)).bounded
