"""Witt vector ring laws, checked against ghost-component oracles."""

import pytest

from ramcount import gf
from ramcount.errors import LengthTooLargeError, MixedRingsError
from ramcount.witt import WittVector, iter_witt_vectors, teichmueller, witt_laws

F2 = gf.make_field(2, 1)
F3 = gf.make_field(3, 1)
F4 = gf.make_field(2, 2)


def w2(field, *comps):
    return WittVector(field, tuple(field.element([c] + [0] * (field.n - 1))
                                   if isinstance(c, int) else c for c in comps))


# ---------------------------------------------------------------------------
# law polynomials
# ---------------------------------------------------------------------------

def test_sum_poly_length_one_is_plain_addition():
    for p in (2, 3, 5):
        table = witt_laws(p, 1)
        assert set(table.sum_polys[0]) == {(1, (1, 0)), (1, (0, 1))}


def test_sum_poly_second_component_mod_2():
    table = witt_laws(2, 2)
    # X1 + Y1 + X0*Y0
    assert set(table.sum_polys[1]) == {
        (1, (0, 1, 0, 0)), (1, (0, 0, 0, 1)), (1, (1, 0, 1, 0))}


def test_sum_poly_second_component_mod_3():
    table = witt_laws(3, 2)
    # X1 + Y1 - (X0^2*Y0 + X0*Y0^2)
    assert set(table.sum_polys[1]) == {
        (1, (0, 1, 0, 0)), (1, (0, 0, 0, 1)),
        (2, (2, 0, 1, 0)), (2, (1, 0, 2, 0))}


def test_law_length_cap():
    with pytest.raises(LengthTooLargeError):
        witt_laws(2, 7)


# ---------------------------------------------------------------------------
# ghost-map oracle: W_2(F_p) is Z/p^2 via k = x0^p + p*x1 mod p^2
# ---------------------------------------------------------------------------

def _ghost_int(v, p):
    x0, x1 = (c.coeffs[0] for c in v.components)
    return (x0 ** p + p * x1) % p ** 2


@pytest.mark.parametrize("p", [2, 3, 5])
def test_w2_of_prime_field_matches_integer_ring(p):
    field = gf.make_field(p, 1)
    vectors = list(iter_witt_vectors(field, 2))
    assert len({_ghost_int(v, p) for v in vectors}) == p ** 2
    for a in vectors:
        for b in vectors:
            assert _ghost_int(a + b, p) == (_ghost_int(a, p) + _ghost_int(b, p)) % p ** 2
            assert _ghost_int(a * b, p) == (_ghost_int(a, p) * _ghost_int(b, p)) % p ** 2
            assert _ghost_int(a - b, p) == (_ghost_int(a, p) - _ghost_int(b, p)) % p ** 2


def test_one_plus_one_in_w2_f2():
    one = WittVector.one(F2, 2)
    assert one + one == w2(F2, 0, 1)
    assert one * one == one


def test_one_plus_teichmueller_two_in_w2_f3():
    # [2] = -1 in Z/9, so (1,0) + (2,0) must vanish
    a = teichmueller(F3.one, 2)
    b = teichmueller(F3.from_prime(2), 2)
    assert not (a + b)
    assert _ghost_int(a, 3) == 1 and _ghost_int(b, 3) == 8


# ---------------------------------------------------------------------------
# ring axioms
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("p,n,field", [(2, 2, F2), (2, 2, F4), (3, 2, F3)])
def test_ring_axioms_exhaustively(p, n, field):
    vectors = list(iter_witt_vectors(field, n))
    zero = WittVector.zeros(field, n)
    one = WittVector.one(field, n)
    for a in vectors:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        for b in vectors:
            assert a + b == b + a
            assert a * b == b * a
            for c in vectors:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def test_additive_exponent():
    for field, n in [(F2, 2), (F4, 2), (F3, 2)]:
        p = field.p
        for a in iter_witt_vectors(field, n):
            acc = WittVector.zeros(field, n)
            for _ in range(p ** n):
                acc = acc + a
            assert not acc


# ---------------------------------------------------------------------------
# Teichmueller, Frobenius, Artin-Schreier, p-multiplication
# ---------------------------------------------------------------------------

def test_teichmueller_basics():
    assert teichmueller(F2.one, 3) == WittVector.one(F2, 3)
    assert teichmueller(F2.zero, 2) == WittVector.zeros(F2, 2)
    t = teichmueller(F4.gen, 2)
    assert t * t == teichmueller(F4.gen * F4.gen, 2)


@pytest.mark.parametrize("field", [F2, F4, gf.make_field(2, 3),
                                   gf.make_field(2, 4), F3, gf.make_field(3, 2),
                                   gf.make_field(5, 1), gf.make_field(7, 1),
                                   gf.make_field(11, 1), gf.make_field(13, 1)])
def test_teichmueller_is_multiplicative(field):
    for x in field.iter_elements():
        for y in field.iter_elements():
            assert (teichmueller(x, 2) * teichmueller(y, 2)
                    == teichmueller(x * y, 2))


def test_frobenius_fixes_prime_subring_and_is_additive():
    assert w2(F2, 0, 1).frobenius() == w2(F2, 0, 1)
    assert WittVector.one(F4, 2).frobenius() == WittVector.one(F4, 2)
    assert teichmueller(F4.gen, 2).frobenius() == teichmueller(F4.gen.frobenius(), 2)
    for a in iter_witt_vectors(F4, 2):
        for b in iter_witt_vectors(F4, 2):
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()


def test_artin_schreier_examples_and_kernel():
    assert not w2(F2, 0, 1).artin_schreier()
    assert WittVector(F4, (F4.gen,)).artin_schreier() == WittVector(F4, (F4.one,))
    kernel = [v for v in iter_witt_vectors(F4, 2) if not v.artin_schreier()]
    assert len(kernel) == 4
    # the kernel is exactly the prime subring W_2(F_2)
    prime = {WittVector.from_int(F4, 2, k) for k in range(4)}
    assert set(kernel) == prime


@pytest.mark.parametrize("field,n", [(F2, 1), (F2, 2), (F4, 1), (F4, 2),
                                     (F3, 2), (gf.make_field(2, 4), 2)])
def test_artin_schreier_kernel_size_is_p_to_the_n(field, n):
    kernel = sum(1 for v in iter_witt_vectors(field, n) if not v.artin_schreier())
    assert kernel == field.p ** n


def test_artin_schreier_vanishes_on_integer_multiples_of_one():
    for field, n in [(F4, 2), (F3, 2)]:
        for k in range(field.p ** n):
            assert not WittVector.from_int(field, n, k).artin_schreier()


def test_mul_by_p_examples():
    assert w2(F2, 1, 0).mul_by_p() == w2(F2, 0, 1)
    assert not w2(F2, 0, 1).mul_by_p()
    assert not WittVector.zeros(F2, 2).mul_by_p()


def test_mul_by_p_agrees_with_repeated_addition():
    for v in iter_witt_vectors(F4, 2):
        assert v.mul_by_p() == v + v
    for v in iter_witt_vectors(F3, 2):
        assert v.mul_by_p() == v + v + v


def test_scale_matches_repeated_addition():
    for v in iter_witt_vectors(F3, 2):
        acc = WittVector.zeros(F3, 2)
        for k in range(9):
            assert v.scale(k) == acc
            acc = acc + v


def test_mixed_rings_rejected():
    with pytest.raises(MixedRingsError):
        WittVector.one(F2, 2) + WittVector.one(F2, 3)
    with pytest.raises(MixedRingsError):
        WittVector.one(F2, 2) + WittVector.one(F4, 2)


def test_longer_lengths_spot_checked_against_integers():
    # W_3(F_2) is Z/8 via the ghost map x0^4 + 2 x1^2 + 4 x2
    def ghost3(v):
        x0, x1, x2 = (c.coeffs[0] for c in v.components)
        return (x0 ** 4 + 2 * x1 ** 2 + 4 * x2) % 8

    vectors = list(iter_witt_vectors(F2, 3))
    assert len({ghost3(v) for v in vectors}) == 8
    for a in vectors:
        for b in vectors:
            assert ghost3(a + b) == (ghost3(a) + ghost3(b)) % 8
            assert ghost3(a * b) == (ghost3(a) * ghost3(b)) % 8


def test_length_four_ring_is_z16():
    def ghost4(v):
        x0, x1, x2, x3 = (c.coeffs[0] for c in v.components)
        return (x0 ** 8 + 2 * x1 ** 4 + 4 * x2 ** 2 + 8 * x3) % 16

    vectors = list(iter_witt_vectors(F2, 4))
    assert len({ghost4(v) for v in vectors}) == 16
    for a in vectors:
        for b in vectors:
            assert ghost4(a + b) == (ghost4(a) + ghost4(b)) % 16
    one = WittVector.one(F2, 4)
    assert WittVector.from_int(F2, 4, 5) + WittVector.from_int(F2, 4, 11) \
        == WittVector.zeros(F2, 4)
    assert one.mul_by_p().mul_by_p().mul_by_p() == WittVector.from_int(F2, 4, 8)
