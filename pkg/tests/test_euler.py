"""Place census, Euler products, the convolution oracle, growth ratios."""

from fractions import Fraction

import pytest

from ramcount import asw, euler
from ramcount.errors import BudgetExceededError, TruncationTooLargeError

Z2 = asw.GroupShape(2, (1,))


def test_census_small_degrees_at_q2():
    census = euler.place_census(2, 4)
    assert census.count(1) == 3
    assert census.count(2) == 1
    assert census.count(3) == 2
    assert census.count(4) == 3


def test_census_includes_infinite_place():
    assert euler.place_census(5, 1).count(1) == 6


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_census_zeta_identity(q):
    census = euler.place_census(q, 8)
    table = dict(census.counts)
    for m in range(1, 9):
        assert sum(d * pi for d, pi in table.items() if m % d == 0) == q ** m + 1


def test_census_degree_cap():
    with pytest.raises(TruncationTooLargeError):
        euler.place_census(2, 33)


def test_mobius_values():
    values = [euler.mobius(n) for n in range(1, 11)]
    assert values == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_series_multiplication_truncates():
    a = euler.CountSeries(3, (1, 2, 0, 0))
    b = euler.CountSeries(3, (1, 3, 1, 0))
    assert (a * b).coefficients == (1, 5, 7, 2)
    assert (a ** 2).coefficients == (1, 4, 4, 0)


def test_local_factor_structure():
    f = euler.local_factor(2, 1, 3)
    assert f.coefficient(0) == 1
    assert f.coefficient(1) == 5
    g = euler.local_factor(2, 2, 3)
    assert g.coefficient(0) == 1
    assert g.coefficient(1) == 0
    assert g.coefficient(2) == euler.d4.count_d4_exact(4, 1)


def test_global_series_first_coefficients():
    series = euler.d4_global_series(2, 2)
    assert series.coefficient(0) == 1
    assert series.coefficient(1) == 15
    # 3 places at jump 2, pairs of distinct degree-1 places, one degree-2 place
    assert series.coefficient(2) == 3 * 2 + 3 * 25 + 27


def test_oracle_base_cases():
    assert euler.convolution_oracle(2, 0) == 1
    assert euler.convolution_oracle(2, 1) == 15
    assert euler.convolution_oracle(2, 2) == 108


def test_oracle_truncation_cap():
    with pytest.raises(BudgetExceededError):
        euler.convolution_oracle(2, 9)


@pytest.mark.parametrize("q,x_max", [(2, 6), (4, 4)])
def test_global_series_matches_oracle(q, x_max):
    series = euler.d4_global_series(q, x_max)
    for x in range(x_max + 1):
        assert series.coefficient(x) == euler.convolution_oracle(q, x)


def test_global_series_monotone_in_q():
    s2 = euler.d4_global_series(2, 6)
    s4 = euler.d4_global_series(4, 6)
    assert all(a <= b for a, b in zip(s2.coefficients, s4.coefficients))


def test_truncation_cap():
    with pytest.raises(TruncationTooLargeError):
        euler.d4_global_series(2, 25)


# ---------------------------------------------------------------------------
# abelian series
# ---------------------------------------------------------------------------

def test_abelian_series_first_coefficients():
    series = euler.abelian_global_series(Z2, 2, 3)
    assert series.coefficient(0) == 1
    assert series.coefficient(1) == 3
    # pairs of distinct degree-1 places plus the degree-2 place
    assert series.coefficient(2) == 3 + 3


def test_abelian_series_matches_oracle():
    cache = {}

    def coefficient(residue_order, v):
        key = (residue_order, v)
        if key not in cache:
            cache[key] = asw.count_by_last_jump(
                Z2, residue_order, v, "inertial_types")
        return cache[key]

    series = euler.abelian_global_series(Z2, 2, 8)
    for x in range(9):
        assert series.coefficient(x) == euler.convolution_oracle(
            2, x, coefficient)


# ---------------------------------------------------------------------------
# growth diagnostics
# ---------------------------------------------------------------------------

def test_growth_first_row():
    table = euler.growth_table(2, 3)
    first = table.rows[0]
    assert first.count == 120
    assert first.ratio == 15
    assert first.relative_change is None
    assert all(row.ratio > 0 for row in table.rows)


def test_growth_counts_divisible_by_eight():
    table = euler.growth_table(2, 8)
    assert all(row.count % 8 == 0 for row in table.rows)


def test_growth_stabilises_at_q2():
    table = euler.growth_table(2, 16)
    assert euler.growth_stabilises(table)
    changes = table.changes()
    assert changes[-1] < Fraction(1, 10)
