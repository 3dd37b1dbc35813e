"""Recurrence, moments, explicit forms, weight, and the deformation limit."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from littlejacobi.family import (
    ParamPair,
    QDeformation,
    eigenvalue,
    explicit_poly,
    generate_monic,
    moments,
    norm_square,
    qjacobi_recurrence,
    qlimit_error,
    recurrence_coeffs,
    table_rows,
    weight_eval,
    weight_moment,
)

PAIRS = [
    ParamPair(Fraction(1, 2), Fraction(3, 2)),
    ParamPair(Fraction(0), Fraction(2)),
    ParamPair(Fraction(1), Fraction(1)),
]

admissible = st.fractions(
    min_value=Fraction(-3, 4), max_value=Fraction(4), max_denominator=8
)


def test_param_validation():
    with pytest.raises(ValueError, match="alpha must be > -1"):
        ParamPair(Fraction(-2), Fraction(0))
    with pytest.raises(ValueError, match="beta must be > -1"):
        ParamPair(Fraction(0), Fraction(-1))


def test_b0_equals_first_moment():
    # b_0 = (alpha+1)/(alpha+beta+2) is also the first moment
    for params in PAIRS:
        _, b0 = recurrence_coeffs(params, 0)
        assert b0 == moments(params, 2).c(1)
        assert b0 == (params.alpha + 1) / (params.alpha + params.beta + 2)


def test_b0_covers_the_removable_case():
    # alpha + beta = 0 makes the generic b_n expression 0/0 at n = 0;
    # the closed form stays finite
    params = ParamPair(Fraction(1, 2), Fraction(-1, 2))
    _, b0 = recurrence_coeffs(params, 0)
    assert b0 == Fraction(3, 4)


def test_u0_is_none():
    u, _ = recurrence_coeffs(PAIRS[0], 0)
    assert u is None


@given(admissible, admissible)
@settings(max_examples=40, deadline=None)
def test_u_positive_across_parameters(alpha, beta):
    params = ParamPair(alpha, beta)
    for n in range(1, 21):
        u, _ = recurrence_coeffs(params, n)
        assert u > 0


def test_u_positive_deep():
    for params in PAIRS:
        for n in range(1, 51):
            u, _ = recurrence_coeffs(params, n)
            assert u > 0


def test_eigenvalues_even_odd_forms():
    params = ParamPair(Fraction(1, 2), Fraction(3, 2))
    assert eigenvalue(params, 0) == 0
    assert eigenvalue(params, 4) == -8
    assert eigenvalue(params, 3) == 2 * (params.alpha + params.beta + 4)


def test_eigenvalues_simple():
    for params in PAIRS:
        values = [eigenvalue(params, n) for n in range(51)]
        assert len(set(values)) == len(values)


@given(st.integers(min_value=0, max_value=15))
def test_generate_monic_is_monic(n):
    p = generate_monic(PAIRS[0], n)
    assert p.degree == n
    assert p.leading_coefficient == 1


def test_known_member():
    assert generate_monic(ParamPair(Fraction(0), Fraction(0)), 2).to_strings() == [
        "-1/4",
        "-1/2",
        "1",
    ]


def test_explicit_matches_recurrence():
    for params in PAIRS:
        for n in range(13):
            assert explicit_poly(params, n) == generate_monic(params, n)


@given(admissible, admissible)
@settings(max_examples=25, deadline=None)
def test_explicit_matches_recurrence_across_parameters(alpha, beta):
    params = ParamPair(alpha, beta)
    for n in range(7):
        assert explicit_poly(params, n) == generate_monic(params, n)


def test_moments_structure():
    params = ParamPair(Fraction(1, 2), Fraction(3, 2))
    mf = moments(params, 12)
    assert mf.c(0) == 1
    for m in range(1, 6):
        assert mf.c(2 * m) == mf.c(2 * m - 1)
    with pytest.raises(ValueError, match="moment index"):
        mf.c(13)


def test_inner_product_needs_enough_moments():
    mf = moments(PAIRS[0], 4)
    p = generate_monic(PAIRS[0], 3)
    with pytest.raises(ValueError, match="inner product needs moment"):
        mf.inner_product(p, p)


def test_orthogonality_and_norms():
    for params in PAIRS:
        mf = moments(params, 24)
        members = [generate_monic(params, n) for n in range(13)]
        for n in range(13):
            for m in range(n):
                assert mf.inner_product(members[n], members[m]) == 0
            assert mf.inner_product(members[n], members[n]) == norm_square(params, n)
    assert norm_square(PAIRS[0], 0) == 1


def test_hankel_determinants_positive():
    for params in PAIRS:
        mf = moments(params, 22)
        for n in range(11):
            assert mf.hankel_determinant(n) > 0


def test_hankel_range_check():
    mf = moments(PAIRS[0], 4)
    with pytest.raises(ValueError, match="Hankel"):
        mf.hankel_determinant(3)


def test_weight_domain():
    params = ParamPair(Fraction(1, 2), Fraction(3, 2))
    with pytest.raises(ValueError, match="weight argument"):
        weight_eval(params, 1.0)
    with pytest.raises(ValueError, match="weight argument"):
        weight_eval(params, -1.2)


def test_weight_singular_at_origin_for_negative_alpha():
    params = ParamPair(Fraction(-1, 2), Fraction(3, 2))
    assert weight_eval(params, 0.0) == math.inf
    assert math.isfinite(weight_eval(params, 0.3))


def test_weight_moments_match_exact():
    params = ParamPair(Fraction(1, 2), Fraction(3, 2))
    mf = moments(params, 8)
    for k in range(9):
        assert abs(weight_moment(params, k) - float(mf.c(k))) < 1e-8


def test_weight_normalizes_to_one():
    for params in PAIRS[:2]:
        assert abs(weight_moment(params, 0) - 1.0) < 1e-10


def test_qdeformation_validation():
    with pytest.raises(ValueError, match="epsilon"):
        QDeformation(0.0, 0.5, 1.5)


def test_qjacobi_u0_is_none():
    d = QDeformation(1e-3, 0.5, 1.5)
    u, b = qjacobi_recurrence(d, 0)
    assert u is None
    assert math.isfinite(b)


def test_qlimit_linear_convergence():
    params = ParamPair(Fraction(1, 2), Fraction(3, 2))
    for n in range(6):
        du3, db3 = qlimit_error(params, n, 1e-3)
        du4, db4 = qlimit_error(params, n, 1e-4)
        assert 8.0 <= db3 / db4 <= 12.0
        if n > 0:
            assert 8.0 <= du3 / du4 <= 12.0


def test_table_rows_shape():
    rows = table_rows(ParamPair(Fraction(0), Fraction(0)), 3)
    assert [row["n"] for row in rows] == [0, 1, 2, 3]
    assert rows[0]["u"] is None
    assert rows[1]["u"] == "1/4"
    assert rows[2]["lambda"] == "-4"
