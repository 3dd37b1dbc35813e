"""Jacobi building blocks, kernel/two-term constructions, and the
structure checks tying the family to them."""

from fractions import Fraction

import pytest
from scipy.special import jacobi as scipy_jacobi

from littlejacobi.family import ParamPair, generate_monic, recurrence_coeffs
from littlejacobi.polys import Poly, reflect
from littlejacobi.transforms import (
    JacobiParams,
    christoffel_transform,
    dunkl_classical_check,
    extract_recurrence,
    gegenbauer_dunkl_check,
    geronimus_coefficient,
    geronimus_combination,
    identify_little,
    intertwiner_check,
    monic_jacobi_01,
    monic_jacobi_sym,
    raising_check,
    symmetric_gegenbauer,
)

PAIRS = [
    ParamPair(Fraction(1, 2), Fraction(3, 2)),
    ParamPair(Fraction(0), Fraction(2)),
    ParamPair(Fraction(1), Fraction(1)),
]


def test_jacobi_params_validation():
    with pytest.raises(ValueError, match="xi must be > -1"):
        JacobiParams(Fraction(-5, 4), Fraction(0))
    with pytest.raises(ValueError, match="eta must be > -1"):
        JacobiParams(Fraction(0), Fraction(-1))


def test_monic_jacobi_01_known_linear_member():
    jp = JacobiParams(Fraction(1, 2), Fraction(3, 2))
    p = monic_jacobi_01(jp, 1)
    assert p == Poly([-(jp.xi + 1) / (jp.xi + jp.eta + 2), 1])


def test_monic_jacobi_01_against_scipy():
    # weight x^xi (1-x)^eta on [0,1] maps to the classical pair at 1-2x
    jp = JacobiParams(Fraction(1, 2), Fraction(3, 2))
    for n in range(1, 7):
        mine = monic_jacobi_01(jp, n)
        classical = scipy_jacobi(n, float(jp.xi), float(jp.eta))
        for x in (0.1, 0.37, 0.62, 0.85):
            reference = classical(1.0 - 2.0 * x) / classical.coeffs[0] / (-2.0) ** n
            assert abs(mine(x) - reference) < 1e-10


def test_monic_jacobi_sym_against_scipy():
    jp = JacobiParams(Fraction(1, 2), Fraction(3, 2))
    for n in range(1, 7):
        mine = monic_jacobi_sym(jp, n)
        classical = scipy_jacobi(n, float(jp.xi), float(jp.eta))
        for x in (-0.8, -0.25, 0.4, 0.9):
            reference = classical(x) / classical.coeffs[0]
            assert abs(mine(x) - reference) < 1e-10


def test_monic_jacobi_sym_parity_when_balanced():
    jp = JacobiParams(Fraction(1, 2), Fraction(1, 2))
    for n in range(8):
        p = monic_jacobi_sym(jp, n)
        assert reflect(p) == (-1) ** n * p


def test_symmetric_gegenbauer_structure():
    jp = JacobiParams(Fraction(0), Fraction(1))
    for n in range(9):
        s = symmetric_gegenbauer(jp, n)
        assert s.degree == n
        assert s.leading_coefficient == 1
        assert reflect(s) == (-1) ** n * s
    # even member is the [0,1] Jacobi polynomial in x^2
    assert symmetric_gegenbauer(jp, 4) == monic_jacobi_01(jp, 2).compose(
        Poly([0, 0, 1])
    )
    # odd member carries one factor of x and a shifted first parameter
    shifted = JacobiParams(jp.xi + 1, jp.eta)
    assert symmetric_gegenbauer(jp, 5) == Poly.X * monic_jacobi_01(shifted, 2).compose(
        Poly([0, 0, 1])
    )


def test_christoffel_transform_is_monic_of_right_degree():
    jp = JacobiParams(Fraction(0), Fraction(0))
    for n in range(8):
        p = christoffel_transform(jp, n)
        assert p.degree == n
        assert p.leading_coefficient == 1


def test_geronimus_coefficient_values():
    params = ParamPair(Fraction(1), Fraction(1))
    # even n: B_n = n/(alpha+beta+2n); odd n picks up the alpha term
    assert geronimus_coefficient(params, 2) == Fraction(1, 3)
    assert geronimus_coefficient(params, 1) == Fraction(1, 2)
    with pytest.raises(ValueError):
        geronimus_coefficient(params, 0)


def test_identification_all_routes_agree():
    for params in PAIRS:
        for n in range(13):
            report = identify_little(params, n)
            assert report.holds, report.to_dict()


def test_unshifted_combination_differs():
    # the two-term combination built on the unshifted symmetric family
    # does NOT reproduce the recurrence member; the eta+1 shift is load-bearing
    params = ParamPair(Fraction(1), Fraction(1))
    jp = JacobiParams(Fraction(0), Fraction(0))
    n = 2
    combo = symmetric_gegenbauer(jp, n) - geronimus_coefficient(params, n) * symmetric_gegenbauer(jp, n - 1)
    assert combo != generate_monic(params, n)
    assert geronimus_combination(params, n) == generate_monic(params, n)


def test_dunkl_classical_lowering():
    for params in PAIRS:
        for n in range(1, 13):
            assert dunkl_classical_check(params, n).holds


def test_raising_property():
    params = ParamPair(Fraction(1, 2), Fraction(5, 2))
    for n in range(11):
        assert raising_check(params, n).holds


def test_raising_needs_beta_above_one():
    with pytest.raises(ValueError, match="beta must exceed 1"):
        raising_check(ParamPair(Fraction(1), Fraction(1)), 2)


def test_intertwiner_route():
    for params in (ParamPair(Fraction(1), Fraction(1)), ParamPair(Fraction(1, 2), Fraction(3, 2))):
        for n in range(11):
            assert intertwiner_check(params, n).holds


def test_gegenbauer_dunkl_lowering():
    jp = JacobiParams(Fraction(-1, 4), Fraction(1, 4))
    for n in range(1, 11):
        assert gegenbauer_dunkl_check(jp, n).holds


def test_extract_recurrence_round_trip():
    params = ParamPair(Fraction(1, 2), Fraction(3, 2))
    seq = [generate_monic(params, k) for k in range(8)]
    for n in range(1, 7):
        u, b = extract_recurrence(seq, n)
        expected_u, expected_b = recurrence_coeffs(params, n)
        assert u == expected_u
        assert b == expected_b


def test_extract_recurrence_rejects_non_orthogonal():
    seq = [Poly.ONE, Poly.X, Poly([0, 0, 1]), Poly([1, 0, 0, 1])]
    with pytest.raises(RuntimeError, match="three-term recurrence"):
        extract_recurrence(seq, 2)


def test_report_serialization():
    report = identify_little(PAIRS[0], 3)
    data = report.to_dict()
    assert data["holds"] is True
    assert data["n"] == 3
    assert data["params"] == {"alpha": "1/2", "beta": "3/2"}
