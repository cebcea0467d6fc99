import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kummerweb.polylog import (
    CONSTANTS, BranchCutError, SingularPointError, atom_a, atom_d, atom_g, atom_g_tilde,
    atom_h, atom_h_tilde, bloch_wigner_d2, l3_sv, li2, li3, li_inversion, li_oracle,
    li_principal, li_reflection, li_series, log_cut, on_cut, route_discrepancy,
)

PI = math.pi
LN2 = math.log(2)


def test_constants_against_mpmath():
    mpmath.mp.dps = 30
    assert CONSTANTS.pi == float(mpmath.pi)
    assert CONSTANTS.zeta3 == float(mpmath.zeta(3))
    assert CONSTANTS.catalan == float(mpmath.catalan)
    assert CONSTANTS.pi2 == pytest.approx(float(mpmath.pi**2), rel=1e-16)
    assert CONSTANTS.pi3 == pytest.approx(float(mpmath.pi**3), rel=1e-16)


def test_log_cut_values():
    assert log_cut(1) == 0
    assert log_cut(-1) == pytest.approx(1j * PI, abs=1e-16)
    # third quadrant continues past -pi up to 3pi/2
    assert log_cut(-1 - 1j).imag == pytest.approx(5 * PI / 4)
    assert log_cut(1 - 1j).imag == pytest.approx(-PI / 4)


@pytest.mark.parametrize("z", [-0.5j, -3j, 0, -1e-13j + 1e-14])
def test_log_cut_rejects_downward_ray(z):
    with pytest.raises(BranchCutError):
        log_cut(z)


@pytest.mark.parametrize("z", [1, 1 + 0.5j, 1 + 1e-13 + 2j])
def test_li_rejects_upward_ray(z):
    with pytest.raises(BranchCutError):
        li2(z)
    with pytest.raises(BranchCutError):
        li3(z)


def test_on_cut():
    assert on_cut(-2j) and on_cut(1 + 3j)
    assert not on_cut(0.5) and not on_cut(2 - 1j)


def test_known_values():
    assert li2(0) == 0 and li3(0) == 0
    assert li2(0.5).real == pytest.approx(PI**2 / 12 - LN2**2 / 2, rel=1e-15)
    assert li3(0.5).real == pytest.approx(
        7 * CONSTANTS.zeta3 / 8 - PI**2 * LN2 / 12 + LN2**3 / 6, rel=1e-15
    )
    assert li2(-1).real == pytest.approx(-PI**2 / 12, rel=1e-15)
    assert li3(-1).real == pytest.approx(-0.75 * CONSTANTS.zeta3, rel=1e-15)


def test_real_on_unit_interval():
    for x in np.linspace(0.01, 0.99, 50):
        assert abs(li2(x).imag) < 1e-14
        assert abs(li3(x).imag) < 1e-14


def _mp(s, z, dps=40):
    with mpmath.workdps(dps):
        return complex(mpmath.polylog(s, z))


@pytest.mark.parametrize("z", [0.3 + 0.4j, -2.5 + 0.1j, 0.8 - 0.7j, 4 + 3j, -0.9, -7.0, 0.95, 0.1 - 5j])
def test_principal_against_mpmath(z):
    for s in (2, 3):
        assert abs(li_principal(s, z) - _mp(s, z)) < 1e-14 * max(1, abs(_mp(s, z)))


def test_sheet_right_of_upward_ray():
    # right of the ray the sheet is entered from below the real axis
    for z in (2 + 0.5j, 3 + 1e-3j, 1.5 + 2j):
        assert li2(z) == pytest.approx(li_principal(2, z) - 2j * PI * cmath.log(z), abs=1e-13)
        assert li3(z) == pytest.approx(li_principal(3, z) - 1j * PI * cmath.log(z) ** 2, abs=1e-13)
    # on (1, inf) itself this is mpmath's value, which sits on the lower side
    for x in (1.5, 2.0, 6.0):
        assert li2(x) == pytest.approx(_mp(2, x), abs=1e-13)
        assert li3(x) == pytest.approx(_mp(3, x), abs=1e-13)
    # below the real axis nothing changes
    assert li2(2 - 0.5j) == pytest.approx(_mp(2, 2 - 0.5j), abs=1e-14)


def test_sheet_is_continuous_across_real_axis_beyond_one():
    for x in (1.2, 2.0, 5.0):
        assert li2(x + 1e-9j) == pytest.approx(li2(x - 1e-9j), abs=1e-7)


def test_oracle_agrees_with_mpmath():
    for z in (0.2 + 0.1j, 0.7 - 0.6j, -3 + 2j, 1.2 + 0.9j):
        for s in (2, 3):
            assert abs(li_oracle(s, z) - _mp(s, z)) < 1e-15


def test_atoms():
    assert atom_d(0.5).real == pytest.approx(-PI**2 / 12, rel=1e-15)
    res = atom_a(2 / 3) - atom_a(1 / 6) - atom_a(3 / 8)
    assert abs(res) < 1e-13
    assert atom_a(0.25) == pytest.approx(math.atanh(0.5))
    with pytest.raises(BranchCutError):
        atom_a(1.5)


@pytest.mark.parametrize("z", [0.3, 0.2 + 0.5j, -1.5 + 0.3j, 0.7 - 0.2j])
def test_tilde_atoms_restate_definitions(z):
    ipi = 1j * PI
    gt = atom_g(z) - ipi / 3 * li2(z) + 4 * ipi / 3 * atom_d(z) + PI**2 / 3 * log_cut(1 - z) + 2j * PI**3 / 9
    ht = atom_h(z) + 2 * ipi * li2(z) - 4 * ipi * atom_d(z) - PI**2 * log_cut(1 - z) - 2j * PI**3 / 3
    assert abs(atom_g_tilde(z) - gt) < 1e-13
    assert abs(atom_h_tilde(z) - ht) < 1e-13


def test_atom_definitions_on_unit_interval():
    x = 0.37
    l0, l1 = math.log(x), math.log(1 - x)
    assert atom_d(x).real == pytest.approx(li2(x).real + l0 * l1 / 2 - PI**2 / 6, rel=1e-15)
    assert atom_g(x).real == pytest.approx(
        li3(x).real - l0 * li2(x).real - l0**2 * l1 / 3 - 2 * CONSTANTS.zeta3 / 9, rel=1e-14
    )
    assert atom_h(x).real == pytest.approx(2 * l0 * li2(x).real + l0**2 * l1, rel=1e-14)


def test_d_five_term_grid():
    g = np.linspace(0.05, 0.95, 10)
    worst = 0
    for x in g:
        for y in g:
            if x < y:
                r = atom_d(x) - atom_d(y) - atom_d(x / y) - atom_d((1 - y) / (1 - x)) + atom_d(
                    x * (1 - y) / (y * (1 - x))
                )
                worst = max(worst, abs(r))
    assert worst < 1e-12


def test_bloch_wigner():
    assert bloch_wigner_d2(0.3) == 0
    assert bloch_wigner_d2(1j) == pytest.approx(CONSTANTS.catalan, rel=1e-14)
    for z in (0.3 + 0.8j, -2 + 1j, 3 + 0.1j):
        assert bloch_wigner_d2(z.conjugate()) == pytest.approx(-bloch_wigner_d2(z), abs=1e-14)
    # single valued: no jump across the classical cut
    assert bloch_wigner_d2(2 + 1e-10j) == pytest.approx(bloch_wigner_d2(2 - 1e-10j), abs=1e-8)
    for z in (0, 1):
        with pytest.raises(SingularPointError):
            bloch_wigner_d2(z)


def test_l3_sv():
    x = 0.4
    expected = li3(x).real - math.log(x) * li2(x).real - math.log(x) ** 2 * math.log(1 - x) / 3
    assert abs(l3_sv(x) - expected) < 1e-13
    assert l3_sv(-1) == pytest.approx(-0.75 * CONSTANTS.zeta3, rel=1e-15)
    rng = np.random.default_rng(11)
    for _ in range(50):
        z = complex(*rng.normal(size=2)) * 2
        assert abs(l3_sv(1 / z) - l3_sv(z)) < 1e-13
    assert l3_sv(0, extended=True) == 0
    assert l3_sv(None, extended=True) == 0
    assert l3_sv(1, extended=True) == CONSTANTS.zeta3
    with pytest.raises(SingularPointError):
        l3_sv(1)


def test_l3_sv_against_mpmath():
    for z in (0.5 + 0.5j, -3 + 0.2j, 0.9 + 0.1j):
        with mpmath.workdps(40):
            lz = mpmath.log(abs(z))
            v = mpmath.re(mpmath.polylog(3, z) - lz * mpmath.polylog(2, z) - lz**2 / 3 * mpmath.log(1 - z))
        assert l3_sv(z) == pytest.approx(float(v), abs=1e-14)


def test_derivative_relation():
    rng = np.random.default_rng(3)
    h = 1e-4
    for _ in range(20):
        z = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
        fd = (li3(z + h) - li3(z - h)) / (2 * h)
        assert abs(fd - li2(z) / z) < 1e-6


def test_route_functions_directly():
    z = 0.45 + 0.3j
    for s in (2, 3):
        ref = li_principal(s, z)
        assert abs(li_series(s, z) - ref) < 1e-15
        assert abs(li_reflection(s, z) - ref) < 1e-14
        assert abs(li_inversion(s, 1 / z) - li_principal(s, 1 / z)) < 1e-14
    with pytest.raises(ValueError):
        li_series(2, 1.5)


def test_route_consistency_annulus():
    rng = np.random.default_rng(2024)
    worst = 0
    for _ in range(500):
        r, th = rng.uniform(0.4, 0.9), rng.uniform(-PI, PI)
        z = cmath.rect(r, th)
        for s in (2, 3):
            worst = max(worst, route_discrepancy(s, z))
    assert worst < 1e-12


@settings(max_examples=200, deadline=None)
@given(
    st.complex_numbers(min_magnitude=0.05, max_magnitude=20, allow_nan=False, allow_infinity=False),
    st.complex_numbers(min_magnitude=0.05, max_magnitude=20, allow_nan=False, allow_infinity=False),
)
def test_log_product_is_quantized(z1, z2):
    if any(on_cut(z, 1e-9) for z in (z1, z2, z1 * z2)):
        return
    k = (log_cut(z1 * z2) - log_cut(z1) - log_cut(z2)) / (2j * PI)
    assert abs(k - round(k.real)) < 1e-9
    assert round(k.real) in (-1, 0, 1)


@settings(max_examples=200, deadline=None)
@given(st.complex_numbers(min_magnitude=0.1, max_magnitude=10, allow_nan=False, allow_infinity=False))
def test_routes_property(z):
    if abs(z.imag) < 1e-6:
        return
    for s in (2, 3):
        assert route_discrepancy(s, z) < 1e-12
