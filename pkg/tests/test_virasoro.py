"""Virasoro brackets, orbit invariants, convexity samples, Verma Gram data."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad

from virfock.circle import CircleDiffeo, Density, FourierFunction, random_diffeo
from virfock.virasoro import (
    CartanCoords,
    VermaBasis,
    VirasoroElement,
    VirasoroFunctional,
    adjoint_action,
    beta_hessian_form,
    cartan_projection,
    chi,
    coadjoint_action,
    convexity_check,
    generator,
    normalized_central,
    orbit_invariants,
    pairing,
    partitions_of,
    projection_curve,
    singleton_norm,
    unitarity_scan,
    verma_gram,
    vir_bracket,
)

TWO_PI = 2.0 * math.pi


def small_diffeo(rng, degree=48):
    return random_diffeo(rng, degree=degree, modes=5, amplitude=0.06,
                         max_slope=0.4)


def random_real_field(rng, degree, modes=5, scale=1.0):
    coeffs = {0: scale * rng.normal()}
    for k in range(1, modes + 1):
        c = scale * (rng.normal() + 1j * rng.normal()) / (1 + k * k)
        coeffs[k] = c
        coeffs[-k] = np.conj(c)
    return FourierFunction.from_dict(coeffs, degree=degree)


# ---------------------------------------------------------------------------
# central extension bracket


def test_central_element_is_bracket_trivial():
    chat = normalized_central(degree=8)
    x = generator(2, degree=8)
    br = vir_bracket(chat, x)
    assert abs(br.z) < 1e-14 and br.field.sup_norm() < 1e-14


@pytest.mark.parametrize("n,m", [(1, -1), (2, -2), (3, -3), (2, 3), (-4, 1)])
def test_normalized_bracket_structure(n, m):
    deg = 14
    x, y = generator(n, deg), generator(m, deg)
    br = vir_bracket(x, y, degree=deg)
    expected = float(n - m) * generator(n + m, deg)
    if n + m == 0:
        expected = expected + ((n ** 3 - n) / 12.0) * normalized_central(deg)
    assert abs(br.z - expected.z) < 1e-9
    worst = max(abs(br.field.coeff(k) - expected.field.coeff(k))
                for k in range(-deg, deg + 1))
    assert worst < 1e-9


# ---------------------------------------------------------------------------
# chi and the orbit invariants


def test_chi_shifted_cosine_closed_form():
    f = FourierFunction.from_dict({0: 2.0, 1: 0.5, -1: 0.5}, degree=8)
    assert abs(chi(f) - 1.0 / math.sqrt(3.0)) < 1e-10


def test_chi_matches_adaptive_quadrature():
    rng = np.random.default_rng(41)
    for _ in range(5):
        f = random_real_field(rng, 12, scale=0.2)
        f = f + FourierFunction.constant(1.5, 12)
        val, _ = quad(lambda th: 1.0 / f.evaluate(np.array([th]))[0].real,
                      0.0, TWO_PI, limit=200)
        assert abs(chi(f) - val / TWO_PI) < 1e-9


def test_chi_of_constant_field():
    f = FourierFunction.constant(2.5, 4)
    assert abs(chi(f) - 0.4) < 1e-13


def test_chi_monotone_under_positive_perturbation():
    rng = np.random.default_rng(42)
    for _ in range(10):
        f = FourierFunction.constant(2.0, 10) + random_real_field(rng, 10, scale=0.2)
        g = FourierFunction.constant(0.5, 10) + random_real_field(rng, 10, scale=0.1)
        assert chi(f + g) <= chi(f) + 1e-12


def test_chi_invariant_under_adjoint_action():
    rng = np.random.default_rng(43)
    base = FourierFunction.from_dict(
        {0: 1.0, 1: 0.15 + 0.1j, -1: 0.15 - 0.1j, 2: 0.05, -2: 0.05}, degree=48)
    x = VirasoroElement(0.25, base)
    c0 = chi(x)
    for _ in range(10):
        assert abs(chi(adjoint_action(small_diffeo(rng), x)) - c0) < 1e-9


def test_orbit_invariants_constant_on_orbit():
    rng = np.random.default_rng(44)
    base = FourierFunction.from_dict(
        {0: 1.0, 1: 0.15 + 0.1j, -1: 0.15 - 0.1j, 2: 0.05, -2: 0.05}, degree=48)
    x = VirasoroElement(0.25, base)
    ref = orbit_invariants(x)
    for _ in range(10):
        inv = orbit_invariants(adjoint_action(small_diffeo(rng), x))
        assert abs(inv.beta - ref.beta) < 1e-7
        assert abs(inv.alpha - ref.alpha) < 1e-7


def test_invariants_of_cartan_element_are_its_coordinates():
    x = VirasoroElement.cartan(0.7, 1.3, 16)
    inv = orbit_invariants(x)
    assert abs(inv.beta - 0.7) < 1e-10 and abs(inv.alpha - 1.3) < 1e-10
    proj = cartan_projection(x)
    assert abs(proj.beta - 0.7) < 1e-12 and abs(proj.alpha - 1.3) < 1e-12


def test_chi_blowup_closed_form_and_monotonicity():
    # along f_t = t + (1 - t)(1 + cos), chi(f_t) = (2t - t^2)^{-1/2}
    values = []
    for texp in (1e-1, 1e-2, 1e-3, 1e-5, 5e-7):
        ft = FourierFunction.from_dict(
            {0: 1.0, 1: 0.5 * (1 - texp), -1: 0.5 * (1 - texp)}, degree=4)
        val = chi(ft, grid_size=200000)
        exact = 1.0 / math.sqrt(2 * texp - texp * texp)
        assert abs(val - exact) / exact < 1e-8
        values.append(val)
    assert all(b > a for a, b in zip(values, values[1:]))
    assert values[-1] > 1e3


# ---------------------------------------------------------------------------
# pairing and the coadjoint action


def test_pairing_of_cartan_data():
    lam = VirasoroFunctional(2.0, Density(FourierFunction.constant(0.5, 8), 2))
    x = VirasoroElement.cartan(3.0, 1.0, 8)
    # a z + int u f = 2*3 + 0.5 * 2 pi
    assert abs(pairing(lam, x) - (6.0 + math.pi)) < 1e-12


def test_pairing_invariant_under_simultaneous_actions():
    rng = np.random.default_rng(45)
    for _ in range(10):
        phi = small_diffeo(rng, degree=32)
        x = VirasoroElement(float(rng.normal()), random_real_field(rng, 10))
        lam = VirasoroFunctional(float(rng.normal()),
                                 Density(random_real_field(rng, 10), 2))
        lhs = pairing(coadjoint_action(phi, lam), adjoint_action(phi, x))
        assert abs(lhs - pairing(lam, x)) < 1e-7


def test_functional_requires_weight_two():
    with pytest.raises(ValueError):
        VirasoroFunctional(1.0, Density(FourierFunction.constant(1.0, 4), 1))


# ---------------------------------------------------------------------------
# convexity samples and the beta Hessian


def test_cartan_projection_moves_into_dominance_cone():
    rng = np.random.default_rng(46)
    x = VirasoroElement.cartan(0.0, 1.0, 48)
    rep = convexity_check(x, trials=50, rng=rng, degree=48)
    assert rep["min_beta_margin"] >= -1e-8
    assert rep["min_alpha_margin"] >= -1e-8


def test_beta_hessian_nonpositive_on_random_directions():
    rng = np.random.default_rng(47)
    for _ in range(50):
        h = random_real_field(rng, 12)
        assert beta_hessian_form(h) <= 1e-9


@pytest.mark.parametrize("n", range(1, 9))
def test_beta_hessian_on_cosines(n):
    h = FourierFunction.from_dict({n: 0.5, -n: 0.5}, degree=10)
    assert abs(beta_hessian_form(h) - math.pi * (1 - n * n)) < 1e-9


def test_beta_hessian_vanishes_on_constants():
    h = FourierFunction.constant(1.7, 6)
    assert abs(beta_hessian_form(h)) < 1e-12


# ---------------------------------------------------------------------------
# projection curves


def test_projection_curve_starts_at_base_point():
    x = VirasoroElement.cartan(0.4, 1.1, 32)
    pts = projection_curve(x, 2, (0.0,), degree=32)
    assert abs(pts[0].beta - 0.4) < 1e-12 and abs(pts[0].alpha - 1.1) < 1e-12


@pytest.mark.parametrize("n", [2, 3])
def test_projection_curve_ray_ratio(n):
    pts = projection_curve(VirasoroElement.cartan(0.0, 1.0, 48), n, (1e-2,),
                           degree=48)
    p = pts[0]
    ratio = p.beta / (p.alpha - 1.0)
    assert abs(ratio - math.pi * (n * n - 1)) < 1e-3


def test_projection_curve_n1_is_pure_rotation_shift():
    pts = projection_curve(VirasoroElement.cartan(0.0, 1.0, 48), 1,
                           (0.01, 0.03), degree=48)
    for p in pts:
        assert abs(p.beta) < 1e-9
    assert pts[-1].alpha != pytest.approx(1.0, abs=1e-6)


# ---------------------------------------------------------------------------
# Verma modules


def frac_gram(level, c, h):
    return verma_gram(VermaBasis(level, Fraction(c[0], c[1]), Fraction(h[0], h[1])))


def test_partitions_enumeration():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1),
                                      (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(1, 6))
def test_singleton_norm_closed_form(n):
    c, h = Fraction(7, 10), Fraction(3, 4)
    expected = 2 * n * h + c * Fraction(n ** 3 - n, 12)
    assert singleton_norm(n, c, h) == expected
    basis = VermaBasis(n, c, h, partitions=((n,),))
    gram = verma_gram(basis)
    assert gram[0, 0] == expected


def test_level_two_gram_exact():
    c, h = Fraction(1, 2), Fraction(1, 16)
    gram = frac_gram(2, (1, 2), (1, 16))
    assert gram[0, 0] == 4 * h + c / 2
    assert gram[0, 1] == 6 * h and gram[1, 0] == 6 * h
    assert gram[1, 1] == 8 * h * h + 4 * h


@pytest.mark.parametrize("n", [1, 2, 3])
def test_c_zero_pair_determinant(n):
    h = Fraction(5, 7)
    basis = VermaBasis(2 * n, Fraction(0), h, partitions=((2 * n,), (n, n)))
    gram = verma_gram(basis)
    det = gram[0, 0] * gram[1, 1] - gram[0, 1] * gram[1, 0]
    assert det == 4 * n ** 3 * h ** 2 * (8 * h - 5 * n)


def test_gram_symmetric_exactly():
    gram = frac_gram(4, (11, 3), (2, 5))
    n = gram.shape[0]
    for i in range(n):
        for j in range(n):
            assert gram[i, j] == gram[j, i]


def test_gram_float_matches_exact():
    c, h = Fraction(11, 3), Fraction(2, 5)
    exact = verma_gram(VermaBasis(3, c, h))
    approx = verma_gram(VermaBasis(3, float(c), float(h)))
    worst = np.max(np.abs(np.vectorize(float)(exact) - approx))
    assert worst < 1e-9


def test_level_one_gram_at_h_zero():
    gram = frac_gram(1, (1, 1), (0, 1))
    assert gram.shape == (1, 1) and gram[0, 0] == 0


def test_unitarity_scan_known_points():
    scan = unitarity_scan([0.0, 1.0, 26.0], [0.0, 0.5, 1.0], max_level=5)
    clean = scan[(1.0, 1.0)]
    assert clean["first_negative_level"] is None
    assert min(clean["min_eigenvalue_by_level"]) > -1e-9
    big = scan[(26.0, 1.0)]
    assert big["first_negative_level"] is None
    bad = scan[(0.0, 0.5)]
    assert bad["first_negative_level"] == 2


def test_c_zero_h_one_negative_norms_appear():
    # the 2x2 pair determinant 4 n^3 h^2 (8h - 5n) changes sign between
    # n = 1 (8 - 5 > 0) and n = 2 (8 - 10 < 0); the full Gram matrices
    # pick up their first negative eigenvalue at level 3
    h = Fraction(1)
    for n, positive in [(1, True), (2, False)]:
        basis = VermaBasis(2 * n, Fraction(0), h, partitions=((2 * n,), (n, n)))
        gram = verma_gram(basis)
        det = gram[0, 0] * gram[1, 1] - gram[0, 1] * gram[1, 0]
        assert (det > 0) == positive
    scan = unitarity_scan([0.0], [1.0], max_level=3)
    assert scan[(0.0, 1.0)]["first_negative_level"] == 3


def test_verma_level_guard():
    with pytest.raises(ValueError):
        VermaBasis(7, Fraction(1), Fraction(1))
