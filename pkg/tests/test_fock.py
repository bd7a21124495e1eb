"""CCR/CAR algebra, Weyl operators, Bogoliubov vacua, central terms."""

import math

import numpy as np
import pytest

from virfock.fock import (
    BOSONIC,
    FERMIONIC,
    ModeSpace,
    annihilate,
    basis_vector,
    central_term,
    central_term_trace,
    create,
    embed,
    exp_vector,
    hat_element,
    hat_pairing,
    heisenberg_inverse,
    heisenberg_mul,
    number_operator,
    quasifree_twist,
    random_fock_vector,
    rank_one_generator,
    second_quantize,
    truncated_vacuum_oracle,
    vacuum,
    vacuum_implementer,
    vacuum_residuals,
    weyl,
)
from virfock.realmaps import (
    RealLinearMap,
    inner,
    is_orthogonal,
    is_symplectic,
    omega,
    random_o_element,
    random_sp_element,
    random_symplectic,
    random_unitary,
)


def random_vec(rng, d):
    return rng.normal(size=d) + 1j * rng.normal(size=d)


# ---------------------------------------------------------------------------
# mode spaces


def test_bosonic_dimension_counts_occupations():
    sp = ModeSpace(2, BOSONIC, cutoff=3)
    # occupations (n1, n2) with n1 + n2 <= 3
    assert sp.dim == 10


def test_fermionic_cutoff_is_mode_count():
    sp = ModeSpace(3, FERMIONIC, cutoff=17)
    assert sp.cutoff == 3
    assert sp.dim == 8


def test_vacuum_is_annihilated():
    rng = np.random.default_rng(50)
    for stat in (BOSONIC, FERMIONIC):
        sp = ModeSpace(2, stat, cutoff=4)
        f = random_vec(rng, 2)
        assert annihilate(sp, f).apply(vacuum(sp)).norm() < 1e-14


# ---------------------------------------------------------------------------
# canonical (anti)commutation relations


def test_ccr_on_safe_subspace():
    rng = np.random.default_rng(51)
    sp = ModeSpace(3, BOSONIC, cutoff=12)
    for _ in range(5):
        f, g = random_vec(rng, 3), random_vec(rng, 3)
        comm = annihilate(sp, f).commutator(create(sp, g))
        defect = comm - complex(inner(g, f)) * comm.identity(sp)
        assert defect.restricted_norm(sp.cutoff - 2) < 1e-12
        assert annihilate(sp, f).commutator(annihilate(sp, g)).norm() < 1e-13


def test_car_exact():
    rng = np.random.default_rng(52)
    sp = ModeSpace(3, FERMIONIC, cutoff=3)
    for _ in range(5):
        f, g = random_vec(rng, 3), random_vec(rng, 3)
        anti = annihilate(sp, f).anticommutator(create(sp, g))
        defect = anti - complex(inner(g, f)) * anti.identity(sp)
        assert defect.norm() < 1e-13
        assert annihilate(sp, f).anticommutator(annihilate(sp, g)).norm() < 1e-13
        assert create(sp, f).anticommutator(create(sp, g)).norm() < 1e-13


def test_creation_is_adjoint_of_annihilation():
    rng = np.random.default_rng(53)
    for stat in (BOSONIC, FERMIONIC):
        sp = ModeSpace(2, stat, cutoff=5)
        f = random_vec(rng, 2)
        assert (create(sp, f).adjoint() - annihilate(sp, f)).norm() < 1e-13


def test_creation_raises_degree_by_one():
    sp = ModeSpace(2, BOSONIC, cutoff=6)
    v = basis_vector(sp, (1, 2))
    w = create(sp, [1.0, 0.0]).apply(v)
    assert w.degree_norms()[4] > 0
    assert sum(w.degree_norms()[:4]) < 1e-15


def test_number_operator_counts():
    sp = ModeSpace(2, BOSONIC, cutoff=5)
    v = basis_vector(sp, (2, 1))
    assert (number_operator(sp).apply(v) - 3.0 * v).norm() < 1e-14


# ---------------------------------------------------------------------------
# Weyl operators and the Heisenberg product


@pytest.mark.parametrize("norm_sq", [1.0, 2.0, 4.0])
def test_weyl_vacuum_coefficient(norm_sq):
    sp = ModeSpace(1, BOSONIC, cutoff=32)
    f = np.array([math.sqrt(norm_sq)], dtype=complex)
    W = weyl(sp, 0.0, f)
    val = W.apply(vacuum(sp)).inner(vacuum(sp))
    assert abs(val - math.exp(-norm_sq / 4.0)) < 1e-6


def test_weyl_relation_with_central_phase():
    # the composed displacement is about 1, so truncation error on the
    # low-degree block sits far below the tolerance at cutoff 32
    rng = np.random.default_rng(54)
    sp = ModeSpace(1, BOSONIC, cutoff=32)
    f1 = 0.5 * random_vec(rng, 1)
    f2 = 0.5 * random_vec(rng, 1)
    lhs = weyl(sp, 0.0, f1).compose(weyl(sp, 0.0, f2))
    phase = complex(np.exp(0.5j * omega(f1, f2)))
    rhs = phase * weyl(sp, 0.0, f1 + f2)
    assert (lhs - rhs).restricted_norm(8) < 1e-8


def test_heisenberg_product_and_inverse():
    rng = np.random.default_rng(55)
    a = (0.3, random_vec(rng, 2))
    b = (-0.1, random_vec(rng, 2))
    c = (0.7, random_vec(rng, 2))
    ab_c = heisenberg_mul(heisenberg_mul(a, b), c)
    a_bc = heisenberg_mul(a, heisenberg_mul(b, c))
    assert abs(ab_c[0] - a_bc[0]) < 1e-12
    assert np.linalg.norm(ab_c[1] - a_bc[1]) < 1e-12
    t, v = heisenberg_mul(a, heisenberg_inverse(a))
    assert abs(t) < 1e-14 and np.linalg.norm(v) < 1e-14


def test_heisenberg_central_example():
    e1 = np.array([1.0, 0.0])
    t, v = heisenberg_mul((0.0, e1), (0.0, 1j * e1))
    assert t == pytest.approx(-0.5, abs=1e-15)
    assert np.linalg.norm(v - (1 + 1j) * e1) < 1e-15


# ---------------------------------------------------------------------------
# Bogoliubov vacua


def squeeze_map(r):
    return RealLinearMap(np.array([[math.cosh(r)]]),
                         np.array([[math.sinh(r)]]))


@pytest.mark.parametrize("r", [0.25, 0.5, 1.0])
def test_squeeze_vacuum_matches_linear_solve_oracle(r):
    sp = ModeSpace(1, BOSONIC, cutoff=40)
    g = squeeze_map(r)
    c, F = vacuum_implementer(sp, g)
    c_oracle, F_oracle = truncated_vacuum_oracle(sp, g)
    assert abs(c - c_oracle) < 1e-6
    assert (F - F_oracle).norm() < 1e-6


@pytest.mark.parametrize("r", [0.25, 0.5, 1.0])
def test_squeeze_vacuum_overlap_closed_form(r):
    sp = ModeSpace(1, BOSONIC, cutoff=40)
    c, F = vacuum_implementer(sp, squeeze_map(r))
    assert abs(c - 1.0 / math.sqrt(math.cosh(r))) < 1e-6
    odd = F.degree_norms()[1::2]
    assert np.max(odd) < 1e-14


def test_squeeze_residual_decreases_geometrically():
    g = squeeze_map(math.atanh(0.5))
    residuals = []
    for n in (8, 16, 24, 32):
        sp = ModeSpace(1, BOSONIC, cutoff=n)
        _, F = vacuum_implementer(sp, g)
        residuals.append(float(np.max(vacuum_residuals(sp, g, F))))
    assert all(b <= 0.5 * a for a, b in zip(residuals, residuals[1:]))


def test_unitary_implements_bare_vacuum():
    rng = np.random.default_rng(56)
    sp = ModeSpace(1, BOSONIC, cutoff=8)
    u = RealLinearMap.from_linear(random_unitary(rng, 1))
    c, F = vacuum_implementer(sp, u)
    assert abs(c - 1.0) < 1e-12
    assert (F - vacuum(sp)).norm() < 1e-12


def test_two_mode_vacuum_residual():
    rng = np.random.default_rng(57)
    g = random_symplectic(rng, 2, scale=0.1)
    sp = ModeSpace(2, BOSONIC, cutoff=32)
    _, F = vacuum_implementer(sp, g)
    assert float(np.max(vacuum_residuals(sp, g, F))) < 1e-6


def test_vacuum_implementer_rejects_large_twist():
    bad = RealLinearMap(np.eye(1), 2.0 * np.eye(1))
    with pytest.raises(ValueError):
        vacuum_implementer(ModeSpace(1, BOSONIC, 8), bad)


# ---------------------------------------------------------------------------
# central terms of the metaplectic / spin cocycle


def test_central_term_matches_trace_formula():
    rng = np.random.default_rng(58)
    for stat, sampler in ((BOSONIC, random_sp_element),
                          (FERMIONIC, random_o_element)):
        sp = ModeSpace(2, stat, cutoff=6 if stat == BOSONIC else 2)
        for _ in range(25):
            x, y = sampler(rng, 2), sampler(rng, 2)
            got = central_term(sp, x, y)
            want = central_term_trace(sp, x, y)
            assert abs(got - want) < 1e-8


def test_central_term_antisymmetric():
    rng = np.random.default_rng(59)
    sp = ModeSpace(2, BOSONIC, cutoff=6)
    for _ in range(10):
        x, y = random_sp_element(rng, 2), random_sp_element(rng, 2)
        assert abs(central_term(sp, x, y) + central_term(sp, y, x)) < 1e-10


def test_central_term_is_lie_cocycle():
    rng = np.random.default_rng(60)
    sp = ModeSpace(2, BOSONIC, cutoff=6)
    for _ in range(10):
        x = random_sp_element(rng, 2)
        y = random_sp_element(rng, 2)
        z = random_sp_element(rng, 2)
        val = (central_term(sp, x.commutator(y), z)
               + central_term(sp, y.commutator(z), x)
               + central_term(sp, z.commutator(x), y))
        assert abs(val) < 1e-8


def test_central_term_vanishes_on_complex_linear_pairs():
    rng = np.random.default_rng(61)
    sp = ModeSpace(2, BOSONIC, cutoff=6)
    for _ in range(5):
        x = RealLinearMap.from_linear(0.5 * (lambda z: z - z.conj().T)(
            rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))))
        y = RealLinearMap.from_linear(0.5 * (lambda z: z - z.conj().T)(
            rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))))
        assert abs(central_term(sp, x, y)) < 1e-12


def test_rank_one_generator_central_term():
    rng = np.random.default_rng(62)
    sp = ModeSpace(3, FERMIONIC, cutoff=3)
    v, w = random_vec(rng, 3), random_vec(rng, 3)
    x = rank_one_generator(v, w)
    y = rank_one_generator(w, v)
    assert abs(central_term(sp, x, y) - central_term_trace(sp, x, y)) < 1e-12


# ---------------------------------------------------------------------------
# hat elements


@pytest.mark.parametrize("stat,d", [(BOSONIC, 2), (BOSONIC, 4),
                                    (FERMIONIC, 3), (FERMIONIC, 4)])
def test_hat_norm_identity(stat, d):
    rng = np.random.default_rng(63)
    sp = ModeSpace(d, stat, cutoff=4)
    for _ in range(25):
        M = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        M = M + M.T if stat == BOSONIC else M - M.T
        Ahat = hat_element(sp, M)
        assert abs(Ahat.norm() ** 2 - 0.5 * np.linalg.norm(M) ** 2) < 1e-10


@pytest.mark.parametrize("stat,d", [(BOSONIC, 3), (FERMIONIC, 4)])
def test_hat_pairing_half_trace(stat, d):
    rng = np.random.default_rng(64)
    sp = ModeSpace(d, stat, cutoff=4)
    sign = 1.0 if stat == BOSONIC else -1.0
    for _ in range(25):
        A = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        B = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        A = A + A.T if stat == BOSONIC else A - A.T
        B = B + B.T if stat == BOSONIC else B - B.T
        got = hat_pairing(sp, A, B)
        want = sign * 0.5 * np.trace(A @ np.conj(B))
        assert abs(got - want) < 1e-10


def test_second_quantized_antilinear_part_hits_vacuum_as_hat():
    # dpi of a purely antilinear generator sends the vacuum to minus the
    # hat vector of its coefficient matrix
    rng = np.random.default_rng(65)
    sp = ModeSpace(2, BOSONIC, cutoff=6)
    x = random_sp_element(rng, 2)
    x2 = RealLinearMap(np.zeros((2, 2)), x.G2)
    out = second_quantize(sp, x2).apply(vacuum(sp))
    assert (out + hat_element(sp, x.G2)).norm() < 1e-12


# ---------------------------------------------------------------------------
# quasi-free CAR twists


def test_quasifree_twist_satisfies_car():
    rng = np.random.default_rng(66)
    d = 3
    sp = ModeSpace(d, FERMIONIC, cutoff=d)
    q, _ = np.linalg.qr(rng.normal(size=(d, d)))
    mask = np.array([1.0, 0.0, 1.0])
    P = (q * mask) @ q.T
    gamma = (q * np.array([1.0, -1.0, 1.0])) @ q.T
    for _ in range(5):
        f, g = random_vec(rng, d), random_vec(rng, d)
        aPf = quasifree_twist(sp, P, gamma, f)
        aPg = quasifree_twist(sp, P, gamma, g)
        anti = aPf.anticommutator(aPg.adjoint())
        defect = anti - complex(inner(g, f)) * anti.identity(sp)
        assert defect.norm() < 1e-13
        assert aPf.anticommutator(aPg).norm() < 1e-13


def test_quasifree_twist_rejects_noncommuting_pair():
    sp = ModeSpace(2, FERMIONIC, cutoff=2)
    P = np.array([[1.0, 0.0], [0.0, 0.0]])
    gamma = np.array([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(ValueError):
        quasifree_twist(sp, P, gamma, np.array([1.0, 0.0]))


# ---------------------------------------------------------------------------
# embeddings and leak accounting


def test_embed_preserves_amplitudes():
    rng = np.random.default_rng(67)
    sp = ModeSpace(2, BOSONIC, cutoff=4)
    big = ModeSpace(2, BOSONIC, cutoff=7)
    v = random_fock_vector(rng, sp)
    w = embed(v, big)
    assert abs(v.norm() - w.norm()) < 1e-14
    assert abs(v.amplitude((1, 2)) - w.amplitude((1, 2))) < 1e-15


def test_create_records_leak_at_cutoff():
    sp = ModeSpace(1, BOSONIC, cutoff=3)
    op = create(sp, [1.0])
    assert op.leak > 0.0
    assert op.apply(basis_vector(sp, (3,))).norm() < 1e-14
