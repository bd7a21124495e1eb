"""Invariant cones and momentum maps for finite-dimensional sp(V, omega).

V = C^d carries omega(v, w) = Im<v, w> (inner product linear in the
first argument), and elements X of sp are real-linear maps for which
omega(Xv, w) is symmetric in (v, w).  In the real 2d x 2d picture,
omega has matrix W = [[0, -1], [1, 0]] and the symmetry condition says
X_r^T W is a symmetric matrix; the canonical open cone

    W_sp = { X in sp : H_X(v) = (1/2) omega(Xv, v) > 0 for v != 0 }

is the set where that symmetric matrix is positive definite.

Every cone element admits a unique commuting positive complex structure
J = (-A^2)^{-1/2} A, and writing J = I e^x with x = (1/2) log(J^T J)
produces a symplectic g = e^{-x/2} conjugating A into the unitary
subalgebra: g I g^{-1} = J, so A' = g^{-1} A g is complex-linear with
i A' negative definite.  (With Ad(g) = g . g^{-1}, that is
A' = Ad(g)^{-1} A; the x/2 in the exponent carries the opposite sign if
Ad is taken the other way around.)

The affine picture: quadratic Hamiltonians f(v) = c + omega(x, v) +
H_A(v) with A in the cone attain their minimum at -A^{-1}x with value
c - (1/2) omega(x, A^{-1}x).

The sl2 example uses the basis h = diag(1, -1), u = [[0,1],[-1,0]],
t = [[0,1],[1,0]] with the Lorentzian form beta(a, b) = -tr(ab),
signature (-2x^2 + 2y^2 - 2z^2): the invariant double cone is the
timelike region, split by the sign of the u-coordinate.

Momentum maps are sampled on projective space: for anti-hermitian x,
Phi([v])(x) = (1/i)<xv, v>/<v, v> = -i tr(x P_v), and the support
functional of the momentum set is the top eigenvalue of ix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .realmaps import (
    RealLinearMap,
    complex_to_real,
    in_sp,
    inner,
    is_symplectic,
    omega,
    real_matrix_of_i,
    real_to_complex,
)

CONE_EIG_MIN = 1e-10
MEMBERSHIP_TOL = 1e-10


def omega_matrix(X: RealLinearMap) -> np.ndarray:
    """Real 2d x 2d matrix of the bilinear form (v, w) -> omega(Xv, w)."""
    W = real_matrix_of_i(X.d)
    return X.to_real_matrix().T @ W


def sp_membership_defect(X: RealLinearMap) -> float:
    """Asymmetry of omega(Xv, w), zero exactly on sp."""
    M = omega_matrix(X)
    return float(np.linalg.norm(M - M.T))


@dataclass(frozen=True)
class SymplecticElement:
    """Element of sp(V, omega), validated on construction."""

    X: RealLinearMap

    def __post_init__(self):
        M = omega_matrix(self.X)
        scale = max(1.0, float(np.linalg.norm(M)))
        if np.linalg.norm(M - M.T) > MEMBERSHIP_TOL * scale:
            raise ValueError("omega(Xv, w) is not symmetric: X is not in sp")

    @property
    def d(self) -> int:
        return self.X.d


@dataclass(frozen=True)
class QuadraticState:
    """Datum (c, x, A) of the affine Hamiltonian c + omega(x, .) + H_A."""

    c: float
    x: np.ndarray
    A: SymplecticElement

    def __post_init__(self):
        x = np.asarray(self.x, dtype=complex)
        if x.shape != (self.A.d,):
            raise ValueError("linear term has the wrong dimension")
        object.__setattr__(self, "x", x)


@dataclass(frozen=True)
class Sl2Element:
    """Coordinates (x, y, z) in the basis h, u, t of sl2(R)."""

    x: float
    y: float
    z: float

    def coords(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


SL2_H = np.array([[1.0, 0.0], [0.0, -1.0]])
SL2_U = np.array([[0.0, 1.0], [-1.0, 0.0]])
SL2_T = np.array([[0.0, 1.0], [1.0, 0.0]])


def _as_sp(X) -> SymplecticElement:
    if isinstance(X, SymplecticElement):
        return X
    return SymplecticElement(X)


# ---------------------------------------------------------------------------
# Hamiltonians and the cone


def hamiltonian(X, v) -> float:
    """H_X(v) = (1/2) omega(Xv, v)."""
    Xs = _as_sp(X)
    v = np.asarray(v, dtype=complex)
    return 0.5 * omega(Xs.X.apply(v), v)


def in_cone_Wsp(X) -> bool:
    """True iff the symmetric matrix of omega(X., .) is positive definite."""
    Xs = _as_sp(X)
    M = omega_matrix(Xs.X)
    eigs = np.linalg.eigvalsh(0.5 * (M + M.T))
    return bool(eigs[0] > CONE_EIG_MIN)


def cone_margin(X) -> float:
    """Smallest eigenvalue of the Hamiltonian form; positive inside W_sp."""
    Xs = _as_sp(X)
    M = omega_matrix(Xs.X)
    return float(np.linalg.eigvalsh(0.5 * (M + M.T))[0])


def _sym_sqrt(S: np.ndarray, power: float) -> np.ndarray:
    """S^power for symmetric positive definite S, by eigendecomposition."""
    w, Q = np.linalg.eigh(0.5 * (S + S.T))
    if w[0] <= 0.0:
        raise ValueError("matrix is not positive definite")
    return (Q * (w ** power)) @ Q.T


def positive_complex_structure(A) -> RealLinearMap:
    """J = (-A^2)^{-1/2} A for A in the cone: J^2 = -1, [J, A] = 0,
    omega(Jv, v) > 0.

    Computed by the Newton iteration J <- (J - J^{-1})/2 with determinant
    scaling, started at the real matrix of A.  The eigenvalues of A come
    in pairs +-i lambda with lambda > 0, on which the scalar map
    z -> (z - 1/z)/2 converges quadratically to +-i.  Every iterate is a
    rational function of A, so it commutes with A, and every iterate
    stays Hamiltonian; a Hamiltonian square root of -1 is automatically
    symplectic, so the structure constraints survive the iteration
    instead of being rebuilt from an eigendecomposition chain.
    """
    As = _as_sp(A)
    if not in_cone_Wsp(As):
        raise ValueError("A is not in the open cone W_sp")
    J = As.X.to_real_matrix()
    n = J.shape[0]
    for _ in range(60):
        J = abs(np.linalg.det(J)) ** (-1.0 / n) * J
        Jn = 0.5 * (J - np.linalg.inv(J))
        delta = np.linalg.norm(Jn - J) / np.linalg.norm(Jn)
        J = Jn
        if delta < 1e-13:
            break
    J = 0.5 * (J - np.linalg.inv(J))
    W = real_matrix_of_i(As.d)
    M = J.T @ W
    J = W @ (0.5 * (M + M.T))
    return RealLinearMap.from_real_matrix(J)


def conjugate_to_unitary(A) -> tuple[RealLinearMap, RealLinearMap]:
    """Symplectic g with A' = g^{-1} A g complex-linear and i A' < 0.

    J = (-A^2)^{-1/2}A is written as I e^x with e^x = (J^T J)^{1/2};
    g = e^{-x/2} = (J^T J)^{-1/4} then satisfies g I g^{-1} = J, which
    is exactly the statement that conjugation by g straightens A onto
    the unitary subalgebra.
    """
    As = _as_sp(A)
    J = positive_complex_structure(As)
    Jr = J.to_real_matrix()
    S = Jr.T @ Jr
    g = RealLinearMap.from_real_matrix(_sym_sqrt(S, -0.25))
    ginv = RealLinearMap.from_real_matrix(_sym_sqrt(S, 0.25))
    Aprime = ginv.compose(As.X).compose(g)
    return g, Aprime


# ---------------------------------------------------------------------------
# affine minimization


def jacobi_value(q: QuadraticState, v) -> float:
    """f(v) = c + omega(x, v) + H_A(v)."""
    v = np.asarray(v, dtype=complex)
    return q.c + omega(q.x, v) + hamiltonian(q.A, v)


def jacobi_minimum(q: QuadraticState) -> tuple[np.ndarray, float]:
    """Global minimizer -A^{-1}x and value c - (1/2) omega(x, A^{-1}x)."""
    if not in_cone_Wsp(q.A):
        raise ValueError("quadratic part is not in the cone")
    Ar = q.A.X.to_real_matrix()
    u = np.linalg.solve(Ar, complex_to_real(q.x))
    invAx = real_to_complex(u)
    value = q.c - 0.5 * omega(q.x, invAx)
    return -invAx, float(value)


def heisenberg_translate(q: QuadraticState, w) -> QuadraticState:
    """Pull the state back along the phase-space translation v -> v + w.

    f(v + w) = [c + omega(x, w) + H_A(w)] + omega(x + Aw, v) + H_A(v),
    using omega(Aw, v) = omega(Av, w) twice; the minimum value is
    unchanged because the translation is a bijection.
    """
    w = np.asarray(w, dtype=complex)
    c = q.c + omega(q.x, w) + hamiltonian(q.A, w)
    x = q.x + q.A.X.apply(w)
    return QuadraticState(float(c), x, q.A)


# ---------------------------------------------------------------------------
# the sl2 Lorentz picture


def sl2_matrix(a: Sl2Element) -> np.ndarray:
    return a.x * SL2_H + a.y * SL2_U + a.z * SL2_T


def sl2_from_matrix(m) -> Sl2Element:
    m = np.asarray(m, dtype=float)
    return Sl2Element(x=0.5 * float(np.trace(m @ SL2_H)),
                      y=-0.5 * float(np.trace(m @ SL2_U)),
                      z=0.5 * float(np.trace(m @ SL2_T)))


def lorentz_form(a: Sl2Element, b: Sl2Element) -> float:
    """beta(a, b) = -tr(ab); diagonal values (-2, 2, -2) on (h, u, t)."""
    return -float(np.trace(sl2_matrix(a) @ sl2_matrix(b)))


def orbit_type(a: Sl2Element, tol: float = 1e-9) -> str:
    """One of timelike+/-, null+/-, spacelike, zero.

    Timelike means beta(a, a) > 0 (the u-axis is timelike here); the
    sign suffix is the sign of the u-coordinate, which is constant on
    connected orbits away from zero.
    """
    beta = lorentz_form(a, a)
    size = float(np.dot(a.coords(), a.coords()))
    if size <= tol:
        return "zero"
    scale = max(1.0, size)
    if beta > tol * scale:
        return "timelike+" if a.y > 0 else "timelike-"
    if beta < -tol * scale:
        return "spacelike"
    return "null+" if a.y > 0 else "null-"


def sl2_adjoint(g, a: Sl2Element) -> Sl2Element:
    """Ad(g) a = g a g^{-1} for g in SL(2, R)."""
    g = np.asarray(g, dtype=float)
    return sl2_from_matrix(g @ sl2_matrix(a) @ np.linalg.inv(g))


# ---------------------------------------------------------------------------
# momentum maps on projective space


def _check_antihermitian(x) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    if np.linalg.norm(x + x.conj().T) > 1e-10 * max(1.0, float(np.linalg.norm(x))):
        raise ValueError("expected an anti-hermitian matrix")
    return x


def momentum_map(x, v) -> float:
    """Phi([v])(x) = (1/i)<xv, v>/<v, v> for anti-hermitian x.

    The closed form -i tr(x P_v) with the rank-one projection P_v is
    evaluated as well and the two are required to agree.
    """
    x = _check_antihermitian(x)
    v = np.asarray(v, dtype=complex)
    nv2 = float(np.real(inner(v, v)))
    if nv2 <= 0.0:
        raise ValueError("momentum map needs a nonzero vector")
    val = complex(inner(x @ v, v)) / (1j * nv2)
    P = np.outer(v, np.conj(v)) / nv2
    alt = -1j * complex(np.trace(x @ P))
    if abs(val - alt) > 1e-10 * max(1.0, abs(val)):
        raise ArithmeticError("momentum map formulas disagree")
    return float(val.real)


def spectral_support(x) -> float:
    """sup Spec(ix): the support functional of the momentum set at x."""
    x = _check_antihermitian(x)
    return float(np.linalg.eigvalsh(1j * x)[-1])


def rayleigh_max_momentum(x, rng: np.random.Generator,
                          restarts: int = 8, max_iter: int = 20000) -> float:
    """max over [v] of Phi([v])(-x) by shifted power iteration from
    random starts; an eigensolver-free check of spectral_support.

    Each start iterates until the Rayleigh quotient stops moving (or the
    iteration cap is hit, which only happens for nearly degenerate top
    eigenvalues, where the quotient is flat anyway)."""
    x = _check_antihermitian(x)
    d = x.shape[0]
    H = 1j * x
    shift = float(np.linalg.norm(H)) + 1.0
    B = H + shift * np.eye(d)
    best = -math.inf
    for _ in range(restarts):
        v = rng.normal(size=d) + 1j * rng.normal(size=d)
        v = v / np.linalg.norm(v)
        q_prev = math.inf
        for _ in range(max_iter):
            v = B @ v
            v = v / np.linalg.norm(v)
            q = float(np.real(np.conj(v) @ (H @ v)))
            if abs(q - q_prev) <= 1e-15 * max(1.0, abs(q)):
                break
            q_prev = q
        best = max(best, momentum_map(-x, v))
    return best


# ---------------------------------------------------------------------------
# compatible complex structures for real skew forms


def compatible_complex_structure(A) -> np.ndarray:
    """Polar complex structure J = A (-A^2)^{-1/2} of an invertible real
    skew-symmetric A.

    With omega(v, w) = v^T A w this satisfies J^2 = -1,
    omega(Jv, v) = v^T (A^T A)^{1/2} v > 0, and J is orthogonal for the
    derived inner product g(v, w) = omega(Jv, w).
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("expected a square matrix")
    if np.linalg.norm(A + A.T) > 1e-10 * max(1.0, float(np.linalg.norm(A))):
        raise ValueError("expected a skew-symmetric matrix")
    S = A.T @ A
    w = np.linalg.eigvalsh(0.5 * (S + S.T))
    if w[0] <= 1e-14 * max(1.0, w[-1]):
        raise ValueError("expected an invertible matrix")
    return A @ _sym_sqrt(S, -0.5)


def derived_inner_product(A) -> np.ndarray:
    """Gram matrix of g(v, w) = omega(Jv, w) = v^T (A^T A)^{1/2} w."""
    A = np.asarray(A, dtype=float)
    return compatible_complex_structure(A).T @ A


# ---------------------------------------------------------------------------
# random cone elements


def random_cone_element(rng: np.random.Generator, d: int,
                        conjugate: bool = True,
                        scale: float = 0.3) -> SymplecticElement:
    """Random element of W_sp: a positively twisted multiple of I,
    optionally pushed around by a random symplectic conjugation.

    The conjugating map is exp of a scale-sized sp element.  Larger
    scales produce elements whose straightening conjugator g has
    condition number growing like e^(2 scale ||x||), and the roundtrip
    g^{-1} A g loses about cond(g)^2 digits in double precision, so the
    default keeps samples inside the regime where the postconditions of
    conjugate_to_unitary are resolvable to 1e-8.
    """
    from .realmaps import random_symplectic

    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    pos = z @ z.conj().T + (0.3 + rng.uniform()) * np.eye(d)
    D = RealLinearMap.from_linear(1j * pos)
    if not conjugate:
        return SymplecticElement(D)
    g = random_symplectic(rng, d, scale=scale)
    return SymplecticElement(g.compose(D).compose(g.inverse()))
