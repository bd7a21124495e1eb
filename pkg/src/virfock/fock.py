"""Truncated bosonic and fermionic Fock spaces over C^d.

Occupation basis states are unit vectors: bosonic |n_1..n_d> with
a*(e_i)|..n_i..> = sqrt(n_i + 1)|..n_i + 1..> and total particle number
capped at the cutoff N; fermionic states are subsets of modes with
Jordan-Wigner signs from the ordered wedge.  The bridge to unnormalized
symmetric tensors is the isometry e_i^{v n}/sqrt(n!) <-> |n>, which is
what makes ||e_1 v e_1|| = sqrt(2) come out right.

Inner products are linear in the FIRST argument.  Smearing follows the
same convention: a(f) = sum_i conj(f_i) a_i is antilinear in f while
a*(f) = sum_i f_i a*_i is linear, so [a(f), a*(g)] = <g, f> on the safe
subspace (total number <= N - 2) and {a(f), a*(g)} = <g, f> exactly.

Truncation policy: operations that would push amplitude above the
cutoff drop it and record the lost norm (the `leak` field on operators
built here and on vectors produced by the product routines).  The CAR
side is exact because the fermionic space is complete at dimension 2^d.

Quadratic elements x = x_1 + x_2 (linear plus antilinear part, stored as
a RealLinearMap) are second-quantized normally ordered,

    bosonic:   dpi(x) = sum X1_ij a*_i a_j - 1/2 sum X2_ij a*_i a*_j
                        + 1/2 sum conj(X2_ij) a_i a_j,
    fermionic: same with + on both pair terms,

which makes dpi(x) skew-adjoint, kills the vacuum expectation of the
linear part, and puts the whole central defect of [dpi(x), dpi(y)] -
dpi([x, y]) into the scalar i eta(x, y) coming from the antilinear
parts.  The companion `hat_element` realizes an (anti)symmetric
antilinear A as the degree-2 vector with <A-hat, f v g> = <A f, g>,
solved from the pairing equations and checked against the norm identity
||A-hat||^2 = 1/2 ||A||_HS^2; the two constructions are glued by
dpi(x_2) Omega = -x_2-hat.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from itertools import product as iter_product

import numpy as np
from scipy.linalg import expm

from .realmaps import (
    RealLinearMap,
    in_o,
    in_sp,
    inner,
    is_orthogonal,
    is_symplectic,
    omega,
    orthogonal_defect,
    symplectic_defect,
)

BOSONIC = "bosonic"
FERMIONIC = "fermionic"
PREDICATE_TOL = 1e-10


class ModeSpace:
    """Truncated Fock space over C^d with a fixed occupation basis.

    The basis is ordered by total particle number, ties broken
    lexicographically, so the vacuum always sits at index 0.
    """

    __slots__ = ("d", "statistics", "cutoff", "basis", "index", "dim", "totals")

    def __init__(self, d: int, statistics: str, cutoff: int | None = None):
        if d < 1:
            raise ValueError("need at least one mode")
        if statistics not in (BOSONIC, FERMIONIC):
            raise ValueError("statistics must be 'bosonic' or 'fermionic'")
        if statistics == BOSONIC:
            if cutoff is None or cutoff < 1:
                raise ValueError("bosonic spaces need a cutoff N >= 1")
        else:
            cutoff = d
        self.d = d
        self.statistics = statistics
        self.cutoff = int(cutoff)
        top = 1 if statistics == FERMIONIC else self.cutoff
        occs = [occ for occ in iter_product(range(top + 1), repeat=d)
                if sum(occ) <= self.cutoff]
        occs.sort(key=lambda occ: (sum(occ), occ))
        self.basis = tuple(occs)
        self.index = {occ: i for i, occ in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.totals = np.array([sum(occ) for occ in self.basis])

    def __repr__(self):
        return f"ModeSpace(d={self.d}, statistics={self.statistics!r}, cutoff={self.cutoff})"

    def __eq__(self, other):
        return (isinstance(other, ModeSpace)
                and (self.d, self.statistics, self.cutoff)
                == (other.d, other.statistics, other.cutoff))

    def __hash__(self):
        return hash((self.d, self.statistics, self.cutoff))


def _same_space(a: ModeSpace, b: ModeSpace) -> ModeSpace:
    if a != b:
        raise ValueError("mode spaces do not match")
    return a


@dataclass(frozen=True)
class FockVector:
    """Amplitude vector over the occupation basis of a ModeSpace."""

    space: ModeSpace
    amps: np.ndarray
    leak: float = 0.0

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex)
        if amps.shape != (self.space.dim,):
            raise ValueError("amplitude vector has the wrong length")
        object.__setattr__(self, "amps", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def inner(self, other: "FockVector") -> complex:
        _same_space(self.space, other.space)
        return complex(np.sum(self.amps * np.conj(other.amps)))

    def amplitude(self, occ) -> complex:
        return complex(self.amps[self.space.index[tuple(occ)]])

    def degree_component(self, n: int) -> "FockVector":
        mask = self.space.totals == n
        amps = np.where(mask, self.amps, 0.0)
        return FockVector(self.space, amps)

    def degree_norms(self) -> np.ndarray:
        """Norm of each fixed-particle-number component, index = degree."""
        out = np.zeros(self.space.cutoff + 1)
        for n in range(self.space.cutoff + 1):
            out[n] = float(np.linalg.norm(self.amps[self.space.totals == n]))
        return out

    def support(self, tol: float = 0.0) -> dict:
        return {occ: complex(a) for occ, a in zip(self.space.basis, self.amps)
                if abs(a) > tol}

    def normalized(self) -> "FockVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return FockVector(self.space, self.amps / n, self.leak / n)

    def __add__(self, other):
        _same_space(self.space, other.space)
        return FockVector(self.space, self.amps + other.amps,
                          self.leak + other.leak)

    def __sub__(self, other):
        _same_space(self.space, other.space)
        return FockVector(self.space, self.amps - other.amps,
                          self.leak + other.leak)

    def __mul__(self, t: complex):
        return FockVector(self.space, t * self.amps, abs(t) * self.leak)

    __rmul__ = __mul__

    def __neg__(self):
        return FockVector(self.space, -self.amps, self.leak)


def vacuum(space: ModeSpace) -> FockVector:
    amps = np.zeros(space.dim, dtype=complex)
    amps[space.index[(0,) * space.d]] = 1.0
    return FockVector(space, amps)


def basis_vector(space: ModeSpace, occ) -> FockVector:
    amps = np.zeros(space.dim, dtype=complex)
    amps[space.index[tuple(occ)]] = 1.0
    return FockVector(space, amps)


def mode_vector(space: ModeSpace, i: int) -> FockVector:
    """The one-particle state e_i."""
    occ = [0] * space.d
    occ[i] = 1
    return basis_vector(space, occ)


def random_fock_vector(rng: np.random.Generator, space: ModeSpace,
                       max_degree: int | None = None) -> FockVector:
    amps = rng.normal(size=space.dim) + 1j * rng.normal(size=space.dim)
    if max_degree is not None:
        amps = np.where(space.totals <= max_degree, amps, 0.0)
    v = FockVector(space, amps)
    return v.normalized()


@dataclass(frozen=True)
class FockOperator:
    """Dense matrix in the occupation basis, with truncation-leak record."""

    space: ModeSpace
    mat: np.ndarray
    leak: float = 0.0

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        if mat.shape != (self.space.dim, self.space.dim):
            raise ValueError("operator matrix has the wrong shape")
        object.__setattr__(self, "mat", mat)

    @classmethod
    def identity(cls, space: ModeSpace) -> "FockOperator":
        return cls(space, np.eye(space.dim))

    @classmethod
    def zero(cls, space: ModeSpace) -> "FockOperator":
        return cls(space, np.zeros((space.dim, space.dim)))

    def apply(self, v: FockVector) -> FockVector:
        _same_space(self.space, v.space)
        return FockVector(self.space, self.mat @ v.amps)

    def matrix_element(self, occ_out, occ_in) -> complex:
        return complex(self.mat[self.space.index[tuple(occ_out)],
                                self.space.index[tuple(occ_in)]])

    def adjoint(self) -> "FockOperator":
        return FockOperator(self.space, self.mat.conj().T, self.leak)

    def compose(self, other: "FockOperator") -> "FockOperator":
        _same_space(self.space, other.space)
        return FockOperator(self.space, self.mat @ other.mat,
                            self.leak + other.leak)

    def __matmul__(self, other):
        return self.compose(other)

    def commutator(self, other: "FockOperator") -> "FockOperator":
        return self.compose(other) - other.compose(self)

    def anticommutator(self, other: "FockOperator") -> "FockOperator":
        a = self.compose(other)
        b = other.compose(self)
        return FockOperator(self.space, a.mat + b.mat, a.leak + b.leak)

    def norm(self, kind: str = "fro") -> float:
        if kind == "fro":
            return float(np.linalg.norm(self.mat))
        return float(np.linalg.norm(self.mat, 2))

    def restricted_norm(self, max_degree: int, kind: str = "fro") -> float:
        """Norm of P A P with P the projection onto total number <= max_degree."""
        keep = self.space.totals <= max_degree
        block = self.mat[np.ix_(keep, keep)]
        if kind == "fro":
            return float(np.linalg.norm(block))
        return float(np.linalg.norm(block, 2))

    def __add__(self, other):
        _same_space(self.space, other.space)
        return FockOperator(self.space, self.mat + other.mat,
                            self.leak + other.leak)

    def __sub__(self, other):
        _same_space(self.space, other.space)
        return FockOperator(self.space, self.mat - other.mat,
                            self.leak + other.leak)

    def __mul__(self, t: complex):
        return FockOperator(self.space, t * self.mat, abs(t) * self.leak)

    __rmul__ = __mul__

    def __neg__(self):
        return FockOperator(self.space, -self.mat, self.leak)


# ---------------------------------------------------------------------------
# creation and annihilation


def _jw_sign(occ, i: int) -> int:
    """(-1)^(number of occupied modes below i)."""
    return -1 if sum(occ[:i]) % 2 else 1


def create(space: ModeSpace, f) -> FockOperator:
    """Smeared creator a*(f) = sum_i f_i a*_i (linear in f)."""
    f = np.asarray(f, dtype=complex)
    if f.shape != (space.d,):
        raise ValueError("smearing vector has the wrong dimension")
    mat = np.zeros((space.dim, space.dim), dtype=complex)
    dropped = 0.0
    for j, occ in enumerate(space.basis):
        total = sum(occ)
        for i in range(space.d):
            if f[i] == 0:
                continue
            if space.statistics == BOSONIC:
                if total + 1 > space.cutoff:
                    dropped += abs(math.sqrt(occ[i] + 1) * f[i]) ** 2
                    continue
                occ2 = occ[:i] + (occ[i] + 1,) + occ[i + 1:]
                mat[space.index[occ2], j] += math.sqrt(occ[i] + 1) * f[i]
            else:
                if occ[i] == 1:
                    continue
                occ2 = occ[:i] + (1,) + occ[i + 1:]
                mat[space.index[occ2], j] += _jw_sign(occ, i) * f[i]
    return FockOperator(space, mat, leak=math.sqrt(dropped))


def annihilate(space: ModeSpace, f) -> FockOperator:
    """Smeared annihilator a(f) = sum_i conj(f_i) a_i (antilinear in f)."""
    f = np.asarray(f, dtype=complex)
    if f.shape != (space.d,):
        raise ValueError("smearing vector has the wrong dimension")
    mat = np.zeros((space.dim, space.dim), dtype=complex)
    for j, occ in enumerate(space.basis):
        for i in range(space.d):
            if f[i] == 0 or occ[i] == 0:
                continue
            occ2 = occ[:i] + (occ[i] - 1,) + occ[i + 1:]
            if space.statistics == BOSONIC:
                mat[space.index[occ2], j] += math.sqrt(occ[i]) * np.conj(f[i])
            else:
                mat[space.index[occ2], j] += _jw_sign(occ, i) * np.conj(f[i])
    return FockOperator(space, mat)


def number_operator(space: ModeSpace) -> FockOperator:
    return FockOperator(space, np.diag(space.totals.astype(complex)))


def degree_projector(space: ModeSpace, max_degree: int) -> FockOperator:
    diag = (space.totals <= max_degree).astype(complex)
    return FockOperator(space, np.diag(diag))


def dgamma(space: ModeSpace, M) -> FockOperator:
    """Degree-preserving quadratic sum_{ij} M_ij a*_i a_j."""
    M = np.asarray(M, dtype=complex)
    if M.shape != (space.d, space.d):
        raise ValueError("coefficient matrix has the wrong shape")
    mat = np.zeros((space.dim, space.dim), dtype=complex)
    for j, occ in enumerate(space.basis):
        for i2 in range(space.d):
            if occ[i2] == 0:
                continue
            if space.statistics == BOSONIC:
                amp1 = math.sqrt(occ[i2])
                occ1 = occ[:i2] + (occ[i2] - 1,) + occ[i2 + 1:]
                for i1 in range(space.d):
                    if M[i1, i2] == 0:
                        continue
                    occ2 = occ1[:i1] + (occ1[i1] + 1,) + occ1[i1 + 1:]
                    amp = amp1 * math.sqrt(occ1[i1] + 1)
                    mat[space.index[occ2], j] += M[i1, i2] * amp
            else:
                s2 = _jw_sign(occ, i2)
                occ1 = occ[:i2] + (0,) + occ[i2 + 1:]
                for i1 in range(space.d):
                    if M[i1, i2] == 0 or occ1[i1] == 1:
                        continue
                    occ2 = occ1[:i1] + (1,) + occ1[i1 + 1:]
                    mat[space.index[occ2], j] += M[i1, i2] * s2 * _jw_sign(occ1, i1)
    return FockOperator(space, mat)


def _pair_creator(space: ModeSpace, M) -> FockOperator:
    """sum_{ij} M_ij a*_i a*_j, recording the truncation leak."""
    M = np.asarray(M, dtype=complex)
    mat = np.zeros((space.dim, space.dim), dtype=complex)
    dropped: dict = {}
    for j, occ in enumerate(space.basis):
        total = sum(occ)
        for i2 in range(space.d):
            if space.statistics == BOSONIC:
                occ1 = occ[:i2] + (occ[i2] + 1,) + occ[i2 + 1:]
                amp2 = math.sqrt(occ[i2] + 1)
                for i1 in range(space.d):
                    if M[i1, i2] == 0:
                        continue
                    amp = amp2 * math.sqrt(occ1[i1] + 1) * M[i1, i2]
                    occ2 = occ1[:i1] + (occ1[i1] + 1,) + occ1[i1 + 1:]
                    if total + 2 > space.cutoff:
                        dropped[(occ2, j)] = dropped.get((occ2, j), 0.0) + amp
                    else:
                        mat[space.index[occ2], j] += amp
            else:
                if occ[i2] == 1:
                    continue
                s2 = _jw_sign(occ, i2)
                occ1 = occ[:i2] + (1,) + occ[i2 + 1:]
                for i1 in range(space.d):
                    if M[i1, i2] == 0 or occ1[i1] == 1:
                        continue
                    occ2 = occ1[:i1] + (1,) + occ1[i1 + 1:]
                    mat[space.index[occ2], j] += M[i1, i2] * s2 * _jw_sign(occ1, i1)
    leak = math.sqrt(sum(abs(v) ** 2 for v in dropped.values()))
    return FockOperator(space, mat, leak=leak)


def _pair_annihilator(space: ModeSpace, M) -> FockOperator:
    """sum_{ij} M_ij a_i a_j."""
    M = np.asarray(M, dtype=complex)
    mat = np.zeros((space.dim, space.dim), dtype=complex)
    for j, occ in enumerate(space.basis):
        for i2 in range(space.d):
            if occ[i2] == 0:
                continue
            if space.statistics == BOSONIC:
                amp2 = math.sqrt(occ[i2])
                occ1 = occ[:i2] + (occ[i2] - 1,) + occ[i2 + 1:]
                for i1 in range(space.d):
                    if M[i1, i2] == 0 or occ1[i1] == 0:
                        continue
                    occ2 = occ1[:i1] + (occ1[i1] - 1,) + occ1[i1 + 1:]
                    mat[space.index[occ2], j] += M[i1, i2] * amp2 * math.sqrt(occ1[i1])
            else:
                s2 = _jw_sign(occ, i2)
                occ1 = occ[:i2] + (0,) + occ[i2 + 1:]
                for i1 in range(space.d):
                    if M[i1, i2] == 0 or occ1[i1] == 0:
                        continue
                    occ2 = occ1[:i1] + (0,) + occ1[i1 + 1:]
                    mat[space.index[occ2], j] += M[i1, i2] * s2 * _jw_sign(occ1, i1)
    return FockOperator(space, mat)


# ---------------------------------------------------------------------------
# Weyl operators and the Heisenberg product


def weyl(space: ModeSpace, t: float, f) -> FockOperator:
    """W(t, f) = e^{it} exp((i/sqrt2)(a(f) + a*(f))) on the truncation."""
    if space.statistics != BOSONIC:
        raise ValueError("Weyl operators live on the bosonic space")
    gen = annihilate(space, f) + create(space, f)
    mat = expm((1j / math.sqrt(2.0)) * gen.mat)
    return FockOperator(space, cmath.exp(1j * t) * mat, leak=gen.leak)


def heisenberg_mul(a: tuple, b: tuple) -> tuple:
    """(t, v)(t', v') = (t + t' + (1/2) Im<v, v'>, v + v')."""
    t, v = a
    s, w = b
    v = np.asarray(v, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return (float(t) + float(s) + 0.5 * omega(v, w), v + w)


def heisenberg_inverse(a: tuple) -> tuple:
    t, v = a
    return (-float(t), -np.asarray(v, dtype=complex))


def bogoliubov_transform(g: RealLinearMap, f) -> tuple[np.ndarray, np.ndarray]:
    """Components (g_1 f, g_2 f) of the transformed annihilator a_g(f):
    the linear image G1 f and the antilinear image G2 conj(f)."""
    f = np.asarray(f, dtype=complex)
    return g.G1 @ f, g.G2 @ np.conj(f)


# ---------------------------------------------------------------------------
# graded products


def symmetric_product(T: FockVector, S: FockVector) -> FockVector:
    """T v S in occupation coordinates.

    On basis states |mu> v |kappa> = sqrt(prod_i C(mu_i + kappa_i, mu_i))
    |mu + kappa>, extended bilinearly; amplitude pushed past the cutoff
    is dropped and recorded in the leak field.  Satisfies the norm bound
    ||T v S|| <= sqrt(C(n + m, n)) ||T|| ||S|| for homogeneous degrees.
    """
    space = _same_space(T.space, S.space)
    if space.statistics != BOSONIC:
        raise ValueError("symmetric product needs a bosonic space")
    out = np.zeros(space.dim, dtype=complex)
    dropped: dict = {}
    jt = np.nonzero(T.amps)[0]
    js = np.nonzero(S.amps)[0]
    for a in jt:
        occ_a = space.basis[a]
        amp_a = T.amps[a]
        for b in js:
            occ_b = space.basis[b]
            amp = amp_a * S.amps[b]
            mult = 1.0
            for i in range(space.d):
                mult *= math.comb(occ_a[i] + occ_b[i], occ_a[i])
            amp *= math.sqrt(mult)
            occ = tuple(occ_a[i] + occ_b[i] for i in range(space.d))
            if sum(occ) > space.cutoff:
                dropped[occ] = dropped.get(occ, 0.0) + amp
            else:
                out[space.index[occ]] += amp
    leak = math.sqrt(sum(abs(v) ** 2 for v in dropped.values()))
    return FockVector(space, out, leak=leak)


def exterior_product(T: FockVector, S: FockVector) -> FockVector:
    """T wedge S: merge disjoint subsets with the sorting sign."""
    space = _same_space(T.space, S.space)
    if space.statistics != FERMIONIC:
        raise ValueError("exterior product needs a fermionic space")
    out = np.zeros(space.dim, dtype=complex)
    jt = np.nonzero(T.amps)[0]
    js = np.nonzero(S.amps)[0]
    for a in jt:
        occ_a = space.basis[a]
        amp_a = T.amps[a]
        for b in js:
            occ_b = space.basis[b]
            if any(occ_a[i] and occ_b[i] for i in range(space.d)):
                continue
            # sign of the merge: count pairs (p in A, q in B) with q < p
            inversions = 0
            count_b = 0
            for i in range(space.d):
                if occ_a[i]:
                    inversions += count_b
                if occ_b[i]:
                    count_b += 1
            sign = -1 if inversions % 2 else 1
            occ = tuple(occ_a[i] + occ_b[i] for i in range(space.d))
            out[space.index[occ]] += sign * amp_a * S.amps[b]
    return FockVector(space, out)


def exp_vector(T: FockVector, max_terms: int | None = None) -> FockVector:
    """Exponential series sum_n T^{v n}/n! on the truncated space."""
    space = T.space
    if space.statistics != BOSONIC:
        raise ValueError("the exponential series needs a bosonic space")
    total = vacuum(space)
    term = vacuum(space)
    leak = 0.0
    n_max = max_terms if max_terms is not None else space.cutoff
    for n in range(1, n_max + 1):
        term = symmetric_product(term, (1.0 / n) * T)
        leak += term.leak
        if term.norm() == 0.0:
            break
        total = total + term
    return FockVector(space, total.amps, leak=leak)


# ---------------------------------------------------------------------------
# hat vectors and second quantization


def _antilinear_matrix(A) -> np.ndarray:
    if isinstance(A, RealLinearMap):
        if not A.is_antilinear(1e-12):
            raise ValueError("expected a purely antilinear map")
        return A.G2
    return np.asarray(A, dtype=complex)


def hat_element(space: ModeSpace, A) -> FockVector:
    """Degree-2 vector with <A-hat, f v g> = <A f, g> for all basis pairs.

    A is an antilinear map, given as a RealLinearMap with vanishing
    linear part or as its raw matrix M (action v -> M conj(v)); it must
    be hermitian (M symmetric) on a bosonic space and skew (M
    antisymmetric) on a fermionic one.  Coefficients are solved from the
    pairing equations, then the identity ||A-hat||^2 = 1/2 ||A||_HS^2 is
    asserted.
    """
    M = _antilinear_matrix(A)
    if M.shape != (space.d, space.d):
        raise ValueError("antilinear matrix has the wrong shape")
    scale = max(1.0, float(np.linalg.norm(M)))
    if space.statistics == BOSONIC:
        if np.linalg.norm(M - M.T) > 1e-10 * scale:
            raise ValueError("bosonic hat vectors need a symmetric matrix")
        if space.cutoff < 2:
            raise ValueError("cutoff must be at least 2")
    else:
        if np.linalg.norm(M + M.T) > 1e-10 * scale:
            raise ValueError("fermionic hat vectors need an antisymmetric matrix")
    amps = np.zeros(space.dim, dtype=complex)
    prod = symmetric_product if space.statistics == BOSONIC else exterior_product
    for i in range(space.d):
        start = i if space.statistics == BOSONIC else i + 1
        for j in range(start, space.d):
            pair = prod(mode_vector(space, i), mode_vector(space, j))
            nz = np.nonzero(pair.amps)[0]
            if nz.size != 1:
                raise ArithmeticError("basis pair is not a single occupation state")
            k = nz[0]
            target = complex(M[j, i])
            amps[k] = target / np.conj(pair.amps[k])
    vec = FockVector(space, amps)
    lhs = vec.norm() ** 2
    rhs = 0.5 * float(np.linalg.norm(M)) ** 2
    if abs(lhs - rhs) > 1e-10 * max(1.0, rhs):
        raise ArithmeticError("hat vector violates the norm identity")
    return vec


def hat_pairing(space: ModeSpace, A, B) -> complex:
    """Reference value for <A-hat, B-hat>: +(1/2) tr(A B) bosonic,
    -(1/2) tr(A B) fermionic, where A B has matrix M_A conj(M_B)."""
    MA = _antilinear_matrix(A)
    MB = _antilinear_matrix(B)
    sign = 0.5 if space.statistics == BOSONIC else -0.5
    return sign * complex(np.trace(MA @ np.conj(MB)))


def second_quantize(space: ModeSpace, x: RealLinearMap,
                    tol: float = 1e-8) -> FockOperator:
    """Normally ordered dpi(x) for x in sp (bosonic) or o (fermionic)."""
    if x.d != space.d:
        raise ValueError("dimension mismatch")
    if space.statistics == BOSONIC:
        if not in_sp(x, tol):
            raise ValueError("x is not in sp: need skew-hermitian linear and "
                             "symmetric antilinear part")
    else:
        if not in_o(x, tol):
            raise ValueError("x is not in o: need skew-hermitian linear and "
                             "antisymmetric antilinear part")
    op = dgamma(space, x.G1)
    if np.any(x.G2 != 0):
        if space.statistics == BOSONIC:
            op = op - 0.5 * _pair_creator(space, x.G2) \
                 + 0.5 * _pair_annihilator(space, np.conj(x.G2))
        else:
            op = op + 0.5 * _pair_creator(space, x.G2) \
                 + 0.5 * _pair_annihilator(space, np.conj(x.G2))
    return op


def central_term(space: ModeSpace, x: RealLinearMap, y: RealLinearMap) -> float:
    """eta(x, y) = <([dpi(x), dpi(y)] - dpi([x, y])) Omega, Omega> / i.

    Exact on truncations with cutoff >= 4 since only states of degree
    <= 4 enter the vacuum matrix element.
    """
    C = second_quantize(space, x).commutator(second_quantize(space, y)) \
        - second_quantize(space, x.commutator(y))
    val = complex(C.mat[0, 0]) / 1j
    return float(val.real)


def central_term_trace(space: ModeSpace, x: RealLinearMap,
                       y: RealLinearMap) -> float:
    """Closed form (1/2i) tr([x_2, y_2]) with the fermionic sign flip."""
    L = x.G2 @ np.conj(y.G2) - y.G2 @ np.conj(x.G2)
    val = complex(np.trace(L)) / 2j
    return float(val.real) if space.statistics == BOSONIC else -float(val.real)


def rank_one_generator(v, w) -> RealLinearMap:
    """Q_{v,w} = <., w> v - <., v> w, the skew rank-two element."""
    v = np.asarray(v, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return RealLinearMap.from_linear(np.outer(v, np.conj(w)) - np.outer(w, np.conj(v)))


# ---------------------------------------------------------------------------
# Bogoliubov vacua


def twist_matrix(g: RealLinearMap) -> np.ndarray:
    """Matrix of T(g) = g_2 g_1^{-1} (antilinear): G2 conj(G1)^{-1}."""
    return g.G2 @ np.linalg.inv(np.conj(g.G1))


def vacuum_implementer(space: ModeSpace,
                       g: RealLinearMap) -> tuple[float, FockVector]:
    """Normalized truncation of c(g) e^{-T-hat(g)} with c = norm^{-1}.

    Requires an invertible linear part and ||T(g)||_HS < 1.  The
    returned scalar is the vacuum overlap <F, Omega> = c(g) > 0.
    """
    if space.statistics != BOSONIC:
        raise ValueError("vacuum implementers are bosonic here")
    if g.d != space.d:
        raise ValueError("dimension mismatch")
    if abs(np.linalg.det(g.G1)) < 1e-12:
        raise ValueError("linear part g_1 is singular")
    T = twist_matrix(g)
    if np.linalg.norm(T) >= 1.0:
        raise ValueError("||T(g)|| >= 1: outside the convergence domain")
    that = hat_element(space, T)
    F = exp_vector(-that)
    c = 1.0 / F.norm()
    return c, FockVector(space, c * F.amps, leak=c * F.leak)


def embed(F: FockVector, bigger: ModeSpace) -> FockVector:
    """Copy amplitudes into a space with a larger cutoff."""
    if bigger.d != F.space.d or bigger.statistics != F.space.statistics:
        raise ValueError("spaces are not compatible")
    if bigger.cutoff < F.space.cutoff:
        raise ValueError("target cutoff is smaller")
    amps = np.zeros(bigger.dim, dtype=complex)
    for occ, a in zip(F.space.basis, F.amps):
        amps[bigger.index[occ]] = a
    return FockVector(bigger, amps, leak=F.leak)


def vacuum_residuals(space: ModeSpace, g: RealLinearMap,
                     F: FockVector) -> np.ndarray:
    """Norms of a(e_i) F + a*(T(g) e_i) F for each mode i.

    Measured after embedding F two levels higher, so the amplitude the
    creator pushes past the original cutoff counts as residual instead
    of being silently clipped; this is what decays geometrically in N.
    """
    T = twist_matrix(g)
    roomy = ModeSpace(space.d, BOSONIC, space.cutoff + 2)
    Fe = embed(F, roomy)
    out = np.zeros(space.d)
    for i in range(space.d):
        e = np.zeros(space.d)
        e[i] = 1.0
        op = annihilate(roomy, e) + create(roomy, T @ e)
        out[i] = op.apply(Fe).norm()
    return out


def truncated_vacuum_oracle(space: ModeSpace,
                            g: RealLinearMap) -> tuple[float, FockVector]:
    """Independent vacuum: smallest singular vector of the stacked
    system a(e_i) F + a*(T e_i) F = 0, normalized with positive vacuum
    overlap.  Returns (vacuum amplitude, F)."""
    T = twist_matrix(g)
    blocks = []
    for i in range(space.d):
        e = np.zeros(space.d)
        e[i] = 1.0
        op = annihilate(space, e) + create(space, T @ e)
        blocks.append(op.mat)
    K = np.vstack(blocks)
    _, _, vh = np.linalg.svd(K)
    F = vh[-1].conj()
    c0 = F[space.index[(0,) * space.d]]
    if abs(c0) < 1e-14:
        raise ArithmeticError("oracle vacuum has no vacuum component")
    F = F * (np.conj(c0) / abs(c0))
    F = F / np.linalg.norm(F)
    c = float(F[space.index[(0,) * space.d]].real)
    return c, FockVector(space, F)


# ---------------------------------------------------------------------------
# quasi-free twists


def quasifree_twist(space: ModeSpace, P, Gamma, f) -> FockOperator:
    """Twisted annihilator a_P(f) = a((1-P) f) + a*(Gamma P f).

    P must be an orthogonal projection, Gamma an antilinear isometric
    involution (matrix M with M conj(M) = 1 and M unitary) commuting
    with P; all predicates at tolerance 1e-10.
    """
    if space.statistics != FERMIONIC:
        raise ValueError("quasi-free twists act on the fermionic space")
    P = np.asarray(P, dtype=complex)
    G = _antilinear_matrix(Gamma)
    I = np.eye(space.d)
    if np.linalg.norm(P @ P - P) > PREDICATE_TOL or \
            np.linalg.norm(P - P.conj().T) > PREDICATE_TOL:
        raise ValueError("P is not an orthogonal projection")
    if np.linalg.norm(G @ np.conj(G) - I) > PREDICATE_TOL:
        raise ValueError("Gamma is not an involution")
    if np.linalg.norm(G.conj().T @ G - I) > PREDICATE_TOL:
        raise ValueError("Gamma is not isometric")
    if np.linalg.norm(G @ np.conj(P) - P @ G) > PREDICATE_TOL:
        raise ValueError("Gamma does not commute with P")
    f = np.asarray(f, dtype=complex)
    return annihilate(space, (I - P) @ f) + create(space, G @ np.conj(P @ f))


def charge_operator(space: ModeSpace, P) -> FockOperator:
    """Q = dGamma(1 - 2P), the charge grading of the P-twisted picture."""
    P = np.asarray(P, dtype=complex)
    return dgamma(space, np.eye(space.d) - 2.0 * P)
