"""Central extension of the circle's vector fields and its orbit geometry.

Elements are pairs x = (z, f dtheta) with z a central scalar and f a
truncated Fourier series; the bracket is

    [(z, f), (w, g)] = (omega(f, g), [f, g])

with omega(f, g) = int (f''' + f') g dtheta.  On the complexified
generators d_n = i e^{i n theta} d/dtheta this gives
[d_n, d_m] = (n - m) d_{n+m} + delta_{n,-m} 2 pi i (n^3 - n), so with the
normalized central element chat = (24 pi i, 0) the structure constants
take the textbook form (n - m) d_{n+m} + (n^3 - n)/12 delta chat.

Group-level actions use a circle diffeomorphism phi and the modified
Schwarzian Stilde = S(phi) + ((phi')^2 - 1)/2:

    adjoint:   Ad_phi (z, f)  = (z - int f . Stilde(phi^{-1}) dtheta, (f o phi) / phi')
    coadjoint: Ad*_phi (a, u) = (a, (u o phi) (phi')^2 - a Stilde(phi))

The dual pairing <(a, u), (z, f)> = a z + int u f dtheta is invariant
under the pair of actions, which pins down both signs.

Orbit data for fields with f > 0: the harmonic-mean functional
chi(f) = (1/2pi) int dtheta / f and the pair

    alpha = 1 / chi(f),
    beta  = z - int (f')^2 / (2 f) dtheta + (1/2) int f dtheta - pi / chi(f)

are constant along adjoint orbits.  The Cartan projection keeps (z, mean f);
on orbits through (beta + pi) c + alpha dtheta it moves into beta + pi + R+
and alpha + R+ respectively (the concavity facts behind the cone results).

Highest-weight side: Gram matrices of Verma modules at level <= 6 from
the commutation recursion

    [d_m, d_{-n}] = (m + n) d_{m-n} + delta_{m,n} (m^3 - m)/12 c,

computed in exact rational arithmetic when (c, h) are rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .circle import (
    CircleDiffeo,
    Density,
    FourierFunction,
    VectorField,
    derivative,
    flow,
    integrate,
    invert,
    lie_bracket,
    modified_schwarzian,
    omega_cocycle,
    pairing_integral,
    pullback_density,
    pullback_field,
    witt_generator,
)

MAX_VERMA_LEVEL = 6
CHI_MIN_GRID = 1024


@dataclass(frozen=True)
class VirasoroElement:
    """Pair (z, f dtheta): central scalar plus vector field.

    The scalar is stored as a complex number so that complexified
    generators can be bracketed; group-level operations expect real
    elements (real z, real f).
    """

    z: complex
    field: FourierFunction

    @classmethod
    def central(cls, z: complex, degree: int) -> "VirasoroElement":
        return cls(z, FourierFunction.zero(degree))

    @classmethod
    def cartan(cls, beta: float, alpha: float, degree: int) -> "VirasoroElement":
        """beta c + alpha dtheta."""
        return cls(beta, FourierFunction.constant(alpha, degree))

    def is_real(self, tol: float = 1e-12) -> bool:
        return abs(complex(self.z).imag) <= tol and self.field.is_real(tol)

    def __add__(self, other: "VirasoroElement") -> "VirasoroElement":
        return VirasoroElement(self.z + other.z, self.field + other.field)

    def __sub__(self, other: "VirasoroElement") -> "VirasoroElement":
        return VirasoroElement(self.z - other.z, self.field - other.field)

    def __mul__(self, t: complex) -> "VirasoroElement":
        return VirasoroElement(t * self.z, self.field * t)

    __rmul__ = __mul__


@dataclass(frozen=True)
class VirasoroFunctional:
    """Dual pair (a, u dtheta^2): central charge plus quadratic density."""

    a: float
    density: Density

    def __post_init__(self):
        if self.density.s != 2:
            raise ValueError("coadjoint vectors carry densities of weight 2")

    @property
    def u(self) -> FourierFunction:
        return self.density.u


@dataclass(frozen=True)
class CartanCoords:
    """Coordinates (beta, alpha) on the plane spanned by c and dtheta."""

    beta: float
    alpha: float


def generator(n: int, degree: int | None = None) -> VirasoroElement:
    """Complexified generator d_n = (0, i e^{i n theta} d/dtheta)."""
    return VirasoroElement(0.0, witt_generator(n, degree).f)


def normalized_central(degree: int) -> VirasoroElement:
    """chat = (24 pi i, 0), the central element dual to (n^3 - n)/12."""
    return VirasoroElement(24j * math.pi, FourierFunction.zero(degree))


# ---------------------------------------------------------------------------
# algebra level


def vir_bracket(x: VirasoroElement, y: VirasoroElement,
                degree: int | None = None) -> VirasoroElement:
    """[(z, f), (w, g)] = (omega(f, g), [f, g])."""
    X, Y = VectorField(x.field), VectorField(y.field)
    return VirasoroElement(omega_cocycle(X, Y), lie_bracket(X, Y, degree=degree).f)


def pairing(lam: VirasoroFunctional, x: VirasoroElement) -> complex:
    """<(a, u), (z, f)> = a z + int u f dtheta."""
    val = lam.a * x.z + pairing_integral(lam.u, x.field)
    if abs(val.imag) <= 1e-12 * max(1.0, abs(val.real)):
        return float(val.real)
    return val


# ---------------------------------------------------------------------------
# group level


def adjoint_action(phi: CircleDiffeo, x: VirasoroElement) -> VirasoroElement:
    """Ad_phi(z, f) = (z - int f Stilde(phi^{-1}) dtheta, (f o phi) / phi').

    The central shift uses the modified Schwarzian of the inverse; the
    field transforms as a density of weight -1.
    """
    stil = modified_schwarzian(invert(phi))
    shift = pairing_integral(x.field, stil)
    new_field = pullback_field(phi, VectorField(x.field)).f
    z = x.z - shift
    if abs(complex(z).imag) <= 1e-10 * max(1.0, abs(complex(z).real)):
        z = float(complex(z).real)
    return VirasoroElement(z, new_field)


def coadjoint_action(phi: CircleDiffeo,
                     lam: VirasoroFunctional) -> VirasoroFunctional:
    """Ad*_phi(a, u) = (a, (u o phi)(phi')^2 - a Stilde(phi))."""
    pulled = pullback_density(phi, lam.density).u
    stil = modified_schwarzian(phi)
    return VirasoroFunctional(lam.a, Density(pulled - stil * lam.a, 2))


# ---------------------------------------------------------------------------
# orbit invariants on the positive cone f > 0


def chi(x: VirasoroElement | FourierFunction,
        grid_size: int | None = None) -> float:
    """(1/2pi) int dtheta / f, evaluated by trapezoidal quadrature.

    For a trigonometric polynomial with min f > 0 the integrand is
    analytic in a strip, so the periodic trapezoid rule converges
    geometrically; the default grid is generous enough that the
    remaining error is far below 1e-12 unless f nearly touches zero.
    Raises ValueError when f is not real and positive on the grid.
    """
    f = x.field if isinstance(x, VirasoroElement) else x
    if not f.is_real(1e-9):
        raise ValueError("chi is defined for real fields only")
    M = grid_size if grid_size is not None else max(CHI_MIN_GRID, 8 * f.degree)
    vals = np.real(f.grid_values(M))
    if np.min(vals) <= 0.0:
        raise ValueError("chi requires f > 0 on the circle")
    return float(np.mean(1.0 / vals))


def orbit_invariants(x: VirasoroElement,
                     grid_size: int | None = None) -> CartanCoords:
    """The adjoint-invariant pair (beta, alpha) for elements with f > 0.

    alpha = 1/chi(f) and
    beta = z - int (f')^2/(2f) + (1/2) int f - pi/chi(f).
    """
    f = x.field
    if not x.is_real(1e-9):
        raise ValueError("orbit invariants are defined for real elements")
    M = grid_size if grid_size is not None else max(CHI_MIN_GRID, 8 * f.degree)
    fv = np.real(f.grid_values(M))
    if np.min(fv) <= 0.0:
        raise ValueError("orbit invariants require f > 0")
    dfv = np.real(derivative(f).grid_values(M))
    chi_val = float(np.mean(1.0 / fv))
    energy = 2.0 * math.pi * float(np.mean(dfv ** 2 / (2.0 * fv)))
    beta = (float(np.real(x.z)) - energy
            + 0.5 * float(np.real(integrate(f))) - math.pi / chi_val)
    return CartanCoords(beta=beta, alpha=1.0 / chi_val)


def cartan_projection(x: VirasoroElement) -> CartanCoords:
    """Orthogonal projection onto the (c, dtheta) plane: keep (z, mean f)."""
    return CartanCoords(beta=float(np.real(x.z)),
                        alpha=float(np.real(x.field.coeff(0))))


def beta_hessian_form(h: FourierFunction) -> float:
    """Quadratic form - int (h')^2 + int h^2 - (1/2pi)(int h)^2.

    This is the second variation of the beta invariant at the round
    element; it vanishes on constants and on cos/sin of frequency one
    and is strictly negative elsewhere (value 2 pi sum_{k!=0}
    (1 - k^2) |h_k|^2 for mean-zero h).
    """
    dh = derivative(h)
    num = pairing_integral(h, h) - pairing_integral(dh, dh)
    mean = integrate(h)
    val = num - (mean * mean) / (2.0 * math.pi)
    return float(np.real(val))


def convexity_check(x: VirasoroElement, trials: int,
                    rng: np.random.Generator,
                    degree: int = 48,
                    modes: int = 6,
                    amplitude: float = 0.15) -> dict:
    """Empirical check that Cartan projections of Ad_phi(x) dominate x.

    x must lie in the Cartan plane with positive dtheta component.  For
    each trial a random diffeomorphism is drawn and the projection of
    the transformed element is compared with (z, alpha); both margins
    should be nonnegative up to roundoff.
    """
    from .circle import random_diffeo

    alpha = float(np.real(x.field.coeff(0)))
    rest = max(abs(x.field.coeff(k)) for k in range(-x.field.degree, x.field.degree + 1) if k != 0) \
        if x.field.degree > 0 else 0.0
    if alpha <= 0.0 or rest > 1e-12 * max(1.0, alpha):
        raise ValueError("expected an element of the Cartan plane with alpha > 0")
    beta = float(np.real(x.z))
    beta_margins = np.empty(trials)
    alpha_margins = np.empty(trials)
    for t in range(trials):
        phi = random_diffeo(rng, degree=degree, modes=modes, amplitude=amplitude)
        proj = cartan_projection(adjoint_action(phi, x))
        beta_margins[t] = proj.beta - beta
        alpha_margins[t] = proj.alpha - alpha
    return {
        "trials": trials,
        "min_beta_margin": float(beta_margins.min()),
        "min_alpha_margin": float(alpha_margins.min()),
        "max_beta_margin": float(beta_margins.max()),
        "max_alpha_margin": float(alpha_margins.max()),
    }


def projection_curve(x: VirasoroElement, n: int,
                     s_values: Sequence[float],
                     degree: int | None = None) -> list[CartanCoords]:
    """Cartan projections of Ad along the flow of d_n - d_{-n}.

    The combination d_n - d_{-n} has field i e^{i n theta} - i e^{-i n theta}
    = -2 sin(n theta), which is real, so the flow stays inside the
    diffeomorphism group and no complexification is needed.  For x in
    the Cartan plane the resulting projections move along the ray of
    direction 2n(pi(n^2 - 1) c + dtheta) emanating from x.
    """
    deg = degree if degree is not None else max(48, x.field.degree)
    w = VectorField(FourierFunction.from_dict({n: 1j, -n: -1j}, degree=deg))
    out = []
    for s in s_values:
        phi = flow(w, float(s))
        out.append(cartan_projection(adjoint_action(phi, x)))
    return out


# ---------------------------------------------------------------------------
# Verma modules


@dataclass(frozen=True)
class VermaBasis:
    """PBW monomials d_{-n1} ... d_{-nk} v at a fixed level.

    Partitions are descending tuples summing to the level; by default
    all partitions of the level, in lexicographically decreasing order.
    """

    level: int
    c: Fraction | float
    h: Fraction | float
    partitions: tuple[tuple[int, ...], ...] = field(default=None)

    def __post_init__(self):
        if self.level < 0 or self.level > MAX_VERMA_LEVEL:
            raise ValueError(f"level must lie in 0..{MAX_VERMA_LEVEL}")
        if self.partitions is None:
            object.__setattr__(self, "partitions",
                               tuple(partitions_of(self.level)))
        else:
            parts = tuple(tuple(p) for p in self.partitions)
            for p in parts:
                if sum(p) != self.level or list(p) != sorted(p, reverse=True):
                    raise ValueError(f"{p} is not a descending partition of {self.level}")
            object.__setattr__(self, "partitions", parts)

    @property
    def exact(self) -> bool:
        return isinstance(self.c, (int, Fraction)) and isinstance(self.h, (int, Fraction))


def partitions_of(n: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    """Descending partitions of n, largest part first."""
    if n == 0:
        yield ()
        return
    top = n if largest is None else min(largest, n)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _accumulate(table: dict, mono: tuple[int, ...], coeff) -> None:
    table[mono] = table.get(mono, 0) + coeff


def _apply_generator(m: int, mono: tuple[int, ...], coeff,
                     out: dict, c, h) -> None:
    """Apply d_m to coeff * d_{-mono} v and accumulate PBW monomials.

    Uses [d_m, d_{-n}] = (m + n) d_{m-n} + delta_{m,n} (m^3 - m)/12 c
    together with d_m v = 0 for m > 0 and d_0 v = h v.
    """
    if coeff == 0:
        return
    if not mono:
        if m == 0:
            _accumulate(out, (), coeff * h)
        elif m < 0:
            _accumulate(out, (-m,), coeff)
        return
    head, rest = mono[0], mono[1:]
    if m < 0 and -m >= head:
        _accumulate(out, (-m,) + mono, coeff)
        return
    # d_m d_{-head} = d_{-head} d_m + (m + head) d_{m-head}
    #                 + delta_{m,head} (m^3 - m)/12 c
    inner: dict = {}
    _apply_generator(m, rest, coeff, inner, c, h)
    for mono2, coeff2 in inner.items():
        _apply_generator(-head, mono2, coeff2, out, c, h)
    if m + head != 0:
        _apply_generator(m - head, rest, coeff * (m + head), out, c, h)
    if m == head:
        central = (Fraction(m ** 3 - m, 12) if isinstance(c, (int, Fraction))
                   else (m ** 3 - m) / 12.0)
        _accumulate(out, rest, coeff * central * c)


def _gram_entry(mu: tuple[int, ...], nu: tuple[int, ...], c, h):
    """<d_{-mu} v, d_{-nu} v> via adjoint raising: apply d_{mu_1}, d_{mu_2}, ...
    (largest first) to the nu-monomial and read off the coefficient of v."""
    state = {nu: Fraction(1) if isinstance(c, (int, Fraction)) and isinstance(h, (int, Fraction)) else 1.0}
    for m in mu:
        nxt: dict = {}
        for mono, coeff in state.items():
            _apply_generator(m, mono, coeff, nxt, c, h)
        state = {k: v for k, v in nxt.items() if v != 0}
        if not state:
            return 0 if isinstance(c, (int, Fraction)) else 0.0
    return state.get((), 0 if isinstance(c, (int, Fraction)) else 0.0)


def verma_gram(basis: VermaBasis) -> np.ndarray:
    """Gram matrix of the PBW monomials of `basis`.

    Exact rational entries (dtype=object) when both c and h are
    rational; float entries otherwise.  The matrix is symmetric because
    the adjoint exchanges d_n and d_{-n}.
    """
    parts = basis.partitions
    k = len(parts)
    if basis.exact:
        G = np.empty((k, k), dtype=object)
        for i in range(k):
            for j in range(i, k):
                val = Fraction(_gram_entry(parts[i], parts[j], Fraction(basis.c), Fraction(basis.h)))
                G[i, j] = val
                G[j, i] = val
        return G
    G = np.empty((k, k), dtype=float)
    for i in range(k):
        for j in range(i, k):
            val = float(_gram_entry(parts[i], parts[j], float(basis.c), float(basis.h)))
            G[i, j] = val
            G[j, i] = val
    return G


def singleton_norm(n: int, c, h):
    """<d_{-n} v, d_{-n} v> = 2 n h + c (n^3 - n)/12."""
    if isinstance(c, (int, Fraction)) and isinstance(h, (int, Fraction)):
        return 2 * n * Fraction(h) + Fraction(c) * Fraction(n ** 3 - n, 12)
    return 2 * n * h + c * (n ** 3 - n) / 12.0


def unitarity_scan(c_values: Sequence[float], h_values: Sequence[float],
                   max_level: int, tol: float = 1e-9) -> dict:
    """Smallest Gram eigenvalue per level for each (c, h) on the grid.

    Returns a report keyed by (c, h) with the eigenvalue trace and the
    first level at which the Gram matrix fails to be positive
    semidefinite (None if all levels pass).
    """
    if max_level > MAX_VERMA_LEVEL:
        raise ValueError(f"max_level must be <= {MAX_VERMA_LEVEL}")
    report: dict = {}
    for c in c_values:
        for h in h_values:
            mins = []
            first_bad = None
            for level in range(1, max_level + 1):
                G = verma_gram(VermaBasis(level=level, c=float(c), h=float(h)))
                eigs = np.linalg.eigvalsh(G)
                mins.append(float(eigs[0]))
                if first_bad is None and eigs[0] < -tol * max(1.0, float(np.abs(G).max())):
                    first_bad = level
            report[(float(c), float(h))] = {
                "min_eigenvalue_by_level": mins,
                "first_negative_level": first_bad,
            }
    return report
