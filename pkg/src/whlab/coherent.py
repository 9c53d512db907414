"""Coherent states of Klauder-Perelomov (type I) and Barut-Girardello (type II) kind.

Amplitudes of |n> are built by a running recurrence:

    type I :  c_n = c_{n-1} * z * sqrt(F(n)) / n      * e^{-i[F(n)-F(n-1)]phi}
    type II:  c_n = c_{n-1} * z / sqrt(F(n))          * e^{-i[F(n)-F(n-1)]phi}

with c_0 = 1, which reproduces sqrt(F(n)!)/n! z^n e^{-iF(n)phi} and
z^n e^{-iF(n)phi} / sqrt(F(n)!). States are left unnormalized.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import BGFiniteComplexUndefined, OutsideDomain, TypeIUndefined
from .fock import AlgebraParams, FockSpace, build_ladder_ops, check_space, structure_function
from .grassmann import GrassmannElement, GrassmannState

TYPE_I = "I"
TYPE_II = "II"

# hard stop for the tail estimate when the series converges slowly
_TAIL_MAX_TERMS = 100_000


@dataclass(frozen=True)
class CoherentState:
    flavor: str
    z: complex
    phi: float
    space: FockSpace
    vector: np.ndarray
    tail_bound: float = 0.0

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vector))


def _ratio(flavor: str, p: AlgebraParams, z: complex, n: int) -> complex:
    """c_n / c_{n-1}."""
    f_n = structure_function(p, n)
    f_prev = structure_function(p, n - 1)
    phase = np.exp(-1j * (f_n - f_prev) * p.phi)
    if flavor == TYPE_I:
        return z * math.sqrt(f_n) / n * phase
    return z / math.sqrt(f_n) * phase


def _amplitudes(flavor: str, p: AlgebraParams, z: complex, size: int) -> np.ndarray:
    c = np.zeros(size, dtype=complex)
    c[0] = 1.0
    for n in range(1, size):
        c[n] = c[n - 1] * _ratio(flavor, p, z, n)
    return c


def _tail_bound(flavor: str, p: AlgebraParams, z: complex, c: np.ndarray,
                tail_eps: float) -> float:
    """Bound on the norm of the terms n >= size that the truncation drops.

    Terms are summed until one falls below ``tail_eps`` times the running
    norm; the rest is bounded by a geometric series in the supremum of the
    remaining term ratios.
    """
    if z == 0:
        return 0.0
    norm2 = float(np.sum(np.abs(c) ** 2))
    term = abs(c[-1])
    tail2 = 0.0
    n = c.size
    for _ in range(_TAIL_MAX_TERMS):
        ratio = abs(_ratio(flavor, p, z, n))
        term *= ratio
        tail2 += term**2
        n += 1
        if term < tail_eps * math.sqrt(norm2 + tail2):
            # the ratio is monotone in n, so its supremum is the larger of the
            # current value and the n -> oo limit (sqrt(kappa)|z| for type I)
            next_ratio = abs(_ratio(flavor, p, z, n))
            if flavor == TYPE_I:
                next_ratio = max(next_ratio, math.sqrt(max(p.kappas[0], 0.0)) * abs(z))
            if next_ratio < 1:
                return math.sqrt(tail2 + term**2 * next_ratio**2 / (1 - next_ratio**2))
    return math.inf


def _check_type_i_domain(p: AlgebraParams, z: complex, space: FockSpace) -> None:
    if space.is_finite:
        return
    if p.r >= 2:
        raise TypeIUndefined(
            f"type I states on an infinite space need r = 1, got r = {p.r}")
    k = p.kappas[0]
    if k > 0 and abs(z) >= 1 / math.sqrt(k):
        raise OutsideDomain(f"|z| = {abs(z)} outside the radius 1/sqrt(kappa) = {1 / math.sqrt(k)}")


def kp_state(p: AlgebraParams, z: complex, space: FockSpace,
             tail_eps: float = 1e-16) -> CoherentState:
    """Type I state sum_n sqrt(F(n)!)/n! z^n e^{-iF(n)phi} |n>.

    On a truncated space only r = 1 is allowed and, for kappa > 0, the
    series radius is 1/sqrt(kappa).
    """
    check_space(p, space)
    z = complex(z)
    _check_type_i_domain(p, z, space)
    c = _amplitudes(TYPE_I, p, z, space.size)
    tail = 0.0 if space.is_finite else _tail_bound(TYPE_I, p, z, c, tail_eps)
    return CoherentState(TYPE_I, z, p.phi, space, c, tail)


def nilpotent_exp(A: np.ndarray, order: int) -> np.ndarray:
    """exp(A) = sum_{k < order} A^k / k! for A with A^order = 0."""
    out = np.eye(A.shape[0], dtype=complex)
    term = np.eye(A.shape[0], dtype=complex)
    for k in range(1, order):
        term = term @ A / k
        out = out + term
    return out


def kp_exponential_check(p: AlgebraParams, z: complex, space: FockSpace) -> float:
    """|| kp_state - exp(z a+)|0> ||.

    Finite spaces use the terminating nilpotent series; truncated spaces use
    ``scipy.linalg.expm`` and compare components 0..s-2.
    """
    state = kp_state(p, z, space)
    _, ap, _ = build_ladder_ops(p, space)
    if space.is_finite:
        U = nilpotent_exp(complex(z) * ap, space.size)
        return float(np.linalg.norm(state.vector - U[:, 0]))
    U = scipy.linalg.expm(complex(z) * ap)
    s = space.size
    return float(np.linalg.norm(state.vector[: s - 1] - U[: s - 1, 0]))


def bg_state(p: AlgebraParams, z: complex, space: FockSpace,
             tail_eps: float = 1e-16) -> CoherentState:
    """Type II state sum_n z^n e^{-iF(n)phi} / sqrt(F(n)!) |n>."""
    check_space(p, space)
    z = complex(z)
    if space.is_finite and z != 0:
        raise BGFiniteComplexUndefined(
            "no annihilation eigenstate with complex eigenvalue z != 0 in finite dimension")
    c = _amplitudes(TYPE_II, p, z, space.size)
    tail = 0.0 if space.is_finite else _tail_bound(TYPE_II, p, z, c, tail_eps)
    return CoherentState(TYPE_II, z, p.phi, space, c, tail)


def bg_eigen_check(p: AlgebraParams, state: CoherentState, z: complex | None = None) -> float:
    """|| a-|z> - z|z> || over components 0..s-2, relative to || |z> ||."""
    z = state.z if z is None else complex(z)
    am, _, _ = build_ladder_ops(p, state.space)
    v = state.vector
    r = (am @ v - z * v)[: state.space.size - 1]
    return float(np.linalg.norm(r) / np.linalg.norm(v))


@dataclass(frozen=True)
class NonexistenceCertificate:
    d: int
    nilpotent: bool
    power_max_abs: float
    null_space_dim: int
    sampled_z: tuple[complex, ...]
    min_residuals: tuple[float, ...]

    @property
    def min_residual(self) -> float:
        return min(self.min_residuals) if self.min_residuals else math.inf


def bg_finite_nonexistence(p: AlgebraParams, space: FockSpace, n_samples: int = 10,
                           seed: int = 42, z_radius=(1.0, 2.0)) -> NonexistenceCertificate:
    """Certify that a- has no eigenvector for z != 0 on a finite space.

    ``min_residuals`` holds min over unit v of ||(a- - zI) v||, i.e. the
    smallest singular value, for random z drawn from the annulus
    ``z_radius[0] <= |z| <= z_radius[1]``.
    """
    check_space(p, space)
    if not space.is_finite:
        raise ValueError("nonexistence certificate applies to finite spaces")
    d = space.size
    am, _, _ = build_ladder_ops(p, space)
    power = np.linalg.matrix_power(am, d)
    power_max = float(np.max(np.abs(power)))
    sv = np.linalg.svd(am, compute_uv=False)
    rank = int(np.sum(sv > 1e-12 * max(1.0, sv[0])))
    rng = np.random.default_rng(seed)
    lo, hi = z_radius
    zs = (rng.uniform(lo, hi, n_samples)
          * np.exp(1j * rng.uniform(-np.pi, np.pi, n_samples)))
    eye = np.eye(d)
    resid = tuple(float(np.linalg.svd(am - z * eye, compute_uv=False)[-1]) for z in zs)
    return NonexistenceCertificate(d, power_max == 0.0, power_max, d - rank,
                                   tuple(complex(z) for z in zs), resid)


def grassmann_bg_state(p: AlgebraParams, space: FockSpace) -> GrassmannState:
    """|theta, phi>: component n is e^{-iF(n)phi}/sqrt(F(n)!) theta^n, theta^size = 0."""
    check_space(p, space)
    # type II amplitudes at z = 1 are exactly the ring coefficients
    amp = _amplitudes(TYPE_II, p, 1.0, space.size)
    return GrassmannState(np.diag(amp))


def grassmann_eigen_check(p: AlgebraParams, state: GrassmannState) -> float:
    """max |coeff| of a-|theta> - theta |theta> over all components and powers."""
    space_size = state.size
    d = state.dim
    space = FockSpace("finite" if p.finite else "truncated", space_size)
    am, _, _ = build_ladder_ops(p, space)
    lhs = state.apply(am)
    rhs = state.times(GrassmannElement.theta(d))
    return float(np.max(np.abs(lhs.coeffs - rhs.coeffs))) if lhs.coeffs.size else 0.0
