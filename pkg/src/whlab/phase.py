"""Phase operators and phase states.

``E`` is defined through a- = E sqrt(F(N)). On a truncated space the
non-unitary shift form is available together with the unitary wrap-around
form; on a finite space the unitary form E_d and the polynomial operator
G_d = a- + (a+)^(d-1) / F(d-1)! are available.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, InsufficientGrid, OutsideDomain
from .fock import (AlgebraParams, FockSpace, build_ladder_ops, check_space,
                   dimension, f_values, structure_function)


@dataclass(frozen=True)
class PhaseStateTheta:
    phi: float
    theta: float
    space: FockSpace
    vector: np.ndarray


@dataclass(frozen=True)
class PhaseStateM:
    phi: float
    m: int
    vector: np.ndarray


@dataclass(frozen=True)
class PhaseStateMu:
    phi: float
    mu: int
    c0: float
    vector: np.ndarray
    # c0 is picked per state to give unit norm
    normalization: str = "unit-norm"


def factorial_F(p: AlgebraParams, n: int) -> float:
    """F(n)! = F(1) F(2) ... F(n), with F(0)! = 1."""
    if n < 0:
        raise IndexOutOfRange("n must be nonnegative")
    d = dimension(p)
    if d is not None and n >= d:
        raise IndexOutOfRange(f"F(n)! vanishes for n >= d = {d}")
    return math.prod(structure_function(p, k) for k in range(1, n + 1))


def _factorials(p: AlgebraParams, size: int) -> np.ndarray:
    f = structure_function(p, np.arange(1, size))
    return np.concatenate(([1.0], np.cumprod(f)))


def _phase_diffs(p: AlgebraParams, space: FockSpace) -> tuple[np.ndarray, np.ndarray]:
    f = f_values(p, space)
    n = np.arange(1, space.size)
    return n, np.exp(1j * (f[n] - f[n - 1]) * p.phi)


def build_shift_phase_op(p: AlgebraParams, space: FockSpace) -> np.ndarray:
    """Non-unitary E on a truncated space: E|n> = e^{i[F(n)-F(n-1)]phi}|n-1>, E|0> = 0."""
    check_space(p, space)
    if space.is_finite:
        raise DimensionMismatch("shift phase operator lives on a truncated space")
    E = np.zeros((space.size, space.size), dtype=complex)
    n, ph = _phase_diffs(p, space)
    E[n - 1, n] = ph
    return E


def build_unitary_phase_op(p: AlgebraParams, space: FockSpace) -> np.ndarray:
    """Unitary E_D: the shift form closed by E|0> = e^{-iF(D-1)phi}|D-1>.

    On a finite space this is E_d; on a truncated space it is the
    wrap-around truncation with the same conventions.
    """
    check_space(p, space)
    D = space.size
    E = np.zeros((D, D), dtype=complex)
    n, ph = _phase_diffs(p, space)
    E[n - 1, n] = ph
    E[D - 1, 0] = np.exp(-1j * structure_function(p, D - 1) * p.phi)
    return E


def theta_phase_state(p: AlgebraParams, theta: float, space: FockSpace) -> PhaseStateTheta:
    """Unnormalized |phi, theta> truncated to ``space.size`` terms."""
    check_space(p, space)
    if not -math.pi <= theta <= math.pi:
        raise OutsideDomain(f"theta={theta} outside [-pi, pi]")
    n = np.arange(space.size)
    f = f_values(p, space)[:-1]
    vec = np.exp(-1j * f * p.phi) * np.exp(1j * n * theta)
    return PhaseStateTheta(p.phi, float(theta), space, vec)


def _dft_phases(p: AlgebraParams, label: int, space: FockSpace) -> np.ndarray:
    D = space.size
    if not 0 <= label < D:
        raise IndexOutOfRange(f"label {label} outside 0..{D - 1}")
    n = np.arange(D)
    f = f_values(p, space)[:-1]
    return np.exp(1j * (-f * p.phi + 2 * np.pi * label * n / D))


def m_phase_state(p: AlgebraParams, m: int, space: FockSpace) -> PhaseStateM:
    """Normalized eigenvector of the unitary phase operator, eigenvalue e^{2 pi i m/D}."""
    check_space(p, space)
    vec = _dft_phases(p, m, space) / math.sqrt(space.size)
    return PhaseStateM(p.phi, int(m), vec)


def build_G_op(p: AlgebraParams, space: FockSpace) -> np.ndarray:
    check_space(p, space)
    if not space.is_finite:
        raise DimensionMismatch("G_d is defined on a finite space only")
    d = space.size
    am, ap, _ = build_ladder_ops(p, space)
    return am + np.linalg.matrix_power(ap, d - 1) / factorial_F(p, d - 1)


def mu_phase_state(p: AlgebraParams, mu: int, space: FockSpace) -> PhaseStateMu:
    """Eigenvector of G_d with eigenvalue e^{2 pi i mu/d}, scaled to unit norm."""
    check_space(p, space)
    if not space.is_finite:
        raise DimensionMismatch("mu phase states are defined on a finite space only")
    weights = 1.0 / np.sqrt(_factorials(p, space.size))
    c0 = 1.0 / math.sqrt(float(np.sum(weights**2)))
    vec = c0 * weights * _dft_phases(p, mu, space)
    return PhaseStateMu(p.phi, int(mu), c0, vec)


def time_evolution(p: AlgebraParams, space: FockSpace, t: float) -> np.ndarray:
    """U(t) = exp(-i H t) with H = F(N)."""
    check_space(p, space)
    f = f_values(p, space)[:-1]
    return np.diag(np.exp(-1j * f * t))


def closure_theta(p: AlgebraParams, space: FockSpace, grid_points: int) -> float:
    """Max-entry deviation of the trapezoid integral of |phi,theta><phi,theta| from 2 pi I.

    The grid is uniform on [-pi, pi] with both endpoints included.
    """
    check_space(p, space)
    s = space.size
    if grid_points < 2 * s + 1:
        raise InsufficientGrid(f"need at least {2 * s + 1} grid points, got {grid_points}")
    thetas = np.linspace(-np.pi, np.pi, grid_points)
    h = thetas[1] - thetas[0]
    w = np.full(grid_points, h)
    w[0] = w[-1] = h / 2
    V = np.array([theta_phase_state(p, th, space).vector for th in thetas])
    integral = (V.T * w) @ V.conj()
    return float(np.max(np.abs(integral - 2 * np.pi * np.eye(s))))


def closure_m(p: AlgebraParams, space: FockSpace) -> float:
    """Max-entry deviation of sum_m |phi,m><phi,m| from the identity."""
    check_space(p, space)
    V = np.array([m_phase_state(p, m, space).vector for m in range(space.size)])
    return float(np.max(np.abs(V.T @ V.conj() - np.eye(space.size))))


def m_state_matrix(p: AlgebraParams, space: FockSpace) -> np.ndarray:
    """Columns are |phi, m> for m = 0..D-1."""
    return np.array([m_phase_state(p, m, space).vector for m in range(space.size)]).T


def mu_state_matrix(p: AlgebraParams, space: FockSpace) -> np.ndarray:
    """Columns are |phi, mu> for mu = 0..d-1."""
    return np.array([mu_phase_state(p, mu, space).vector for mu in range(space.size)]).T
