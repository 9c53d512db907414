"""Generalized Weyl-Heisenberg algebra on a number basis.

The algebra is fixed by real parameters kappa_1..kappa_r through the
structure function

    F(n) = n * prod_i (1 + kappa_i (n - 1)),

and a reference phase ``phi``. All operators are dense complex ``numpy``
arrays; states are 1-d complex arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (DimensionMismatch, InvalidCase, InvalidSignPattern,
                     NonIntegerDimension, NotSingleParameter)
from .report import VerificationReport

FINITE = "finite"
TRUNCATED = "truncated"

SNAP_RTOL = 1e-12


def _snap_kappa1(k1: float) -> float:
    inv = -1.0 / k1
    n = round(inv)
    if n < 1 or abs(inv - n) > SNAP_RTOL * n:
        raise NonIntegerDimension(
            f"-1/kappa_1 = {inv!r} is not a positive integer")
    return -1.0 / n


@dataclass(frozen=True)
class AlgebraParams:
    """Deformation parameters and reference phase.

    Admissible patterns are all kappa_i >= 0 (infinite representation) or
    kappa_1 < 0 with the others >= 0 (finite representation). In the finite
    case kappa_1 is snapped onto -1/n when -1/kappa_1 is within a relative
    1e-12 of the integer n.
    """

    kappas: tuple[float, ...]
    phi: float = 0.0

    def __post_init__(self):
        ks = tuple(float(k) for k in self.kappas)
        if not ks:
            raise InvalidSignPattern("at least one kappa is required")
        if not all(math.isfinite(k) for k in ks) or not math.isfinite(self.phi):
            raise InvalidSignPattern("parameters must be finite reals")
        if any(k < 0 for k in ks[1:]):
            raise InvalidSignPattern(
                f"only kappa_1 may be negative, got {list(ks)}")
        if ks[0] < 0:
            ks = (_snap_kappa1(ks[0]),) + ks[1:]
        object.__setattr__(self, "kappas", ks)
        object.__setattr__(self, "phi", float(self.phi))

    @property
    def r(self) -> int:
        return len(self.kappas)

    @property
    def finite(self) -> bool:
        return self.kappas[0] < 0

    def with_phi(self, phi: float) -> AlgebraParams:
        return AlgebraParams(self.kappas, phi)


def params(*kappas: float, phi: float = 0.0) -> AlgebraParams:
    """Shorthand: ``params(-1/3, phi=0.2)``."""
    return AlgebraParams(tuple(kappas), phi)


@dataclass(frozen=True)
class FockSpace:
    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in (FINITE, TRUNCATED):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.size < 1:
            raise DimensionMismatch("space size must be positive")

    @property
    def labels(self) -> range:
        return range(self.size)

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE


def structure_function(p: AlgebraParams, n) -> float | np.ndarray:
    """F(n); accepts an integer or an integer array."""
    n_arr = np.asarray(n, dtype=float)
    out = n_arr.copy()
    for k in p.kappas:
        out = out * (1.0 + k * (n_arr - 1.0))
    if np.ndim(out) == 0:
        return float(out)
    return out


def dimension(p: AlgebraParams) -> int | None:
    """Dimension of the representation space; ``None`` means infinite."""
    if not p.finite:
        return None
    d = 1 + round(-1.0 / p.kappas[0])
    f = structure_function(p, np.arange(d + 1))
    # positivity pattern must cut off exactly at d
    if not (np.all(f[1:d] > 0) and f[d] == 0.0):
        raise NonIntegerDimension(f"structure function does not vanish at d={d}")
    return d


def fock_space(p: AlgebraParams, trunc: int | None = None) -> FockSpace:
    """Space matching ``p``: finite of size d, or truncated at ``trunc``."""
    d = dimension(p)
    if d is not None:
        if trunc is not None and trunc != d:
            raise DimensionMismatch(f"finite algebra has d={d}, got size {trunc}")
        return FockSpace(FINITE, d)
    if trunc is None:
        raise DimensionMismatch("infinite algebra requires a truncation order")
    if trunc < 2:
        raise DimensionMismatch("truncation order must be at least 2")
    return FockSpace(TRUNCATED, int(trunc))


def check_space(p: AlgebraParams, space: FockSpace) -> None:
    d = dimension(p)
    if d is not None:
        if space.kind != FINITE or space.size != d:
            raise DimensionMismatch(
                f"algebra is finite with d={d}, space is {space.kind} of size {space.size}")
    else:
        if space.kind != TRUNCATED:
            raise DimensionMismatch("infinite algebra needs a truncated space")
        if space.size < 2:
            raise DimensionMismatch("truncation order must be at least 2")


def f_values(p: AlgebraParams, space: FockSpace) -> np.ndarray:
    """F(0..size) (one extra entry so F(n+1) is available for every label)."""
    return structure_function(p, np.arange(space.size + 1))


def build_ladder_ops(p: AlgebraParams, space: FockSpace):
    """Return ``(a_minus, a_plus, number)`` on ``space``.

    a+|n> = sqrt(F(n+1)) exp(-i[F(n+1)-F(n)]phi) |n+1>, cut at the top label.
    a- is obtained as the exact conjugate transpose.
    """
    check_space(p, space)
    D = space.size
    f = f_values(p, space)
    n = np.arange(D - 1)
    a_plus = np.zeros((D, D), dtype=complex)
    a_plus[n + 1, n] = np.sqrt(f[n + 1]) * np.exp(-1j * (f[n + 1] - f[n]) * p.phi)
    a_minus = a_plus.conj().T.copy()
    number = np.diag(np.arange(D, dtype=float)).astype(complex)
    return a_minus, a_plus, number


def hamiltonian(p: AlgebraParams, space: FockSpace) -> np.ndarray:
    """H = F(N) as a diagonal matrix."""
    check_space(p, space)
    return np.diag(f_values(p, space)[:-1]).astype(complex)


def _maxabs(m) -> float:
    m = np.asarray(m)
    return float(np.max(np.abs(m))) if m.size else 0.0


def verify_algebra(p: AlgebraParams, space: FockSpace, tol: float = 1e-10) -> VerificationReport:
    """Check every defining relation; deviations are max-abs entry norms."""
    am, ap, N = build_ladder_ops(p, space)
    D = space.size
    f = f_values(p, space)
    rep = VerificationReport()

    comm = am @ ap - ap @ am
    target = np.diag(f[1:] - f[:-1])
    diff = comm - target
    if not space.is_finite:
        diff = diff[: D - 1, : D - 1]
    rep.add("commutator [a-,a+] = F(N+1)-F(N)", _maxabs(diff), tol,
            "stated: [a-,a+] = F(N+1) - F(N)")
    rep.add("[N,a+] = a+", _maxabs(N @ ap - ap @ N - ap), tol,
            "stated: [N,a+-] = +-a+-")
    rep.add("[N,a-] = -a-", _maxabs(N @ am - am @ N + am), tol,
            "stated: [N,a+-] = +-a+-")
    rep.add("a+a- = F(N)", _maxabs(ap @ am - np.diag(f[:-1])), tol,
            "stated: H = a+a- = F(N)")
    rep.add("adjoint a+ = (a-)^dagger", _maxabs(ap - am.conj().T), tol,
            "stated: a+ = (a-)^dagger")
    rep.add("hermitian N", _maxabs(N - N.conj().T), tol, "stated: N hermitian")
    if space.is_finite:
        rep.add("a+|d-1> = 0", _maxabs(ap[:, D - 1]), tol,
                "stated: a+|d-1> = 0")
        rep.add("(a-)^d = 0", _maxabs(np.linalg.matrix_power(am, D)), tol,
                "stated: (a-)^d = (a+)^d = 0")
        rep.add("(a+)^d = 0", _maxabs(np.linalg.matrix_power(ap, D)), tol,
                "stated: (a-)^d = (a+)^d = 0")
    return rep


@dataclass(frozen=True)
class ClassificationReport:
    algebra_label: str
    bargmann_k: float | None = None
    spin_j: float | None = None
    dimension: int | None = None


def classify(p: AlgebraParams) -> ClassificationReport:
    """Lie-algebraic type of the one-parameter algebra."""
    if p.r != 1:
        raise NotSingleParameter(f"classification needs r = 1, got r = {p.r}")
    k = p.kappas[0]
    d = dimension(p)
    if k == 0:
        return ClassificationReport("h4", dimension=d)
    if k > 0:
        return ClassificationReport("su_1_1", bargmann_k=1.0 / (2 * k), dimension=d)
    j = -1.0 / (2 * k)
    if d is None or abs(2 * j + 1 - d) > 1e-9:
        raise NonIntegerDimension(f"spin j={j} inconsistent with dimension {d}")
    return ClassificationReport("su_2", spin_j=j, dimension=d)


@dataclass(frozen=True)
class H0Params:
    """Hamiltonian H0 = a/2 N(N-1) + b N.

    Pass ``u`` and ``v`` for the Poschl-Teller case (a = 1) or ``ell`` for the
    Morse case (a = -1).
    """

    a: float
    b: float
    u: float | None = None
    v: float | None = None
    ell: int | None = None


def _validate_h0(h: H0Params) -> None:
    if not h.b > 0:
        raise InvalidCase("b must be positive")
    if (h.u is None) != (h.v is None):
        raise InvalidCase("u and v must be given together")
    if h.u is not None and h.ell is not None:
        raise InvalidCase("Poschl-Teller and Morse parameters are exclusive")
    if h.u is not None:
        if h.a != 1:
            raise InvalidCase("Poschl-Teller case requires a = 1")
        if not (h.u > 1 and h.v > 1):
            raise InvalidCase("Poschl-Teller case requires u > 1 and v > 1")
        if not math.isclose(2 * h.b, h.u + h.v + 1, rel_tol=1e-12):
            raise InvalidCase("Poschl-Teller case requires 2b = u + v + 1")
    if h.ell is not None:
        if h.a != -1:
            raise InvalidCase("Morse case requires a = -1")
        if int(h.ell) != h.ell or h.ell < 2:
            raise InvalidCase("Morse case requires an integer ell >= 2")
        if not math.isclose(2 * h.b, h.ell - 1, rel_tol=1e-12):
            raise InvalidCase("Morse case requires 2b = ell - 1")


def h0_from_ab(h: H0Params, trunc: int = 16, phi: float = 0.0):
    """Map (a, b) onto kappa = a/(2b) and build H0 on the implied space.

    Returns ``(params, H0)``; infinite cases are truncated at ``trunc``.
    """
    _validate_h0(h)
    try:
        p = AlgebraParams((h.a / (2.0 * h.b),), phi)
        d = dimension(p)
    except (InvalidSignPattern, NonIntegerDimension) as exc:
        raise InvalidCase(str(exc)) from exc
    space = fock_space(p, None if d is not None else trunc)
    n = np.arange(space.size, dtype=float)
    h0 = np.diag(0.5 * h.a * n * (n - 1) + h.b * n).astype(complex)
    return p, h0
