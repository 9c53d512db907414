"""Two degrees of freedom: a triangular Fock space for A_kappa(2).

The ladder action used here is

    a_i- |n1, n2> = sqrt(F_i(n1, n2)) |.., n_i - 1, ..>,
    F_i(n1, n2)  = n_i (1 + kappa (n1 + n2 - 1)),

which is our own choice of representation. It is trusted only as far as
:func:`verify_two_mode_algebra` confirms the defining relations.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidTruncation
from .report import VerificationReport

FINITE_TRIANGULAR = "finite_triangular"
TRUNCATED_TRIANGULAR = "truncated_triangular"


def _is_finite_kappa(kappa: float, jmax: int) -> bool:
    return kappa < 0 and abs(-1.0 / kappa - jmax) <= 1e-12 * max(jmax, 1)


@dataclass(frozen=True)
class TwoModeSpace:
    kind: str
    jmax: int

    def __post_init__(self):
        if self.kind not in (FINITE_TRIANGULAR, TRUNCATED_TRIANGULAR):
            raise ValueError(f"unknown two-mode space kind {self.kind!r}")
        if self.jmax < 0:
            raise DimensionMismatch("jmax must be nonnegative")

    @property
    def labels(self) -> list[tuple[int, int]]:
        """(n1, n2) with n1 + n2 <= jmax, n1 major."""
        return [(n1, n2) for n1 in range(self.jmax + 1)
                for n2 in range(self.jmax + 1 - n1)]

    @property
    def size(self) -> int:
        return (self.jmax + 1) * (self.jmax + 2) // 2

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE_TRIANGULAR


def two_mode_space(kappa: float, jmax: int | None = None) -> TwoModeSpace:
    """Finite space with jmax = -1/kappa for kappa < 0, else a cutoff at ``jmax``."""
    if kappa < 0:
        j = round(-1.0 / kappa)
        if j >= 1 and _is_finite_kappa(kappa, j):
            if jmax is not None and jmax != j:
                raise DimensionMismatch(f"kappa={kappa} fixes jmax={j}, got {jmax}")
            return TwoModeSpace(FINITE_TRIANGULAR, j)
    if jmax is None:
        raise DimensionMismatch("a cutoff jmax is required")
    return TwoModeSpace(TRUNCATED_TRIANGULAR, jmax)


@dataclass(frozen=True)
class TwoModeOps:
    a1_minus: np.ndarray
    a1_plus: np.ndarray
    a2_minus: np.ndarray
    a2_plus: np.ndarray
    n1: np.ndarray
    n2: np.ndarray
    space: TwoModeSpace

    def minus(self, i: int) -> np.ndarray:
        return (self.a1_minus, self.a2_minus)[i - 1]

    def plus(self, i: int) -> np.ndarray:
        return (self.a1_plus, self.a2_plus)[i - 1]

    def number(self, i: int) -> np.ndarray:
        return (self.n1, self.n2)[i - 1]


def two_mode_F(kappa: float, i: int, n1: int, n2: int) -> float:
    ni = n1 if i == 1 else n2
    return ni * (1.0 + kappa * (n1 + n2 - 1))


def build_two_mode_ops(kappa: float, space: TwoModeSpace) -> TwoModeOps:
    if space.is_finite != _is_finite_kappa(kappa, space.jmax):
        raise DimensionMismatch(
            f"space kind {space.kind} does not match kappa={kappa}, jmax={space.jmax}")
    labels = space.labels
    index = {lab: k for k, lab in enumerate(labels)}
    D = space.size
    ap = [np.zeros((D, D), dtype=complex) for _ in range(2)]
    for (n1, n2), col in index.items():
        for i in (1, 2):
            f = two_mode_F(kappa, i, n1, n2)
            if f < -1e-12:
                raise InvalidTruncation(f"F_{i}({n1},{n2}) = {f} < 0 inside the space")
            up = (n1 + 1, n2) if i == 1 else (n1, n2 + 1)
            row = index.get(up)
            if row is None:
                continue
            f_up = two_mode_F(kappa, i, *up)
            if f_up < -1e-12:
                raise InvalidTruncation(f"F_{i}{up} = {f_up} < 0 inside the space")
            ap[i - 1][row, col] = np.sqrt(max(f_up, 0.0))
    n1 = np.diag([float(a) for a, _ in labels]).astype(complex)
    n2 = np.diag([float(b) for _, b in labels]).astype(complex)
    return TwoModeOps(ap[0].conj().T.copy(), ap[0], ap[1].conj().T.copy(), ap[1],
                      n1, n2, space)


def _comm(a, b):
    return a @ b - b @ a


def verify_two_mode_algebra(ops: TwoModeOps, kappa: float,
                            tol: float = 1e-10) -> VerificationReport:
    """Max deviations of every relation of A_kappa(2).

    On a truncated space only columns with n1 + n2 <= jmax - 2 are compared,
    so no relation reaches past the cutoff.
    """
    space = ops.space
    D = space.size
    if space.is_finite:
        cols = np.arange(D)
    else:
        cols = np.array([k for k, (a, b) in enumerate(space.labels) if a + b <= space.jmax - 2],
                        dtype=int)

    def dev(m):
        m = m[:, cols]
        return float(np.max(np.abs(m))) if m.size else 0.0

    eye = np.eye(D)
    N1, N2 = ops.n1, ops.n2
    rep = VerificationReport()
    for i in (1, 2):
        am, ap, Ni = ops.minus(i), ops.plus(i), ops.number(i)
        rep.add(f"[a{i}-,a{i}+] = I + kappa(N1+N2+N{i})",
                dev(_comm(am, ap) - (eye + kappa * (N1 + N2 + Ni))), tol,
                "stated: [ai-,ai+] = I + kappa(N1+N2+Ni)")
        rep.add(f"adjoint a{i}+ = (a{i}-)^dagger", dev(ap - am.conj().T), tol,
                "stated: ai+ = (ai-)^dagger")
        rep.add(f"hermitian N{i}", dev(Ni - Ni.conj().T), tol, "stated: Ni hermitian")
    for s in ("+", "-"):
        get = (lambda i: ops.plus(i)) if s == "+" else (lambda i: ops.minus(i))
        rep.add(f"[a1{s},a2{s}] = 0", dev(_comm(get(1), get(2))), tol,
                "stated: [ai+-,aj+-] = 0")
    for i, j in itertools.product((1, 2), repeat=2):
        delta = 1.0 if i == j else 0.0
        Ni = ops.number(i)
        rep.add(f"[N{i},a{j}+] = delta a{i}+",
                dev(_comm(Ni, ops.plus(j)) - delta * ops.plus(i)), tol,
                "stated: [Ni,aj+-] = +-delta_ij ai+-")
        rep.add(f"[N{i},a{j}-] = -delta a{i}-",
                dev(_comm(Ni, ops.minus(j)) + delta * ops.minus(i)), tol,
                "stated: [Ni,aj+-] = +-delta_ij ai+-")
    for i, j in ((1, 2), (2, 1)):
        for s, t in (("+", "-"), ("-", "+")):
            ai = ops.plus(i) if s == "+" else ops.minus(i)
            aj = ops.minus(j) if t == "-" else ops.plus(j)
            rep.add(f"[a{i}{s},[a{i}{s},a{j}{t}]] = 0", dev(_comm(ai, _comm(ai, aj))), tol,
                    "stated: [ai+-,[ai+-,aj-+]] = 0, i != j")
    return rep


def boundary_annihilation(ops: TwoModeOps) -> float:
    """max |entry| of a_i+ acting on states with n1 + n2 = jmax."""
    cols = [k for k, (a, b) in enumerate(ops.space.labels) if a + b == ops.space.jmax]
    return float(max(np.max(np.abs(ops.a1_plus[:, cols])),
                     np.max(np.abs(ops.a2_plus[:, cols]))))


def classify_two_mode(kappa: float) -> str:
    if kappa == 0:
        return "h4xh4"
    return "su_2_1" if kappa > 0 else "su_3"
