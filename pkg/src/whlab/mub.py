"""Quadratic discrete Fourier bases and mutually unbiased sets."""
from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange


def quantize_phi(d: int, a: int) -> float:
    """phi = -pi (d-1) a / d for a = 0..d-1."""
    if d < 2:
        raise IndexOutOfRange("d must be at least 2")
    if not 0 <= a < d:
        raise IndexOutOfRange(f"a={a} outside 0..{d - 1}")
    return -math.pi * (d - 1) * a / d


@dataclass(frozen=True)
class QuantizedBasis:
    a: int
    d: int
    vectors: np.ndarray  # row m is |a m>

    @property
    def matrix(self) -> np.ndarray:
        """Basis vectors as columns."""
        return self.vectors.T


def quantized_basis(d: int, a: int) -> QuantizedBasis:
    """Vectors |a m> with amplitudes exp(i pi n(d-n) a/d + 2 pi i n m/d) / sqrt(d).

    Writing the quadratic part as exp(i pi ...) avoids picking a branch of
    q^(1/2) when d is even.
    """
    quantize_phi(d, a)
    n = np.arange(d)
    m = n[:, None]
    vecs = np.exp(1j * np.pi * n * (d - n) * a / d + 2j * np.pi * m * n / d) / math.sqrt(d)
    return QuantizedBasis(a, d, vecs)


def canonical_basis(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex)


def _rows(basis) -> np.ndarray:
    return np.asarray(getattr(basis, "vectors", basis))


def overlap_moduli(basis_a, basis_b) -> np.ndarray:
    """|<u|v>| for u in ``basis_a`` (rows), v in ``basis_b`` (rows)."""
    A, B = _rows(basis_a), _rows(basis_b)
    if A.shape[1] != B.shape[1]:
        raise DimensionMismatch(f"dimensions differ: {A.shape[1]} vs {B.shape[1]}")
    return np.abs(A.conj() @ B.T)


def unbiasedness(basis_a, basis_b) -> float:
    """max | |<u|v>| - 1/sqrt(d) | over all cross pairs."""
    mod = overlap_moduli(basis_a, basis_b)
    return float(np.max(np.abs(mod - 1.0 / math.sqrt(mod.shape[1]))))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for k in range(2, math.isqrt(n) + 1):
        if n % k == 0:
            return False
    return True


@dataclass
class MubReport:
    d: int
    prime: bool
    labels: list[str]
    pair_deviations: np.ndarray  # symmetric; diagonal left at 0
    tol: float
    bases: list[np.ndarray] = field(repr=False, default_factory=list)

    @property
    def complete(self) -> bool:
        return self.prime and self.max_deviation < self.tol

    @property
    def n_bases(self) -> int:
        return len(self.labels)

    @property
    def max_deviation(self) -> float:
        return float(np.max(self.pair_deviations))

    def pairs(self):
        return list(itertools.combinations(range(self.n_bases), 2))


def complete_mub_set(d: int, tol: float = 1e-10) -> MubReport:
    """Canonical basis plus the d quantized bases, checked pairwise.

    For composite d the deviations are recorded but completeness is never
    claimed.
    """
    if d < 2:
        raise IndexOutOfRange("d must be at least 2")
    bases = [canonical_basis(d)] + [quantized_basis(d, a).vectors for a in range(d)]
    labels = ["canonical"] + [f"a={a}" for a in range(d)]
    dev = np.zeros((d + 1, d + 1))
    for i, j in itertools.combinations(range(d + 1), 2):
        dev[i, j] = dev[j, i] = unbiasedness(bases[i], bases[j])
    return MubReport(d, is_prime(d), labels, dev, tol, bases)


def write_overlap_csv(report: MubReport, path) -> int:
    """Dump |<u|v>| for every unordered basis pair; returns the row count.

    ``row`` and ``col`` are global vector indices ``basis_index * d + k``.
    """
    d = report.d
    path = Path(path)
    rows = 0
    try:
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["row", "col", "modulus"])
            for i, j in report.pairs():
                mod = overlap_moduli(report.bases[i], report.bases[j])
                for u in range(d):
                    for v in range(d):
                        w.writerow([i * d + u, j * d + v, repr(float(mod[u, v]))])
                        rows += 1
    except OSError as exc:
        raise OSError(f"cannot write overlap CSV to {path}: {exc}") from exc
    return rows
