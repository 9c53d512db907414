"""Truncated polynomial ring C[theta]/(theta^dim).

A single nilpotent generator commutes with itself, so the ring is just
polynomials cut at degree ``dim - 1``.
"""
from __future__ import annotations

import numbers

import numpy as np


class GrassmannElement:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=complex).ravel()
        if c.size < 1:
            raise ValueError("need at least one coefficient")
        self.coeffs = c

    @classmethod
    def zero(cls, dim: int) -> GrassmannElement:
        return cls(np.zeros(dim))

    @classmethod
    def one(cls, dim: int) -> GrassmannElement:
        c = np.zeros(dim, dtype=complex)
        c[0] = 1
        return cls(c)

    @classmethod
    def theta(cls, dim: int, power: int = 1) -> GrassmannElement:
        c = np.zeros(dim, dtype=complex)
        if power < dim:
            c[power] = 1
        return cls(c)

    @classmethod
    def monomial(cls, dim: int, power: int, coeff: complex) -> GrassmannElement:
        c = np.zeros(dim, dtype=complex)
        if power < dim:
            c[power] = coeff
        return cls(c)

    @property
    def dim(self) -> int:
        return self.coeffs.size

    def _coerce(self, other) -> GrassmannElement:
        if isinstance(other, GrassmannElement):
            if other.dim != self.dim:
                raise ValueError(f"nilpotency orders differ: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, numbers.Number):
            return GrassmannElement.one(self.dim) * complex(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GrassmannElement(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(-self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GrassmannElement(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return GrassmannElement(self.coeffs * complex(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GrassmannElement(np.convolve(self.coeffs, other.coeffs)[: self.dim])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = GrassmannElement.one(self.dim)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.dim == other.dim and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def max_abs_diff(self, other: GrassmannElement) -> float:
        return float(np.max(np.abs(self.coeffs - other.coeffs)))

    def __repr__(self):
        return f"GrassmannElement({self.coeffs.tolist()!r})"


class GrassmannState:
    """Fock-space vector whose components are ring elements.

    Stored as a ``(size, dim)`` complex array: entry ``[n, k]`` is the
    coefficient of theta^k in component n.
    """

    def __init__(self, coeffs: np.ndarray):
        self.coeffs = np.array(coeffs, dtype=complex)
        if self.coeffs.ndim != 2:
            raise ValueError("expected a (size, dim) coefficient array")

    @classmethod
    def from_entries(cls, entries) -> GrassmannState:
        return cls(np.array([e.coeffs for e in entries]))

    @property
    def size(self) -> int:
        return self.coeffs.shape[0]

    @property
    def dim(self) -> int:
        return self.coeffs.shape[1]

    @property
    def entries(self) -> list[GrassmannElement]:
        return [GrassmannElement(row) for row in self.coeffs]

    def apply(self, op: np.ndarray) -> GrassmannState:
        """Act with a complex matrix on the Fock index."""
        return GrassmannState(op @ self.coeffs)

    def times(self, g: GrassmannElement) -> GrassmannState:
        """Multiply every component by ``g`` inside the ring."""
        return GrassmannState.from_entries([e * g for e in self.entries])
