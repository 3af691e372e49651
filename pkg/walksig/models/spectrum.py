"""Multisets of complex eigenvalues."""

from __future__ import annotations

from typing import Iterable, List, Tuple

import numpy as np


class ComplexSpectrum:
    """A multiset of complex values, kept in lexicographic (real, imag) order."""

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[complex]):
        values = np.asarray(list(values) if not isinstance(values, np.ndarray) else values)
        values = values.astype(np.complex128).ravel()
        order = np.lexsort((values.imag, values.real))
        values = values[order]
        values.flags.writeable = False
        self._values = values

    @classmethod
    def from_multiplicities(cls, pairs: Iterable[Tuple[complex, int]]) -> "ComplexSpectrum":
        values: List[complex] = []
        for value, multiplicity in pairs:
            values.extend([complex(value)] * int(multiplicity))
        return cls(values)

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def real(self) -> np.ndarray:
        return self._values.real

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self):
        return iter(self._values.tolist())

    def conjugate(self) -> "ComplexSpectrum":
        return ComplexSpectrum(self._values.conj())

    def count_near(self, value: complex, tol: float) -> int:
        """Number of members within ``tol`` of ``value``."""
        return int((np.abs(self._values - value) <= tol).sum())

    def without_near(self, value: complex, count: int, tol: float) -> "ComplexSpectrum":
        """Drop up to ``count`` members closest to ``value`` (within ``tol``)."""
        distances = np.abs(self._values - value)
        order = np.argsort(distances, kind="stable")
        drop = [k for k in order[:count] if distances[k] <= tol]
        keep = np.ones(len(self._values), dtype=bool)
        keep[drop] = False
        return ComplexSpectrum(self._values[keep])

    def max_abs(self) -> float:
        return float(np.abs(self._values).max()) if len(self._values) else 0.0

    def __repr__(self) -> str:
        shown = ", ".join(f"{v:.6g}" for v in self._values[:8].tolist())
        more = ", ..." if len(self._values) > 8 else ""
        return f"ComplexSpectrum([{shown}{more}])"
