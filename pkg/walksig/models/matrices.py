"""Arc spaces and the exact matrices indexed by them."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from walksig.core.errors import ArcNotFoundError

Arc = Tuple[int, int]

# int64 products are used only while every entry provably stays below this.
_INT64_SAFE = 2**62


class ArcSpace:
    """The 2m arcs of D_G in lexicographic (tail, head) order."""

    __slots__ = ("_arcs", "_index", "tails", "heads")

    def __init__(self, arcs: Iterable[Arc]):
        self._arcs: Tuple[Arc, ...] = tuple(sorted(arcs))
        self._index: Dict[Arc, int] = {arc: k for k, arc in enumerate(self._arcs)}
        self.tails = np.array([a[0] for a in self._arcs], dtype=np.int64)
        self.heads = np.array([a[1] for a in self._arcs], dtype=np.int64)
        self.tails.flags.writeable = False
        self.heads.flags.writeable = False

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        return self._arcs

    def index(self, arc: Arc) -> int:
        try:
            return self._index[tuple(arc)]
        except KeyError:
            raise ArcNotFoundError(f"{tuple(arc)} is not an arc") from None

    def __contains__(self, arc: object) -> bool:
        return arc in self._index

    def __len__(self) -> int:
        return len(self._arcs)

    def __iter__(self):
        return iter(self._arcs)

    def __getitem__(self, position: int) -> Arc:
        return self._arcs[position]

    def __repr__(self) -> str:
        return f"ArcSpace({len(self._arcs)} arcs)"


def _max_abs(values: np.ndarray) -> float:
    if values.size == 0:
        return 0.0
    return float(np.abs(values.astype(np.float64)).max())


def _max_row_abs_sum(values: np.ndarray) -> float:
    if values.size == 0:
        return 0.0
    return float(np.abs(values.astype(np.float64)).sum(axis=1).max())


def _fits_int64(values: np.ndarray) -> bool:
    return values.dtype == np.int64 or _max_abs(values) < _INT64_SAFE


class RationalMatrix:
    """A dense square matrix of exact rationals.

    Stored as an integer numerator matrix over one positive common
    denominator. Numerators live in int64 while the magnitudes allow it and in
    Python integers (object dtype) otherwise, so no entry is ever rounded.
    """

    __slots__ = ("_numerators", "_denominator")

    def __init__(self, numerators: np.ndarray, denominator: int = 1):
        numerators = np.asarray(numerators)
        if numerators.ndim != 2 or numerators.shape[0] != numerators.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {numerators.shape}")
        denominator = int(denominator)
        if denominator == 0:
            raise ZeroDivisionError("denominator must be non-zero")
        if denominator < 0:
            numerators, denominator = -numerators, -denominator
        if numerators.dtype != object:
            if not np.issubdtype(numerators.dtype, np.integer):
                raise TypeError("numerators must be integers")
            numerators = numerators.astype(np.int64)
        elif _fits_int64(numerators):
            numerators = numerators.astype(np.int64)
        numerators = numerators.copy()
        numerators.flags.writeable = False
        self._numerators = numerators
        self._denominator = denominator

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        """Build from nested rows of ints, Fractions or numeric strings."""
        fractions = [[Fraction(x) for x in row] for row in rows]
        denominator = 1
        for row in fractions:
            for x in row:
                denominator = denominator * x.denominator // gcd(denominator, x.denominator)
        numerators = np.array(
            [[int(x * denominator) for x in row] for row in fractions], dtype=object
        ).reshape(len(fractions), len(fractions))
        return cls(numerators, denominator)

    @classmethod
    def identity(cls, dimension: int) -> "RationalMatrix":
        return cls(np.eye(dimension, dtype=np.int64), 1)

    @classmethod
    def zeros(cls, dimension: int) -> "RationalMatrix":
        return cls(np.zeros((dimension, dimension), dtype=np.int64), 1)

    @property
    def dimension(self) -> int:
        return self._numerators.shape[0]

    @property
    def numerators(self) -> np.ndarray:
        return self._numerators

    @property
    def denominator(self) -> int:
        return self._denominator

    def entry(self, row: int, col: int) -> Fraction:
        return Fraction(int(self._numerators[row, col]), self._denominator)

    def to_fractions(self) -> List[List[Fraction]]:
        return [
            [Fraction(int(x), self._denominator) for x in row] for row in self._numerators
        ]

    def to_float(self) -> np.ndarray:
        return self._numerators.astype(np.float64) / float(self._denominator)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self._numerators.T, self._denominator)

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if other.dimension != self.dimension:
            raise ValueError("dimension mismatch")
        left, right = self._numerators, other.numerators
        bound = _max_row_abs_sum(left) * _max_abs(right)
        if bound < _INT64_SAFE:
            product = left.astype(np.int64) @ right.astype(np.int64)
        else:
            product = left.astype(object) @ right.astype(object)
        return RationalMatrix(product, self._denominator * other.denominator)

    def positive_mask(self) -> np.ndarray:
        return np.asarray(self._numerators > 0, dtype=bool)

    def nonzero_mask(self) -> np.ndarray:
        return np.asarray(self._numerators != 0, dtype=bool)

    def is_identity(self) -> bool:
        return self == RationalMatrix.identity(self.dimension)

    def with_entry(self, row: int, col: int, value) -> "RationalMatrix":
        """Return a copy with one entry replaced."""
        rows = self.to_fractions()
        rows[row][col] = Fraction(value)
        return RationalMatrix.from_rows(rows)

    def to_triplets(self) -> str:
        """Plain-text dump: one ``row col num/den`` line per non-zero entry."""
        lines = []
        rows, cols = np.nonzero(self.nonzero_mask())
        for r, c in zip(rows.tolist(), cols.tolist()):
            value = self.entry(r, c)
            lines.append(f"{r} {c} {value.numerator}/{value.denominator}")
        return "\n".join(lines)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if other.dimension != self.dimension:
            return False
        lhs = self._numerators.astype(object) * other.denominator
        rhs = other.numerators.astype(object) * self._denominator
        return bool(np.all(lhs == rhs))

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalMatrix({self.dimension}x{self.dimension}, denominator={self._denominator})"


class BinaryMatrix:
    """A square 0/1 matrix."""

    __slots__ = ("_data",)

    def __init__(self, data: np.ndarray):
        data = np.asarray(data)
        if data.ndim != 2 or data.shape[0] != data.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {data.shape}")
        if data.dtype == bool:
            data = data.astype(np.uint8)
        elif not np.isin(data, (0, 1)).all():
            raise ValueError("binary matrix entries must be 0 or 1")
        data = data.astype(np.uint8, copy=True)
        data.flags.writeable = False
        self._data = data

    @classmethod
    def ones(cls, dimension: int) -> "BinaryMatrix":
        return cls(np.ones((dimension, dimension), dtype=np.uint8))

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def dimension(self) -> int:
        return self._data.shape[0]

    def count(self) -> int:
        """Number of ones."""
        return int(self._data.sum(dtype=np.int64))

    def to_integer_array(self) -> np.ndarray:
        return self._data.astype(np.int64)

    def to_text(self) -> str:
        """Plain-text dump: one dense row of 0/1 digits per line."""
        return "\n".join("".join("1" if x else "0" for x in row) for row in self._data.tolist())

    def __getitem__(self, key):
        return self._data[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self._data.shape == other.data.shape and np.array_equal(self._data, other.data)

    def __hash__(self) -> int:
        return hash((self.dimension, np.packbits(self._data).tobytes()))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.dimension}x{self.dimension}, ones={self.count()})"
