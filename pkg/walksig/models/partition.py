"""Ordered vertex partitions used by colour refinement."""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

import numpy as np


class Partition:
    """An ordered list of disjoint vertex cells covering ``0..n-1``."""

    __slots__ = ("_cells", "_n")

    def __init__(self, cells: Iterable[Iterable[int]]):
        cells = tuple(tuple(sorted(int(v) for v in cell)) for cell in cells)
        cells = tuple(cell for cell in cells if cell)
        members = sorted(v for cell in cells for v in cell)
        if members != list(range(len(members))):
            raise ValueError("cells must be disjoint and cover 0..n-1")
        self._cells = cells
        self._n = len(members)

    @classmethod
    def unit(cls, n: int) -> "Partition":
        return cls([range(n)])

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "Partition":
        """Cells ordered by colour value."""
        colors = np.asarray(colors)
        return cls([np.flatnonzero(colors == c).tolist() for c in np.unique(colors)])

    @property
    def cells(self) -> Tuple[Tuple[int, ...], ...]:
        return self._cells

    @property
    def n(self) -> int:
        return self._n

    def colors(self) -> np.ndarray:
        """Colour of each vertex: the index of its cell."""
        colors = np.empty(self._n, dtype=np.int64)
        for index, cell in enumerate(self._cells):
            colors[list(cell)] = index
        return colors

    def __len__(self) -> int:
        return len(self._cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._cells == other._cells

    def __hash__(self) -> int:
        return hash(self._cells)

    def __repr__(self) -> str:
        return f"Partition({[list(c) for c in self._cells]})"
