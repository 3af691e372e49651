"""Strongly regular graph parameters and spectra."""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class SrgParams(BaseModel):
    """Parameters (n, d, r, s) of a strongly regular graph.

    ``d`` is the degree (also written k), ``r`` the number of common
    neighbours of adjacent pairs and ``s`` of non-adjacent pairs.
    """

    n: int
    d: int
    r: int
    s: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _feasible(self) -> "SrgParams":
        if not 0 < self.d < self.n - 1:
            raise ValueError(f"degree {self.d} excludes complete and empty graphs on {self.n}")
        if not 0 <= self.r <= self.d - 1:
            raise ValueError(f"r={self.r} outside [0, d-1]")
        if not 0 <= self.s <= self.d:
            raise ValueError(f"s={self.s} outside [0, d]")
        if self.d * (self.d - self.r - 1) != (self.n - self.d - 1) * self.s:
            raise ValueError(f"{self.label} violates d(d-r-1) = (n-d-1)s")
        return self

    @property
    def k(self) -> int:
        return self.d

    @property
    def delta(self) -> int:
        return (self.s - self.r) ** 2 + 4 * (self.d - self.s)

    @property
    def label(self) -> str:
        return f"({self.n},{self.d},{self.r},{self.s})"

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.n, self.d, self.r, self.s)

    def complement(self) -> "SrgParams":
        n, d, r, s = self.as_tuple()
        return SrgParams(n=n, d=n - d - 1, r=n - 2 - 2 * d + s, s=n - 2 * d + r)


class SrgSpectrum(BaseModel):
    """The three adjacency eigenvalues of an SRG with their multiplicities."""

    d: int
    e_plus: float
    e_minus: float
    m_plus: int
    m_minus: int
    delta: int
    conference: bool = False

    model_config = ConfigDict(frozen=True)

    def multiplicities(self) -> Tuple[Tuple[float, int], ...]:
        return ((float(self.d), 1), (self.e_plus, self.m_plus), (self.e_minus, self.m_minus))
