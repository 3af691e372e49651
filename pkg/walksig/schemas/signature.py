"""Characteristic-polynomial signatures."""

from typing import Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class CharPolySignature(BaseModel):
    """Canonical comparable form of a matrix spectrum.

    Coefficients are listed from the leading term down, so the first entry is
    always 1. Exact signatures carry integers; modular ones carry one residue
    list per prime of the fixed prime set.
    """

    degree: int
    mode: Literal["exact", "modular"]
    coefficients: Optional[Tuple[int, ...]] = None
    residues: Optional[Tuple[Tuple[int, Tuple[int, ...]], ...]] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_shape(self) -> "CharPolySignature":
        if self.mode == "exact":
            if self.coefficients is None or self.residues is not None:
                raise ValueError("exact signatures carry coefficients only")
            self._check_monic(self.coefficients)
        else:
            if self.residues is None or self.coefficients is not None:
                raise ValueError("modular signatures carry residues only")
            for prime, coefficients in self.residues:
                self._check_monic(coefficients, prime)
        return self

    def _check_monic(self, coefficients: Sequence[int], prime: Optional[int] = None) -> None:
        if len(coefficients) != self.degree + 1:
            raise ValueError(f"expected {self.degree + 1} coefficients, got {len(coefficients)}")
        leading = coefficients[0] % prime if prime else coefficients[0]
        if leading != 1:
            raise ValueError("characteristic polynomials are monic")

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.residues or ())

    def reduce(self, primes: Sequence[int]) -> "CharPolySignature":
        """Reduce an exact signature modulo each prime."""
        if self.mode != "exact":
            raise ValueError("only exact signatures can be reduced")
        return CharPolySignature(
            degree=self.degree,
            mode="modular",
            residues=tuple((p, tuple(c % p for c in self.coefficients)) for p in primes),
        )

    def serialize(self) -> str:
        """Stable ascii form ``degree:mode:payload``.

        Exact payload is ``c0,c1,...``; modular payload is
        ``prime=c0,c1,...;prime=...``.
        """
        if self.mode == "exact":
            payload = ",".join(str(c) for c in self.coefficients)
        else:
            payload = ";".join(
                f"{p}=" + ",".join(str(c) for c in coefficients)
                for p, coefficients in self.residues
            )
        return f"{self.degree}:{self.mode}:{payload}"

    @classmethod
    def parse(cls, text: str) -> "CharPolySignature":
        degree_text, mode, payload = text.strip().split(":", 2)
        degree = int(degree_text)
        if mode == "exact":
            return cls(
                degree=degree, mode="exact", coefficients=tuple(int(c) for c in payload.split(","))
            )
        if mode == "modular":
            residues = []
            for part in payload.split(";"):
                prime, coefficients = part.split("=", 1)
                residues.append((int(prime), tuple(int(c) for c in coefficients.split(","))))
            return cls(degree=degree, mode="modular", residues=tuple(residues))
        raise ValueError(f"unknown signature mode {mode!r}")

    def __str__(self) -> str:
        return self.serialize()
