"""Invariant matrices and their signatures."""

import logging
from typing import Optional

from walksig.core.cache import SignatureCache
from walksig.models.graph import Graph
from walksig.models.matrices import BinaryMatrix
from walksig.schemas.invariant import InvariantConfig
from walksig.schemas.signature import CharPolySignature
from walksig.services.graph_io import encode_graph6
from walksig.services.spectral import signature
from walksig.services.srg import detect_srg, s_plus_u3_direct
from walksig.services.walk import (
    MIN_WALK_DEGREE,
    adjacency_power_support,
    build_U,
    s_plus_power,
    support,
)

logger = logging.getLogger(__name__)


def _s_plus_cube(g: Graph, strict_paper: bool) -> BinaryMatrix:
    params = detect_srg(g)
    if params is not None and params.d >= MIN_WALK_DEGREE:
        logger.debug("srg%s detected, building S+(U^3) directly", params.label)
        return s_plus_u3_direct(g, params, strict_paper=strict_paper)
    return s_plus_power(g, 3)


def invariant_matrix(g: Graph, config: InvariantConfig) -> BinaryMatrix:
    """
    The 0/1 matrix whose spectrum is the invariant named by ``config.kind``.

    Args:
        g: Input graph
        config: Invariant selection; ``effective_power`` is used by the
            power-parameterised kinds

    Returns:
        Binary matrix over the vertex set (adjacency kinds) or the arc space
    """
    kind = config.kind
    p = config.effective_power
    if kind == "adjacency":
        return BinaryMatrix(g.adjacency)
    if kind == "adjacency-power-support":
        return adjacency_power_support(g, p)
    if kind == "support-u":
        return support(build_U(g))
    if kind in ("splus-u3", "splus-u-p") and p == 3:
        return _s_plus_cube(g, config.strict_paper)
    return s_plus_power(g, p)


class SignatureService:
    """Computes signatures for one invariant configuration, optionally cached."""

    def __init__(self, config: InvariantConfig, cache: Optional[SignatureCache] = None):
        self.config = config
        self.cache = cache

    def _descriptor(self, mode: str) -> str:
        primes = ",".join(str(p) for p in self.config.primes) if mode == "modular" else ""
        base = self.config.model_copy(update={"mode": mode}).descriptor()
        return f"{base}:{primes}" if primes else base

    def _key(self, g: Graph) -> str:
        return encode_graph6(g).decode("ascii")

    def lookup(self, g: Graph, mode: str) -> Optional[CharPolySignature]:
        if self.cache is None:
            return None
        cached = self.cache.get(self._key(g), self._descriptor(mode))
        return None if cached is None else CharPolySignature.parse(cached)

    def store(self, g: Graph, mode: str, result: CharPolySignature) -> None:
        if self.cache is not None:
            self.cache.put(self._key(g), self._descriptor(mode), result.serialize())

    def compute(self, g: Graph, mode: Optional[str] = None) -> CharPolySignature:
        """
        Signature of ``g`` under the configured invariant.

        Args:
            g: Input graph
            mode: Override of the configured signature mode

        Returns:
            Exact or modular characteristic-polynomial signature
        """
        mode = mode or self.config.mode
        cached = self.lookup(g, mode)
        if cached is not None:
            return cached
        matrix = invariant_matrix(g, self.config)
        result = signature(
            matrix, mode=mode, primes=self.config.primes, cutoff=self.config.exact_cutoff
        )
        self.store(g, mode, result)
        return result
