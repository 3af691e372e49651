"""Strongly regular graphs: detection, adjacency spectra and the direct
construction of S+(U(G)^3).

For an srg(n, k, r, s) the entry ``U^3[(i,j),(l,m)]`` depends only on how the
two arcs meet and on the adjacency of their endpoints. Every case value is a
multiple of ``1/k^3``, so the direct construction decides signs on integers:

    case  arcs                     k^3 * U^3
    A     i=m, j!=l                2[(k-2)^2 + 4(lam_jl - 1)]
    B     i=m, j=l                 2k^2 - k^3
    C     i=l, j!=m                4(2r - k A_jm)
    D     i=l, j=m                 8r
    E     i not in {l,m}, j=m      4(2r - k A_il)
    F     i not in {l,m}, j=l      0
    G     all four distinct        4(2 lam_jl - k(A_il + A_jm))

with ``lam_jl = s + (r - s) A_jl`` the number of common neighbours of j and l.
"""

import logging
from fractions import Fraction
from math import isqrt, sqrt
from typing import Optional, Tuple

import numpy as np

from walksig.core.errors import (
    GraphStructureError,
    SrgConditionOverlapError,
    SrgMismatchError,
    SrgSpectrumError,
)
from walksig.models.graph import Graph
from walksig.models.matrices import ArcSpace, BinaryMatrix, RationalMatrix
from walksig.schemas.srg import SrgParams, SrgSpectrum
from walksig.services.walk import MIN_WALK_DEGREE, arc_space

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]

CASES = ("A", "B", "C", "D", "E", "F", "G")


def detect_srg(g: Graph) -> Optional[SrgParams]:
    """Parameters (n, d, r, s) if ``g`` is strongly regular, else None.

    Complete and empty graphs are excluded.
    """
    if not g.is_regular():
        return None
    n = g.n
    d = int(g.degrees[0])
    if d == 0 or d == n - 1:
        return None
    adjacency = g.adjacency
    common = g.adjacency_matrix() @ g.adjacency_matrix()
    non_adjacent = ~adjacency & ~np.eye(n, dtype=bool)
    r_values = np.unique(common[adjacency])
    s_values = np.unique(common[non_adjacent])
    if r_values.size != 1 or s_values.size != 1:
        return None
    return SrgParams(n=n, d=d, r=int(r_values[0]), s=int(s_values[0]))


def srg_adjacency_spectrum(params: SrgParams) -> SrgSpectrum:
    """The eigenvalues d > e+ >= e- with multiplicities fixed by a zero trace."""
    n, d, r, s = params.as_tuple()
    delta = params.delta
    root = isqrt(delta)
    e_plus = (r - s + sqrt(delta)) / 2
    e_minus = (r - s - sqrt(delta)) / 2
    if root * root == delta:
        # m+ + m- = n - 1 and d + m+ e+ + m- e- = 0, with 2e+- = r - s +- root
        numerator = -2 * d - (n - 1) * (r - s - root)
        if numerator % (2 * root) == 0:
            m_plus = numerator // (2 * root)
            m_minus = n - 1 - m_plus
            if 0 <= m_plus <= n - 1:
                return SrgSpectrum(
                    d=d,
                    e_plus=e_plus,
                    e_minus=e_minus,
                    m_plus=m_plus,
                    m_minus=m_minus,
                    delta=delta,
                )
    # conference graphs: irrational eigenvalues with equal multiplicities
    if (n - 1) % 2 == 0 and 2 * d + (n - 1) * (r - s) == 0:
        half = (n - 1) // 2
        return SrgSpectrum(
            d=d,
            e_plus=e_plus,
            e_minus=e_minus,
            m_plus=half,
            m_minus=half,
            delta=delta,
            conference=True,
        )
    raise SrgSpectrumError(f"{params.label} has no integral eigenvalue multiplicities")


def _check_params(g: Graph, params: SrgParams) -> None:
    detected = detect_srg(g)
    if detected is None:
        raise SrgMismatchError("graph is not strongly regular")
    if detected != params:
        raise SrgMismatchError(f"graph is srg{detected.label}, not srg{params.label}")
    if params.d < MIN_WALK_DEGREE:
        raise GraphStructureError(
            f"degree {params.d} is below the required {MIN_WALK_DEGREE}"
        )


class _ArcPairs:
    """Broadcast views of every (row arc, column arc) pair over an arc space."""

    def __init__(self, g: Graph, space: ArcSpace):
        adjacency = g.adjacency_matrix()
        self.i = space.tails[:, None]
        self.j = space.heads[:, None]
        self.l = space.tails[None, :]
        self.m = space.heads[None, :]
        self.a_jl = adjacency[self.j, self.l]
        self.a_jm = adjacency[self.j, self.m]
        self.a_il = adjacency[self.i, self.l]

    def case_masks(self):
        i, j, l, m = self.i, self.j, self.l, self.m
        apart = (i != l) & (i != m)
        return {
            "A": (i == m) & (j != l),
            "B": (i == m) & (j == l),
            "C": (i == l) & (j != m),
            "D": (i == l) & (j == m),
            "E": apart & (j == m),
            "F": apart & (j == l),
            "G": apart & (j != l) & (j != m),
        }


def s_plus_u3_direct(g: Graph, params: SrgParams, strict_paper: bool = False) -> BinaryMatrix:
    """S+(U(G)^3) straight from the graph and its SRG parameters.

    Condition 3 (i=l, j=m) additionally requires r > 0 unless ``strict_paper``
    is set, in which case it is applied as an unconditional 1.
    """
    _check_params(g, params)
    _, k, r, s = params.as_tuple()
    space = arc_space(g)
    pairs = _ArcPairs(g, space)
    masks = pairs.case_masks()
    lam = s + (r - s) * pairs.a_jl

    conditions = [
        masks["A"] & (k * k - 4 * k + 4 * lam > 0),
        masks["C"] & (k * pairs.a_jm < 2 * r),
        masks["D"] & (r > 0 or strict_paper),
        masks["E"] & (k * pairs.a_il < 2 * r),
        masks["G"] & (2 * lam > k * (pairs.a_il + pairs.a_jm)),
    ]
    hits = np.zeros((len(space), len(space)), dtype=np.int64)
    for condition in conditions:
        hits += condition
    if hits.max(initial=0) > 1:
        rows, cols = np.nonzero(hits > 1)
        raise SrgConditionOverlapError(
            f"arc pair {space[int(rows[0])]}, {space[int(cols[0])]} satisfies two conditions"
        )
    logger.debug("direct S+(U^3) for srg%s: %d ones", params.label, int(hits.sum()))
    return BinaryMatrix(hits.astype(bool))


def classify_case(arc1: Arc, arc2: Arc) -> str:
    """Which of the cases A..G the arc pair ((i,j), (l,m)) falls into."""
    i, j = arc1
    l, m = arc2
    if i == m:
        return "B" if j == l else "A"
    if i == l:
        return "D" if j == m else "C"
    if j == m:
        return "E"
    if j == l:
        return "F"
    return "G"


def case_amplitude(g: Graph, params: SrgParams, arc1: Arc, arc2: Arc) -> Fraction:
    """``U(G)^3`` at ((i,j), (l,m)) from the case formulas."""
    space = arc_space(g)
    space.index(arc1)
    space.index(arc2)
    _, k, r, s = params.as_tuple()
    i, j = arc1
    l, m = arc2
    a_jl = int(g.has_edge(j, l))
    a_jm = int(g.has_edge(j, m))
    a_il = int(g.has_edge(i, l))
    lam = s + (r - s) * a_jl
    two_k = Fraction(2, k)
    four_k2 = Fraction(4, k * k)
    case = classify_case(arc1, arc2)
    if case == "A":
        return two_k * ((two_k - 1) ** 2 + four_k2 * (lam - 1))
    if case == "B":
        return two_k - 1
    if case == "C":
        return four_k2 * (Fraction(2 * r, k) - a_jm)
    if case == "D":
        return Fraction(8 * r, k**3)
    if case == "E":
        return four_k2 * (Fraction(2 * r, k) - a_il)
    if case == "F":
        return Fraction(0)
    return four_k2 * (two_k * lam - (a_il + a_jm))


def u3_case_matrix(g: Graph, params: SrgParams) -> RationalMatrix:
    """The whole of ``U(G)^3`` assembled from the case table, over ``k^3``."""
    _check_params(g, params)
    _, k, r, s = params.as_tuple()
    space = arc_space(g)
    pairs = _ArcPairs(g, space)
    masks = pairs.case_masks()
    lam = s + (r - s) * pairs.a_jl
    values = {
        "A": 2 * ((k - 2) ** 2 + 4 * (lam - 1)),
        "B": 2 * k * k - k**3,
        "C": 4 * (2 * r - k * pairs.a_jm),
        "D": 8 * r,
        "E": 4 * (2 * r - k * pairs.a_il),
        "F": 0,
        "G": 4 * (2 * lam - k * (pairs.a_il + pairs.a_jm)),
    }
    numerators = np.zeros((len(space), len(space)), dtype=np.int64)
    for case in CASES:
        numerators = np.where(masks[case], values[case], numerators)
    return RationalMatrix(numerators, k**3)
