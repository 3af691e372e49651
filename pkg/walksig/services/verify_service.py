"""Property suite behind the ``verify`` command.

Every check takes the matrices it inspects as optional arguments so that a
caller can hand in a corrupted matrix and watch the check fail.
"""

import logging
from typing import Callable, List, Optional, Sequence

import numpy as np

from walksig.core.config import DEFAULT_PRIMES, DEFAULT_TOLERANCE, EXACT_CUTOFF, RANDOM_SEED
from walksig.core.errors import NotRegularError, WalksigError
from walksig.models.graph import Graph, GraphFamily
from walksig.models.matrices import BinaryMatrix, RationalMatrix
from walksig.models.spectrum import ComplexSpectrum
from walksig.schemas.invariant import InvariantConfig
from walksig.schemas.srg import SrgParams
from walksig.schemas.verify import CheckResult, Observation, VerifyLedger
from walksig.services import fixtures
from walksig.services.scan_service import ScanService
from walksig.services.spectral import (
    charpoly_exact,
    eig_float,
    ihara_split,
    multiset_eq,
    signature,
    spectrum_from_T,
    splus_u2_spectrum_closed,
    splus_u_spectrum_closed,
)
from walksig.services.srg import (
    CASES,
    case_amplitude,
    classify_case,
    detect_srg,
    s_plus_u3_direct,
    srg_adjacency_spectrum,
    u3_case_matrix,
)
from walksig.services.walk import (
    MIN_WALK_DEGREE,
    adjacency_power_support,
    arc_space,
    build_T,
    build_U,
    full_support_at_diameter,
    line_digraph_adjacency,
    positive_support,
    power,
    require_min_degree,
    s_plus_power,
    support,
)

logger = logging.getLogger(__name__)


def _require_regular(g: Graph) -> int:
    require_min_degree(g, MIN_WALK_DEGREE)
    if not g.is_regular():
        raise NotRegularError("graph is not regular")
    return int(g.degrees[0])


def _scaled(tol: float, dimension: int) -> float:
    return tol * max(1, dimension)


def check_orthogonality(subject: str, u: RationalMatrix) -> CheckResult:
    """U U^T = I, exactly."""
    product = u @ u.T
    passed = product.is_identity()
    detail = "" if passed else "U U^T differs from the identity"
    return CheckResult(name="orthogonality", subject=subject, passed=passed, detail=detail)


def check_row_structure(subject: str, g: Graph, u: Optional[RationalMatrix] = None) -> CheckResult:
    """Row (i,j) has d(j) non-zeros and its reversal entry is 2/d(j) - 1.

    At d(j) = 2 the reversal entry is 0, so the row has one non-zero.
    """
    u = build_U(g) if u is None else u
    space = arc_space(g)
    nonzeros = u.nonzero_mask().sum(axis=1)
    for row, (i, j) in enumerate(space):
        d = g.degree(j)
        expected = d - 1 if d == 2 else d
        reversal = u.entry(row, space.index((j, i)))
        if nonzeros[row] != expected or reversal * d != 2 - d:
            return CheckResult(
                name="row-structure",
                subject=subject,
                passed=False,
                detail=f"row {(i, j)}: {nonzeros[row]} non-zeros, reversal entry {reversal}",
            )
    return CheckResult(name="row-structure", subject=subject, passed=True)


def check_column_stochastic(
    subject: str, g: Graph, t: Optional[RationalMatrix] = None
) -> CheckResult:
    t = build_T(g) if t is None else t
    sums = t.numerators.sum(axis=0)
    positive = g.degrees > 0
    passed = bool(np.all(sums[positive] == t.denominator))
    detail = "" if passed else "some column of T does not sum to 1"
    return CheckResult(name="t-column-sums", subject=subject, passed=passed, detail=detail)


def check_unitary_spectrum(
    subject: str, g: Graph, u: Optional[RationalMatrix] = None, tol: float = DEFAULT_TOLERANCE
) -> CheckResult:
    """eig(U) against the pairs built from eig(T) plus m - n copies of each of +1, -1."""
    u = build_U(g) if u is None else u
    tolerance = _scaled(tol, u.dimension)
    numeric = eig_float(u)
    closed = spectrum_from_T(eig_float(build_T(g)), g.n, g.m, tol=tol)
    passed = multiset_eq(numeric, closed, tolerance)
    detail = f"+1 x{numeric.count_near(1, tolerance)}, -1 x{numeric.count_near(-1, tolerance)}"
    return CheckResult(
        name="unitary-spectrum", subject=subject, passed=passed, detail=detail, tolerance=tolerance
    )


def _measured_split(numeric: ComplexSpectrum, paired: ComplexSpectrum, tol: float):
    plus = numeric.count_near(1, tol) - paired.count_near(1, tol)
    minus = numeric.count_near(-1, tol) - paired.count_near(-1, tol)
    return plus, minus


def check_splus_u_spectrum(
    subject: str, g: Graph, s_plus: Optional[BinaryMatrix] = None, tol: float = DEFAULT_TOLERANCE
):
    """S+(U) of a k-regular graph against its closed form; also measures the +-1 split."""
    k = _require_regular(g)
    s_plus = s_plus_power(g, 1) if s_plus is None else s_plus
    tolerance = _scaled(tol, s_plus.dimension)
    spectrum_m = eig_float(g.adjacency_matrix())
    numeric = eig_float(s_plus)
    closed = splus_u_spectrum_closed(spectrum_m, g.n, k, tol=tol)
    passed = multiset_eq(numeric, closed, tolerance)

    remaining = g.n * (k - 2)
    paired = splus_u_spectrum_closed(spectrum_m, g.n, k, plus_ones=0, tol=tol).without_near(
        -1, remaining, tolerance
    )
    plus, minus = _measured_split(numeric, paired, tolerance)
    expected = ihara_split(g.n, g.m)
    observation = Observation(
        name="splus-u-remaining-split",
        subject=subject,
        detail=f"+1 x{plus}, -1 x{minus} of {remaining}; Ihara-Bass gives {expected[0]} each",
    )
    result = CheckResult(
        name="splus-u-spectrum", subject=subject, passed=passed, tolerance=tolerance
    )
    return result, observation


def check_splus_u2_spectrum(
    subject: str, g: Graph, s_plus: Optional[BinaryMatrix] = None, tol: float = DEFAULT_TOLERANCE
) -> CheckResult:
    k = _require_regular(g)
    s_plus = s_plus_power(g, 2) if s_plus is None else s_plus
    tolerance = _scaled(tol, s_plus.dimension)
    numeric = eig_float(s_plus)
    closed = splus_u2_spectrum_closed(eig_float(g.adjacency_matrix()), g.n, k, tol=tol)
    passed = multiset_eq(numeric, closed, tolerance)
    twos, expected = numeric.count_near(2, tolerance), closed.count_near(2, tolerance)
    passed = passed and twos == expected and expected >= g.n * (k - 2)
    return CheckResult(
        name="splus-u2-spectrum",
        subject=subject,
        passed=passed,
        detail=f"eigenvalue 2 x{twos}, closed form x{expected}",
        tolerance=tolerance,
    )


def check_support_identity(
    subject: str, g: Graph, supp: Optional[BinaryMatrix] = None
) -> CheckResult:
    """support(U) is the adjacency matrix of the line digraph."""
    require_min_degree(g)
    supp = support(build_U(g)) if supp is None else supp
    passed = supp == line_digraph_adjacency(g)
    return CheckResult(name="support-identity", subject=subject, passed=passed)


def check_line_digraph_charpoly(
    subject: str, g: Graph, supp: Optional[BinaryMatrix] = None, cutoff: int = EXACT_CUTOFF
) -> CheckResult:
    """charpoly(support U) = x^(2m-n) charpoly(M), as exact polynomials."""
    require_min_degree(g)
    supp = support(build_U(g)) if supp is None else supp
    lhs = charpoly_exact(supp, cutoff=cutoff).coefficients
    rhs = charpoly_exact(g.adjacency_matrix(), cutoff=cutoff).coefficients
    rhs = rhs + (0,) * (2 * g.m - g.n)
    passed = lhs == rhs
    detail = "" if passed else "polynomials differ"
    return CheckResult(name="line-digraph-charpoly", subject=subject, passed=passed, detail=detail)


def check_u3_direct(
    subject: str,
    g: Graph,
    params: SrgParams,
    strict_paper: bool = False,
    direct: Optional[BinaryMatrix] = None,
) -> CheckResult:
    """Direct S+(U^3) against the positive support of the exact cube."""
    direct = s_plus_u3_direct(g, params, strict_paper=strict_paper) if direct is None else direct
    oracle = positive_support(power(build_U(g), 3))
    mismatches = int((direct.data != oracle.data).sum())
    return CheckResult(
        name="splus-u3-direct",
        subject=subject,
        passed=mismatches == 0,
        detail=f"{mismatches} entries differ" if mismatches else "",
    )


def check_case_amplitudes(subject: str, g: Graph, params: SrgParams) -> CheckResult:
    """Case table against the exact cube: every entry, plus one scalar lookup per case."""
    cube = power(build_U(g), 3)
    passed = u3_case_matrix(g, params) == cube
    detail = "" if passed else "case matrix differs from U^3"
    space = arc_space(g)
    seen = set()
    for row, arc1 in enumerate(space):
        for col, arc2 in enumerate(space):
            case = classify_case(arc1, arc2)
            if case in seen:
                continue
            seen.add(case)
            if case_amplitude(g, params, arc1, arc2) != cube.entry(row, col):
                passed = False
                detail = f"case {case} at {arc1}, {arc2}"
        if len(seen) == len(CASES):
            break
    return CheckResult(name="case-amplitudes", subject=subject, passed=passed, detail=detail)


def check_srg_spectrum(
    subject: str, g: Graph, params: SrgParams, tol: float = DEFAULT_TOLERANCE
) -> CheckResult:
    tolerance = _scaled(tol, g.n)
    expected = ComplexSpectrum.from_multiplicities(srg_adjacency_spectrum(params).multiplicities())
    passed = multiset_eq(eig_float(g.adjacency_matrix()), expected, tolerance)
    return CheckResult(
        name="srg-spectrum",
        subject=subject,
        passed=passed,
        detail=f"srg{params.label}",
        tolerance=tolerance,
    )


def check_modular_consistency(
    subject: str, matrix, primes: Sequence[int] = DEFAULT_PRIMES, cutoff: int = EXACT_CUTOFF
) -> CheckResult:
    exact = charpoly_exact(matrix, cutoff=cutoff)
    passed = exact.reduce(primes) == signature(matrix, mode="modular", primes=primes)
    return CheckResult(name="modular-consistency", subject=subject, passed=passed)


def check_family_cospectral(label: str, family: GraphFamily) -> CheckResult:
    """Members of one parameter family share the exact adjacency signature."""
    signatures = {charpoly_exact(g.adjacency_matrix()).serialize() for g in family}
    return CheckResult(
        name="family-adjacency-cospectral",
        subject=label,
        passed=len(signatures) == 1,
        detail=f"{len(signatures)} distinct adjacency signatures",
    )


def check_family_distinguished(
    label: str, family: GraphFamily, config: InvariantConfig
) -> CheckResult:
    report = ScanService(config).scan(family)
    return CheckResult(
        name="family-scan",
        subject=label,
        passed=report.holds and not report.errors,
        detail=f"{len(report.groups)} groups over {report.family_size} graphs, {report.status}",
    )


def check_corollary(
    subject: str, g: Graph, h: Graph, tol: float = DEFAULT_TOLERANCE
) -> CheckResult:
    """Equal T spectra exactly when the reconstructed U spectra are equal."""
    tolerance = _scaled(tol, 2 * max(g.m, h.m))
    spectrum_g, spectrum_h = eig_float(build_T(g)), eig_float(build_T(h))
    same_t = multiset_eq(spectrum_g, spectrum_h, tolerance)
    same_u = multiset_eq(
        spectrum_from_T(spectrum_g, g.n, g.m, tol=tol),
        spectrum_from_T(spectrum_h, h.n, h.m, tol=tol),
        tolerance,
    )
    return CheckResult(
        name="t-u-cospectrality",
        subject=subject,
        passed=same_t == same_u,
        detail=f"Sp(T) equal: {same_t}, Sp(U) equal: {same_u}",
        tolerance=tolerance,
    )


# x^5 - 4x^3, x^5 - 4x^4 + 4x^3 and x^5 - 5x^4 + 4x^3
_EXAMPLE_ADJACENCY = (1, 0, -4, 0, 0, 0)
_EXAMPLE_SQUARE_SUPPORT = {
    "c4-plus-point": (1, -4, 4, 0, 0, 0),
    "star4": (1, -5, 4, 0, 0, 0),
}


def check_worked_example() -> List[CheckResult]:
    """C4 plus a point and K_{1,4}: cospectral, told apart by support(M^2)."""
    results = []
    for name, expected in _EXAMPLE_SQUARE_SUPPORT.items():
        g = fixtures.builtin(name)
        adjacency = charpoly_exact(g.adjacency_matrix()).coefficients
        square = charpoly_exact(adjacency_power_support(g, 2)).coefficients
        results.append(
            CheckResult(
                name="worked-example",
                subject=name,
                passed=adjacency == _EXAMPLE_ADJACENCY and square == expected,
                detail=f"charpoly(M) {adjacency}, charpoly(support M^2) {square}",
            )
        )
    return results


def observe_diameter_support(subject: str, g: Graph) -> Optional[Observation]:
    observed = full_support_at_diameter(g)
    if not observed.claim_applies:
        return None
    detail = f"diameter {observed.diameter}: "
    if observed.full_support:
        detail += "support(M^diam) is all ones"
    else:
        detail += f"support(M^diam) has {len(observed.zero_pairs)} zero entries"
    return Observation(name="diameter-support", subject=subject, detail=detail)


class VerifyService:
    """Runs the property suite and collects a ledger."""

    def __init__(
        self,
        tol: float = DEFAULT_TOLERANCE,
        strict_paper: bool = False,
        primes: Sequence[int] = DEFAULT_PRIMES,
        exact_cutoff: int = EXACT_CUTOFF,
    ):
        self.tol = tol
        self.strict_paper = strict_paper
        self.primes = tuple(primes)
        self.exact_cutoff = exact_cutoff
        self.ledger = VerifyLedger()

    def _attempt(self, name: str, subject: str, check: Callable[[], object]) -> None:
        """Run one check; precondition errors become failed entries."""
        try:
            outcome = check()
        except WalksigError as exc:
            self.ledger.checks.append(
                CheckResult(
                    name=name,
                    subject=subject,
                    passed=False,
                    detail=f"precondition failed: {type(exc).__name__}: {exc}",
                )
            )
            return
        for item in outcome if isinstance(outcome, (list, tuple)) else [outcome]:
            if isinstance(item, Observation):
                self.ledger.observations.append(item)
            elif item is not None:
                self.ledger.checks.append(item)

    def graph_checks(self, subject: str, g: Graph, applicable_only: bool = True) -> None:
        """
        Every per-graph check.

        Args:
            subject: Name used in the ledger
            g: Graph under test
            applicable_only: Skip checks whose preconditions ``g`` fails;
                when False they are attempted and reported as failures
        """
        tol = self.tol
        min_degree = g.min_degree()
        walkable = g.m > 0 and min_degree >= 1
        regular = g.is_regular() and min_degree >= MIN_WALK_DEGREE
        params = detect_srg(g)

        def wanted(condition: bool) -> bool:
            return condition or not applicable_only

        if wanted(walkable):
            self._attempt(
                "orthogonality", subject, lambda: check_orthogonality(subject, build_U(g))
            )
            self._attempt("row-structure", subject, lambda: check_row_structure(subject, g))
            self._attempt("t-column-sums", subject, lambda: check_column_stochastic(subject, g))
        if wanted(walkable and g.m >= g.n):
            self._attempt(
                "unitary-spectrum", subject, lambda: check_unitary_spectrum(subject, g, tol=tol)
            )
        if wanted(min_degree >= MIN_WALK_DEGREE):
            self._attempt("support-identity", subject, lambda: check_support_identity(subject, g))
            self._attempt(
                "line-digraph-charpoly",
                subject,
                lambda: check_line_digraph_charpoly(subject, g, cutoff=self.exact_cutoff),
            )
            self._attempt(
                "modular-consistency",
                subject,
                lambda: check_modular_consistency(
                    subject, s_plus_power(g, 1), self.primes, self.exact_cutoff
                ),
            )
        if wanted(regular):
            self._attempt(
                "splus-u-spectrum", subject, lambda: check_splus_u_spectrum(subject, g, tol=tol)
            )
            self._attempt(
                "splus-u2-spectrum", subject, lambda: check_splus_u2_spectrum(subject, g, tol=tol)
            )
        if params is not None:
            self._attempt(
                "srg-spectrum", subject, lambda: check_srg_spectrum(subject, g, params, tol=tol)
            )
            if wanted(params.d >= MIN_WALK_DEGREE):
                self._attempt(
                    "splus-u3-direct",
                    subject,
                    lambda: check_u3_direct(subject, g, params, strict_paper=self.strict_paper),
                )
                self._attempt(
                    "case-amplitudes", subject, lambda: check_case_amplitudes(subject, g, params)
                )
        self._attempt(
            "modular-consistency",
            subject,
            lambda: check_modular_consistency(
                subject, g.adjacency_matrix(), self.primes, self.exact_cutoff
            ),
        )
        self._attempt("diameter-support", subject, lambda: observe_diameter_support(subject, g))

    def builtin_suite(self) -> None:
        for name in fixtures.BUILTIN_GRAPHS:
            self.graph_checks(name, fixtures.builtin(name))
        self._attempt("worked-example", "c4-plus-point/star4", check_worked_example)
        config = InvariantConfig(primes=self.primes, strict_paper=self.strict_paper)
        for label, names in fixtures.SRG_FAMILIES.items():
            family = fixtures.builtin_family(names, source=f"srg{label}")
            self._attempt(
                "family-adjacency-cospectral", label, lambda: check_family_cospectral(label, family)
            )
            self._attempt(
                "family-scan", label, lambda: check_family_distinguished(label, family, config)
            )

    def random_suites(self, seed: int = RANDOM_SEED) -> None:
        """Closed-form spectra on seeded random graphs."""
        tol = self.tol
        graphs = fixtures.random_min_degree_graphs(seed=seed)
        for number, g in enumerate(graphs):
            subject = f"random-{number}"
            self._attempt(
                "unitary-spectrum", subject, lambda: check_unitary_spectrum(subject, g, tol=tol)
            )
        for number, (g, h) in enumerate(zip(graphs, graphs[1:])):
            relabeled = g.relabel(np.random.default_rng(seed + number).permutation(g.n))
            self._attempt(
                "t-u-cospectrality",
                f"random-{number}~relabel",
                lambda: check_corollary(f"random-{number}~relabel", g, relabeled, tol=tol),
            )
            self._attempt(
                "t-u-cospectrality",
                f"random-{number}/random-{number + 1}",
                lambda: check_corollary(f"random-{number}/random-{number + 1}", g, h, tol=tol),
            )
        for number, g in enumerate(fixtures.random_regular_graphs(seed=seed)):
            subject = f"random-regular-{number}"
            self._attempt(
                "splus-u-spectrum", subject, lambda: check_splus_u_spectrum(subject, g, tol=tol)
            )
            self._attempt(
                "splus-u2-spectrum", subject, lambda: check_splus_u2_spectrum(subject, g, tol=tol)
            )

    def family_suite(self, family: GraphFamily) -> None:
        """Checks for user-supplied graphs; unmet preconditions count as failures."""
        for index, g in enumerate(family):
            self.graph_checks(f"{family.source}[{index}]", g, applicable_only=False)

    def run(self, family: Optional[GraphFamily] = None, random: bool = True) -> VerifyLedger:
        if family is not None:
            self.family_suite(family)
        else:
            self.builtin_suite()
            if random:
                self.random_suites()
        logger.info(
            "%d checks, %d failed, %d observations",
            len(self.ledger.checks),
            len(self.ledger.failures),
            len(self.ledger.observations),
        )
        return self.ledger

