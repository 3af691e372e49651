"""Family scans: group graphs by signature and certify every collision."""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from time import perf_counter
from typing import Dict, List, Optional, Sequence, Tuple

from walksig.core.cache import SignatureCache
from walksig.core.errors import WalksigError
from walksig.models.graph import Graph, GraphFamily
from walksig.schemas.invariant import InvariantConfig
from walksig.schemas.report import Collision, GraphError, ScanReport, SignatureGroup
from walksig.schemas.signature import CharPolySignature
from walksig.services.graph_io import encode_graph6, parse_graph6
from walksig.services.invariant_service import SignatureService
from walksig.services.iso import is_isomorphic
from walksig.services.srg import detect_srg

logger = logging.getLogger(__name__)

Outcome = Tuple[Optional[CharPolySignature], Optional[str]]


def describe_error(exc: Exception) -> str:
    return f"{type(exc).__name__}: {exc}"


def _signature_task(
    task: Tuple[bytes, InvariantConfig, str]
) -> Tuple[Optional[str], Optional[str]]:
    """Worker entry point; graphs travel as graph6 and signatures as text."""
    graph6, config, mode = task
    try:
        result = SignatureService(config).compute(parse_graph6(graph6), mode=mode)
    except WalksigError as exc:
        return None, describe_error(exc)
    return result.serialize(), None


def _bucket(indices: Sequence[int], signatures: Dict[int, CharPolySignature]) -> List[List[int]]:
    """Split indices by signature, keeping first-appearance order."""
    buckets: Dict[str, List[int]] = {}
    for index in indices:
        buckets.setdefault(signatures[index].serialize(), []).append(index)
    return list(buckets.values())


def conjecture_status(collisions: Sequence[Collision], failed: int = 0) -> str:
    """``holds`` only when every member was grouped and every collision is isomorphic."""
    verdicts = {collision.verdict for collision in collisions}
    if "non-isomorphic" in verdicts:
        return "fails"
    if "inconclusive" in verdicts or failed:
        return "inconclusive"
    return "holds"


class ScanService:
    """Signature computation and grouping over a graph family."""

    def __init__(self, config: InvariantConfig, cache: Optional[SignatureCache] = None):
        self.config = config
        self.cache = cache

    def signatures(
        self,
        members: Sequence[Graph],
        mode: Optional[str] = None,
        primes: Optional[Sequence[int]] = None,
    ) -> List[Outcome]:
        """
        Signature or error text for every member, in member order.

        Args:
            members: Graphs to process
            mode: Signature mode override
            primes: Prime set override for modular signatures

        Returns:
            One (signature, error) pair per member; exactly one side is set
        """
        config = self.config
        if primes is not None:
            config = config.model_copy(update={"primes": tuple(primes)})
        mode = mode or config.mode
        service = SignatureService(config, self.cache)

        outcomes: List[Optional[Outcome]] = [None] * len(members)
        pending = []
        for index, g in enumerate(members):
            cached = service.lookup(g, mode)
            if cached is not None:
                outcomes[index] = (cached, None)
            else:
                pending.append(index)

        if config.jobs > 1 and len(pending) > 1:
            tasks = [(encode_graph6(members[i]), config, mode) for i in pending]
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                for index, (text, error) in zip(pending, pool.map(_signature_task, tasks)):
                    result = CharPolySignature.parse(text) if text else None
                    outcomes[index] = (result, error)
                    if result is not None:
                        service.store(members[index], mode, result)
        else:
            for index in pending:
                try:
                    outcomes[index] = (service.compute(members[index], mode=mode), None)
                except WalksigError as exc:
                    outcomes[index] = (None, describe_error(exc))

        for index in pending:
            error = outcomes[index][1]
            if error is not None:
                logger.warning("graph %d: %s", index, error)
        return outcomes

    def _confirm_exact(
        self, family: GraphFamily, members: List[int], shown: Dict[int, CharPolySignature]
    ) -> List[SignatureGroup]:
        """Split a modular tie by exact signatures."""
        exact = self.signatures([family[i] for i in members], mode="exact")
        failed = [e for _, e in exact if e is not None]
        if failed:
            logger.warning("exact escalation of group %s failed: %s", members, failed[0])
            return [
                SignatureGroup(
                    signature=shown[members[0]].serialize(), members=members, exact_confirmed=False
                )
            ]
        by_index = {i: result for i, (result, _) in zip(members, exact)}
        return [
            SignatureGroup(signature=shown[part[0]].serialize(), members=part, exact_confirmed=True)
            for part in _bucket(members, by_index)
        ]

    def _resolve(
        self, family: GraphFamily, members: List[int], shown: Dict[int, CharPolySignature]
    ) -> List[SignatureGroup]:
        if len(members) == 1:
            return [SignatureGroup(signature=shown[members[0]].serialize(), members=members)]
        if self.config.mode == "exact":
            return [
                SignatureGroup(
                    signature=shown[members[0]].serialize(), members=members, exact_confirmed=True
                )
            ]
        if self.config.streaming and len(self.config.primes) > 1:
            full = self.signatures([family[i] for i in members])
            refined = dict(shown)
            for index, (result, _) in zip(members, full):
                if result is not None:
                    refined[index] = result
            groups: List[SignatureGroup] = []
            for part in _bucket(members, refined):
                if len(part) == 1:
                    signature = refined[part[0]].serialize()
                    groups.append(SignatureGroup(signature=signature, members=part))
                else:
                    groups.extend(self._confirm_exact(family, part, refined))
            return groups
        return self._confirm_exact(family, members, shown)

    def _srg_label(self, family: GraphFamily) -> Optional[str]:
        labels = {None if p is None else p.label for p in map(detect_srg, family)}
        if len(labels) == 1:
            return labels.pop()
        return None

    def scan(
        self, family: GraphFamily, complements: bool = False, timings: bool = False
    ) -> ScanReport:
        """
        Group ``family`` by signature and test every intra-group pair for isomorphism.

        Args:
            family: Graphs to scan, in report order
            complements: Also scan the family of complements
            timings: Include per-phase wall-clock seconds in the report

        Returns:
            The scan report
        """
        clock: Dict[str, float] = {}
        started = perf_counter()
        logger.info(
            "scanning %d graphs from %s with %s",
            len(family),
            family.source,
            self.config.descriptor(),
        )

        first_primes = self.config.primes
        if self.config.streaming and self.config.mode == "modular":
            first_primes = self.config.primes[:1]
        outcomes = self.signatures(family.members, primes=first_primes)
        errors = [
            GraphError(index=index, error=error)
            for index, (_, error) in enumerate(outcomes)
            if error is not None
        ]
        shown = {index: result for index, (result, _) in enumerate(outcomes) if result is not None}
        clock["signatures"] = perf_counter() - started

        mark = perf_counter()
        groups: List[SignatureGroup] = []
        for members in _bucket(sorted(shown), shown):
            groups.extend(self._resolve(family, members, shown))
        groups.sort(key=lambda group: group.members[0])
        clock["grouping"] = perf_counter() - mark

        mark = perf_counter()
        collisions: List[Collision] = []
        for group in groups:
            for a, b in combinations(group.members, 2):
                result = is_isomorphic(family[a], family[b], node_budget=self.config.node_budget)
                collisions.append(
                    Collision(
                        pair=(a, b),
                        verdict=result.verdict,
                        witness=result.witness,
                        search_nodes=result.search_nodes,
                    )
                )
        clock["isomorphism"] = perf_counter() - mark

        status = conjecture_status(collisions, failed=len(errors))
        logger.info("%d groups, %d collisions, status %s", len(groups), len(collisions), status)
        report = ScanReport(
            source=family.source,
            family_size=len(family),
            invariant=self.config.descriptor(),
            srg_params=self._srg_label(family),
            groups=groups,
            collisions=collisions,
            errors=errors,
            status=status,
            timings={phase: round(seconds, 6) for phase, seconds in clock.items()}
            if timings
            else None,
        )
        if complements:
            report.complements = self.scan(family.complements(), timings=timings)
        return report
