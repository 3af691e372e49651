"""Scan report schemas."""

from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel

IsoVerdict = Literal["isomorphic", "non-isomorphic", "inconclusive"]


class SignatureGroup(BaseModel):
    """Family members sharing one signature."""

    signature: str
    members: List[int]
    exact_confirmed: Optional[bool] = None


class Collision(BaseModel):
    """A pair of members with equal signatures and its isomorphism verdict."""

    pair: Tuple[int, int]
    verdict: IsoVerdict
    witness: Optional[List[int]] = None
    search_nodes: int = 0


class GraphError(BaseModel):
    """A member that could not be processed."""

    index: int
    error: str


class ScanReport(BaseModel):
    """Result of grouping one family by signature."""

    source: str
    family_size: int
    invariant: str
    srg_params: Optional[str] = None
    groups: List[SignatureGroup]
    collisions: List[Collision]
    errors: List[GraphError] = []
    status: Literal["holds", "fails", "inconclusive"]
    timings: Optional[Dict[str, float]] = None
    complements: Optional["ScanReport"] = None

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def to_tsv(self) -> str:
        """One row per group, then one row per collision."""
        lines = ["# source\tinvariant\tfamily_size\tstatus"]
        lines.append(f"{self.source}\t{self.invariant}\t{self.family_size}\t{self.status}")
        lines.append("# group\tsize\tmembers\texact_confirmed\tsignature")
        for number, group in enumerate(self.groups):
            confirmed = "" if group.exact_confirmed is None else str(group.exact_confirmed).lower()
            members = ",".join(str(i) for i in group.members)
            lines.append(
                f"{number}\t{len(group.members)}\t{members}\t{confirmed}\t{group.signature}"
            )
        if self.collisions:
            lines.append("# pair\tverdict")
            for collision in self.collisions:
                a, b = collision.pair
                lines.append(f"{a},{b}\t{collision.verdict}")
        for error in self.errors:
            lines.append(f"# error\t{error.index}\t{error.error}")
        text = "\n".join(lines)
        if self.complements is not None:
            text += "\n" + self.complements.to_tsv()
        return text


ScanReport.model_rebuild()


class IsoResult(BaseModel):
    """Outcome of an isomorphism test; ``witness[v]`` is the image of vertex v."""

    verdict: IsoVerdict
    witness: Optional[List[int]] = None
    search_nodes: int = 0

    @property
    def isomorphic(self) -> bool:
        return self.verdict == "isomorphic"
