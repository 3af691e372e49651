"""Pydantic schemas for parameters, signatures and reports."""

from walksig.schemas.invariant import INVARIANT_KINDS, InvariantConfig
from walksig.schemas.report import Collision, GraphError, IsoResult, ScanReport, SignatureGroup
from walksig.schemas.signature import CharPolySignature
from walksig.schemas.srg import SrgParams, SrgSpectrum
from walksig.schemas.verify import CheckResult, Observation, VerifyLedger

__all__ = [
    "INVARIANT_KINDS",
    "InvariantConfig",
    "Collision",
    "GraphError",
    "IsoResult",
    "ScanReport",
    "SignatureGroup",
    "CharPolySignature",
    "SrgParams",
    "SrgSpectrum",
    "CheckResult",
    "Observation",
    "VerifyLedger",
]
