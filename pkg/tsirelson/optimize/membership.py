from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from tsirelson.certificates import LEVEL_TAGS, SOSCertificate
from tsirelson.scenario import Behavior, BellExpression, local_bound, local_vertex, pair, tsirelson_point

from .qubit import qubit_max
from .sos import sos_search

logger = logging.getLogger(__name__)

INSIDE = "inside"
OUTSIDE = "outside"
UNKNOWN = "unknown"

DEFAULT_LEVELS = ("L1", "L1AB", "L1AB_ABB", "L1AB_ABB_AAB")


@dataclass(frozen=True)
class MembershipResult:
    verdict: str
    certificate: SOSCertificate | None = None
    level: str | None = None
    witness: Behavior | None = None
    witness_value: float | None = None
    witness_source: str | None = None


def _exceeds_one(value, tol) -> bool:
    if hasattr(value, "sign"):
        return (value - 1).sign() > 0
    return value > 1 + tol


def dual_membership(
    beta: BellExpression,
    levels: Sequence[str] = DEFAULT_LEVELS,
    tol: float = 1e-7,
    restarts: int = 200,
    seed: int | None = None,
) -> MembershipResult:
    """
    Decide whether the quantum value of ``beta`` is at most 1.

    Witnesses of a violation are tried first (the Tsirelson point, the local
    vertices, then qubit realizations); a sum-of-squares certificate is then
    searched level by level.
    """
    for level in levels:
        if level not in LEVEL_TAGS:
            raise ValueError(f"Unknown relaxation level {level!r}")

    value = pair(beta, tsirelson_point())
    if _exceeds_one(value, tol):
        return MembershipResult(OUTSIDE, witness=tsirelson_point(), witness_value=float(value), witness_source="P_T")

    bound, vertices = local_bound(beta)
    if _exceeds_one(bound, tol):
        return MembershipResult(
            OUTSIDE, witness=local_vertex(vertices[0]), witness_value=float(bound), witness_source="local"
        )

    best = qubit_max(beta, restarts, tol, seed)
    if best.value > 1 + tol:
        return MembershipResult(
            OUTSIDE, witness=best.best.behavior, witness_value=best.value, witness_source="qubit"
        )

    for level in levels:
        certificate = sos_search(beta, level, tol)
        if certificate is not None:
            logger.info(f"Certified inside the dual at level {level}")
            return MembershipResult(INSIDE, certificate=certificate, level=level)
    return MembershipResult(UNKNOWN)
