"""
Extremal points of the face of the quantum set on which a Bell expression
reaches its maximum, and the nullifier identities that pin them down for
beta_T.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from tsirelson.certificates import paper_generating_sequence, state_action_float
from tsirelson.scenario import (
    LOCAL_VERTICES,
    Behavior,
    BellExpression,
    QubitRealizationParams,
    beta_t,
    grad_qubit,
    local_vertex,
    tsirelson_point,
)

from .qubit import qubit_max

logger = logging.getLogger(__name__)

CLUSTER_DISTANCE = 1e-5
TSIRELSON_LABEL = "P_T"
OTHER_LABEL = "other"


def vertex_label(idx) -> str:
    return "L(" + ",".join(f"{v:+d}" for v in idx) + ")"


def classify(behavior: Behavior) -> str:
    if behavior.distance(tsirelson_point()) <= CLUSTER_DISTANCE:
        return TSIRELSON_LABEL
    for idx in LOCAL_VERTICES:
        if behavior.distance(local_vertex(idx)) <= CLUSTER_DISTANCE:
            return vertex_label(idx)
    return OTHER_LABEL


@dataclass(frozen=True)
class Cluster:
    center: Behavior
    value: float
    label: str
    size: int


@dataclass(frozen=True)
class FaceScanReport:
    value: float
    clusters: list[Cluster]

    @property
    def labels(self) -> list[str]:
        return [cluster.label for cluster in self.clusters]


def face_scan(beta: BellExpression, restarts: int = 200, tol: float = 1e-7, seed: int | None = None) -> FaceScanReport:
    """Group the qubit maximizers of ``beta`` into clusters and name them."""
    result = qubit_max(beta, restarts, tol, seed)
    groups: list[list] = []
    for maximizer in result.maximizers:
        vector = maximizer.behavior.to_numpy()
        for group in groups:
            if np.linalg.norm(np.mean([m.behavior.to_numpy() for m in group], axis=0) - vector) <= CLUSTER_DISTANCE:
                group.append(maximizer)
                break
        else:
            groups.append([maximizer])

    clusters = []
    for group in groups:
        center = Behavior(np.mean([m.behavior.to_numpy() for m in group], axis=0))
        clusters.append(Cluster(center, max(m.value for m in group), classify(center), len(group)))
    clusters.sort(key=lambda c: (c.label != TSIRELSON_LABEL, c.label, tuple(c.center.to_numpy())))
    logger.info(f"Face scan: value {result.value:.12f}, clusters {[c.label for c in clusters]}")
    return FaceScanReport(result.value, clusters)


@dataclass(frozen=True)
class AppendixDReport:
    """
    Residuals of the nullifier identity ``(N0 - N2)|phi_theta> = 0``.

    ``projections`` are the |00>, |11>, |01>, |10> components computed by
    applying the operators; ``closed_forms`` are the same four quantities as
    trigonometric expressions; ``combined`` is the sin/cos combination of the
    last two and ``combined_closed_form`` its closed form in ``2 theta``.
    """

    params: QubitRealizationParams
    projections: np.ndarray
    closed_forms: np.ndarray
    combined: float
    combined_closed_form: float
    stationarity: float
    c2theta_sb0: float

    @property
    def max_closed_form_deviation(self) -> float:
        return float(np.max(np.abs(self.projections - self.closed_forms)))

    @property
    def combination_deviation(self) -> float:
        return abs(self.combined - self.combined_closed_form)


def nullifier_projection_closed_forms(params) -> np.ndarray:
    """The four components of ``(N0 - N2)|phi_theta>``, each as left minus right side."""
    theta, a0, a1, b0, _ = QubitRealizationParams(*params)
    ct, st = math.cos(theta), math.sin(theta)
    ca = (math.cos(a0), math.cos(a1))
    sa = (math.sin(a0), math.sin(a1))
    cb0, sb0 = math.cos(b0), math.sin(b0)
    r = 1 / math.sqrt(2)
    sum_c, sum_s = sum(ca), sum(sa)
    on_00 = (ct * r * sum_c - ct * cb0) - (ct - r * sum(ct * c * cb0 + st * s * sb0 for c, s in zip(ca, sa)))
    on_11 = (-st * r * sum_c + st * cb0) - (st - r * sum(st * c * cb0 + ct * s * sb0 for c, s in zip(ca, sa)))
    on_01 = (st * r * sum_s - ct * sb0) + r * sum(ct * c * sb0 - st * s * cb0 for c, s in zip(ca, sa))
    on_10 = (ct * r * sum_s - st * sb0) + r * sum(-st * c * sb0 + ct * s * cb0 for c, s in zip(ca, sa))
    return np.array([on_00, on_11, on_01, on_10])


def appendix_d_check(params) -> AppendixDReport:
    """
    Evaluate ``(N0 - N2)|phi_theta>`` two ways, the projected identity
    ``c_2theta s_b0 = -(1/sqrt 2) sum_x (-c_ax s_b0 + s_2theta s_ax c_b0)``
    and the stationarity of beta_T along ``b0``.
    """
    params = QubitRealizationParams(*params)
    sequence = paper_generating_sequence()
    action = state_action_float(sequence[0] - sequence[2], params)
    # Basis order of the action is |00>, |01>, |10>, |11>.
    projections = np.array([action[0], action[3], action[1], action[2]])
    closed_forms = nullifier_projection_closed_forms(params)

    theta, a0, a1, b0, _ = params
    ct, st = math.cos(theta), math.sin(theta)
    combined = st * projections[3] - ct * projections[2]
    c2t, s2t = math.cos(2 * theta), math.sin(2 * theta)
    sb0, cb0 = math.sin(b0), math.cos(b0)
    combined_closed_form = c2t * sb0 + (1 / math.sqrt(2)) * sum(
        -math.cos(a) * sb0 + s2t * math.sin(a) * cb0 for a in (a0, a1)
    )
    stationarity = float(grad_qubit(beta_t(), params)[3])
    return AppendixDReport(
        params=params,
        projections=projections,
        closed_forms=closed_forms,
        combined=float(combined),
        combined_closed_form=float(combined_closed_form),
        stationarity=stationarity,
        c2theta_sb0=c2t * sb0,
    )
