"""
Plot data for the octagonal slice and for three-dimensional projections of
the quantum set.

SVG output uses a 1000 x 1000 viewBox onto which the ``(r0, r1)`` square
``[-0.35, 0.35]^2`` is mapped, ``r1`` pointing up.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from django.template.loader import render_to_string

from tsirelson.exact_algebra import ZERO
from tsirelson.exceptions import InputError
from tsirelson.scenario import (
    BEHAVIOR_LABELS,
    LOCAL_VERTICES,
    BellExpression,
    behavior_from_qubit,
    local_vertex,
    pair,
    tsirelson_point,
)
from tsirelson.slices import octagon_vertices

from .serialization import expression_from_dict, read_json, table_csv

logger = logging.getLogger(__name__)

VIEW_SIZE = 1000
VIEW_EXTENT = 0.35
CIRCLE_POINTS = 64

SECOND_ORDER_RADIUS = 0.5
ALMOST_QUANTUM_RADIUS = 1 / (4 * math.sqrt(2))

SLICE_HEADER = ("layer", "k", "r0", "r1")
PROJECTION_HEADER = ("kind", "x", "y", "z")


@dataclass(frozen=True)
class Layer:
    name: str
    shape: str  # polygon, circle or point
    points: list[tuple]
    radius: float = 0.0
    color: str = "black"
    dash: str = "none"


def to_view(r0, r1) -> tuple[float, float]:
    scale = VIEW_SIZE / (2 * VIEW_EXTENT)
    return (float(r0) + VIEW_EXTENT) * scale, (VIEW_EXTENT - float(r1)) * scale


def circle_points(radius: float, count: int = CIRCLE_POINTS) -> list[tuple[float, float]]:
    return [(radius * math.cos(2 * math.pi * k / count), radius * math.sin(2 * math.pi * k / count)) for k in range(count)]


def octagon_layer() -> Layer:
    return Layer("octagon", "polygon", [tuple(v) for v in octagon_vertices()], color="#1f77b4", dash="8 4")


def slice_layers() -> list[Layer]:
    """Local-bound octagon, second-order disk, almost-quantum disk and the CHSH centre."""
    return [
        octagon_layer(),
        Layer("second_order", "circle", circle_points(SECOND_ORDER_RADIUS), SECOND_ORDER_RADIUS, "#1f77b4", "2 4"),
        Layer("almost_quantum", "circle", circle_points(ALMOST_QUANTUM_RADIUS), ALMOST_QUANTUM_RADIUS, "#ff7f0e", "2 4"),
        Layer("chsh", "point", [(ZERO, ZERO)], 0.004, "#ff7f0e"),
    ]


def layers_csv(layers: list[Layer]) -> str:
    rows = [(layer.name, k, r0, r1) for layer in layers for k, (r0, r1) in enumerate(layer.points)]
    return table_csv(SLICE_HEADER, rows)


def _coordinate(value: float) -> str:
    return f"{value:.3f}"


def _svg_layer(layer: Layer) -> dict:
    context = {"name": layer.name, "shape": layer.shape, "color": layer.color, "dash": layer.dash}
    if layer.shape == "polygon":
        context["points"] = " ".join(",".join(_coordinate(c) for c in to_view(*p)) for p in layer.points)
    else:
        cx, cy = to_view(0, 0) if layer.shape == "circle" else to_view(*layer.points[0])
        context.update(cx=_coordinate(cx), cy=_coordinate(cy), r=_coordinate(layer.radius * VIEW_SIZE / (2 * VIEW_EXTENT)))
    return context


def layers_svg(layers: list[Layer]) -> str:
    origin = tuple(_coordinate(c) for c in to_view(0, 0))
    return render_to_string(
        "tsirelson/slice.svg",
        {"size": VIEW_SIZE, "origin": origin, "layers": [_svg_layer(layer) for layer in layers]},
    )


# -- three-dimensional projections ------------------------------------------


def _unit_axis(label: str) -> BellExpression:
    values = [0] * 8
    values[BEHAVIOR_LABELS.index(label)] = 1
    return BellExpression(values)


def parse_axes(spec: str) -> list[BellExpression]:
    """
    Three projection axes, given either as three behavior labels
    (``K00,K11,mA0``) or as a JSON file holding a list of three expressions.
    Each axis maps a behavior to its pairing with the axis expression.
    """
    labels = [token.strip() for token in spec.split(",")]
    if len(labels) == 3 and all(label in BEHAVIOR_LABELS for label in labels):
        return [_unit_axis(label) for label in labels]
    if not Path(spec).exists():
        raise InputError(f"Axes must be three of {', '.join(BEHAVIOR_LABELS)} or a JSON file, got {spec!r}")
    data = read_json(spec)
    if not isinstance(data, list) or len(data) != 3:
        raise InputError("Axes file must hold a list of three expressions")
    return [expression_from_dict(entry) for entry in data]


def projection_rows(axes: list[BellExpression], samples: int, seed: int) -> list[tuple]:
    """
    Project random qubit behaviors, the 16 local vertices and the Tsirelson
    point onto the axes.
    """
    if samples < 0:
        raise InputError(f"samples must be non-negative, got {samples}")
    axes = [axis.to_float() for axis in axes]
    rng = np.random.default_rng(seed)
    lower = [0.0, -math.pi, -math.pi, -math.pi, -math.pi]
    upper = [math.pi / 2, math.pi, math.pi, math.pi, math.pi]

    def project(kind, behavior):
        return (kind, *(pair(axis, behavior) for axis in axes))

    rows = [project("quantum", behavior_from_qubit(rng.uniform(lower, upper))) for _ in range(samples)]
    rows += [project("local", local_vertex(idx)) for idx in LOCAL_VERTICES]
    rows.append(project("tsirelson", tsirelson_point()))
    logger.info(f"Projected {len(rows)} behaviors onto 3 axes")
    return rows


def projection_csv(rows: list[tuple]) -> str:
    return table_csv(PROJECTION_HEADER, rows)
