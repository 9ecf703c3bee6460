"""
Flat-file formats: behavior, expression and certificate JSON, and the CSV
tables written by the commands.

Exact entries are written as exact-scalar strings (``1/2-1/4*s2``), float
entries as JSON numbers; reading back gives an identical value.
"""
import csv
import io
import json
import math
from pathlib import Path

import numpy as np

from tsirelson.certificates import SOSCertificate
from tsirelson.exact_algebra import ExactMatrix, NCPolynomial, QSqrt2Scalar
from tsirelson.exceptions import InputError
from tsirelson.scenario import BEHAVIOR_LABELS, EXACT, FLOAT, Behavior, BellExpression

OCTAGON_HEADER = ("k", "r0", "r1")
CLUSTER_HEADER = ("cluster", "value", *BEHAVIOR_LABELS)


# -- scalars ----------------------------------------------------------------


def format_scalar(value) -> str:
    """Exact values in the scalar text format, floats by ``repr`` (integral floats without a fraction)."""
    if isinstance(value, QSqrt2Scalar):
        return str(value)
    value = float(value)
    if value.is_integer() and abs(value) < 2**53:
        return str(int(value))
    return repr(value)


def format_value(value) -> str:
    """Like ``format_scalar`` but integral exact values print as plain integers, as on the command line."""
    if isinstance(value, QSqrt2Scalar) and value.q == 0 and value.p.denominator == 1:
        return str(value.p.numerator)
    return format_scalar(value)


def _dump_scalar(value):
    return str(value) if isinstance(value, QSqrt2Scalar) else float(value)


def _load_scalar(entry, kind: str):
    if kind == EXACT:
        if not isinstance(entry, str):
            raise InputError(f"Exact entries must be strings, got {entry!r}")
        return QSqrt2Scalar.parse(entry)
    if isinstance(entry, bool) or not isinstance(entry, (int, float)):
        raise InputError(f"Float entries must be numbers, got {entry!r}")
    if not math.isfinite(entry):
        raise InputError(f"Non-finite entry {entry!r}")
    return float(entry)


def _pair_of(data, key: str, kind: str) -> list:
    entry = data.get(key)
    if not isinstance(entry, list) or len(entry) != 2:
        raise InputError(f"Field {key!r} must be a list of two entries")
    return [_load_scalar(x, kind) for x in entry]


def _table_of(data, key: str, kind: str) -> list[list]:
    entry = data.get(key)
    if not isinstance(entry, list) or len(entry) != 2 or any(not isinstance(row, list) or len(row) != 2 for row in entry):
        raise InputError(f"Field {key!r} must be a 2x2 table")
    return [[_load_scalar(x, kind) for x in row] for row in entry]


def _kind_of(data) -> str:
    if not isinstance(data, dict):
        raise InputError("Expected a JSON object")
    kind = data.get("kind")
    if kind not in (EXACT, FLOAT):
        raise InputError(f"Unknown kind {kind!r}")
    return kind


# -- behaviors and expressions ----------------------------------------------


def behavior_to_dict(behavior: Behavior) -> dict:
    return {
        "kind": behavior.kind,
        "mA": [_dump_scalar(v) for v in behavior.mA],
        "mB": [_dump_scalar(v) for v in behavior.mB],
        "K": [[_dump_scalar(v) for v in row] for row in behavior.K],
    }


def behavior_from_dict(data) -> Behavior:
    kind = _kind_of(data)
    try:
        return Behavior.from_tables(_pair_of(data, "mA", kind), _pair_of(data, "mB", kind), _table_of(data, "K", kind))
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def expression_to_dict(beta: BellExpression) -> dict:
    return {
        "kind": beta.kind,
        "a": [_dump_scalar(v) for v in beta.a],
        "b": [_dump_scalar(v) for v in beta.b],
        "c": [[_dump_scalar(v) for v in row] for row in beta.c],
    }


def expression_from_dict(data) -> BellExpression:
    kind = _kind_of(data)
    return BellExpression.from_tables(_pair_of(data, "a", kind), _pair_of(data, "b", kind), _table_of(data, "c", kind))


# -- certificates -----------------------------------------------------------


def certificate_to_dict(cert: SOSCertificate) -> dict:
    if isinstance(cert.W, ExactMatrix):
        rows = [[str(x) for x in row] for row in cert.W.tolist()]
    else:
        rows = [[float(x) for x in row] for row in np.asarray(cert.W, dtype=float)]
    return {
        "basis": [str(p) for p in cert.polys],
        "labels": list(cert.basis_labels),
        "W": rows,
        "target": expression_to_dict(cert.target),
    }


def certificate_from_dict(data) -> SOSCertificate:
    if not isinstance(data, dict):
        raise InputError("Expected a JSON object")
    basis = data.get("basis")
    rows = data.get("W")
    if not isinstance(basis, list) or not all(isinstance(p, str) for p in basis):
        raise InputError("Field 'basis' must be a list of polynomial strings")
    n = len(basis)
    if n == 0:
        raise InputError("Certificate basis is empty")
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise InputError(f"Field 'W' must be a {n}x{n} matrix")
    labels = data.get("labels", [f"K{k}" for k in range(n)])
    if not isinstance(labels, list) or len(labels) != n:
        raise InputError("Field 'labels' must name every basis element")

    entries = [x for row in rows for x in row]
    if all(isinstance(x, str) for x in entries):
        matrix = ExactMatrix([[QSqrt2Scalar.parse(x) for x in row] for row in rows])
    else:
        matrix = np.array([[_load_scalar(x, FLOAT) for x in row] for row in rows], dtype=float).reshape(n, n)
    return SOSCertificate(
        basis_labels=[str(label) for label in labels],
        polys=[NCPolynomial.parse(p) for p in basis],
        W=matrix,
        target=expression_from_dict(data.get("target")),
    )


# -- JSON files -------------------------------------------------------------


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2)


def read_json(path) -> object:
    """
    :raises InputError: when the file cannot be read or is not JSON
    """
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


def load_expression(path) -> BellExpression:
    return expression_from_dict(read_json(path))


def load_behavior(path) -> Behavior:
    return behavior_from_dict(read_json(path))


def load_certificate(path) -> SOSCertificate:
    return certificate_from_dict(read_json(path))


# -- CSV tables -------------------------------------------------------------


def _write_csv(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def octagon_csv(vertices) -> str:
    return _write_csv(OCTAGON_HEADER, [(k, format_scalar(v.r0), format_scalar(v.r1)) for k, v in enumerate(vertices)])


def cluster_csv(clusters) -> str:
    rows = [
        (k, format_scalar(cluster.value), *(format_scalar(v) for v in cluster.center.vector()))
        for k, cluster in enumerate(clusters)
    ]
    return _write_csv(CLUSTER_HEADER, rows)


def table_csv(header, rows) -> str:
    return _write_csv(header, [[format_scalar(x) if not isinstance(x, str) else x for x in row] for row in rows])
