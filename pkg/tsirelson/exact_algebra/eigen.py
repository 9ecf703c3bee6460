import logging

import numpy as np

from tsirelson import conf
from tsirelson.exceptions import SolverError

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12
OFF_DIAGONAL_TOL = 1e-13


def _rotate(a: np.ndarray, v: np.ndarray, k: int, l: int) -> None:
    """Rotate in the (k, l) plane so that a[k, l] becomes zero."""
    diff = a[l, l] - a[k, k]
    if abs(a[k, l]) < abs(diff) * 1.0e-36:
        t = a[k, l] / diff
    else:
        phi = diff / (2.0 * a[k, l])
        t = 1.0 / (abs(phi) + np.sqrt(phi * phi + 1.0))
        if phi < 0.0:
            t = -t
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    rotation = np.array([[c, -s], [s, c]])
    idx = [k, l]
    a[:, idx] = a[:, idx] @ rotation.T
    a[idx, :] = rotation @ a[idx, :]
    a[k, l] = a[l, k] = 0.0
    v[:, idx] = v[:, idx] @ rotation.T


def eig_sym_numeric(matrix, vectors: bool = False, max_sweeps: int | None = None):
    """
    Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    :param matrix: array-like square matrix, symmetric within 1e-12
    :param vectors: also return the eigenvectors as columns
    :param max_sweeps: sweep cap, defaults to ``TSIRELSON_JACOBI_MAX_SWEEPS``
    :returns: ascending eigenvalues, or ``(values, vectors)``
    :raises ValueError: for non-square or non-symmetric input
    :raises SolverError: when the off-diagonal norm does not fall below
        1e-13 (relative to the Frobenius norm) within the sweep cap
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.linalg.norm(a)))
    if np.max(np.abs(a - a.T), initial=0.0) > SYMMETRY_TOL * scale:
        raise ValueError("eig_sym_numeric requires a symmetric matrix")
    a = (a + a.T) / 2.0
    n = a.shape[0]
    v = np.identity(n)
    max_sweeps = max_sweeps or conf.get("TSIRELSON_JACOBI_MAX_SWEEPS")

    def off_norm():
        # summed directly, full minus diagonal sum cancels
        return float(np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)))

    sweep = 0
    while off_norm() > OFF_DIAGONAL_TOL * scale:
        if sweep == max_sweeps:
            raise SolverError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps")
        for k in range(n - 1):
            for l in range(k + 1, n):
                if a[k, l] != 0.0:
                    _rotate(a, v, k, l)
        sweep += 1
    logger.debug(f"Jacobi converged after {sweep} sweeps on a {n}x{n} matrix")

    values = np.diag(a).copy()
    order = np.argsort(values)
    if vectors:
        return values[order], v[:, order]
    return values[order]
