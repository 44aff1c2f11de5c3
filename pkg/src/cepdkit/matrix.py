"""Dense complex matrices: validation, powers, numerical rank and comparison.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.
:func:`as_matrix` is the single entry point that validates shape and
finiteness; every public routine in the package passes its inputs through it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonFiniteEntry, NonSquare


@dataclass(frozen=True)
class Tolerance:
    """Thresholds for every approximate decision.

    ``rank_rtol`` is relative to the largest singular value and is further
    multiplied by ``max(m, n)`` when a rank is taken. ``eq_atol`` bounds the
    normalized Frobenius residual used by :func:`approx_eq`.
    """

    rank_rtol: float = 1e-10
    eq_atol: float = 1e-9

    def __post_init__(self):
        for name in ("rank_rtol", "eq_atol"):
            value = getattr(self, name)
            if not (0.0 < value < 1.0):
                raise ValueError(f"{name} must lie in (0, 1), got {value!r}")


DEFAULT_TOL = Tolerance()


def as_matrix(a) -> np.ndarray:
    """Coerce *a* to a 2-D finite complex128 array.

    Scalars become 1x1 and 1-D input becomes a column.
    """
    arr = np.array(a, dtype=np.complex128)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    elif arr.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got {arr.ndim} dimensions")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionMismatch(f"matrix dimensions must be positive, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntry("matrix contains NaN or Inf entries")
    return arr


def require_square(a: np.ndarray) -> int:
    if a.shape[0] != a.shape[1]:
        raise NonSquare(f"expected a square matrix, got {a.shape[0]}x{a.shape[1]}")
    return a.shape[0]


def conj_transpose(a) -> np.ndarray:
    a = as_matrix(a)
    return a.conj().T.copy()


def matrix_power(a, p: int) -> np.ndarray:
    """``a**p`` by binary exponentiation; ``p = 0`` gives the identity."""
    a = as_matrix(a)
    n = require_square(a)
    if p < 0:
        raise ValueError("power must be non-negative")
    result = np.eye(n, dtype=np.complex128)
    base = a
    while p:
        if p & 1:
            result = result @ base
        p >>= 1
        if p:
            base = base @ base
    return result


def rank_threshold(sigma: np.ndarray, shape: tuple[int, int], tol: Tolerance = DEFAULT_TOL,
                   scale: float = 0.0) -> float:
    """Cut-off below which a singular value counts as zero.

    ``scale`` raises the reference magnitude above ``sigma_max``. Callers pass
    ``|A|_2 ** p`` when *sigma* belongs to a computed power ``A^p``: the
    roundoff in forming the power is proportional to that quantity, so a
    power that vanishes in exact arithmetic is still recognised as zero.
    """
    smax = float(sigma[0]) if sigma.size else 0.0
    return tol.rank_rtol * max(shape) * max(smax, scale)


def rank(a, tol: Tolerance = DEFAULT_TOL, scale: float = 0.0) -> int:
    a = as_matrix(a)
    sigma = np.linalg.svd(a, compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    return int(np.count_nonzero(sigma > rank_threshold(sigma, a.shape, tol, scale)))


def spectral_norm(a) -> float:
    return float(np.linalg.norm(as_matrix(a), 2))


def power_rank(a, p: int, tol: Tolerance = DEFAULT_TOL) -> int:
    """``rank(A^p)`` with the threshold scaled by ``|A|_2 ** p``."""
    return rank(matrix_power(a, p), tol, spectral_norm(a) ** p)


def residual(x, y) -> float:
    """Normalized Frobenius distance ``|x - y| / max(1, |x|, |y|)``."""
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise DimensionMismatch(f"cannot compare {x.shape} with {y.shape}")
    nx = np.linalg.norm(x)
    ny = np.linalg.norm(y)
    return float(np.linalg.norm(x - y) / max(1.0, nx, ny))


def approx_eq(x, y, tol: Tolerance = DEFAULT_TOL) -> bool:
    return residual(as_matrix(x), as_matrix(y)) <= tol.eq_atol


def is_zero(x, tol: Tolerance = DEFAULT_TOL) -> bool:
    x = np.asarray(x)
    return residual(x, np.zeros_like(x)) <= tol.eq_atol


def direct_sum(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=np.complex128)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0]:, a.shape[1]:] = b
    return out
