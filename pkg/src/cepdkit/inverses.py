"""Constructors for the generalized inverses of a square complex matrix.

Every constructor validates its output against the defining equations of the
inverse it claims to return; a residual above ``100 * eq_atol`` raises
:class:`~cepdkit.errors.DefiningEquationsViolated` instead of returning a
silently wrong matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .decomp import svd
from .errors import DefiningEquationsViolated, IndexTooLarge
from .matrix import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    conj_transpose,
    matrix_power,
    rank,
    rank_threshold,
    spectral_norm,
    require_square,
    residual,
)

KINDS = ("mp", "group", "drazin", "cep", "dmp", "mpd", "cmp", "dstar")

_CHECK_FACTOR = 100.0


def moore_penrose(a, tol: Tolerance = DEFAULT_TOL, scale: float = 0.0) -> np.ndarray:
    """Pseudoinverse from the SVD; singular values under the rank threshold map to 0.

    *scale* is forwarded to :func:`~cepdkit.matrix.rank_threshold`.
    """
    a = as_matrix(a)
    res = svd(a)
    m, n = a.shape
    sigma = res.sigma
    if sigma[0] > 0:
        keep = sigma > rank_threshold(sigma, a.shape, tol, scale)
    else:
        keep = np.zeros_like(sigma, dtype=bool)
    r = int(np.count_nonzero(keep))
    if r == 0:
        return np.zeros((n, m), dtype=np.complex128)
    return (res.v[:, :r] / sigma[:r]) @ res.u[:, :r].conj().T


def power_pinv(a, p: int, tol: Tolerance = DEFAULT_TOL, scale: float = 0.0) -> np.ndarray:
    """``(A^p)^+`` with the rank threshold scaled by ``max(|A|_2, scale) ** p``."""
    a = as_matrix(a)
    return moore_penrose(matrix_power(a, p), tol, max(spectral_norm(a), scale) ** p)


def index(a, tol: Tolerance = DEFAULT_TOL, scale: float = 0.0) -> int:
    """Smallest ``k >= 0`` with ``rank(A^k) == rank(A^(k+1))``.

    Ranks of powers are taken against ``max(|A|_2, scale) ** p`` so that a
    power which is zero in exact arithmetic is not mistaken for a full-rank
    matrix of roundoff. Pass *scale* when *a* is a block cut out of a larger
    matrix whose norm sets the roundoff level.
    """
    a = as_matrix(a)
    n = require_square(a)
    norm = max(spectral_norm(a), scale)
    power = np.eye(n, dtype=np.complex128)
    prev = n
    for k in range(n + 1):
        nxt = power @ a
        r_next = rank(nxt, tol, norm ** (k + 1))
        if r_next == prev:
            return k
        prev = r_next
        power = nxt
    return n  # pragma: no cover - the rank chain stabilizes by k = n


def _check(kind: str, residuals: dict, tol: Tolerance) -> None:
    if any(v > _CHECK_FACTOR * tol.eq_atol for v in residuals.values()):
        raise DefiningEquationsViolated(kind, residuals)


def _drazin_raw(a, k, tol, scale=0.0):
    ak = matrix_power(a, k)
    return ak @ power_pinv(a, 2 * k + 1, tol, scale) @ ak


def drazin_residuals(a, x, k) -> dict:
    ak = matrix_power(a, k)
    return {
        "AX = XA": residual(a @ x, x @ a),
        "XAX = X": residual(x @ a @ x, x),
        "XA^(k+1) = A^k": residual(x @ ak @ a, ak),
    }


def drazin(a, tol: Tolerance = DEFAULT_TOL, scale: float = 0.0) -> np.ndarray:
    """Drazin inverse ``A^l (A^(2l+1))^+ A^l`` with ``l = ind(A)``.

    *scale* has the meaning documented in :func:`index`.
    """
    a = as_matrix(a)
    require_square(a)
    k = index(a, tol, scale)
    x = _drazin_raw(a, k, tol, scale)
    _check("drazin", drazin_residuals(a, x, k), tol)
    return x


def group_inverse(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    a = as_matrix(a)
    require_square(a)
    k = index(a, tol)
    if k > 1:
        raise IndexTooLarge(f"group inverse needs ind(A) <= 1, got {k}")
    x = _drazin_raw(a, k, tol)
    _check("group", drazin_residuals(a, x, 1), tol)
    return x


def core_ep_residuals(a, x, k, tol: Tolerance = DEFAULT_TOL, scale: float = 0.0) -> dict:
    ak = matrix_power(a, k)
    proj = ak @ power_pinv(a, k, tol, scale)
    xp = moore_penrose(x, tol)
    return {
        "XAX = X": residual(x @ a @ x, x),
        "R(X) = R(A^k)": residual(x @ xp, proj),
        "R(X^*) = R(A^k)": residual(xp @ x, proj),
    }


def core_ep(a, tol: Tolerance = DEFAULT_TOL, scale: float = 0.0) -> np.ndarray:
    """Core EP inverse ``A^k (A^(k+1))^+``.

    The range conditions are checked through orthogonal projectors: ``X X^+``
    and ``X^+ X`` must both equal ``A^k (A^k)^+``.
    """
    a = as_matrix(a)
    require_square(a)
    k = index(a, tol, scale)
    x = matrix_power(a, k) @ power_pinv(a, k + 1, tol, scale)
    _check("cep", core_ep_residuals(a, x, k, tol, scale), tol)
    return x


def dmp(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """DMP inverse ``A^D A A^+``."""
    a = as_matrix(a)
    require_square(a)
    return drazin(a, tol) @ a @ moore_penrose(a, tol)


def mpd(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """MPD inverse ``A^+ A A^D``."""
    a = as_matrix(a)
    require_square(a)
    return moore_penrose(a, tol) @ a @ drazin(a, tol)


def cmp(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """CMP inverse ``A^+ A A^D A A^+``."""
    a = as_matrix(a)
    require_square(a)
    ap = moore_penrose(a, tol)
    return ap @ a @ drazin(a, tol) @ a @ ap


def drazin_star(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Drazin-star matrix ``A^D A A^*``."""
    a = as_matrix(a)
    require_square(a)
    return drazin(a, tol) @ a @ conj_transpose(a)


def compute(kind: str, a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    try:
        fn = _CONSTRUCTORS[kind]
    except KeyError:
        raise ValueError(f"unknown inverse kind {kind!r}; expected one of {KINDS}") from None
    return fn(a, tol)


def defining_residuals(kind: str, a, x, tol: Tolerance = DEFAULT_TOL) -> dict:
    """Residuals of the defining system of inverse *kind* evaluated at *x*.

    Keys are human-readable equations; values are normalized Frobenius
    residuals.
    """
    a = as_matrix(a)
    x = as_matrix(x)
    if kind == "mp":
        return {
            "XAX = X": residual(x @ a @ x, x),
            "AXA = A": residual(a @ x @ a, a),
            "(AX)^* = AX": residual(conj_transpose(a @ x), a @ x),
            "(XA)^* = XA": residual(conj_transpose(x @ a), x @ a),
        }
    k = index(a, tol)
    if kind == "drazin":
        return drazin_residuals(a, x, k)
    if kind == "group":
        return drazin_residuals(a, x, 1)
    if kind == "cep":
        return core_ep_residuals(a, x, k, tol)
    ap = moore_penrose(a, tol)
    ad = drazin(a, tol)
    ak = matrix_power(a, k)
    if kind == "dmp":
        return {
            "XA = A^D A": residual(x @ a, ad @ a),
            "XAX = X": residual(x @ a @ x, x),
            "A^k X = A^k A^+": residual(ak @ x, ak @ ap),
        }
    if kind == "mpd":
        return {
            "AX = A A^D": residual(a @ x, a @ ad),
            "XAX = X": residual(x @ a @ x, x),
            "X A^k = A^+ A^k": residual(x @ ak, ap @ ak),
        }
    if kind == "cmp":
        a1 = a @ ad @ a
        return {
            "AXA = A_1": residual(a @ x @ a, a1),
            "XAX = X": residual(x @ a @ x, x),
            "XA = A^+ A_1": residual(x @ a, ap @ a1),
            "AX = A_1 A^+": residual(a @ x, a1 @ ap),
        }
    if kind == "dstar":
        return {"X = A^D A A^*": residual(x, ad @ a @ conj_transpose(a))}
    raise ValueError(f"unknown inverse kind {kind!r}")


@dataclass(frozen=True)
class InverseBundle:
    mp: np.ndarray
    drazin: np.ndarray
    core_ep: np.ndarray
    dmp: np.ndarray
    mpd: np.ndarray
    cmp: np.ndarray
    drazin_star: np.ndarray
    group: Optional[np.ndarray]
    index: int


def inverse_bundle(a, tol: Tolerance = DEFAULT_TOL) -> InverseBundle:
    """All eight inverses at once, sharing the A^+ and A^D computations."""
    a = as_matrix(a)
    require_square(a)
    k = index(a, tol)
    ap = moore_penrose(a, tol)
    ad = drazin(a, tol)
    return InverseBundle(
        mp=ap,
        drazin=ad,
        core_ep=core_ep(a, tol),
        dmp=ad @ a @ ap,
        mpd=ap @ a @ ad,
        cmp=ap @ a @ ad @ a @ ap,
        drazin_star=ad @ a @ conj_transpose(a),
        group=ad if k <= 1 else None,
        index=k,
    )


_CONSTRUCTORS = {
    "mp": moore_penrose,
    "group": group_inverse,
    "drazin": drazin,
    "cep": core_ep,
    "dmp": dmp,
    "mpd": mpd,
    "cmp": cmp,
    "dstar": drazin_star,
}
