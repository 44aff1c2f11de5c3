"""Linear systems solved with generalized inverses.

Each solver returns a :class:`SolveResult` whose ``residual`` is the
normalized residual of the equation the method actually solves (which is
not always ``Ax = b``); ``space_residual`` measures membership of the
particular solution in the subspace where it is unique, when there is one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classify import is_partial_isometry
from .errors import ConsistencyViolated, DimensionMismatch, NotCepd, NotPartialIsometry, RightSideNotInRange
from .inverses import core_ep, drazin, index, moore_penrose, power_pinv
from .matrix import DEFAULT_TOL, Tolerance, as_matrix, conj_transpose, matrix_power, require_square, residual

METHODS = ("cmp", "drazin", "corange", "pi", "dstar")


@dataclass(frozen=True)
class SolveResult:
    particular: np.ndarray
    homogeneous_projector: Optional[np.ndarray]
    residual: float
    solution_space_note: str
    space_residual: Optional[float] = None

    def general(self, y) -> np.ndarray:
        """Member of the solution family for free vector *y*."""
        if self.homogeneous_projector is None:
            return self.particular.copy()
        return self.particular + self.homogeneous_projector @ as_matrix(y)


def _prepare(a, b):
    a = as_matrix(a)
    n = require_square(a)
    b = as_matrix(b)
    if b.shape != (n, 1):
        raise DimensionMismatch(f"right-hand side must be {n}x1, got {b.shape[0]}x{b.shape[1]}")
    return a, b, n


def _cepd_inverses(a, tol):
    ad = drazin(a, tol)
    cep = core_ep(a, tol)
    res = residual(cep, ad)
    if res > tol.eq_atol:
        raise NotCepd(f"matrix is not CEPD: |A^cep - A^D| residual {res:.3e}")
    return ad, cep


def _require_pi(a, tol):
    if not is_partial_isometry(a, tol):
        res = residual(a @ conj_transpose(a) @ a, a)
        raise NotPartialIsometry(f"A A^* A != A (residual {res:.3e})")


def solve_cmp_system(a, b, tol: Tolerance = DEFAULT_TOL) -> SolveResult:
    """General solution of ``A (x - A^cep b) = 0`` for CEPD A.

    ``x = A^{c+} b + (I - A^+ A) y``.
    """
    a, b, n = _prepare(a, b)
    _, cep = _cepd_inverses(a, tol)
    ap = moore_penrose(a, tol)
    ad = drazin(a, tol)
    x = ap @ a @ ad @ a @ ap @ b
    return SolveResult(
        particular=x,
        homogeneous_projector=np.eye(n) - ap @ a,
        residual=residual(a @ x, a @ cep @ b),
        solution_space_note="all x with A x = A A^cep b",
    )


def solve_drazin_system(a, b, tol: Tolerance = DEFAULT_TOL) -> SolveResult:
    """General solution ``x = A^D b + (I - A^D A) y`` of ``A^D (A x - b) = 0``."""
    a, b, n = _prepare(a, b)
    ad, _ = _cepd_inverses(a, tol)
    x = ad @ b
    return SolveResult(
        particular=x,
        homogeneous_projector=np.eye(n) - ad @ a,
        residual=residual(ad @ a @ x, ad @ b),
        solution_space_note="all x with A^D A x = A^D b",
    )


def solve_in_corange(a, b, tol: Tolerance = DEFAULT_TOL) -> SolveResult:
    """The unique solution of ``Ax = b`` in ``R(A^cep)``, namely ``A^cep b``.

    Consistency is judged after the fact: ``|Ax - b| <= eq_atol max(1, |b|)``.
    """
    a, b, _ = _prepare(a, b)
    _, cep = _cepd_inverses(a, tol)
    x = cep @ b
    gap = float(np.linalg.norm(a @ x - b))
    if gap > tol.eq_atol * max(1.0, float(np.linalg.norm(b))):
        raise ConsistencyViolated(f"A x = b has no solution in R(A^cep): |Ax - b| = {gap:.3e}")
    return SolveResult(
        particular=x,
        homogeneous_projector=None,
        residual=residual(a @ x, b),
        solution_space_note="unique in R(A^cep) = R(A^k)",
        space_residual=residual(cep @ moore_penrose(cep, tol) @ x, x),
    )


def solve_pi(a, b, tol: Tolerance = DEFAULT_TOL) -> SolveResult:
    """``x = A^* b`` for a partial isometry A and ``b`` in ``R(A)``."""
    a, b, _ = _prepare(a, b)
    _require_pi(a, tol)
    ap = moore_penrose(a, tol)
    if residual(a @ ap @ b, b) > tol.eq_atol:
        raise RightSideNotInRange("b is not in the range of A")
    x = conj_transpose(a) @ b
    return SolveResult(
        particular=x,
        homogeneous_projector=None,
        residual=residual(a @ x, b),
        solution_space_note="a solution of A x = b (minimum norm, since A^* = A^+)",
        space_residual=residual(ap @ a @ x, x),
    )


def solve_drazin_star(a, b, tol: Tolerance = DEFAULT_TOL) -> SolveResult:
    """``x = A^D A A^* b``, the unique solution of ``Ax = b`` in ``R(A^k)``.

    Requires a partial isometry and ``b`` in ``R(A A^D)``; ``A A^D`` is the
    projector onto ``R(A^k)`` so membership is tested with it directly.
    """
    a, b, _ = _prepare(a, b)
    _require_pi(a, tol)
    ad = drazin(a, tol)
    proj = a @ ad
    if residual(proj @ b, b) > tol.eq_atol:
        raise RightSideNotInRange("b is not in R(A A^D)")
    k = index(a, tol)
    x = ad @ a @ conj_transpose(a) @ b
    ak = matrix_power(a, k)
    return SolveResult(
        particular=x,
        homogeneous_projector=None,
        residual=residual(a @ x, b),
        solution_space_note="unique in R(A^k)",
        space_residual=residual(ak @ power_pinv(a, k, tol) @ x, x),
    )


_SOLVERS = {
    "cmp": solve_cmp_system,
    "drazin": solve_drazin_system,
    "corange": solve_in_corange,
    "pi": solve_pi,
    "dstar": solve_drazin_star,
}


def solve(method: str, a, b, tol: Tolerance = DEFAULT_TOL) -> SolveResult:
    try:
        fn = _SOLVERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}") from None
    return fn(a, b, tol)
