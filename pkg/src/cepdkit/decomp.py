"""SVD, Hartwig-Spindelboeck form and the core-nilpotent split."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, ZeroMatrix
from .matrix import DEFAULT_TOL, Tolerance, as_matrix, rank_threshold, require_square


@dataclass(frozen=True)
class SvdResult:
    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray

    def reconstruct(self) -> np.ndarray:
        m, n = self.u.shape[0], self.v.shape[0]
        s = np.zeros((m, n), dtype=np.complex128)
        k = self.sigma.size
        s[:k, :k] = np.diag(self.sigma)
        return self.u @ s @ self.v.conj().T


def svd(a) -> SvdResult:
    """Full SVD ``a = u @ diag(sigma) @ v^*`` with square unitary factors."""
    a = as_matrix(a)
    try:
        u, sigma, vh = np.linalg.svd(a, full_matrices=True)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK non-convergence
        raise ConvergenceFailure(str(exc)) from exc
    return SvdResult(u=u, sigma=sigma, v=vh.conj().T)


@dataclass(frozen=True)
class HsDecomposition:
    """``A = U [[S K, S L], [0, 0]] U^*`` with ``K K^* + L L^* = I_r``.

    ``sigma`` holds the r retained singular values one per diagonal slot;
    ``sigma_blocks`` groups them into (value, multiplicity) pairs with strictly
    decreasing values.
    """

    u: np.ndarray
    sigma: np.ndarray
    sigma_blocks: list
    k_block: np.ndarray
    l_block: np.ndarray
    r: int

    @property
    def n(self) -> int:
        return self.u.shape[0]

    @property
    def sigma_k(self) -> np.ndarray:
        return self.sigma[:, None] * self.k_block

    @property
    def sigma_l(self) -> np.ndarray:
        return self.sigma[:, None] * self.l_block

    def embed(self, top_left, top_right=None) -> np.ndarray:
        """Return ``U [[top_left, top_right], [0, 0]] U^*``."""
        n, r = self.n, self.r
        blk = np.zeros((n, n), dtype=np.complex128)
        blk[:r, :r] = top_left
        if top_right is not None:
            blk[:r, r:] = top_right
        return self.u @ blk @ self.u.conj().T

    def reconstruct(self) -> np.ndarray:
        return self.embed(self.sigma_k, self.sigma_l)


def group_singular_values(sigma, tol: Tolerance = DEFAULT_TOL) -> list:
    # consecutive values belong to one block unless s_j / s_{j+1} - 1 exceeds the gap
    gap = 10 * tol.rank_rtol
    blocks = []
    start = 0
    for j in range(1, len(sigma) + 1):
        if j == len(sigma) or sigma[j - 1] / sigma[j] - 1.0 > gap:
            group = sigma[start:j]
            blocks.append((float(np.mean(group)), j - start))
            start = j
    return blocks


def hs_decompose(a, tol: Tolerance = DEFAULT_TOL) -> HsDecomposition:
    a = as_matrix(a)
    n = require_square(a)
    res = svd(a)
    thresh = rank_threshold(res.sigma, a.shape, tol)
    r = int(np.count_nonzero(res.sigma > thresh)) if res.sigma[0] > 0 else 0
    if r == 0:
        raise ZeroMatrix("Hartwig-Spindelboeck decomposition needs rank > 0")
    u = res.u
    kl = (res.v.conj().T @ u)[:r, :]
    sigma = res.sigma[:r].astype(float)
    return HsDecomposition(
        u=u,
        sigma=sigma,
        sigma_blocks=group_singular_values(sigma, tol),
        k_block=kl[:, :r].copy(),
        l_block=kl[:, r:].copy(),
        r=r,
    )


@dataclass(frozen=True)
class CoreNilpotentParts:
    core: np.ndarray
    nilpotent: np.ndarray
    index_of_nilpotent: int


def core_nilpotent(a, tol: Tolerance = DEFAULT_TOL) -> CoreNilpotentParts:
    """Split ``a = core + nilpotent`` with ``core = A A^D A``.

    ``index_of_nilpotent`` is ``ind(a)``, the nilpotency index of the second
    part (0 when that part vanishes).
    """
    from .inverses import drazin, index

    a = as_matrix(a)
    require_square(a)
    k = index(a, tol)
    core = a @ drazin(a, tol) @ a
    return CoreNilpotentParts(core=core, nilpotent=a - core, index_of_nilpotent=k)
