"""Seeded generators of structured random matrices.

All generators draw from ``numpy.random.default_rng(seed)`` (PCG64), so a
given :class:`GenSpec` yields bit-identical output across runs. The shared
building blocks are

* a random unitary: QR of a complex Gaussian matrix with the phases of
  ``diag(R)`` folded back into ``Q``;
* an invertible "core" block ``Q1 diag(s) Q2^*`` with ``s`` uniform on
  ``[spectrum_floor, 2 * spectrum_floor]`` (condition number at most 2);
* a nilpotent block whose leading ``k x k`` corner is a Jordan-style shift
  with random unimodular-ish superdiagonal weights, zero elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleSpec
from .matrix import direct_sum

# singular values of the random similarity in gen_with_index lie in [1, S_COND]
S_COND = 3.0


@dataclass(frozen=True)
class GenSpec:
    """Parameters for a generated n x n matrix.

    ``r`` is the size of the invertible core block, i.e. ``rank(A^k)``; the
    nilpotent block adds ``k - 1`` to the rank of A itself.
    """

    n: int
    r: int
    k: int = 0
    seed: int = 0
    spectrum_floor: float = 1.0

    def __post_init__(self):
        if self.n < 1:
            raise InfeasibleSpec(f"n must be positive, got {self.n}")
        if not 0 <= self.r <= self.n:
            raise InfeasibleSpec(f"need 0 <= r <= n, got r={self.r}, n={self.n}")
        if not 0 <= self.k <= self.n:
            raise InfeasibleSpec(f"need 0 <= k <= n, got k={self.k}")
        if self.spectrum_floor <= 0:
            raise InfeasibleSpec("spectrum_floor must be positive")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def _core_block(r: int, floor: float, rng: np.random.Generator) -> np.ndarray:
    if r == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    s = rng.uniform(floor, 2 * floor, size=r)
    return (random_unitary(r, rng) * s) @ random_unitary(r, rng).conj().T


def _nilpotent_block(size: int, k: int, rng: np.random.Generator, unit: bool = False) -> np.ndarray:
    n = np.zeros((size, size), dtype=np.complex128)
    if k >= 2:
        if unit:
            w = np.ones(k - 1)
        else:
            w = rng.uniform(0.5, 1.5, size=k - 1) * np.exp(2j * np.pi * rng.uniform(size=k - 1))
        idx = np.arange(k - 1)
        n[idx, idx + 1] = w
    return n


def _check_index_spec(spec: GenSpec) -> None:
    if spec.k == 0 and spec.r < spec.n:
        raise InfeasibleSpec("index 0 requires r = n (an invertible matrix)")
    if spec.k >= 1 and spec.r == spec.n:
        raise InfeasibleSpec("index >= 1 requires r < n so a nilpotent block fits")
    if spec.k > spec.n - spec.r:
        raise InfeasibleSpec(f"nilpotent block of size {spec.n - spec.r} cannot have index {spec.k}")


def _blocks(spec: GenSpec, rng, unit=False):
    m = _core_block(spec.r, spec.spectrum_floor, rng)
    nil = _nilpotent_block(spec.n - spec.r, spec.k, rng, unit=unit)
    return m, nil


def _join(m, nil):
    if m.size == 0:
        return nil.copy()
    if nil.size == 0:
        return m.copy()
    return direct_sum(m, nil)


def gen_with_index(spec: GenSpec) -> np.ndarray:
    """``S (M + N) S^-1`` with M invertible, N nilpotent of index k, S invertible."""
    _check_index_spec(spec)
    rng = spec.rng()
    m, nil = _blocks(spec, rng)
    q1 = random_unitary(spec.n, rng)
    q2 = random_unitary(spec.n, rng)
    t = rng.uniform(1.0, S_COND, size=spec.n)
    s = (q1 * t) @ q2.conj().T
    s_inv = (q2 / t) @ q1.conj().T
    return s @ _join(m, nil) @ s_inv


def gen_cepd(spec: GenSpec) -> np.ndarray:
    """``U (M + N) U^*`` with U unitary.

    Unitary similarity keeps the core and nilpotent parts orthogonal, which is
    what forces the core EP inverse to coincide with the Drazin inverse.
    """
    _check_index_spec(spec)
    rng = spec.rng()
    m, nil = _blocks(spec, rng)
    u = random_unitary(spec.n, rng)
    return u @ _join(m, nil) @ u.conj().T


def gen_partial_isometry(spec: GenSpec) -> np.ndarray:
    """``U diag(I_r, 0) V^*`` for independent random unitaries U, V; ``spec.k`` is ignored."""
    rng = spec.rng()
    u = random_unitary(spec.n, rng)
    v = random_unitary(spec.n, rng)
    return u[:, : spec.r] @ v[:, : spec.r].conj().T


def gen_power_partial_isometry(spec: GenSpec, hermitian: bool = False) -> np.ndarray:
    """A matrix of index k all of whose powers are partial isometries.

    Built as ``U (W + N) U^*`` with W unitary (a Hermitian unitary when
    *hermitian* is set) and N a 0/1 shift, so every power is again
    unitary-plus-shift.
    """
    _check_index_spec(spec)
    rng = spec.rng()
    if spec.r:
        w = random_unitary(spec.r, rng)
        if hermitian:
            signs = rng.choice([-1.0, 1.0], size=spec.r)
            w = (w * signs) @ w.conj().T
    else:
        w = np.zeros((0, 0), dtype=np.complex128)
    nil = _nilpotent_block(spec.n - spec.r, spec.k, rng, unit=True)
    u = random_unitary(spec.n, rng)
    return u @ _join(w, nil) @ u.conj().T


def gen_rectangular(m: int, n: int, r: int, seed: int = 0, spectrum_floor: float = 1.0) -> np.ndarray:
    """Random m x n matrix of rank r with retained singular values in [floor, 2 floor]."""
    if not 0 <= r <= min(m, n):
        raise InfeasibleSpec(f"rank {r} impossible for a {m}x{n} matrix")
    rng = np.random.default_rng(seed)
    u = random_unitary(m, rng)[:, :r]
    v = random_unitary(n, rng)[:, :r]
    s = rng.uniform(spectrum_floor, 2 * spectrum_floor, size=r)
    return (u * s) @ v.conj().T


def gen_structured(seed: int, n_max: int = 8, k_max: int = 3) -> tuple[str, np.ndarray]:
    """Draw one matrix from a mixture of the square generators.

    Returns ``(family, matrix)``; family is one of ``"index"``, ``"cepd"``,
    ``"pi"`` or ``"pi_powers"``. Used to drive the property suites.
    """
    rng = np.random.default_rng(seed)
    family = ["index", "cepd", "pi", "pi_powers"][int(rng.integers(4))]
    n = int(rng.integers(1, n_max + 1))
    sub = int(rng.integers(2**31))
    if family == "pi":
        r = int(rng.integers(0, n + 1))
        return family, gen_partial_isometry(GenSpec(n, r, 0, sub))
    k = int(rng.integers(0, min(k_max, n) + 1))
    r = n if k == 0 else int(rng.integers(0, n - k + 1))
    spec = GenSpec(n, r, k, sub)
    if family == "index":
        return family, gen_with_index(spec)
    if family == "cepd":
        return family, gen_cepd(spec)
    return family, gen_power_partial_isometry(spec, hermitian=bool(rng.integers(2)))
