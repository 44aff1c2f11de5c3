import numpy as np
import pytest

from cepdkit import (
    Tolerance,
    cmp,
    core_ep,
    defining_residuals,
    dmp,
    drazin,
    drazin_star,
    group_inverse,
    hs_decompose,
    index,
    inverse_bundle,
    moore_penrose,
    mpd,
)
from cepdkit.errors import DefiningEquationsViolated, IndexTooLarge, NonSquare
from cepdkit.inverses import KINDS, compute, power_pinv
from cepdkit.matrix import approx_eq, is_zero, matrix_power, residual
from cepdkit.randgen import gen_rectangular, gen_structured

import worked_examples as pd

EQ = 1e-9


def _close(x, y, atol=1e-9):
    np.testing.assert_allclose(np.asarray(x), np.asarray(y, dtype=complex), rtol=0, atol=atol)


def test_moore_penrose_examples():
    _close(moore_penrose(pd.E45), pd.E45_PINV)
    _close(moore_penrose(np.eye(4)), np.eye(4))
    _close(moore_penrose(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]))


def test_penrose_equations_on_rectangular():
    rng = np.random.default_rng(7)
    for _ in range(200):
        m, n = (int(v) for v in rng.integers(1, 9, size=2))
        r = int(rng.integers(0, min(m, n) + 1))
        a = gen_rectangular(m, n, r, seed=int(rng.integers(2**31)))
        x = moore_penrose(a)
        res = defining_residuals("mp", a, x)
        assert max(res.values()) <= EQ, res
        assert approx_eq(moore_penrose(x), a)


def test_index_examples():
    assert index(pd.NILPOTENT) == 3
    assert index(np.eye(5)) == 0
    assert index(pd.E45) == 2
    assert index(pd.B) == pd.B_INDEX
    assert index(np.zeros((3, 3))) == 1


def test_index_nonsquare():
    with pytest.raises(NonSquare):
        index(np.ones((2, 3)))


def test_drazin_examples():
    _close(drazin(pd.NILPOTENT), np.zeros((3, 3)))
    _close(drazin(pd.E42), pd.E42_DRAZIN)
    a = np.array([[2.0, 1.0, 0.0], [0.0, 1.0, 4.0], [1.0, 0.0, 3.0]])
    _close(drazin(a), np.linalg.inv(a), atol=1e-12)


def test_group_inverse_examples():
    _close(group_inverse(np.eye(3)), np.eye(3))
    _close(group_inverse(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]))
    _close(group_inverse(pd.E43I), pd.E43I_DRAZIN, atol=1e-10)


def test_group_inverse_requires_index_one():
    with pytest.raises(IndexTooLarge):
        group_inverse(pd.E45)


def test_core_ep_examples():
    _close(core_ep(pd.E45), pd.E45_CORE_EP)
    _close(core_ep(pd.B), pd.B_CORE_EP)
    _close(core_ep(np.eye(3)), np.eye(3))


def test_dmp_mpd_cmp_examples():
    _close(dmp(pd.E43I), pd.E43I_DMP, atol=1e-10)
    _close(mpd(pd.E43I), pd.E43I_MPD, atol=1e-10)
    _close(cmp(pd.E43I), pd.E43I_CMP, atol=1e-10)
    for fn in (dmp, mpd, cmp):
        _close(fn(np.eye(3)), np.eye(3))
        _close(fn(pd.NILPOTENT), np.zeros((3, 3)))
    a = np.array([[3.0, 1.0], [1.0, 2.0]])
    _close(dmp(a), np.linalg.inv(a), atol=1e-12)


def test_drazin_star_examples():
    _close(drazin_star(np.eye(3)), np.eye(3))
    _close(drazin_star(pd.NILPOTENT), np.zeros((3, 3)))
    _close(drazin_star(pd.E42), pd.E42_DSTAR)


@pytest.mark.parametrize("fn", [drazin, core_ep, dmp, mpd, cmp, drazin_star, group_inverse])
def test_nonsquare_rejected(fn):
    with pytest.raises(NonSquare):
        fn(np.ones((2, 3)))


def test_misclassified_rank_is_reported():
    # with a coarse threshold the small singular value is dropped and the
    # Drazin equations cannot all hold
    coarse = Tolerance(rank_rtol=0.1)
    with pytest.raises(DefiningEquationsViolated) as info:
        drazin(np.diag([1.0, 1e-3]), coarse)
    assert info.value.kind == "drazin"


def test_defining_systems_on_generated():
    worst = 0.0
    for seed in range(200):
        _, a = gen_structured(seed)
        b = inverse_bundle(a)
        for kind, x in [("drazin", b.drazin), ("cep", b.core_ep), ("dmp", b.dmp), ("mpd", b.mpd),
                        ("cmp", b.cmp), ("dstar", b.drazin_star), ("mp", b.mp)]:
            worst = max(worst, *defining_residuals(kind, a, x).values())
        if b.index <= 1:
            assert b.group is not None
            worst = max(worst, *defining_residuals("group", a, b.group).values())
        else:
            assert b.group is None
    assert worst <= EQ


def test_compute_dispatch_matches_constructors():
    a = pd.E45
    for kind in KINDS:
        if kind == "group":
            continue
        res = defining_residuals(kind, a, compute(kind, a))
        assert max(res.values()) <= EQ, (kind, res)
    with pytest.raises(ValueError):
        compute("bogus", a)


def test_drazin_matches_hs_block_route():
    for seed in range(150):
        _, a = gen_structured(seed)
        if is_zero(a):
            continue
        hs = hs_decompose(a)
        skd = drazin(hs.sigma_k, scale=hs.sigma[0])
        alt = hs.embed(skd, skd @ skd @ hs.sigma_l)
        assert residual(drazin(a), alt) <= EQ


def test_core_ep_routes_agree():
    for seed in range(150):
        _, a = gen_structured(seed)
        k = index(a)
        ad = drazin(a)
        routes = [core_ep(a), matrix_power(a, k) @ power_pinv(a, k + 1)]
        for m in (k, k + 1):
            routes.append(ad @ matrix_power(a, m) @ power_pinv(a, m))
        inner = matrix_power(a, k + 1) @ power_pinv(a, k)
        routes.append(moore_penrose(inner, scale=np.linalg.norm(a, 2) ** (k + 1)))
        for i in range(len(routes)):
            for j in range(i + 1, len(routes)):
                assert residual(routes[i], routes[j]) <= EQ, (seed, i, j)


def test_inverse_bundle_matrix_b():
    b = inverse_bundle(pd.B)
    assert b.index == 3 and b.group is None
    _close(b.drazin, pd.B_DRAZIN)
    # for B every Drazin-based composite collapses to B^D
    for x in (b.dmp, b.mpd, b.cmp):
        _close(x, pd.B_DRAZIN)
