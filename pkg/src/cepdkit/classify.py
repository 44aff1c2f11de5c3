"""Matrix-class predicates and the CEPD (core EP Drazin) machinery.

A square matrix is CEPD when its core EP inverse commutes with its Drazin
inverse, equivalently when the two inverses coincide. :func:`is_cepd` tests
the latter; :func:`cepd_equivalences` evaluates every known equivalent
condition so that their agreement can itself be checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .decomp import hs_decompose
from .errors import ZeroMatrix
from .identities import IdentityReport
from .inverses import InverseBundle, core_ep, drazin, index, inverse_bundle, moore_penrose, power_pinv
from .matrix import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    conj_transpose,
    matrix_power,
    require_square,
    residual,
)


@dataclass(frozen=True)
class Flag:
    holds: bool
    residual: float

    def __bool__(self):
        return self.holds


def _flag(x, y, tol) -> Flag:
    res = residual(x, y)
    return Flag(res <= tol.eq_atol, res)


FLAG_NAMES = ("normal", "hermitian", "ep", "k_ep", "core_ep_matrix", "sd", "partial_isometry", "cepd")


@dataclass(frozen=True)
class ClassificationReport:
    index: int
    normal: Flag
    hermitian: Flag
    ep: Flag
    k_ep: Flag
    core_ep_matrix: Flag
    sd: Flag
    partial_isometry: Flag
    cepd: Flag
    inverses: InverseBundle

    def flags(self) -> dict:
        return {name: getattr(self, name) for name in FLAG_NAMES}


def classify(a, tol: Tolerance = DEFAULT_TOL) -> ClassificationReport:
    a = as_matrix(a)
    require_square(a)
    inv = inverse_bundle(a, tol)
    k = inv.index
    ah = conj_transpose(a)
    ap = inv.mp
    ak = matrix_power(a, k)
    a1 = a @ inv.drazin @ a
    return ClassificationReport(
        index=k,
        normal=_flag(a @ ah, ah @ a, tol),
        hermitian=_flag(a, ah, tol),
        ep=_flag(a @ ap, ap @ a, tol),
        k_ep=_flag(ak @ ap, ap @ ak, tol),
        core_ep_matrix=_flag(ap @ a1, a1 @ ap, tol),
        sd=_flag(ah @ ap, ap @ ah, tol),
        partial_isometry=_flag(a @ ah @ a, a, tol),
        cepd=_flag(inv.core_ep, inv.drazin, tol),
        inverses=inv,
    )


def is_partial_isometry(a, tol: Tolerance = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    return residual(a @ conj_transpose(a) @ a, a) <= tol.eq_atol


def is_hermitian(a, tol: Tolerance = DEFAULT_TOL) -> bool:
    a = as_matrix(a)
    return residual(a, conj_transpose(a)) <= tol.eq_atol


def is_cepd(a, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff the core EP inverse equals the Drazin inverse within ``eq_atol``."""
    a = as_matrix(a)
    require_square(a)
    return residual(core_ep(a, tol), drazin(a, tol)) <= tol.eq_atol


@dataclass(frozen=True)
class Condition:
    holds: bool | None
    residual: float | None
    note: str = ""

    @property
    def evaluated(self) -> bool:
        return self.holds is not None


CONDITION_LABELS = (
    "commute",
    "core_part_commutes",
    "drazin_commutes_with_t",
    "core_part_commutes_with_t",
    "power_identity",
    "equal",
    "powers_all",
    "powers_some",
    "hs_blocks",
    "hs_dmp",
)


@dataclass(frozen=True)
class CepdEquivalenceReport:
    """One entry per equivalent CEPD condition, with ``T = A^(k+1) (A^k)^+``.

    =========================== ==============================================
    commute                     A^cep A^D = A^D A^cep
    core_part_commutes          A_1 A^cep = A^cep A_1
    drazin_commutes_with_t      A^D T = T A^D
    core_part_commutes_with_t   A_1 T = T A_1
    power_identity              A T = A A_1
    equal                       A^cep = A^D
    powers_all                  (A^cep)^m = (A^D)^m for m = 2 and m = 3
    powers_some                 (A^cep)^m = (A^D)^m for m = 2 or m = 3
    hs_blocks                   S K is CEPD and (S K)^(k-1) S L = 0
    hs_dmp                      A^cep = A^{D,+} and (S K)^(k-1) S L = 0
    =========================== ==============================================

    The two ``hs_*`` conditions use the Hartwig-Spindelboeck blocks and are
    left unevaluated for the zero matrix.
    """

    conditions: dict = field(default_factory=dict)

    @property
    def evaluated(self) -> dict:
        return {k: c for k, c in self.conditions.items() if c.evaluated}

    @property
    def consistent(self) -> bool:
        return len({c.holds for c in self.evaluated.values()}) <= 1

    @property
    def verdict(self) -> bool:
        return self.conditions["equal"].holds

    def __getitem__(self, label) -> Condition:
        return self.conditions[label]


def _cond(res, tol, note="") -> Condition:
    return Condition(res <= tol.eq_atol, res, note)


def cepd_equivalences(a, tol: Tolerance = DEFAULT_TOL) -> CepdEquivalenceReport:
    a = as_matrix(a)
    require_square(a)
    k = index(a, tol)
    ad = drazin(a, tol)
    cep = core_ep(a, tol)
    a1 = a @ ad @ a
    ak = matrix_power(a, k)
    t = ak @ a @ power_pinv(a, k, tol)  # A^(k+1) (A^k)^+

    c = {}
    c["commute"] = _cond(residual(cep @ ad, ad @ cep), tol)
    c["core_part_commutes"] = _cond(residual(a1 @ cep, cep @ a1), tol)
    c["drazin_commutes_with_t"] = _cond(residual(ad @ t, t @ ad), tol)
    c["core_part_commutes_with_t"] = _cond(residual(a1 @ t, t @ a1), tol)
    c["power_identity"] = _cond(residual(a @ t, a @ a1), tol)
    c["equal"] = _cond(residual(cep, ad), tol)
    powers = [residual(matrix_power(cep, m), matrix_power(ad, m)) for m in (2, 3)]
    c["powers_all"] = _cond(max(powers), tol, "m = 2 and m = 3")
    c["powers_some"] = _cond(min(powers), tol, "m = 2 or m = 3")

    try:
        hs = hs_decompose(a, tol)
    except ZeroMatrix:
        skipped = Condition(None, None, "zero matrix has no Hartwig-Spindelboeck form")
        c["hs_blocks"] = skipped
        c["hs_dmp"] = skipped
        return CepdEquivalenceReport(c)
    sk = hs.sigma_k
    scale = float(hs.sigma[0])
    tail = matrix_power(sk, max(k - 1, 0)) @ hs.sigma_l  # (S K)^(k-1) S L
    tail_res = residual(tail, np.zeros_like(tail))
    sk_cepd = residual(core_ep(sk, tol, scale), drazin(sk, tol, scale))
    x_dmp = ad @ a @ moore_penrose(a, tol)
    c["hs_blocks"] = _cond(max(sk_cepd, tail_res), tol, "S K is CEPD and (S K)^(k-1) S L = 0")
    c["hs_dmp"] = _cond(max(residual(cep, x_dmp), tail_res), tol, "A^cep = A^{D,+} and (S K)^(k-1) S L = 0")
    return CepdEquivalenceReport(c)


def check_cepd_theorems(a, tol: Tolerance = DEFAULT_TOL) -> IdentityReport:
    """Rows for the sufficient conditions and consequences of being CEPD.

    * ``k-EP, ind <= 2 => CEPD``
    * ``normal => CEPD`` and ``A A^cep = A^cep A => CEPD``
    * the identities every CEPD matrix satisfies (rows prefixed ``CEPD:``)
    """
    a = as_matrix(a)
    require_square(a)
    rep = IdentityReport()
    cls = classify(a, tol)
    inv = cls.inverses
    k = cls.index
    ad, cep, ap = inv.drazin, inv.core_ep, inv.mp
    ak = matrix_power(a, k)
    akp = power_pinv(a, k, tol)
    ak1p = power_pinv(a, k + 1, tol)

    if cls.k_ep and k <= 2:
        rep.add("k-EP with ind <= 2 => A^cep = A^D", cep, ad, tol)
    else:
        rep.skip("k-EP with ind <= 2 => A^cep = A^D", "needs a k-EP matrix of index <= 2")
    if cls.normal:
        rep.add("normal => CEPD", cep, ad, tol)
    else:
        rep.skip("normal => CEPD", "matrix is not normal")
    if residual(a @ cep, cep @ a) <= tol.eq_atol:
        rep.add("A A^cep = A^cep A => CEPD", cep, ad, tol)
    else:
        rep.skip("A A^cep = A^cep A => CEPD", "A and A^cep do not commute")

    labels = (
        "CEPD: A^k A^cep = (A^k)^2 (A^k)^+ A^D",
        "CEPD: A^{c+} A^D = A^+ A^cep",
        "CEPD: A^{+,D} A^cep A^+ = A^+ A^cep A^+",
        "CEPD: A^D A^k A^* = A^D A^k A^{D,*}",
        "CEPD: A^D A^k A^{D,*} = A^cep A^k A^*",
        "CEPD: (A^k)^2 (A^k)^+ (A^(k+1))^+ = A^cep",
    )
    if not cls.cepd:
        for label in labels:
            rep.skip(label, "matrix is not CEPD")
        return rep
    ah = conj_transpose(a)
    rep.add(labels[0], ak @ cep, ak @ ak @ akp @ ad, tol)
    rep.add(labels[1], inv.cmp @ ad, ap @ cep, tol)
    rep.add(labels[2], inv.mpd @ cep @ ap, ap @ cep @ ap, tol)
    rep.add(labels[3], ad @ ak @ ah, ad @ ak @ inv.drazin_star, tol)
    rep.add(labels[4], ad @ ak @ inv.drazin_star, cep @ ak @ ah, tol)
    rep.add(labels[5], ak @ ak @ akp @ ak1p, cep, tol)
    return rep


def check_pi_theorems(a, tol: Tolerance = DEFAULT_TOL) -> IdentityReport:
    """Hypothesis-gated rows for partial isometries and their inverses.

    Row groups: ``PI Drazin-star`` identities of a partial isometry, ``PI
    inverse test`` (when A^D, A^{D,+}, A^{+,D} are again partial isometries),
    ``PI powers`` (A^k and A^(k+1) partial isometries make A^cep one),
    ``PI powers + CEPD`` and ``PI Hermitian power => CEPD``.
    """
    a = as_matrix(a)
    require_square(a)
    rep = IdentityReport()
    inv = inverse_bundle(a, tol)
    k = inv.index
    ad, cep, ap = inv.drazin, inv.core_ep, inv.mp
    ah = conj_transpose(a)
    ak = matrix_power(a, k)
    ak1 = ak @ a
    a_pi = is_partial_isometry(a, tol)

    t41 = (
        "PI Drazin-star: A A^* (A^{D,*})^2 A = A^D",
        "PI Drazin-star: A^D A^* A = A^D",
        "PI Drazin-star: A^k A^D A^* A^2 = A^k",
        "PI Drazin-star: A^k A^* A^2 = A^(k+1)",
    )
    if a_pi:
        ds = inv.drazin_star
        rep.add(t41[0], a @ ah @ ds @ ds @ a, ad, tol)
        rep.add(t41[1], ad @ ah @ a, ad, tol)
        rep.add(t41[2], ak @ ad @ ah @ a @ a, ak, tol)
        rep.add(t41[3], ak @ ah @ a @ a, ak1, tol)
    else:
        for label in t41:
            rep.skip(label, "A is not a partial isometry")

    t44 = (
        "PI inverse test: A^D PI <=> (A^+)^D = (A^D)^+",
        "PI inverse test: A^{D,+} PI <=> (A^{D,+})^+ = (A^+)^{+,D}",
        "PI inverse test: A^{+,D} PI <=> (A^{+,D})^+ = (A^+)^{D,+}",
    )
    if a_pi:
        ap_d = drazin(ap, tol)
        _equivalence_row(rep, t44[0], is_partial_isometry(ad, tol), ap_d, moore_penrose(ad, tol), tol)
        if is_partial_isometry(ad, tol):
            # (A^+)^{+,D} = A A^+ (A^+)^D and (A^+)^{D,+} = (A^+)^D A^+ A
            _equivalence_row(rep, t44[1], is_partial_isometry(inv.dmp, tol),
                             moore_penrose(inv.dmp, tol), a @ ap @ ap_d, tol)
            _equivalence_row(rep, t44[2], is_partial_isometry(inv.mpd, tol),
                             moore_penrose(inv.mpd, tol), ap_d @ ap @ a, tol)
        else:
            rep.skip(t44[1], "A^D is not a partial isometry")
            rep.skip(t44[2], "A^D is not a partial isometry")
    else:
        for label in t44:
            rep.skip(label, "A is not a partial isometry")

    powers_pi = is_partial_isometry(ak, tol) and is_partial_isometry(ak1, tol)
    if powers_pi:
        rep.add("PI powers: (A^cep)^+ = (A^cep)^*", moore_penrose(cep, tol), conj_transpose(cep), tol)
    else:
        rep.skip("PI powers: (A^cep)^+ = (A^cep)^*", "A^k or A^(k+1) is not a partial isometry")

    # The two A^D A^k rows are kept in their published form. They hold only
    # when A_1^2 = A A^D (A = [i] already breaks them); the A_1 A^k row is the
    # identity that holds for every matrix meeting the hypotheses.
    t48 = (
        "PI powers + CEPD: A^D (A^cep)^* A^cep = (A^cep)^2 A^(k+1) (A^k)^+",
        "PI powers + CEPD: (A^cep)^* A^k = A^D A^k",
        "PI powers + CEPD: A^D A^k = A_1 A^k",
        "PI powers + CEPD: (A^cep)^* A^k = A_1 A^k",
    )
    a_cepd = residual(cep, ad) <= tol.eq_atol
    if powers_pi and a_cepd:
        cep_h = conj_transpose(cep)
        a1 = a @ ad @ a
        rep.add(t48[0], ad @ cep_h @ cep, cep @ cep @ ak1 @ power_pinv(a, k, tol), tol)
        stated = "published form; holds only when A_1^2 = A A^D"
        rep.add(t48[1], cep_h @ ak, ad @ ak, tol, stated)
        rep.add(t48[2], ad @ ak, a1 @ ak, tol, stated)
        rep.add(t48[3], cep_h @ ak, a1 @ ak, tol)
    else:
        why = "A^k or A^(k+1) is not a partial isometry" if not powers_pi else "A is not CEPD"
        for label in t48:
            rep.skip(label, why)

    def herm_pi(x):
        return is_hermitian(x, tol) and is_partial_isometry(x, tol)

    if a_pi and (herm_pi(ak) or herm_pi(ak1)):
        rep.add("PI Hermitian power => CEPD", cep, ad, tol)
    else:
        rep.skip("PI Hermitian power => CEPD",
                 "needs A a partial isometry with A^k or A^(k+1) Hermitian and a partial isometry")
    return rep


def _equivalence_row(rep: IdentityReport, label, left_holds: bool, x, y, tol) -> None:
    res = residual(x, y)
    right_holds = res <= tol.eq_atol
    row = rep.add(label, x, y, tol, note=f"left side {left_holds}, right side {right_holds}")
    row.status = "pass" if left_holds == right_holds else "fail"
