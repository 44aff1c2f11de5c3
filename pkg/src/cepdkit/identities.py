"""Residual reports for the algebraic identities satisfied by the inverses.

Each :class:`IdentityRow` compares two matrices that must agree. A row whose
hypothesis does not hold for the input is kept in the report with status
``"hypothesis not met"`` so that counterexamples never read as failures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .decomp import hs_decompose
from .errors import ZeroMatrix
from .inverses import core_ep, drazin, index, moore_penrose, power_pinv
from .matrix import DEFAULT_TOL, Tolerance, as_matrix, conj_transpose, matrix_power, require_square, residual

PASS = "pass"
FAIL = "fail"
NOT_MET = "hypothesis not met"


@dataclass
class IdentityRow:
    label: str
    lhs: Optional[np.ndarray]
    rhs: Optional[np.ndarray]
    residual: Optional[float]
    status: str
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def hypothesis_met(self) -> bool:
        return self.status != NOT_MET


@dataclass
class IdentityReport:
    rows: list = field(default_factory=list)

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, label):
        for row in self.rows:
            if row.label == label:
                return row
        raise KeyError(label)

    def extend(self, other: "IdentityReport") -> None:
        self.rows.extend(other.rows)

    @property
    def failures(self) -> list:
        return [row for row in self.rows if row.status == FAIL]

    @property
    def all_passed(self) -> bool:
        """True when no evaluated row failed; unmet hypotheses do not count."""
        return not self.failures

    def add(self, label, lhs, rhs, tol: Tolerance, note: str = "") -> IdentityRow:
        res = residual(lhs, rhs)
        row = IdentityRow(label, lhs, rhs, res, PASS if res <= tol.eq_atol else FAIL, note)
        self.rows.append(row)
        return row

    def skip(self, label, note: str = "") -> IdentityRow:
        row = IdentityRow(label, None, None, None, NOT_MET, note)
        self.rows.append(row)
        return row


def verify_identities(a, tol: Tolerance = DEFAULT_TOL) -> IdentityReport:
    """Evaluate the DMP/MPD/CMP, core EP and block-form identities on *a*.

    Defining systems contribute one row per equation. The ``HS block`` rows
    rebuild A^D, A^cep, A^{D,+} and A^{D,*} from the Hartwig-Spindelboeck
    blocks; they need a nonzero matrix and are marked "hypothesis not met"
    for the zero matrix.
    """
    a = as_matrix(a)
    require_square(a)
    rep = IdentityReport()
    k = index(a, tol)
    ap = moore_penrose(a, tol)
    ad = drazin(a, tol)
    cep = core_ep(a, tol)
    ak = matrix_power(a, k)
    ak1 = ak @ a
    akp = power_pinv(a, k, tol)
    a1 = a @ ad @ a
    x_dmp = ad @ a @ ap
    x_mpd = ap @ a @ ad
    x_cmp = ap @ a @ ad @ a @ ap
    x_dstar = ad @ a @ conj_transpose(a)

    rep.add("DMP system: XA = A^D A", x_dmp @ a, ad @ a, tol)
    rep.add("DMP system: XAX = X", x_dmp @ a @ x_dmp, x_dmp, tol)
    rep.add("DMP system: A^k X = A^k A^+", ak @ x_dmp, ak @ ap, tol)
    rep.add("MPD system: AX = A A^D", a @ x_mpd, a @ ad, tol)
    rep.add("MPD system: XAX = X", x_mpd @ a @ x_mpd, x_mpd, tol)
    rep.add("MPD system: X A^k = A^+ A^k", x_mpd @ ak, ap @ ak, tol)
    rep.add("CMP system: AXA = A_1", a @ x_cmp @ a, a1, tol)
    rep.add("CMP system: XAX = X", x_cmp @ a @ x_cmp, x_cmp, tol)
    rep.add("CMP system: XA = A^+ A_1", x_cmp @ a, ap @ a1, tol)
    rep.add("CMP system: AX = A_1 A^+", a @ x_cmp, a1 @ ap, tol)
    rep.add("DMP: A^{D,+} A^D = (A^D)^2", x_dmp @ ad, ad @ ad, tol)
    rep.add("DMP: A^{D,+} A = A A^D", x_dmp @ a, a @ ad, tol)
    rep.add("core part: (A^D)^# = A^2 A^D", drazin(ad, tol), a @ a @ ad, tol)
    rep.add("core part: A^2 A^D = A_1", a @ a @ ad, a1, tol)

    rep.add("core EP: A^cep A^(k+1) = A^k", cep @ ak1, ak, tol)
    rep.add("core EP: A A^cep Hermitian", a @ cep, conj_transpose(a @ cep), tol)
    for m in (k, k + 1):
        am = matrix_power(a, m)
        rep.add(f"core EP: A^cep = A^D A^m (A^m)^+ [m={m}]", cep, ad @ am @ power_pinv(a, m, tol), tol)
    rep.add("core EP: A^cep = A^k (A^(k+1))^+", cep, ak @ power_pinv(a, k + 1, tol), tol)
    rep.add("core EP: A^cep A^k = A^D A^k", cep @ ak, ad @ ak, tol)
    rep.add("core EP: A^cep = (A^(k+1) (A^k)^+)^+", cep, moore_penrose(ak1 @ akp, tol), tol)
    cep_p = moore_penrose(cep, tol)
    rep.add("core EP: A^cep is EP", cep @ cep_p, cep_p @ cep, tol)
    rep.add("core EP: A (A^cep)^2 = A^cep", a @ cep @ cep, cep, tol)
    rep.add("core EP: A A^cep = A^k (A^k)^+", a @ cep, ak @ akp, tol)
    rep.add("core EP: A^D A^cep = (A^cep)^2", ad @ cep, cep @ cep, tol)

    try:
        hs = hs_decompose(a, tol)
    except ZeroMatrix:
        for label in ("HS block: A^D", "HS block: A^cep", "HS block: A^{D,+}", "HS block: A^{D,*}"):
            rep.skip(label, "zero matrix has no Hartwig-Spindelboeck form")
        return rep
    sk = hs.sigma_k
    scale = float(hs.sigma[0])
    sk_d = drazin(sk, tol, scale)
    rep.add("HS block: A^D", hs.embed(sk_d, sk_d @ sk_d @ hs.sigma_l), ad, tol)
    rep.add("HS block: A^cep", hs.embed(core_ep(sk, tol, scale)), cep, tol)
    rep.add("HS block: A^{D,+}", hs.embed(sk_d), x_dmp, tol)
    rep.add("HS block: A^{D,*}", hs.embed(sk_d * (hs.sigma**2)[None, :]), x_dstar, tol)
    return rep
