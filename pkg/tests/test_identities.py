import numpy as np
import pytest

from cepdkit import GenSpec, gen_with_index, verify_identities
from cepdkit.errors import NonSquare
from cepdkit.identities import FAIL, NOT_MET, PASS, IdentityReport
from cepdkit.matrix import DEFAULT_TOL
from cepdkit.randgen import gen_structured

import worked_examples as pd

HS_ROWS = ("HS block: A^D", "HS block: A^cep", "HS block: A^{D,+}", "HS block: A^{D,*}")


def _assert_clean(report):
    bad = [(r.label, r.residual) for r in report.failures]
    assert not bad, bad
    assert all(r.residual is None or r.residual <= 1e-9 for r in report)


def test_identity_matrix_rows_are_exact():
    rep = verify_identities(np.eye(4))
    _assert_clean(rep)
    assert max(r.residual for r in rep) <= 1e-14


def test_row_coverage():
    labels = [r.label for r in verify_identities(pd.E45)]
    assert len(labels) == len(set(labels))
    assert sum(label.startswith("core EP:") for label in labels) == 11
    assert sum(label.startswith("HS block:") for label in labels) == 4
    assert "core EP: A^cep = A^D A^m (A^m)^+ [m=2]" in labels
    assert "core EP: A^cep = A^D A^m (A^m)^+ [m=3]" in labels


@pytest.mark.parametrize("name", sorted(pd.ALL))
def test_worked_example_matrices(name):
    _assert_clean(verify_identities(pd.ALL[name]))


def test_b_core_ep_row_reproduces_printed_value():
    row = verify_identities(pd.B)["core EP: A^cep = A^k (A^(k+1))^+"]
    assert row.passed
    np.testing.assert_allclose(row.rhs, pd.B_CORE_EP, atol=1e-9)


def test_generated_index_example():
    _assert_clean(verify_identities(gen_with_index(GenSpec(6, 2, 3, seed=42))))


def test_generated_suite():
    for seed in range(200):
        _, a = gen_structured(seed)
        _assert_clean(verify_identities(a))


def test_zero_matrix_skips_block_rows():
    rep = verify_identities(np.zeros((3, 3)))
    for label in HS_ROWS:
        assert rep[label].status == NOT_MET
        assert not rep[label].hypothesis_met
    assert rep.all_passed


def test_nonsquare():
    with pytest.raises(NonSquare):
        verify_identities(np.ones((2, 3)))


def test_report_bookkeeping():
    rep = IdentityReport()
    rep.add("same", np.eye(2), np.eye(2), DEFAULT_TOL)
    rep.add("different", np.eye(2), np.zeros((2, 2)), DEFAULT_TOL)
    rep.skip("skipped", "no")
    assert [r.status for r in rep] == [PASS, FAIL, NOT_MET]
    assert len(rep) == 3 and not rep.all_passed
    assert [r.label for r in rep.failures] == ["different"]
    with pytest.raises(KeyError):
        rep["missing"]
