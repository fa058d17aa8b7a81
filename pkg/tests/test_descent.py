import random
from fractions import Fraction as Q

import pytest

from quadalg import albert, forms
from quadalg.descent import (
    RostCalcReport,
    SemilinearCocycle,
    dagger_cocycle_matrix,
    descend_form,
    fixed_subspace,
    rostcalc_expected_qz,
    rostcalc_report,
    rostcalc_table_rows,
    special_cocycle_on_A,
    twist_a_cocycle,
    twist_a_descend,
    twist_a_expected,
)
from quadalg.exactmat import freeze, identity, mat_eq
from quadalg.scalars import QuadExtScalar, sqrt_k


def kx(x, y, k):
    return QuadExtScalar(Q(x), Q(y), Q(k))


def test_cocycle_condition_enforced():
    k = Q(2)
    good = SemilinearCocycle(k, identity(2))
    assert good.dim == 2
    with pytest.raises(ValueError):
        SemilinearCocycle(k, freeze([[kx(0, 1, k), kx(0, 0, k)], [kx(0, 0, k), kx(1, 0, k)]]))
    with pytest.raises(ValueError):
        SemilinearCocycle(Q(9), identity(2))  # k a square


def test_identity_cocycle_descends_to_itself():
    k = Q(5)
    gram = freeze([[Q(1), Q(0)], [Q(0), Q(-k)]])
    z = SemilinearCocycle(k, identity(2))
    q = descend_form(gram, z)
    assert forms.isometric(q, forms.form([1, -k]))


def test_fixed_subspace_displayed_blocks():
    """The two 2x2 blocks tabulated in the source computation: -S2 on
    (u3,u6) fixes u3 - u6 and sqrt(k) u3 + sqrt(k) u6; [[0,a],[1/a,0]] on
    (u4,u5) fixes a u4 + u5 and -a sqrt(k) u4 + sqrt(k) u5."""
    k = Q(7)
    rt = sqrt_k(k)
    neg_s2 = freeze([[Q(0), Q(-1)], [Q(-1), Q(0)]])
    z = SemilinearCocycle(k, neg_s2)
    one = kx(1, 0, k)
    assert z.is_fixed((one, -one))
    assert z.is_fixed((rt, rt))
    basis = fixed_subspace(z)
    assert len(basis) == 2
    a = Q(3)
    block = freeze([[Q(0), a], [1 / a, Q(0)]])
    z2 = SemilinearCocycle(k, block)
    assert z2.is_fixed((a * one, one))
    assert z2.is_fixed((-a * rt, rt))


def test_descend_rejects_non_isometries():
    k = Q(2)
    gram = freeze([[Q(1), Q(0)], [Q(0), Q(1)]])
    z = SemilinearCocycle(k, freeze([[Q(0), Q(1)], [Q(1), Q(0)]]))
    # the swap is an isometry of <1,1>; scaling one vector is not
    descend_form(gram, z)
    # a valid cocycle (square = 1) that is not an isometry of <1,1>
    bad = SemilinearCocycle(k, freeze([[Q(0), Q(2)], [Q(1, 2), Q(0)]]))
    with pytest.raises(ValueError):
        descend_form(gram, bad)


def test_twist_a_descent():
    for k in (2, 3, -5):
        q = twist_a_descend(k)
        assert forms.isometric(q, twist_a_expected(k))
        assert q.dim == 10


def test_descents_are_K_forms_of_the_A_form():
    """Round trip: every descended form becomes the original A-form again
    over K (checked by the kernel-of-restriction ideal test)."""
    base = forms.DiagonalForm(
        "Q", tuple(forms._diagonalize_gram([list(row) for row in albert.A_GRAM]))
    )
    for k in (2, 3, -5):
        assert forms.isometric_over_K(twist_a_descend(k), base, k)
    for k, a in [(2, 3), (-1, -1)]:
        q_z = rostcalc_report(k, a).q_z
        assert forms.isometric_over_K(q_z, base, k)


def test_rostcalc_reports():
    for (k, a) in [(2, 3), (-1, -1), (3, -2)]:
        rep = rostcalc_report(k, a)
        assert rep.qz_matches_table
        assert rep.difference_witt_class_ok
        assert rep.arason_class_trivial == (not (k < 0 and a < 0))
    with pytest.raises(ValueError):
        rostcalc_report(2, 0)
    with pytest.raises(ValueError):
        special_cocycle_on_A(4, 3)  # k a square


def test_rostcalc_table_rows():
    rows = rostcalc_table_rows(2, 3)
    assert len(rows) == 4
    assert all(row["fixed_ok"] for row in rows)
    assert all(row["values_ok"] for row in rows)
    assert rows[0]["contribution"].startswith("2H")


def test_dagger_cocycle_is_an_involution():
    m = dagger_cocycle_matrix()
    assert mat_eq(freeze([[sum(m[i][t] * m[t][j] for t in range(10)) for j in range(10)]
                          for i in range(10)]), identity(10))


def test_report_shape():
    rep = rostcalc_report(2, 3)
    d = rep.as_dict()
    assert set(d) == {
        "k",
        "a",
        "q_z",
        "q",
        "qz_matches_table",
        "difference_witt_class_ok",
        "arason_class_trivial",
        "real_symbol_nontrivial",
    }
