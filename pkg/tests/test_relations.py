import json
import math

import numpy as np
import pytest

from kummerweb.relations import (
    ATOMS, AbelianRelation, Atom, GermExpression, RelationDomainError, constant_basis,
    gamma_basis, numerical_rank, relation, relation_from_coefficients, relation_matrix,
    relations_from_json, relations_to_json, residual, singular_values, subweb_rank,
    subweb_solution_dim,
)
from kummerweb.web import SubwebSelector

W0 = (1 / 3, 1 / 2)


def near_base_points(n, seed):
    rng = np.random.default_rng(seed)
    pts = []
    while len(pts) < n:
        x, y = rng.uniform(0.25, 0.4), rng.uniform(0.45, 0.6)
        if x < y:
            pts.append((x, y))
    return pts


def test_atom_basis_has_sixteen_members():
    assert len(ATOMS) == 16
    assert [a.value for a in ATOMS][:3] == ["One", "Z", "RecipZ"]


def test_family_shape():
    gamma = gamma_basis()
    assert len(gamma) == 36
    assert [r.label for r in gamma[:9]] == [f"C{i}" for i in range(1, 9)] + ["F1"]
    assert gamma is gamma_basis()  # built once
    assert relation_matrix().entries.shape == (36, 144)


def test_constant_relations():
    consts = constant_basis()
    assert len(consts) == 8
    assert numerical_rank(relation_matrix(consts)) == 8
    # a balanced constant tuple lies in their span
    c = np.array([1.0, -2.0, 0.5, 3.0, 0.0, -1.0, 2.0, 0.25, 0.0])
    c[8] = -c[:8].sum()
    m = relation_matrix(consts).entries
    target = np.zeros(144, dtype=complex)
    for i in range(9):
        target[i * 16] = c[i]
    coeffs, *_ = np.linalg.lstsq(m.T, target, rcond=None)
    assert np.allclose(m.T @ coeffs, target)


def test_f1_at_base_point():
    expected = math.log(1 / 3) - math.log(1 / 2) - math.log(2 / 3)
    assert abs(expected) < 1e-15
    assert abs(residual(relation("F1"), W0)) < 1e-15


def test_all_residuals_small():
    pts = near_base_points(10, 5)
    for rel in gamma_basis():
        assert max(abs(residual(rel, p)) for p in pts) < 1e-12, rel.label


def test_residual_at_non_generic_point():
    with pytest.raises(RelationDomainError):
        residual(relation("F1"), (1.0, 1.0))


def test_domain_error_names_strand_and_atom():
    with pytest.raises(RelationDomainError) as exc:
        residual(relation("F17"), (2.0, 0.3))
    assert exc.value.strand == 3 and exc.value.atom is Atom.A


def test_rank_36_across_tolerances():
    m = relation_matrix()
    for tol in (1e-10, 1e-8, 1e-6):
        assert numerical_rank(m, tol) == 36
    s = singular_values(m)
    assert s[-1] / s[0] > 1e-3  # clear spectral gap above every tolerance


def test_duplicated_row_rank():
    assert numerical_rank(relation_matrix([relation("F1"), relation("F1"), relation("F2")])) == 2


def test_numerical_rank_rejects_bad_tol():
    with pytest.raises(ValueError):
        numerical_rank(relation_matrix(), 0)


@pytest.mark.parametrize(
    "sel, rank",
    [
        (SubwebSelector(range(1, 10)), 28),
        (SubwebSelector(range(1, 6)), 6),
        (SubwebSelector.complement({6, 9}), 15),
        (SubwebSelector.complement({6, 7, 9}), 10),
        (SubwebSelector.complement({2, 4, 8}), 10),
        (SubwebSelector.complement({3, 6, 9}), 10),
        (SubwebSelector([1, 2, 3]), 1),
    ],
)
def test_subweb_ranks(sel, rank):
    assert subweb_rank(sel) == rank


def test_five_subwebs_of_248_complement_have_rank_five():
    from itertools import combinations

    for sub in combinations(SubwebSelector.complement({2, 4, 8}).indices, 5):
        assert subweb_rank(SubwebSelector(sub)) == 5


def test_ranks_stable_under_tolerance():
    for ex in ({6, 9}, {6, 7, 9}, {2, 4, 8}, {3, 6, 9}):
        sel = SubwebSelector.complement(ex)
        assert len({subweb_rank(sel, t) for t in (1e-10, 1e-8, 1e-6)}) == 1


def test_dual_certification():
    pts = near_base_points(20, 9)
    for sel in (SubwebSelector(range(1, 6)), SubwebSelector.complement({2, 4, 8})):
        sol = subweb_solution_dim(sel)
        assert sol.basis.shape == (sol.dim, 36)
        outside = [i for i in range(9) if i + 1 not in sel.indices]
        for coeffs in sol.basis:
            rel = relation_from_coefficients(coeffs)
            off = max((np.linalg.norm(rel.components[i].vector()) for i in outside), default=0)
            assert off < 1e-10
            assert max(abs(residual(rel, p)) for p in pts) < 1e-10


def test_scaling_invariance():
    k = 2.5 - 1.5j
    scaled = [r.scaled(k) for r in gamma_basis()]
    assert numerical_rank(relation_matrix(scaled)) == 36
    for r in scaled[8:12]:
        assert abs(residual(r, W0)) < 1e-12


def test_germ_expression_algebra():
    a = GermExpression.atom(Atom.L0)
    b = 2 * a - a + 1
    assert b.coeffs == {Atom.L0: 1, Atom.ONE: 1}
    assert not (a - a)
    assert b.evaluate(0.5) == pytest.approx(math.log(0.5) + 1)


def test_json_round_trip():
    text = relations_to_json()
    doc = json.loads(text)
    assert doc["schema"] == "kummerweb.relations/1" and len(doc["relations"]) == 36
    back = relations_from_json(text)
    for r, s in zip(back, gamma_basis()):
        assert r.label == s.label and r.components == s.components


def test_relation_needs_nine_components():
    with pytest.raises(ValueError):
        AbelianRelation("bad", (GermExpression(),) * 8)
