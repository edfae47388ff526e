import pytest

from nilclass2.catalog import enumerate_instances, make, make_instance
from nilclass2.extsquare import ClassTooHigh, exterior_center, exterior_square, extension_defect
from nilclass2.homology import schur_multiplier_dim
from nilclass2.lie import StructureConstants, abelian, center, change_of_basis, random_class2
from nilclass2.linalg import GF, QQ, Subspace, random_invertible


def test_heisenberg_relations_vanish():
    E = exterior_square(make("H", m=1))
    assert E.relation_space.dim == 0 and E.quotient_dim == 3
    assert exterior_center(make("H", m=1)).is_capable


def test_abelian():
    for n in (2, 4, 5):
        E = exterior_square(abelian(QQ, n))
        assert E.relation_space.dim == 0 and E.quotient_dim == n * (n - 1) // 2


def test_h1_quotient():
    assert exterior_square(make("H1", m=3)).quotient_dim == 17


def test_h1_center_is_z(field):
    L = make("H1", m=3, field=field)
    R = exterior_center(L)
    assert R.dim == 1 and not R.is_capable and not R.is_unicentral
    z = tuple(field.one if i == 6 else field.zero for i in range(8))
    assert R.basis == Subspace.span(field, 8, [z])


def test_h3_unicentral(field):
    L = make("H3", m=4, k=2, field=field)
    R = exterior_center(L)
    assert R.is_unicentral and R.dim == 2 and R.basis == center(L)


def test_commutator_map_kills_relations(field):
    for seed in range(5):
        L = random_class2(5, field, seed)
        E = exterior_square(L)
        p = field.p
        for v in E.relation_space.vectors:
            for k in range(L.n):
                s = sum(c * row[k] for c, row in zip(v, E.commutator_map) if c)
                assert (s % p if p else s) == 0


def test_extension_identity_catalog(field):
    for n in range(5, 12):
        for inst in enumerate_instances(n, field):
            if inst.unresolved:
                continue
            L = make_instance(inst, field)
            assert extension_defect(L, schur_multiplier_dim(L)) == 0, inst


def test_extension_identity_random(field):
    for seed in range(10):
        L = random_class2(4 + seed % 4, field, seed)
        assert extension_defect(L, schur_multiplier_dim(L)) == 0


def test_exterior_center_inside_center(field):
    for seed in range(8):
        L = random_class2(5, field, seed)
        assert exterior_center(L).basis.issubspace(center(L))


def test_class_three_rejected():
    # filiform: [e1,e2] = e3, [e1,e3] = e4
    L = StructureConstants.from_brackets(QQ, 4, {(1, 2): {3: 1}, (1, 3): {4: 1}})
    with pytest.raises(ClassTooHigh):
        exterior_square(L)
    with pytest.raises(ClassTooHigh):
        exterior_center(L)


def test_dim_invariant_under_scrambles(finite_field):
    F = finite_field
    for tag, kw in [("H1", dict(m=3)), ("H4", dict(m=2, k=2)), ("H8", dict(m=1, k1=2))]:
        L = make(tag, field=F, **kw)
        d = exterior_center(L).dim
        for s in range(5):
            assert exterior_center(change_of_basis(L, random_invertible(L.n, F, s))).dim == d


def test_report_json():
    R = exterior_center(make("H8", m=2, k1=2, field=GF(5)))
    j = R.to_json(GF(5))
    assert j["dim"] == 2 and j["is_unicentral"] and not j["is_capable"]
    assert all(isinstance(x, str) for v in j["basis"] for x in v)
