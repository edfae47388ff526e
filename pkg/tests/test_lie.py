import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from nilclass2.catalog import make
from nilclass2.linalg import GF, QQ, Matrix, SingularMatrix, Subspace, random_invertible
from nilclass2.lie import (
    BadLuck,
    DimensionMismatch,
    FieldMismatch,
    NotCentral,
    NotNilpotent,
    StructureConstants,
    abelian,
    bracket,
    center,
    change_of_basis,
    derived_subalgebra,
    direct_sum,
    lower_central_series,
    nilpotency_class,
    quotient_by_central,
    random_class2,
    report,
    validate,
)


def e(n, *idx, field=QQ):
    v = [0] * n
    for i in idx:
        v[i - 1] += 1
    return tuple(field(x) for x in v)


def sl2_like():
    return StructureConstants.from_brackets(QQ, 3, {(1, 2): {3: 1}, (1, 3): {2: 1}, (2, 3): {1: 1}})


def test_bracket_heisenberg():
    H = make("H", m=1)
    assert bracket(H, e(3, 1), e(3, 2)) == e(3, 3)
    assert bracket(H, e(3, 2), e(3, 1)) == tuple(-x for x in e(3, 3))


def test_bracket_alternating(field):
    L = make("H1", m=3, field=field)
    v = tuple(field(x) for x in (1, 2, 0, 1, 1, 0, 3, 1))
    assert not any(bracket(L, v, v))


def test_bracket_l58():
    L = make("L58")
    assert bracket(L, e(5, 1, 2), e(5, 2, 3)) == e(5, 4, 5)


def test_bracket_errors():
    L = make("H", m=1)
    with pytest.raises(DimensionMismatch):
        bracket(L, (1, 0), (0, 1, 0))
    with pytest.raises((FieldMismatch, TypeError)):
        bracket(L, (0.5, 0, 0), (0, 1, 0))


def test_validate_examples():
    assert validate(make("H3", m=4, k=2)) is None
    assert validate(sl2_like()) is None
    bad = StructureConstants.from_brackets(QQ, 3, {(1, 2): {2: 1}, (1, 3): {2: 1}, (2, 3): {1: 1}})
    v = validate(bad)
    assert v is not None and v.triple == (1, 2, 3) and any(v.residual)


def test_derived_subalgebra():
    assert derived_subalgebra(abelian(QQ, 4)).dim == 0
    D = derived_subalgebra(make("H1", m=3))
    assert D == Subspace.span(QQ, 8, [e(8, 7), e(8, 8)])
    assert derived_subalgebra(make("L58")) == Subspace.span(QQ, 5, [e(5, 4), e(5, 5)])


def test_center():
    assert center(abelian(QQ, 3)) == Subspace.full(QQ, 3)
    assert center(make("H", m=3)) == Subspace.span(QQ, 7, [e(7, 7)])
    assert center(direct_sum(make("H1", m=3), abelian(QQ, 2))).dim == 4


def test_nilpotency_class():
    assert nilpotency_class(abelian(QQ, 5)) == 0
    assert len(lower_central_series(abelian(QQ, 5))) == 2
    assert nilpotency_class(direct_sum(make("H", m=2), make("H", m=2))) == 2
    with pytest.raises(NotNilpotent):
        nilpotency_class(sl2_like())


def test_report_examples():
    r = report(make("H2", m=3))
    assert (r.n, r.dim_derived, r.dim_center, r.nilpotency_class, r.is_stem, r.gen_heisenberg_rank) == (9, 2, 2, 2, True, 2)
    assert not report(direct_sum(make("H", m=2), abelian(QQ, 1))).is_stem
    assert report(make("L1")).gen_heisenberg_rank == 2
    assert report(sl2_like()).nilpotency_class is None


def test_change_of_basis_examples():
    H = make("H", m=1)
    assert change_of_basis(H, Matrix.identity(QQ, 3)) == H
    swap = Matrix.from_rows(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert change_of_basis(H, swap).brackets_1based() == {(1, 2): {3: -1}}
    with pytest.raises(SingularMatrix):
        change_of_basis(H, Matrix.zeros(QQ, 3, 3))


def test_direct_sum_examples():
    L = direct_sum(make("H", m=1), abelian(QQ, 2))
    assert L.n == 5 and derived_subalgebra(L).dim == 1
    assert direct_sum(make("H", m=1), make("H", m=2)) == make("H8", m=1, k1=2)
    r = report(direct_sum(make("L58"), abelian(QQ, 3)))
    assert (r.n, r.nilpotency_class, r.dim_derived, r.is_stem) == (8, 2, 2, False)
    with pytest.raises(FieldMismatch):
        direct_sum(make("H", m=1), abelian(GF(3), 1))


def test_quotient_by_central():
    L = make("H1", m=3)
    Q = quotient_by_central(L, Subspace.span(QQ, 8, [e(8, 8)]))
    r = report(Q)
    assert r.n == 7 and r.dim_derived == 1 and r.gen_heisenberg_rank == 1
    assert nilpotency_class(quotient_by_central(L, center(L))) == 0
    with pytest.raises(NotCentral):
        quotient_by_central(L, Subspace.span(QQ, 8, [e(8, 1)]))


def test_quotient_h8_is_heisenberg_plus_abelian():
    # H8(1,2)/<z> has a single form of rank 4 on a 6-dim complement: H(2) + A(2)
    L = make("H8", m=1, k1=2)
    Q = quotient_by_central(L, Subspace.span(QQ, 8, [e(8, 3)]))
    r = report(Q)
    assert r.n == 7 and r.dim_derived == 1 and r.dim_center == 3


def test_random_class2_examples(field):
    L = random_class2(4, GF(3), 7)
    assert L == random_class2(4, GF(3), 7)
    for seed in range(5):
        L = random_class2(5, field, seed)
        assert validate(L) is None
        r = report(L)
        assert r.nilpotency_class == 2 and r.dim_derived == 2
        assert derived_subalgebra(L).issubspace(center(L))
    with pytest.raises(ValueError):
        random_class2(2, field, 0)


def test_random_class2_bad_luck():
    with pytest.raises(BadLuck):
        random_class2(3, GF(2), 0, max_attempts=0)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([QQ, GF(2), GF(3), GF(5)]), st.integers(3, 7), st.integers(0, 10**6), st.integers(0, 10**6))
def test_report_invariant_under_basis_change(F, dimV, seed, sseed):
    L = random_class2(dimV, F, seed)
    S = random_invertible(L.n, F, sseed)
    assert report(change_of_basis(L, S)) == report(L)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([QQ, GF(2), GF(3)]), st.integers(3, 6), st.integers(3, 6), st.integers(0, 10**6))
def test_direct_sum_centers_add(F, d1, d2, seed):
    A = random_class2(d1, F, seed)
    B = random_class2(d2, F, seed + 1)
    assert center(direct_sum(A, B)).dim == center(A).dim + center(B).dim


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([QQ, GF(2), GF(5)]), st.integers(3, 7), st.integers(0, 10**6))
def test_quotient_by_derived_is_abelian(F, dimV, seed):
    L = random_class2(dimV, F, seed)
    D = derived_subalgebra(L)
    Q = quotient_by_central(L, D)
    assert Q.n == L.n - 2 and validate(Q) is None and nilpotency_class(Q) == 0
