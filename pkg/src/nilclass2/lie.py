"""Finite-dimensional Lie algebras given by structure constants.

Bracket tables are stored densely for every pair i < j; the entries for
j < i and i == j are implied (antisymmetry and alternation).  Indices are
0-based in vectors and internal tables; the ``from_brackets`` constructor
and everything user-facing (files, catalog labels, violation reports) use
1-based basis indices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .linalg import (
    Field,
    Matrix,
    SingularMatrix,
    Subspace,
    _rank_lists,
    _rref_lists,
    _nullspace_lists,
    inverse,
)

__all__ = [
    "StructureConstants",
    "AlgebraReport",
    "JacobiViolation",
    "DimensionMismatch",
    "FieldMismatch",
    "NotNilpotent",
    "NotCentral",
    "BadLuck",
    "abelian",
    "bracket",
    "validate",
    "derived_subalgebra",
    "center",
    "lower_central_series",
    "nilpotency_class",
    "report",
    "change_of_basis",
    "direct_sum",
    "quotient_by_central",
    "subalgebra",
    "random_class2",
]


class DimensionMismatch(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class NotNilpotent(ValueError):
    pass


class NotCentral(ValueError):
    pass


class NotClosed(ValueError):
    pass


class BadLuck(RuntimeError):
    """A seeded retry loop gave up."""


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


@dataclass(frozen=True)
class StructureConstants:
    """A Lie algebra over ``field`` with basis e_1..e_n.

    ``table`` lists [e_i, e_j] for 0-based i < j in lexicographic pair order,
    each as a length-n coordinate tuple.
    """

    field: Field
    n: int
    table: tuple[tuple, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if len(self.table) != self.n * (self.n - 1) // 2:
            raise ValueError("table needs one vector per pair i<j")
        if any(len(v) != self.n for v in self.table):
            raise ValueError("table vectors must have length n")

    @classmethod
    def from_brackets(cls, field: Field, n: int, brackets: Mapping[tuple[int, int], Mapping[int, object]]) -> "StructureConstants":
        """Build from ``{(i, j): {k: coeff}}`` with 1-based i < j and k."""
        full = {}
        for (i, j), vec in brackets.items():
            if not (1 <= i < j <= n):
                raise ValueError(f"bracket ({i},{j}): require 1 <= i < j <= {n}")
            v = [field.zero] * n
            for k, c in vec.items():
                if not 1 <= k <= n:
                    raise ValueError(f"basis index {k} out of range 1..{n}")
                v[k - 1] = field(c)
            full[(i - 1, j - 1)] = tuple(v)
        zero = (field.zero,) * n
        return cls(field, n, tuple(full.get(pq, zero) for pq in _pairs(n)))

    @classmethod
    def from_dense(cls, field: Field, n: int, c: Mapping[tuple[int, int], Sequence]) -> "StructureConstants":
        """Build from 0-based ``{(i, j): vector}`` with i < j, vectors already in the field."""
        zero = (field.zero,) * n
        return cls(field, n, tuple(tuple(c.get(pq, zero)) for pq in _pairs(n)))

    @cached_property
    def full(self) -> list[list[tuple]]:
        """full[i][j] = [e_i, e_j] for all 0-based i, j."""
        n, F = self.n, self.field
        p = F.p
        zero = (F.zero,) * n
        out = [[zero] * n for _ in range(n)]
        it = iter(self.table)
        for i in range(n):
            for j in range(i + 1, n):
                v = next(it)
                out[i][j] = v
                out[j][i] = tuple((-x) % p for x in v) if p else tuple(-x for x in v)
        return out

    @cached_property
    def nonzero_pairs(self) -> tuple[tuple[int, int, tuple], ...]:
        return tuple((i, j, v) for (i, j), v in zip(_pairs(self.n), self.table) if any(v))

    def br(self, i: int, j: int) -> tuple:
        """[e_i, e_j] for 0-based indices."""
        return self.full[i][j]

    def basis_vector(self, i: int) -> tuple:
        """The 1-based basis vector e_i."""
        F = self.field
        return tuple(F.one if k == i - 1 else F.zero for k in range(self.n))

    def brackets_1based(self) -> dict[tuple[int, int], dict[int, object]]:
        return {
            (i + 1, j + 1): {k + 1: c for k, c in enumerate(v) if c}
            for i, j, v in self.nonzero_pairs
        }

    def is_abelian(self) -> bool:
        return not self.nonzero_pairs


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple[int, int, int]  # 1-based
    residual: tuple

    def __str__(self) -> str:
        i, j, k = self.triple
        return f"Jacobi identity fails at ({i},{j},{k}): residual {list(map(str, self.residual))}"


@dataclass(frozen=True)
class AlgebraReport:
    n: int
    dim_derived: int
    dim_center: int
    nilpotency_class: int | None  # None when not nilpotent; 0 for abelian
    is_stem: bool
    gen_heisenberg_rank: int | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim_derived": self.dim_derived,
            "dim_center": self.dim_center,
            "nilpotency_class": self.nilpotency_class,
            "is_stem": self.is_stem,
            "gen_heisenberg_rank": self.gen_heisenberg_rank,
        }


def abelian(field: Field, n: int) -> StructureConstants:
    return StructureConstants.from_dense(field, n, {})


def _field_vec(L: StructureConstants, v: Sequence) -> list:
    if len(v) != L.n:
        raise DimensionMismatch(f"vector of length {len(v)} for a {L.n}-dimensional algebra")
    return [L.field(x) for x in v]


def bracket(L: StructureConstants, u: Sequence, v: Sequence) -> tuple:
    u = _field_vec(L, u)
    v = _field_vec(L, v)
    return _bracket_raw(L, u, v)


def _bracket_raw(L: StructureConstants, u: Sequence, v: Sequence) -> tuple:
    F = L.field
    p = F.p
    acc = [F.zero] * L.n
    for i, j, vec in L.nonzero_pairs:
        c = u[i] * v[j] - u[j] * v[i]
        if c:
            acc = [a + c * b for a, b in zip(acc, vec)]
    return tuple(x % p for x in acc) if p else tuple(acc)


def _bracket_with_basis(L: StructureConstants, x: Sequence, k: int) -> list:
    """[x, e_k] for a field vector x and 0-based k."""
    F = L.field
    p = F.p
    acc = [F.zero] * L.n
    full = L.full
    for l, a in enumerate(x):
        if a:
            col = full[l][k]
            acc = [s + a * b for s, b in zip(acc, col)]
    return [s % p for s in acc] if p else acc


def validate(L: StructureConstants) -> JacobiViolation | None:
    """Check the Jacobi identity on basis triples; return the first violation or None."""
    n = L.n
    full = L.full
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                t1 = _bracket_with_basis(L, full[i][j], k)
                t2 = _bracket_with_basis(L, full[j][k], i)
                t3 = _bracket_with_basis(L, full[k][i], j)
                p = L.field.p
                res = [a + b + c for a, b, c in zip(t1, t2, t3)]
                if p:
                    res = [x % p for x in res]
                if any(res):
                    return JacobiViolation((i + 1, j + 1, k + 1), tuple(res))
    return None


def derived_subalgebra(L: StructureConstants) -> Subspace:
    return Subspace._from_field_vectors(L.field, L.n, [list(v) for _, _, v in L.nonzero_pairs])


def center(L: StructureConstants) -> Subspace:
    """Kernel of v -> ([e_i, v])_i."""
    n, F = L.n, L.field
    if L.is_abelian():
        return Subspace.full(F, n)
    full = L.full
    rows = []
    for i in range(n):
        for k in range(n):
            r = [full[i][j][k] for j in range(n)]
            if any(r):
                rows.append(r)
    red, piv = _rref_lists(rows, n, F)
    return Subspace._from_field_vectors(F, n, _nullspace_lists(red, piv, n, F))


def lower_central_series(L: StructureConstants) -> list[Subspace]:
    """[L, L^2, L^3, ...] until the terms stabilise (last term repeated once)."""
    n, F = L.n, L.field
    series = [Subspace.full(F, n)]
    while True:
        cur = series[-1]
        if cur.dim == 0:
            return series
        vecs = [_bracket_with_basis(L, list(b), k) for b in cur.vectors for k in range(n)]
        nxt = Subspace._from_field_vectors(F, n, [v for v in vecs if any(v)])
        if nxt == cur:
            series.append(nxt)
            return series
        series.append(nxt)


def nilpotency_class(L: StructureConstants) -> int:
    """Nilpotency class, with the convention that abelian algebras have class 0."""
    series = lower_central_series(L)
    if series[-1].dim != 0:
        raise NotNilpotent("lower central series stabilises at a nonzero term")
    c = len(series) - 1
    return 0 if c == 1 else c


def _class_or_none(L: StructureConstants) -> int | None:
    try:
        return nilpotency_class(L)
    except NotNilpotent:
        return None


def report(L: StructureConstants) -> AlgebraReport:
    D = derived_subalgebra(L)
    Z = center(L)
    return AlgebraReport(
        n=L.n,
        dim_derived=D.dim,
        dim_center=Z.dim,
        nilpotency_class=_class_or_none(L),
        is_stem=Z.issubspace(D),
        gen_heisenberg_rank=D.dim if D == Z else None,
    )


def change_of_basis(L: StructureConstants, S: Matrix) -> StructureConstants:
    """Structure constants in the basis given by the columns of S.

    The result satisfies bracket'(u, v) = S^-1 bracket(S u, S v).
    """
    n, F = L.n, L.field
    if S.rows != n or S.cols != n:
        raise DimensionMismatch(f"need a {n}x{n} matrix")
    if S.field != F:
        raise FieldMismatch("basis change matrix lives over a different field")
    Sinv = inverse(S)  # raises SingularMatrix
    p = F.p
    s = S.entries
    pairs = _pairs(n)
    acc = {pq: [F.zero] * n for pq in pairs}
    for a, b, vec in L.nonzero_pairs:
        sa, sb = s[a], s[b]
        for i, j in pairs:
            c = sa[i] * sb[j] - sb[i] * sa[j]
            if c:
                w = acc[(i, j)]
                acc[(i, j)] = [x + c * y for x, y in zip(w, vec)]
    out = {}
    for pq, w in acc.items():
        if p:
            w = [x % p for x in w]
        if any(w):
            out[pq] = Sinv.apply(w)
    return StructureConstants.from_dense(F, n, out)


def direct_sum(L1: StructureConstants, L2: StructureConstants) -> StructureConstants:
    if L1.field != L2.field:
        raise FieldMismatch("direct sum of algebras over different fields")
    F = L1.field
    n1, n = L1.n, L1.n + L2.n
    z = F.zero
    out = {}
    for i, j, v in L1.nonzero_pairs:
        out[(i, j)] = tuple(v) + (z,) * L2.n
    for i, j, v in L2.nonzero_pairs:
        out[(i + n1, j + n1)] = (z,) * n1 + tuple(v)
    return StructureConstants.from_dense(F, n, out)


def quotient_by_central(L: StructureConstants, N: Subspace) -> StructureConstants:
    """L/N on the images of the standard vectors that are not pivots of N."""
    if not N.issubspace(center(L)):
        raise NotCentral("the ideal is not contained in the center")
    comp = N.complement_indices()
    if not comp:
        raise ValueError("quotient would be zero-dimensional")
    F = L.field
    out = {}
    for a in range(len(comp)):
        for b in range(a + 1, len(comp)):
            v = L.full[comp[a]][comp[b]]
            if any(v):
                w = N.reduce(v)
                out[(a, b)] = tuple(w[c] for c in comp)
    return StructureConstants.from_dense(F, len(comp), out)


def subalgebra(L: StructureConstants, basis: Sequence[Sequence]) -> StructureConstants:
    """Structure constants of the span of ``basis`` (must be closed under the bracket)."""
    F = L.field
    vecs = [[F(x) for x in v] for v in basis]
    t = len(vecs)
    # coordinates via RREF of the augmented system [B^T | w]
    columns = [list(c) for c in zip(*vecs)]
    if _rank_lists([r[:] for r in vecs], L.n, F) != t:
        raise ValueError("basis vectors are linearly dependent")
    out = {}
    for a in range(t):
        for b in range(a + 1, t):
            w = _bracket_raw(L, vecs[a], vecs[b])
            if not any(w):
                continue
            aug = [columns[r] + [w[r]] for r in range(L.n)]
            red, piv = _rref_lists(aug, t + 1, F)
            if piv and piv[-1] == t:
                raise NotClosed("subspace is not closed under the bracket")
            coords = [F.zero] * t
            for row, pc in zip(red, piv):
                coords[pc] = row[-1]
            out[(a, b)] = tuple(coords)
    return StructureConstants.from_dense(F, t, out)


def _random_element(rng: random.Random, field: Field):
    if field.is_finite:
        return rng.randrange(field.p)
    return field(rng.randint(-3, 3))


def random_class2(dimV: int, field: Field, seed: int, max_attempts: int = 1000) -> StructureConstants:
    """Class-two algebra [u, v] = B1(u, v) z + B2(u, v) z1 for random alternating B1, B2.

    Basis order: v_1..v_dimV, z, z1.  Redraws until B1 and B2 are linearly
    independent, so dim L^2 = 2.
    """
    if dimV < 3:
        raise ValueError("dimV must be at least 3")
    rng = random.Random(seed)
    pairs = _pairs(dimV)
    n = dimV + 2
    z = field.zero
    for _ in range(max_attempts):
        b1 = [_random_element(rng, field) for _ in pairs]
        b2 = [_random_element(rng, field) for _ in pairs]
        if _rank_lists([b1[:], b2[:]], len(pairs), field) < 2:
            continue
        out = {}
        for (i, j), x, y in zip(pairs, b1, b2):
            if x or y:
                out[(i, j)] = (z,) * dimV + (x, y)
        return StructureConstants.from_dense(field, n, out)
    raise BadLuck(f"no independent pair of forms after {max_attempts} attempts")
