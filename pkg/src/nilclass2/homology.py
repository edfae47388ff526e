"""Schur multiplier dimension: closed formulas and a cohomological oracle.

The oracle computes dim H^2(L; F) with trivial coefficients from the
Chevalley-Eilenberg complex C^1 -> C^2 -> C^3.  Over a field this equals
dim M(L).  Cochains are indexed by sorted 1-, 2- and 3-subsets of the basis
in lexicographic order, and the differentials are

    (d1 f)(x, y)    = -f([x, y])
    (d2 c)(x, y, w) = -c([x, y], w) + c([x, w], y) - c([y, w], x)

Signs only affect the matrices, not their ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import catalog
from .catalog import BadParams, Family, FamilyParams
from .lie import StructureConstants
from .linalg import Field, _rank_lists

__all__ = [
    "CochainComplexDims",
    "UnsupportedFamily",
    "d1_matrix",
    "d2_matrix",
    "complex_dims",
    "check_d2_d1",
    "schur_multiplier_dim",
    "multiplier_formula",
    "formula_with_abelian",
    "BadParams",
]


class UnsupportedFamily(ValueError):
    pass


@dataclass(frozen=True)
class CochainComplexDims:
    n: int
    dim_C1: int
    dim_C2: int
    dim_C3: int
    rank_d1: int
    rank_d2: int

    @property
    def h2(self) -> int:
        return self.dim_C2 - self.rank_d2 - self.rank_d1


def _neg(F: Field, x):
    return (-x) % F.p if F.p else -x


def d1_matrix(L: StructureConstants) -> list[list]:
    """Rows indexed by pairs i<j, columns by k: entry -c_ij^k."""
    F = L.field
    return [[_neg(F, x) for x in L.br(i, j)] for i, j in combinations(range(L.n), 2)]


def d2_matrix(L: StructureConstants) -> list[list]:
    """Rows indexed by triples x<y<w, columns by pairs."""
    F, n = L.field, L.n
    p = F.p
    pairs = list(combinations(range(n), 2))
    col = {pq: t for t, pq in enumerate(pairs)}
    full = L.full
    rows = []
    for x, y, w in combinations(range(n), 3):
        row = [F.zero] * len(pairs)
        for sign, (a, b), c in ((-1, (x, y), w), (1, (x, w), y), (-1, (y, w), x)):
            v = full[a][b]
            for k, coeff in enumerate(v):
                if not coeff or k == c:
                    continue
                # c(e_k, e_c) in terms of the stored coordinate c(e_min, e_max)
                s = sign if k < c else -sign
                t = col[(k, c) if k < c else (c, k)]
                row[t] = row[t] + s * coeff
        if p:
            row = [e % p for e in row]
        rows.append(row)
    return rows


def complex_dims(L: StructureConstants) -> CochainComplexDims:
    n = L.n
    F = L.field
    c2 = n * (n - 1) // 2
    c3 = n * (n - 1) * (n - 2) // 6
    r1 = _rank_lists(d1_matrix(L), n, F)
    if c3 == 0 or L.is_abelian():
        r2 = 0
    else:
        # the transpose has far fewer rows, which is cheaper to eliminate
        d2t = [list(c) for c in zip(*d2_matrix(L))]
        r2 = _rank_lists(d2t, c3, F)
    return CochainComplexDims(n, n, c2, c3, r1, r2)


def check_d2_d1(L: StructureConstants) -> bool:
    """True when the composite d2 d1 is the zero matrix."""
    F = L.field
    p = F.p
    D1 = d1_matrix(L)
    cols1 = list(zip(*D1))
    for row in d2_matrix(L):
        for c in cols1:
            s = sum(a * b for a, b in zip(row, c) if a and b)
            if (s % p if p else s):
                return False
    return True


def schur_multiplier_dim(L: StructureConstants) -> int:
    return complex_dims(L).h2


def multiplier_formula(tag, params: FamilyParams | None = None, **kw) -> int:
    fam = Family(tag) if not isinstance(tag, Family) else tag
    if params is None:
        params = FamilyParams(**kw)
    if fam not in catalog.H_FAMILIES:
        raise UnsupportedFamily(f"no multiplier formula is stated for {fam.value}")
    n = catalog.dimension(fam, params)  # raises BadParams
    if fam in (Family.H1, Family.H2) or (fam is Family.H8 and params.m == 1):
        return (n - 1) * (n - 4) // 2 + 1
    return (n - 3) * (n - 2) // 2 - 2


def formula_with_abelian(tag, params: FamilyParams, s: int) -> int:
    """Formula value for H + A(s): M(H) + s(t - 2) + s(s - 1)/2 with t = dim H.

    This is the Kunneth-type count M(X + Y) = M(X) + M(Y) + dim(X/X^2) dim(Y/Y^2).
    """
    t = catalog.dimension(tag, params)
    return multiplier_formula(tag, params) + s * (t - 2) + s * (s - 1) // 2

