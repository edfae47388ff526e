"""A finite model of the nonabelian exterior square for class at most two.

Wedge symbols e_i ^ e_j (i < j) span F^(n choose 2).  The relation space is
spanned by

    [e_a, e_b] ^ e_c  -  e_a ^ [e_b, e_c]  +  e_b ^ [e_a, e_c]

for all a < b and all c, expanded bilinearly with e_j ^ e_i = -e_i ^ e_j.
With this sign convention the relations vanish identically for H(1), as they
must (dim M(H(1)) + dim H(1)^2 = 3 = number of wedge symbols).

The quotient has dimension dim M(L) + dim L^2, which the test suite checks
against the cohomological oracle for every algebra it touches.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .lie import StructureConstants, center, derived_subalgebra, lower_central_series
from .linalg import Subspace, _nullspace_lists, _rref_lists

__all__ = [
    "ClassTooHigh",
    "ExteriorSquare",
    "ExteriorCenterReport",
    "exterior_square",
    "exterior_center",
]


class ClassTooHigh(ValueError):
    pass


@dataclass(frozen=True)
class ExteriorSquare:
    n: int
    wedge_dim: int
    relation_space: Subspace
    commutator_map: tuple[tuple, ...]  # wedge_dim rows, n columns: e_i ^ e_j -> [e_i, e_j]

    @property
    def quotient_dim(self) -> int:
        return self.wedge_dim - self.relation_space.dim


@dataclass(frozen=True)
class ExteriorCenterReport:
    basis: Subspace
    is_capable: bool
    is_unicentral: bool

    @property
    def dim(self) -> int:
        return self.basis.dim

    def to_json(self, field=None) -> dict:
        fmt = field.format if field is not None else str
        return {
            "dim": self.dim,
            "basis": [[fmt(x) for x in v] for v in self.basis.vectors],
            "is_capable": self.is_capable,
            "is_unicentral": self.is_unicentral,
        }


def _check_class(L: StructureConstants) -> None:
    series = lower_central_series(L)
    if series[-1].dim != 0 or len(series) > 3:
        raise ClassTooHigh("the exterior-square model is only valid for class at most two")


def _wedge_index(n: int) -> dict[tuple[int, int], int]:
    return {pq: t for t, pq in enumerate(combinations(range(n), 2))}


def _add_wedge(acc: list, idx, u, j: int, sign: int) -> None:
    """acc += sign * (u ^ e_j) where u is a coordinate vector."""
    for i, c in enumerate(u):
        if not c or i == j:
            continue
        if i < j:
            acc[idx[(i, j)]] += sign * c
        else:
            acc[idx[(j, i)]] -= sign * c


def exterior_square(L: StructureConstants) -> ExteriorSquare:
    _check_class(L)
    F, n = L.field, L.n
    p = F.p
    idx = _wedge_index(n)
    w = len(idx)
    full = L.full
    rels = []
    for a, b in combinations(range(n), 2):
        ab = full[a][b]
        for c in range(n):
            acc = [F.zero] * w
            _add_wedge(acc, idx, ab, c, 1)
            # -e_a ^ [e_b, e_c] = +[e_b, e_c] ^ e_a
            _add_wedge(acc, idx, full[b][c], a, 1)
            # +e_b ^ [e_a, e_c] = -[e_a, e_c] ^ e_b
            _add_wedge(acc, idx, full[a][c], b, -1)
            if p:
                acc = [x % p for x in acc]
            if any(acc):
                rels.append(acc)
    R = Subspace._from_field_vectors(F, w, rels)
    comm = tuple(tuple(full[i][j]) for i, j in combinations(range(n), 2))
    return ExteriorSquare(n, w, R, comm)


def exterior_center(L: StructureConstants, E: ExteriorSquare | None = None) -> ExteriorCenterReport:
    """Z^(L) = {v : v ^ e_j lies in the relation space for every j}."""
    if E is None:
        E = exterior_square(L)
    F, n = L.field, L.n
    p = F.p
    idx = _wedge_index(n)
    R = E.relation_space
    # column i of the system: the residues of e_i ^ e_j, j = 1..n, stacked
    columns = []
    for i in range(n):
        col = []
        for j in range(n):
            acc = [F.zero] * E.wedge_dim
            if i != j:
                if i < j:
                    acc[idx[(i, j)]] = F.one
                else:
                    acc[idx[(j, i)]] = (-1) % p if p else -F.one
            col.extend(R.reduce(acc))
        columns.append(col)
    system = [list(r) for r in zip(*columns)]
    red, piv = _rref_lists(system, n, F)
    K = Subspace._from_field_vectors(F, n, _nullspace_lists(red, piv, n, F))
    Z = center(L)
    if not K.issubspace(Z):
        raise AssertionError("exterior center escaped the center")
    return ExteriorCenterReport(
        basis=K,
        is_capable=K.dim == 0,
        is_unicentral=K == Z,
    )


def extension_defect(L: StructureConstants, multiplier: int) -> int:
    """quotient_dim - (dim M + dim L^2); zero when the model is right."""
    return exterior_square(L).quotient_dim - multiplier - derived_subalgebra(L).dim
