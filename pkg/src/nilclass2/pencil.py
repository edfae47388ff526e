"""Pencils of alternating forms attached to class-two algebras.

For a class-two L with dim L^2 = 2 the bracket V x V -> L^2 on a complement
V of L^2 is a pair of alternating forms (B1, B2), the coordinates of the
bracket along the reduced basis (d1, d2) of L^2.  Changing bases in V and in
L^2 acts by congruence and by GL(2) on the pencil, so ranks of pencil members
and the way the degenerate members meet are isomorphism invariants.

Over a prime field every point of P^1 is tried.  Over Q the generic rank is
the maximum over at least dimV + 1 finite sample points (a nonzero minor has
degree at most dimV, so this is exact), and the degenerate directions are
the rational roots of the gcd of a few random combinations of maximal
minors, each confirmed by an exact rank computation.
"""

from __future__ import annotations

import json
import random
from math import lcm
from dataclasses import dataclass
from functools import lru_cache

from .lie import (
    StructureConstants,
    center,
    derived_subalgebra,
    lower_central_series,
)
from .linalg import (
    Field,
    Matrix,
    UniPoly,
    _nullspace_lists,
    _rank_lists,
    _rref_lists,
    interpolate,
    poly_gcd,
    rational_roots,
)

__all__ = [
    "AlternatingPencil",
    "Direction",
    "PencilAnalysis",
    "Fingerprint",
    "HypothesisViolated",
    "FieldCapExceeded",
    "extract",
    "rank_at",
    "analyze",
    "drop_directions",
    "fingerprint",
]

DEFAULT_PRIME_CAP = 101
_RATIONAL_SAMPLES = (0, 1, -1, 2, -2, 3, -3, 4)
_MINOR_COMBINATIONS = 3


class HypothesisViolated(ValueError):
    pass


class FieldCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Direction:
    """Projective point [a:b], normalised to (1, t) or (0, 1)."""

    a: object
    b: object

    @classmethod
    def of(cls, field: Field, a, b) -> "Direction":
        a, b = field(a), field(b)
        if a:
            inv = field.inv(a)
            t = b * inv
            return cls(field.one, t % field.p if field.p else t)
        if not b:
            raise ValueError("[0:0] is not a projective point")
        return cls(field.zero, field.one)

    def __str__(self) -> str:
        return f"[{self.a}:{self.b}]"


@dataclass(frozen=True)
class AlternatingPencil:
    field: Field
    dimV: int
    B1: Matrix
    B2: Matrix
    derived_basis: tuple[tuple, tuple]
    complement: tuple[int, ...]  # 0-based basis indices spanning V

    def form(self, w: Direction) -> list[list]:
        p = self.field.p
        a, b = w.a, w.b
        out = []
        for r1, r2 in zip(self.B1.entries, self.B2.entries):
            if p:
                out.append([(a * x + b * y) % p for x, y in zip(r1, r2)])
            else:
                out.append([a * x + b * y for x, y in zip(r1, r2)])
        return out


def _check_hypotheses(L: StructureConstants):
    D = derived_subalgebra(L)
    if D.dim != 2:
        raise HypothesisViolated(f"dim L^2 = {D.dim}, need 2")
    series = lower_central_series(L)
    if len(series) != 3 or series[-1].dim != 0:
        raise HypothesisViolated("algebra is not nilpotent of class two")
    return D


def extract(L: StructureConstants) -> AlternatingPencil:
    D = _check_hypotheses(L)
    comp = D.complement_indices()
    piv = D.pivots
    F = L.field
    z = F.zero
    k = len(comp)
    B1 = [[z] * k for _ in range(k)]
    B2 = [[z] * k for _ in range(k)]
    full = L.full
    for a in range(k):
        for b in range(a + 1, k):
            v = full[comp[a]][comp[b]]
            x, y = v[piv[0]], v[piv[1]]
            if x:
                B1[a][b] = x
                B1[b][a] = (-x) % F.p if F.p else -x
            if y:
                B2[a][b] = y
                B2[b][a] = (-y) % F.p if F.p else -y
    return AlternatingPencil(
        field=F,
        dimV=k,
        B1=Matrix._trusted(F, B1, k),
        B2=Matrix._trusted(F, B2, k),
        derived_basis=(D.vectors[0], D.vectors[1]),
        complement=comp,
    )


def rank_at(P: AlternatingPencil, w: Direction) -> int:
    return _rank_lists(P.form(w), P.dimV, P.field)


@dataclass(frozen=True)
class PencilAnalysis:
    generic_rank: int
    drops: tuple[tuple[Direction, int], ...]
    nondrop_flag: bool


def _all_directions(F: Field):
    yield Direction(F.zero, F.one)
    for t in F.elements():
        yield Direction(F.one, t)


def analyze(P: AlternatingPencil, prime_cap: int = DEFAULT_PRIME_CAP, seed: int = 0) -> PencilAnalysis:
    F = P.field
    if F.is_finite:
        if F.p > prime_cap:
            raise FieldCapExceeded(f"p = {F.p} exceeds the direction-enumeration cap {prime_cap}")
        ranks = [(w, rank_at(P, w)) for w in _all_directions(F)]
        g = max(r for _, r in ranks)
        return PencilAnalysis(g, tuple((w, r) for w, r in ranks if r < g), False)
    return _analyze_rational(P, seed)


def _analyze_rational(P: AlternatingPencil, seed: int) -> PencilAnalysis:
    F = P.field
    d = P.dimV
    rng = random.Random(seed)
    samples = list(_RATIONAL_SAMPLES)
    samples += [rng.randint(5, 10**6) * rng.choice((1, -1)) for _ in range(8)]
    t = 5
    while len(set(samples)) < d + 1:
        samples.append(t)
        t += 1
    samples = list(dict.fromkeys(samples))
    inf = Direction(F.zero, F.one)
    rank_inf = rank_at(P, inf)
    g = max([rank_inf] + [rank_at(P, Direction(F.one, F(s))) for s in samples])
    drops: list[tuple[Direction, int]] = []
    if rank_inf < g:
        drops.append((inf, rank_inf))
    if g == 0:
        return PencilAnalysis(0, tuple(drops), False)
    gcd = _minor_gcd(P, g, rng)
    flag = False
    if gcd.degree > 0:
        rest = gcd
        for lam in rational_roots(gcd):
            w = Direction(F.one, lam)
            r = rank_at(P, w)
            if r < g:
                drops.append((w, r))
                lin = UniPoly(F, (-lam, 1))
                while True:
                    q, rem = divmod(rest, lin)
                    if not rem.is_zero():
                        break
                    rest = q
        flag = rest.degree > 0
    return PencilAnalysis(g, tuple(drops), flag)


def _minor_gcd(P: AlternatingPencil, g: int, rng: random.Random) -> UniPoly:
    """gcd of random linear combinations of g x g minors of B1 + t*B2.

    det(X (B1 + t B2) Y) for random X (g x d) and Y (d x g) is such a
    combination by Cauchy-Binet.  The pencil is first scaled to integer
    entries, which changes neither ranks nor roots, so the determinants are
    fraction-free.
    """
    F = P.field
    d = P.dimV
    den = 1
    for row in P.B1.entries + P.B2.entries:
        for x in row:
            den = lcm(den, int(x.denominator))
    B1 = [[int(x * den) for x in row] for row in P.B1.entries]
    B2 = [[int(x * den) for x in row] for row in P.B2.entries]
    acc = UniPoly(F, ())
    points = list(range(g + 1))
    for _ in range(_MINOR_COMBINATIONS):
        X = [[rng.randint(-50, 50) for _ in range(d)] for _ in range(g)]
        Y = [[rng.randint(-50, 50) for _ in range(g)] for _ in range(d)]
        A = _triple(X, B1, Y)
        C = _triple(X, B2, Y)
        vals = [_bareiss_det([[a + s * c for a, c in zip(ra, rc)] for ra, rc in zip(A, C)]) for s in points]
        poly = interpolate(F, points, vals)
        if not poly.is_zero():
            acc = poly if acc.is_zero() else poly_gcd(acc, poly)
    return acc.monic()


def _bareiss_det(M: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (M is consumed)."""
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            row_i, mik = M[i], M[i][k]
            row_k = M[k]
            M[i] = [0] * (k + 1) + [(pivot * row_i[j] - mik * row_k[j]) // prev for j in range(k + 1, n)]
        prev = pivot
    return sign * M[n - 1][n - 1] if n else 1


def _triple(X, B, Y):
    XB = [[sum(x * b for x, b in zip(xr, col) if x and b) for col in zip(*B)] for xr in X]
    return [[sum(a * y for a, y in zip(r, col) if a and y) for col in zip(*Y)] for r in XB]


def drop_directions(P: AlternatingPencil, prime_cap: int = DEFAULT_PRIME_CAP) -> list[tuple[Direction, int]]:
    return list(analyze(P, prime_cap).drops)


@dataclass(frozen=True)
class Fingerprint:
    n: int
    dim_center: int
    dim_derived: int
    dimV: int
    generic_rank: int
    drops: tuple[int, ...]
    cross: tuple[int, ...]
    nondrop_flag: bool = False

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim_center": self.dim_center,
            "dim_derived": self.dim_derived,
            "dimV": self.dimV,
            "generic_rank": self.generic_rank,
            "drops": list(self.drops),
            "cross": list(self.cross),
            "nondrop_flag": self.nondrop_flag,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _restricted_rank(P: AlternatingPencil, radical_of: Direction, form: Direction) -> int:
    F = P.field
    red, piv = _rref_lists(P.form(radical_of), P.dimV, F)
    K = _nullspace_lists(red, piv, P.dimV, F)
    if not K:
        return 0
    Bw = P.form(form)
    p = F.p
    KB = [[sum(k * b for k, b in zip(kr, col) if k and b) for col in zip(*Bw)] for kr in K]
    R = [[sum(a * b for a, b in zip(r, k2) if a and b) for k2 in K] for r in KB]
    if p:
        R = [[x % p for x in r] for r in R]
    return _rank_lists(R, len(K), F)


def fingerprint(L: StructureConstants, prime_cap: int = DEFAULT_PRIME_CAP) -> Fingerprint:
    P = extract(L)
    A = analyze(P, prime_cap)
    dirs = [w for w, _ in A.drops]
    cross = [_restricted_rank(P, w, w2) for w in dirs for w2 in dirs if w != w2]
    return Fingerprint(
        n=L.n,
        dim_center=center(L).dim,
        dim_derived=2,
        dimV=P.dimV,
        generic_rank=A.generic_rank,
        drops=tuple(sorted(r for _, r in A.drops)),
        cross=tuple(sorted(cross)),
        nondrop_flag=A.nondrop_flag,
    )


@lru_cache(maxsize=4096)
def cached_fingerprint(L: StructureConstants, prime_cap: int = DEFAULT_PRIME_CAP) -> Fingerprint:
    return fingerprint(L, prime_cap)
