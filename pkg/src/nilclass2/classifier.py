"""Decision procedure: class two, dim L^2 = 2  ->  catalog entry plus abelian summand.

The input is split as L = H + A(s) with H stem, H is fingerprinted, and the
fingerprint is compared with those of every catalog entry of dimension dim H.
A unique match is returned.  Zero matches and several matches are reported
as exceptions carrying the data, since either one contradicts the
classification being complete and irredundant over that field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import catalog
from .catalog import Family, FamilyParams, Instance
from .lie import StructureConstants, center, derived_subalgebra, nilpotency_class, NotNilpotent
from .linalg import Field
from .pencil import DEFAULT_PRIME_CAP, Fingerprint, HypothesisViolated, fingerprint

__all__ = [
    "ClassificationResult",
    "Reject",
    "NoMatch",
    "Ambiguous",
    "validate_hypotheses",
    "split_stem",
    "classify_stem",
    "classify",
    "candidate_fingerprints",
]

EXACT = "exact_fingerprint"
UNRESOLVED = "parameter_unresolved"


class Reject(ValueError):
    """Input is outside the hypotheses (reason: NotClass2 or DerivedDimNot2)."""

    def __init__(self, reason: str, detail: str):
        super().__init__(f"{reason}: {detail}")
        self.reason = reason
        self.detail = detail


class NoMatch(LookupError):
    def __init__(self, reason: str, fingerprint: Fingerprint | None = None, abelian_dim: int = 0):
        super().__init__(reason)
        self.reason = reason
        self.fingerprint = fingerprint
        self.abelian_dim = abelian_dim


class Ambiguous(LookupError):
    def __init__(self, candidates: list[Instance], fingerprint: Fingerprint, abelian_dim: int = 0):
        super().__init__("several catalog entries share the fingerprint: " + ", ".join(map(str, candidates)))
        self.candidates = candidates
        self.fingerprint = fingerprint
        self.abelian_dim = abelian_dim


@dataclass(frozen=True)
class ClassificationResult:
    family: Family
    params: FamilyParams
    abelian_dim: int
    matched_by: str
    field: Field = dc_field(compare=False)

    @property
    def instance(self) -> Instance:
        return Instance(self.family, self.params)

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "params": self.params.to_json(),
            "abelian_dim": self.abelian_dim,
            "matched_by": self.matched_by,
        }

    def __str__(self) -> str:
        return f"{self.instance} ⊕ A({self.abelian_dim})"


def validate_hypotheses(L: StructureConstants) -> None:
    try:
        c = nilpotency_class(L)
    except NotNilpotent:
        raise Reject("NotClass2", "algebra is not nilpotent") from None
    if c != 2:
        raise Reject("NotClass2", f"nilpotency class {c} ≠ 2")
    d = derived_subalgebra(L).dim
    if d != 2:
        raise Reject("DerivedDimNot2", f"dim L^2 = {d} ≠ 2")


def split_stem(L: StructureConstants) -> tuple[StructureConstants, int]:
    """Return (H, s) with L = H + A(s) and H stem.

    H is spanned by L^2 and the standard vectors that are not pivots of Z(L);
    brackets of the latter lie in L^2 and are expressed in its RREF basis.
    """
    D = derived_subalgebra(L)
    Z = center(L)
    if D.dim != 2 or not D.issubspace(Z):
        raise HypothesisViolated("need class two with dim L^2 = 2")
    s = Z.dim - D.dim
    if s == 0:
        return L, 0
    W = Z.complement_indices()
    dpiv = D.pivots
    t = len(W)
    F = L.field
    out = {}
    for a in range(t):
        for b in range(a + 1, t):
            v = L.full[W[a]][W[b]]
            c1, c2 = v[dpiv[0]], v[dpiv[1]]
            if c1 or c2:
                vec = [F.zero] * (t + 2)
                vec[t], vec[t + 1] = c1, c2
                out[(a, b)] = tuple(vec)
    H = StructureConstants.from_dense(F, t + 2, out)
    if center(H).dim != 2:
        raise AssertionError("split_stem produced a non-stem summand")
    return H, s


@lru_cache(maxsize=None)
def candidate_fingerprints(n: int, field: Field, prime_cap: int = DEFAULT_PRIME_CAP) -> tuple[tuple[Instance, Fingerprint | None], ...]:
    """Fingerprints of all catalog entries of dimension n (None for unresolved parameters)."""
    out = []
    for inst in catalog.enumerate_instances(n, field):
        if inst.unresolved:
            out.append((inst, None))
        else:
            out.append((inst, fingerprint(catalog.make_instance(inst, field), prime_cap)))
    return tuple(out)


def classify_stem(H: StructureConstants, prime_cap: int = DEFAULT_PRIME_CAP, abelian_dim: int = 0) -> ClassificationResult:
    F = H.field
    n = H.n
    if n < 5:
        raise NoMatch("StemTooSmall", abelian_dim=abelian_dim)
    fp = fingerprint(H, prime_cap)
    cands = candidate_fingerprints(n, F, prime_cap)
    unresolved = [inst for inst, cfp in cands if cfp is None]
    if unresolved:
        # The dimension-six entries over Q: in characteristic zero every such
        # stem algebra lies in the eps family, whose parameter is not reduced.
        inst = next((i for i in unresolved if i.family is Family.L622), unresolved[0])
        return ClassificationResult(inst.family, inst.params, abelian_dim, UNRESOLVED, F)
    if fp.nondrop_flag:
        raise NoMatch("IrrationalDrop", fp, abelian_dim)
    hits = [inst for inst, cfp in cands if cfp == fp]
    if not hits:
        raise NoMatch("NotInCatalog", fp, abelian_dim)
    if len(hits) > 1:
        raise Ambiguous(hits, fp, abelian_dim)
    inst = hits[0]
    return ClassificationResult(inst.family, inst.params, abelian_dim, EXACT, F)


def classify(L: StructureConstants, prime_cap: int = DEFAULT_PRIME_CAP) -> ClassificationResult:
    validate_hypotheses(L)
    H, s = split_stem(L)
    return classify_stem(H, prime_cap, abelian_dim=s)
