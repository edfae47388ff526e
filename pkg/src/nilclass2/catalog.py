"""Named class-two algebras with two-dimensional derived subalgebra.

Basis orders (1-based positions, frozen):

=========  ==========================================================
family     basis
=========  ==========================================================
A(n)       e1..en
H(m)       x1..xm, y1..ym, z
H1         x1..xm, y1..ym, z, z1
H2         x1..xm, y1..ym, q, z, z1
H3, H4     x1..xm, y1..ym, q1..qk, z, z1
H5         x1..xm, y1..ym, q1..qk1, q'1..q'k1, z, z1
H6, H7     x1..xm, y1..ym, q1..qk1, q'1..q'k1, p1..pr, z, z1
H8         x1..xm, y1..ym, z, q1..qk1, q'1..q'k1, z1   (= H(m) + H(k1))
L58        x1..x5
L622, L672 x1..x6
L1, L2     x1..x7
=========  ==========================================================

H6 carries [p_s, x_{s+2}] = z exactly as published.  With z (rather than z1)
the element p_s + y_{s+2} is central, so the published H6(m, k1, r) is
H5(m, k1) + A(r) and not a stem algebra.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, fields, replace
from enum import Enum

from .lie import StructureConstants
from .linalg import QQ, Field

__all__ = [
    "Family",
    "FamilyParams",
    "Instance",
    "BadParams",
    "STEM_FAMILIES",
    "basis_labels",
    "make",
    "make_instance",
    "dimension",
    "check_params",
    "enumerate_instances",
    "parse_instance",
]

MAX_ENUMERATE_DIM = 64


class Family(str, Enum):
    A = "A"
    H = "H"
    H1 = "H1"
    H2 = "H2"
    H3 = "H3"
    H4 = "H4"
    H5 = "H5"
    H6 = "H6"
    H7 = "H7"
    H8 = "H8"
    L58 = "L58"
    L622 = "L622"
    L672 = "L672"
    L1 = "L1"
    L2 = "L2"

    def __str__(self) -> str:
        return self.value


H_FAMILIES = (Family.H1, Family.H2, Family.H3, Family.H4, Family.H5, Family.H6, Family.H7, Family.H8)
SMALL_FAMILIES = (Family.L58, Family.L622, Family.L672, Family.L1, Family.L2)
STEM_FAMILIES = SMALL_FAMILIES + H_FAMILIES
_ORDER = {f: i for i, f in enumerate(STEM_FAMILIES + (Family.A, Family.H))}

_PARAM_NAMES = {
    Family.A: ("n",),
    Family.H: ("m",),
    Family.H1: ("m",),
    Family.H2: ("m",),
    Family.H3: ("m", "k"),
    Family.H4: ("m", "k"),
    Family.H5: ("m", "k1"),
    Family.H6: ("m", "k1", "r"),
    Family.H7: ("m", "k1", "r"),
    Family.H8: ("m", "k1"),
    Family.L58: (),
    Family.L622: ("eps",),
    Family.L672: ("eta",),
    Family.L1: (),
    Family.L2: (),
}


class BadParams(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    m: int | None = None
    k: int | None = None
    k1: int | None = None
    r: int | None = None
    n: int | None = None
    eps: object = None
    eta: object = None

    def items(self) -> list[tuple[str, object]]:
        return [(f.name, getattr(self, f.name)) for f in fields(self) if getattr(self, f.name) is not None]

    def to_json(self) -> dict:
        return {k: (v if isinstance(v, int) else str(v)) for k, v in self.items()}


@dataclass(frozen=True)
class Instance:
    """A (family, parameters) pair; ``eps``/``eta`` of None means unspecified."""

    family: Family
    params: FamilyParams = FamilyParams()

    def __str__(self) -> str:
        names = _PARAM_NAMES[self.family]
        if not names:
            return self.family.value
        parts = []
        for name in names:
            v = getattr(self.params, name)
            parts.append(f"{name}={'?' if v is None else v}")
        return f"{self.family.value}[{','.join(parts)}]"

    @property
    def unresolved(self) -> bool:
        return self.family in (Family.L622, Family.L672) and getattr(self.params, _PARAM_NAMES[self.family][0]) is None

    def sort_key(self):
        p = self.params
        return (
            _ORDER[self.family],
            tuple(-1 if getattr(p, a) is None else getattr(p, a) for a in ("m", "k", "k1", "r", "n")),
            tuple(-1 if getattr(p, a) is None else int(getattr(p, a)) for a in ("eps", "eta")),
        )


def _as_family(tag) -> Family:
    try:
        return tag if isinstance(tag, Family) else Family(str(tag))
    except ValueError:
        raise BadParams(f"unknown family {tag!r}") from None


def check_params(tag, params: FamilyParams) -> None:
    """Raise BadParams naming the first violated constraint."""
    fam = _as_family(tag)
    allowed = set(_PARAM_NAMES[fam])
    for name, _ in params.items():
        if name not in allowed:
            raise BadParams(f"{fam} takes no parameter {name}")
    for name in allowed - {"eps", "eta"}:
        v = getattr(params, name)
        if v is None:
            raise BadParams(f"{fam} needs parameter {name}")
        if not isinstance(v, int) or isinstance(v, bool):
            raise BadParams(f"{fam}: {name} must be an integer")
    for ok, rule in _rules(fam, params):
        if not ok:
            shown = ", ".join(f"{a}={b}" for a, b in params.items())
            raise BadParams(f"{rule} (got {fam}[{shown}])")


def _rules(fam: Family, params: FamilyParams):
    m, k, k1, r = params.m, params.k, params.k1, params.r
    if fam is Family.A:
        yield params.n >= 0, "n ≥ 0"
    elif fam is Family.H:
        yield m >= 1, "m ≥ 1"
    elif fam in (Family.H1, Family.H2):
        yield m >= 3, "m ≥ 3"
    elif fam is Family.H3:
        yield m >= 4, "m ≥ 4"
        yield k >= 2, "k ≥ 2"
        yield k <= m - 2, "k ≤ m−2"
    elif fam is Family.H4:
        yield m >= 2, "m ≥ 2"
        yield k >= 2, "k ≥ 2"
        yield k <= m, "k ≤ m"
    elif fam is Family.H5:
        yield m >= 2, "m ≥ 2"
        yield k1 >= 2, "k1 ≥ 2"
    elif fam is Family.H6:
        yield m >= 4, "m ≥ 4"
        yield k1 >= 2, "k1 ≥ 2"
        yield r >= 1, "r ≥ 1"
        yield r <= m - 2, "r ≤ m−2"
    elif fam is Family.H7:
        yield m >= 2, "m ≥ 2"
        yield k1 >= 2, "k1 ≥ 2"
        yield r >= 1, "r ≥ 1"
        yield r <= m, "r ≤ m"
    elif fam is Family.H8:
        yield m >= 1, "m ≥ 1"
        yield k1 >= 2, "k1 ≥ 2"


def dimension(tag, params: FamilyParams | None = None, **kw) -> int:
    fam = _as_family(tag)
    params = _params(params, kw)
    check_params(fam, params)
    m, k, k1, r = params.m, params.k, params.k1, params.r
    return {
        Family.A: lambda: params.n,
        Family.H: lambda: 2 * m + 1,
        Family.H1: lambda: 2 * m + 2,
        Family.H2: lambda: 2 * m + 3,
        Family.H3: lambda: 2 * m + k + 2,
        Family.H4: lambda: 2 * m + k + 2,
        Family.H5: lambda: 2 * m + 2 * k1 + 2,
        Family.H6: lambda: 2 * m + 2 * k1 + r + 2,
        Family.H7: lambda: 2 * m + 2 * k1 + r + 2,
        Family.H8: lambda: 2 * m + 2 * k1 + 2,
        Family.L58: lambda: 5,
        Family.L622: lambda: 6,
        Family.L672: lambda: 6,
        Family.L1: lambda: 7,
        Family.L2: lambda: 7,
    }[fam]()


def basis_labels(tag, params: FamilyParams | None = None, **kw) -> list[str]:
    """Symbol for each basis position, in the frozen order of the module table."""
    fam = _as_family(tag)
    params = _params(params, kw)
    check_params(fam, params)
    m, k, k1, r = params.m, params.k, params.k1, params.r
    xs = [f"x{i}" for i in range(1, (m or 0) + 1)]
    ys = [f"y{i}" for i in range(1, (m or 0) + 1)]
    if fam is Family.A:
        return [f"e{i}" for i in range(1, params.n + 1)]
    if fam is Family.H:
        return xs + ys + ["z"]
    if fam is Family.H1:
        return xs + ys + ["z", "z1"]
    if fam is Family.H2:
        return xs + ys + ["q", "z", "z1"]
    if fam in (Family.H3, Family.H4):
        return xs + ys + [f"q{j}" for j in range(1, k + 1)] + ["z", "z1"]
    qs = [f"q{j}" for j in range(1, (k1 or 0) + 1)]
    qps = [f"q'{j}" for j in range(1, (k1 or 0) + 1)]
    if fam is Family.H5:
        return xs + ys + qs + qps + ["z", "z1"]
    if fam in (Family.H6, Family.H7):
        return xs + ys + qs + qps + [f"p{t}" for t in range(1, r + 1)] + ["z", "z1"]
    if fam is Family.H8:
        return xs + ys + ["z"] + qs + qps + ["z1"]
    return [f"x{i}" for i in range(1, dimension(fam, params) + 1)]


def _relations(fam: Family, p: FamilyParams) -> list[tuple[str, str, str, object]]:
    """Nonzero brackets as (a, b, target, coefficient) with [a, b] = coefficient * target."""
    m, k, k1, r = p.m, p.k, p.k1, p.r
    rel = []
    if fam in (Family.H, Family.H1, Family.H2, Family.H3, Family.H4, Family.H5, Family.H6, Family.H7, Family.H8):
        rel += [(f"x{i}", f"y{i}", "z", 1) for i in range(1, m + 1)]
    if fam in (Family.H1, Family.H3, Family.H5, Family.H6):
        rel.append(("x1", "x2", "z1", 1))
    if fam is Family.H2:
        rel.append(("q", "x1", "z1", 1))
    if fam is Family.H3:
        rel += [(f"q{j}", f"x{j + 2}", "z1", 1) for j in range(1, k + 1)]
    if fam is Family.H4:
        rel += [(f"q{j}", f"x{j}", "z1", 1) for j in range(1, k + 1)]
    if fam in (Family.H5, Family.H6, Family.H7, Family.H8):
        rel += [(f"q{j}", f"q'{j}", "z1", 1) for j in range(1, k1 + 1)]
    if fam is Family.H6:
        rel += [(f"p{s}", f"x{s + 2}", "z", 1) for s in range(1, r + 1)]
    if fam is Family.H7:
        rel += [(f"p{t}", f"x{t}", "z1", 1) for t in range(1, r + 1)]
    if fam is Family.L58:
        rel += [("x1", "x2", "x4", 1), ("x1", "x3", "x5", 1)]
    if fam is Family.L622:
        rel += [("x1", "x2", "x5", 1), ("x1", "x3", "x6", 1), ("x2", "x4", "x6", p.eps), ("x3", "x4", "x5", 1)]
    if fam is Family.L672:
        rel += [
            ("x1", "x2", "x5", 1),
            ("x1", "x3", "x6", 1),
            ("x2", "x4", "x6", p.eta),
            ("x3", "x4", "x5", 1),
            ("x3", "x4", "x6", 1),
        ]
    if fam is Family.L1:
        rel += [("x1", "x2", "x6", 1), ("x1", "x4", "x7", 1), ("x3", "x5", "x7", 1)]
    if fam is Family.L2:
        rel += [("x1", "x2", "x6", 1), ("x3", "x4", "x6", 1), ("x1", "x5", "x7", 1), ("x2", "x3", "x7", 1)]
    return rel


def _params(params: FamilyParams | None, kw: dict) -> FamilyParams:
    if params is None:
        return FamilyParams(**kw)
    return replace(params, **kw) if kw else params


def make(tag, params: FamilyParams | None = None, field: Field = QQ, **kw) -> StructureConstants:
    """Structure constants of a catalog algebra in its documented basis order."""
    fam = _as_family(tag)
    params = _params(params, kw)
    check_params(fam, params)
    if fam in (Family.L622, Family.L672):
        name = _PARAM_NAMES[fam][0]
        val = getattr(params, name)
        if val is None:
            raise BadParams(f"{fam} needs a concrete value for {name}")
        params = replace(params, **{name: field(val)})
    if fam is Family.A and params.n < 1:
        raise BadParams("n ≥ 1 (cannot build a zero-dimensional algebra)")
    labels = basis_labels(fam, params)
    index = {s: i + 1 for i, s in enumerate(labels)}
    n = len(labels)
    table: dict[tuple[int, int], dict[int, object]] = {}
    for a, b, target, coeff in _relations(fam, params):
        i, j, c = index[a], index[b], field(coeff)
        if i > j:
            i, j, c = j, i, -c
        table.setdefault((i, j), {})
        t = index[target]
        table[(i, j)][t] = table[(i, j)].get(t, field.zero) + c
    return StructureConstants.from_brackets(field, n, table)


def make_instance(inst: Instance, field: Field) -> StructureConstants:
    return make(inst.family, inst.params, field)


def enumerate_instances(n: int, field: Field) -> list[Instance]:
    """Every catalog stem-family instance of dimension exactly n, sorted.

    Over a finite field eps/eta run through all field elements; over Q the
    two parametrised six-dimensional families appear once, unspecified.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUMERATE_DIM:
        raise ValueError(f"enumeration capped at n ≤ {MAX_ENUMERATE_DIM}")
    out: list[Instance] = []
    if n == 5:
        out.append(Instance(Family.L58))
    if n == 6:
        values = list(field.elements()) if field.is_finite else [None]
        out += [Instance(Family.L622, FamilyParams(eps=v)) for v in values]
        out += [Instance(Family.L672, FamilyParams(eta=v)) for v in values]
    if n == 7:
        out += [Instance(Family.L1), Instance(Family.L2)]
    for fam in H_FAMILIES:
        for params in _solve_dimension(fam, n):
            out.append(Instance(fam, params))
    return sorted(out, key=Instance.sort_key)


def _solve_dimension(fam: Family, n: int) -> list[FamilyParams]:
    found = []
    candidates: list[FamilyParams] = []
    for m in range(1, n // 2 + 1):
        rest = n - 2 * m - 2
        if fam is Family.H1:
            candidates.append(FamilyParams(m=m))
        elif fam is Family.H2:
            candidates.append(FamilyParams(m=m))
        elif fam in (Family.H3, Family.H4):
            candidates.append(FamilyParams(m=m, k=rest))
        elif fam in (Family.H5, Family.H8):
            if rest >= 0 and rest % 2 == 0:
                candidates.append(FamilyParams(m=m, k1=rest // 2))
        else:
            candidates += [FamilyParams(m=m, k1=k1, r=rest - 2 * k1) for k1 in range(0, rest // 2 + 1)]
    for params in candidates:
        try:
            if dimension(fam, params) == n:
                found.append(params)
        except BadParams:
            continue
    return found


_INSTANCE_RE = re.compile(r"^\s*([A-Za-z0-9]+)\s*(?:\[(.*)\])?\s*$")


def parse_instance(text: str, field: Field | None = None) -> Instance:
    """Parse spellings such as ``H3[m=4,k=2]``, ``L622[eps=1]`` or ``L58``."""
    mt = _INSTANCE_RE.match(text)
    if not mt:
        raise BadParams(f"cannot parse family instance {text!r}")
    fam = _as_family(mt.group(1))
    kw: dict[str, object] = {}
    if mt.group(2):
        for part in mt.group(2).split(","):
            if not part.strip():
                continue
            if "=" not in part:
                raise BadParams(f"parameter {part!r} lacks '='")
            name, val = (s.strip() for s in part.split("=", 1))
            if name in ("eps", "eta"):
                kw[name] = None if val == "?" else (field(val) if field is not None else val)
            elif name in ("m", "k", "k1", "r", "n"):
                kw[name] = int(val)
            else:
                raise BadParams(f"unknown parameter {name!r}")
    params = FamilyParams(**kw)
    check_params(fam, params)
    return Instance(fam, params)
