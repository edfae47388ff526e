"""AlgebraFile: the on-disk JSON form of a StructureConstants table.

    {"brackets": [{"i": 1, "j": 2, "v": [["8", "1"]]}, ...],
     "dim": 8, "field": {"kind": "Q"}, "format": "nilclass2-v1"}

Each bracket lists the nonzero coordinates of [e_i, e_j] (1-based, i < j) as
[basis_index, coefficient] pairs.  Coefficients are strings ("3", "-1/2");
indices are written as strings too and accepted either way.  Serialization is
canonical: sorted keys, brackets in (i, j) order, pairs in index order, zero
entries dropped, one line.
"""

from __future__ import annotations

import json
from pathlib import Path

from .lie import StructureConstants
from .linalg import GF, QQ, Field

__all__ = ["FORMAT", "ParseError", "field_from_json", "loads", "dumps", "load", "dump"]

FORMAT = "nilclass2-v1"


class ParseError(ValueError):
    def __init__(self, message: str, position: str | None = None):
        super().__init__(message if position is None else f"{position}: {message}")
        self.position = position


def field_from_json(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError('expected {"kind": "Q"} or {"kind": "Fp", "p": ...}', "field")
    kind = obj["kind"]
    if kind == "Q":
        return QQ
    if kind == "Fp":
        p = obj.get("p")
        if isinstance(p, str) and p.isdigit():
            p = int(p)
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError("prime modulus must be an integer", "field.p")
        try:
            return GF(p)
        except ValueError as exc:
            raise ParseError(str(exc), "field.p") from None
    raise ParseError(f"unknown field kind {kind!r}", "field.kind")


def _index(x, dim: int, where: str) -> int:
    if isinstance(x, bool):
        raise ParseError("index must be an integer", where)
    if isinstance(x, str):
        if not x.strip().lstrip("-").isdigit():
            raise ParseError(f"index {x!r} is not an integer", where)
        x = int(x)
    if not isinstance(x, int):
        raise ParseError("index must be an integer", where)
    if not 1 <= x <= dim:
        raise ParseError(f"index {x} out of range 1..{dim}", where)
    return x


def from_obj(doc) -> StructureConstants:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if doc.get("format") != FORMAT:
        raise ParseError(f"format must be {FORMAT!r}", "format")
    F = field_from_json(doc.get("field"))
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim must be a positive integer", "dim")
    brackets = doc.get("brackets", [])
    if not isinstance(brackets, list):
        raise ParseError("brackets must be a list", "brackets")
    table: dict[tuple[int, int], dict[int, object]] = {}
    for t, entry in enumerate(brackets):
        where = f"brackets[{t}]"
        if not isinstance(entry, dict):
            raise ParseError("entry must be an object", where)
        i = _index(entry.get("i"), dim, where + ".i")
        j = _index(entry.get("j"), dim, where + ".j")
        if i >= j:
            raise ParseError("require i<j", where)
        if (i, j) in table:
            raise ParseError(f"duplicate bracket ({i},{j})", where)
        vec: dict[int, object] = {}
        pairs = entry.get("v", [])
        if not isinstance(pairs, list):
            raise ParseError("v must be a list of [index, coefficient] pairs", where)
        for u, pair in enumerate(pairs):
            pw = f"{where}.v[{u}]"
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError("expected [index, coefficient]", pw)
            k = _index(pair[0], dim, pw)
            c = pair[1]
            if not isinstance(c, (str, int)) or isinstance(c, bool):
                raise ParseError("coefficient must be a string", pw)
            try:
                val = F.parse(c) if isinstance(c, str) else F(c)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad coefficient {c!r}: {exc}", pw) from None
            if k in vec:
                raise ParseError(f"basis index {k} listed twice", pw)
            vec[k] = val
        table[(i, j)] = vec
    return StructureConstants.from_brackets(F, dim, table)


def loads(text: str) -> StructureConstants:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return from_obj(doc)


def to_obj(L: StructureConstants) -> dict:
    F = L.field
    brackets = []
    for i, j, v in L.nonzero_pairs:
        brackets.append({"i": i + 1, "j": j + 1, "v": [[str(k + 1), F.format(c)] for k, c in enumerate(v) if c]})
    return {"format": FORMAT, "field": F.to_json(), "dim": L.n, "brackets": brackets}


def dumps(L: StructureConstants) -> str:
    return json.dumps(to_obj(L), sort_keys=True, ensure_ascii=False) + "\n"


def load(path) -> StructureConstants:
    return loads(Path(path).read_text())


def dump(L: StructureConstants, path) -> None:
    Path(path).write_text(dumps(L))
