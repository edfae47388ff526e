"""Command-line front end: ``nilclass2 <command> ...``.

Exit codes: 0 ok, 1 domain error, 2 parse error, 3 reject, 4 no match,
5 ambiguous.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, io
from .catalog import BadParams, FamilyParams
from .classifier import Ambiguous, NoMatch, Reject, classify
from .extsquare import ClassTooHigh, exterior_center
from .homology import UnsupportedFamily, formula_with_abelian, schur_multiplier_dim
from .lie import BadLuck, NotNilpotent, change_of_basis, direct_sum, abelian, random_class2, report, validate
from .linalg import Field, random_invertible
from .pencil import FieldCapExceeded, HypothesisViolated, fingerprint

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE, EXIT_REJECT, EXIT_NOMATCH, EXIT_AMBIGUOUS = range(6)


class DomainError(Exception):
    pass


def _canon(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _field(name: str) -> Field:
    try:
        return Field.from_name(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_lie(path: str):
    L = io.load(path)
    bad = validate(L)
    if bad is not None:
        raise DomainError(str(bad))
    return L


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    L = io.load(args.file)
    bad = validate(L)
    if bad is not None:
        print(bad)
        return EXIT_DOMAIN
    print("ok")
    return EXIT_OK


def _outcome_json(exc) -> dict:
    if isinstance(exc, Reject):
        return {"status": "reject", "reason": exc.reason, "detail": exc.detail}
    if isinstance(exc, NoMatch):
        out = {"status": "no_match", "reason": exc.reason, "abelian_dim": exc.abelian_dim}
        if exc.fingerprint is not None:
            out["fingerprint"] = exc.fingerprint.to_json()
        return out
    return {
        "status": "ambiguous",
        "candidates": [str(c) for c in exc.candidates],
        "fingerprint": exc.fingerprint.to_json(),
        "abelian_dim": exc.abelian_dim,
    }


def cmd_classify(args) -> int:
    L = _load_lie(args.file)
    try:
        res = classify(L, prime_cap=args.prime_cap)
    except (Reject, NoMatch, Ambiguous) as exc:
        code = {Reject: EXIT_REJECT, NoMatch: EXIT_NOMATCH, Ambiguous: EXIT_AMBIGUOUS}[type(exc)]
        if args.json:
            print(_canon(_outcome_json(exc)))
        elif isinstance(exc, Reject):
            print(f"reject: {exc.detail}")
        elif isinstance(exc, NoMatch):
            print(f"no match: {exc.reason}")
            if exc.fingerprint is not None:
                print(f"fingerprint: {exc.fingerprint.dumps()}")
        else:
            print("ambiguous: " + ", ".join(map(str, exc.candidates)))
        return code
    print(_canon(res.to_json()) if args.json else str(res))
    return EXIT_OK


def _params_from_args(args) -> FamilyParams:
    kw = {}
    for name in ("m", "k", "k1", "r", "n"):
        v = getattr(args, name)
        if v is not None:
            kw[name] = v
    for name in ("eps", "eta"):
        v = getattr(args, name)
        if v is not None:
            kw[name] = args.field(v)
    return FamilyParams(**kw)


def cmd_catalog(args) -> int:
    F = args.field
    if args.action == "list":
        for inst in catalog.enumerate_instances(args.dim, F):
            print(inst)
        return EXIT_OK
    params = _params_from_args(args)
    L = catalog.make(args.tag, params, field=F)
    if args.abelian:
        L = direct_sum(L, abelian(F, args.abelian))
    _write(io.dumps(L), args.output)
    return EXIT_OK


def cmd_info(args) -> int:
    rep = report(_load_lie(args.file))
    if args.json:
        print(_canon(rep.to_json()))
    else:
        for k, v in rep.to_json().items():
            print(f"{k}: {v}")
    return EXIT_OK


def cmd_fingerprint(args) -> int:
    fp = fingerprint(_load_lie(args.file), prime_cap=args.prime_cap)
    print(fp.dumps())
    return EXIT_OK


def cmd_multiplier(args) -> int:
    L = _load_lie(args.file)
    oracle = schur_multiplier_dim(L)
    formula = None
    family = None
    try:
        res = classify(L)
        family = str(res)
        formula = formula_with_abelian(res.family, res.params, res.abelian_dim)
    except (Reject, NoMatch, Ambiguous, UnsupportedFamily, FieldCapExceeded):
        pass
    match = None if formula is None else formula == oracle
    if args.json:
        print(_canon({"oracle": oracle, "formula": formula, "match": match, "family": family}))
    else:
        f = "n/a" if formula is None else str(formula)
        m = "n/a" if match is None else str(match).lower()
        print(f"oracle: {oracle}, formula: {f}, match: {m}")
    return EXIT_OK


def cmd_excenter(args) -> int:
    L = _load_lie(args.file)
    rep = exterior_center(L)
    if args.json:
        print(_canon(rep.to_json(L.field)))
    else:
        print(f"dim {rep.dim}, unicentral: {str(rep.is_unicentral).lower()}, capable: {str(rep.is_capable).lower()}")
        for v in rep.basis.vectors:
            print("  " + " ".join(L.field.format(x) for x in v))
    return EXIT_OK


def cmd_scramble(args) -> int:
    L = _load_lie(args.file)
    S = random_invertible(L.n, L.field, args.seed)
    _write(io.dumps(change_of_basis(L, S)), args.output)
    return EXIT_OK


def cmd_random(args) -> int:
    L = random_class2(args.dimv, args.field, args.seed)
    _write(io.dumps(L), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nilclass2", description="Class-two nilpotent Lie algebras with two-dimensional derived subalgebra.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name, fn, help_, json_flag=True, cap=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        if json_flag:
            p.add_argument("--json", action="store_true", help="emit canonical JSON")
        if cap:
            p.add_argument("--prime-cap", type=int, default=101, help="largest p for direction enumeration")
        p.set_defaults(func=fn)
        return p

    with_file("validate", cmd_validate, "check the Jacobi identity", json_flag=False)
    with_file("classify", cmd_classify, "identify the catalog entry and abelian summand", cap=True)
    with_file("info", cmd_info, "dimensions, class and stem predicates")
    with_file("fingerprint", cmd_fingerprint, "pencil invariants as canonical JSON", cap=True)
    with_file("multiplier", cmd_multiplier, "Schur multiplier: oracle vs formula")
    with_file("excenter", cmd_excenter, "exterior center and capability")

    p = with_file("scramble", cmd_scramble, "apply a seeded random change of basis", json_flag=False)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")

    p = sub.add_parser("random", help="random class-two algebra with dim L^2 = 2")
    p.add_argument("--dimv", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--field", type=_field, default=Field.from_name("Q"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("catalog", help="list or emit catalog algebras")
    csub = p.add_subparsers(dest="action", required=True)
    pl = csub.add_parser("list")
    pl.add_argument("--dim", type=int, required=True)
    pl.add_argument("--field", type=_field, default=Field.from_name("Q"))
    pl.set_defaults(func=cmd_catalog)
    pe = csub.add_parser("emit")
    pe.add_argument("tag")
    for name in ("m", "k", "k1", "r", "n"):
        pe.add_argument(f"--{name}", type=int)
    pe.add_argument("--eps")
    pe.add_argument("--eta")
    pe.add_argument("--abelian", type=int, default=0, help="append an abelian summand of this dimension")
    pe.add_argument("--field", type=_field, default=Field.from_name("Q"))
    pe.add_argument("-o", "--output")
    pe.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except io.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BadParams as exc:
        print(f"BadParams: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, HypothesisViolated, FieldCapExceeded, ClassTooHigh, NotNilpotent, BadLuck, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
