"""Compare the printed H6 with a variant whose p-brackets land on z1.

As printed, [p_s, x_{s+2}] = z makes p_s + y_{s+2} central, so H6 is not a
stem algebra and cannot be unicentral; in fact it is H5(m, k1) + A(r).  Sending the p-brackets to z1 instead
gives a stem algebra; this script reports how both versions behave.
"""

import argparse
from dataclasses import dataclass

from nilclass2.catalog import Family, FamilyParams, _relations, basis_labels, make
from nilclass2.classifier import Ambiguous, NoMatch, classify
from nilclass2.extsquare import exterior_center
from nilclass2.homology import multiplier_formula, schur_multiplier_dim
from nilclass2.lie import StructureConstants, report, validate
from nilclass2.linalg import Field
from nilclass2.pencil import fingerprint


@dataclass
class Config:
    m: int = 4
    k1: int = 2
    r: int = 1
    field: str = "F3"


def h6_variant(F, m, k1, r):
    params = FamilyParams(m=m, k1=k1, r=r)
    labels = basis_labels(Family.H6, params)
    pos = {s: i + 1 for i, s in enumerate(labels)}
    br = {}
    for a, b, tgt, c in _relations(Family.H6, params):
        if a.startswith("p"):
            tgt = "z1"
        i, j = pos[a], pos[b]
        br[(min(i, j), max(i, j))] = {pos[tgt]: c if i < j else -c}
    return StructureConstants.from_brackets(F, len(labels), br)


def describe(name, L, m, k1, r):
    rep = report(L)
    R = exterior_center(L)
    M = schur_multiplier_dim(L)
    try:
        res = str(classify(L))
    except (NoMatch, Ambiguous) as e:
        res = f"{type(e).__name__}: {e}"
    print(f"{name}: n={L.n} valid={validate(L) is None} stem={rep.is_stem} dim Z={rep.dim_center}")
    print(f"  dim Z^={R.dim} unicentral={R.is_unicentral}")
    print(f"  multiplier oracle={M} formula={multiplier_formula('H6', m=m, k1=k1, r=r)}")
    print(f"  fingerprint={fingerprint(L).dumps()}")
    print(f"  classify -> {res}")


def main():
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in vars(cfg).items():
        ap.add_argument(f"--{name}", type=type(val), default=val)
    cfg = Config(**vars(ap.parse_args()))
    F = Field.from_name(cfg.field)
    describe("H6 as printed", make("H6", m=cfg.m, k1=cfg.k1, r=cfg.r, field=F), cfg.m, cfg.k1, cfg.r)
    describe("H6 with [p_s, x_{s+2}] = z1", h6_variant(F, cfg.m, cfg.k1, cfg.r), cfg.m, cfg.k1, cfg.r)
    f7 = fingerprint(make("H7", m=cfg.m, k1=cfg.k1, r=cfg.r, field=F))
    print(f"H7 for comparison: fingerprint={f7.dumps()}")


if __name__ == "__main__":
    main()
