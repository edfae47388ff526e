"""Tabulate the cohomological multiplier against the closed-form values."""

import argparse
from dataclasses import dataclass

from nilclass2.catalog import H_FAMILIES, enumerate_instances, make_instance
from nilclass2.homology import multiplier_formula, schur_multiplier_dim
from nilclass2.linalg import Field


@dataclass
class Config:
    max_dim: int = 13
    fields: str = "Q,F2,F3,F5"


def main():
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-dim", dest="max_dim", type=int, default=cfg.max_dim)
    ap.add_argument("--fields", default=cfg.fields)
    cfg = Config(**vars(ap.parse_args()))
    fields = [Field.from_name(f) for f in cfg.fields.split(",")]
    print(f"{'algebra':24s} {'n':>3s} {'formula':>8s}  " + "  ".join(f"{str(F):>4s}" for F in fields))
    bad = 0
    for n in range(8, cfg.max_dim + 1):
        for inst in enumerate_instances(n, fields[0]):
            if inst.family not in H_FAMILIES:
                continue
            f = multiplier_formula(inst.family, inst.params)
            vals = [schur_multiplier_dim(make_instance(inst, F)) for F in fields]
            bad += sum(v != f for v in vals)
            print(f"{str(inst):24s} {n:3d} {f:8d}  " + "  ".join(f"{v:4d}" for v in vals))
    print(f"mismatches: {bad}")


if __name__ == "__main__":
    main()
