"""List every fingerprint collision among same-dimension catalog entries."""

import argparse
from collections import defaultdict
from dataclasses import dataclass

from nilclass2.catalog import enumerate_instances, make_instance
from nilclass2.linalg import Field
from nilclass2.pencil import fingerprint


@dataclass
class Config:
    min_dim: int = 6
    max_dim: int = 14
    fields: str = "F2,F3,F5"


def sweep(cfg):
    for name in cfg.fields.split(","):
        F = Field.from_name(name)
        for n in range(cfg.min_dim, cfg.max_dim + 1):
            groups = defaultdict(list)
            insts = [i for i in enumerate_instances(n, F) if not i.unresolved]
            for inst in insts:
                groups[fingerprint(make_instance(inst, F))].append(str(inst))
            clashes = [g for g in groups.values() if len(g) > 1]
            print(f"{name} n={n}: {len(insts)} entries, {len(groups)} fingerprints")
            for g in clashes:
                print("   collision:", ", ".join(g))


def main():
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in vars(cfg).items():
        ap.add_argument(f"--{k.replace('_', '-')}", dest=k, type=type(v), default=v)
    sweep(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
