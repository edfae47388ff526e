"""Classify seeded random class-two algebras and tabulate what comes back."""

import argparse
from collections import Counter
from dataclasses import dataclass

from nilclass2.classifier import Ambiguous, NoMatch, classify, split_stem
from nilclass2.lie import random_class2
from nilclass2.linalg import Field


@dataclass
class Config:
    field: str = "F2"
    samples: int = 200
    min_stem: int = 8
    max_stem: int = 11
    seed: int = 0


def run(cfg):
    F = Field.from_name(cfg.field)
    outcomes, shapes = Counter(), Counter()
    seed, taken = cfg.seed, 0
    span = cfg.max_stem - cfg.min_stem + 1
    while taken < cfg.samples:
        L = random_class2(cfg.min_stem - 2 + seed % span, F, seed)
        seed += 1
        if not cfg.min_stem <= split_stem(L)[0].n <= cfg.max_stem:
            continue
        taken += 1
        try:
            outcomes[str(classify(L))] += 1
        except NoMatch as e:
            fp = e.fingerprint
            outcomes[f"NoMatch:{e.reason}"] += 1
            shapes[(fp.n, fp.generic_rank, fp.drops, fp.cross)] += 1
        except Ambiguous as e:
            outcomes["Ambiguous:" + "|".join(map(str, e.candidates))] += 1
    print(f"{cfg.field}: {cfg.samples} samples")
    for k, v in outcomes.most_common():
        print(f"  {v:4d}  {k}")
    print("unmatched pencil shapes (n, g, drops, cross):")
    for k, v in shapes.most_common(15):
        print(f"  {v:4d}  {k}")


def main():
    cfg = Config()
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in vars(cfg).items():
        ap.add_argument(f"--{k.replace('_', '-')}", dest=k, type=type(v), default=v)
    run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
