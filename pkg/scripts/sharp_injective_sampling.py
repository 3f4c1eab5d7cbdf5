"""How often random models falsify ~(x:(P->Q) /\\ y:P /\\ [x.y]:R).

Sharp injective models never do. Sharp models with larger leaf values and
explicit models respecting closure do, which is why the formula separates
sharp injective validity from J⁻ derivability.
"""
from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from jemkit.formulaset import FormulaSet
from jemkit.models import BasicModel, check_closure, subterm_closure
from jemkit.sampling import random_formula_set, random_sharp_model
from jemkit.syntax import App, Atom, Implies, Var, parse_formula

FORMULA = parse_formula("~(x:(P -> Q) /\\ y:P /\\ [x.y]:R)")
P, Q, R = Atom("P"), Atom("Q"), Atom("R")
POOL = [P, R, Implies(P, Q), Implies(P, R), Implies(P, P)]


@dataclass
class Config:
    samples: int = 2000
    seed: int = 0


def run(cfg: Config) -> dict[str, tuple[int, int]]:
    rng = random.Random(cfg.seed)
    x, y = Var("x"), Var("y")
    counts = {"sharp injective": [0, 0], "sharp": [0, 0], "explicit J-": [0, 0]}
    for _ in range(cfg.samples):
        m = random_sharp_model(rng, [x, y], POOL, injective=True)
        counts["sharp injective"][0] += not m.holds(FORMULA)
        m = random_sharp_model(rng, [x, y], POOL, max_size=4, all_rate=0.0)
        counts["sharp"][0] += not m.holds(FORMULA)
        values = {t: random_formula_set(rng, POOL + [Q], 3, 0.1) for t in (x, y, App(x, y))}
        e = BasicModel(atom_values={"P": rng.random() < 0.5, "Q": rng.random() < 0.5}, term_values=values)
        if check_closure(e, subterm_closure([App(x, y)])).passed:
            counts["explicit J-"][0] += not e.holds(FORMULA)
            counts["explicit J-"][1] += 1
    counts["sharp injective"][1] = counts["sharp"][1] = cfg.samples
    return {k: (v[0], v[1]) for k, v in counts.items()}


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--seed", type=int, default=Config.seed)
    args = p.parse_args()
    for name, (bad, total) in run(Config(args.samples, args.seed)).items():
        print(f"{name:<16} {bad:>5} / {total:<5} models falsify the formula")


if __name__ == "__main__":
    main()
