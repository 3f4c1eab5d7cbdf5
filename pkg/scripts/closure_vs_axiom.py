"""Cross-check the closure condition against application-axiom validity.

For random finite explicit models, the closure report must agree with the
truth of every application instance over the subformulas of the values.
"""
from __future__ import annotations

import argparse
import itertools
import random
from dataclasses import dataclass

from jemkit.formulaset import FormulaSet
from jemkit.jem import iter_terms
from jemkit.models import BasicModel, check_closure, subterm_closure
from jemkit.syntax import App, Implies, Just, Var, parse_formula, subformulas

BASE = [parse_formula(s) for s in ("P", "Q", "P -> Q", "Q -> P", "P -> P", "x:P", "x:P -> Q")]


@dataclass
class Config:
    models: int = 1000
    depth: int = 1
    seed: int = 0


def run(cfg: Config) -> tuple[int, int, int]:
    rng = random.Random(cfg.seed)
    universe = sorted(set().union(*(subformulas(f) for f in BASE)), key=str)
    sig = sorted(subterm_closure(iter_terms([Var("x"), Var("y")], cfg.depth)), key=str)
    apps = [u for u in sig if isinstance(u, App)]
    closed = disagreements = 0
    for _ in range(cfg.models):
        values = {u: FormulaSet(frozenset(rng.sample(BASE, rng.randint(0, 3)))) for u in sig}
        m = BasicModel(atom_values={"P": rng.random() < 0.5, "Q": rng.random() < 0.5}, term_values=values)
        valid = all(
            m.holds(Implies(Just(u.left, Implies(a, b)), Implies(Just(u.right, a), Just(u, b))))
            for u in apps
            for a, b in itertools.product(universe, repeat=2)
        )
        ok = check_closure(m, sig).passed
        closed += ok
        disagreements += ok != valid
    return cfg.models, closed, disagreements


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--models", type=int, default=Config.models)
    p.add_argument("--depth", type=int, default=Config.depth)
    p.add_argument("--seed", type=int, default=Config.seed)
    args = p.parse_args()
    total, closed, bad = run(Config(args.models, args.depth, args.seed))
    print(f"{total} models, {closed} satisfy closure, {bad} disagreements with the axiom check")


if __name__ == "__main__":
    main()
