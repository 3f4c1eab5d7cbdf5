"""Seeded random terms, formulas and models for sampling experiments."""
from __future__ import annotations

import random
from typing import Sequence

from .formulaset import ALL, EMPTY, FormulaSet
from .models import BasicModel
from .syntax import (
    FALSUM,
    And,
    App,
    Atom,
    Const,
    Formula,
    Implies,
    Just,
    Not,
    Or,
    Term,
    Var,
    term_leaves,
)

DEFAULT_ATOMS = ("P", "Q", "R")
DEFAULT_VARS = ("x", "y")


def random_term(rng: random.Random, depth: int, variables=DEFAULT_VARS, constants: int = 3) -> Term:
    if depth <= 0 or rng.random() < 0.4:
        if variables and rng.random() < 0.6:
            return Var(rng.choice(variables))
        return Const(rng.randrange(constants))
    return App(
        random_term(rng, depth - 1, variables, constants),
        random_term(rng, depth - 1, variables, constants),
    )


def random_formula(
    rng: random.Random,
    depth: int,
    atoms: Sequence[str] = DEFAULT_ATOMS,
    variables: Sequence[str] = DEFAULT_VARS,
    just_rate: float = 0.2,
    term_depth: int = 1,
) -> Formula:
    if depth <= 0 or rng.random() < 0.2:
        return FALSUM if rng.random() < 0.05 else Atom(rng.choice(atoms))
    r = rng.random()
    sub = lambda: random_formula(rng, depth - 1, atoms, variables, just_rate, term_depth)  # noqa: E731
    if r < just_rate:
        return Just(random_term(rng, term_depth, variables), sub())
    r = rng.random()
    if r < 0.2:
        return Not(sub())
    kind = rng.choice((And, Or, Implies))
    return kind(sub(), sub())


def random_formula_set(rng: random.Random, pool: Sequence[Formula], max_size: int = 3, all_rate: float = 0.1) -> FormulaSet:
    if rng.random() < all_rate:
        return ALL
    k = rng.randint(0, min(max_size, len(pool)))
    return FormulaSet(frozenset(rng.sample(list(pool), k)))


def random_atom_values(rng: random.Random, atoms: Sequence[str]) -> dict[str, bool]:
    return {a: rng.random() < 0.5 for a in atoms}


def random_sharp_model(
    rng: random.Random,
    leaves: Sequence[Term],
    pool: Sequence[Formula],
    atoms: Sequence[str] = DEFAULT_ATOMS,
    max_size: int = 3,
    all_rate: float = 0.1,
    injective: bool = False,
    fixed: dict[Term, FormulaSet] | None = None,
) -> BasicModel:
    """Sharp model with random leaf values; unlisted leaves get the empty set.

    With ``injective`` every leaf justifies at most one formula, which makes
    every term injective.
    """
    values = {}
    for leaf in leaves:
        if injective:
            values[leaf] = FormulaSet.of(rng.choice(list(pool))) if rng.random() < 0.7 else EMPTY
        else:
            values[leaf] = random_formula_set(rng, pool, max_size, all_rate)
    values.update(fixed or {})
    return BasicModel(
        atom_values=random_atom_values(rng, atoms),
        term_values=values,
        term_default=EMPTY,
        sharp=True,
    )


def random_explicit_model(
    rng: random.Random,
    signature: Sequence[Term],
    pool: Sequence[Formula],
    atoms: Sequence[str] = DEFAULT_ATOMS,
    max_size: int = 3,
    all_rate: float = 0.0,
) -> BasicModel:
    return BasicModel(
        atom_values=random_atom_values(rng, atoms),
        term_values={t: random_formula_set(rng, pool, max_size, all_rate) for t in signature},
        term_default=EMPTY,
    )


def leaves_of(terms) -> list[Term]:
    out = []
    for t in terms:
        for leaf in term_leaves(t):
            if leaf not in out:
                out.append(leaf)
    return out
