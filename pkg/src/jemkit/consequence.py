"""Classical consequence with justification assertions read as atoms.

Derivability from hypotheses coincides with truth in every basic model of
the hypotheses, so ``entails`` is decided semantically: the hypotheses plus
the negated goal are atomized, put in CNF and handed to a small DPLL
solver. A satisfying assignment is turned directly into a basic model by
``t* = {X | t:X is assigned true}``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .errors import ResourceLimitError
from .formulaset import FormulaSet
from .models import BasicModel
from .syntax import (
    FALSUM,
    And,
    Atom,
    Falsum,
    Formula,
    Implies,
    Just,
    Not,
    Or,
    print_formula,
)

DEFAULT_ATOM_LIMIT = 24


def default_atom_limit() -> int:
    return int(os.environ.get("JEMKIT_ATOM_LIMIT", DEFAULT_ATOM_LIMIT))


@dataclass(frozen=True)
class AtomizedSkeleton:
    """Propositional skeletons over abstract atoms ``a0, a1, ...``.

    ``dictionary`` maps each abstract atom to the propositional atom or the
    maximal justification assertion it replaces.
    """

    skeletons: tuple[Formula, ...]
    dictionary: dict[str, Formula]

    @property
    def atom_count(self) -> int:
        return len(self.dictionary)


def atomize(formulas: Iterable[Formula]) -> AtomizedSkeleton:
    keys: dict[str, str] = {}
    dictionary: dict[str, Formula] = {}

    def abstract(f: Formula) -> Atom:
        key = print_formula(f)
        if key not in keys:
            name = f"a{len(keys)}"
            keys[key] = name
            dictionary[name] = f
        return Atom(keys[key])

    def walk(f: Formula) -> Formula:
        match f:
            case Atom() | Just():
                return abstract(f)
            case Falsum():
                return f
            case Not(body):
                return Not(walk(body))
            case And(a, b) | Or(a, b) | Implies(a, b):
                return type(f)(walk(a), walk(b))
        raise TypeError(f"not a formula: {f!r}")

    skeletons = tuple(walk(f) for f in formulas)
    return AtomizedSkeleton(skeletons, dictionary)


# -- CNF and DPLL ------------------------------------------------------------

class _CNF:
    def __init__(self):
        self.clauses: list[tuple[int, ...]] = []
        self.nvars = 0
        self.atom_vars: dict[str, int] = {}
        self._memo: dict[Formula, int] = {}

    def new_var(self) -> int:
        self.nvars += 1
        return self.nvars

    def literal(self, f: Formula) -> int:
        """Tseitin literal equivalent to ``f``."""
        if f in self._memo:
            return self._memo[f]
        match f:
            case Atom(name):
                if name not in self.atom_vars:
                    self.atom_vars[name] = self.new_var()
                lit = self.atom_vars[name]
            case Falsum():
                lit = self.new_var()
                self.clauses.append((-lit,))
            case Not(body):
                lit = -self.literal(body)
            case And(a, b):
                x, y, lit = self.literal(a), self.literal(b), self.new_var()
                self.clauses += [(-lit, x), (-lit, y), (lit, -x, -y)]
            case Or(a, b):
                x, y, lit = self.literal(a), self.literal(b), self.new_var()
                self.clauses += [(-lit, x, y), (lit, -x), (lit, -y)]
            case Implies(a, b):
                x, y, lit = self.literal(a), self.literal(b), self.new_var()
                self.clauses += [(-lit, -x, y), (lit, x), (lit, -y)]
            case _:
                raise TypeError(f"not propositional: {f!r}")
        self._memo[f] = lit
        return lit


def _propagate(clauses, assignment: dict[int, bool]) -> bool:
    changed = True
    while changed:
        changed = False
        for clause in clauses:
            unassigned = None
            count = 0
            satisfied = False
            for lit in clause:
                v = assignment.get(abs(lit))
                if v is None:
                    count += 1
                    unassigned = lit
                elif v == (lit > 0):
                    satisfied = True
                    break
            if satisfied:
                continue
            if count == 0:
                return False
            if count == 1:
                assignment[abs(unassigned)] = unassigned > 0
                changed = True
    return True


def dpll(clauses: list[tuple[int, ...]], nvars: int) -> dict[int, bool] | None:
    """A satisfying assignment of all ``nvars`` variables, or ``None``."""

    def solve(assignment: dict[int, bool]) -> dict[int, bool] | None:
        if not _propagate(clauses, assignment):
            return None
        for v in range(1, nvars + 1):
            if v not in assignment:
                break
        else:
            return assignment
        for choice in (True, False):
            trial = dict(assignment)
            trial[v] = choice
            found = solve(trial)
            if found is not None:
                return found
        return None

    return solve({})


def satisfying_assignment(
    formulas: Iterable[Formula], atom_limit: int | None = None
) -> tuple[AtomizedSkeleton, dict[str, bool] | None]:
    """Make every formula true, atoms read through ``atomize``."""
    skeleton = atomize(formulas)
    limit = default_atom_limit() if atom_limit is None else atom_limit
    if skeleton.atom_count > limit:
        raise ResourceLimitError(
            f"{skeleton.atom_count} distinct atoms exceed the limit of {limit}"
        )
    cnf = _CNF()
    for name in skeleton.dictionary:
        cnf.literal(Atom(name))
    for f in skeleton.skeletons:
        cnf.clauses.append((cnf.literal(f),))
    # the atoms are numbered first, so DPLL branches on them before aux vars
    found = dpll(cnf.clauses, cnf.nvars)
    if found is None:
        return skeleton, None
    return skeleton, {name: found[var] for name, var in cnf.atom_vars.items()}


def entails(
    hypotheses: Iterable[Formula], goal: Formula, atom_limit: int | None = None
) -> bool:
    _, found = satisfying_assignment([*hypotheses, Not(goal)], atom_limit)
    return found is None


def consistent(formulas: Iterable[Formula], atom_limit: int | None = None) -> bool:
    return not entails(formulas, FALSUM, atom_limit)


def model_from_assignment(skeleton: AtomizedSkeleton, assignment: dict[str, bool]) -> BasicModel:
    atoms: dict[str, bool] = {}
    values: dict = {}
    for name, original in skeleton.dictionary.items():
        truth = assignment[name]
        if isinstance(original, Atom):
            atoms[original.name] = truth
        else:
            values.setdefault(original.term, set())
            if truth:
                values[original.term].add(original.body)
    return BasicModel(
        atom_values=atoms,
        term_values={t: FormulaSet(frozenset(fs)) for t, fs in values.items()},
    )


def countermodel(
    hypotheses: Iterable[Formula], goal: Formula, atom_limit: int | None = None
) -> BasicModel | None:
    """A basic model of the hypotheses falsifying ``goal``; ``None`` if entailed."""
    skeleton, found = satisfying_assignment([*hypotheses, Not(goal)], atom_limit)
    if found is None:
        return None
    return model_from_assignment(skeleton, found)
