"""Bounded derivability in J⁻ and countermodel search over J⁻ models."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .axioms import application_instance
from .consequence import entails, satisfying_assignment
from .errors import ResourceLimitError
from .formulaset import ALL, FormulaSet, mp_apply
from .models import BasicModel, check_closure, subterm_closure
from .syntax import (
    FALSUM,
    And,
    App,
    Atom,
    Falsum,
    Formula,
    Implies,
    Just,
    Not,
    Or,
    Term,
    atoms,
    subformulas,
    subterms,
    term_size,
)


@dataclass(frozen=True)
class Derivable:
    instances: tuple[Formula, ...]

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotFoundAtDepth:
    """No derivation with the generated instances; not a proof of underivability."""

    depth: int
    instances_tried: int = 0

    def __bool__(self):
        return False


def _closure(formulas: Iterable[Formula]) -> set[Formula]:
    out: set[Formula] = set()
    for f in formulas:
        out |= subformulas(f)
    return out


def application_instances(formulas: set[Formula]) -> set[Formula]:
    """Application axioms whose parts already occur among ``formulas``.

    An instance ``s:(F -> G) -> (t:F -> [s.t]:G)`` is generated when either
    ``[s.t]:G`` and ``s:(F -> G)`` occur, or ``s:(F -> G)`` and ``t:F`` occur.
    """
    justs = [f for f in formulas if isinstance(f, Just)]
    by_body: dict[Formula, list[Term]] = {}
    for f in justs:
        by_body.setdefault(f.body, []).append(f.term)
    out = set()
    for f in justs:
        s, body = f.term, f.body
        if isinstance(body, Implies):
            for t in by_body.get(body.left, ()):
                out.add(application_instance(s, t, body.left, body.right))
        if isinstance(s, App):
            for g in justs:
                if g.term == s.left and isinstance(g.body, Implies) and g.body.right == body:
                    out.add(application_instance(s.left, s.right, g.body.left, body))
    return out


def derive_jminus(
    hypotheses: Iterable[Formula],
    goal: Formula,
    instantiation_depth: int = 1,
    atom_limit: int | None = None,
) -> Derivable | NotFoundAtDepth:
    """Search for a J⁻ derivation of ``goal`` from ``hypotheses``.

    Each round adds Application instances built from the current
    subformula closure; after the last round the goal is checked for
    classical consequence. Sound, but only bounded.
    """
    hypotheses = list(hypotheses)
    pool = _closure([*hypotheses, goal])
    instances: set[Formula] = set()
    if entails(hypotheses, goal, atom_limit):
        return Derivable(())
    for _ in range(instantiation_depth):
        new = application_instances(pool) - instances
        if not new:
            break
        instances |= new
        pool |= _closure(new)
    if not instances:
        return NotFoundAtDepth(instantiation_depth, 0)
    ordered = sorted(instances, key=str)
    try:
        found = entails([*hypotheses, *ordered], goal, atom_limit)
    except ResourceLimitError as exc:
        raise ResourceLimitError(f"instance set too large at depth {instantiation_depth}: {exc}")
    if not found:
        return NotFoundAtDepth(instantiation_depth, len(ordered))
    # drop instances that are not needed
    needed = list(ordered)
    for inst in ordered:
        trial = [x for x in needed if x != inst]
        if entails([*hypotheses, *trial], goal, atom_limit):
            needed = trial
    return Derivable(tuple(needed))


# -- countermodels respecting closure ----------------------------------------

DEFAULT_SEARCH_LIMIT = 2_000_000


def _candidates(pool: list[Formula], padding: int, app_first: bool) -> list[FormulaSet]:
    finite = [
        FormulaSet(frozenset(c))
        for k in range(padding + 1)
        for c in itertools.combinations(pool, k)
    ]
    return [ALL, *finite] if app_first else [*finite, ALL]


def find_countermodel_jminus(
    goal: Formula,
    padding: int = 1,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
    atom_limit: int | None = None,
) -> BasicModel | None:
    """An explicit J⁻ model falsifying ``goal``, or ``None`` if none in range.

    Terms of the goal's signature get a subset of the goal's subformulas of
    at most ``padding`` elements, or ALL; every other term is ALL, so the
    closure condition holds automatically outside the signature. Atoms are
    then chosen by the SAT solver.
    """
    signature = sorted(subterms(goal), key=lambda t: (term_size(t), str(t)))
    pool = sorted(subformulas(goal), key=str)
    options = [_candidates(pool, padding, isinstance(t, App)) for t in signature]
    space = 1
    for opt in options:
        space *= len(opt)
    if space > search_limit:
        raise ResourceLimitError(f"search space {space} exceeds limit {search_limit}")

    index = {t: i for i, t in enumerate(signature)}
    assignment: list[FormulaSet | None] = [None] * len(signature)

    def closure_ok(i: int) -> bool:
        t = signature[i]
        if not isinstance(t, App):
            return True
        lhs = mp_apply(assignment[index[t.left]], assignment[index[t.right]])
        return lhs.issubset(assignment[i])

    def leaf_model() -> BasicModel | None:
        values = dict(zip(signature, assignment))
        probe = BasicModel(term_values=values, term_default=ALL)
        # justification assertions are now fixed; only atoms remain free
        residual = _fix_assertions(goal, probe)
        skeleton, found = satisfying_assignment([residual], atom_limit)
        if found is None:
            return None
        atom_values = {name: False for name in atoms(goal)}
        for abstract, original in skeleton.dictionary.items():
            atom_values[original.name] = found[abstract]
        model = BasicModel(atom_values=atom_values, term_values=values, term_default=ALL)
        assert not model.holds(goal)
        return model

    def search(i: int) -> BasicModel | None:
        if i == len(signature):
            return leaf_model()
        for value in options[i]:
            assignment[i] = value
            if closure_ok(i):
                found = search(i + 1)
                if found is not None:
                    return found
        assignment[i] = None
        return None

    model = search(0)
    if model is not None:
        assert check_closure(model, subterm_closure(signature)).passed
    return model


def _fix_assertions(goal: Formula, model: BasicModel) -> Formula:
    """The negated goal with every maximal ``t:X`` replaced by its truth value."""
    truth = Implies(FALSUM, FALSUM)

    def walk(f: Formula) -> Formula:
        match f:
            case Just():
                return truth if model.holds(f) else FALSUM
            case Atom() | Falsum():
                return f
            case Not(b):
                return Not(walk(b))
            case And(a, b) | Or(a, b) | Implies(a, b):
                return type(f)(walk(a), walk(b))
        raise TypeError(f)

    return Not(walk(goal))
