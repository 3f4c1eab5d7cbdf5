"""Multi-world JEMs and their collapse into Kripke models.

Accessibility is derived from justifications: ``u R v`` when everything
justified at ``u`` is true at ``v``. Quantifiers over all terms and all
formulas are restricted to the model's declared ``term_signature`` and
``formula_universe``; every report says so.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .jem import JEM
from .models import subterm_closure
from .syntax import And, Atom, Falsum, Formula, Implies, Just, Not, Or, Term, _print

RESTRICTION = "quantifiers restricted to the declared term signature and formula universe"


@dataclass(frozen=True, eq=False, repr=False)
class Box(Formula):
    body: Formula

    def _render(self, ctx: int) -> str:
        return "[]" + _print(self.body, 4)


@dataclass(frozen=True)
class MultiJEM:
    worlds: Mapping[str, JEM]
    term_signature: frozenset[Term]
    formula_universe: frozenset[Formula]

    def __post_init__(self):
        if not self.worlds:
            raise ValueError("a multi-world JEM needs at least one world")
        if not self.term_signature or not self.formula_universe:
            raise ValueError("signature and universe must be nonempty")
        if subterm_closure(self.term_signature) != set(self.term_signature):
            raise ValueError("term signature is not closed under subterms")

    @property
    def world_ids(self) -> list[str]:
        return list(self.worlds)

    def terms(self) -> list[Term]:
        return sorted(self.term_signature, key=str)

    def universe(self) -> list[Formula]:
        return sorted(self.formula_universe, key=str)

    def justified(self, u: str, t: Term, f: Formula) -> bool:
        return self.worlds[u].model.holds(Just(t, f))

    def true_at(self, u: str, f: Formula) -> bool:
        return self.worlds[u].model.holds(f)


Relation = frozenset[tuple[str, str]]


def successors(r: Relation, u: str) -> list[str]:
    return sorted(v for (x, v) in r if x == u)


def derive_accessibility(m: MultiJEM) -> Relation:
    """``u R v`` iff every ``F`` justified at ``u`` by a signature term holds at ``v``."""
    pairs = set()
    for u in m.world_ids:
        justified = [f for f in m.universe() if any(m.justified(u, t, f) for t in m.terms())]
        for v in m.world_ids:
            if all(m.true_at(v, f) for f in justified):
                pairs.add((u, v))
    return frozenset(pairs)


@dataclass
class IndifferenceReport:
    passed: bool
    failures: list[tuple[str, Term, Term, Formula]] = field(default_factory=list)
    restriction: str = RESTRICTION


def check_justification_indifference(m: MultiJEM) -> IndifferenceReport:
    """At each world all signature terms justify the same universe formulas.

    A failure ``(u, s, t, F)`` means ``s:F`` holds at ``u`` and ``t:F`` does not.
    """
    failures = []
    terms = m.terms()
    for u in m.world_ids:
        for f in m.universe():
            yes = [t for t in terms if m.justified(u, t, f)]
            no = [t for t in terms if not m.justified(u, t, f)]
            failures += [(u, s, t, f) for s in yes for t in no]
    return IndifferenceReport(not failures, failures)


@dataclass
class ExplanatoryReport:
    passed: bool
    failures: list[tuple[str, Formula]] = field(default_factory=list)
    restriction: str = RESTRICTION


def check_fully_explanatory(m: MultiJEM, r: Relation) -> ExplanatoryReport:
    """Whatever holds at every successor of ``u`` is justified at ``u``."""
    failures = []
    for u in m.world_ids:
        succ = successors(r, u)
        for f in m.universe():
            if all(m.true_at(v, f) for v in succ):
                if not any(m.justified(u, t, f) for t in m.terms()):
                    failures.append((u, f))
    return ExplanatoryReport(not failures, failures)


# -- Kripke models -----------------------------------------------------------

@dataclass(frozen=True)
class KripkeModel:
    worlds: tuple[str, ...]
    relation: Relation
    atom_values: Mapping[str, Mapping[str, bool]]
    atom_defaults: Mapping[str, bool]

    def atom(self, u: str, name: str) -> bool:
        return self.atom_values[u].get(name, self.atom_defaults[u])

    def is_reflexive(self) -> bool:
        return all((u, u) in self.relation for u in self.worlds)


class KripkeRefusal(ValueError):
    def __init__(self, report: IndifferenceReport):
        first = report.failures[0]
        super().__init__(
            f"not justification-indifferent: at {first[0]}, {first[1]}:{first[3]} holds "
            f"but {first[2]}:{first[3]} does not"
        )
        self.report = report


def extract_kripke(m: MultiJEM) -> KripkeModel:
    report = check_justification_indifference(m)
    if not report.passed:
        raise KripkeRefusal(report)
    return KripkeModel(
        worlds=tuple(m.world_ids),
        relation=derive_accessibility(m),
        atom_values={u: dict(j.model.atom_values) for u, j in m.worlds.items()},
        atom_defaults={u: j.model.atom_default for u, j in m.worlds.items()},
    )


def box_eval(k: KripkeModel, u: str, f: Formula) -> bool:
    """Kripke truth at ``u``; ``t:F`` is read as ``[]F``."""
    match f:
        case Atom(name):
            return k.atom(u, name)
        case Falsum():
            return False
        case Not(body):
            return not box_eval(k, u, body)
        case And(a, b):
            return box_eval(k, u, a) and box_eval(k, u, b)
        case Or(a, b):
            return box_eval(k, u, a) or box_eval(k, u, b)
        case Implies(a, b):
            return not box_eval(k, u, a) or box_eval(k, u, b)
        case Box(body) | Just(_, body):
            return all(box_eval(k, v, body) for v in successors(k.relation, u))
    raise TypeError(f"not a modal formula: {f!r}")
