"""Justification epistemic models: accepted and knowledge-producing terms."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .axioms import CSKind, sample_axioms
from .errors import PreconditionError
from .formulaset import FormulaSet, mp_apply
from .godel import godel_number
from .models import BasicModel
from .syntax import (
    FALSUM,
    App,
    Const,
    Formula,
    Term,
    Var,
    atoms,
    is_identifier,
    subformulas,
    term_depth,
    term_size,
    term_variables,
)


@dataclass(frozen=True)
class TermSet:
    """All terms whose variables are among ``generators``.

    Such a set contains every constant and is closed under application, and
    it is the least such set containing the generators.
    """

    generators: frozenset[str]

    def __contains__(self, t: Term) -> bool:
        return term_variables(t) <= self.generators

    def intersect(self, other: TermSet) -> TermSet:
        return TermSet(self.generators & other.generators)

    def leaves(self) -> list[Term]:
        return [Var(g) for g in sorted(self.generators)]

    def __str__(self) -> str:
        return f"closure({', '.join(sorted(self.generators))})"


def proper_closure(generators: Iterable[str | Var]) -> TermSet:
    names = frozenset(g.name if isinstance(g, Var) else g for g in generators)
    bad = sorted(n for n in names if not is_identifier(n))
    if bad:
        raise ValueError(f"not a variable name: {bad[0]!r}")
    return TermSet(names)


def intersect(a: TermSet, b: TermSet) -> TermSet:
    return a.intersect(b)


@dataclass(frozen=True)
class JEM:
    model: BasicModel
    accepted: TermSet
    evidence: TermSet
    require_consistency: bool = False


# -- answers -----------------------------------------------------------------

@dataclass(frozen=True)
class Holds:
    witness: Term

    def __str__(self):
        return f"holds (witness {self.witness})"


@dataclass(frozen=True)
class NotFoundWithinBound:
    depth: int

    def __str__(self):
        return f"no witness up to depth {self.depth}"


@dataclass(frozen=True)
class RefutedExact:
    certificate: object

    def __str__(self):
        return f"refuted ({self.certificate})"


EpistemicAnswer = Holds | NotFoundWithinBound | RefutedExact


# -- enumeration -------------------------------------------------------------

def iter_terms(leaves: list[Term], depth: int) -> Iterator[Term]:
    """Every term over ``leaves`` of depth at most ``depth``, by depth then leaf order."""
    by_depth: list[list[Term]] = [list(leaves)]
    yield from leaves
    for d in range(1, depth + 1):
        below = [t for level in by_depth for t in level]
        level = []
        for s, t in itertools.product(below, repeat=2):
            if max(term_depth(s), term_depth(t)) == d - 1:
                level.append(App(s, t))
        by_depth.append(level)
        yield from level


def constant_pool(model: BasicModel, formulas: Iterable[Formula] = ()) -> list[Const]:
    """The constants a bounded search should look at.

    ``c0``, every constant the model assigns explicitly, and, under canonical
    constants, the constant certifying each relevant formula that the
    specification justifies.
    """
    pool = {0} | {t.index for t in model.term_values if isinstance(t, Const)}
    cs = model.constant_spec
    if model.canonical_constants and cs is not None:
        relevant: set[Formula] = set()
        for f in formulas:
            relevant |= subformulas(f)
        for t, v in model.term_values.items():
            if not v.is_all:
                for g in v:
                    relevant |= subformulas(g)
        if cs.kind is CSKind.GODEL_INJECTIVE:
            for g in relevant:
                n = godel_number(g)
                if g in cs.canonical_value(n):
                    pool.add(n)
        elif cs.kind is CSKind.CUSTOM:
            pool |= {f.term.index for f in cs.formulas}
    return [Const(n) for n in sorted(pool)]


def value_classes(model: BasicModel, leaves: list[Term], depth: int) -> list[tuple[Term, FormulaSet]]:
    """One witness term per distinct value reachable within ``depth``.

    Witnesses come in order of first discovery, which is by depth. Sharp
    values are computed from child values alone, so the search runs over
    values rather than terms and stops at a fixpoint.
    """
    seen: dict[FormulaSet, Term] = {}
    for t in leaves:
        seen.setdefault(model.value(t), t)
    if not model.sharp:
        return _explicit_classes(model, leaves, depth, seen)
    frontier = dict(seen)
    for _ in range(depth):
        items = list(seen.items())
        new: dict[FormulaSet, Term] = {}
        for (va, ta), (vb, tb) in itertools.product(items, repeat=2):
            if va not in frontier and vb not in frontier:
                continue
            v = mp_apply(va, vb)
            if v not in seen and v not in new:
                new[v] = App(ta, tb)
        if not new:
            break
        seen.update(new)
        frontier = new
    return [(t, v) for v, t in seen.items()]


def _explicit_classes(model, leaves, depth, seen):
    out = [(t, v) for v, t in seen.items()]
    listed = {t for t, _ in out}
    leaf_set = set(leaves)
    keys = sorted(
        (t for t in model.term_values if term_depth(t) <= depth),
        key=lambda t: (term_depth(t), term_size(t), str(t)),
    )
    for t in keys:
        if t not in listed and all(isinstance(x, Const) or x in leaf_set for x in _leaves(t)):
            out.append((t, model.value(t)))
            listed.add(t)
    # any application outside the table carries the default value
    if depth >= 1:
        for t in itertools.islice(iter_terms(leaves, depth), 10_000):
            if isinstance(t, App) and t not in model.term_values:
                out.append((t, model.term_default))
                break
    return sorted(out, key=lambda tv: term_depth(tv[0]))


def _leaves(t: Term) -> Iterator[Term]:
    if isinstance(t, App):
        yield from _leaves(t.left)
        yield from _leaves(t.right)
    else:
        yield t


def _search(model: BasicModel, terms: TermSet, f: Formula, depth: int) -> EpistemicAnswer:
    leaves = terms.leaves() + constant_pool(model, [f])
    for t, v in value_classes(model, leaves, depth):
        if f in v:
            return Holds(t)
    return NotFoundWithinBound(depth)


def believed(j: JEM, f: Formula, depth: int = 2) -> EpistemicAnswer:
    """Some accepted term justifies ``f``."""
    return _search(j.model, j.accepted, f, depth)


def evidenced(j: JEM, f: Formula, depth: int = 2) -> EpistemicAnswer:
    """Some knowledge-producing term justifies ``f``."""
    return _search(j.model, j.evidence, f, depth)


def known(j: JEM, f: Formula, depth: int = 2) -> EpistemicAnswer:
    """A single term that is both accepted and knowledge-producing justifies ``f``.

    When the bounded search fails on a sharp model, the flip argument is
    tried on the atoms of ``f``; success proves that no such term exists.
    """
    answer = _search(j.model, j.accepted.intersect(j.evidence), f, depth)
    if isinstance(answer, Holds) or not j.model.sharp:
        return answer
    from .russell import refute_known_by_flip

    names = sorted(atoms(f))
    for k in range(1, min(len(names), 3) + 1):
        for flipped in itertools.combinations(names, k):
            try:
                cert = refute_known_by_flip(j, f, flipped)
            except PreconditionError:
                continue
            if cert is not None:
                return RefutedExact(cert)
    return answer


@dataclass(frozen=True)
class ModalProjection:
    justified: EpistemicAnswer
    evidenced: EpistemicAnswer
    known: EpistemicAnswer

    @property
    def mismatch(self) -> bool:
        """J and E hold while K does not: K is not J ∧ E."""
        return (
            isinstance(self.justified, Holds)
            and isinstance(self.evidenced, Holds)
            and not isinstance(self.known, Holds)
        )


def modal_projection(j: JEM, f: Formula, depth: int = 2) -> ModalProjection:
    return ModalProjection(believed(j, f, depth), evidenced(j, f, depth), known(j, f, depth))


# -- validation --------------------------------------------------------------

@dataclass
class JEMReport:
    passed: bool
    failures: list[str] = field(default_factory=list)
    checked: int = 0


def validate_jem(j: JEM, depth: int = 2) -> JEMReport:
    """Knowledge-producing terms are factive; accepted ones consistent if required.

    Checked for every value reachable within ``depth`` over the generators
    and the model's constant pool.
    """
    failures = []
    m = j.model
    for name in sorted(j.accepted.generators | j.evidence.generators):
        if not is_identifier(name):
            failures.append(f"bad generator {name!r}")
    pool = constant_pool(m, sample_axioms(m.atom_values))
    classes = value_classes(m, j.evidence.leaves() + pool, depth)
    for t, v in classes:
        if v.is_all:
            failures.append(f"not factive: {t} justifies every formula, including _|_")
            continue
        for g in v:
            if not m.holds(g):
                failures.append(f"not factive: {t} justifies {g}, which is false")
    checked = len(classes)
    if j.require_consistency:
        classes = value_classes(m, j.accepted.leaves() + pool, depth)
        checked += len(classes)
        for t, v in classes:
            if FALSUM in v:
                failures.append(f"inconsistent: {t} justifies _|_")
    return JEMReport(not failures, failures, checked)
