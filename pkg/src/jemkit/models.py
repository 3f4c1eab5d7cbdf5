"""Basic justification models, their evaluation, and structural checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

from .axioms import (
    ConstantSpecification,
    CSKind,
    application_instance,
    sample_axioms,
)
from .errors import SymbolicError
from .formulaset import ALL, EMPTY, FormulaSet, mp_apply
from .syntax import (
    And,
    App,
    Atom,
    Const,
    Falsum,
    Formula,
    Implies,
    Just,
    Not,
    Or,
    Term,
    just_depth,
    term_subterms,
)


@dataclass(frozen=True, eq=False)
class BasicModel:
    """Truth values for atoms plus a set of formulas for every term.

    In explicit mode ``term_values`` is a lookup table over arbitrary terms
    and ``term_default`` covers the rest. In sharp mode only constants and
    variables are looked up; applications are computed with ``mp_apply``.
    With ``canonical_constants`` a constant missing from the table takes the
    least value its constant specification allows.
    """

    atom_values: Mapping[str, bool] = field(default_factory=dict)
    atom_default: bool = False
    term_values: Mapping[Term, FormulaSet] = field(default_factory=dict)
    term_default: FormulaSet = EMPTY
    sharp: bool = False
    constant_spec: ConstantSpecification | None = None
    canonical_constants: bool = False
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "atom_values", MappingProxyType(dict(self.atom_values)))
        object.__setattr__(self, "term_values", MappingProxyType(dict(self.term_values)))
        if self.sharp:
            bad = [t for t in self.term_values if isinstance(t, App)]
            if bad:
                raise ValueError(f"sharp model assigns an application term: {bad[0]}")
        if self.canonical_constants and self.constant_spec is None:
            raise ValueError("canonical constants need a constant specification")

    def _key(self):
        return (
            frozenset(self.atom_values.items()),
            self.atom_default,
            frozenset(self.term_values.items()),
            self.term_default,
            self.sharp,
            self.constant_spec,
            self.canonical_constants,
        )

    def __eq__(self, other):
        if not isinstance(other, BasicModel):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def mode(self) -> str:
        return "sharp" if self.sharp else "explicit"

    def replace(self, **changes) -> BasicModel:
        kwargs = dict(
            atom_values=self.atom_values,
            atom_default=self.atom_default,
            term_values=self.term_values,
            term_default=self.term_default,
            sharp=self.sharp,
            constant_spec=self.constant_spec,
            canonical_constants=self.canonical_constants,
        )
        kwargs.update(changes)
        return BasicModel(**kwargs)

    def atom(self, name: str) -> bool:
        return self.atom_values.get(name, self.atom_default)

    def _leaf_value(self, t: Term) -> FormulaSet:
        if t in self.term_values:
            return self.term_values[t]
        if isinstance(t, Const) and self.canonical_constants:
            return self.constant_spec.canonical_value(t.index)
        return self.term_default

    def value(self, t: Term) -> FormulaSet:
        if not self.sharp or not isinstance(t, App):
            return self._leaf_value(t)
        memo = self._memo
        v = memo.get(t)
        if v is None:
            v = mp_apply(self.value(t.left), self.value(t.right))
            memo[t] = v
        return v

    def holds(self, f: Formula) -> bool:
        match f:
            case Atom(name):
                return self.atom(name)
            case Falsum():
                return False
            case Not(body):
                return not self.holds(body)
            case And(a, b):
                return self.holds(a) and self.holds(b)
            case Or(a, b):
                return self.holds(a) or self.holds(b)
            case Implies(a, b):
                return not self.holds(a) or self.holds(b)
            case Just(t, body):
                return body in self.value(t)
        raise TypeError(f"not a formula: {f!r}")


def eval_term(m: BasicModel, t: Term) -> FormulaSet:
    return m.value(t)


def eval_formula(m: BasicModel, f: Formula) -> bool:
    return m.holds(f)


# -- closure under application -----------------------------------------------

@dataclass
class ClosureReport:
    passed: bool
    violations: list[tuple[Term, Term, Formula]]
    structural: bool = False
    checked: int = 0


def subterm_closure(terms: Iterable[Term]) -> set[Term]:
    out: set[Term] = set()
    for t in terms:
        out |= term_subterms(t)
    return out


def check_closure(m: BasicModel, signature: Iterable[Term]) -> ClosureReport:
    """Check ``s* ▷ t* ⊆ (s·t)*`` for every application in the signature."""
    signature = set(signature)
    if subterm_closure(signature) != signature:
        raise ValueError("signature is not closed under subterms")
    violations = []
    apps = sorted((t for t in signature if isinstance(t, App)), key=str)
    for u in apps:
        witness = mp_apply(m.value(u.left), m.value(u.right)).missing_from(m.value(u))
        if witness is not None:
            violations.append((u.left, u.right, witness))
    return ClosureReport(not violations, violations, structural=m.sharp, checked=len(apps))


def application_axiom_valid(
    m: BasicModel,
    s: Term,
    t: Term,
    universe: Iterable[tuple[Formula, Formula]] | None = None,
) -> bool:
    """Evaluate ``s:(F -> G) -> (t:F -> [s.t]:G)`` for each pair in ``universe``.

    Without a universe the pairs making the antecedent true are taken from
    the finite values of ``s`` and ``t``; the remaining pairs hold vacuously.
    """
    if universe is None:
        sv, tv = m.value(s), m.value(t)
        if sv.is_all or tv.is_all:
            raise SymbolicError(f"{s} or {t} is ALL-valued; pass an explicit universe")
        universe = [(f.left, f.right) for f in sv if isinstance(f, Implies) and f.left in tv]
    return all(m.holds(application_instance(s, t, f, g)) for f, g in universe)


# -- term properties ---------------------------------------------------------

def is_injective(m: BasicModel, terms: Iterable[Term]) -> bool:
    for t in terms:
        v = m.value(t)
        if v.is_all or len(v) > 1:
            return False
    return True


def is_factive(m: BasicModel, t: Term, universe: Iterable[Formula] | None = None) -> bool:
    """Every formula ``t`` justifies is true (``universe`` bounds an ALL value)."""
    v = m.value(t)
    if v.is_all:
        if universe is None:
            raise SymbolicError(f"{t} justifies every formula; pass a universe")
        return all(m.holds(f) for f in universe)
    return all(m.holds(f) for f in v)


def satisfies_cs(
    m: BasicModel,
    cs: ConstantSpecification,
    depth: int = 2,
    axioms: Iterable[Formula] | None = None,
    constants: Iterable[int] | None = None,
) -> bool:
    """All specification formulas with at most ``depth`` constant prefixes hold.

    Infinite specifications are checked over ``axioms`` (default: schema
    instances over the model's atoms) and, for the total one, over
    ``constants`` (default: c0 plus every constant the model assigns).
    """
    return not cs_failures(m, cs, depth, axioms, constants)


def cs_failures(m, cs, depth=2, axioms=None, constants=None) -> list[Formula]:
    if cs.kind is CSKind.EMPTY:
        return []
    if cs.kind is CSKind.CUSTOM:
        return [f for f in sorted(cs.formulas, key=str) if just_depth(f) <= depth and not m.holds(f)]
    if axioms is None:
        axioms = sample_axioms(m.atom_values)
    axioms = list(axioms)
    if cs.kind is CSKind.GODEL_INJECTIVE:
        return [f for a in axioms for f in cs.chain(a, depth) if not m.holds(f)]
    if constants is None:
        constants = {0} | {t.index for t in m.term_values if isinstance(t, Const)}
    consts = [Const(n) for n in sorted(constants)]
    failures = []
    layer = list(axioms)
    for _ in range(depth):
        layer = [Just(c, f) for f in layer for c in consts]
        failures += [f for f in layer if not m.holds(f)]
    return failures


def all_terms_model(value: FormulaSet, **kwargs) -> BasicModel:
    """Explicit model in which every term gets ``value``."""
    return BasicModel(term_default=value, **kwargs)


__all__ = [
    "ALL",
    "EMPTY",
    "BasicModel",
    "ClosureReport",
    "FormulaSet",
    "all_terms_model",
    "application_axiom_valid",
    "check_closure",
    "cs_failures",
    "eval_formula",
    "eval_term",
    "is_factive",
    "is_injective",
    "mp_apply",
    "satisfies_cs",
    "subterm_closure",
]
