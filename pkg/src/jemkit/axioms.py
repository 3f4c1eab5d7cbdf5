"""Axioms of J⁻ and constant specifications."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .errors import SymbolicError
from .formulaset import EMPTY, FormulaSet
from .godel import godel_formula, godel_number
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
    Var,
    parse_formula,
)

# Atoms in a schema are formula letters, variables are term letters.
PROPOSITIONAL_SCHEMAS = tuple(
    parse_formula(text)
    for text in (
        "F -> (G -> F)",
        "(F -> (G -> H)) -> ((F -> G) -> (F -> H))",
        "F /\\ G -> F",
        "F /\\ G -> G",
        "F -> (G -> F /\\ G)",
        "F -> F \\/ G",
        "G -> F \\/ G",
        "(F -> H) -> ((G -> H) -> (F \\/ G -> H))",
        "(F -> G) -> ((F -> ~G) -> ~F)",
        "~~F -> F",
        "_|_ -> F",
    )
)
APPLICATION_SCHEMA = parse_formula("s:(F -> G) -> (t:F -> [s.t]:G)")
SCHEMAS = PROPOSITIONAL_SCHEMAS + (APPLICATION_SCHEMA,)


def match_schema(pattern: Formula, f: Formula, binding: dict | None = None) -> dict | None:
    """Bind schema letters so that ``pattern`` becomes ``f``; ``None`` if impossible."""
    binding = {} if binding is None else binding
    match pattern:
        case Atom(name):
            key = ("F", name)
            if key in binding:
                return binding if binding[key] == f else None
            binding[key] = f
            return binding
        case Falsum():
            return binding if isinstance(f, Falsum) else None
        case Not(body):
            return match_schema(body, f.body, binding) if isinstance(f, Not) else None
        case And(a, b) | Or(a, b) | Implies(a, b):
            if type(f) is not type(pattern):
                return None
            if match_schema(a, f.left, binding) is None:
                return None
            return match_schema(b, f.right, binding)
        case Just(t, body):
            if not isinstance(f, Just) or _match_term(t, f.term, binding) is None:
                return None
            return match_schema(body, f.body, binding)
    raise TypeError(pattern)


def _match_term(pattern: Term, t: Term, binding: dict) -> dict | None:
    match pattern:
        case Var(name):
            key = ("t", name)
            if key in binding:
                return binding if binding[key] == t else None
            binding[key] = t
            return binding
        case App(a, b):
            if not isinstance(t, App) or _match_term(a, t.left, binding) is None:
                return None
            return _match_term(b, t.right, binding)
        case Const():
            return binding if pattern == t else None
    raise TypeError(pattern)


def is_propositional_axiom(f: Formula) -> bool:
    return any(match_schema(s, f) is not None for s in PROPOSITIONAL_SCHEMAS)


def is_application_axiom(f: Formula) -> bool:
    return match_schema(APPLICATION_SCHEMA, f) is not None


def is_axiom(f: Formula) -> bool:
    """Instance of one of the eleven propositional schemas or of Application."""
    return any(match_schema(s, f) is not None for s in SCHEMAS)


def instantiate(schema: Formula, letters: dict[str, Formula], terms: dict[str, Term] | None = None) -> Formula:
    terms = terms or {}
    match schema:
        case Atom(name):
            return letters[name]
        case Falsum():
            return schema
        case Not(body):
            return Not(instantiate(body, letters, terms))
        case And(a, b) | Or(a, b) | Implies(a, b):
            return type(schema)(instantiate(a, letters, terms), instantiate(b, letters, terms))
        case Just(t, body):
            return Just(_instantiate_term(t, terms), instantiate(body, letters, terms))
    raise TypeError(schema)


def _instantiate_term(t: Term, terms: dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return terms[t.name]
    if isinstance(t, App):
        return App(_instantiate_term(t.left, terms), _instantiate_term(t.right, terms))
    return t


def application_instance(s: Term, t: Term, f: Formula, g: Formula) -> Formula:
    return Implies(Just(s, Implies(f, g)), Implies(Just(t, f), Just(App(s, t), g)))


def sample_axioms(atom_names: Iterable[str]) -> list[Formula]:
    """A few instances of every schema over the given atoms, for bounded checks."""
    names = sorted(set(atom_names)) or ["P"]
    pool = [Atom(n) for n in names]
    out = []
    for schema in PROPOSITIONAL_SCHEMAS:
        out.append(instantiate(schema, {k: pool[0] for k in "FGH"}))
        if len(pool) > 1:
            out.append(instantiate(schema, {k: pool[i % len(pool)] for i, k in enumerate("FGH")}))
    c0 = Const(0)
    out.append(application_instance(c0, c0, pool[0], pool[-1]))
    return list(dict.fromkeys(out))


# -- constant specifications -------------------------------------------------

@lru_cache(maxsize=None)
def godel_constant_value(n: int) -> FormulaSet:
    """Minimal valuation of ``c_n`` under the Gödel-injective specification.

    ``c_n`` justifies exactly the formula numbered ``n`` when that formula is
    an axiom of J⁻ or itself a specification member ``c_k:G`` (``k < n`` by
    monotonicity of the numbering); otherwise nothing.
    """
    f = godel_formula(n)
    if f is None:
        return EMPTY
    if is_axiom(f):
        return FormulaSet.of(f)
    if isinstance(f, Just) and isinstance(f.term, Const):
        k = f.term.index
        if k < n and f.body in godel_constant_value(k):
            return FormulaSet.of(f)
    return EMPTY


class CSKind(enum.Enum):
    EMPTY = "empty"
    TOTAL = "total"
    GODEL_INJECTIVE = "godel-injective"
    CUSTOM = "custom"


def _cs_body(f: Formula) -> Formula | None:
    """Strip a prefix ``c:c:...:`` of constants; ``None`` if there is none."""
    if not (isinstance(f, Just) and isinstance(f.term, Const)):
        return None
    while isinstance(f, Just) and isinstance(f.term, Const):
        f = f.body
    return f


@dataclass(frozen=True)
class ConstantSpecification:
    kind: CSKind
    formulas: frozenset[Formula] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind is not CSKind.CUSTOM:
            if self.formulas:
                raise ValueError(f"{self.kind.value} specification takes no formula list")
            return
        for f in self.formulas:
            body = _cs_body(f)
            if body is None or not is_axiom(body):
                raise ValueError(f"not of the form c:...:A with A an axiom: {f}")
            if isinstance(f.body, Just) and f.body not in self.formulas:
                raise ValueError(f"specification is not reflexive: {f} present, {f.body} missing")

    @classmethod
    def empty(cls):
        return cls(CSKind.EMPTY)

    @classmethod
    def total(cls):
        return cls(CSKind.TOTAL)

    @classmethod
    def godel_injective(cls):
        return cls(CSKind.GODEL_INJECTIVE)

    @classmethod
    def custom(cls, formulas: Iterable[Formula]):
        return cls(CSKind.CUSTOM, frozenset(formulas))

    def __contains__(self, f: Formula) -> bool:
        match self.kind:
            case CSKind.EMPTY:
                return False
            case CSKind.TOTAL:
                body = _cs_body(f)
                return body is not None and is_axiom(body)
            case CSKind.GODEL_INJECTIVE:
                return (
                    isinstance(f, Just)
                    and isinstance(f.term, Const)
                    and f.body in godel_constant_value(f.term.index)
                )
            case CSKind.CUSTOM:
                return f in self.formulas

    def justifies(self, n: int, f: Formula) -> bool:
        return Just(Const(n), f) in self

    def canonical_value(self, n: int) -> FormulaSet:
        """Least value of ``c_n`` in a model of this specification."""
        match self.kind:
            case CSKind.EMPTY:
                return EMPTY
            case CSKind.GODEL_INJECTIVE:
                return godel_constant_value(n)
            case CSKind.CUSTOM:
                return FormulaSet.of(
                    *(f.body for f in self.formulas if f.term == Const(n))
                )
        raise SymbolicError("the total specification gives every constant infinitely many axioms")

    def is_jcs_axiom(self, f: Formula) -> bool:
        """Axiom of J⁻(CS): a J⁻ axiom or a member of this specification."""
        return is_axiom(f) or f in self

    def chain(self, axiom: Formula, depth: int) -> list[Formula]:
        """``c_{|A|}:A``, ``c_{|c:A|}:c:A``, ... up to ``depth`` (Gödel-injective only)."""
        out = []
        f = axiom
        for _ in range(depth):
            f = Just(Const(godel_number(f)), f)
            out.append(f)
        return out
