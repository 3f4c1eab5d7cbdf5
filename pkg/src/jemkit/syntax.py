"""Justification terms and formulas: node types, parsing and printing.

Concrete syntax (ASCII)::

    _|_            falsum
    ~F             negation
    F /\\ G         conjunction
    F \\/ G         disjunction
    F -> G         implication (right associative)
    t:F            justification assertion, F must be unary
    c0, c1, ...    justification constants
    x, w, foo      justification variables (any other identifier)
    [s.t]          application, [a.b.c] groups to the left

``:`` binds tightest, so ``t:P -> P`` reads as ``(t:P) -> P`` and the
conjunction in ``x:(F /\\ F)`` needs its parentheses.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, fields
from functools import cached_property
from typing import Iterator


class _Node:
    """Structural equality and a cached hash for immutable syntax trees."""

    __slots__ = ()

    def _key(self) -> tuple:
        return tuple(getattr(self, f.name) for f in fields(self))

    @cached_property
    def _hash(self) -> int:
        return hash((type(self).__name__,) + self._key())

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(self) is not type(other):
            return NotImplemented if not isinstance(other, _Node) else False
        return hash(self) == hash(other) and self._key() == other._key()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    def __str__(self) -> str:
        if isinstance(self, Term):
            return print_term(self)
        return print_formula(self)


# -- terms -------------------------------------------------------------------

class Term(_Node):
    __slots__ = ()


@dataclass(frozen=True, eq=False, repr=False)
class Const(Term):
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("constant index must be non-negative")


@dataclass(frozen=True, eq=False, repr=False)
class Var(Term):
    name: str


@dataclass(frozen=True, eq=False, repr=False)
class App(Term):
    left: Term
    right: Term


# -- formulas ----------------------------------------------------------------

class Formula(_Node):
    __slots__ = ()


@dataclass(frozen=True, eq=False, repr=False)
class Atom(Formula):
    name: str


@dataclass(frozen=True, eq=False, repr=False)
class Falsum(Formula):
    pass


@dataclass(frozen=True, eq=False, repr=False)
class Not(Formula):
    body: Formula


@dataclass(frozen=True, eq=False, repr=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False, repr=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, eq=False, repr=False)
class Just(Formula):
    term: Term
    body: Formula


FALSUM = Falsum()

BINARY = (And, Or, Implies)


# -- structural utilities ----------------------------------------------------

def term_leaves(t: Term) -> Iterator[Term]:
    if isinstance(t, App):
        yield from term_leaves(t.left)
        yield from term_leaves(t.right)
    else:
        yield t


def term_variables(t: Term) -> frozenset[str]:
    return frozenset(leaf.name for leaf in term_leaves(t) if isinstance(leaf, Var))


def is_ground(t: Term) -> bool:
    """True iff the term is built from constants only."""
    return all(isinstance(leaf, Const) for leaf in term_leaves(t))


def term_depth(t: Term) -> int:
    if isinstance(t, App):
        return 1 + max(term_depth(t.left), term_depth(t.right))
    return 0


def term_subterms(t: Term) -> set[Term]:
    out = {t}
    if isinstance(t, App):
        out |= term_subterms(t.left)
        out |= term_subterms(t.right)
    return out


def subformulas(f: Formula) -> set[Formula]:
    """All subformulas of ``f``, including ``f``; descends into t:X bodies."""
    out: set[Formula] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if g in out:
            continue
        out.add(g)
        match g:
            case Not(body):
                stack.append(body)
            case And(a, b) | Or(a, b) | Implies(a, b):
                stack.extend((a, b))
            case Just(_, body):
                stack.append(body)
    return out


def subterms(f: Formula) -> set[Term]:
    """Every term occurring in ``f`` together with all of its subterms."""
    out: set[Term] = set()
    for g in subformulas(f):
        if isinstance(g, Just):
            out |= term_subterms(g.term)
    return out


def atoms(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Atom)}


def formula_size(f: Formula) -> int:
    match f:
        case Falsum():
            return 1
        case Atom(name):
            return 1 + len(name)
        case Not(body):
            return 1 + formula_size(body)
        case And(a, b) | Or(a, b) | Implies(a, b):
            return 1 + formula_size(a) + formula_size(b)
        case Just(t, body):
            return 1 + term_size(t) + formula_size(body)
    raise TypeError(f"not a formula: {f!r}")


def term_size(t: Term) -> int:
    match t:
        case Const(n):
            return 1 + len(str(n))
        case Var(name):
            return 1 + len(name)
        case App(a, b):
            return 1 + term_size(a) + term_size(b)
    raise TypeError(f"not a term: {t!r}")


def just_depth(f: Formula) -> int:
    """Number of stacked ``t:`` prefixes at the top of ``f``."""
    n = 0
    while isinstance(f, Just):
        n += 1
        f = f.body
    return n


# -- identifiers -------------------------------------------------------------

IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
CONST_RE = re.compile(r"c[0-9]+\Z")


def is_identifier(name: str) -> bool:
    """Valid atom / variable name: an identifier that does not spell a constant."""
    return bool(IDENT_RE.match(name)) and not CONST_RE.match(name)


# -- printing ----------------------------------------------------------------

_PREC = {Implies: 1, Or: 2, And: 3}
_OPS = {Implies: "->", Or: "\\/", And: "/\\"}


def print_term(t: Term) -> str:
    match t:
        case Const(n):
            return f"c{n}"
        case Var(name):
            return name
        case App():
            return "[" + _print_app_chain(t) + "]"
    raise TypeError(f"not a term: {t!r}")


def _print_app_chain(t: Term) -> str:
    # left spine prints flat: [a.b.c] is [[a.b].c]
    if isinstance(t, App):
        return _print_app_chain(t.left) + "." + print_term(t.right)
    return print_term(t)


def print_formula(f: Formula) -> str:
    return _print(f, 0)


def _print(f: Formula, ctx: int) -> str:
    match f:
        case Falsum():
            return "_|_"
        case Atom(name):
            return name
        case Not(body):
            return "~" + _print(body, 4)
        case Just(t, body):
            return print_term(t) + ":" + _print(body, 4)
        case And(a, b) | Or(a, b) | Implies(a, b):
            prec = _PREC[type(f)]
            if isinstance(f, Implies):
                text = f"{_print(a, prec + 1)} -> {_print(b, prec)}"
            else:
                text = f"{_print(a, prec)} {_OPS[type(f)]} {_print(b, prec + 1)}"
            return f"({text})" if prec < ctx else text
    render = getattr(f, "_render", None)
    if render is not None:
        return render(ctx)
    raise TypeError(f"not a formula: {type(f).__name__}")


# -- parsing -----------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op>->|/\\|\\/|_\|_|[~:()\[\].])|(?P<ident>[A-Za-z][A-Za-z0-9_]*))"
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unknown token {text[pos]!r}", text, pos)
        kind = "op" if m.group("op") else "ident"
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def expect(self, value: str):
        tok = self.next()
        if tok[1] != value or tok[0] == "end":
            self.fail(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok)

    def at(self, value: str) -> bool:
        kind, text, _ = self.peek()
        return kind == "op" and text == value

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.at("->"):
            self.next()
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.at("\\/"):
            self.next()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.at("/\\"):
            self.next()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, text, _ = tok = self.peek()
        if kind == "op":
            if text == "~":
                self.next()
                return Not(self.unary())
            if text == "_|_":
                self.next()
                return FALSUM
            if text == "(":
                self.next()
                f = self.formula()
                self.expect(")")
                return f
            if text == "[":
                t = self.term()
                self.expect(":")
                return Just(t, self.unary())
        if kind == "ident":
            self.next()
            if self.at(":"):
                self.next()
                return Just(self._leaf(text, tok), self.unary())
            if CONST_RE.match(text):
                self.fail(f"constant {text!r} used as a formula", tok)
            return Atom(text)
        self.fail(f"unexpected {text or 'end of input'!r}")

    def _leaf(self, text: str, tok) -> Term:
        if CONST_RE.match(text):
            return Const(int(text[1:]))
        return Var(text)

    def term(self) -> Term:
        kind, text, _ = tok = self.next()
        if kind == "ident":
            return self._leaf(text, tok)
        if kind == "op" and text == "[":
            t = self.term()
            self.expect(".")
            t = App(t, self.term())
            while self.at("."):
                self.next()
                t = App(t, self.term())
            self.expect("]")
            return t
        self.fail(f"expected a term, found {text or 'end of input'!r}", tok)


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.peek()[0] != "end":
        p.fail(f"unexpected {p.peek()[1]!r}")
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.peek()[0] != "end":
        p.fail(f"unexpected {p.peek()[1]!r}")
    return t
