"""Gödel numbering of formulas by rank in a canonical enumeration.

Formulas are listed by size (``formula_size``: one per node plus one per
identifier character or constant digit), and within a size by constructor
in the order ``_|_, atom, ~, /\\, \\/, ->, :``, then by the sizes of the
children, then recursively by the children's ranks. Identifiers of equal
length are ordered by ASCII. Numbers start at 1, so 0 names no formula, and
a proper subformula is always strictly smaller, so it gets a smaller number.

Both directions are computed by counting, never by listing, so numbers of
realistic axioms (which are astronomically large) cost microseconds.
"""
from __future__ import annotations

from functools import lru_cache

from .syntax import (
    FALSUM,
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
    formula_size,
    term_size,
)

FIRST_CHARS = sorted("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz")
REST_CHARS = sorted(FIRST_CHARS + list("0123456789_"))
DIGITS = "0123456789"

_BINARY = (And, Or, Implies)


# -- identifiers of a fixed length -------------------------------------------

@lru_cache(maxsize=None)
def count_identifiers(length: int) -> int:
    """Identifiers of ``length`` characters that do not spell a constant."""
    if length < 1:
        return 0
    total = len(FIRST_CHARS) * len(REST_CHARS) ** (length - 1)
    return total - (10 ** (length - 1) if length >= 2 else 0)


def _constant_like_completions(prefix: str, remaining: int) -> int:
    """How many strings ``prefix + s`` (len(s) == remaining) spell ``c[0-9]+``."""
    if not prefix.startswith("c"):
        return 0
    if not all(ch in DIGITS for ch in prefix[1:]):
        return 0
    if len(prefix) + remaining < 2:
        return 0
    return 10 ** remaining


def identifier_rank(name: str) -> int:
    rank = 0
    for i, ch in enumerate(name):
        alphabet = FIRST_CHARS if i == 0 else REST_CHARS
        remaining = len(name) - i - 1
        for smaller in alphabet:
            if smaller >= ch:
                break
            prefix = name[:i] + smaller
            rank += len(REST_CHARS) ** remaining - _constant_like_completions(prefix, remaining)
    return rank


def identifier_unrank(length: int, rank: int) -> str:
    if not 0 <= rank < count_identifiers(length):
        raise IndexError(rank)
    name = ""
    for i in range(length):
        alphabet = FIRST_CHARS if i == 0 else REST_CHARS
        remaining = length - i - 1
        for ch in alphabet:
            block = len(REST_CHARS) ** remaining - _constant_like_completions(name + ch, remaining)
            if rank < block:
                name += ch
                break
            rank -= block
    return name


def count_constants(digits: int) -> int:
    if digits < 1:
        return 0
    return 10 if digits == 1 else 9 * 10 ** (digits - 1)


def _constant_base(digits: int) -> int:
    return 0 if digits == 1 else 10 ** (digits - 1)


# -- counts by size ----------------------------------------------------------

@lru_cache(maxsize=None)
def count_terms(size: int) -> int:
    if size < 2:
        return 0
    total = count_constants(size - 1) + count_identifiers(size - 1)
    total += sum(count_terms(a) * count_terms(size - 1 - a) for a in range(2, size - 2))
    return total


@lru_cache(maxsize=None)
def count_formulas(size: int) -> int:
    if size < 1:
        return 0
    total = 1 if size == 1 else 0
    total += count_identifiers(size - 1)
    total += count_formulas(size - 1)
    total += 3 * _binary_block(size)
    total += _just_block(size)
    return total


@lru_cache(maxsize=None)
def _binary_block(size: int) -> int:
    return sum(count_formulas(a) * count_formulas(size - 1 - a) for a in range(1, size - 1))


@lru_cache(maxsize=None)
def _just_block(size: int) -> int:
    return sum(count_terms(a) * count_formulas(size - 1 - a) for a in range(2, size - 1))


@lru_cache(maxsize=None)
def count_formulas_below(size: int) -> int:
    """Number of formulas of size strictly less than ``size``."""
    if size <= 1:
        return 0
    return count_formulas_below(size - 1) + count_formulas(size - 1)


# -- ranking -----------------------------------------------------------------

def _term_rank(t: Term) -> int:
    """Rank of ``t`` among terms of the same size."""
    size = term_size(t)
    match t:
        case Const(n):
            return n - _constant_base(size - 1)
        case Var(name):
            return count_constants(size - 1) + identifier_rank(name)
        case App(a, b):
            rank = count_constants(size - 1) + count_identifiers(size - 1)
            sa = term_size(a)
            for x in range(2, sa):
                rank += count_terms(x) * count_terms(size - 1 - x)
            return rank + _term_rank(a) * count_terms(size - 1 - sa) + _term_rank(b)
    raise TypeError(t)


def _term_unrank(size: int, rank: int) -> Term:
    n = count_constants(size - 1)
    if rank < n:
        return Const(_constant_base(size - 1) + rank)
    rank -= n
    n = count_identifiers(size - 1)
    if rank < n:
        return Var(identifier_unrank(size - 1, rank))
    rank -= n
    for sa in range(2, size - 2):
        sb = size - 1 - sa
        block = count_terms(sa) * count_terms(sb)
        if rank < block:
            return App(_term_unrank(sa, rank // count_terms(sb)), _term_unrank(sb, rank % count_terms(sb)))
        rank -= block
    raise IndexError(rank)


def _formula_rank(f: Formula) -> int:
    """Rank of ``f`` among formulas of the same size."""
    size = formula_size(f)
    if isinstance(f, Falsum):
        return 0
    rank = 1 if size == 1 else 0
    if isinstance(f, Atom):
        return rank + identifier_rank(f.name)
    rank += count_identifiers(size - 1)
    if isinstance(f, Not):
        return rank + _formula_rank(f.body)
    rank += count_formulas(size - 1)
    for kind in _BINARY:
        if isinstance(f, kind):
            sa = formula_size(f.left)
            for x in range(1, sa):
                rank += count_formulas(x) * count_formulas(size - 1 - x)
            return rank + _formula_rank(f.left) * count_formulas(size - 1 - sa) + _formula_rank(f.right)
        rank += _binary_block(size)
    assert isinstance(f, Just)
    st = term_size(f.term)
    for x in range(2, st):
        rank += count_terms(x) * count_formulas(size - 1 - x)
    return rank + _term_rank(f.term) * count_formulas(size - 1 - st) + _formula_rank(f.body)


def _formula_unrank(size: int, rank: int) -> Formula:
    if size == 1:
        if rank == 0:
            return FALSUM
        rank -= 1
    n = count_identifiers(size - 1)
    if rank < n:
        return Atom(identifier_unrank(size - 1, rank))
    rank -= n
    n = count_formulas(size - 1)
    if rank < n:
        return Not(_formula_unrank(size - 1, rank))
    rank -= n
    for kind in _BINARY:
        block = _binary_block(size)
        if rank < block:
            for sa in range(1, size - 1):
                sb = size - 1 - sa
                sub = count_formulas(sa) * count_formulas(sb)
                if rank < sub:
                    q, r = divmod(rank, count_formulas(sb))
                    return kind(_formula_unrank(sa, q), _formula_unrank(sb, r))
                rank -= sub
        rank -= block
    for st in range(2, size - 1):
        sb = size - 1 - st
        sub = count_terms(st) * count_formulas(sb)
        if rank < sub:
            q, r = divmod(rank, count_formulas(sb))
            return Just(_term_unrank(st, q), _formula_unrank(sb, r))
        rank -= sub
    raise IndexError(rank)


def godel_number(f: Formula) -> int:
    return 1 + count_formulas_below(formula_size(f)) + _formula_rank(f)


def godel_formula(n: int) -> Formula | None:
    """Inverse of ``godel_number``; ``None`` for 0 (and negative input)."""
    if n < 1:
        return None
    index = n - 1
    size = 1
    while index >= count_formulas(size):
        index -= count_formulas(size)
        size += 1
    return _formula_unrank(size, index)
