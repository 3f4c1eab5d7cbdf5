"""Independent reference implementations used to cross-check the library."""
from __future__ import annotations

import itertools

from jemkit.syntax import And, Atom, Falsum, Formula, Implies, Just, Not, Or


def letters(f: Formula, out: dict | None = None) -> dict:
    """Atoms and outermost ``t:X`` nodes, keyed by their printed form."""
    out = {} if out is None else out
    match f:
        case Atom() | Just():
            out.setdefault(str(f), f)
        case Not(b):
            letters(b, out)
        case And(a, b) | Or(a, b) | Implies(a, b):
            letters(a, out)
            letters(b, out)
    return out


def truth(f: Formula, row: dict[str, bool]) -> bool:
    match f:
        case Atom() | Just():
            return row[str(f)]
        case Falsum():
            return False
        case Not(b):
            return not truth(b, row)
        case And(a, b):
            return truth(a, row) and truth(b, row)
        case Or(a, b):
            return truth(a, row) or truth(b, row)
        case Implies(a, b):
            return (not truth(a, row)) or truth(b, row)
    raise TypeError(f)


def truth_table_entails(hyps: list[Formula], goal: Formula) -> bool:
    names: dict = {}
    for f in [*hyps, goal]:
        letters(f, names)
    keys = sorted(names)
    for bits in itertools.product([False, True], repeat=len(keys)):
        row = dict(zip(keys, bits))
        if all(truth(h, row) for h in hyps) and not truth(goal, row):
            return False
    return True
