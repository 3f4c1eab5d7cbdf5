"""Sets of formulas: finite sets or the whole of Fm, and the ▷ operation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import SymbolicError
from .syntax import Atom, Formula, Implies, formula_size, print_formula


@dataclass(frozen=True)
class FormulaSet:
    """``elements is None`` stands for the set of all formulas."""

    elements: frozenset[Formula] | None

    @classmethod
    def of(cls, *formulas: Formula) -> FormulaSet:
        return cls(frozenset(formulas))

    @property
    def is_all(self) -> bool:
        return self.elements is None

    def __contains__(self, f: Formula) -> bool:
        return self.elements is None or f in self.elements

    def __iter__(self) -> Iterator[Formula]:
        if self.elements is None:
            raise SymbolicError("cannot iterate over all formulas")
        return iter(sorted(self.elements, key=print_formula))

    def __len__(self) -> int:
        if self.elements is None:
            raise SymbolicError("the set of all formulas has no finite size")
        return len(self.elements)

    def __bool__(self) -> bool:
        return self.elements is None or bool(self.elements)

    def issubset(self, other: FormulaSet) -> bool:
        return self.missing_from(other) is None

    def missing_from(self, other: FormulaSet) -> Formula | None:
        """Some member of ``self`` that is not in ``other``, or ``None``."""
        if other.elements is None:
            return None
        if self.elements is None:
            return fresh_formula(other.elements)
        for f in sorted(self.elements - other.elements, key=print_formula):
            return f
        return None

    def union(self, other: FormulaSet) -> FormulaSet:
        if self.elements is None or other.elements is None:
            return ALL
        return FormulaSet(self.elements | other.elements)

    def __str__(self) -> str:
        if self.elements is None:
            return "ALL"
        if not self.elements:
            return "EMPTY"
        return "{ " + "; ".join(print_formula(f) for f in self) + " }"


ALL = FormulaSet(None)
EMPTY = FormulaSet(frozenset())


def fresh_formula(avoid: frozenset[Formula]) -> Formula:
    """An atom strictly larger than every formula in ``avoid``, hence not in it."""
    longest = max((formula_size(f) for f in avoid), default=0)
    return Atom("p" * (longest + 1))


def mp_apply(s: FormulaSet, t: FormulaSet) -> FormulaSet:
    """One round of Modus Ponens: ``{F | G -> F in s and G in t}``."""
    if s.elements is None:
        # every G -> F is in s; one G in t is enough to reach any F
        return ALL if t else EMPTY
    out = set()
    for f in s.elements:
        if isinstance(f, Implies) and f.left in t:
            out.add(f.right)
    return FormulaSet(frozenset(out))
