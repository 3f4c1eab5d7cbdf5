"""Plain-text model documents.

One statement per line, ``#`` starts a comment::

    mode sharp                      # or explicit (the default)
    atom B = true
    atom default = false
    term w = { B }                  # formula sets: { F; G }, ALL, EMPTY
    term [w.r] = ALL
    term default = EMPTY
    const godel-injective canonical # empty | total | godel-injective
                                    # | custom { F; G } | custom-file PATH
    accepted = closure(w)
    evidence = closure(r)
    consistency = required
    signature = w, c0, [w.c0]
    universe = { B; B -> B }

Multi-world documents put the per-world statements inside
``world NAME { ... }`` blocks and ``signature``/``universe`` at top level.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .axioms import ConstantSpecification, CSKind
from .formulaset import ALL, EMPTY, FormulaSet
from .jem import JEM, TermSet, proper_closure
from .models import BasicModel, subterm_closure
from .multiworld import MultiJEM
from .syntax import ParseError, Term, is_identifier, parse_formula, parse_term


class DocumentError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass
class _Block:
    line: int = 0
    sharp: bool | None = None
    atoms: dict[str, bool] = field(default_factory=dict)
    atom_default: bool = False
    terms: dict[Term, FormulaSet] = field(default_factory=dict)
    term_default: FormulaSet = EMPTY
    cs: ConstantSpecification | None = None
    canonical: bool = False
    accepted: TermSet | None = None
    evidence: TermSet | None = None
    consistency: bool = False
    touched: bool = False

    def model(self) -> BasicModel:
        try:
            return BasicModel(
                atom_values=self.atoms,
                atom_default=self.atom_default,
                term_values=self.terms,
                term_default=self.term_default,
                sharp=bool(self.sharp),
                constant_spec=self.cs,
                canonical_constants=self.canonical,
            )
        except ValueError as exc:
            raise DocumentError(str(exc), self.line) from exc

    def jem(self, force: bool = False) -> JEM | None:
        if not force and self.accepted is None and self.evidence is None:
            return None
        empty = proper_closure(())
        return JEM(self.model(), self.accepted or empty, self.evidence or empty, self.consistency)


@dataclass
class ModelDocument:
    model: BasicModel | None = None
    jem: JEM | None = None
    multi: MultiJEM | None = None
    signature: frozenset[Term] | None = None
    universe: frozenset | None = None

    def world(self, name: str | None) -> BasicModel:
        if self.multi is None:
            if name is not None:
                raise DocumentError("document has no worlds")
            return self.model
        if name is None:
            name = self.multi.world_ids[0]
        if name not in self.multi.worlds:
            raise DocumentError(f"no world named {name!r}")
        return self.multi.worlds[name].model

    def world_jem(self, name: str | None) -> JEM | None:
        if self.multi is None:
            return self.jem
        return self.multi.worlds[name or self.multi.world_ids[0]]


def parse_formula_set(text: str, line: int | None = None) -> FormulaSet:
    text = text.strip()
    if text == "ALL":
        return ALL
    if text == "EMPTY":
        return EMPTY
    if not (text.startswith("{") and text.endswith("}")):
        raise DocumentError(f"expected {{ F; G }}, ALL or EMPTY, found {text!r}", line)
    inner = text[1:-1].strip()
    if not inner:
        return EMPTY
    try:
        return FormulaSet(frozenset(parse_formula(part) for part in inner.split(";") if part.strip()))
    except ParseError as exc:
        raise DocumentError(str(exc), line) from exc


_BOOL = {"true": True, "false": False, "1": True, "0": False}
_CLOSURE_RE = re.compile(r"closure\(\s*(.*?)\s*\)\Z")


def _parse_closure(text: str, line: int) -> TermSet:
    m = _CLOSURE_RE.match(text.strip())
    if not m:
        raise DocumentError(f"expected closure(x, y, ...), found {text!r}", line)
    names = [n.strip() for n in m.group(1).split(",") if n.strip()]
    try:
        return proper_closure(names)
    except ValueError as exc:
        raise DocumentError(str(exc), line) from exc


def _parse_cs(text: str, line: int, base: Path | None) -> tuple[ConstantSpecification, bool]:
    text = text.strip()
    canonical = text.endswith(" canonical")
    if canonical:
        text = text[: -len(" canonical")].strip()
    kind, _, rest = text.partition(" ")
    rest = rest.strip()
    try:
        if kind in ("empty", "total", "godel-injective"):
            if rest:
                raise DocumentError(f"unexpected {rest!r} after {kind}", line)
            return ConstantSpecification(CSKind(kind)), canonical
        if kind == "custom":
            fs = parse_formula_set(rest, line)
            if fs.is_all:
                raise DocumentError("a custom specification must be a finite set", line)
            return ConstantSpecification.custom(fs.elements), canonical
        if kind == "custom-file":
            path = Path(rest)
            if base is not None and not path.is_absolute():
                path = base / path
            lines = [ln.split("#")[0].strip() for ln in path.read_text().splitlines()]
            return ConstantSpecification.custom(parse_formula(ln) for ln in lines if ln), canonical
    except (ValueError, OSError) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(str(exc), line) from exc
    raise DocumentError(f"unknown constant specification {kind!r}", line)


def _statement(block: _Block, key: str, rest: str, line: int, base: Path | None) -> None:
    block.touched = True
    try:
        if key == "mode":
            if rest not in ("sharp", "explicit"):
                raise DocumentError(f"mode must be sharp or explicit, found {rest!r}", line)
            block.sharp = rest == "sharp"
        elif key == "atom":
            name, eq, value = rest.partition("=")
            name, value = name.strip(), value.strip().lower()
            if not eq or value not in _BOOL:
                raise DocumentError("expected: atom NAME = true|false", line)
            if name == "default":
                block.atom_default = _BOOL[value]
            elif is_identifier(name):
                block.atoms[name] = _BOOL[value]
            else:
                raise DocumentError(f"bad atom name {name!r}", line)
        elif key == "term":
            name, eq, value = rest.partition("=")
            if not eq:
                raise DocumentError("expected: term TERM = SET", line)
            fs = parse_formula_set(value, line)
            if name.strip() == "default":
                block.term_default = fs
            else:
                block.terms[parse_term(name.strip())] = fs
        elif key == "const":
            block.cs, block.canonical = _parse_cs(rest, line, base)
        elif key == "accepted":
            block.accepted = _parse_closure(rest.lstrip("= "), line)
        elif key == "evidence":
            block.evidence = _parse_closure(rest.lstrip("= "), line)
        elif key == "consistency":
            value = rest.lstrip("= ").strip()
            if value not in ("required", "optional"):
                raise DocumentError("consistency must be required or optional", line)
            block.consistency = value == "required"
        else:
            raise DocumentError(f"unknown key {key!r}", line)
    except ParseError as exc:
        raise DocumentError(str(exc), line) from exc


def parse_document(text: str, base: Path | None = None) -> ModelDocument:
    top = _Block(line=1)
    worlds: dict[str, _Block] = {}
    current = top
    signature = universe = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "}":
            if current is top:
                raise DocumentError("unmatched }", number)
            current = top
            continue
        m = re.match(r"world\s+([A-Za-z0-9_]+)\s*\{\Z", line)
        if m:
            if current is not top:
                raise DocumentError("nested world block", number)
            if m.group(1) in worlds:
                raise DocumentError(f"duplicate world {m.group(1)!r}", number)
            current = worlds[m.group(1)] = _Block(line=number)
            continue
        key, _, rest = line.partition(" ")
        if "=" in key:
            key, _, tail = key.partition("=")
            rest = "= " + tail + " " + rest
        rest = rest.strip()
        if key in ("signature", "universe"):
            if current is not top:
                raise DocumentError(f"{key} belongs at top level", number)
            value = rest.lstrip("=").strip()
            try:
                if key == "signature":
                    signature = frozenset(parse_term(t.strip()) for t in value.split(",") if t.strip())
                else:
                    universe = frozenset(parse_formula_set(value, number).elements or ())
            except ParseError as exc:
                raise DocumentError(str(exc), number) from exc
            continue
        _statement(current, key, rest, number, base)
    if current is not top:
        raise DocumentError("unterminated world block")

    doc = ModelDocument(signature=signature, universe=universe)
    if worlds:
        if top.touched:
            raise DocumentError("model statements outside world blocks in a multi-world document")
        if signature is None or universe is None:
            raise DocumentError("multi-world documents need signature and universe")
        try:
            doc.multi = MultiJEM(
                {name: b.jem(force=True) for name, b in worlds.items()},
                frozenset(subterm_closure(signature)),
                universe,
            )
        except ValueError as exc:
            if isinstance(exc, DocumentError):
                raise
            raise DocumentError(str(exc)) from exc
    else:
        doc.model = top.model()
        doc.jem = top.jem()
    return doc


def load_document(path: str | Path) -> ModelDocument:
    path = Path(path)
    return parse_document(path.read_text(encoding="utf-8"), base=path.parent)


def dump_model(m: BasicModel, jem: JEM | None = None) -> str:
    """Document text for ``m``; ``parse_document`` reads it back to an equal model."""
    lines = [f"mode {m.mode}"]
    for name in sorted(m.atom_values):
        lines.append(f"atom {name} = {str(m.atom_values[name]).lower()}")
    if m.atom_default:
        lines.append("atom default = true")
    for t in sorted(m.term_values, key=str):
        lines.append(f"term {t} = {m.term_values[t]}")
    lines.append(f"term default = {m.term_default}")
    cs = m.constant_spec
    if cs is not None:
        if cs.kind is CSKind.CUSTOM:
            spec = f"custom {FormulaSet(cs.formulas)}"
        else:
            spec = cs.kind.value
        lines.append(f"const {spec}{' canonical' if m.canonical_constants else ''}")
    if jem is not None:
        lines.append(f"accepted = {jem.accepted}")
        lines.append(f"evidence = {jem.evidence}")
        if jem.require_consistency:
            lines.append("consistency = required")
    return "\n".join(lines) + "\n"
