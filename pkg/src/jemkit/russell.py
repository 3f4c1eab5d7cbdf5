"""Russell's Prime Minister model and the flip argument that B is not known.

The model has one atom ``B`` (true), two variables ``w`` (the wrong
justification, accepted) and ``r`` (the right one, knowledge-producing),
both justifying exactly ``B``, constants valued by the Gödel-injective
specification, and sharp application.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .axioms import ConstantSpecification, godel_constant_value, is_axiom, sample_axioms
from .errors import PreconditionError
from .formulaset import EMPTY, FormulaSet
from .godel import godel_number
from .jem import (
    JEM,
    Holds,
    RefutedExact,
    believed,
    iter_terms,
    known,
    proper_closure,
    value_classes,
)
from .models import BasicModel
from .syntax import Atom, Const, Formula, Just, Term, Var

B = Atom("B")
W = Var("w")
R = Var("r")


def build_russell() -> JEM:
    model = BasicModel(
        atom_values={"B": True},
        term_values={W: FormulaSet.of(B), R: FormulaSet.of(B)},
        term_default=EMPTY,
        sharp=True,
        constant_spec=ConstantSpecification.godel_injective(),
        canonical_constants=True,
    )
    return JEM(model, proper_closure({"w"}), proper_closure({"r"}))


def constant_value(n: int) -> FormulaSet:
    return godel_constant_value(n)


def flip_model(m: BasicModel, atoms: Iterable[str]) -> BasicModel:
    """Same model with the listed atoms negated; term values untouched."""
    values = dict(m.atom_values)
    for name in atoms:
        values[name] = not m.atom(name)
    return m.replace(atom_values=values)


# -- the flip argument -------------------------------------------------------

@dataclass(frozen=True)
class FlipCertificate:
    """Proof that no term in the shared set justifies ``conclusion``.

    Term values do not depend on atoms, so a shared term justifying the
    conclusion in the model would justify it in the flipped model too. Every
    shared term is factive there: constants justify only axioms, the listed
    generators were checked, and sharp application keeps factivity. So the
    conclusion would be true in the flipped model, and it is not.
    """

    flipped: tuple[str, ...]
    generators: tuple[str, ...]
    conclusion: Formula

    def recheck(self, j: JEM) -> bool:
        try:
            return refute_known_by_flip(j, self.conclusion, self.flipped) == self
        except PreconditionError:
            return False

    def __str__(self):
        gens = ", ".join(self.generators) or "none"
        return (
            f"flip {{{', '.join(self.flipped)}}}: {self.conclusion} is false after the flip; "
            f"shared generators checked: {gens}"
        )


def _check_constants(m: BasicModel) -> None:
    """Constants may only justify axioms of J⁻(CS), at most one each."""
    cs = m.constant_spec
    for t, v in m.term_values.items():
        if not isinstance(t, Const):
            continue
        if v.is_all or len(v) > 1:
            raise PreconditionError(f"constant {t} is not injective: {v}")
        for f in v:
            if isinstance(f, Just):
                # a specification member c:G; true only if G is in c*
                if cs is None or f not in cs or f.body not in m.value(f.term):
                    raise PreconditionError(f"constant {t} justifies {f}, not a true CS member")
            elif not is_axiom(f):
                raise PreconditionError(f"constant {t} justifies a non-axiom {f}")
    if not m.canonical_constants and m.term_default != EMPTY:
        raise PreconditionError(f"unlisted constants get {m.term_default}, not the empty set")


def refute_known_by_flip(j: JEM, f: Formula, atoms: Iterable[str]) -> FlipCertificate | None:
    """Certificate that ``f`` is not known, or ``None`` if ``f`` survives the flip."""
    m = j.model
    if not m.sharp:
        raise PreconditionError("the flip argument needs a sharp model")
    _check_constants(m)
    flipped_atoms = tuple(sorted(set(atoms)))
    flipped = flip_model(m, flipped_atoms)
    if flipped.holds(f):
        return None
    shared = j.accepted.intersect(j.evidence)
    for g in sorted(shared.generators):
        v = flipped.value(Var(g))
        if v.is_all:
            raise PreconditionError(f"generator {g} justifies every formula")
        for h in v:
            if not flipped.holds(h):
                raise PreconditionError(f"generator {g} is not factive in the flipped model: {h}")
    return FlipCertificate(flipped_atoms, tuple(sorted(shared.generators)), f)


# -- lemma checks ------------------------------------------------------------

@dataclass
class LemmaReport:
    name: str
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.checked} checked)"


def sampled_constants(depth: int = 2) -> list[Const]:
    """c0 plus the constants certifying sampled axioms over B, nested ``depth`` deep."""
    cs = ConstantSpecification.godel_injective()
    out = {0}
    for a in sample_axioms(["B"]):
        for f in [a, *cs.chain(a, depth - 1)]:
            out.add(godel_number(f))
    return [Const(n) for n in sorted(out)]


def verify_lemma1(depth: int = 3, j: JEM | None = None) -> LemmaReport:
    """Every term over w, r and the sampled constants is factive."""
    j = j or build_russell()
    m = j.model
    leaves = [W, R, *sampled_constants()]
    failures, checked = [], 0
    for t, v in value_classes(m, leaves, depth):
        checked += 1
        if v.is_all:
            failures.append(f"{t} justifies every formula")
            continue
        for g in v:
            if not m.holds(g):
                failures.append(f"{t} justifies {g}, which is false")
    notes = [f"w justifies {', '.join(map(str, m.value(W)))}, true in the model"]
    notes.append(f"c0 justifies nothing: {m.value(Const(0))}")
    return LemmaReport("lemma 1 (every term is factive)", not failures, checked, failures, notes)


def verify_lemma2(depth: int = 3, j: JEM | None = None, constants: int = 2) -> LemmaReport:
    """Term values agree in the model and in its B-flipped twin, term by term."""
    j = j or build_russell()
    m = j.model
    flipped = flip_model(m, ["B"])
    leaves = [W, R, *sampled_constants()[:constants]]
    failures, checked = [], 0
    for t in iter_terms(leaves, depth):
        checked += 1
        if m.value(t) != flipped.value(t):
            failures.append(f"{t}: {m.value(t)} vs {flipped.value(t)}")
    return LemmaReport("lemma 2 (term values ignore atoms)", not failures, checked, failures)


def verify_lemma3(depth: int = 3, j: JEM | None = None) -> LemmaReport:
    """Every ground term is factive in the flipped model."""
    j = j or build_russell()
    flipped = flip_model(j.model, ["B"])
    failures, checked = [], 0
    for t, v in value_classes(flipped, sampled_constants(), depth):
        checked += 1
        if v.is_all or not all(flipped.holds(g) for g in v):
            failures.append(f"{t} is not factive after the flip")
    return LemmaReport("lemma 3 (shared terms factive after flip)", not failures, checked, failures)


# -- the theorem -------------------------------------------------------------

@dataclass
class Verdict:
    claim: str
    ok: bool
    detail: str


@dataclass
class Theorem3Report:
    verdicts: list[Verdict]

    @property
    def passed(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "verdicts": [{"claim": v.claim, "ok": v.ok, "detail": v.detail} for v in self.verdicts],
        }

    def __str__(self):
        return "\n".join(f"{v.claim:<10} {'yes' if v.ok else 'NO':<4} {v.detail}" for v in self.verdicts)


def theorem3_report() -> Theorem3Report:
    """B is true, justified and believed, but not known, each re-checked."""
    j = build_russell()
    m = j.model
    verdicts = [Verdict("true", m.holds(B), "B evaluates to true")]
    verdicts.append(Verdict("justified", m.holds(Just(W, B)), "w:B holds"))
    b = believed(j, B, 0)
    ok = isinstance(b, Holds) and b.witness in j.accepted and m.holds(Just(b.witness, B))
    verdicts.append(Verdict("believed", ok, f"witness {getattr(b, 'witness', '?')} is accepted"))
    k = known(j, B, 2)
    ok = isinstance(k, RefutedExact) and k.certificate.recheck(j)
    detail = str(k.certificate) if isinstance(k, RefutedExact) else str(k)
    verdicts.append(Verdict("not known", ok, detail))
    return Theorem3Report(verdicts)
