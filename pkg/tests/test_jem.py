import pytest

from jemkit.axioms import ConstantSpecification
from jemkit.formulaset import ALL, EMPTY, FormulaSet
from jemkit.jem import (
    JEM,
    Holds,
    NotFoundWithinBound,
    RefutedExact,
    believed,
    evidenced,
    iter_terms,
    known,
    proper_closure,
    validate_jem,
    value_classes,
)
from jemkit.models import BasicModel
from jemkit.syntax import App, Atom, Const, Var, parse_formula, term_depth

P, Q = Atom("P"), Atom("Q")
x, y = Var("x"), Var("y")


def test_proper_closure_membership():
    s = proper_closure(["x"])
    assert App(x, Const(4)) in s and Const(0) in s
    assert App(x, y) not in s
    assert s.intersect(proper_closure(["y"])).generators == frozenset()
    with pytest.raises(ValueError):
        proper_closure(["not a name"])


def test_iter_terms_counts():
    terms = list(iter_terms([x, y], 2))
    assert len(terms) == 2 + 4 + (6 * 6 - 2 * 2)
    assert len(set(terms)) == len(terms)
    assert max(term_depth(t) for t in terms) == 2


def test_value_classes_cover_sharp_values():
    m = BasicModel(term_values={x: FormulaSet.of(parse_formula("P -> Q")), y: FormulaSet.of(P)}, sharp=True)
    classes = value_classes(m, [x, y], 2)
    values = {v for _, v in classes}
    brute = {m.value(t) for t in iter_terms([x, y], 2)}
    assert values == brute
    for t, v in classes:
        assert m.value(t) == v


def _jem(atoms, x_val, y_val, accepted, evidence):
    m = BasicModel(atom_values=atoms, term_values={x: x_val, y: y_val}, sharp=True)
    return JEM(m, proper_closure(accepted), proper_closure(evidence))


def test_believed_evidenced_known():
    j = _jem({"P": True}, FormulaSet.of(P), FormulaSet.of(P), ["x", "y"], ["x"])
    assert believed(j, P) == Holds(x)
    assert evidenced(j, P) == Holds(x)
    assert known(j, P) == Holds(x)
    assert isinstance(believed(j, Q), NotFoundWithinBound)


def test_known_refuted_by_flip_when_only_unshared_terms_justify():
    j = _jem({"P": True}, FormulaSet.of(P), FormulaSet.of(P), ["x"], ["y"])
    answer = known(j, P)
    assert isinstance(answer, RefutedExact)
    assert answer.certificate.recheck(j)


def test_known_stays_open_on_explicit_models():
    m = BasicModel(atom_values={"P": True}, term_values={x: FormulaSet.of(P), y: FormulaSet.of(P)})
    j = JEM(m, proper_closure(["x"]), proper_closure(["y"]))
    assert isinstance(known(j, P), NotFoundWithinBound)


def test_validate_jem():
    good = _jem({"P": True}, FormulaSet.of(P), FormulaSet.of(P), ["x"], ["y"])
    assert validate_jem(good).passed
    lying = _jem({"P": False}, FormulaSet.of(P), FormulaSet.of(P), ["x"], ["y"])
    report = validate_jem(lying)
    assert not report.passed and "y justifies P" in report.failures[0]
    wild = _jem({"P": True}, EMPTY, ALL, ["x"], ["y"])
    assert not validate_jem(wild).passed


def test_consistency_requirement():
    m = BasicModel(term_values={x: FormulaSet.of(parse_formula("_|_"))}, sharp=True)
    j = JEM(m, proper_closure(["x"]), proper_closure([]), require_consistency=True)
    report = validate_jem(j)
    assert any("inconsistent" in f for f in report.failures)


def test_constants_come_from_the_specification():
    ax = parse_formula("P -> (Q -> P)")
    m = BasicModel(
        atom_values={"P": True},
        sharp=True,
        constant_spec=ConstantSpecification.godel_injective(),
        canonical_constants=True,
    )
    j = JEM(m, proper_closure([]), proper_closure([]))
    answer = known(j, ax)
    assert isinstance(answer, Holds) and isinstance(answer.witness, Const)
