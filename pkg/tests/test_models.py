import pytest

from jemkit.axioms import ConstantSpecification
from jemkit.errors import SymbolicError
from jemkit.formulaset import ALL, EMPTY, FormulaSet, mp_apply
from jemkit.models import (
    BasicModel,
    all_terms_model,
    application_axiom_valid,
    check_closure,
    is_factive,
    is_injective,
    satisfies_cs,
    subterm_closure,
)
from jemkit.syntax import App, Atom, Const, Implies, Var, parse_formula, parse_term

P, Q, R = Atom("P"), Atom("Q"), Atom("R")
s, t = Var("s"), Var("t")


def fs(*texts):
    return FormulaSet(frozenset(parse_formula(x) for x in texts))


def test_mp_apply():
    assert mp_apply(fs("P -> Q", "R -> P", "Q"), fs("P")) == fs("Q")
    assert mp_apply(fs("P -> Q"), EMPTY) == EMPTY
    assert mp_apply(ALL, fs("P")) == ALL
    assert mp_apply(ALL, EMPTY) == EMPTY
    assert mp_apply(fs("P -> Q"), ALL) == fs("Q")
    assert mp_apply(EMPTY, ALL) == EMPTY


def test_formula_set_basics():
    assert P in ALL and P not in EMPTY
    assert str(fs("Q", "P")) == "{ P; Q }"
    assert str(ALL) == "ALL" and str(EMPTY) == "EMPTY"
    with pytest.raises(SymbolicError):
        list(ALL)
    witness = ALL.missing_from(fs("P"))
    assert witness is not None and witness != P


def test_evaluation():
    m = BasicModel(atom_values={"P": True}, term_values={s: fs("P")})
    assert m.holds(parse_formula("s:P /\\ P"))
    assert not m.holds(parse_formula("t:P"))
    assert not m.holds(parse_formula("_|_"))


def test_sharp_application_is_computed():
    m = BasicModel(term_values={s: fs("P -> Q"), t: fs("P")}, sharp=True)
    assert m.value(App(s, t)) == fs("Q")
    with pytest.raises(ValueError):
        BasicModel(term_values={App(s, t): fs("Q")}, sharp=True)


def test_closure_violation_reports_witness():
    m = BasicModel(term_values={s: fs("P -> Q"), t: fs("P"), App(s, t): EMPTY})
    report = check_closure(m, {s, t, App(s, t)})
    assert not report.passed
    assert report.violations == [(s, t, Q)]


def test_closure_with_all_valued_sides():
    m = BasicModel(term_values={s: ALL, t: fs("P"), App(s, t): fs("Q")})
    report = check_closure(m, subterm_closure([App(s, t)]))
    assert not report.passed
    assert report.violations[0][2] not in fs("Q")


def test_sharp_closure_is_structural():
    m = BasicModel(term_values={s: fs("P -> Q")}, sharp=True)
    report = check_closure(m, subterm_closure([App(s, s)]))
    assert report.passed and report.structural


def test_signature_must_be_subterm_closed():
    with pytest.raises(ValueError):
        check_closure(BasicModel(), {App(s, t)})


def test_application_axiom_matches_closure():
    good = BasicModel(term_values={s: fs("P -> Q"), t: fs("P"), App(s, t): fs("Q")})
    bad = good.replace(term_values={s: fs("P -> Q"), t: fs("P")})
    assert application_axiom_valid(good, s, t)
    assert not application_axiom_valid(bad, s, t)
    with pytest.raises(SymbolicError):
        application_axiom_valid(all_terms_model(ALL), s, t)


def test_injective_and_factive():
    m = BasicModel(atom_values={"P": True}, term_values={s: fs("P"), t: fs("P", "Q")})
    assert is_injective(m, [s]) and not is_injective(m, [s, t])
    assert is_factive(m, s) and not is_factive(m, t)
    with pytest.raises(SymbolicError):
        is_factive(all_terms_model(ALL), s)
    assert not is_factive(all_terms_model(ALL), s, universe=[P])


def test_constant_specifications():
    ax = parse_formula("P -> (Q -> P)")
    cs = ConstantSpecification.custom([parse_formula("c1:(P -> (Q -> P))")])
    m = BasicModel(term_values={Const(1): FormulaSet.of(ax)})
    assert satisfies_cs(m, cs)
    assert not satisfies_cs(BasicModel(), cs)
    assert satisfies_cs(BasicModel(), ConstantSpecification.empty())
    assert satisfies_cs(all_terms_model(ALL), ConstantSpecification.total())
    assert not satisfies_cs(BasicModel(), ConstantSpecification.total())


def test_custom_spec_must_be_axioms():
    with pytest.raises(ValueError):
        ConstantSpecification.custom([parse_formula("c1:P")])


def test_canonical_godel_constants():
    cs = ConstantSpecification.godel_injective()
    m = BasicModel(constant_spec=cs, canonical_constants=True)
    assert satisfies_cs(m, cs)
    ax = parse_formula("P -> (Q -> P)")
    c = cs.chain(ax, 1)[0]
    assert m.holds(c)
    assert m.value(Const(0)) == EMPTY


def test_models_compare_by_content():
    a = BasicModel(atom_values={"P": True}, term_values={s: fs("P")})
    b = BasicModel(atom_values={"P": True}, term_values={parse_term("s"): fs("P")})
    assert a == b and hash(a) == hash(b)
    assert a != a.replace(atom_default=True)
