import pytest

from jemkit.axioms import is_axiom
from jemkit.errors import PreconditionError
from jemkit.formulaset import ALL, EMPTY, FormulaSet
from jemkit.jem import JEM, Holds, NotFoundWithinBound, RefutedExact, believed, known, modal_projection, proper_closure
from jemkit.models import BasicModel
from jemkit.russell import (
    B,
    R,
    W,
    build_russell,
    constant_value,
    flip_model,
    refute_known_by_flip,
    theorem3_report,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
)
from jemkit.syntax import FALSUM, App, Const, Just, parse_formula


def test_model_shape():
    j = build_russell()
    m = j.model
    assert m.holds(B) and m.holds(Just(W, B)) and m.holds(Just(R, B))
    assert m.value(App(W, R)) == EMPTY
    assert W in j.accepted and W not in j.evidence
    assert R in j.evidence and R not in j.accepted


def test_constant_values_are_empty_or_one_axiom():
    for n in range(10_001):
        v = constant_value(n)
        assert not v.is_all and len(v) <= 1
        for f in v:
            assert is_axiom(f) or (isinstance(f, Just) and f.body in constant_value(f.term.index))


def test_axiom_constants_chain():
    ax = parse_formula("B -> (B -> B)")
    j = build_russell()
    answer = known(j, ax)
    assert isinstance(answer, Holds)
    assert j.model.value(answer.witness) == FormulaSet.of(ax)


@pytest.mark.parametrize("lemma", [verify_lemma1, verify_lemma2, verify_lemma3])
def test_lemmas_at_depth_3(lemma):
    report = lemma(3)
    assert report.passed, report.failures[:3]
    assert report.checked > 0


def test_lemma3_against_term_enumeration():
    # every ground term over two sampled constants, enumerated outright
    from jemkit.jem import iter_terms
    from jemkit.russell import sampled_constants

    flipped = flip_model(build_russell().model, ["B"])
    for t in iter_terms(sampled_constants()[:3], 3):
        v = flipped.value(t)
        assert not v.is_all and all(flipped.holds(g) for g in v)


def test_theorem3():
    report = theorem3_report()
    assert report.passed
    assert [v.claim for v in report.verdicts] == ["true", "justified", "believed", "not known"]
    assert report.to_dict()["passed"] is True


def test_modal_projection_mismatch():
    p = modal_projection(build_russell(), B)
    assert isinstance(p.justified, Holds) and isinstance(p.evidenced, Holds)
    assert isinstance(p.known, RefutedExact) and p.mismatch


def test_falsum_not_believed():
    assert isinstance(believed(build_russell(), FALSUM), NotFoundWithinBound)


def test_flip_preconditions():
    j = build_russell()
    assert refute_known_by_flip(j, B, ["B"]) is not None
    # a formula that survives the flip gets no certificate
    assert refute_known_by_flip(j, parse_formula("B \\/ ~B"), ["B"]) is None
    explicit = JEM(BasicModel(atom_values={"B": True}), j.accepted, j.evidence)
    with pytest.raises(PreconditionError):
        refute_known_by_flip(explicit, B, ["B"])
    bad_const = j.model.replace(term_values={**j.model.term_values, Const(5): FormulaSet.of(B)})
    with pytest.raises(PreconditionError):
        refute_known_by_flip(JEM(bad_const, j.accepted, j.evidence), B, ["B"])


def test_shared_generator_must_stay_factive():
    m = build_russell().model
    j = JEM(m, proper_closure(["w", "r"]), proper_closure(["r"]))
    with pytest.raises(PreconditionError):
        refute_known_by_flip(j, B, ["B"])
    assert known(j, B) == Holds(R)


def test_certificate_recheck_detects_tampering():
    j = build_russell()
    cert = refute_known_by_flip(j, B, ["B"])
    assert cert.recheck(j)
    # r is not shared, so its value is irrelevant to the certificate
    m2 = j.model.replace(term_values={W: FormulaSet.of(B), R: ALL})
    assert cert.recheck(JEM(m2, j.accepted, j.evidence))
    assert not cert.recheck(JEM(m2, proper_closure(["w", "r"]), j.evidence))
