import itertools
import random

import pytest
from hypothesis import given, settings

from strategies import formulas, terms
from jemkit.godel import count_identifiers, godel_formula, godel_number, identifier_rank, identifier_unrank
from jemkit.sampling import random_formula
from jemkit.syntax import (
    FALSUM,
    And,
    App,
    Atom,
    Const,
    Implies,
    Just,
    Not,
    Or,
    ParseError,
    Var,
    formula_size,
    parse_formula,
    parse_term,
    subformulas,
)


def test_parse_basic_shapes():
    assert parse_formula("P -> Q -> R") == Implies(Atom("P"), Implies(Atom("Q"), Atom("R")))
    assert parse_formula("P /\\ Q \\/ R") == Or(And(Atom("P"), Atom("Q")), Atom("R"))
    assert parse_formula("~P /\\ Q") == And(Not(Atom("P")), Atom("Q"))
    assert parse_formula("_|_") == FALSUM
    assert parse_formula("x:P -> P") == Implies(Just(Var("x"), Atom("P")), Atom("P"))
    assert parse_formula("[s.t]:Q") == Just(App(Var("s"), Var("t")), Atom("Q"))
    assert parse_formula("c3:x:P") == Just(Const(3), Just(Var("x"), Atom("P")))


def test_application_is_left_associative():
    assert parse_term("[a.b.c]") == App(App(Var("a"), Var("b")), Var("c"))
    assert str(App(Var("a"), App(Var("b"), Var("c")))) == "[a.[b.c]]"
    assert str(App(App(Var("a"), Var("b")), Var("c"))) == "[a.b.c]"


@pytest.mark.parametrize("text", ["", "P ->", "(P", "P Q", "c1", "[x.]:P", "x:", "P -> -> Q", "[x.y]"])
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as info:
        parse_formula(text)
    assert info.value.pos >= 0


def test_constant_names_are_not_atoms():
    with pytest.raises(ParseError):
        parse_formula("c12 -> P")
    assert parse_formula("c12:P") == Just(Const(12), Atom("P"))
    assert parse_formula("cat") == Atom("cat")


def test_printer_round_trip_on_random_formulas():
    rng = random.Random(7)
    for _ in range(10_000):
        f = random_formula(rng, rng.randint(0, 8), ["P", "Q", "R", "c_"], ["x", "y", "c"], term_depth=2)
        assert parse_formula(str(f)) == f


@given(formulas)
def test_round_trip_property(f):
    assert parse_formula(str(f)) == f


@given(terms)
def test_term_round_trip(t):
    assert parse_term(str(t)) == t


# -- Gödel numbering ---------------------------------------------------------

def test_first_numbers():
    assert godel_formula(1) == FALSUM
    assert godel_formula(2) == Atom("A")
    assert godel_formula(53) == Atom("z")
    assert godel_formula(54) == Not(FALSUM)
    assert godel_formula(0) is None


def test_godel_round_trip_prefix():
    seen = set()
    for n in range(1, 5001):
        f = godel_formula(n)
        assert godel_number(f) == n
        seen.add(f)
    assert len(seen) == 5000


@settings(max_examples=300)
@given(formulas)
def test_godel_inverse(f):
    assert godel_formula(godel_number(f)) == f


@settings(max_examples=300)
@given(formulas)
def test_subformulas_get_smaller_numbers(f):
    n = godel_number(f)
    for g in subformulas(f) - {f}:
        assert godel_number(g) < n


@given(formulas, formulas)
def test_numbering_respects_size(f, g):
    if formula_size(f) < formula_size(g):
        assert godel_number(f) < godel_number(g)


def _brute_identifiers(length):
    first = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz"
    rest = sorted(first + "0123456789_")
    out = []
    for head in sorted(first):
        for tail in itertools.product(rest, repeat=length - 1):
            name = head + "".join(tail)
            if not (name[0] == "c" and len(name) > 1 and name[1:].isdigit()):
                out.append(name)
    return out


@pytest.mark.parametrize("length", [1, 2])
def test_identifier_ranks_against_listing(length):
    names = _brute_identifiers(length)
    assert count_identifiers(length) == len(names)
    for i, name in enumerate(names):
        assert identifier_rank(name) == i
        assert identifier_unrank(length, i) == name


def test_atom_p0_number_against_listing():
    # size 3 atoms come after every formula of size <= 2, in identifier order
    below = sum(1 for n in range(1, 20_000) if formula_size(godel_formula(n)) <= 2)
    assert godel_number(Atom("p0")) == below + 1 + _brute_identifiers(2).index("p0")


def test_numbers_of_larger_formulas_are_exact_integers():
    f = parse_formula("P -> (Q -> P)")
    n = godel_number(f)
    assert n == 3367395731128
    assert godel_formula(n) == f
