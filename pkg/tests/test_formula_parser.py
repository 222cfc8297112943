import pytest
from hypothesis import given, settings, strategies as st

from bcm.core.exceptions import FormulaSyntaxError
from bcm.models.formula import And, Atom, Const, HornFormula, Implies, Not, Or, XFormula, horn_clause
from bcm.utils.formula_parser import parse_atom_list, parse_horn, parse_prop, parse_xformula


def test_precedence_and_associativity():
    assert parse_prop("!a & b | c -> d -> e") == Implies(
        Or(And(Not(Atom("a")), Atom("b")), Atom("c")),
        Implies(Atom("d"), Atom("e")),
    )
    assert parse_prop("a & b & c") == And(And(Atom("a"), Atom("b")), Atom("c"))
    assert parse_prop("T | F") == Or(Const(True), Const(False))


def test_printing_uses_minimal_parentheses():
    assert str(parse_prop("(a -> b) -> c")) == "(a -> b) -> c"
    assert str(parse_prop("a -> (b -> c)")) == "a -> b -> c"
    assert str(parse_prop("!(a | b) & c")) == "!(a | b) & c"
    assert str(parse_prop("a & (b & c)")) == "a & (b & c)"


@pytest.mark.parametrize(
    "text, column",
    [("a &", 4), ("a b", 3), ("(a", 3), ("a $ b", 3), (")", 1)],
)
def test_syntax_errors_report_the_column(text, column):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_prop(text)
    assert info.value.column == column
    assert f"column {column}" in info.value.message


def test_undeclared_atom():
    with pytest.raises(FormulaSyntaxError, match="undeclared atom 'c'"):
        parse_prop("a | c", ["a", "b"])


_formulas = st.recursive(
    st.sampled_from([Atom("a"), Atom("b"), Const(True), Const(False)]),
    lambda children: st.one_of(
        st.builds(Not, children),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
    ),
    max_leaves=12,
)


@settings(max_examples=300)
@given(_formulas)
def test_printed_formulas_parse_back(formula):
    assert parse_prop(str(formula)) == formula


def test_horn_clauses():
    assert parse_horn("a & b -> c") == HornFormula.of([horn_clause(["a", "b"], "c")])
    assert parse_horn("a -> F") == HornFormula.of([horn_clause(["a"], None)])
    assert parse_horn("F") == HornFormula.of([horn_clause([], None)])
    both = parse_horn("a & (b -> a)")
    assert both.clauses == (horn_clause([], "a"), horn_clause(["b"], "a"))
    assert str(both) == "a & (b -> a)"


@pytest.mark.parametrize("text", ["a | b", "!a", "T", "(a -> b) -> c", "a -> b -> c"])
def test_non_horn_text_is_rejected(text):
    with pytest.raises(FormulaSyntaxError):
        parse_horn(text)


def test_next_formulas():
    assert parse_xformula("X^3 p") == XFormula(3, "p")
    assert parse_xformula("XXXp") == XFormula(3, "p")
    assert parse_xformula("X X p") == XFormula(2, "p")
    assert parse_xformula("q") == XFormula(0, "q")
    assert str(XFormula(2, "q")) == "X^2 q"
    with pytest.raises(FormulaSyntaxError):
        parse_xformula("X^2")
    with pytest.raises(FormulaSyntaxError):
        parse_xformula("X r", ["p"])
    with pytest.raises(ValueError):
        XFormula(-1, "p")


def test_atom_lists():
    assert parse_atom_list("p, q,r") == ["p", "q", "r"]
    with pytest.raises(FormulaSyntaxError):
        parse_atom_list("p,P")
    with pytest.raises(FormulaSyntaxError):
        parse_atom_list("p,p")
