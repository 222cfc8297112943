"""Recursive descent parsers for the ASCII formula syntax.

Propositional grammar, loosest binding first::

    formula     ::= disjunction ( '->' formula )?        right-assoc
    disjunction ::= conjunction ( '|' conjunction )*
    conjunction ::= unary ( '&' unary )*
    unary       ::= '!' unary | primary
    primary     ::= atom | 'T' | 'F' | '(' formula ')'
    atom        ::= [a-z][a-z0-9_]*

NeXt formulas are written ``X^3 p`` or ``XXXp``.

Horn grammar::

    horn  ::= item ( '&' item )* ( '->' head )?
    item  ::= atom | 'F' | '(' horn ')'
    head  ::= atom | 'F'

When ``->`` is present every item must be an atom and they form the clause
body. Columns in errors are 1-based; end of input is reported at
``len(text) + 1``.
"""
import re
from dataclasses import dataclass
from typing import Collection, List, Optional

from bcm.core.exceptions import FormulaSyntaxError
from bcm.models.formula import (
    And,
    Atom,
    Const,
    HornFormula,
    Implies,
    Not,
    Or,
    PropFormula,
    XFormula,
    horn_clause,
)

_TOKEN_RE = re.compile(r"\s*(?:(->)|([!&|()])|([a-z][a-z0-9_]*)|([TF])(?![A-Za-z0-9_]))")

ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


@dataclass(frozen=True)
class Token:
    kind: str  # "op", "atom", "const" or "eof"
    text: str
    column: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            offending = len(text) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"unexpected character {text[offending]!r}", offending + 1, text)
        arrow, op, atom, const = match.groups()
        start = match.start(match.lastindex)
        if arrow or op:
            tokens.append(Token("op", arrow or op, start + 1))
        elif atom:
            tokens.append(Token("atom", atom, start + 1))
        else:
            tokens.append(Token("const", const, start + 1))
        pos = match.end()
    tokens.append(Token("eof", "", len(text) + 1))
    return tokens


class _Parser:
    """Shared cursor over a token list."""

    def __init__(self, text: str, signature: Optional[Collection[str]]):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.signature = None if signature is None else frozenset(signature)

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "eof":
            self.pos += 1
        return token

    def accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.advance()
            return True
        return False

    def error(self, message: Optional[str] = None) -> FormulaSyntaxError:
        token = self.current
        if message is None:
            message = "unexpected end of input" if token.kind == "eof" else f"unexpected token {token.text!r}"
        return FormulaSyntaxError(message, token.column, self.text)

    def expect(self, text: str) -> None:
        if not self.accept(text):
            raise self.error(f"expected {text!r}" if self.current.kind != "eof" else None)

    def atom(self) -> str:
        token = self.current
        if token.kind != "atom":
            raise self.error()
        if self.signature is not None and token.text not in self.signature:
            raise self.error(f"undeclared atom {token.text!r}")
        self.advance()
        return token.text

    def finish(self) -> None:
        if self.current.kind != "eof":
            raise self.error()


class _PropParser(_Parser):
    def formula(self) -> PropFormula:
        left = self.disjunction()
        if self.accept("->"):
            return Implies(left, self.formula())
        return left

    def disjunction(self) -> PropFormula:
        result = self.conjunction()
        while self.accept("|"):
            result = Or(result, self.conjunction())
        return result

    def conjunction(self) -> PropFormula:
        result = self.unary()
        while self.accept("&"):
            result = And(result, self.unary())
        return result

    def unary(self) -> PropFormula:
        if self.accept("!"):
            return Not(self.unary())
        return self.primary()

    def primary(self) -> PropFormula:
        token = self.current
        if token.kind == "const":
            self.advance()
            return Const(token.text == "T")
        if self.accept("("):
            inner = self.formula()
            self.expect(")")
            return inner
        return Atom(self.atom())


def parse_prop(text: str, signature: Optional[Collection[str]] = None) -> PropFormula:
    """Parse propositional formula text.

    Raises:
        FormulaSyntaxError: on a syntax error or an atom outside ``signature``.
    """
    parser = _PropParser(text, signature)
    formula = parser.formula()
    parser.finish()
    return formula


class _HornParser(_Parser):
    def horn(self) -> HornFormula:
        items = [self.item()]
        while self.accept("&"):
            items.append(self.item())
        if self.accept("->"):
            body = []
            for item in items:
                if not isinstance(item, str):
                    raise FormulaSyntaxError("clause body must be a conjunction of atoms", self.current.column, self.text)
                body.append(item)
            return HornFormula.of([horn_clause(body, self.head())])
        clauses = []
        for item in items:
            if isinstance(item, str):
                clauses.append(horn_clause((), item))
            else:
                clauses.extend(item.clauses)
        return HornFormula.of(clauses)

    def item(self):
        token = self.current
        if token.kind == "const" and token.text == "F":
            self.advance()
            return HornFormula.of([horn_clause((), None)])
        if self.accept("("):
            inner = self.horn()
            self.expect(")")
            return inner
        return self.atom()

    def head(self) -> Optional[str]:
        token = self.current
        if token.kind == "const" and token.text == "F":
            self.advance()
            return None
        return self.atom()


def parse_horn(text: str, signature: Optional[Collection[str]] = None) -> HornFormula:
    """Parse Horn formula text; disjunction, negation and ``T`` are syntax errors."""
    parser = _HornParser(text, signature)
    formula = parser.horn()
    parser.finish()
    return formula


def parse_atom_list(text: str) -> List[str]:
    """Parse a comma-separated signature such as ``p,q``."""
    atoms = [part.strip() for part in text.split(",") if part.strip()]
    for atom in atoms:
        if not ATOM_RE.match(atom):
            raise FormulaSyntaxError(f"invalid atom name {atom!r}", text.find(atom) + 1, text)
    if len(set(atoms)) != len(atoms):
        raise FormulaSyntaxError("duplicate atom in signature", 1, text)
    return atoms


_NEXT_RE = re.compile(r"X(?:\^(\d+))?\s*")


def parse_xformula(text: str, signature: Optional[Collection[str]] = None) -> XFormula:
    """Parse ``X^3 p``, ``XXXp``, ``X X p`` or a bare atom."""
    pos = len(text) - len(text.lstrip())
    depth = 0
    while True:
        match = _NEXT_RE.match(text, pos)
        if not match:
            break
        depth += int(match.group(1)) if match.group(1) is not None else 1
        pos = match.end()
    rest = text[pos:].rstrip()
    if not rest:
        raise FormulaSyntaxError("expected an atom", len(text) + 1, text)
    if not ATOM_RE.match(rest):
        raise FormulaSyntaxError(f"unexpected token {rest.split()[0]!r}", pos + 1, text)
    if signature is not None and rest not in signature:
        raise FormulaSyntaxError(f"undeclared atom {rest!r}", pos + 1, text)
    return XFormula(depth, rest)
