"""Parser for rational interval expressions.

Syntax::

    expr  ::= term ( ('u' | '\\') term )*      left-assoc
    term  ::= ('[' | '(') end ',' end (']' | ')')
            | '{' [ number ( ',' number )* ] '}'
            | 'Q'
            | '(' expr ')'
    end   ::= number | '-inf' | 'inf' | ['-'] 'sqrt(' number ')'
    number::= ['-'] digits [ '/' digits | '.' digits ]

Numbers are read exactly (``0.1`` is ``1/10``).
"""
import re
from fractions import Fraction
from typing import List, Optional, Tuple

from bcm.core.exceptions import ModelSpecError
from bcm.models.interval import Interval, IntervalTarget, Point, sqrt

_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<number>-?\d+(?:/\d+|\.\d+)?)"
    r"|(?P<sqrt>-?sqrt\(\s*\d+(?:/\d+|\.\d+)?\s*\))"
    r"|(?P<inf>-?inf)"
    r"|(?P<sym>[\[\](){},\\Qu])"
    r")"
)


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while text[pos:].strip():
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise ModelSpecError(f"bad interval syntax at column {pos + 1}: {text!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind) + 1))
        pos = match.end()
    tokens.append(("eof", "", len(text) + 1))
    return tokens


def _sqrt_point(text: str) -> Point:
    negative = text.startswith("-")
    radicand = Fraction(text[text.index("(") + 1:text.rindex(")")].strip())
    root = sqrt(radicand)
    return -root if negative else root


class _IntervalParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> Tuple[str, str, int]:
        token = self.tokens[self.pos]
        if token[0] != "eof":
            self.pos += 1
        return token

    def fail(self, what: str) -> ModelSpecError:
        kind, text, column = self.peek()
        found = "end of input" if kind == "eof" else repr(text)
        return ModelSpecError(f"expected {what}, found {found} at column {column}")

    def symbol(self, *options: str) -> str:
        kind, text, _ = self.peek()
        if kind != "sym" or text not in options:
            raise self.fail(" or ".join(repr(o) for o in options))
        self.take()
        return text

    def expr(self) -> IntervalTarget:
        result = self.term()
        while self.peek()[0] == "sym" and self.peek()[1] in ("u", "\\"):
            operator = self.take()[1]
            right = self.term()
            result = result.union(right) if operator == "u" else result.difference(right)
        return result

    def term(self) -> IntervalTarget:
        kind, text, _ = self.peek()
        if kind == "sym" and text == "Q":
            self.take()
            return IntervalTarget.everything()
        if kind == "sym" and text == "{":
            self.take()
            points = []
            if not (self.peek()[0] == "sym" and self.peek()[1] == "}"):
                points.append(self.number())
                while self.peek()[0] == "sym" and self.peek()[1] == ",":
                    self.take()
                    points.append(self.number())
            self.symbol("}")
            return IntervalTarget.of(Interval.point(p) for p in points)
        if kind == "sym" and text == "(" and self._parenthesised_expr():
            self.take()
            inner = self.expr()
            self.symbol(")")
            return inner
        opening = self.symbol("[", "(")
        lo = self.end(lower=True)
        self.symbol(",")
        hi = self.end(lower=False)
        closing = self.symbol("]", ")")
        interval = Interval.make(lo, hi, opening == "[", closing == "]")
        return IntervalTarget.empty() if interval is None else IntervalTarget.of([interval])

    def _parenthesised_expr(self) -> bool:
        following = self.tokens[self.pos + 1]
        return following[0] == "sym" and following[1] in ("[", "(", "{", "Q")

    def number(self) -> Fraction:
        kind, text, _ = self.peek()
        if kind != "number":
            raise self.fail("a rational number")
        try:
            value = Fraction(text)
        except ZeroDivisionError:
            raise self.fail("a nonzero denominator")
        self.take()
        return value

    def end(self, lower: bool) -> Optional[Point]:
        kind, text, _ = self.peek()
        if kind == "inf":
            if (text == "-inf") != lower:
                raise self.fail("a finite bound")
            self.take()
            return None
        if kind == "sqrt":
            try:
                point = _sqrt_point(text)
            except ZeroDivisionError:
                raise self.fail("a nonzero denominator")
            self.take()
            return point
        return self.number()

    def finish(self) -> None:
        if self.peek()[0] != "eof":
            raise self.fail("end of input")


def parse_interval_target(text: str) -> IntervalTarget:
    parser = _IntervalParser(text)
    target = parser.expr()
    parser.finish()
    return target


def parse_closed_interval(text: str) -> Interval:
    """A base formula: a closed interval with rational ends."""
    target = parse_interval_target(text)
    stripped = text.strip()
    if (
        len(target.components) != 1
        or not target.components[0].is_closed
        or not stripped.startswith(("[", "{"))
        or "u" in stripped
        or "\\" in stripped
    ):
        raise ModelSpecError(f"not a closed rational interval: {text!r}")
    return target.components[0]
