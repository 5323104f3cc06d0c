"""Text syntax for monomials, tensors and chains.

Grammar (whitespace insensitive)::

    expr     := sign* term (('+' | '-') sign* term)*
    term     := [scalar '*'] tensor
    scalar   := NUM ['/' NUM]
    tensor   := atom ('(x)' atom)*
    atom     := monomial | '(' expr ')'
    monomial := '1' | '0' | PPART [QPART] | QPART | WPART
    PPART    := 'p[' NUM (',' NUM)* ']'      QPART likewise with 'q'
    WPART    := 'w[' [NUM (',' NUM)*] ']'    ('w[]' is the free unit)

Every expression denotes a chain: a monomial is a one-factor tensor, and
``(x)`` concatenates tensors multilinearly.  Degree-0 chains double as
algebra elements.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

from .algebra import LinComb, Scalar
from .semigroup import CuntzMonomial, FreeWord


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<tensor>\(\s*x\s*\))
  | (?P<word>[pqw]\s*\[\s*(?:\d+(?:\s*,\s*\d+)*)?\s*\])
  | (?P<num>\d+)
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def _word_indices(token: Token):
    inner = token.text[token.text.index("[") + 1 : -1].strip()
    if not inner:
        return ()
    indices = tuple(int(s) for s in inner.split(","))
    if any(i < 1 for i in indices):
        raise ParseError("generator indices must be positive", token.pos)
    return indices


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text:
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        return self.advance()

    def error(self, what: str) -> ParseError:
        found = self.tok.text or "end of input"
        return ParseError(f"{what}, found {found!r}", self.tok.pos)

    # grammar

    def parse(self) -> LinComb:
        result = self.expr()
        if self.tok.kind != "end":
            raise self.error("unexpected token")
        return result

    def expr(self) -> LinComb:
        start = self.tok.pos
        total = self.signed_term()
        while self.tok.text in ("+", "-"):
            negate = self.advance().text == "-"
            term = self.signed_term()
            total = total - term if negate else total + term
        _check_homogeneous(total, start)
        return total

    def signed_term(self) -> LinComb:
        sign = 1
        while self.tok.text in ("+", "-"):
            if self.advance().text == "-":
                sign = -sign
        start = self.tok.pos
        scalar = self.scalar()
        term = self.tensor()
        _check_homogeneous(term, start)
        return term.scale(sign * scalar)

    def scalar(self) -> Scalar:
        if self.tok.kind != "num":
            return 1
        nxt = self.peek()
        if nxt.text == "*":
            value = int(self.advance().text)
            self.advance()
            return value
        if nxt.text == "/":
            num = int(self.advance().text)
            self.advance()
            if self.tok.kind != "num":
                raise self.error("expected denominator")
            den_tok = self.advance()
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("zero denominator", den_tok.pos)
            self.expect("*")
            return Fraction(num, den)
        return 1

    def tensor(self) -> LinComb:
        result = self.atom()
        while self.tok.kind == "tensor":
            self.advance()
            right = self.atom()
            acc = {}
            for s, cs in result.items():
                for t, ct in right.items():
                    acc[s + t] = acc.get(s + t, 0) + cs * ct
            result = LinComb.from_acc(acc)
        return result

    def atom(self) -> LinComb:
        tok = self.tok
        if tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        mono = self.monomial()
        if mono is None:
            return LinComb()
        return LinComb({(mono,): 1})

    def monomial(self) -> Optional[object]:
        tok = self.tok
        if tok.kind == "num":
            if tok.text == "1":
                self.advance()
                return CuntzMonomial((), ())
            if tok.text == "0":
                self.advance()
                return None
            raise self.error("expected a monomial")
        if tok.kind != "word":
            raise self.error("expected a monomial")
        letter = tok.text[0]
        indices = _word_indices(tok)
        if letter == "w":
            self.advance()
            return FreeWord(indices)
        if not indices:
            raise ParseError(f"empty {letter}-part; write 1 for the unit", tok.pos)
        self.advance()
        if letter == "q":
            return CuntzMonomial((), indices)
        beta = ()
        if self.tok.kind == "word" and self.tok.text[0] == "q":
            beta = _word_indices(self.tok)
            if not beta:
                raise ParseError("empty q-part", self.tok.pos)
            self.advance()
        return CuntzMonomial(indices, beta)


def _check_homogeneous(x: LinComb, pos: int) -> None:
    degrees = {len(t) for t in x}
    if len(degrees) > 1:
        raise ParseError("terms of different tensor degree", pos)
    kinds = {type(a) for t in x for a in t}
    if len(kinds) > 1:
        raise ParseError("Cuntz monomials and free words mixed", pos)


def parse_chain(text: str) -> LinComb:
    """Parse text into a chain (``LinComb`` over tuples of monomials)."""
    return _Parser(text).parse()


parse_element = parse_chain


def parse_algebra(text: str) -> LinComb:
    """Parse a degree-0 expression into an algebra element."""
    from .algebra import chain_to_element

    x = parse_chain(text)
    try:
        return chain_to_element(x)
    except ValueError:
        raise ParseError("expected an algebra element (no tensor signs)", 0) from None


def parse_monomial(text: str):
    x = parse_algebra(text)
    if len(x) != 1 or next(iter(x.items()))[1] != 1:
        raise ParseError("expected a single monomial", 0)
    return next(iter(x))


# formatting


def format_scalar(c: Scalar) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_monomial(a) -> str:
    if isinstance(a, FreeWord):
        return "w[" + ",".join(map(str, a.word)) + "]"
    return repr(a)


def _mono_key(a):
    if isinstance(a, FreeWord):
        return (a.word,)
    return (a.alpha, a.beta)


def sort_key(key):
    """Total word length first, then lexicographic on the index sequences."""
    if isinstance(key, tuple) and not isinstance(key, (CuntzMonomial, FreeWord)):
        return (sum(a.length() for a in key), tuple(_mono_key(a) for a in key))
    return (key.length(), _mono_key(key))


def _format_body(key) -> str:
    if isinstance(key, (CuntzMonomial, FreeWord)):
        return format_monomial(key)
    return " (x) ".join(format_monomial(a) for a in key)


def _wrapped(key) -> str:
    body = _format_body(key)
    if isinstance(key, tuple) and not isinstance(key, (CuntzMonomial, FreeWord)) and len(key) > 1:
        return f"({body})"
    return body


def format_lincomb(x: LinComb) -> str:
    """Canonical text; ``parse_chain(format_lincomb(x)) == x`` for chains."""
    if not x:
        return "0"
    parts = []
    for n, key in enumerate(sorted(x.keys(), key=sort_key)):
        c = Fraction(x.coeff(key))
        if n == 0:
            parts.append(_format_body(key) if c == 1 else f"{format_scalar(c)} * {_wrapped(key)}")
            continue
        sep = " + " if c > 0 else " - "
        mag = abs(c)
        parts.append(sep + (_format_body(key) if mag == 1 else f"{format_scalar(mag)} * {_wrapped(key)}"))
    return "".join(parts)


format_chain = format_lincomb
