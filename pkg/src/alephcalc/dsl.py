"""Surface syntax for cardinals, ordinals, assumptions, and queries.

Index grammar (precedence ^ > * > +), longest-match tokenisation::

    statement := 'assume' assumption | query | literal
    assumption:= 'GCH' | 'V=L' | 'sharp' | 'no-sharp'
               | 'SCH' '(' cardinal ',' scope ')'
    scope     := '>=' cardinal | 'below' cardinal
               | '{' cardinal (',' cardinal)* '}'
    query     := NAME '(' arg (',' arg)* ')'
    arg       := 'true' | 'false' | index
    literal   := index
    index     := term ('+' term)*
    term      := 'w' ['^' exponent] ['*' NAT] | NAT | cardinal
    exponent  := NAT | 'w' ['^' exponent] | '(' index ')'   -- no cardinals
    cardinal  := 'aleph' '(' index ')' | 'aleph_0' | 'aleph_1' | 'aleph_w'
               | 'inacc' '(' NAME ')'

A cardinal term must dominate everything before it in an index sum (ordinal
absorption); ``aleph(0)`` in index position contributes the ordinal ``w``.
``parse(format(ast)) == ast`` for canonical ASTs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .cardinals import ALEPH0, Aleph, CardinalAtom, CardinalExpr, card_compare
from .hypotheses import AtLeast, ExplicitSet, SchScope, UnboundedBelow
from .ordinals import OMEGA, ORD_ONE, ORD_ZERO, CnfOrdinal, Ordering, cnf_add, from_int, omega_power


class ParseError(Exception):
    def __init__(self, line: int, col: int, expected: tuple[str, ...], found: str):
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found
        want = ", ".join(expected)
        super().__init__(f"syntax error at line {line}, column {col}: expected {want}, found {found}")


# --- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class CardinalLiteral:
    value: CardinalExpr


@dataclass(frozen=True)
class OrdinalLiteral:
    base: CardinalExpr | None
    tail: CnfOrdinal


@dataclass(frozen=True)
class BoolLiteral:
    value: bool


@dataclass(frozen=True)
class Query:
    name: str
    args: tuple["Ast", ...]


@dataclass(frozen=True)
class AssumeGch:
    pass


@dataclass(frozen=True)
class AssumeVEqualsL:
    pass


@dataclass(frozen=True)
class AssumeSharp:
    exists: bool


@dataclass(frozen=True)
class AssumeSch:
    mu: CardinalExpr
    scope: SchScope


Assumption = Union[AssumeGch, AssumeVEqualsL, AssumeSharp, AssumeSch]


@dataclass(frozen=True)
class Assume:
    item: Assumption


@dataclass(frozen=True)
class Session:
    items: tuple["Ast", ...]


Ast = Union[CardinalLiteral, OrdinalLiteral, BoolLiteral, Query, Assume, Session]


# --- tokenizer ---------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # 'nat', 'ident', a symbol, or 'eof'
    text: str
    line: int
    col: int


_SYMBOLS = (">=", "(", ")", "{", "}", ",", ";", "+", "*", "^", "=", "-")


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("nat", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                tokens.append(Token(sym, sym, line, col))
                col += len(sym)
                i += len(sym)
                break
        else:
            raise ParseError(line, col, ("a token",), repr(ch))
    tokens.append(Token("eof", "", line, col))
    return tokens


# --- parser ------------------------------------------------------------------

def _sugar_value(text: str) -> CardinalExpr | None:
    """aleph_N for a natural N, plus aleph_w."""
    if text == "aleph_w":
        return Aleph(None, OMEGA)
    if text.startswith("aleph_") and text[6:].isdigit():
        return Aleph(None, from_int(int(text[6:])))
    return None


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, *expected: str) -> ParseError:
        tok = self.peek()
        found = tok.text if tok.kind != "eof" else "end of input"
        return ParseError(tok.line, tok.col, expected, found)

    def expect(self, kind: str, what: str | None = None) -> Token:
        if self.peek().kind != kind:
            raise self.fail(what or repr(kind))
        return self.advance()

    def accept(self, kind: str) -> Token | None:
        if self.peek().kind == kind:
            return self.advance()
        return None

    def at_keyword(self, *words: str) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and tok.text.lower() in words

    # statements

    def session(self) -> Ast:
        items = [self.statement()]
        while self.accept(";"):
            items.append(self.statement())
        self.expect("eof", "';' or end of input")
        return items[0] if len(items) == 1 else Session(tuple(items))

    def statement(self) -> Ast:
        if self.at_keyword("assume"):
            self.advance()
            return Assume(self.assumption())
        return self.arg()

    def assumption(self) -> Assumption:
        tok = self.peek()
        if tok.kind != "ident":
            raise self.fail("GCH", "V=L", "sharp", "no-sharp", "SCH")
        word = tok.text.lower()
        if word == "gch":
            self.advance()
            return AssumeGch()
        if word == "v":
            self.advance()
            self.expect("=", "'='")
            nxt = self.expect("ident", "L")
            if nxt.text.lower() != "l":
                raise ParseError(nxt.line, nxt.col, ("L",), nxt.text)
            return AssumeVEqualsL()
        if word == "sharp":
            self.advance()
            return AssumeSharp(True)
        if word == "no":
            self.advance()
            self.expect("-", "'-'")
            nxt = self.expect("ident", "sharp")
            if nxt.text.lower() != "sharp":
                raise ParseError(nxt.line, nxt.col, ("sharp",), nxt.text)
            return AssumeSharp(False)
        if word == "sch":
            self.advance()
            self.expect("(", "'('")
            mu = self.cardinal_arg()
            self.expect(",", "','")
            scope = self.scope()
            self.expect(")", "')'")
            return AssumeSch(mu, scope)
        raise self.fail("GCH", "V=L", "sharp", "no-sharp", "SCH")

    def scope(self) -> SchScope:
        if self.accept(">="):
            return AtLeast(self.cardinal_arg())
        if self.at_keyword("below"):
            self.advance()
            return UnboundedBelow(self.cardinal_arg())
        if self.accept("{"):
            cards = [self.cardinal_arg()]
            while self.accept(","):
                cards.append(self.cardinal_arg())
            self.expect("}", "'}'")
            return ExplicitSet(tuple(cards))
        raise self.fail("'>='", "below", "'{'")

    def cardinal_arg(self) -> CardinalExpr:
        node = self.index_expr()
        if isinstance(node, CardinalLiteral):
            return node.value
        raise self.fail("a cardinal expression")

    # arguments and literals

    def arg(self) -> Ast:
        if self.at_keyword("true"):
            self.advance()
            return BoolLiteral(True)
        if self.at_keyword("false"):
            self.advance()
            return BoolLiteral(False)
        tok = self.peek()
        if (
            tok.kind == "ident"
            and _sugar_value(tok.text) is None
            and tok.text not in ("aleph", "inacc", "w")
        ):
            nxt = self.tokens[self.pos + 1]
            if nxt.kind == "(":
                return self.query(tok)
        return self.index_expr()

    def query(self, name_tok: Token) -> Query:
        self.advance()
        self.expect("(", "'('")
        args = [self.arg()]
        while self.accept(","):
            args.append(self.arg())
        self.expect(")", "')'")
        return Query(name_tok.text, tuple(args))

    def index_expr(self) -> CardinalLiteral | OrdinalLiteral:
        """Sum of index terms folded into (cardinal base, CNF tail)."""
        base: CardinalExpr | None = None
        tail = ORD_ZERO
        single_cardinal: CardinalExpr | None = None
        first = True
        while True:
            tok = self.peek()
            if tok.kind == "nat":
                self.advance()
                tail = cnf_add(tail, from_int(int(tok.text)))
                single_cardinal = None
            elif tok.kind == "ident" and tok.text == "w":
                tail = cnf_add(tail, self.omega_term())
                single_cardinal = None
            elif tok.kind == "ident" and (
                _sugar_value(tok.text) is not None or tok.text in ("aleph", "inacc")
            ):
                card = self.cardinal_primary()
                if card == ALEPH0:
                    # In a composite index aleph_0 contributes its initial
                    # ordinal w; standing alone it stays the cardinal.
                    tail = cnf_add(tail, OMEGA)
                    single_cardinal = card if first else None
                else:
                    if base is not None and card_compare(base, card) is not Ordering.LESS:
                        raise ParseError(
                            tok.line, tok.col,
                            ("a cardinal term dominating the preceding ones",), tok.text,
                        )
                    base = card
                    tail = ORD_ZERO
                    single_cardinal = card if first else None
            else:
                raise self.fail("a number", "w", "aleph(...)", "inacc(...)")
            first = False
            if not self.accept("+"):
                break
        if single_cardinal is not None:
            return CardinalLiteral(single_cardinal)
        return OrdinalLiteral(base, tail)

    def omega_term(self) -> CnfOrdinal:
        self.advance()  # 'w'
        exp = ORD_ONE
        if self.accept("^"):
            exp = self.exponent()
        coeff = 1
        if self.accept("*"):
            tok = self.expect("nat", "a positive coefficient")
            coeff = int(tok.text)
            if coeff < 1:
                raise ParseError(tok.line, tok.col, ("a positive coefficient",), tok.text)
        return omega_power(exp, coeff)

    def exponent(self) -> CnfOrdinal:
        tok = self.peek()
        if tok.kind == "nat":
            self.advance()
            return from_int(int(tok.text))
        if tok.kind == "ident" and tok.text == "w":
            self.advance()
            if self.accept("^"):
                return omega_power(self.exponent())
            return OMEGA
        if self.accept("("):
            node = self.index_expr()
            if not isinstance(node, OrdinalLiteral) or node.base is not None:
                raise self.fail("an ordinal exponent")
            self.expect(")", "')'")
            return node.tail
        raise self.fail("a number", "w", "'('")

    def cardinal_primary(self) -> CardinalExpr:
        tok = self.advance()
        sugar = _sugar_value(tok.text)
        if sugar is not None:
            return sugar
        if tok.text == "aleph":
            self.expect("(", "'('")
            inner = self.index_expr()
            self.expect(")", "')'")
            if isinstance(inner, CardinalLiteral):
                value = inner.value
                if isinstance(value, CardinalAtom):
                    raise ParseError(tok.line, tok.col, ("an aleph index (atoms are their own fixed points)",), tok.text)
                if value == ALEPH0:
                    return Aleph(None, OMEGA)
                return Aleph(value, ORD_ZERO)
            if inner.base is not None and isinstance(inner.base, CardinalAtom):
                raise ParseError(tok.line, tok.col, ("an aleph index (atoms are their own fixed points)",), tok.text)
            return Aleph(inner.base, inner.tail)
        # inacc
        self.expect("(", "'('")
        name = self.expect("ident", "an atom name")
        self.expect(")", "')'")
        return CardinalAtom(name.text, weakly_inaccessible=True)


def parse(text: str) -> Ast:
    return _Parser(text).session()


# --- canonical formatting -----------------------------------------------------


def format_statement(ast: Ast) -> str:
    if isinstance(ast, CardinalLiteral):
        return str(ast.value)
    if isinstance(ast, OrdinalLiteral):
        if ast.base is None:
            return str(ast.tail)
        if ast.tail.is_zero:
            return str(ast.base)
        return f"{ast.base}+{ast.tail}"
    if isinstance(ast, BoolLiteral):
        return "true" if ast.value else "false"
    if isinstance(ast, Query):
        return f"{ast.name}({', '.join(format_statement(a) for a in ast.args)})"
    if isinstance(ast, Assume):
        return f"assume {_format_assumption(ast.item)}"
    if isinstance(ast, Session):
        return "; ".join(format_statement(item) for item in ast.items)
    raise TypeError(f"not an AST node: {ast!r}")


def _format_assumption(item: Assumption) -> str:
    if isinstance(item, AssumeGch):
        return "GCH"
    if isinstance(item, AssumeVEqualsL):
        return "V=L"
    if isinstance(item, AssumeSharp):
        return "sharp" if item.exists else "no-sharp"
    return f"SCH({item.mu}, {item.scope})"
