"""Expression grammar for trees, and the inverse pretty-printer.

    expr   := term ('+' term)*
    term   := factor (arrow factor)*
    arrow  := '->' | '-[' LABEL ']->'
    factor := IDENT | STRING | '(' expr ')'

'+' is overlay (a zero-labelled node) and binds loosest, left-associative.
Arrows bind tighter and chain to the LEFT: mixed-label connections are not
associative, so ``a -[x]-> b -[y]-> c`` is ``(a -[x]-> b) -[y]-> c``; with
equal labels the grouping is invisible.  A plain '->' carries the semiring
one; label literals follow the semiring's syntax.

Pretty-printing emits the same grammar with minimal parentheses, so
``parse(pretty(t)) == t`` for every tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

from .semiring import Semiring
from .tree import Leaf, Node, Tree

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at column {position + 1}: {message}")
        self.position = position


@dataclass(frozen=True)
class _Token:
    kind: str  # PLUS ARROW LABEL LPAREN RPAREN LEAF EOF
    value: Any
    position: int


def _tokenize(text: str, sr: Semiring) -> List[_Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "+":
            tokens.append(_Token("PLUS", "+", i))
            i += 1
        elif text.startswith("-[", i):
            end = text.find("]->", i + 2)
            if end < 0:
                raise ParseError("unterminated '-[' label (expected ']->')", i)
            raw = text[i + 2 : end]
            try:
                label = sr.parse_label(raw)
            except ValueError as exc:
                raise ParseError(str(exc), i + 2) from None
            tokens.append(_Token("LABEL", label, i))
            i = end + 3
        elif text.startswith("->", i):
            tokens.append(_Token("ARROW", sr.one, i))
            i += 2
        elif ch == "(":
            tokens.append(_Token("LPAREN", "(", i))
            i += 1
        elif ch == ")":
            tokens.append(_Token("RPAREN", ")", i))
            i += 1
        elif ch == '"':
            j = i + 1
            out = []
            while j < n and text[j] != '"':
                if text[j] == "\\":
                    if j + 1 >= n or text[j + 1] not in '"\\':
                        raise ParseError("invalid escape in string literal", j)
                    out.append(text[j + 1])
                    j += 2
                else:
                    out.append(text[j])
                    j += 1
            if j >= n:
                raise ParseError("unterminated string literal", i)
            tokens.append(_Token("LEAF", "".join(out), i))
            i = j + 1
        else:
            m = _IDENT.match(text, i)
            if not m:
                raise ParseError(f"unexpected character {ch!r}", i)
            tokens.append(_Token("LEAF", m.group(0), i))
            i = m.end()
    tokens.append(_Token("EOF", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token], sr: Semiring):
        self.tokens = tokens
        self.pos = 0
        self.sr = sr

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expr(self) -> Tree:
        out = self.term()
        while self.peek().kind == "PLUS":
            self.next()
            out = Node(self.sr.zero, out, self.term())
        return out

    def term(self) -> Tree:
        out = self.factor()
        while self.peek().kind in ("ARROW", "LABEL"):
            label = self.next().value
            out = Node(label, out, self.factor())
        return out

    def factor(self) -> Tree:
        tok = self.next()
        if tok.kind == "LEAF":
            return Leaf(tok.value)
        if tok.kind == "LPAREN":
            inner = self.expr()
            closer = self.next()
            if closer.kind != "RPAREN":
                raise ParseError("expected ')'", closer.position)
            return inner
        raise ParseError(f"expected a vertex or '(', found {tok.value!r}", tok.position)


def parse_expr(text: str, sr: Semiring) -> Tree:
    parser = _Parser(_tokenize(text, sr), sr)
    out = parser.expr()
    trailing = parser.peek()
    if trailing.kind != "EOF":
        raise ParseError(f"unexpected trailing input {trailing.value!r}", trailing.position)
    return out


def _leaf_text(value: Any) -> str:
    s = str(value)
    if _IDENT.fullmatch(s):
        return s
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def pretty(tree: Tree, sr: Semiring) -> str:
    """Canonical text form; parsing it reproduces the tree exactly."""

    def go(t: Tree, parenthesize_overlay: bool, parenthesize_connect: bool) -> str:
        if isinstance(t, Leaf):
            return _leaf_text(t.value)
        if sr.is_zero(t.label):
            left = go(t.left, False, False)
            right = go(t.right, True, False)  # '+' chains to the left
            text = f"{left} + {right}"
            return f"({text})" if parenthesize_overlay else text
        arrow = "->" if t.label == sr.one else f"-[{sr.render_label(t.label)}]->"
        left = go(t.left, True, False)  # arrows chain to the left
        right = go(t.right, True, True)
        text = f"{left} {arrow} {right}"
        return f"({text})" if parenthesize_connect else text

    return go(tree, False, False)
