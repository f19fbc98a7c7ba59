"""Concrete syntax for terms, types, typing contexts and substitution maps.

Grammar (terms):  term := lam | app ;  lam := ("\\" | "λ") var "." term ;
                  app := atom { atom } ;  atom := var | const | "(" term ")"
Grammar (types):  type := atom_t [ "->" type ] ;  atom_t := "nat" | "(" type ")"
Contexts are ``v0:nat,v1:nat -> nat`` (leftmost binding is the most recent) and
substitution maps are ``v0:=TERM,v1:=TERM``.
"""
import logging
from typing import Iterable, List

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError
from lark.lexer import PatternStr

from lamkernel.models.term import EMPTY, SYSTEM_T, Abs, App, ConstAlphabet, Const, Term, Var, VarRef
from lamkernel.models.types import NAT, Arrow, Context, SimpleType
from lamkernel.utils.errors import ParseError
from lamkernel.utils.substitution import Subst

logger = logging.getLogger(__name__)

GRAMMAR = r"""
?term: lam
     | app
lam: LAMBDA VAR "." term
?app: atom
    | app atom -> application
?atom: VAR -> var
     | "0" -> zero
     | "S" -> succ
     | "Rec" -> rec
     | "(" term ")"

?type: atom_t "->" type -> arrow
     | atom_t
?atom_t: "nat" -> nat
       | "(" type ")"

ctx: [binding ("," binding)*]
binding: VAR ":" type

smap: [override ("," override)*]
override: VAR ":=" term

LAMBDA: "\\" | "λ"
VAR: /v[0-9]+/

%import common.WS
%ignore WS
"""

_lark = Lark(GRAMMAR, parser="lalr", start=["term", "type", "ctx", "smap"],
             propagate_positions=True, maybe_placeholders=False)


class _ToKernel(Transformer):
    """Builds kernel values, rejecting constants outside the selected alphabet."""

    def __init__(self, alphabet: ConstAlphabet):
        super().__init__()
        self.alphabet = alphabet

    def _const(self, meta, printed: str) -> Const:
        symbol = self.alphabet.by_name(printed)
        if symbol is None:
            raise ParseError(f"Constant {printed} is not in the {self.alphabet.name} alphabet",
                             meta.line, meta.column)
        return Const(symbol)

    def var(self, children) -> VarRef:
        return VarRef(_var(children[0]))

    @v_args(meta=True)
    def zero(self, meta, children) -> Const:
        return self._const(meta, "0")

    @v_args(meta=True)
    def succ(self, meta, children) -> Const:
        return self._const(meta, "S")

    @v_args(meta=True)
    def rec(self, meta, children) -> Const:
        return self._const(meta, "Rec")

    def lam(self, children) -> Abs:
        _, var, body = children
        return Abs(_var(var), body)

    def application(self, children) -> App:
        fun, arg = children
        return App(fun, arg)

    def nat(self, children):
        return NAT

    def arrow(self, children) -> Arrow:
        dom, cod = children
        return Arrow(dom, cod)

    def binding(self, children):
        var, t = children
        return _var(var), t

    def ctx(self, children) -> Context:
        return Context.of(children)

    def override(self, children):
        var, term = children
        return _var(var), term

    def smap(self, children) -> Subst:
        return Subst(dict(children))


def _var(token: Token) -> Var:
    return Var(int(token[1:]))


def _describe(names: Iterable[str]) -> List[str]:
    described = []
    for name in names:
        try:
            pattern = _lark.get_terminal(name).pattern
        except KeyError:
            described.append(name)
            continue
        described.append(f'"{pattern.value}"' if isinstance(pattern, PatternStr) else name)
    return described


def _parse(text: str, start: str, alphabet: ConstAlphabet):
    try:
        tree = _lark.parse(text, start=start)
    except UnexpectedInput as e:
        if isinstance(e, UnexpectedCharacters):
            expected = e.allowed
            message = f"Unexpected character {text[e.pos_in_stream]!r}"
        elif isinstance(e, UnexpectedEOF):
            expected = e.expected
            message = "Unexpected end of input"
        else:
            expected = e.expected
            message = f"Unexpected token {e.token!r}"
        line, column = e.line, e.column
        if not isinstance(line, int) or line < 1:
            lines = text.split("\n")
            line, column = len(lines), len(lines[-1]) + 1
        logger.debug("Failed to parse %r as %s: %s", text, start, e)
        raise ParseError(message, line, column, _describe(expected or ()))
    try:
        return _ToKernel(alphabet).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, ParseError):
            raise e.orig_exc
        raise


def parse_term(text: str, alphabet: ConstAlphabet = SYSTEM_T) -> Term:
    return _parse(text, "term", alphabet)


def parse_type(text: str) -> SimpleType:
    return _parse(text, "type", EMPTY)


def parse_context(text: str) -> Context:
    return _parse(text, "ctx", EMPTY)


def parse_substitution(text: str, alphabet: ConstAlphabet = SYSTEM_T) -> Subst:
    """Parse ``v0:=TERM,...``; a variable listed twice keeps its last image."""
    return _parse(text, "smap", alphabet)
