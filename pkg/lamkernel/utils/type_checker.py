"""Simple-type inference and checking for STLC and System T.

Terms carry no annotations, so inference assigns a fresh metavariable to every
binder and to every schematic constant occurrence and solves application
constraints by first-order unification with an occurs check.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from lamkernel.models.term import Abs, App, Const, Term, Var, VarRef
from lamkernel.models.types import (
    NAT, Arrow, ConstSignature, Context, Meta, MetaType, SimpleType, is_ground, metas_of,
)
from lamkernel.utils.errors import OccursCheck, TypingError, UnboundVariable, UnificationClash

logger = logging.getLogger(__name__)


def lookup(ctx: Context, x: Var) -> Optional[MetaType]:
    return ctx.lookup(x)


def substitute_metas(t: MetaType, mapping: Dict[Meta, MetaType]) -> MetaType:
    if isinstance(t, Meta):
        return mapping.get(t, t)
    if isinstance(t, Arrow):
        return Arrow(substitute_metas(t.dom, mapping), substitute_metas(t.cod, mapping))
    return t


def canonical(t: MetaType) -> MetaType:
    """Renumber metavariables ``?0, ?1, ...`` by first occurrence."""
    return substitute_metas(t, {meta: Meta(i) for i, meta in enumerate(metas_of(t))})


def ground(t: MetaType, default: SimpleType = NAT) -> SimpleType:
    """Instantiate every residual metavariable at ``default``."""
    return substitute_metas(t, {meta: default for meta in metas_of(t)})


@dataclass
class Derivation:
    """A typing derivation node: ``ctx ⊢ term : type`` by ``rule``."""
    rule: str
    ctx: Context
    term: Term
    type: MetaType
    premises: Tuple["Derivation", ...] = ()


class TypeInferencer:
    """One inference run; the metavariable counter and solution are local to it."""

    def __init__(self, signature: ConstSignature):
        self.signature = signature
        self._next = 0
        self._solution: Dict[Meta, MetaType] = {}

    def fresh(self) -> Meta:
        meta = Meta(self._next)
        self._next += 1
        return meta

    def resolve(self, t: MetaType) -> MetaType:
        while isinstance(t, Meta) and t in self._solution:
            t = self._solution[t]
        return t

    def zonk(self, t: MetaType) -> MetaType:
        t = self.resolve(t)
        if isinstance(t, Arrow):
            return Arrow(self.zonk(t.dom), self.zonk(t.cod))
        return t

    def _occurs(self, meta: Meta, t: MetaType) -> bool:
        t = self.resolve(t)
        if isinstance(t, Meta):
            return t == meta
        if isinstance(t, Arrow):
            return self._occurs(meta, t.dom) or self._occurs(meta, t.cod)
        return False

    def unify(self, expected: MetaType, found: MetaType) -> None:
        a, b = self.resolve(expected), self.resolve(found)
        if a == b:
            return
        if isinstance(a, Meta) or isinstance(b, Meta):
            meta, other = (a, b) if isinstance(a, Meta) else (b, a)
            if self._occurs(meta, other):
                raise OccursCheck(meta, self.zonk(other))
            self._solution[meta] = other
            return
        if isinstance(a, Arrow) and isinstance(b, Arrow):
            self.unify(a.dom, b.dom)
            self.unify(a.cod, b.cod)
            return
        raise UnificationClash(self.zonk(expected), self.zonk(found))

    def instantiate(self, symbol) -> MetaType:
        scheme = self.signature.scheme_for(symbol)
        if scheme is None:
            raise TypingError(f"Constant {symbol} has no type in signature {self.signature.name}")
        return substitute_metas(scheme.body, {meta: self.fresh() for meta in scheme.quantified})

    def derive(self, ctx: Context, term: Term) -> Derivation:
        if isinstance(term, Const):
            return Derivation(f"const {term.symbol}", ctx, term, self.instantiate(term.symbol))
        if isinstance(term, VarRef):
            found = ctx.lookup(term.var)
            if found is None:
                raise UnboundVariable(term.var)
            return Derivation("var", ctx, term, found)
        if isinstance(term, Abs):
            dom = self.fresh()
            body = self.derive(ctx.extend(term.var, dom), term.body)
            return Derivation("abs", ctx, term, Arrow(dom, body.type), (body,))
        fun = self.derive(ctx, term.fun)
        arg = self.derive(ctx, term.arg)
        result = self.fresh()
        self.unify(Arrow(arg.type, result), fun.type)
        return Derivation("app", ctx, term, result, (fun, arg))

    def finish(self, derivation: Derivation, default: Optional[SimpleType] = None) -> Derivation:
        """Apply the solution throughout a derivation, optionally grounding residual metas."""
        def close(t: MetaType) -> MetaType:
            t = self.zonk(t)
            return ground(t, default) if default is not None else t

        return Derivation(
            derivation.rule,
            Context.of((x, close(t)) for x, t in derivation.ctx.bindings),
            derivation.term,
            close(derivation.type),
            tuple(self.finish(p, default) for p in derivation.premises),
        )


def infer(signature: ConstSignature, ctx: Context, term: Term) -> MetaType:
    """Principal type of ``term`` under ``ctx``; residual metavariables stay schematic."""
    inferencer = TypeInferencer(signature)
    derivation = inferencer.derive(ctx, term)
    return canonical(inferencer.zonk(derivation.type))


def check(signature: ConstSignature, ctx: Context, term: Term, expected: SimpleType) -> bool:
    """Whether ``ctx ⊢ term : expected`` is derivable.

    Raises the TypingError of inference when ``term`` has no type at all.
    """
    inferencer = TypeInferencer(signature)
    derivation = inferencer.derive(ctx, term)
    try:
        inferencer.unify(expected, derivation.type)
    except TypingError as e:
        logger.debug("check failed for %r: %s", term, e)
        return False
    return True


def infer_derivation(signature: ConstSignature, ctx: Context, term: Term,
                     default: SimpleType = NAT) -> Derivation:
    """A ground derivation for ``term``, residual metavariables set to ``default``."""
    inferencer = TypeInferencer(signature)
    return inferencer.finish(inferencer.derive(ctx, term), default)


def _matches(pattern: MetaType, t: MetaType, binding: Dict[Meta, MetaType]) -> bool:
    if isinstance(pattern, Meta):
        if pattern in binding:
            return binding[pattern] == t
        binding[pattern] = t
        return True
    if isinstance(pattern, Arrow):
        return (isinstance(t, Arrow) and _matches(pattern.dom, t.dom, binding)
                and _matches(pattern.cod, t.cod, binding))
    return pattern == t


def check_derivation(signature: ConstSignature, derivation: Derivation) -> bool:
    """Replay a ground derivation rule by rule, independently of inference."""
    term, t, ctx = derivation.term, derivation.type, derivation.ctx
    if not is_ground(t):
        return False
    if isinstance(term, Const):
        scheme = signature.scheme_for(term.symbol)
        return (scheme is not None and not derivation.premises
                and _matches(scheme.body, t, {}))
    if isinstance(term, VarRef):
        return not derivation.premises and ctx.lookup(term.var) == t
    if isinstance(term, Abs):
        if not isinstance(t, Arrow) or len(derivation.premises) != 1:
            return False
        body = derivation.premises[0]
        return (body.term == term.body and body.type == t.cod
                and body.ctx == ctx.extend(term.var, t.dom)
                and check_derivation(signature, body))
    if len(derivation.premises) != 2:
        return False
    fun, arg = derivation.premises
    return (fun.term == term.fun and arg.term == term.arg
            and fun.ctx == ctx and arg.ctx == ctx
            and fun.type == Arrow(arg.type, t)
            and check_derivation(signature, fun) and check_derivation(signature, arg))
