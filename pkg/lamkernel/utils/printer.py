"""Minimal-parentheses rendering of terms, types and contexts."""
from lamkernel.models.term import Abs, App, Const, Term, VarRef
from lamkernel.models.types import Context, MetaType

BACKSLASH = "\\"
LAMBDA = "λ"


def print_term(term: Term, binder: str = BACKSLASH) -> str:
    """Print ``term`` so that ``parse_term`` gives it back unchanged.

    A lambda body extends as far right as possible and application associates
    to the left, so only abstractions in function position and non-atomic
    arguments need parentheses.
    """
    if isinstance(term, (Const, VarRef)):
        return str(term)
    if isinstance(term, Abs):
        return f"{binder}{term.var}. {print_term(term.body, binder)}"
    fun = print_term(term.fun, binder)
    if isinstance(term.fun, Abs):
        fun = f"({fun})"
    arg = print_term(term.arg, binder)
    if isinstance(term.arg, (Abs, App)):
        arg = f"({arg})"
    return f"{fun} {arg}"


def print_type(t: MetaType) -> str:
    return str(t)


def print_context(ctx: Context) -> str:
    return ",".join(f"{x}:{print_type(t)}" for x, t in ctx.bindings)
