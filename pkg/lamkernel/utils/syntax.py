"""Free/fresh variable queries, spines and positions over terms."""
from typing import Iterator, List, Tuple

from lamkernel.models.step import Move, Path
from lamkernel.models.term import Abs, App, Const, Term, Var, VarRef


def free_vars(term: Term) -> List[Var]:
    """Free variables in left-to-right first-free-occurrence order, without duplicates."""
    found: List[Var] = []
    seen = set()
    # (term, bound variables in scope)
    stack = [(term, frozenset())]
    while stack:
        node, bound = stack.pop()
        if isinstance(node, VarRef):
            if node.var not in bound and node.var not in seen:
                seen.add(node.var)
                found.append(node.var)
        elif isinstance(node, Abs):
            stack.append((node.body, bound | {node.var}))
        elif isinstance(node, App):
            stack.append((node.arg, bound))
            stack.append((node.fun, bound))
    return found


def occurs_free(x: Var, term: Term) -> bool:
    if isinstance(term, VarRef):
        return term.var == x
    if isinstance(term, Abs):
        return term.var != x and occurs_free(x, term.body)
    if isinstance(term, App):
        return occurs_free(x, term.fun) or occurs_free(x, term.arg)
    return False


def is_fresh(x: Var, term: Term) -> bool:
    return not occurs_free(x, term)


def spine(term: Term) -> Tuple[Term, List[Term]]:
    """Split ``M N1 ... Nn`` into its non-application head and its arguments."""
    args: List[Term] = []
    while isinstance(term, App):
        args.append(term.arg)
        term = term.fun
    args.reverse()
    return term, args


def term_size(term: Term) -> int:
    size = 0
    stack = [term]
    while stack:
        node = stack.pop()
        size += 1
        if isinstance(node, Abs):
            stack.append(node.body)
        elif isinstance(node, App):
            stack.append(node.fun)
            stack.append(node.arg)
    return size


def count_const(symbol, term: Term) -> int:
    """Number of ``Const(symbol)`` nodes in ``term``."""
    count = 0
    stack = [term]
    while stack:
        node = stack.pop()
        if isinstance(node, Const):
            count += node.symbol == symbol
        elif isinstance(node, Abs):
            stack.append(node.body)
        elif isinstance(node, App):
            stack.append(node.fun)
            stack.append(node.arg)
    return count


def positions(term: Term, prefix: Path = ()) -> Iterator[Tuple[Path, Term]]:
    """Every (path, subterm) pair of ``term``, the root first."""
    yield prefix, term
    if isinstance(term, Abs):
        yield from positions(term.body, prefix + (Move.INTO_BODY,))
    elif isinstance(term, App):
        yield from positions(term.fun, prefix + (Move.INTO_FUN,))
        yield from positions(term.arg, prefix + (Move.INTO_ARG,))


def subterm_at(term: Term, path: Path) -> Term:
    for move in path:
        if move is Move.INTO_BODY and isinstance(term, Abs):
            term = term.body
        elif move is Move.INTO_FUN and isinstance(term, App):
            term = term.fun
        elif move is Move.INTO_ARG and isinstance(term, App):
            term = term.arg
        else:
            raise ValueError(f"path {path} does not address a subterm")
    return term


def replace_at(term: Term, path: Path, replacement: Term) -> Term:
    if not path:
        return replacement
    move, rest = path[0], path[1:]
    if move is Move.INTO_BODY and isinstance(term, Abs):
        return Abs(term.var, replace_at(term.body, rest, replacement))
    if move is Move.INTO_FUN and isinstance(term, App):
        return App(replace_at(term.fun, rest, replacement), term.arg)
    if move is Move.INTO_ARG and isinstance(term, App):
        return App(term.fun, replace_at(term.arg, rest, replacement))
    raise ValueError(f"path {path} does not address a subterm")
