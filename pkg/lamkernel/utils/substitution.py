"""Multiple substitutions with unconditional binder renaming.

A substitution maps every variable to a term; only finitely many variables
carry an override, the rest map to themselves. The action on a term renames
each binder to the first name that is fresh for the restriction of the
substitution to that abstraction, so no free variable is ever captured.
"""
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from lamkernel.models.term import Abs, App, Const, Term, Var, VarRef
from lamkernel.utils.syntax import free_vars, is_fresh


class Subst:
    """Identity-almost-everywhere map from variables to terms (value semantics)."""

    __slots__ = ("_overrides",)

    def __init__(self, overrides: Optional[Mapping[Var, Term]] = None):
        self._overrides: Dict[Var, Term] = dict(overrides or {})

    def __call__(self, x: Var) -> Term:
        image = self._overrides.get(x)
        return VarRef(x) if image is None else image

    def updated(self, x: Var, term: Term) -> "Subst":
        overrides = dict(self._overrides)
        overrides[x] = term
        return Subst(overrides)

    def overrides(self) -> Iterator[Tuple[Var, Term]]:
        return iter(sorted(self._overrides.items(), key=lambda item: item[0]))

    def domain(self) -> List[Var]:
        """Variables whose image differs from themselves."""
        return [x for x, image in self.overrides() if image != VarRef(x)]

    def agrees_with(self, other: "Subst", on: Iterable[Var]) -> bool:
        return all(self(x) == other(x) for x in on)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subst):
            return NotImplemented
        keys = set(self._overrides) | set(other._overrides)
        return self.agrees_with(other, keys)

    def __hash__(self) -> int:
        return hash(frozenset((x, self(x)) for x in self.domain()))

    def __repr__(self) -> str:
        body = ", ".join(f"{x}:={image}" for x, image in self.overrides())
        return f"Subst({body})"


def identity() -> Subst:
    return Subst()


def update(sigma: Subst, x: Var, term: Term) -> Subst:
    return sigma.updated(x, term)


def apply_var(sigma: Subst, x: Var) -> Term:
    return sigma(x)


def fresh_not_in(xs: Iterable[Var]) -> Var:
    """The variable with the smallest index not occurring in ``xs``."""
    taken = {x.index for x in xs}
    index = 0
    while index in taken:
        index += 1
    return Var(index)


def choose_fresh(sigma: Subst, term: Term) -> Var:
    avoid: List[Var] = []
    for y in free_vars(term):
        avoid.extend(free_vars(sigma(y)))
    return fresh_not_in(avoid)


def restriction_fresh(y: Var, sigma: Subst, term: Term) -> bool:
    return all(is_fresh(y, sigma(x)) for x in free_vars(term))


def subst(term: Term, sigma: Subst) -> Term:
    if isinstance(term, Const):
        return term
    if isinstance(term, VarRef):
        return sigma(term.var)
    if isinstance(term, App):
        return App(subst(term.fun, sigma), subst(term.arg, sigma))
    # Every binder is renamed, even when no capture is possible.
    y = choose_fresh(sigma, term)
    return Abs(y, subst(term.body, update(sigma, term.var, VarRef(y))))


def subst1(term: Term, replacement: Term, x: Var) -> Term:
    """Unary substitution ``term[replacement / x]``."""
    return subst(term, update(identity(), x, replacement))
