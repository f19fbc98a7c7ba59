"""Contraction rule sets, one-step reduct enumeration and meta-property checkers.

A rule set only knows how to contract a term viewed as a redex at the root.
Reduction is its compatible closure: a redex may be contracted at any depth,
under binders and on either side of an application.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from lamkernel.models.step import Move, Path, RuleTag, Step
from lamkernel.models.term import Abs, App, Const, TConst, Term, VarRef, apply
from lamkernel.utils.alpha import alpha_eq
from lamkernel.utils.substitution import Subst, subst, subst1
from lamkernel.utils.syntax import is_fresh, positions, replace_at, spine, subterm_at

logger = logging.getLogger(__name__)

Contractum = Tuple[Term, RuleTag]


class RuleSet:
    """Root contraction relation; subclasses enumerate contracta of root redexes."""
    name = "none"
    tags: Tuple[RuleTag, ...] = ()

    def root_contracta(self, term: Term) -> List[Contractum]:
        return []

    def __repr__(self) -> str:
        return f"<RuleSet {self.name}>"


class BetaRules(RuleSet):
    name = "beta"
    tags = (RuleTag.BETA,)

    def root_contracta(self, term: Term) -> List[Contractum]:
        if isinstance(term, App) and isinstance(term.fun, Abs):
            redex = term.fun
            return [(subst1(redex.body, term.arg, redex.var), RuleTag.BETA)]
        return []


class SystemTRules(BetaRules):
    """Beta plus the two primitive recursion rules on ``Rec G H N``."""
    name = "systemt"
    tags = (RuleTag.BETA, RuleTag.REC0, RuleTag.RECS)

    def root_contracta(self, term: Term) -> List[Contractum]:
        contracta = super().root_contracta(term)
        if contracta:
            return contracta
        head, args = spine(term)
        if head != Const(TConst.REC) or len(args) != 3:
            return []
        g, h, n = args
        if n == Const(TConst.ZERO):
            return [(g, RuleTag.REC0)]
        if isinstance(n, App) and n.fun == Const(TConst.SUCC):
            predecessor = n.arg
            return [(apply(h, predecessor, apply(head, g, h, predecessor)), RuleTag.RECS)]
        return []


beta_rules = BetaRules()
systemt_rules = SystemTRules()


def root_contracta(rules: RuleSet, term: Term) -> List[Contractum]:
    return rules.root_contracta(term)


def _reducts(rules: RuleSet, term: Term) -> List[Tuple[Term, RuleTag, Path]]:
    found = [(contractum, tag, ()) for contractum, tag in rules.root_contracta(term)]
    if isinstance(term, Abs):
        for target, tag, path in _reducts(rules, term.body):
            found.append((Abs(term.var, target), tag, (Move.INTO_BODY,) + path))
    elif isinstance(term, App):
        for target, tag, path in _reducts(rules, term.fun):
            found.append((App(target, term.arg), tag, (Move.INTO_FUN,) + path))
        for target, tag, path in _reducts(rules, term.arg):
            found.append((App(term.fun, target), tag, (Move.INTO_ARG,) + path))
    return found


def one_step_reducts(rules: RuleSet, term: Term) -> List[Step]:
    """All one-step reducts: root first, then function/body position, then argument."""
    return [Step(term, target, tag, path) for target, tag, path in _reducts(rules, term)]


def reducts_by_context(rules: RuleSet, term: Term) -> Set[Tuple[Term, Path]]:
    """Independent oracle: try every one-hole context of ``term``."""
    found = set()
    for path, sub in positions(term):
        for contractum, _ in rules.root_contracta(sub):
            found.add((replace_at(term, path, contractum), path))
    return found


def step_is_sound(rules: RuleSet, step: Step) -> bool:
    """Splicing the root contractum at ``step.path`` rebuilds ``step.target``."""
    try:
        redex = subterm_at(step.source, step.path)
    except ValueError:
        return False
    return any(tag == step.tag and replace_at(step.source, step.path, contractum) == step.target
               for contractum, tag in rules.root_contracta(redex))


def _alpha_witness(candidates: Iterable[Step], goal: Term) -> Optional[Term]:
    for candidate in candidates:
        if alpha_eq(candidate.target, goal):
            return candidate.target
    return None


def check_compat_subst(rules: RuleSet, step: Step, sigma: Subst) -> Optional[Term]:
    """Witness P with ``source•σ ↝ P`` and ``P ~α target•σ``, or None."""
    return _alpha_witness(one_step_reducts(rules, subst(step.source, sigma)),
                          subst(step.target, sigma))


def check_comm_alpha(rules: RuleSet, term: Term, step: Step) -> Optional[Term]:
    """Witness Q with ``term ↝ Q`` and ``Q ~α step.target``, or None."""
    return _alpha_witness(one_step_reducts(rules, term), step.target)


def check_preserves_fresh(rules: RuleSet, x, step: Step) -> bool:
    return not is_fresh(x, step.source) or is_fresh(x, step.target)


def neutral_head_check(rules: RuleSet, term: Term) -> bool:
    """Variable-headed spines never form a root redex."""
    head, _ = spine(term)
    return not isinstance(head, VarRef) or not rules.root_contracta(term)


def is_neutral(rules: RuleSet, term: Term, arguments: Sequence[Term], max_arguments: int = 2) -> bool:
    """Bounded neutrality: no ``term N1 .. Nk`` (1 <= k <= max_arguments) is a root redex.

    Arguments are drawn from ``arguments``; the check is exhaustive over that pool.
    """
    frontier = [term]
    for _ in range(max_arguments):
        extended = [App(vector, arg) for vector in frontier for arg in arguments]
        for candidate in extended:
            if rules.root_contracta(candidate):
                logger.debug("%r is not neutral: %s is a redex", term, candidate)
                return False
        frontier = extended
    return True
