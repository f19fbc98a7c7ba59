from hypothesis import given

from lamkernel.models.step import Move, RuleTag, path_label
from lamkernel.models.term import REC, SUCC, ZERO, App, Var, apply, lam, v
from lamkernel.utils.alpha import alpha_eq
from lamkernel.utils.reduction import (
    beta_rules, check_comm_alpha, check_compat_subst, check_preserves_fresh, is_neutral,
    neutral_head_check, one_step_reducts, reducts_by_context, root_contracta, step_is_sound,
    systemt_rules,
)
from lamkernel.utils.substitution import identity, subst
from tests.strategies import substitutions, terms

ATOMS = [v(0), v(1), ZERO, SUCC, REC]


def test_beta_root_contraction(identity_fn):
    assert root_contracta(beta_rules, App(identity_fn, ZERO)) == [(ZERO, RuleTag.BETA)]
    assert root_contracta(beta_rules, App(v(0), ZERO)) == []


def test_rec_zero_and_succ():
    g, h, n = v(0), v(1), v(2)
    assert root_contracta(systemt_rules, apply(REC, g, h, ZERO)) == [(g, RuleTag.REC0)]
    assert root_contracta(systemt_rules, apply(REC, g, h, App(SUCC, n))) == [
        (apply(h, n, apply(REC, g, h, n)), RuleTag.RECS)]


def test_rec_needs_exactly_three_arguments():
    assert root_contracta(systemt_rules, apply(REC, v(0), ZERO)) == []
    assert root_contracta(systemt_rules, apply(REC, v(0), v(1), ZERO, ZERO)) == []
    assert root_contracta(systemt_rules, apply(REC, v(0), v(1), v(2))) == []
    assert root_contracta(beta_rules, apply(REC, v(0), v(1), ZERO)) == []


def test_reducts_are_ordered_root_fun_arg(identity_fn):
    term = App(identity_fn, App(identity_fn, ZERO))
    assert [s.label for s in one_step_reducts(beta_rules, term)] == ["Beta@ε", "Beta@R"]
    term = App(App(identity_fn, identity_fn), App(identity_fn, ZERO))
    steps = one_step_reducts(beta_rules, term)
    assert [s.label for s in steps] == ["Beta@L", "Beta@R"]
    assert steps[0].target == App(identity_fn, App(identity_fn, ZERO))


def test_reduction_under_binders(identity_fn):
    steps = one_step_reducts(beta_rules, lam(1, App(identity_fn, v(1))))
    assert len(steps) == 1
    assert steps[0].path == (Move.INTO_BODY,)
    assert steps[0].target == lam(1, v(1))


def test_path_label():
    assert path_label(()) == "ε"
    assert path_label((Move.INTO_FUN, Move.INTO_ARG, Move.INTO_BODY)) == "LRB"


def test_omega_contracts_to_itself(omega):
    steps = one_step_reducts(beta_rules, omega)
    assert len(steps) == 1
    assert steps[0].target == omega


def test_identity_substitution_is_not_syntactically_compatible():
    m = lam(1, App(lam(0, lam(0, v(0))), v(0)))
    n = lam(1, lam(0, v(0)))
    assert subst(m, identity()) == m
    assert subst(n, identity()) == lam(0, lam(0, v(0)))
    (step,) = one_step_reducts(beta_rules, m)
    assert step.target == n
    p = check_compat_subst(beta_rules, step, identity())
    assert p == n
    assert p != subst(n, identity())
    assert alpha_eq(p, subst(n, identity()))


def test_neutral_heads():
    assert neutral_head_check(systemt_rules, apply(v(0), ZERO, v(1)))
    assert neutral_head_check(beta_rules, v(0))


def test_bounded_neutrality(identity_fn):
    redex = App(identity_fn, ZERO)
    assert is_neutral(beta_rules, redex, ATOMS)
    assert is_neutral(beta_rules, App(redex, v(0)), ATOMS)
    assert is_neutral(systemt_rules, apply(REC, v(0), v(1), ZERO), ATOMS)
    assert not is_neutral(beta_rules, identity_fn, ATOMS)
    assert not is_neutral(systemt_rules, apply(REC, v(0)), ATOMS)
    assert is_neutral(beta_rules, apply(REC, v(0)), ATOMS)


def test_preserves_fresh_on_contraction(identity_fn):
    (step,) = one_step_reducts(beta_rules, App(lam(0, ZERO), v(1)))
    assert check_preserves_fresh(beta_rules, Var(1), step)
    assert step.target == ZERO


@given(terms())
def test_reducts_match_one_hole_contexts(term):
    for rules in (beta_rules, systemt_rules):
        steps = one_step_reducts(rules, term)
        assert {(s.target, s.path) for s in steps} == reducts_by_context(rules, term)
        assert all(step_is_sound(rules, s) for s in steps)


@given(terms(max_leaves=7), substitutions())
def test_reduction_is_compatible_with_substitution(term, sigma):
    for rules in (beta_rules, systemt_rules):
        for step in one_step_reducts(rules, term):
            assert check_compat_subst(rules, step, sigma) is not None
            for x in (Var(0), Var(1), Var(2)):
                assert check_preserves_fresh(rules, x, step)


@given(terms(max_leaves=7))
def test_reduction_commutes_with_alpha(term):
    variant = subst(term, identity())
    for rules in (beta_rules, systemt_rules):
        for step in one_step_reducts(rules, term):
            witness = check_comm_alpha(rules, variant, step)
            assert witness is not None
            assert alpha_eq(witness, step.target)
        assert neutral_head_check(rules, term)
