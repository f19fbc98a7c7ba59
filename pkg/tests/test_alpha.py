from hypothesis import given

from lamkernel.models.term import REC, SUCC, ZERO, App, Var, lam, v
from lamkernel.utils.alpha import alpha_eq
from lamkernel.utils.substitution import identity, subst, subst1
from lamkernel.utils.syntax import free_vars
from tests.strategies import terms


def test_bound_names_do_not_matter():
    assert alpha_eq(lam(0, v(0)), lam(1, v(1)))
    assert alpha_eq(lam(0, lam(1, App(v(0), v(1)))), lam(2, lam(0, App(v(2), v(0)))))


def test_free_names_matter():
    assert not alpha_eq(lam(0, v(1)), lam(1, v(1)))
    assert not alpha_eq(v(0), v(1))


def test_constants_and_shapes():
    assert alpha_eq(App(SUCC, ZERO), App(SUCC, ZERO))
    assert not alpha_eq(ZERO, REC)
    assert not alpha_eq(App(v(0), v(0)), lam(0, v(0)))


def test_inner_shadowing():
    assert alpha_eq(lam(0, lam(0, v(0))), lam(1, lam(2, v(2))))
    assert not alpha_eq(lam(0, lam(0, v(0))), lam(1, lam(2, v(1))))


@given(terms())
def test_reflexive_and_identity_substitution(term):
    assert alpha_eq(term, term)
    renamed = subst(term, identity())
    assert alpha_eq(term, renamed)
    assert alpha_eq(renamed, term)


@given(terms())
def test_alpha_equivalent_terms_share_free_vars(term):
    renamed = subst(term, identity())
    assert set(free_vars(renamed)) == set(free_vars(term))


@given(terms(), terms())
def test_renaming_a_fresh_binder(body, replacement):
    y = Var(9)
    term = lam(0, body)
    if y not in free_vars(body):
        assert alpha_eq(term, lam(9, subst1(body, v(9), Var(0))))
    assert alpha_eq(subst1(term, replacement, Var(5)), subst1(subst(term, identity()), replacement, Var(5)))
