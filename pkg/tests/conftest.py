import pytest

from lamkernel.models.corpus import CorpusConfig
from lamkernel.models.term import App, Var, lam, v


@pytest.fixture
def identity_fn():
    return lam(0, v(0))


@pytest.fixture
def omega():
    return App(lam(0, App(v(0), v(0))), lam(0, App(v(0), v(0))))


@pytest.fixture
def small_config():
    return CorpusConfig(
        system="t",
        max_term_size=3,
        typed_max_term_size=5,
        variable_pool=(Var(0), Var(1)),
        substitution_pool_size=5,
        seed=7,
        node_budget=2000,
        fuel=10000,
        image_max_term_size=2,
    )


@pytest.fixture
def pure_config():
    return CorpusConfig(
        system="pure",
        max_term_size=3,
        typed_max_term_size=5,
        variable_pool=(Var(0),),
        substitution_pool_size=3,
        node_budget=2000,
    )
