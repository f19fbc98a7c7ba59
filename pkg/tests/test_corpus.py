from dataclasses import replace

import pytest

from lamkernel.models.corpus import CorpusConfig
from lamkernel.models.term import ZERO, App, Var, lam, v
from lamkernel.models.types import NAT, Arrow
from lamkernel.schemas.corpus_config import load_corpus_config
from lamkernel.utils.corpus import enumerate_terms, enumerate_typed_closed, random_substitutions
from lamkernel.utils.errors import ConfigError
from lamkernel.utils.substitution import identity
from lamkernel.utils.syntax import free_vars, term_size


def single_variable(max_term_size: int, system: str = "pure") -> CorpusConfig:
    return CorpusConfig(system=system, max_term_size=max_term_size, variable_pool=(Var(0),))


def test_smallest_enumerations():
    assert list(enumerate_terms(single_variable(1))) == [v(0)]
    assert list(enumerate_terms(single_variable(2))) == [v(0), lam(0, v(0))]


def test_size_three_enumeration():
    assert list(enumerate_terms(single_variable(3))) == [
        v(0), lam(0, v(0)), lam(0, lam(0, v(0))), App(v(0), v(0)),
    ]


def test_enumeration_has_no_duplicates_and_respects_size(small_config):
    terms = list(enumerate_terms(small_config))
    assert len(terms) == len(set(terms))
    assert all(term_size(t) <= small_config.max_term_size for t in terms)
    sizes = [term_size(t) for t in terms]
    assert sizes == sorted(sizes)


def test_closed_enumeration(small_config):
    closed = list(enumerate_terms(small_config, closed=True))
    assert closed
    assert all(free_vars(t) == [] for t in closed)
    assert set(closed) <= set(enumerate_terms(small_config))


def test_typed_closed_corpus(small_config):
    typed = dict(enumerate_typed_closed(small_config))
    assert typed[lam(0, v(0))] == Arrow(NAT, NAT)
    assert typed[ZERO] == NAT
    assert App(ZERO, ZERO) not in typed
    assert all(free_vars(t) == [] for t in typed)


def test_pure_typed_corpus(pure_config):
    typed = dict(enumerate_typed_closed(pure_config))
    assert len(typed) == 7
    assert typed[lam(0, lam(0, v(0)))] == Arrow(NAT, Arrow(NAT, NAT))
    assert typed[lam(0, App(v(0), lam(0, v(0))))] == Arrow(Arrow(Arrow(NAT, NAT), NAT), NAT)
    assert typed[App(lam(0, v(0)), lam(0, v(0)))] == Arrow(NAT, NAT)
    assert lam(0, App(v(0), v(0))) not in typed


def test_random_substitutions(small_config):
    pool = random_substitutions(small_config, small_config.variable_pool)
    assert len(pool) == small_config.substitution_pool_size
    assert pool[0] == identity()
    assert pool == random_substitutions(small_config, small_config.variable_pool)
    for sigma in pool:
        for x, image in sigma.overrides():
            assert x in small_config.variable_pool
            assert term_size(image) <= small_config.image_size


def test_substitutions_depend_on_seed(small_config):
    other = replace(small_config, seed=small_config.seed + 1, substitution_pool_size=30)
    same = replace(small_config, substitution_pool_size=30)
    assert random_substitutions(other, other.variable_pool) != random_substitutions(
        same, same.variable_pool)


def test_config_schema_defaults():
    cfg = load_corpus_config({})
    assert cfg == CorpusConfig()
    assert cfg.variable_pool == (Var(0), Var(1), Var(2))
    assert cfg.image_size == 3


def test_config_schema_pool_and_validation():
    cfg = load_corpus_config({"variable_pool": [2, 5], "max_term_size": 2})
    assert cfg.variable_pool == (Var(2), Var(5))
    assert cfg.image_size == 2
    with pytest.raises(ConfigError) as excinfo:
        load_corpus_config({"max_term_size": 0, "system": "lisp"})
    assert set(excinfo.value.messages) == {"max_term_size", "system"}
    with pytest.raises(ConfigError):
        load_corpus_config({"variable_pool": [1, 1]})
    with pytest.raises(ConfigError):
        load_corpus_config({"variables": 0})
