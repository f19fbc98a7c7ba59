"""Enumerated term corpora and seeded random substitution pools."""
import logging
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from faker import Faker

from lamkernel.models.corpus import CorpusConfig
from lamkernel.models.term import Abs, App, Const, ConstAlphabet, Term, Var, VarRef
from lamkernel.models.types import Context, SimpleType
from lamkernel.utils.errors import TypingError
from lamkernel.utils.substitution import Subst, identity
from lamkernel.utils.type_checker import ground, infer

logger = logging.getLogger(__name__)

Scope = Optional[FrozenSet[Var]]


class TermEnumerator:
    """Terms of an exact size over a variable pool and constant alphabet.

    Within one size the order is variables (pool order), constants, abstractions
    (binder, then body), applications (by function size). With a scope, only
    terms whose free variables lie in it are produced.
    """

    def __init__(self, pool: Sequence[Var], alphabet: ConstAlphabet):
        self.pool = tuple(pool)
        self.constants = [Const(symbol) for symbol in alphabet.symbols]
        self._memo: Dict[Tuple[int, Scope], List[Term]] = {}

    def of_size(self, n: int, scope: Scope = None) -> List[Term]:
        key = (n, scope)
        if key in self._memo:
            return self._memo[key]
        if n == 1:
            terms: List[Term] = [VarRef(x) for x in self.pool if scope is None or x in scope]
            terms.extend(self.constants)
        else:
            terms = []
            for x in self.pool:
                inner = None if scope is None else scope | {x}
                terms.extend(Abs(x, body) for body in self.of_size(n - 1, inner))
            for k in range(1, n - 1):
                args = self.of_size(n - 1 - k, scope)
                for fun in self.of_size(k, scope):
                    terms.extend(App(fun, arg) for arg in args)
        self._memo[key] = terms
        return terms

    def up_to(self, max_size: int, scope: Scope = None) -> Iterator[Term]:
        for n in range(1, max_size + 1):
            yield from self.of_size(n, scope)


@lru_cache(maxsize=8)
def enumerator_for(pool: Tuple[Var, ...], alphabet: ConstAlphabet) -> TermEnumerator:
    return TermEnumerator(pool, alphabet)


def enumerate_terms(cfg: CorpusConfig, max_size: Optional[int] = None,
                    closed: bool = False) -> Iterator[Term]:
    """Every term up to ``max_size`` (default ``cfg.max_term_size``), size-ordered, no duplicates."""
    enumerator = enumerator_for(tuple(cfg.variable_pool), cfg.calculus.alphabet)
    scope = frozenset() if closed else None
    return enumerator.up_to(cfg.max_term_size if max_size is None else max_size, scope)


def enumerate_typed_closed(cfg: CorpusConfig,
                           max_size: Optional[int] = None) -> Iterator[Tuple[Term, SimpleType]]:
    """Closed well-typed terms with their principal type grounded at ``nat``."""
    signature = cfg.calculus.signature
    empty = Context()
    size = cfg.typed_max_term_size if max_size is None else max_size
    for term in enumerate_terms(cfg, size, closed=True):
        try:
            principal = infer(signature, empty, term)
        except TypingError:
            continue
        yield term, ground(principal)


def random_substitutions(cfg: CorpusConfig, domain: Sequence[Var]) -> List[Subst]:
    """``cfg.substitution_pool_size`` substitutions, identity first, fixed by ``cfg.seed``.

    Each override maps a domain variable to a corpus term no larger than
    ``cfg.image_size``.
    """
    fake = Faker()
    fake.seed_instance(cfg.seed)
    images = list(enumerate_terms(cfg, cfg.image_size))
    domain = list(domain)
    pool = [identity()]
    while len(pool) < cfg.substitution_pool_size:
        if not domain:
            pool.append(identity())
            continue
        count = fake.random_int(min=1, max=len(domain))
        chosen = sorted(fake.random_sample(elements=domain, length=count))
        pool.append(Subst({x: fake.random_element(elements=images) for x in chosen}))
    logger.debug("Generated %d substitutions from seed %d", len(pool), cfg.seed)
    return pool
