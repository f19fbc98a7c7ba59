from dataclasses import dataclass, field
from typing import Tuple

from lamkernel.calculi import Calculus, get_calculus
from lamkernel.models.term import Var


def variable_range(n: int) -> Tuple[Var, ...]:
    return tuple(Var(i) for i in range(n))


@dataclass(frozen=True)
class CorpusConfig:
    """Bounds and seed for the enumerated corpus the lemma suite runs over.

    Build instances through ``CorpusConfigSchema`` to get validation.
    """
    system: str = "t"
    max_term_size: int = 7
    typed_max_term_size: int = 9
    variable_pool: Tuple[Var, ...] = field(default_factory=lambda: variable_range(3))
    substitution_pool_size: int = 50
    seed: int = 0
    node_budget: int = 100000
    fuel: int = 10000
    workers: int = 1
    image_max_term_size: int = 3
    max_reported_failures: int = 20
    rec_spine_limit: int = 200

    @property
    def calculus(self) -> Calculus:
        return get_calculus(self.system)

    @property
    def image_size(self) -> int:
        return min(self.image_max_term_size, self.max_term_size)
