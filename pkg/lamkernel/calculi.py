from dataclasses import dataclass
from typing import Dict

from lamkernel.models.term import EMPTY, SYSTEM_T, ConstAlphabet
from lamkernel.models.types import EMPTY_SIGNATURE, SYSTEM_T_SIGNATURE, ConstSignature
from lamkernel.utils.reduction import RuleSet, beta_rules, systemt_rules


@dataclass(frozen=True)
class Calculus:
    """A constant alphabet together with its contraction rules and typing signature."""
    name: str
    alphabet: ConstAlphabet
    rules: RuleSet
    signature: ConstSignature


PURE = Calculus("pure", EMPTY, beta_rules, EMPTY_SIGNATURE)
SYSTEM_T_CALCULUS = Calculus("t", SYSTEM_T, systemt_rules, SYSTEM_T_SIGNATURE)

CALCULI: Dict[str, Calculus] = {c.name: c for c in (PURE, SYSTEM_T_CALCULUS)}


def get_calculus(name: str) -> Calculus:
    try:
        return CALCULI[name]
    except KeyError:
        raise ValueError(f"Unknown system {name!r}; choose one of {', '.join(CALCULI)}")
