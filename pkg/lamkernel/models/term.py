"""First-order lambda terms over a pluggable constant alphabet.

Variables are natural numbers printed as ``v0, v1, ...``. Terms are immutable
values; structural equality does not identify alpha-convertible terms.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Hashable, Tuple, Union


@dataclass(frozen=True, order=True)
class Var:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"variable index must be a natural number, got {self.index}")

    def __str__(self) -> str:
        return f"v{self.index}"


class TConst(Enum):
    """Constants of System T."""
    ZERO = "0"
    SUCC = "S"
    REC = "Rec"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ConstAlphabet:
    name: str
    symbols: Tuple[Hashable, ...]

    def __contains__(self, symbol) -> bool:
        return symbol in self.symbols

    def by_name(self, printed: str):
        """Resolve a printed constant name, or None if the alphabet lacks it."""
        for symbol in self.symbols:
            if str(symbol) == printed:
                return symbol
        return None


EMPTY = ConstAlphabet("pure", ())
SYSTEM_T = ConstAlphabet("t", tuple(TConst))


@dataclass(frozen=True)
class Const:
    symbol: Hashable

    def __str__(self) -> str:
        return str(self.symbol)


@dataclass(frozen=True)
class VarRef:
    var: Var

    def __str__(self) -> str:
        return str(self.var)


@dataclass(frozen=True)
class Abs:
    var: Var
    body: "Term"


@dataclass(frozen=True)
class App:
    fun: "Term"
    arg: "Term"


Term = Union[Const, VarRef, Abs, App]


def v(index: int) -> VarRef:
    """Shorthand for ``VarRef(Var(index))``."""
    return VarRef(Var(index))


def lam(index: int, body: Term) -> Abs:
    return Abs(Var(index), body)


def apply(head: Term, *args: Term) -> Term:
    """Left-associated application ``head args[0] ... args[n-1]``."""
    term = head
    for arg in args:
        term = App(term, arg)
    return term


ZERO = Const(TConst.ZERO)
SUCC = Const(TConst.SUCC)
REC = Const(TConst.REC)
