"""Simple types, metavariables, contexts and constant signatures."""
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, Optional, Tuple, Union

from lamkernel.models.term import TConst, Var


@dataclass(frozen=True)
class Base:
    """The single base type; printed ``nat``."""

    def __str__(self) -> str:
        return "nat"


@dataclass(frozen=True)
class Arrow:
    dom: "MetaType"
    cod: "MetaType"

    def __str__(self) -> str:
        dom = f"({self.dom})" if isinstance(self.dom, Arrow) else str(self.dom)
        return f"{dom} -> {self.cod}"


@dataclass(frozen=True)
class Meta:
    """Metavariable ``?index`` used during inference and in type schemes."""
    index: int

    def __str__(self) -> str:
        return f"?{self.index}"


SimpleType = Union[Base, Arrow]
MetaType = Union[Base, Arrow, Meta]

NAT = Base()


def arrows(*types: MetaType) -> MetaType:
    """Right-associated arrow chain ``t0 -> t1 -> ... -> tn``."""
    result = types[-1]
    for dom in reversed(types[:-1]):
        result = Arrow(dom, result)
    return result


def metas_of(t: MetaType) -> Tuple[Meta, ...]:
    """Metavariables of ``t`` in left-to-right first-occurrence order."""
    seen = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Meta):
            if node not in seen:
                seen.append(node)
        elif isinstance(node, Arrow):
            stack.append(node.cod)
            stack.append(node.dom)
    return tuple(seen)


def is_ground(t: MetaType) -> bool:
    return not metas_of(t)


@dataclass(frozen=True)
class Context:
    """Variable declarations searched from the most recent binding.

    ``bindings[0]`` is the most recent declaration; duplicates are allowed and
    the first match wins.
    """
    bindings: Tuple[Tuple[Var, MetaType], ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[Tuple[Var, MetaType]]) -> "Context":
        return cls(tuple(pairs))

    def extend(self, x: Var, t: MetaType) -> "Context":
        return Context(((x, t),) + self.bindings)

    def lookup(self, x: Var) -> Optional[MetaType]:
        for y, t in self.bindings:
            if y == x:
                return t
        return None

    def __len__(self) -> int:
        return len(self.bindings)

    def __str__(self) -> str:
        return ", ".join(f"{x}:{t}" for x, t in self.bindings)


@dataclass(frozen=True)
class TypeScheme:
    """A type with schematic metavariables, instantiated afresh at each use."""
    body: MetaType

    @property
    def quantified(self) -> Tuple[Meta, ...]:
        return metas_of(self.body)

    def __str__(self) -> str:
        return str(self.body)


@dataclass(frozen=True)
class ConstSignature:
    name: str
    schemes: Dict[Hashable, TypeScheme] = field(default_factory=dict)

    def scheme_for(self, symbol) -> Optional[TypeScheme]:
        return self.schemes.get(symbol)

    def __hash__(self) -> int:
        return hash(self.name)


_ALPHA = Meta(0)

SYSTEM_T_SIGNATURE = ConstSignature("t", {
    TConst.ZERO: TypeScheme(NAT),
    TConst.SUCC: TypeScheme(Arrow(NAT, NAT)),
    TConst.REC: TypeScheme(arrows(_ALPHA, arrows(NAT, _ALPHA, _ALPHA), NAT, _ALPHA)),
})

EMPTY_SIGNATURE = ConstSignature("pure", {})
