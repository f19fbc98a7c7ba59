from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, NamedTuple, Optional

import networkx as nx

from lamkernel.models.step import Step
from lamkernel.models.term import Term


class GraphStatus(Enum):
    FINITE = "finite"
    CYCLE_FOUND = "cycle"
    BUDGET_EXHAUSTED = "unknown"

    def __str__(self) -> str:
        return self.value


class GraphSummary(NamedTuple):
    """What is left of an exploration once its graph is dropped."""
    status: GraphStatus
    height: Optional[int]

    @property
    def is_finite(self) -> bool:
        return self.status is GraphStatus.FINITE


@dataclass
class ReductionGraph:
    """All many-step reducts of ``root`` found by exhaustive exploration.

    Nodes are terms up to syntactic identity; parallel edges between the same
    pair of terms are keyed by the label of their step.
    """
    root: Term
    graph: nx.MultiDiGraph
    status: GraphStatus
    cycle: List[Step] = field(default_factory=list)
    heights: Dict[Term, int] = field(default_factory=dict)

    @property
    def nodes(self) -> List[Term]:
        return list(self.graph.nodes)

    @property
    def edges(self) -> Iterator[Step]:
        for _, _, step in self.graph.edges(data="step"):
            yield step

    def out_steps(self, term: Term) -> List[Step]:
        return [step for _, _, step in self.graph.out_edges(term, data="step")]

    def __contains__(self, term: Term) -> bool:
        return term in self.graph

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def is_finite(self) -> bool:
        return self.status is GraphStatus.FINITE

    def height(self, term: Term) -> Optional[int]:
        return self.heights.get(term)

    def summary(self) -> GraphSummary:
        return GraphSummary(self.status, self.heights.get(self.root))
