"""Normal forms, bounded strong-normalization exploration, v heights and numerals."""
import logging
from collections import deque
from dataclasses import dataclass
from typing import List, Optional

import networkx as nx
import pydot

from lamkernel.models.graph import GraphStatus, ReductionGraph
from lamkernel.models.step import Step
from lamkernel.models.term import App, Const, TConst, Term
from lamkernel.utils.errors import FuelExhausted, GraphNotFinite, NodeAbsent
from lamkernel.utils.printer import print_term
from lamkernel.utils.reduction import RuleSet, one_step_reducts
from lamkernel.utils.syntax import count_const

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Normalized:
    nf: Term
    steps: List[Step]


def normalize(rules: RuleSet, term: Term, fuel: int) -> Normalized:
    """Contract the first reduct until a normal form is reached.

    Raises FuelExhausted after ``fuel`` steps without a normal form.
    """
    if fuel < 0:
        raise ValueError("fuel must be a natural number")
    steps: List[Step] = []
    current = term
    while True:
        reducts = one_step_reducts(rules, current)
        if not reducts:
            return Normalized(current, steps)
        if len(steps) >= fuel:
            raise FuelExhausted(steps)
        steps.append(reducts[0])
        current = reducts[0].target


def explore(rules: RuleSet, term: Term, node_budget: int) -> ReductionGraph:
    """Build the memoized reduct graph of ``term`` breadth-first.

    A reduction cycle refutes strong normalization; running out of budget is
    reported as unknown, never as a verdict.
    """
    if node_budget < 1:
        raise ValueError("node_budget must be at least 1")
    graph = nx.MultiDiGraph()
    graph.add_node(term)
    frontier = deque([term])
    exhausted = False
    while frontier and not exhausted:
        node = frontier.popleft()
        for step in one_step_reducts(rules, node):
            if step.target not in graph:
                if graph.number_of_nodes() >= node_budget:
                    exhausted = True
                    break
                graph.add_node(step.target)
                frontier.append(step.target)
            graph.add_edge(node, step.target, key=step.label, step=step)

    try:
        cycle_edges = nx.find_cycle(graph, source=term)
    except nx.NetworkXNoCycle:
        cycle_edges = []
    if cycle_edges:
        cycle = [graph.edges[edge]["step"] for edge in cycle_edges]
        logger.info("Reduction cycle of length %d found", len(cycle))
        return ReductionGraph(term, graph, GraphStatus.CYCLE_FOUND, cycle=cycle)
    if exhausted:
        logger.info("Node budget of %d exhausted", node_budget)
        return ReductionGraph(term, graph, GraphStatus.BUDGET_EXHAUSTED)

    heights = {}
    for node in reversed(list(nx.topological_sort(graph))):
        successors = list(graph.successors(node))
        heights[node] = 1 + max(heights[s] for s in successors) if successors else 0
    return ReductionGraph(term, graph, GraphStatus.FINITE, heights=heights)


def height_v(g: ReductionGraph, term: Term) -> int:
    """Length of the longest reduction sequence starting at ``term``."""
    if not g.is_finite:
        raise GraphNotFinite(g.status)
    if term not in g:
        raise NodeAbsent(term)
    return g.heights[term]


def count_succ(term: Term) -> int:
    return count_const(TConst.SUCC, term)


def numeral(n: int) -> Term:
    term: Term = Const(TConst.ZERO)
    for _ in range(n):
        term = App(Const(TConst.SUCC), term)
    return term


def denumeral(term: Term) -> Optional[int]:
    n = 0
    while isinstance(term, App) and term.fun == Const(TConst.SUCC):
        term = term.arg
        n += 1
    return n if term == Const(TConst.ZERO) else None


def to_dot(g: ReductionGraph) -> str:
    """Render a reduction graph in DOT: terms labelled with v, steps with ``tag@path``."""
    dot = pydot.Dot("reductions", graph_type="digraph")
    names = {}
    for i, node in enumerate(g.graph.nodes):
        names[node] = f"n{i}"
        label = print_term(node, binder="λ")
        if g.is_finite:
            label += f"  [v={g.heights[node]}]"
        attrs = {"label": label}
        if node == g.root:
            attrs["shape"] = "box"
        dot.add_node(pydot.Node(names[node], **attrs))
    for step in g.edges:
        dot.add_edge(pydot.Edge(names[step.source], names[step.target], label=step.label))
    return dot.to_string()
