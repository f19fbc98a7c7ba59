import click

from lamkernel.commands.common import calculus_for, respond, system_option
from lamkernel.config import Config
from lamkernel.utils.errors import ParseError
from lamkernel.utils.normalization import explore, to_dot
from lamkernel.utils.parser import parse_term
from lamkernel.utils.response_handler import ResponseHandler


@click.command('graph')
@click.argument('term')
@click.option('--dot', 'dot_path', required=True, type=click.Path(dir_okay=False, writable=True),
              help='File the DOT rendering is written to.')
@click.option('--budget', type=click.IntRange(min=1), default=Config.NODE_BUDGET, show_default=True)
@system_option
def graph_command(term, dot_path, budget, system):
    """Explore the reduction graph of TERM and write it as DOT."""
    calculus = calculus_for(system)
    try:
        parsed = parse_term(term, calculus.alphabet)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))

    g = explore(calculus.rules, parsed, budget)
    try:
        with open(dot_path, 'w', encoding='utf-8') as f:
            f.write(to_dot(g))
    except OSError as e:
        return respond(ResponseHandler.error(error=str(e), message="Cannot write DOT file"))

    summary = f"{g.status} nodes={len(g)} edges={g.graph.number_of_edges()}"
    if g.is_finite:
        return respond(ResponseHandler.success(data=f"{summary} v={g.heights[parsed]}"))
    if g.cycle:
        summary += f" cycle={len(g.cycle)}"
    return respond(ResponseHandler.negative(data=summary, message="Reduction graph is not finite",
                                            error=f"status {g.status}"))


graph_commands = [graph_command]
