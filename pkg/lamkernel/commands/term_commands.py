import click

from lamkernel.commands.common import calculus_for, respond, system_option
from lamkernel.config import Config
from lamkernel.models.types import Context
from lamkernel.utils.alpha import alpha_eq
from lamkernel.utils.errors import FuelExhausted, ParseError, TypingError
from lamkernel.utils.normalization import count_succ, explore, height_v, normalize
from lamkernel.utils.parser import parse_context, parse_substitution, parse_term, parse_type
from lamkernel.utils.printer import print_term, print_type
from lamkernel.utils.reduction import one_step_reducts
from lamkernel.utils.response_handler import ResponseHandler
from lamkernel.utils.substitution import subst
from lamkernel.utils.type_checker import check, infer


def _step_line(step) -> str:
    return f"{step.label}  {print_term(step.target)}"


@click.command('check')
@click.argument('term')
@click.option('--type', 'type_text', required=True, help='Expected type, e.g. "nat -> nat".')
@click.option('--ctx', 'ctx_text', default='', help='Context "v0:nat,v1:nat -> nat"; leftmost is most recent.')
@system_option
def check_command(term, type_text, ctx_text, system):
    """Decide whether CTX |- TERM : TYPE is derivable."""
    calculus = calculus_for(system)
    try:
        parsed = parse_term(term, calculus.alphabet)
        expected = parse_type(type_text)
        ctx = parse_context(ctx_text)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))
    try:
        derivable = check(calculus.signature, ctx, parsed, expected)
    except TypingError as e:
        return respond(ResponseHandler.negative(data="not derivable", error=str(e), message="Ill-typed"))
    if derivable:
        return respond(ResponseHandler.success(data="derivable"))
    return respond(ResponseHandler.negative(data="not derivable", message="Type mismatch"))


@click.command('infer')
@click.argument('term')
@click.option('--ctx', 'ctx_text', default='', help='Context "v0:nat,..."; leftmost is most recent.')
@system_option
def infer_command(term, ctx_text, system):
    """Print the principal type of TERM."""
    calculus = calculus_for(system)
    try:
        parsed = parse_term(term, calculus.alphabet)
        ctx = parse_context(ctx_text)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))
    try:
        inferred = infer(calculus.signature, ctx, parsed)
    except TypingError as e:
        return respond(ResponseHandler.negative(error=str(e), message="Ill-typed"))
    return respond(ResponseHandler.success(data=print_type(inferred)))


@click.command('normalize')
@click.argument('term')
@click.option('--fuel', type=click.IntRange(min=0), default=Config.FUEL, show_default=True)
@system_option
def normalize_command(term, fuel, system):
    """Reduce TERM to normal form, always contracting the first reduct."""
    calculus = calculus_for(system)
    try:
        parsed = parse_term(term, calculus.alphabet)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))
    try:
        result = normalize(calculus.rules, parsed, fuel)
    except FuelExhausted as e:
        return respond(ResponseHandler.negative(error=str(e), message="Fuel exhausted"))
    return respond(ResponseHandler.success(data=print_term(result.nf)))


@click.command('trace')
@click.argument('term')
@click.option('--fuel', type=click.IntRange(min=0), default=Config.FUEL, show_default=True)
@system_option
def trace_command(term, fuel, system):
    """Print every step of the normalization of TERM as "tag@path  term"."""
    calculus = calculus_for(system)
    try:
        parsed = parse_term(term, calculus.alphabet)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))
    try:
        result = normalize(calculus.rules, parsed, fuel)
    except FuelExhausted as e:
        lines = [_step_line(step) for step in e.steps]
        return respond(ResponseHandler.negative(data=lines, error=str(e), message="Fuel exhausted"))
    return respond(ResponseHandler.success(data=[_step_line(step) for step in result.steps]))


@click.command('reducts')
@click.argument('term')
@system_option
def reducts_command(term, system):
    """List all one-step reducts of TERM, one "tag@path  term" per line."""
    calculus = calculus_for(system)
    try:
        parsed = parse_term(term, calculus.alphabet)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))
    steps = one_step_reducts(calculus.rules, parsed)
    return respond(ResponseHandler.success(data=[_step_line(step) for step in steps]))


@click.command('alpha')
@click.argument('left')
@click.argument('right')
@system_option
def alpha_command(left, right, system):
    """Decide alpha-equivalence of two terms."""
    calculus = calculus_for(system)
    try:
        m = parse_term(left, calculus.alphabet)
        n = parse_term(right, calculus.alphabet)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))
    if alpha_eq(m, n):
        return respond(ResponseHandler.success(data="alpha-equivalent"))
    return respond(ResponseHandler.negative(data="not alpha-equivalent", message="Not alpha-equivalent"))


@click.command('subst')
@click.argument('term')
@click.option('--map', 'map_text', default='', help='Overrides "v0:=TERM,v1:=TERM".')
@system_option
def subst_command(term, map_text, system):
    """Apply a simultaneous substitution to TERM."""
    calculus = calculus_for(system)
    try:
        parsed = parse_term(term, calculus.alphabet)
        sigma = parse_substitution(map_text, calculus.alphabet)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))
    return respond(ResponseHandler.success(data=print_term(subst(parsed, sigma))))


@click.command('height')
@click.argument('term')
@click.option('--budget', type=click.IntRange(min=1), default=Config.NODE_BUDGET, show_default=True)
@system_option
def height_command(term, budget, system):
    """Print the length of the longest reduction sequence from TERM."""
    calculus = calculus_for(system)
    try:
        parsed = parse_term(term, calculus.alphabet)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))
    g = explore(calculus.rules, parsed, budget)
    if not g.is_finite:
        return respond(ResponseHandler.negative(
            error=f"status {g.status} after {len(g)} nodes", message="No height"))
    return respond(ResponseHandler.success(data=str(height_v(g, parsed))))


@click.command('scount')
@click.argument('term')
@system_option
def scount_command(term, system):
    """Count the occurrences of S in TERM."""
    calculus = calculus_for(system)
    try:
        parsed = parse_term(term, calculus.alphabet)
    except ParseError as e:
        return respond(ResponseHandler.error(error=str(e), message="Parse error"))
    return respond(ResponseHandler.success(data=str(count_succ(parsed))))


term_commands = [
    check_command, infer_command, normalize_command, trace_command, reducts_command,
    alpha_command, subst_command, height_command, scount_command,
]
