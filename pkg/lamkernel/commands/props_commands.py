import click

from lamkernel.commands.common import respond, system_option
from lamkernel.config import Config
from lamkernel.schemas.corpus_config import load_corpus_config
from lamkernel.utils.errors import ConfigError
from lamkernel.utils.lemma_suite import LEMMAS, run_suite
from lamkernel.utils.report_writer import write_report
from lamkernel.utils.response_handler import ResponseHandler


@click.command('props')
@click.option('--size', type=int, help='Largest term size in the corpus.')
@click.option('--typed-size', type=int, help='Largest closed term size in the typed corpus.')
@click.option('--variables', type=int, help='Size of the variable pool v0, v1, ...')
@click.option('--substitutions', type=int, help='Number of random substitutions.')
@click.option('--seed', type=int, help='Seed for the substitution pool.')
@click.option('--budget', type=int, help='Node budget for reduction graph exploration.')
@click.option('--fuel', type=int, help='Step limit for normalization.')
@click.option('--workers', type=int, help='Lemmas run in parallel.')
@click.option('--lemma', 'lemmas', multiple=True, type=click.Choice(sorted(LEMMAS)),
              help='Run only this lemma (repeatable).')
@click.option('--report', 'report_path', type=click.Path(dir_okay=False),
              help='Machine-readable report: .json, .jsonl, .csv or .xlsx.')
@system_option
def props_command(size, typed_size, variables, substitutions, seed, budget, fuel, workers,
                  lemmas, report_path, system):
    """Run the lemma suite over the enumerated corpus and print one line per lemma."""
    raw = Config.corpus_defaults()
    raw['system'] = system or click.get_current_context().find_root().obj['system']
    overrides = {
        'max_term_size': size,
        'typed_max_term_size': typed_size,
        'variables': variables,
        'substitution_pool_size': substitutions,
        'seed': seed,
        'node_budget': budget,
        'fuel': fuel,
        'workers': workers,
    }
    raw.update({key: value for key, value in overrides.items() if value is not None})
    try:
        cfg = load_corpus_config(raw)
    except ConfigError as e:
        return respond(ResponseHandler.error(error=str(e), message="Invalid corpus configuration"))

    report = run_suite(cfg, list(lemmas) or None)
    if report_path:
        try:
            write_report(report, report_path)
        except (OSError, ValueError) as e:
            return respond(ResponseHandler.error(error=str(e), message="Cannot write report"))

    lines = report.to_log_lines()
    if report.passed:
        return respond(ResponseHandler.success(data=lines, message="All lemmas hold"))
    return respond(ResponseHandler.negative(
        data=lines, message="Lemma failures", error=f"{report.total_failures} failing cases"))


props_commands = [props_command]
