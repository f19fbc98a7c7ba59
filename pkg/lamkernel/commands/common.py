import logging
from typing import Dict, Optional

import click

from lamkernel.calculi import Calculus, get_calculus

logger = logging.getLogger(__name__)

system_option = click.option(
    '--system', type=click.Choice(['pure', 't']), default=None,
    help='Calculus for this command (defaults to the global --system).')


def calculus_for(system: Optional[str]) -> Calculus:
    """The calculus named by a command's ``--system``, else the group's."""
    if system is None:
        system = click.get_current_context().find_root().obj['system']
    return get_calculus(system)


def respond(response: Dict) -> int:
    """Render a ResponseHandler dict: data to stdout, error to stderr; return the exit code."""
    data = response['data']
    if isinstance(data, str):
        click.echo(data)
    else:
        for line in data:
            click.echo(line)
    if response['error']:
        click.echo(f"{response['message']}: {response['error']}", err=True)
    logger.debug("exit %d: %s", response['exit_code'], response['message'])
    return response['exit_code']
