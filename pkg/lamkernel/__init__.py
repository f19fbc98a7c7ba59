import logging
import os
import sys
from logging.config import fileConfig

import click

from lamkernel.config import Config


def configure_logging(verbosity: int = 0, config_path: str = None) -> None:
    """Set up stderr logging from logging.ini; -v means INFO, -vv DEBUG."""
    config_path = config_path or Config.LOGGING_CONFIG
    if os.path.exists(config_path):
        fileConfig(config_path, disable_existing_loggers=False)
    else:
        logging.basicConfig(stream=sys.stderr, format='%(levelname)-5.5s [%(name)s] %(message)s')
    logger = logging.getLogger('lamkernel')
    if verbosity >= 2:
        logger.setLevel(logging.DEBUG)
    elif verbosity == 1:
        logger.setLevel(logging.INFO)
    else:
        logger.setLevel(Config.LOG_LEVEL.upper())


def create_cli(config_class=Config) -> click.Group:
    @click.group(name='lamkernel', context_settings={'help_option_names': ['-h', '--help']})
    @click.option('--system', type=click.Choice(['pure', 't']), default=config_class.SYSTEM,
                  show_default=True, help='pure: beta only; t: System T constants and rules.')
    @click.option('-v', '--verbose', count=True, help='Log to stderr (-v INFO, -vv DEBUG).')
    @click.pass_context
    def cli(ctx, system, verbose):
        """Substitution, reduction, typing and normalization for the lambda calculus."""
        ctx.obj = {'system': system}
        configure_logging(verbose)

    # Register command groups
    from lamkernel.commands.term_commands import term_commands
    from lamkernel.commands.graph_commands import graph_commands
    from lamkernel.commands.props_commands import props_commands

    for command in term_commands + graph_commands + props_commands:
        cli.add_command(command)

    return cli
