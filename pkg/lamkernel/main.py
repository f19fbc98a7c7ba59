from typing import Optional, Sequence

import click

from lamkernel import create_cli
from lamkernel.utils.response_handler import EXIT_NEGATIVE, EXIT_SUCCESS, EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code (0 success, 1 negative, 2 usage)."""
    cli = create_cli()
    try:
        rv = cli.main(args=list(argv) if argv is not None else None,
                      prog_name='lamkernel', standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo('Aborted!', err=True)
        return EXIT_NEGATIVE
    return rv if isinstance(rv, int) else EXIT_SUCCESS
