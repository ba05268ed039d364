import sys
from typing import Optional, Sequence, TextIO

from app.config.constants import EXIT_OK, EXIT_USAGE
from app.config.settings import settings
from app.controllers import cli_router
from app.handlers.exception_handler import exception_handler
from app.utils.logger import configure_logger
from app.utils.tracing import get_trace_logger, set_trace_context

logger = get_trace_logger("cli")


def run_cli(
    argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None
) -> int:
    """
    Run one command and return its exit code.

    Reports go to ``stdout``; errors and log records go to ``stderr``.
    0 means success, 1 a validation or check failure, 2 a usage or parse error.
    """
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    run_id = set_trace_context()
    parser = cli_router.build_parser(settings.PROJECT_NAME, settings.PROJECT_DESCRIPTION)
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        # argparse already printed usage; --help exits with 0
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    configure_logger(args.log_level)
    logger.info(f"Run {run_id}: {args.command}")
    try:
        result = args.handler(args)
    except Exception as exc:
        error = exception_handler(exc)
        print(error.render(), file=err)
        return error.exit_code

    print(result.output, file=out)
    logger.info(f"Run {run_id} finished with exit code {result.exit_code}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(run_cli())
