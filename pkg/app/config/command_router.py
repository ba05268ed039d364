import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from app.schemas.common.report import CommandResult
from app.utils.logger import LOG_LEVELS

Handler = Callable[[argparse.Namespace], CommandResult]


@dataclass(frozen=True)
class Option:
    """One command-line flag, passed through to ``add_argument``"""

    flags: Sequence[str]
    kwargs: Dict[str, Any] = field(default_factory=dict)


@dataclass
class Command:
    name: str
    help: str
    handler: Handler
    options: List[Option]


class CommandRouter:
    """
    Collects CLI commands the way controllers register them.

    Controllers create a router, register handlers with ``command`` and the
    entry point includes every controller router into one, then builds the
    argparse parser from it.
    """

    def __init__(
        self, shared_options: Optional[Sequence[Option]] = None, global_options: Optional[Sequence[Option]] = None
    ) -> None:
        self.commands: Dict[str, Command] = {}
        self.shared_options: List[Option] = list(shared_options or [])
        self.global_options: List[Option] = list(global_options or [])

    def command(self, name: str, help: str, options: Sequence[Option] = ()) -> Callable[[Handler], Handler]:
        """Register the decorated function as the handler of ``name``"""

        def decorator(handler: Handler) -> Handler:
            self.commands[name] = Command(name, help, handler, list(options))
            return handler

        return decorator

    def include_router(self, router: "CommandRouter") -> None:
        """Merge another router's commands; its shared options apply to each of them"""
        for name, command in router.commands.items():
            self.commands[name] = Command(
                name, command.help, command.handler, router.shared_options + command.options
            )

    def build_parser(self, prog: str, description: str) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=prog, description=description)
        for option in self.global_options:
            parser.add_argument(*option.flags, **option.kwargs)
        subparsers = parser.add_subparsers(dest="command", metavar="command")
        subparsers.required = True
        for command in self.commands.values():
            sub = subparsers.add_parser(command.name, help=command.help, description=command.help)
            for option in self.shared_options + command.options:
                sub.add_argument(*option.flags, **option.kwargs)
            sub.set_defaults(handler=command.handler)
        return parser


# ===== SHARED FLAGS =====

ALGEBRA = Option(["--algebra"], {"required": True, "metavar": "PATH", "help": "algebra spec file"})
WORD = Option(["--word"], {"required": True, "metavar": "TEXT", "help": "cobordism word"})
SEED = Option(["--seed"], {"type": int, "default": None, "help": "first seed of the sweep"})
COUNT = Option(["--count"], {"type": int, "default": None, "help": "number of random words"})
MAX_WIDTH = Option(["--max-width"], {"type": int, "default": None, "help": "maximum strand count"})
MAX_LAYERS = Option(["--max-layers"], {"type": int, "default": None, "help": "maximum layer count"})
MAX_GENUS = Option(["--max-genus"], {"type": int, "default": None, "help": "largest genus in the table"})
SIZE_CAP = Option(["--size-cap"], {"type": int, "default": None, "help": "maximum matrix entries per step"})
LOG_LEVEL = Option(
    ["--log-level"], {"type": str.upper, "choices": LOG_LEVELS, "default": None, "help": "minimum level of log records"}
)
