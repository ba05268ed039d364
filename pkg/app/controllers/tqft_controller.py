import argparse
from typing import List

from app.config.command_router import ALGEBRA, MAX_GENUS, SIZE_CAP, WORD, CommandRouter, Option
from app.config.constants import SUMCHECK_WORDS
from app.config.settings import settings
from app.schemas.algebras.converters import load_frobenius
from app.schemas.common import CommandResult, ReportBuilder
from app.schemas.tqft import InvariantTable, OperatorReport
from app.services.cobordism_service import cobordism_service
from app.services.tqft_service import tqft_service
from app.utils.fields import format_vector
from app.utils.tracing import get_trace_logger

router = CommandRouter()
logger = get_trace_logger("tqft-controller")

NORMAL = Option(["--normal"], {"action": "store_true", "help": "evaluate through the normal form"})
LEFT = Option(["--left"], {"required": True, "metavar": "PATH", "help": "first summand spec file"})
RIGHT = Option(["--right"], {"required": True, "metavar": "PATH", "help": "second summand spec file"})
SUM_WORD = Option(
    ["--word"],
    {"action": "append", "default": None, "metavar": "TEXT", "help": "connected word (repeatable)"},
)


@router.command("eval", help="evaluate a cobordism word", options=[ALGEBRA, WORD, NORMAL, SIZE_CAP])
def evaluate(args: argparse.Namespace) -> CommandResult:
    frobenius = load_frobenius(args.algebra)
    word = cobordism_service.parse_word(args.word)
    logger.info(f"Evaluating {cobordism_service.serialize_word(word)} (normal form: {args.normal})")
    if args.normal:
        operator = tqft_service.evaluate_normal(cobordism_service.normal_form(word), frobenius, args.size_cap)
    else:
        operator = tqft_service.evaluate_word(word, frobenius, args.size_cap)
    rows = [list(format_vector(operator.field, row)) for row in operator.matrix]
    report = OperatorReport(in_width=operator.in_width, out_width=operator.out_width, rows=rows)
    return ReportBuilder.result(report.render())


@router.command("invariant", help="closed-surface invariants for genus 0..G", options=[ALGEBRA, MAX_GENUS])
def invariant(args: argparse.Namespace) -> CommandResult:
    frobenius = load_frobenius(args.algebra)
    genus = settings.MAX_GENUS if args.max_genus is None else args.max_genus
    values = tqft_service.closed_invariants(frobenius, genus)
    return ReportBuilder.result(InvariantTable(values=list(format_vector(frobenius.field, values))).render())


@router.command("sumcheck", help="verify Z = Z_1 + Z_2 on a direct sum", options=[LEFT, RIGHT, SUM_WORD, SIZE_CAP])
def sumcheck(args: argparse.Namespace) -> CommandResult:
    left = load_frobenius(args.left)
    right = load_frobenius(args.right)
    texts: List[str] = args.word or list(SUMCHECK_WORDS)
    reports = [
        tqft_service.verify_direct_sum(left, right, cobordism_service.parse_word(text), args.size_cap) for text in texts
    ]
    output = "\n\n".join(r.render() for r in reports)
    return ReportBuilder.result(output, all(r.passed for r in reports))


@router.command("counterexample", help="equal closed invariants, inequivalent theories", options=[MAX_GENUS])
def counterexample(args: argparse.Namespace) -> CommandResult:
    report = tqft_service.counterexample(args.max_genus)
    return ReportBuilder.result(report.render(), report.distinguished)
