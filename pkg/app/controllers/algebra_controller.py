import argparse

from app.config.command_router import ALGEBRA, CommandRouter
from app.schemas.algebras.converters import convert_decomposition_to_report, load_frobenius
from app.schemas.common import CommandResult, ReportBuilder
from app.services.decomposition_service import decomposition_service
from app.services.frobenius_service import frobenius_service
from app.utils.tracing import get_trace_logger

router = CommandRouter(shared_options=[ALGEBRA])
logger = get_trace_logger("algebra-controller")


@router.command("check", help="validate an algebra file and every Frobenius axiom")
def check(args: argparse.Namespace) -> CommandResult:
    logger.info(f"Checking {args.algebra}")
    frobenius = load_frobenius(args.algebra)
    report = frobenius_service.verify_axioms(frobenius)
    return ReportBuilder.result(report.render(), report.passed)


@router.command("decompose", help="split into indecomposable summands and classify each")
def decompose(args: argparse.Namespace) -> CommandResult:
    logger.info(f"Decomposing {args.algebra}")
    frobenius = load_frobenius(args.algebra)
    result = decomposition_service.decompose(frobenius)
    return ReportBuilder.result(convert_decomposition_to_report(result).render())


@router.command("classify", help="classify an indecomposable Frobenius algebra")
def classify(args: argparse.Namespace) -> CommandResult:
    logger.info(f"Classifying {args.algebra}")
    frobenius = load_frobenius(args.algebra)
    # raises NotIndecomposable before anything is printed
    decomposition_service.classify(frobenius)
    result = decomposition_service.decompose(frobenius)
    return ReportBuilder.result(convert_decomposition_to_report(result).render())
