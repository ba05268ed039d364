import argparse

from app.config.command_router import ALGEBRA, COUNT, MAX_LAYERS, MAX_WIDTH, SEED, SIZE_CAP, CommandRouter
from app.schemas.algebras.converters import load_frobenius
from app.schemas.common import CommandResult, ReportBuilder
from app.services.fuzz_service import fuzz_service

router = CommandRouter(shared_options=[ALGEBRA, SEED, COUNT, MAX_WIDTH, MAX_LAYERS, SIZE_CAP])


@router.command("cerf-fuzz", help="apply every Cerf move to random words and compare evaluations")
def cerf_fuzz(args: argparse.Namespace) -> CommandResult:
    frobenius = load_frobenius(args.algebra)
    report = fuzz_service.cerf_fuzz(
        frobenius, args.seed, args.count, args.max_width, args.max_layers, args.size_cap
    )
    return ReportBuilder.result(report.render(), report.passed)


@router.command("oracle-fuzz", help="compare word evaluation with normal-form evaluation")
def oracle_fuzz(args: argparse.Namespace) -> CommandResult:
    frobenius = load_frobenius(args.algebra)
    report = fuzz_service.oracle_fuzz(
        frobenius, args.seed, args.count, args.max_width, args.max_layers, args.size_cap
    )
    return ReportBuilder.result(report.render(), report.passed)
