from typing import Optional
import logging

import click

from qcartan.commands.common import PARTITION, echo_model, example_epilog, get_settings, n_option, p_option
from qcartan.domain.fock import GradedCartan
from qcartan.domain.partitions import Partition
from qcartan.exceptions import EXIT_DIFFERENCE
from qcartan.lifespan import run_with_lifespan
from qcartan.models import (
    CartanOut,
    ComparisonOut,
    ConjectureOut,
    DecompositionEntry,
    DecompositionOut,
    PolyOut,
    SnfOut
)
from qcartan.schemas.cli_help import (
    CARTAN_HELP,
    CONJECTURE_EXAMPLE,
    CONJECTURE_HELP,
    DECOMP_HELP,
    SNF_HELP
)
from qcartan.services import ConjectureService, DecompositionService

logger = logging.getLogger(__name__)

block_option = click.option(
    "--block", "core", type=PARTITION, default=None,
    help="Restrict to the block with this p-core ('-' for the empty core)"
)


async def _decomposition(settings, n: int, p: int):
    service = DecompositionService(settings)
    return await service.get_decomposition(n, p)


async def _cartan(settings, n: int, p: int, core: Optional[Partition]) -> GradedCartan:
    service = DecompositionService(settings)
    if core is None:
        return await service.get_cartan(n, p)
    return await service.get_block(n, p, core)


async def _divisors(settings, n: int, p: int, core: Optional[Partition]):
    service = ConjectureService(settings)
    return await service.get_divisors(n, p, core)


async def _compare(settings, n: int, p: int, blockwise: bool):
    service = ConjectureService(settings)
    return await service.compare(n, p, blockwise)


@click.command("decomp", help=DECOMP_HELP)
@p_option
@n_option
@click.pass_context
def decomp_command(ctx, p, n):
    settings = get_settings(ctx)
    DecompositionService(settings).check_limits(n, p)
    matrix = run_with_lifespan(settings, _decomposition, settings, n, p)
    entries = [
        DecompositionEntry(row=lam.to_json(), col=mu.to_json(), value=PolyOut.of(matrix.entry(lam, mu)))
        for mu in matrix.cols
        for lam in matrix.rows
        if not matrix.entry(lam, mu).is_zero()
    ]
    echo_model(DecompositionOut(
        p=p,
        n=n,
        rows=[lam.to_json() for lam in matrix.rows],
        cols=[mu.to_json() for mu in matrix.cols],
        entries=entries
    ))


@click.command("cartan", help=CARTAN_HELP)
@p_option
@n_option
@block_option
@click.option("--det", "determinant", is_flag=True, help="Output only the determinant")
@click.option("--degrees", is_flag=True, help="Also list the degree of every entry")
@click.pass_context
def cartan_command(ctx, p, n, core, determinant, degrees):
    settings = get_settings(ctx)
    DecompositionService(settings).check_limits(n, p)
    c = run_with_lifespan(settings, _cartan, settings, n, p, core)
    echo_model(CartanOut(
        p=p,
        n=n,
        block=(core.key() or "-") if core is not None else None,
        labels=[mu.to_json() for mu in c.labels],
        entries=None if determinant else [[PolyOut.of(e) for e in row] for row in c.entries],
        determinant=PolyOut.of(c.determinant()) if determinant else None,
        degrees=c.entry_degrees() if degrees else None
    ))


@click.command("snf", help=SNF_HELP)
@p_option
@n_option
@block_option
@click.pass_context
def snf_command(ctx, p, n, core):
    settings = get_settings(ctx)
    DecompositionService(settings).check_limits(n, p)
    chain = run_with_lifespan(settings, _divisors, settings, n, p, core)
    echo_model(SnfOut(
        p=p,
        n=n,
        block=(core.key() or "-") if core is not None else None,
        divisors=chain.labels(),
        rank_deficient=chain.rank_deficient
    ))


@click.command("conjecture", help=CONJECTURE_HELP, epilog=example_epilog(CONJECTURE_EXAMPLE))
@p_option
@n_option
@click.option("--blockwise", is_flag=True, help="Compare every block with its w_H chain")
@click.pass_context
def conjecture_command(ctx, p, n, blockwise):
    settings = get_settings(ctx)
    DecompositionService(settings).check_limits(n, p)
    report = run_with_lifespan(settings, _compare, settings, n, p, blockwise)
    echo_model(ConjectureOut(
        p=p,
        n=n,
        blockwise=blockwise,
        all_equal=report.all_equal,
        comparisons=[
            ComparisonOut(
                lhs=c.lhs,
                rhs=c.rhs,
                equal=c.equal,
                first_difference=c.first_difference,
                lhs_divisors=c.lhs_chain.labels(),
                rhs_divisors=c.rhs_chain.labels()
            )
            for c in report.comparisons
        ]
    ))
    if not report.all_equal:
        ctx.exit(EXIT_DIFFERENCE)


commands = [
    decomp_command,
    cartan_command,
    snf_command,
    conjecture_command,
]
