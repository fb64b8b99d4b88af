from typing import Optional
import logging

import click

from qcartan.commands.common import (
    PARTITION,
    echo_model,
    echo_table,
    example_epilog,
    get_settings,
    n_option,
    p_option,
    require_at_most,
    table_option,
)
from qcartan.domain import determinants, habacus, partitions, series, weights
from qcartan.domain.partitions import Partition
from qcartan.exceptions import EXIT_FAILURE, BadRequestException, ValidationException
from qcartan.models import (
    BlockDeterminantOut,
    DeltaOut,
    GlaisherOut,
    HAbacusOut,
    PartitionListing,
    ProductFormOut,
    SeriesCheckOut,
    SeriesIdentityOut,
    WeightEntry,
    WeightListing
)
from qcartan.schemas.cli_help import (
    DELTA_EXAMPLE,
    DELTA_HELP,
    ENUMERATE_EXAMPLE,
    ENUMERATE_HELP,
    GLAISHER_HELP,
    HABACUS_EXAMPLE,
    HABACUS_HELP,
    SERIES_CHECK_HELP,
    WEIGHTS_HELP
)

logger = logging.getLogger(__name__)

KINDS = ["all", "regular", "class-regular", "cores", "multipartitions", "q", "strict", "odd-strict"]


def _listing(kind: str, n: int, p: Optional[int], r: Optional[int], exponent_notation: bool) -> PartitionListing:
    def render(lam: Partition):
        return lam.exponent_notation() if exponent_notation else lam.to_json()

    if kind in ("regular", "class-regular", "cores", "q") and p is None:
        raise BadRequestException(detail=f"--kind {kind} needs --p")
    if kind == "multipartitions":
        if r is None:
            raise BadRequestException(detail="--kind multipartitions needs --r")
        items = [[render(c) for c in mu.components] for mu in partitions.enumerate_multipartitions(n, r)]
    elif kind == "q":
        items = [
            {"mu": [render(c) for c in qi.mu.components], "chi": render(qi.chi)}
            for qi in partitions.enumerate_q(n, p)
        ]
    else:
        source = {
            "all": lambda: partitions.enumerate_partitions(n),
            "regular": lambda: partitions.enumerate_p_regular(n, p),
            "class-regular": lambda: partitions.enumerate_p_class_regular(n, p),
            "cores": lambda: partitions.enumerate_p_cores(n, p),
            "strict": lambda: habacus.enumerate_strict(n),
            "odd-strict": lambda: habacus.enumerate_odd_strict(n),
        }[kind]
        items = [render(lam) for lam in source()]
    return PartitionListing(kind=kind, n=n, p=p, r=r, count=len(items), items=items)


@click.command("enumerate", help=ENUMERATE_HELP, epilog=example_epilog(ENUMERATE_EXAMPLE))
@n_option
@click.option("--p", "p", type=click.IntRange(min=2), default=None, help="The parameter p >= 2")
@click.option("--kind", type=click.Choice(KINDS), default="all", show_default=True)
@click.option("--r", "r", type=click.IntRange(min=0), default=None, help="Number of components for multipartitions")
@click.option("--exponent-notation", is_flag=True, help="Render partitions as 1^9 3 5^3")
@click.pass_context
def enumerate_command(ctx, n, p, kind, r, exponent_notation):
    settings = get_settings(ctx)
    require_at_most(n, settings.max_enumeration_n, "n", "max_enumeration_n")
    echo_model(_listing(kind, n, p, r, exponent_notation))


@click.command("weights", help=WEIGHTS_HELP)
@p_option
@n_option
@click.option("--which", type=click.Choice(["e", "h", "g"]), default="e", show_default=True)
@table_option
@click.pass_context
def weights_command(ctx, p, n, which, table):
    settings = get_settings(ctx)
    require_at_most(n, settings.max_enumeration_n, "n", "max_enumeration_n")
    if which == "h":
        lams = partitions.enumerate_partitions(n)
        weight = weights.w_h
    else:
        lams = partitions.enumerate_p_class_regular(n, p)
        weight = weights.w_e if which == "e" else weights.w_g
    entries = [WeightEntry(partition=lam.to_json(), weight=ProductFormOut.of(weight(lam, p))) for lam in lams]
    if table:
        echo_table(["partition", f"w_{which.upper()}"], [(lam.exponent_notation(), weight(lam, p)) for lam in lams])
        return
    echo_model(WeightListing(which=which, p=p, n=n, weights=entries))


@click.command("glaisher", help=GLAISHER_HELP)
@p_option
@click.argument("partition", type=PARTITION)
@click.pass_context
def glaisher_command(ctx, p, partition):
    settings = get_settings(ctx)
    require_at_most(partition.size, settings.max_enumeration_n, "|partition|", "max_enumeration_n")
    result = weights.glaisher(partition, p)
    echo_model(GlaisherOut(
        partition=partition.to_json(),
        p=p,
        image=result.image.to_json(),
        steps={str(i): count for i, count in result.step_counts.items()},
        weight=ProductFormOut.of(result.weight())
    ))


@click.command("delta", help=DELTA_HELP, epilog=example_epilog(DELTA_EXAMPLE))
@p_option
@n_option
@click.option("--by-block", is_flag=True, help="List the block factors Δ(d) with their multiplicities")
@click.option("--expand", is_flag=True, help="Also expand the product as a polynomial in q")
@table_option
@click.pass_context
def delta_command(ctx, p, n, by_block, expand, table):
    settings = get_settings(ctx)
    require_at_most(n, settings.max_enumeration_n, "n", "max_enumeration_n")
    value = determinants.delta(n, p)
    blocks = determinants.delta_blocks(n, p)
    if table:
        echo_table(
            ["d", "blocks", "Δ(d)"],
            [(d, cores, block.value) for d, cores, block in blocks],
            title=f"Δ_{{{p},{n}}} = {value}"
        )
        return
    echo_model(DeltaOut(
        p=p,
        n=n,
        value=ProductFormOut.of(value),
        expanded=value.expand().to_json() if expand else None,
        blocks=[
            BlockDeterminantOut(d=d, cores=cores, value=ProductFormOut.of(block.value))
            for d, cores, block in blocks
        ] if by_block else None
    ))


@click.command("habacus", help=HABACUS_HELP, epilog=example_epilog(HABACUS_EXAMPLE))
@click.argument("partition", type=PARTITION)
@click.option("--unfold", is_flag=True, help="Use the diagonal hook lengths of PARTITION")
@click.pass_context
def habacus_command(ctx, partition, unfold):
    settings = get_settings(ctx)
    require_at_most(partition.size, 4 * settings.max_enumeration_n, "|partition|", "max_enumeration_n")
    strict = habacus.unfold(partition) if unfold else partition
    if not strict.is_strict():
        raise ValidationException(detail=f"{strict} is not strict; pass --unfold to use its diagonal hooks")
    echo_model(HAbacusOut(
        partition=partition.to_json(),
        core=habacus.h_core(strict).to_json(),
        quotient=habacus.h_quotient(strict).to_json(),
        unfolded=strict.to_json() if unfold else None
    ))


@click.command("series-check", help=SERIES_CHECK_HELP)
@p_option
@click.option("--order", type=click.IntRange(min=0), default=None, help="Truncation order (default: QCARTAN_SERIES_ORDER)")
@click.option("--fibers/--no-fibers", default=True, show_default=True, help="Include the alpha/beta fiber series")
@table_option
@click.pass_context
def series_check_command(ctx, p, order, fibers, table):
    settings = get_settings(ctx)
    order = settings.series_order if order is None else order
    require_at_most(order, settings.max_enumeration_n, "order", "max_enumeration_n")
    fiber_order = min(order, settings.fiber_order) if fibers else None
    identities = series.oracle_counts(order, p, fiber_order)
    result = SeriesCheckOut(
        p=p,
        order=order,
        all_passed=all(identity.passed for identity in identities),
        identities=[
            SeriesIdentityOut(
                name=identity.name,
                parameters=identity.parameters,
                passed=identity.passed,
                first_failure=identity.first_failure,
                expected=identity.expected[identity.first_failure] if not identity.passed else None,
                actual=identity.actual[identity.first_failure] if not identity.passed else None
            )
            for identity in identities
        ]
    )
    if table:
        echo_table(
            ["identity", "parameters", "result"],
            [
                (i.name, ",".join(f"{k}={v}" for k, v in i.parameters.items()) or "-",
                 "pass" if i.passed else f"FAIL at x^{i.first_failure}")
                for i in result.identities
            ]
        )
    else:
        echo_model(result)
    if not result.all_passed:
        logger.error(f"Series check failed for p={p} up to order {order}")
        ctx.exit(EXIT_FAILURE)


commands = [
    enumerate_command,
    weights_command,
    glaisher_command,
    delta_command,
    habacus_command,
    series_check_command,
]
