from typing import List, Optional
import logging

import click

from qcartan.commands.common import echo_model, echo_models, echo_table, example_epilog, get_settings, table_option
from qcartan.exceptions import EXIT_DIFFERENCE, EXIT_FAILURE, BadRequestException
from qcartan.lifespan import run_with_lifespan
from qcartan.models import Verdict, VerificationReport
from qcartan.schemas.cli_help import VERIFICATION_REPORT_EXAMPLE, VERIFY_HELP
from qcartan.services import STATEMENT_ALIASES, STATEMENTS, VerificationJob, VerificationService, statement_name

logger = logging.getLogger(__name__)


async def _run(settings, jobs: List[VerificationJob]) -> List[VerificationReport]:
    service = VerificationService(settings)
    return await service.run_many(jobs)


def exit_code_for(reports: List[VerificationReport]) -> int:
    if any(r.verdict == Verdict.FAIL for r in reports):
        return EXIT_FAILURE
    if any(r.verdict == Verdict.REPORTED and r.witness is not None for r in reports):
        return EXIT_DIFFERENCE
    return 0


@click.command("verify", help=VERIFY_HELP, epilog=example_epilog(VERIFICATION_REPORT_EXAMPLE))
@click.argument("statement", required=False)
@click.option("--all", "run_all", is_flag=True, help="Run every statement over its default range")
@click.option("--list", "list_statements", is_flag=True, help="List the statements and their range bounds")
@click.option("--theorem", default=None, metavar="N.M", help="Short id without its prefix, e.g. 7.1 for thm-7.1")
@click.option("--p", "p", type=click.IntRange(min=2), default=None, help="Restrict to one value of p")
@click.option("--n", "n", type=click.IntRange(min=0), default=None, help="Upper bound for statements ranging over n")
@click.option("--d", "--dmax", "d", type=click.IntRange(min=0), default=None, help="Upper bound for statements ranging over d")
@click.option("--m", "m", type=click.IntRange(min=1), default=None, help="Upper bound for statements ranging over m")
@click.option("--order", type=click.IntRange(min=0), default=None, help="Truncation order for the series statement")
@click.option("--timing/--no-timing", default=True, show_default=True, help="Include the timing sub-object")
@table_option
@click.pass_context
def verify_command(ctx, statement, run_all, list_statements, theorem, p, n, d, m, order, timing, table):
    settings = get_settings(ctx)
    if list_statements:
        aliases = {name: alias for alias, name in STATEMENT_ALIASES.items()}
        echo_table(
            ["statement", "id", "bound", "default", "p", "checks"],
            [
                (s.name, aliases.get(s.name, "-"), s.bound, s.default_bound, ",".join(map(str, s.primes)), s.description)
                for s in STATEMENTS.values()
            ]
        )
        return
    if theorem is not None:
        if statement is not None:
            raise BadRequestException(detail="give either a STATEMENT or --theorem, not both")
        statement = f"thm-{theorem}"
    bounds = {"n": n, "d": d, "m": m, "order": order}
    if run_all:
        if statement is not None or any(v is not None for v in bounds.values()) or p is not None:
            raise BadRequestException(detail="--all runs the default ranges and takes no other arguments")
        jobs = [VerificationJob(statement=name) for name in STATEMENTS]
    else:
        if statement is None:
            raise click.UsageError("Give a STATEMENT, --theorem, --all or --list", ctx=ctx)
        known = STATEMENTS.get(statement_name(statement))
        if known is not None:
            extra = [f"--{name}" for name, value in bounds.items() if value is not None and name != known.bound]
            if extra:
                raise BadRequestException(detail=f"{statement} ranges over {known.bound}; {', '.join(extra)} does not apply")
        bound = bounds[known.bound] if known is not None else None
        jobs = [VerificationJob(statement=statement, p=p, bound=bound)]

    reports = run_with_lifespan(settings, _run, settings, jobs)
    if table:
        echo_table(
            ["statement", "verdict", "checked", "seconds", "witness"],
            [
                (r.statement, r.verdict.value, r.checked,
                 f"{r.timing.runtime_seconds:.2f}" if r.timing else "-", r.witness or "-")
                for r in reports
            ]
        )
    else:
        if not timing:
            for r in reports:
                r.timing = None
        if run_all:
            echo_models(reports)
        else:
            echo_model(reports[0])
    code = exit_code_for(reports)
    if code:
        ctx.exit(code)


commands = [verify_command]
