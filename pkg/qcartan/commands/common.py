from typing import Iterable, List, Optional, Sequence
import json
import logging

import click
from pydantic import BaseModel

from qcartan.config import Settings
from qcartan.domain.partitions import Partition
from qcartan.exceptions import BadRequestException, QCartanException

logger = logging.getLogger(__name__)


class PartitionParamType(click.ParamType):
    name = "partition"

    def convert(self, value, param, ctx):
        if isinstance(value, Partition):
            return value
        try:
            return Partition.parse(value)
        except QCartanException as e:
            self.fail(e.detail, param, ctx)


PARTITION = PartitionParamType()

p_option = click.option("--p", "p", type=click.IntRange(min=2), required=True, help="The parameter p >= 2")
n_option = click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Size n >= 0")
table_option = click.option("--table", is_flag=True, help="Human-readable table instead of JSON")


def get_settings(ctx: click.Context) -> Settings:
    return ctx.find_root().obj["settings"]


def require_at_most(value: int, limit: int, name: str, field: str) -> None:
    if value > limit:
        logger.warning(f"Refused {name}={value}: limit {field}={limit}")
        raise BadRequestException(
            detail=f"{name}={value} exceeds {field}={limit} (raise QCARTAN_{field.upper()} to allow it)"
        )


def echo_model(model: BaseModel) -> None:
    click.echo(model.model_dump_json(indent=2))


def echo_models(models: Sequence[BaseModel]) -> None:
    click.echo("[" + ",\n".join(m.model_dump_json(indent=2) for m in models) + "]")


def echo_table(headers: Sequence[str], rows: Iterable[Sequence[object]], title: Optional[str] = None) -> None:
    cells: List[List[str]] = [[str(c) for c in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    if title:
        click.echo(title)
    click.echo("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    click.echo("  ".join("-" * w for w in widths))
    for row in cells:
        click.echo("  ".join(c.ljust(w) for c, w in zip(row, widths)))


def example_epilog(example: dict) -> str:
    return "\b\nExample output:\n" + json.dumps(example, indent=2)
