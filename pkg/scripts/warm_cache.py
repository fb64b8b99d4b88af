import sys
from pathlib import Path

import anyio
import click

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from qcartan.config import settings
from qcartan.repositories import DecompositionRepository
from qcartan.services import DecompositionService
from qcartan.storage import CacheDirectory


async def warm_cache(primes, n_max, refresh):
    """Compute and cache D_n(q) for every p in primes and n <= n_max"""
    await CacheDirectory.open_cache(settings.cache_dir)
    try:
        repository = DecompositionRepository()
        existing = set(await repository.get_all_keys())
        if refresh:
            for p, n in sorted(existing):
                await repository.delete(p, n)
            click.echo(f"🗑  Removed {len(existing)} cached matrices")
            existing = set()

        service = DecompositionService(settings)
        for p in primes:
            for n in range(n_max + 1):
                if (p, n) in existing:
                    continue
                matrix = await service.get_decomposition(n, p)
                click.echo(f"✅ D_{n} at p={p}: {len(matrix.rows)} x {len(matrix.cols)}")

        click.echo(f"✅ Cache at {settings.cache_dir} holds {len(await repository.get_all_keys())} matrices")
    finally:
        await CacheDirectory.close_cache()


@click.command()
@click.option("--p", "primes", type=click.IntRange(min=2), multiple=True, default=[2, 3], show_default=True)
@click.option("--n", "n_max", type=click.IntRange(min=0), default=settings.max_cartan_n, show_default=True)
@click.option("--refresh", is_flag=True, help="Delete every cached matrix first")
def main(primes, n_max, refresh):
    """Fill the decomposition-matrix cache"""
    anyio.run(warm_cache, primes, n_max, refresh)


if __name__ == "__main__":
    main()
