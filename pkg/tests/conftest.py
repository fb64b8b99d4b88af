import json

import pytest
from click.testing import CliRunner

from qcartan.config import Settings
from qcartan.domain.partitions import Partition
from qcartan.main import cli
from qcartan.storage import CacheDirectory


@pytest.fixture
def settings(tmp_path):
    """Settings with the cache under a temporary directory"""
    return Settings(cache_dir=tmp_path / "cache", log_level="WARNING")


@pytest.fixture
async def cache(settings):
    """Open and close the cache around each test that needs it"""
    await CacheDirectory.open_cache(settings.cache_dir)
    yield settings.cache_dir
    await CacheDirectory.close_cache()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def invoke(runner, settings):
    """Invoke the CLI with the isolated settings"""
    def _invoke(*args):
        return runner.invoke(cli, list(args), obj={"settings": settings})
    return _invoke


@pytest.fixture
def invoke_json(invoke):
    """Invoke the CLI and decode stdout"""
    def _invoke(*args, expected_exit=0):
        result = invoke(*args)
        assert result.exit_code == expected_exit, result.output
        return json.loads(result.stdout)
    return _invoke


@pytest.fixture
def glaisher_example():
    """1^9 3 5^3, a 2-class regular partition of 27"""
    return Partition.parse("1^9 3 5^3")


@pytest.fixture
def strict_example():
    return Partition.of([9, 7, 3, 2])
