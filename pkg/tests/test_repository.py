import json

import pytest

from qcartan.config import Settings
from qcartan.domain.fock import canonical_basis
from qcartan.domain.partitions import Partition
from qcartan.exceptions import BadRequestException, CacheException, NotFoundException, ValidationException
from qcartan.models import CACHE_VERSION, DecompositionDocument
from qcartan.repositories import DecompositionRepository
from qcartan.services import DecompositionService
from qcartan.storage import CacheDirectory


@pytest.mark.asyncio
async def test_save_and_get(cache):
    """Test a cached matrix reads back unchanged"""
    repository = DecompositionRepository()
    matrix = canonical_basis(4, 2)
    path = await repository.save(matrix)
    assert path == cache / "decomp" / "p2" / "n4.json"
    assert await repository.get(2, 4) == matrix


@pytest.mark.asyncio
async def test_get_missing(cache):
    """Test a miss returns None"""
    assert await DecompositionRepository().get(3, 5) is None


@pytest.mark.asyncio
async def test_document_layout(cache):
    """Test the on-disk document"""
    repository = DecompositionRepository()
    path = await repository.save(canonical_basis(2, 2))
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["version"] == CACHE_VERSION
    assert data["rows"] == [[2], [1, 1]]
    assert data["cols"] == [[2]]
    assert data["columns"] == [
        {"col": [2], "entries": [{"row": [2], "poly": [[0, 1]]}, {"row": [1, 1], "poly": [[1, 1]]}]}
    ]


@pytest.mark.asyncio
async def test_stale_version_is_discarded(cache):
    """Test a document from another cache version is deleted"""
    repository = DecompositionRepository()
    path = await repository.save(canonical_basis(3, 2))
    data = json.loads(path.read_text(encoding="utf-8"))
    data["version"] = CACHE_VERSION + 1
    path.write_text(json.dumps(data), encoding="utf-8")
    assert await repository.get(2, 3) is None
    assert not path.exists()


@pytest.mark.asyncio
async def test_undecodable_document(cache):
    """Test a truncated document counts as a miss"""
    repository = DecompositionRepository()
    path = repository.path_for(2, 3)
    path.parent.mkdir(parents=True)
    path.write_text("{\"version\": 1, \"p\"", encoding="utf-8")
    assert await repository.get(2, 3) is None


@pytest.mark.asyncio
async def test_invalid_document_is_discarded(cache):
    """Test a document failing validation is deleted"""
    repository = DecompositionRepository()
    path = repository.path_for(2, 3)
    path.parent.mkdir(parents=True)
    path.write_text(json.dumps({"version": CACHE_VERSION, "p": 1, "n": 3}), encoding="utf-8")
    assert await repository.get(2, 3) is None
    assert not path.exists()


@pytest.mark.asyncio
async def test_misplaced_document_is_discarded(cache):
    """Test a document stored under the wrong key is deleted"""
    repository = DecompositionRepository()
    path = repository.path_for(2, 5)
    path.parent.mkdir(parents=True)
    path.write_text(DecompositionDocument.from_matrix(canonical_basis(4, 2)).model_dump_json(), encoding="utf-8")
    assert await repository.get(2, 5) is None
    assert not path.exists()


@pytest.mark.asyncio
async def test_keys_and_delete(cache):
    """Test listing and deleting cached documents"""
    repository = DecompositionRepository()
    assert await repository.get_all_keys() == []
    for n, p in [(3, 2), (2, 2), (4, 3)]:
        await repository.save(canonical_basis(n, p))
    assert await repository.get_all_keys() == [(2, 2), (2, 3), (3, 4)]
    assert await repository.delete(2, 3)
    assert not await repository.delete(2, 3)
    assert await repository.get_all_keys() == [(2, 2), (3, 4)]


@pytest.mark.asyncio
async def test_repository_needs_open_cache():
    """Test the repository refuses to work without a cache root"""
    await CacheDirectory.close_cache()
    with pytest.raises(CacheException):
        DecompositionRepository()


@pytest.mark.asyncio
async def test_warm_cache_equals_cold(cache, settings):
    """Test a cached decomposition matrix equals a fresh computation"""
    cold = await DecompositionService(settings).get_decomposition(5, 2)
    assert (cache / "decomp" / "p2" / "n5.json").exists()
    service = DecompositionService(settings)
    assert service.repository is not None
    warm = await service.get_decomposition(5, 2)
    assert warm == cold
    assert warm == canonical_basis(5, 2)


@pytest.mark.asyncio
async def test_service_without_cache(tmp_path):
    """Test the service computes directly when caching is disabled"""
    settings = Settings(cache_dir=tmp_path / "cache", cache_enabled=False)
    service = DecompositionService(settings)
    assert service.repository is None
    c = await service.get_cartan(3, 2)
    assert c.size == 2
    assert not (tmp_path / "cache").exists()


@pytest.mark.asyncio
async def test_service_limits(settings):
    """Test requests past max_cartan_n are refused"""
    service = DecompositionService(settings)
    with pytest.raises(BadRequestException):
        await service.get_decomposition(settings.max_cartan_n + 1, 2)
    with pytest.raises(ValidationException):
        await service.get_decomposition(3, 1)


@pytest.mark.asyncio
async def test_get_block(settings):
    """Test selecting a block by its core"""
    service = DecompositionService(settings)
    block = await service.get_block(5, 2, Partition((2, 1)))
    assert block.labels == [Partition((4, 1))]
    with pytest.raises(ValidationException):
        await service.get_block(5, 2, Partition((2,)))
    with pytest.raises(NotFoundException):
        await service.get_block(4, 2, Partition((1,)))
