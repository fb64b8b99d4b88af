from dataclasses import replace
import json

import pytest

from qcartan.exceptions import BadRequestException, ConsistencyException, NotFoundException, ValidationException
from qcartan.models import Verdict
from qcartan.services import STATEMENT_ALIASES, STATEMENTS, VerificationJob, VerificationService, statement_name
from qcartan.services import statements, verification_service
from qcartan.services.statements import CheckOutcome


@pytest.fixture
def service(settings):
    return VerificationService(settings)


def test_statement_catalogue(settings):
    """Test every statement names a configured limit"""
    assert len(STATEMENTS) == 16
    for statement in STATEMENTS.values():
        assert statement.default_bound <= getattr(settings, statement.limit)
    assert [name for name, s in STATEMENTS.items() if s.reported] == ["elementary-divisors"]


@pytest.mark.asyncio
async def test_cardinalities(service):
    """Test a passing statement"""
    report = await service.run("cardinalities", bound=8)
    assert report.verdict == Verdict.PASS
    assert report.checked == 4 * 9
    assert report.witness is None
    assert report.parameters == {"p": [2, 3, 4, 5], "n_max": 8}
    assert report.timing is not None


@pytest.mark.asyncio
async def test_single_prime(service):
    """Test restricting a statement to one p"""
    report = await service.run("graded-part-product", p=3, bound=20)
    assert report.verdict == Verdict.PASS
    assert report.checked == 20
    assert report.parameters == {"p": [3], "m_max": 20}


@pytest.mark.asyncio
async def test_short_ids(service):
    """Test short statement ids resolve to the descriptive names"""
    report = await service.run("lemma-3.1", p=3, bound=20)
    assert report.statement == "graded-part-product"
    assert report.verdict == Verdict.PASS
    assert service.get_statement("conj-8.2").name == "elementary-divisors"
    for alias, name in STATEMENT_ALIASES.items():
        assert statement_name(alias) == name
        assert name in STATEMENTS
    assert statement_name("series") == "series"


@pytest.mark.asyncio
@pytest.mark.parametrize(
    "name,bound",
    [
        ("graded-part-telescoping", 30),
        ("weight-multisets", 6),
        ("weight-products", 6),
        ("determinant-products", 6),
        ("glaisher-exponents", 6),
        ("block-exponents", 4),
        ("multiplicity-sums", 8),
        ("involution", 8),
        ("series", 8),
    ]
)
async def test_enumerative_statements(service, name, bound):
    """Test the enumerative statements over small ranges"""
    report = await service.run(name, bound=bound)
    assert report.verdict == Verdict.PASS, report.witness
    assert report.checked > 0


@pytest.mark.asyncio
@pytest.mark.parametrize("name", ["classical-specialization", "decomposition-matrix", "block-determinants"])
async def test_cartan_statements(service, name):
    """Test the statements that need C_n(q)"""
    report = await service.run(name, bound=5)
    assert report.verdict == Verdict.PASS, report.witness
    assert report.parameters["n_max_by_p"] == {"2": 5, "3": 5}


@pytest.mark.asyncio
async def test_default_n_range_per_prime(service, monkeypatch):
    """Test a defaulted run records the smaller n range it used for p = 3"""
    monkeypatch.setitem(STATEMENTS, "block-determinants", replace(STATEMENTS["block-determinants"], default_bound=4))
    monkeypatch.setattr(verification_service, "_DEFAULT_N_BY_P", {3: 2})
    report = await service.run("block-determinants")
    assert report.verdict == Verdict.PASS, report.witness
    assert report.parameters == {"p": [2, 3], "n_max": 4, "n_max_by_p": {"2": 4, "3": 2}}


@pytest.mark.asyncio
async def test_habacus_blocks(service):
    """Test the p = 2 block statement"""
    report = await service.run("habacus-blocks", bound=3)
    assert report.verdict == Verdict.PASS, report.witness
    assert report.parameters == {"p": [2], "d_max": 3}


@pytest.mark.asyncio
async def test_elementary_divisors_are_reported(service):
    """Test the comparison is reported rather than judged"""
    report = await service.run("elementary-divisors", p=2, bound=3)
    assert report.verdict == Verdict.REPORTED
    assert report.checked > 0


@pytest.mark.asyncio
async def test_unknown_statement(service):
    with pytest.raises(NotFoundException):
        await service.run("no-such-statement")


@pytest.mark.asyncio
async def test_refusals(service, settings):
    """Test bounds past the configured limits are refused before any work"""
    with pytest.raises(BadRequestException):
        await service.run("cardinalities", bound=settings.max_enumeration_n + 1)
    with pytest.raises(BadRequestException):
        await service.run("decomposition-matrix", bound=settings.max_cartan_n + 1)
    with pytest.raises(BadRequestException):
        await service.run("habacus-blocks", bound=7)
    with pytest.raises(ValidationException):
        await service.run("habacus-blocks", p=3, bound=1)
    with pytest.raises(ValidationException):
        await service.run("cardinalities", p=1, bound=3)
    with pytest.raises(ValidationException):
        await service.run("cardinalities", bound=-1)


@pytest.mark.asyncio
async def test_inconsistency_becomes_failure(service, monkeypatch):
    """Test an internal inconsistency is reported as a failed statement"""
    def broken(primes, n_max):
        raise ConsistencyException(detail="broken identity")

    monkeypatch.setattr(statements, "cardinalities", broken)
    report = await service.run("cardinalities", bound=3)
    assert report.verdict == Verdict.FAIL
    assert report.witness == {"error": "broken identity"}


@pytest.mark.asyncio
async def test_counterexample_becomes_failure(service, monkeypatch):
    """Test a witness fails the statement"""
    def failing(primes, n_max):
        outcome = CheckOutcome()
        outcome.record(True, n=0)
        outcome.record(False, n=1)
        outcome.record(False, n=2)
        return outcome

    monkeypatch.setattr(statements, "multiplicity_sums", failing)
    report = await service.run("multiplicity-sums", bound=3)
    assert report.verdict == Verdict.FAIL
    assert report.checked == 3
    assert report.witness == {"n": 1}


@pytest.mark.asyncio
async def test_run_many_keeps_job_order(service):
    """Test concurrent jobs report in submission order"""
    jobs = [
        VerificationJob("series", bound=6),
        VerificationJob("cardinalities", p=2, bound=4),
        VerificationJob("multiplicity-sums", bound=5),
    ]
    reports = await service.run_many(jobs)
    assert [r.statement for r in reports] == ["series", "cardinalities", "multiplicity-sums"]
    assert all(r.verdict == Verdict.PASS for r in reports)


@pytest.mark.asyncio
async def test_run_many_refuses_before_running(service):
    """Test one refused job stops the whole batch"""
    with pytest.raises(BadRequestException):
        await service.run_many([
            VerificationJob("cardinalities", bound=3),
            VerificationJob("cardinalities", bound=10_000),
        ])


@pytest.mark.asyncio
async def test_reports_are_deterministic(service):
    """Test two identical runs give identical JSON apart from timing"""
    first = await service.run("weight-products", p=3, bound=6)
    second = await service.run("weight-products", p=3, bound=6)
    assert first.deterministic_json() == second.deterministic_json()
    assert "timing" not in json.loads(first.deterministic_json())
