from qcartan.services.decomposition_service import DecompositionService
from qcartan.services.conjecture_service import ConjectureService
from qcartan.services.verification_service import (
    STATEMENT_ALIASES,
    STATEMENTS,
    VerificationJob,
    VerificationService,
    statement_name,
)

__all__ = [
    "DecompositionService",
    "ConjectureService",
    "VerificationService",
    "VerificationJob",
    "STATEMENTS",
    "STATEMENT_ALIASES",
    "statement_name",
]
