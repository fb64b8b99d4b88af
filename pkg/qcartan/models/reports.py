from pydantic import BaseModel, Field
from typing import Any, Dict, Optional
from datetime import datetime
from enum import Enum


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    REPORTED = "reported"


class Timing(BaseModel):
    started_at: datetime
    runtime_seconds: float = Field(..., ge=0)


class VerificationReport(BaseModel):
    statement: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    verdict: Verdict
    checked: int = Field(0, ge=0, description="Number of individual instances checked")
    witness: Optional[Dict[str, Any]] = None
    timing: Optional[Timing] = None

    def deterministic_json(self) -> str:
        """JSON without the timing sub-object; identical for identical invocations"""
        return self.model_dump_json(exclude={"timing"})
