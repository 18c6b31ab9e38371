from typing import List

from pydantic import BaseModel


class CheckRecord(BaseModel):
    subject: str
    check: str
    passed: bool
    detail: str = ""


class VerificationDocument(BaseModel):
    passed: bool
    checks: List[CheckRecord]
