try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from typing import Any

from pydantic import BaseModel, Field, SerializeAsAny, computed_field


class CheckStatus(StrEnum):
    PASSED = "pass"
    FAILED = "fail"
    # проверка не может быть выполнена по математическим причинам (напр., характеристика поля)
    REFUSED = "refused"


class Witness(BaseModel):
    indices: list[int] | None = None
    prime: int | None = None
    homological_index: int | None = None
    graded_degree: int | None = None
    vector: list[str] | None = None
    polynomial: str | None = None
    # степень гипотезы, нарушение которой удостоверяет свидетель
    conjecture_degree: int | None = None
    note: str | None = None


class CheckResult(BaseModel):
    name: str
    status: CheckStatus
    method: str | None = None
    detail: str | None = None
    witness: Witness | None = None

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASSED


class VerificationReport(BaseModel):
    subject: str
    checks: list[CheckResult] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, **kw: Any) -> CheckResult:
        check = CheckResult(name=name, status=CheckStatus.PASSED if passed else CheckStatus.FAILED, **kw)
        self.checks.append(check)
        return check

    def refuse(self, name: str, **kw: Any) -> CheckResult:
        check = CheckResult(name=name, status=CheckStatus.REFUSED, **kw)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: str | None = None) -> None:
        for check in other.checks:
            name = f"{prefix}.{check.name}" if prefix else check.name
            self.checks.append(check.model_copy(update={"name": name}))

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def first_witness(self) -> Witness | None:
        return next((check.witness for check in self.failures() if check.witness is not None), None)


class Report(BaseModel):
    """Конверт отчета командной строки; порядок ключей фиксирован порядком полей"""
    model_config = {"populate_by_name": True}

    schema_version: int = Field(default=1, serialization_alias="schema", validation_alias="schema")
    command: str
    config: dict[str, Any]
    passed: bool
    result: SerializeAsAny[BaseModel]
    version: str
    wall_clock: float | None = None
