"""
Standardized report format for CLI commands.

Every verification command produces a list of named checks, each passing or
failing, rendered one per line with a PASS/FAIL marker.
"""

from typing import Any, Dict, List, Optional

from pydantic import Field

from app.config.constants import EXIT_FAILURE, EXIT_OK, FAIL, PASS
from app.schemas.common.base_schema import BaseSchema
from app.utils.i18n import report_message


class CheckResult(BaseSchema):
    """One named check"""

    name: str = Field(..., description="What was checked")
    passed: bool = Field(..., description="Whether the check held exactly")
    detail: Optional[str] = Field(None, description="Counterexample or value, when useful")

    def render(self) -> str:
        marker = PASS if self.passed else FAIL
        return f"{marker} {self.name}" + (f": {self.detail}" if self.detail else "")


class CheckReport(BaseSchema):
    """A titled list of checks"""

    title: str = Field(..., description="Report title")
    checks: List[CheckResult] = Field(default_factory=list, description="Checks in execution order")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def extend(self, checks: List[CheckResult]) -> "CheckReport":
        self.checks.extend(checks)
        return self

    def render(self) -> str:
        lines = [self.title]
        lines.extend(c.render() for c in self.checks)
        total = len(self.checks)
        if self.passed:
            lines.append(report_message("all_passed", total=total))
        else:
            lines.append(report_message("failures", count=len(self.failures), total=total))
        return "\n".join(lines)


class ErrorDetail(BaseSchema):
    """Standard error line written when a command fails"""

    message: str = Field(..., description="Error message")
    exit_code: int = Field(..., description="Process exit status")
    details: Dict[str, Any] = Field(default_factory=dict, description="Structured witness")
    run_id: Optional[str] = Field(None, description="Run ID for finding the log records")

    def render(self) -> str:
        return f"error: {self.message}"


class CommandResult(BaseSchema):
    """Text a command writes to standard output and its exit status"""

    output: str = Field(..., description="Rendered report")
    exit_code: int = Field(EXIT_OK, description="Process exit status")


class ReportBuilder:
    """Builder class for creating reports"""

    @staticmethod
    def check(name: str, passed: bool, detail: Optional[str] = None) -> CheckResult:
        return CheckResult(name=name, passed=bool(passed), detail=detail)

    @staticmethod
    def report(title: str, checks: Optional[List[CheckResult]] = None) -> CheckReport:
        return CheckReport(title=title, checks=list(checks or []))

    @staticmethod
    def result(output: str, passed: bool = True) -> CommandResult:
        return CommandResult(output=output, exit_code=EXIT_OK if passed else EXIT_FAILURE)

    @staticmethod
    def error(
        message: str, exit_code: int, details: Optional[Dict[str, Any]] = None, run_id: Optional[str] = None
    ) -> ErrorDetail:
        return ErrorDetail(message=message, exit_code=exit_code, details=details or {}, run_id=run_id)
