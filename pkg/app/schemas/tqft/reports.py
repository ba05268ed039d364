"""
Reports produced by the evaluation and fuzzing commands.
"""

from typing import List, Optional

from pydantic import Field

from app.config.constants import FAIL, PASS
from app.schemas.common.base_schema import BaseSchema
from app.utils.i18n import report_message


class OperatorReport(BaseSchema):
    """Dense row-major matrix of exact scalars with a width header"""

    in_width: int
    out_width: int
    rows: List[List[str]]

    def render(self) -> str:
        height = len(self.rows)
        width = len(self.rows[0]) if self.rows else 0
        lines = [f"operator {self.in_width} -> {self.out_width} ({height}x{width})"]
        lines.extend("[" + ", ".join(row) + "]" for row in self.rows)
        return "\n".join(lines)


class InvariantTable(BaseSchema):
    """Closed invariants mu(H^g) for g = 0..max_genus"""

    values: List[str]

    def render(self) -> str:
        return ", ".join(f"g={g}: {v}" for g, v in enumerate(self.values))


class CounterexampleReport(BaseSchema):
    """Two theories with equal closed invariants told apart by the nilpotency index"""

    max_genus: int
    left_invariants: List[str]
    right_invariants: List[str]
    left_index: int
    right_index: int
    left_socle_dim: int
    right_socle_dim: int

    @property
    def invariants_equal(self) -> bool:
        return self.left_invariants == self.right_invariants

    @property
    def distinguished(self) -> bool:
        return self.invariants_equal and self.left_index != self.right_index

    def render(self) -> str:
        if not self.invariants_equal:
            return report_message(
                "counterexample_failed",
                left=_tuple_text(self.left_invariants),
                right=_tuple_text(self.right_invariants),
            )
        return report_message(
            "counterexample",
            genus=self.max_genus,
            invariants=_tuple_text(self.left_invariants),
            left=self.left_index,
            right=self.right_index,
        )


class FuzzFailure(BaseSchema):
    case: int
    word: str
    move: Optional[str] = None
    reason: str


class FuzzReport(BaseSchema):
    """Outcome of a seeded fuzz run; failures are ordered by case index"""

    title: str
    cases: int = 0
    moves: int = 0
    failures: List[FuzzFailure] = Field(default_factory=list)
    with_moves: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self) -> str:
        marker = PASS if self.passed else FAIL
        if self.with_moves:
            summary = report_message("fuzz_summary", cases=self.cases, moves=self.moves, failures=len(self.failures))
        else:
            summary = report_message("oracle_summary", cases=self.cases, failures=len(self.failures))
        lines = [f"{marker} {self.title}: {summary}"]
        if self.failures:
            first = self.failures[0]
            move = f" move {first.move}" if first.move else ""
            lines.append(f"first failure: case {first.case}{move}: {first.reason}: {first.word}")
        return "\n".join(lines)


def _tuple_text(values: List[str]) -> str:
    return "(" + ",".join(values) + ")"

