from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass(frozen=True)
class Step:
    id: str
    description: str
    passed: bool


@dataclass
class VerificationReport:
    """Outcome of one verification run.

    ``overall`` is derived from the steps, so it can never disagree with them.
    ``theta`` is only set by the Chu-Vandermonde proof replay.
    """

    identity: str
    n: int
    steps: list[Step] = field(default_factory=list)
    theta: Fraction | None = None

    @property
    def overall(self) -> bool:
        return all(step.passed for step in self.steps)

    def failed_steps(self) -> list[Step]:
        return [step for step in self.steps if not step.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "n": self.n,
            "steps": [
                {"id": s.id, "description": s.description, "passed": s.passed}
                for s in self.steps
            ],
            "theta": None if self.theta is None else str(self.theta),
            "overall": self.overall,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerificationReport:
        theta = data.get("theta")
        report = cls(
            identity=data["identity"],
            n=int(data["n"]),
            steps=[Step(s["id"], s["description"], bool(s["passed"])) for s in data["steps"]],
            theta=None if theta is None else Fraction(theta),
        )
        if "overall" in data and bool(data["overall"]) != report.overall:
            raise ValueError("overall flag disagrees with the step flags")
        return report


def merge_reports(identity: str, n: int, parts: dict[str, VerificationReport]) -> VerificationReport:
    """Combine per-route reports for one ``n``; step ids get a ``route.`` prefix."""
    merged = VerificationReport(identity, n)
    for route, part in parts.items():
        merged.steps.extend(Step(f"{route}.{s.id}", s.description, s.passed) for s in part.steps)
        if part.theta is not None:
            merged.theta = part.theta
    return merged
