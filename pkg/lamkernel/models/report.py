from dataclasses import dataclass, field
from typing import List


@dataclass(frozen=True)
class Failure:
    """A replayable counterexample: the printed case and what went wrong with it."""
    case: str
    detail: str

    def __str__(self) -> str:
        return f"{self.case}  ({self.detail})"


@dataclass
class LemmaResult:
    name: str
    cases: int = 0
    failure_count: int = 0
    failures: List[Failure] = field(default_factory=list)
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def log_lines(self) -> List[str]:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status}  {self.name}  cases={self.cases}  "
                 f"failures={self.failure_count}  millis={self.millis}"]
        lines.extend(f"    {failure}" for failure in self.failures)
        return lines


@dataclass
class SuiteReport:
    system: str
    seed: int
    results: List[LemmaResult] = field(default_factory=list)

    @property
    def total_cases(self) -> int:
        return sum(r.cases for r in self.results)

    @property
    def total_failures(self) -> int:
        return sum(r.failure_count for r in self.results)

    @property
    def passed(self) -> bool:
        return self.total_failures == 0

    def result(self, name: str) -> LemmaResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_log_lines(self) -> List[str]:
        lines = []
        for r in self.results:
            lines.extend(r.log_lines())
        failed = sum(1 for r in self.results if not r.passed)
        lines.append(f"{len(self.results)} lemmas, {failed} failed, {self.total_cases} cases, "
                     f"{self.total_failures} failures (system={self.system}, seed={self.seed})")
        return lines
