from pydantic import BaseModel, Field


class SelftestConfig(BaseModel):
    """Sizes and tolerance for `selftest`."""
    problems: int = Field(default=300, ge=1)
    max_n: int = Field(default=8, ge=1, le=14)  # oracle cost is 2^n solves
    slots: int = Field(default=100, ge=1)
    tolerance: float = Field(default=1e-8, gt=0)
    seed: int = Field(default=0, ge=0)
    ring_ratio: float = Field(default=2.7, gt=1)

    model_config = {"frozen": True}


class SuiteResult(BaseModel):
    """Outcome of one self-test suite."""
    name: str
    cases: int
    failures: list[str]
    worst: float = 0.0  # largest observed deviation

    @property
    def passed(self) -> bool:
        return not self.failures


class SelftestReport(BaseModel):
    suites: list[SuiteResult]
    elapsed_s: float

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)
