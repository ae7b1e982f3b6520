"""Pydantic schemas for benchmark configuration and per-trial results."""

import math

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from models.enums import ModulationToken


class TrialConfig(BaseModel):
    """Everything that determines a benchmark run, seeds included."""
    n_r: int = Field(..., ge=1)
    n_t_values: list[int] = Field(..., min_length=1)
    constellation: ModulationToken = ModulationToken.QPSK
    gamma_db: list[float] = Field(default_factory=lambda: [10.0], min_length=1)
    trials: int = Field(..., ge=1)
    noise_var: float = Field(default=0.0, ge=0)
    master_seed: int = Field(default=1, ge=0)
    ring_ratio: float = Field(default=2.7, gt=1)

    # Execution
    workers: int = Field(default=1, ge=1)
    warmup_trials: int | None = Field(default=None, ge=0)
    nnls_tolerance: float | None = Field(default=None, gt=0)
    nnls_max_iter: int | None = Field(default=None, ge=1)

    model_config = {"frozen": True}

    @field_validator("gamma_db", mode="before")
    @classmethod
    def _scalar_gamma(cls, value):
        if isinstance(value, (int, float)):
            return [value]
        return value

    @field_validator("gamma_db")
    @classmethod
    def _finite_gamma(cls, value: list[float]) -> list[float]:
        if not all(math.isfinite(g) for g in value):
            raise ValueError("gamma_db must be finite")
        return value

    @model_validator(mode="after")
    def _check_dimensions(self):
        short = [nt for nt in self.n_t_values if nt < self.n_r]
        if short:
            raise ValueError(f"every n_t must be >= n_r={self.n_r}, got {short}")
        if len(self.gamma_db) not in (1, self.n_r):
            raise ValueError(f"gamma_db needs 1 or {self.n_r} values, got {len(self.gamma_db)}")
        return self

    @property
    def gamma_amplitude(self) -> np.ndarray:
        """Per-user √γ_k, linear."""
        amp = 10.0 ** (np.asarray(self.gamma_db, dtype=float) / 20.0)
        return np.broadcast_to(amp, (self.n_r,)).copy()


class TrialRecord(BaseModel):
    """One row of trials.csv."""
    nt: int
    trial: int
    power_zf: float = math.nan
    power_slp: float = math.nan
    solve_time_ns: int = 0
    correction_time_ns: int = 0
    corrections: int = 0  # users whose perturbation was altered
    discarded: bool = False
    redraws: int = 0
    symbols: int = 0
    errors_zf: int = 0
    errors_slp: int = 0
    warmup: bool = False  # first trials of a worker chunk, left out of timing


class NtSummary(BaseModel):
    """Aggregates for one transmit-antenna count."""
    nt: int
    trials: int
    kept: int
    discarded_trials: int
    redraws: int
    mean_power_zf: float
    mean_power_slp: float
    gain_db: float
    mean_time_ns: float
    median_time_ns: float
    p95_time_ns: float
    median_correction_time_ns: float
    correction_rate: float
    ser_zf: float | None = None
    ser_slp: float | None = None


class BenchReport(BaseModel):
    config: TrialConfig
    summaries: list[NtSummary]
    records: list[TrialRecord]

    def summary_for(self, nt: int) -> NtSummary:
        for summary in self.summaries:
            if summary.nt == nt:
                return summary
        raise KeyError(nt)
