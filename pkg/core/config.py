from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings loaded from SLP_* environment variables."""

    # Worker pool (--workers overrides)
    workers: int = Field(default=1, ge=1)

    # Logging
    log_level: str = "WARNING"

    # NNLS solver
    nnls_tolerance: float = Field(default=1e-10, gt=0)
    nnls_max_iter_factor: int = Field(default=30, ge=1)

    # Channel acceptance
    condition_limit: float = Field(default=1e12, gt=1)
    max_channel_redraws: int = Field(default=3, ge=0)

    # Benchmark
    warmup_trials: int = Field(default=10, ge=0)
    output_dir: str = "results"

    model_config = SettingsConfigDict(
        env_prefix="SLP_",
        env_file=(".env", ".env.local"),
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


settings = Settings()
