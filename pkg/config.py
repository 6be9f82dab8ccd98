import os

from pydantic import Field, BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict


class ScanSettings(BaseModel):
    prime_bound: int = 10
    # перебор многочленов над F_p выполняется, только если p^d не больше этого числа
    brute_force_limit: int = 10**7


class KoszulSettings(BaseModel):
    # None - граница n(n+1)/2 - 1 по умолчанию
    degree_bound: int | None = None


class Settings(BaseSettings):
    workers: int = Field(default_factory=lambda: os.cpu_count() or 1)
    field: str = "q"
    output: str = "json"
    seed: int = 0
    log_level: str = "WARNING"
    scan: ScanSettings = Field(default_factory=ScanSettings)
    koszul: KoszulSettings = Field(default_factory=KoszulSettings)

    model_config = SettingsConfigDict(
        env_prefix="CA_", env_nested_delimiter="__"
    )


settings = Settings(_env_file=".env")
