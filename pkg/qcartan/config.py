from pathlib import Path
import sys

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    cache_dir: Path = Field(Path("cache"), description="Root directory of the decomposition-matrix cache")
    cache_enabled: bool = Field(True, description="Read and write the disk cache")
    series_order: int = Field(30, ge=0, description="Default truncation order of power series")
    fiber_order: int = Field(24, ge=0, description="Order used by the alpha/beta fiber series checks")
    max_enumeration_n: int = Field(30, ge=0, description="Largest n accepted by enumeration commands")
    max_cartan_n: int = Field(12, ge=0, description="Largest n accepted by LLT, Cartan and SNF commands")
    max_lemma_m: int = Field(400, ge=1, description="Largest m accepted by the graded p-part lemma sweeps")
    max_block_weight: int = Field(8, ge=0, description="Largest block weight d accepted by block checks")
    max_workers: int = Field(4, ge=1, description="Concurrent verification jobs")
    log_level: str = Field("WARNING", description="Root log level")

    model_config = SettingsConfigDict(
        env_prefix="QCARTAN_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )


def load_settings() -> Settings:
    """Load settings with proper error handling"""
    try:
        return Settings()
    except ValidationError as e:
        invalid_fields = []
        for error in e.errors():
            field_name = str(error['loc'][0]) if error['loc'] else "?"
            invalid_fields.append((f"QCARTAN_{field_name.upper()}", error['msg']))

        error_message = f"""
╔════════════════════════════════════════════════════════════════════╗
║                   CONFIGURATION ERROR                              ║
╚════════════════════════════════════════════════════════════════════╝

Invalid values for environment variables (or .env entries):
{chr(10).join(f'  ❌ {name}: {msg}' for name, msg in invalid_fields)}

All variables are optional; see .env.example for the defaults:

QCARTAN_CACHE_DIR=cache
QCARTAN_SERIES_ORDER=30
QCARTAN_MAX_CARTAN_N=12
QCARTAN_MAX_WORKERS=4
QCARTAN_LOG_LEVEL=WARNING
"""
        print(error_message, file=sys.stderr)
        sys.exit(3)


settings = load_settings()
