from pathlib import Path
from pydantic_settings import BaseSettings

BASE_DIR = Path(__file__).resolve().parent


class Settings(BaseSettings):
    # Parallelism
    THREADS: int = -1  # joblib n_jobs; -1 uses every core

    # Numeric checks
    ROOT_TOLERANCE: float = 1e-9  # relative tolerance on |root| = sqrt(q)
    INTEGER_ROOT_BOUND: int = 10**6

    # Point counting
    MAX_FIELD_BITS: int = 24  # refuse to count over GF(2^k) beyond this
    DEFAULT_F32_MODULUS: str = "100101"  # t^5 + t^2 + 1

    # Enumeration cross-check against the brute-force stabilizer
    BRUTE_STABILIZER_MAX_UNITS: int = 256

    # Data
    ELIMINATED_POLYS_PATH: str = str(BASE_DIR / "data" / "eliminated_polynomials.json")

    # Output
    SCHEMA_VERSION: int = 1
    LOG_LEVEL: str = "WARNING"

    class Config:
        env_file = ".env"
        case_sensitive = True

# Global settings instance
settings = Settings()
