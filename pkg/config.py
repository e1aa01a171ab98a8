# config.py
from pydantic_settings import BaseSettings
from functools import lru_cache


class Settings(BaseSettings):
    # Exact-solver caps (desk-scale contract)
    search_max_edges: int = 28
    hamiltonian_max_n: int = 20
    profile_max_n: int = 14
    canonical_max_n: int = 10

    # Harness
    enumerate_max_n: int = 8
    monotonicity_max_n: int = 7
    default_jobs: int = 1
    pool_chunksize: int = 16
    show_progress: bool = True

    # App
    log_level: str = "WARNING"

    class Config:
        env_file = ".env"
        env_prefix = "PROPCONN_"


@lru_cache()
def get_settings():
    return Settings()


settings = get_settings()
