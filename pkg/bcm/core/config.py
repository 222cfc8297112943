"""Application configuration with environment variables."""
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Settings loaded from environment variables (prefix ``BCM_``)."""

    # Application
    APP_NAME: str = "bcm"
    APP_VERSION: str = "0.1.0"
    LOG_LEVEL: str = "WARNING"

    # Enumeration bounds
    MAX_PROP_ATOMS: int = 4
    MAX_HORN_ATOMS: int = 4
    MAX_THREEVAL_ATOMS: int = 2
    MAX_GOEDEL_ATOMS: int = 2
    MAX_GOEDEL_CLASS_ATOMS: int = 3  # 4 atoms give 541 ordered partitions
    MAX_LATTICE_UNIVERSE: int = 5  # model classes, i.e. 32 lattice nodes

    # Operators
    DEFAULT_SELECTION: str = "lex-min"
    DEFAULT_THETA: float = 0.5
    GOEDEL_EXCLUDED_MIDDLE: bool = False  # use (!a | a) instead of !(!a & a)
    LTLX_SEARCH_DEPTH: int = 64

    class Config:
        # python-dotenv reads .env, environment variables take precedence
        env_file = ".env"
        env_prefix = "BCM_"
        case_sensitive = True


# Create global settings instance
settings = Settings()
