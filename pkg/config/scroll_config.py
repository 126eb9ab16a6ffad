"""
Scroll Toolkit Configuration

Seeds, trial counts and size thresholds shared by the curve services, the
acceptance battery and the command line front end.
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class ScrollConfig(BaseSettings):
    """Configuration for the exact curve and scroll computations"""

    # Randomness - every random choice is drawn from a seeded generator
    seed: int = Field(default=20240611, validation_alias="SCROLL_SEED")
    map_degree_trials: int = Field(default=5, validation_alias="SCROLL_MAP_DEGREE_TRIALS")
    retry_trials: int = Field(default=20, validation_alias="SCROLL_RETRY_TRIALS")
    sample_bound: int = Field(default=97, validation_alias="SCROLL_SAMPLE_BOUND")

    # Determinant strategy
    cofactor_max_size: int = Field(default=6, validation_alias="SCROLL_COFACTOR_MAX_SIZE")

    # Acceptance battery corpus sizes
    battery_planted: int = Field(default=60, validation_alias="SCROLL_BATTERY_PLANTED")
    battery_random: int = Field(default=8, validation_alias="SCROLL_BATTERY_RANDOM")
    battery_projections: int = Field(default=10, validation_alias="SCROLL_BATTERY_PROJECTIONS")

    log_level: str = Field(default="WARNING", validation_alias="SCROLL_LOG_LEVEL")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",  # Ignore extra fields from .env that we don't use
        populate_by_name=True  # Allow both field name and alias
    )

    def validate_config(self) -> bool:
        """Validate that counts and bounds are usable"""
        counts = {
            "SCROLL_MAP_DEGREE_TRIALS": self.map_degree_trials,
            "SCROLL_RETRY_TRIALS": self.retry_trials,
            "SCROLL_SAMPLE_BOUND": self.sample_bound,
            "SCROLL_COFACTOR_MAX_SIZE": self.cofactor_max_size,
            "SCROLL_BATTERY_PLANTED": self.battery_planted,
            "SCROLL_BATTERY_RANDOM": self.battery_random,
            "SCROLL_BATTERY_PROJECTIONS": self.battery_projections,
        }
        for name, value in counts.items():
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")
        if self.seed < 0:
            raise ValueError(f"SCROLL_SEED must be non-negative, got {self.seed}")
        return True


# Global configuration instance
scroll_config = ScrollConfig()


def get_scroll_config() -> ScrollConfig:
    """Get the scroll configuration instance"""
    return scroll_config
