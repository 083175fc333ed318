"""Configuration management for the orthohomology toolkit."""

import logging
import os

logger = logging.getLogger(__name__)


class Config:
    """Configuration settings loaded from environment variables."""

    def __init__(self):
        # Logging settings
        self.log_level = os.environ.get('LOG_LEVEL', 'INFO').upper()
        self.service_name = os.environ.get('SERVICE_NAME', 'orthohomology')

        # Curve tracing settings
        self.trace_resolution = int(os.environ.get('TRACE_RESOLUTION', '256'))
        self.trace_bbox_scale = float(os.environ.get('TRACE_BBOX_SCALE', '1.5'))

        # Grid bands are evaluated in a thread pool; results are stacked in band order
        self.trace_band_rows = int(os.environ.get('TRACE_BAND_ROWS', '32'))
        self.max_concurrent_bands = int(os.environ.get('MAX_CONCURRENT_BANDS', '4'))

        # Float-path tolerances
        self.ceva_tolerance = float(os.environ.get('CEVA_TOLERANCE', '1e-9'))
        self.oracle_tolerance = float(os.environ.get('ORACLE_TOLERANCE', '1e-9'))

        # Verification sweep settings
        self.verify_samples = int(os.environ.get('VERIFY_SAMPLES', '100'))
        self.verify_seed = int(os.environ.get('VERIFY_SEED', '7'))
        self.random_coordinate_bound = int(os.environ.get('RANDOM_COORDINATE_BOUND', '1000'))

        # Float cross-checks skip points whose normalized coordinates exceed this
        self.conditioning_limit = float(os.environ.get('CONDITIONING_LIMIT', '20'))

        # Accepted --res range for the trace subcommand
        self.min_resolution = 2
        self.max_resolution = 8192

    def as_dict(self) -> dict:
        """Snapshot of the settings, for structured log context."""
        return dict(vars(self))


# Global config instance
config = Config()
