import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _flag(name, default="False"):
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Config:
    """Application configuration"""

    # Rendering (display only, never consulted by exact predicates)
    RENDER_WIDTH = int(os.getenv("EQUIDISSECT_RENDER_WIDTH", "640"))
    RENDER_MARGIN = int(os.getenv("EQUIDISSECT_RENDER_MARGIN", "24"))
    DECIMAL_DIGITS = int(os.getenv("EQUIDISSECT_DECIMAL_DIGITS", "12"))
    LABEL_FACES = _flag("EQUIDISSECT_LABEL_FACES")

    # Batch sweep
    SWEEP_WORKERS = int(os.getenv("EQUIDISSECT_SWEEP_WORKERS", "1"))
    OUTPUT_DIR = os.getenv(
        "EQUIDISSECT_OUTPUT_DIR", os.path.join(os.path.dirname(__file__), "output")
    )

    # Spectrum; 0 means 2r + 1
    SPECTRUM_LIMIT = int(os.getenv("EQUIDISSECT_SPECTRUM_LIMIT", "0"))

    # Logging
    LOG_LEVEL = os.getenv("EQUIDISSECT_LOG_LEVEL", "WARNING").upper()

    def spectrum_limit(self, r):
        return self.SPECTRUM_LIMIT if self.SPECTRUM_LIMIT > 0 else 2 * r + 1


config = Config()
