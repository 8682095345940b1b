"""
Configuration settings for the maze mappers.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Logging (the only environment-backed settings; they never change computed output)
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
LOG_FILE_PATH: Optional[str] = os.getenv("LOG_FILE_PATH")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Laplace solver (SOR)
SOR_OMEGA = 1.8
SOR_TOLERANCE = 1e-10
SOR_MAX_ITERS = 200_000

# Clamped chemoattractant diffusion
CHEMO_DIFFUSION = 1.0
CHEMO_DT = 0.2  # D*dt = 0.2 < 0.25
CHEMO_THRESHOLD = 0.05
CHEMO_CLAMP_VALUE = 1.0
CHEMO_MAX_STEPS = 200_000

# Oregonator excitable medium
OREGONATOR_EPSILON = 0.02
OREGONATOR_F = 1.4
OREGONATOR_Q = 0.002
OREGONATOR_DU = 1.0
OREGONATOR_DT = 1e-3
OREGONATOR_UPSCALE = 8
OREGONATOR_MAX_STEPS = 200_000
OREGONATOR_ARRIVAL_LEVEL = 0.5
OREGONATOR_DEATH_LEVEL = 0.1

# Dye transport
DYE_DIFFUSION = 0.01
DYE_DT = 1.0

# Rendering
DEFAULT_SCALE = 4


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configure root logging for command-line use.

    Args:
        level: Optional level name overriding LOG_LEVEL
    """
    handlers: list = [logging.StreamHandler()]
    if LOG_FILE_PATH:
        handlers.append(logging.FileHandler(LOG_FILE_PATH, mode="a"))

    logging.basicConfig(
        level=(level or LOG_LEVEL).upper(),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
