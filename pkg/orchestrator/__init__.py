"""Orchestrator package."""

from .main import MazeOrchestrator, RunReport, load_pipeline_config
from .pipelines import MAPPER_NAMES, PIPELINES, DyeConfig, PipelineConfig

__all__ = [
    'DyeConfig',
    'MAPPER_NAMES',
    'MazeOrchestrator',
    'PIPELINES',
    'PipelineConfig',
    'RunReport',
    'load_pipeline_config',
]
