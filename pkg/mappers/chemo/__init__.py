"""Diffusion mappers: chemoattractant field, arrival times, Oregonator wave, Voronoi."""

from .diffusion import (
    NEVER,
    ArrivalField,
    ChemoConfig,
    DiffusionRun,
    arrival_descent_trace,
    arrival_time_map,
    chemotactic_trace,
    map_chemoattractant,
    run_clamped_diffusion,
)
from .oregonator import OregonatorParams, OregonatorState, oregonator_wave, run_oregonator
from .voronoi import UNLABELLED, seed_arrivals, voronoi_from_seeds

__all__ = [
    'NEVER',
    'UNLABELLED',
    'ArrivalField',
    'ChemoConfig',
    'DiffusionRun',
    'OregonatorParams',
    'OregonatorState',
    'arrival_descent_trace',
    'arrival_time_map',
    'chemotactic_trace',
    'map_chemoattractant',
    'oregonator_wave',
    'run_clamped_diffusion',
    'run_oregonator',
    'seed_arrivals',
    'voronoi_from_seeds',
]
