"""Fluid (pressure-driven flow) mapper and dye transport."""

from .dye import DyeState, advect_dye, cfl_number, dye_breakthrough_time
from .pressure import FluidMap, branch_speeds, map_pressure, trace_streamline

__all__ = [
    'DyeState',
    'FluidMap',
    'advect_dye',
    'branch_speeds',
    'cfl_number',
    'dye_breakthrough_time',
    'map_pressure',
    'trace_streamline',
]
