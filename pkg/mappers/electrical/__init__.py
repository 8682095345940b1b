"""Electrical (resistor network) mapper."""

from .potential import ElectricalMap, map_potential, thermal_map, trace_voltage_ascent

__all__ = ['ElectricalMap', 'map_potential', 'thermal_map', 'trace_voltage_ascent']
