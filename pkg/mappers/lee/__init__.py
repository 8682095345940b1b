"""Lee wavefront mapper."""

from .wavefront import lee_map, lee_trace, lee_wave

__all__ = ['lee_map', 'lee_trace', 'lee_wave']
