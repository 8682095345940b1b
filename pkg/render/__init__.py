"""Bit-exact raster output of fields, overlays and labels."""

from .netpbm import (
    PALETTE,
    Raster,
    quantize,
    render_labels_ppm,
    render_overlay_ppm,
    render_scalar_pgm,
)

__all__ = [
    'PALETTE',
    'Raster',
    'quantize',
    'render_labels_ppm',
    'render_overlay_ppm',
    'render_scalar_pgm',
]
