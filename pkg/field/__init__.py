"""Grid numerics shared by all mappers: fields, Laplace solver, diffusion, tracing."""

from .diffusion import diffuse_step, dilate_front, masked_laplacian
from .laplace import require_converged, solve_laplace
from .models import ScalarField, SolveReport, SolverConfig, TraceMode, VectorField
from .tracing import gradient, greedy_trace

__all__ = [
    'ScalarField',
    'SolveReport',
    'SolverConfig',
    'TraceMode',
    'VectorField',
    'diffuse_step',
    'dilate_front',
    'gradient',
    'greedy_trace',
    'masked_laplacian',
    'require_converged',
    'solve_laplace',
]
