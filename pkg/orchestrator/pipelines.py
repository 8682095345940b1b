"""
Mapper pipelines: each one maps the maze into a field, then traces it.

A pipeline takes the grid, the layered configuration and an optional
snapshot hook and returns a PipelineOutcome. Errors propagate; the
orchestrator decides whether they abort the command or land in a report.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from config import settings
from field.laplace import require_converged
from field.models import ScalarField, SolverConfig
from mappers.chemo import (
    ChemoConfig,
    OregonatorParams,
    arrival_descent_trace,
    arrival_time_map,
    chemotactic_trace,
    run_clamped_diffusion,
    run_oregonator,
)
from mappers.electrical import map_potential, thermal_map, trace_voltage_ascent
from mappers.fluid import DyeState, advect_dye, map_pressure, trace_streamline
from mappers.lee import lee_trace, lee_wave
from maze.models import MazeGrid, PathTrace

Snapshot = Callable[[int, ScalarField], None]


class DyeConfig(BaseModel):
    """Dye run attached to the fluid pipeline; ``steps = 0`` skips it."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    D: float = Field(default=settings.DYE_DIFFUSION, ge=0)
    dt: float = Field(default=settings.DYE_DT, gt=0)
    steps: int = Field(default=0, ge=0)


class PipelineConfig(BaseModel):
    """Per-mapper settings, one section each, as read from a JSON config file."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    solver: SolverConfig = SolverConfig()
    chemo: ChemoConfig = ChemoConfig()
    oregonator: OregonatorParams = OregonatorParams()
    dye: DyeConfig = DyeConfig()


@dataclass
class PipelineOutcome:
    """Traced path plus the fields worth rendering."""

    path: PathTrace
    converged: bool
    iterations: int
    fields: Dict[str, ScalarField]


def run_lee(
    grid: MazeGrid,
    config: PipelineConfig,
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> PipelineOutcome:
    labels, layers = lee_wave(grid)
    path = lee_trace(labels, grid, grid.source)
    return PipelineOutcome(path=path, converged=True, iterations=layers, fields={"labels": labels})


def run_electrical(
    grid: MazeGrid,
    config: PipelineConfig,
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> PipelineOutcome:
    emap = map_potential(grid, config.solver)
    require_converged(emap.report, "electrical potential")
    return PipelineOutcome(
        path=trace_voltage_ascent(emap, grid),
        converged=emap.report.converged,
        iterations=emap.report.iterations,
        fields={"potential": emap.potential, "thermal": thermal_map(emap)},
    )


def run_fluid(
    grid: MazeGrid,
    config: PipelineConfig,
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> PipelineOutcome:
    fmap = map_pressure(grid, config.solver)
    require_converged(fmap.report, "fluid pressure")
    fields = {"pressure": fmap.pressure, "speed": ScalarField(fmap.speed())}
    if config.dye.steps > 0:
        dye = advect_dye(
            grid, fmap, DyeState.empty(grid), D=config.dye.D, dt=config.dye.dt, steps=config.dye.steps
        )
        fields["dye"] = dye.concentration
    return PipelineOutcome(
        path=trace_streamline(fmap, grid),
        converged=fmap.report.converged,
        iterations=fmap.report.iterations,
        fields=fields,
    )


def run_chemo(
    grid: MazeGrid,
    config: PipelineConfig,
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> PipelineOutcome:
    arrivals = arrival_time_map(grid, config.chemo, snapshot, snapshot_every)
    return PipelineOutcome(
        path=arrival_descent_trace(arrivals, grid),
        converged=True,
        iterations=arrivals.steps,
        fields={"arrivals": arrivals.as_field()},
    )


def run_chemotaxis(
    grid: MazeGrid,
    config: PipelineConfig,
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> PipelineOutcome:
    run = run_clamped_diffusion(grid, config.chemo, snapshot, snapshot_every)
    return PipelineOutcome(
        path=chemotactic_trace(run.concentration, grid),
        converged=run.arrivals.reached(grid.source),
        iterations=run.steps,
        fields={"concentration": run.concentration},
    )


def run_oregonator_pipeline(
    grid: MazeGrid,
    config: PipelineConfig,
    snapshot: Optional[Snapshot] = None,
    snapshot_every: int = 0,
) -> PipelineOutcome:
    arrivals, path = run_oregonator(grid, config.oregonator, snapshot, snapshot_every)
    return PipelineOutcome(
        path=path, converged=True, iterations=arrivals.steps, fields={"arrivals": arrivals.as_field()}
    )


Pipeline = Callable[..., PipelineOutcome]

PIPELINES: Dict[str, Pipeline] = {
    "chemo": run_chemo,
    "chemotaxis": run_chemotaxis,
    "electrical": run_electrical,
    "fluid": run_fluid,
    "lee": run_lee,
    "oregonator": run_oregonator_pipeline,
}

MAPPER_NAMES = tuple(sorted(PIPELINES))
