"""
Tests for clamped chemoattractant diffusion and its two traces.
"""

import numpy as np
import pytest
from pydantic import ValidationError

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from field.models import ScalarField
from mappers.chemo import (
    NEVER,
    ChemoConfig,
    arrival_descent_trace,
    arrival_time_map,
    chemotactic_trace,
    map_chemoattractant,
    run_clamped_diffusion,
)
from maze.generator import generate
from maze.models import GenConfig
from maze.oracle import oracle_path
from utils.errors import FrontNeverArrivesError, PlateauError, UnstableStepError


class TestChemoConfig:
    """Test cases for ChemoConfig validation."""

    def test_defaults_are_stable(self):
        config = ChemoConfig()
        assert config.D * config.dt <= 0.25

    @pytest.mark.parametrize(
        "changes",
        [{"D": 0.0}, {"dt": -1.0}, {"threshold": 1.0}, {"clamp_value": 0.0}, {"max_steps": -1}],
    )
    def test_rejects_bad_values(self, changes):
        with pytest.raises(ValidationError):
            ChemoConfig(**changes)

    def test_threshold_below_clamp(self):
        with pytest.raises(ValidationError):
            ChemoConfig(threshold=0.5, clamp_value=0.4)


class TestRunClampedDiffusion:
    """Test cases for run_clamped_diffusion and map_chemoattractant."""

    def test_maximum_at_destination(self, perfect_maze):
        conc = map_chemoattractant(perfect_maze)
        assert conc.at(perfect_maze.destination) == conc.values.max() == 1.0

    def test_middle_ahead_of_source(self, line_maze):
        """Test the middle of 'S.D' leads the source at every step after the first."""
        frames = {}
        run_clamped_diffusion(line_maze, ChemoConfig(), lambda step, f: frames.update({step: f}), 1)
        assert sorted(frames) == list(range(len(frames)))
        for step, frame in frames.items():
            if step > 0:
                assert frame.at((1, 0)) > frame.at((0, 0))

    def test_zero_steps(self, perfect_maze):
        conc = map_chemoattractant(perfect_maze, ChemoConfig(max_steps=0))
        expected = np.zeros(perfect_maze.shape)
        x, y = perfect_maze.destination
        expected[y, x] = 1.0
        np.testing.assert_array_equal(conc.values, expected)

    def test_walls_stay_empty(self, braided_maze):
        conc = map_chemoattractant(braided_maze)
        assert np.all(conc.values[~braided_maze.corridor_mask()] == 0.0)

    def test_stops_when_source_crosses(self, perfect_maze):
        config = ChemoConfig()
        run = run_clamped_diffusion(perfect_maze, config)
        assert run.arrivals.at(perfect_maze.source) == run.steps
        assert run.concentration.at(perfect_maze.source) >= config.threshold

    def test_snapshot_period(self, corridor_maze):
        steps = []
        run = run_clamped_diffusion(corridor_maze(12), ChemoConfig(), lambda s, _: steps.append(s), 5)
        assert steps == list(range(0, run.steps + 1, 5))

    def test_unstable(self, line_maze):
        with pytest.raises(UnstableStepError):
            run_clamped_diffusion(line_maze, ChemoConfig(D=1.0, dt=0.3))


class TestArrivalTimeMap:
    """Test cases for arrival_time_map."""

    def test_destination_at_zero(self, perfect_maze):
        arrivals = arrival_time_map(perfect_maze)
        assert arrivals.at(perfect_maze.destination) == 0

    def test_strictly_increasing_along_corridor(self, corridor_maze):
        grid = corridor_maze(15)
        arrivals = arrival_time_map(grid)
        times = [arrivals.at((x, 0)) for x in range(14, -1, -1)]
        assert all(a < b for a, b in zip(times, times[1:]))

    def test_walls_never_reached(self, two_branch_maze):
        arrivals = arrival_time_map(two_branch_maze)
        assert np.all(arrivals.times[~two_branch_maze.corridor_mask()] == NEVER)

    def test_times_read_only(self, line_maze):
        arrivals = arrival_time_map(line_maze)
        with pytest.raises(ValueError):
            arrivals.times[0, 0] = 5

    def test_sealed_source(self, walled_maze):
        with pytest.raises(FrontNeverArrivesError) as info:
            arrival_time_map(walled_maze)
        assert info.value.exit_code == 3

    def test_step_limit(self, corridor_maze):
        with pytest.raises(FrontNeverArrivesError):
            arrival_time_map(corridor_maze(30), ChemoConfig(max_steps=10))


class TestChemotacticTrace:
    """Test cases for chemotactic_trace."""

    def test_line(self, line_maze):
        path = chemotactic_trace(map_chemoattractant(line_maze), line_maze)
        assert path.cells == ((0, 0), (1, 0), (2, 0))

    @pytest.mark.parametrize("seed", range(5))
    def test_perfect_maze_equals_oracle(self, seed):
        grid = generate(GenConfig(width=15, height=15, seed=seed))
        assert chemotactic_trace(map_chemoattractant(grid), grid).cells == oracle_path(grid).cells

    def test_no_attractant_at_source(self, corridor_maze):
        grid = corridor_maze(10)
        with pytest.raises(PlateauError):
            chemotactic_trace(map_chemoattractant(grid, ChemoConfig(max_steps=2)), grid)

    def test_zero_field_is_plateau(self, line_maze):
        with pytest.raises(PlateauError):
            chemotactic_trace(ScalarField.zeros(line_maze), line_maze)


class TestArrivalDescentTrace:
    """Test cases for arrival_descent_trace."""

    def test_corridor(self, corridor_maze):
        grid = corridor_maze(9)
        path = arrival_descent_trace(arrival_time_map(grid), grid)
        assert path.cells == tuple((x, 0) for x in range(9))

    @pytest.mark.parametrize("seed", range(5))
    def test_perfect_maze_equals_oracle(self, seed):
        grid = generate(GenConfig(width=15, height=15, seed=seed))
        assert arrival_descent_trace(arrival_time_map(grid), grid).cells == oracle_path(grid).cells

    @pytest.mark.slow
    def test_braided_corpus(self):
        """Test descent is mostly shortest, and never shorter, on braided mazes."""
        matches = 0
        total = 30
        for seed in range(total):
            grid = generate(GenConfig(width=15, height=15, seed=seed, braid_fraction=0.5))
            best = len(oracle_path(grid))
            try:
                length = len(arrival_descent_trace(arrival_time_map(grid), grid))
            except PlateauError:
                continue
            assert length >= best
            matches += length == best
        assert matches >= 0.9 * total
