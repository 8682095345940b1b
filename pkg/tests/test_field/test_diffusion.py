"""
Tests for explicit masked diffusion.
"""

import numpy as np
import pytest
from hypothesis import given, strategies as st

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from field.diffusion import diffuse_step, dilate_front, masked_laplacian
from field.models import ScalarField
from maze.ascii import parse_ascii
from maze.generator import generate
from maze.models import GenConfig
from utils.errors import ClampOnWallError, DimensionMismatchError, UnstableStepError


class TestMaskedLaplacian:
    """Test cases for masked_laplacian."""

    def test_sums_to_zero(self, braided_maze):
        """Test the flux form moves mass without creating any."""
        rng = np.random.default_rng(0)
        mask = braided_maze.corridor_mask()
        values = np.where(mask, rng.random(mask.shape), 0.0)
        assert abs(masked_laplacian(values, mask).sum()) < 1e-12

    def test_walls_are_zero_flux(self):
        """Test no flux crosses a wall."""
        grid = parse_ascii("S#D")
        values = np.array([[1.0, 0.0, 0.0]])
        assert masked_laplacian(values, grid.corridor_mask()).tolist() == [[0.0, 0.0, 0.0]]

    def test_batch_matches_slices(self, two_branch_maze):
        """Test leading axes are treated as independent fields."""
        rng = np.random.default_rng(1)
        mask = two_branch_maze.corridor_mask()
        stack = rng.random((3, *mask.shape))
        batched = masked_laplacian(stack, mask)
        for i in range(3):
            np.testing.assert_array_equal(batched[i], masked_laplacian(stack[i], mask))


class TestDilateFront:
    """Test cases for dilate_front."""

    def test_one_hop_cross(self):
        front = np.zeros((3, 3), dtype=bool)
        front[1, 1] = True
        grown = dilate_front(front)
        expected = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=bool)
        np.testing.assert_array_equal(grown, expected)

    def test_batch_axis_kept_apart(self):
        front = np.zeros((2, 1, 4), dtype=bool)
        front[0, 0, 0] = True
        front[1, 0, 3] = True
        grown = dilate_front(front)
        np.testing.assert_array_equal(grown[0, 0], [False, True, False, False])
        np.testing.assert_array_equal(grown[1, 0], [False, False, True, False])


class TestDiffuseStep:
    """Test cases for diffuse_step."""

    def test_one_clamped_step(self, line_maze):
        """Test one step next to a clamped destination holding 1."""
        field = ScalarField(np.array([[0.0, 0.0, 1.0]]))
        stepped = diffuse_step(field, line_maze, D=1.0, dt=0.2, clamps=[((2, 0), 1.0)])
        np.testing.assert_allclose(stepped.values[0], [0.0, 0.2, 1.0])

    def test_clamps_reapplied_after_update(self, line_maze):
        """Test an all-zero start stays zero beside a fresh clamp."""
        stepped = diffuse_step(ScalarField.zeros(line_maze), line_maze, 1.0, 0.2, [((2, 0), 1.0)])
        np.testing.assert_allclose(stepped.values[0], [0.0, 0.0, 1.0])

    def test_two_cell_exchange(self):
        """Test (1, 0) on a 1x2 corridor becomes (0.9, 0.1) with D*dt = 0.1."""
        grid = parse_ascii("SD")
        stepped = diffuse_step(ScalarField(np.array([[1.0, 0.0]])), grid, D=1.0, dt=0.1)
        np.testing.assert_allclose(stepped.values[0], [0.9, 0.1])

    def test_mass_conserved_without_clamps(self, two_branch_maze):
        """Test a closed box keeps its total over many steps."""
        grid = two_branch_maze
        values = np.zeros(grid.shape)
        values[3, 0] = 1.0
        field = ScalarField(values)
        for _ in range(500):
            field = diffuse_step(field, grid, D=1.0, dt=0.25)
        assert abs(field.values.sum() - 1.0) < 1e-12
        assert np.all(field.values[~grid.corridor_mask()] == 0.0)

    def test_bounded_by_clamp(self, perfect_maze):
        """Test concentrations stay within [0, clamp]."""
        grid = perfect_maze
        field = ScalarField.zeros(grid)
        for _ in range(300):
            field = diffuse_step(field, grid, 1.0, 0.2, [(grid.destination, 1.0)])
        assert field.values.min() >= 0.0
        assert field.values.max() <= 1.0

    @pytest.mark.parametrize("maze", ["line", "corridor", "two_branch", "stub", "perfect"])
    def test_clamped_source_never_decreases(
        self, maze, line_maze, corridor_maze, two_branch_maze, stub_maze, perfect_maze
    ):
        """Test every cell rises monotonically under a clamped destination."""
        grid = {
            "line": line_maze,
            "corridor": corridor_maze(12),
            "two_branch": two_branch_maze,
            "stub": stub_maze,
            "perfect": perfect_maze,
        }[maze]
        field = ScalarField.zeros(grid)
        for _ in range(400):
            stepped = diffuse_step(field, grid, 1.0, 0.2, [(grid.destination, 1.0)])
            assert np.all(stepped.values >= field.values - 1e-15)
            field = stepped

    def test_mass_conserved_per_step_over_long_run(self, braided_maze):
        grid = braided_maze
        values = np.zeros(grid.shape)
        values[grid.corridor_mask()] = np.linspace(0.0, 1.0, int(grid.corridor_mask().sum()))
        field = ScalarField(values)
        total = field.values.sum()
        for _ in range(1000):
            stepped = diffuse_step(field, grid, 1.0, 0.25)
            assert abs(stepped.values.sum() - field.values.sum()) <= 1e-12 * total
            field = stepped

    def test_unstable_step(self, line_maze):
        """Test D*dt above 0.25 is refused."""
        with pytest.raises(UnstableStepError) as info:
            diffuse_step(ScalarField.zeros(line_maze), line_maze, D=1.0, dt=0.3)
        assert info.value.exit_code == 3

    def test_clamp_on_wall(self):
        grid = parse_ascii("S#D")
        with pytest.raises(ClampOnWallError):
            diffuse_step(ScalarField.zeros(grid), grid, 1.0, 0.2, [((1, 0), 1.0)])

    def test_dimension_mismatch(self, line_maze):
        with pytest.raises(DimensionMismatchError):
            diffuse_step(ScalarField(np.zeros((2, 3))), line_maze, 1.0, 0.2)


class TestDiffusionProperties:
    """Property tests over generated mazes."""

    @given(
        maze_seed=st.integers(min_value=0, max_value=10_000),
        value_seed=st.integers(min_value=0, max_value=10_000),
        braid=st.sampled_from([0.0, 0.5, 1.0]),
        coefficient=st.floats(min_value=0.01, max_value=0.25),
    )
    def test_mass_and_bounds(self, maze_seed, value_seed, braid, coefficient):
        """Test an unclamped step keeps total mass and stays within the old range."""
        grid = generate(GenConfig(width=11, height=9, seed=maze_seed, braid_fraction=braid))
        mask = grid.corridor_mask()
        values = np.where(mask, np.random.default_rng(value_seed).random(mask.shape), 0.0)
        stepped = diffuse_step(ScalarField(values), grid, D=1.0, dt=coefficient).values
        assert stepped.sum() == pytest.approx(values.sum(), rel=1e-12)
        assert stepped[mask].min() >= values[mask].min() - 1e-12
        assert stepped[mask].max() <= values[mask].max() + 1e-12
        assert np.all(stepped[~mask] == 0.0)
