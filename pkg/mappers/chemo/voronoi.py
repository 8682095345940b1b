"""
Diffusion Voronoi processor.

Every seed releases its own substance from a clamped drop; all seeds diffuse
together as one batched field. A cell belongs to the seed whose substance
reached it first, and cells reached by two seeds within one step of each
other form the bisector where the fronts meet.
"""

import logging
from typing import FrozenSet, List, Sequence, Tuple

import numpy as np

from field.diffusion import check_stability, dilate_front, masked_laplacian
from field.models import ScalarField
from maze.models import Coord, MazeGrid
from utils.errors import FrontNeverArrivesError, SeedOnWallError, TooFewSeedsError

from .diffusion import NEVER, ChemoConfig

logger = logging.getLogger(__name__)

UNLABELLED = -1
TIE_BAND = 1


def _distinct_seeds(arena: MazeGrid, seeds: Sequence[Coord]) -> List[Coord]:
    distinct = list(dict.fromkeys(tuple(seed) for seed in seeds))
    if len(distinct) < 2:
        raise TooFewSeedsError(f"need at least 2 distinct seeds, got {len(distinct)}")
    for seed in distinct:
        if not arena.is_corridor(seed):
            raise SeedOnWallError(f"seed {seed} is not on a corridor cell")
    return distinct  # type: ignore[return-value]


def _seed_fronts(
    arena: MazeGrid, seeds: Sequence[Coord], config: ChemoConfig
) -> Tuple[np.ndarray, np.ndarray]:
    distinct = _distinct_seeds(arena, seeds)
    coefficient = config.D * config.dt
    check_stability(coefficient, "voronoi diffusion")

    mask = arena.corridor_mask()
    count = len(distinct)
    concentration = np.zeros((count, *arena.shape))
    strength = np.zeros((count, *arena.shape))
    arrivals = np.full((count, *arena.shape), NEVER, dtype=np.int64)
    index = np.arange(count)
    xs = np.array([seed[0] for seed in distinct])
    ys = np.array([seed[1] for seed in distinct])
    concentration[index, ys, xs] = config.clamp_value
    strength[index, ys, xs] = config.clamp_value
    arrivals[index, ys, xs] = 0
    support = arrivals == 0

    step = 0
    while True:
        fresh = dilate_front(support) & mask & ~support
        if not fresh.any():
            break
        if step >= config.max_steps:
            raise FrontNeverArrivesError(
                f"Voronoi fronts still growing after {config.max_steps} steps"
            )
        step += 1
        concentration = concentration + coefficient * masked_laplacian(concentration, mask)
        concentration[index, ys, xs] = config.clamp_value
        support |= fresh
        arrivals[fresh] = step
        strength[fresh] = concentration[fresh]

    logger.debug(f"Voronoi fronts of {count} seeds settled after {step} steps")
    return arrivals, strength


def seed_arrivals(
    arena: MazeGrid, seeds: Sequence[Coord], config: ChemoConfig = ChemoConfig()
) -> np.ndarray:
    """
    Leading-edge arrival step of each seed's substance.

    Each seed's support is tracked as a boolean set grown by one corridor hop
    per step, the cells an exact explicit step can first touch. The arrival
    is the step a cell joins that set, which is its hop distance from the
    seed, so long fronts never depend on leading-edge values that underflow.

    Returns:
        (seeds, height, width) int64 array, NEVER where a seed never arrived

    Raises:
        TooFewSeedsError: fewer than two distinct seeds
        SeedOnWallError: a seed is off-grid or on a wall
        UnstableStepError: D*dt > 0.25
        FrontNeverArrivesError: fronts still growing after max_steps
    """
    arrivals, _ = _seed_fronts(arena, seeds, config)
    return arrivals


def voronoi_from_seeds(
    arena: MazeGrid, seeds: Sequence[Coord], config: ChemoConfig = ChemoConfig()
) -> Tuple[ScalarField, FrozenSet[Coord]]:
    """
    Label cells by their first-arriving seed and collect the bisector cells.

    Seeds arriving on the same step are ordered by their concentration at
    that step, then by seed index.

    Args:
        arena: Usually an all-corridor grid from ``open_arena``
        seeds: Seed coordinates; duplicates are merged
        config: Substance parameters (D, dt, clamp_value, max_steps)

    Returns:
        (labels, boundary) where labels hold the seed index (in order of first
        appearance) or UNLABELLED, and boundary is the set of cells whose two
        earliest arrivals differ by at most one step
    """
    arrivals, strength = _seed_fronts(arena, seeds, config)
    never_big = np.iinfo(np.int64).max
    ranked = np.where(arrivals == NEVER, never_big, arrivals)

    labels = np.lexsort((-strength, ranked), axis=0)[0].astype(np.int64)
    ordered = np.sort(ranked, axis=0)
    earliest, second = ordered[0], ordered[1]
    reached = earliest != never_big
    labels[~reached] = UNLABELLED

    tie = reached & (second != never_big) & (second - earliest <= TIE_BAND)
    boundary = frozenset((int(x), int(y)) for y, x in zip(*np.nonzero(tie)))

    logger.info(
        f"Voronoi diagram of {arrivals.shape[0]} seeds: "
        f"{int(reached.sum())} labelled cells, {len(boundary)} boundary cells"
    )
    return ScalarField(labels, sentinel=UNLABELLED), boundary
