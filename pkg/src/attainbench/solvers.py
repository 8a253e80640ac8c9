"""Reference solvers for exercising the logging pipeline.

Both are deliberately simple baselines: they spend exactly ``budget``
objective calls per run and take their randomness from a caller-provided
generator, so a seeded generator reproduces the run bit for bit.
"""

from __future__ import annotations

import numpy as np

from .problems import Problem


def _sample(problem: Problem, rng: np.random.Generator) -> np.ndarray:
    d = problem.meta.dimension
    if problem.domain == "boolean":
        return rng.integers(0, 2, size=d)
    return rng.uniform(problem.lower, problem.upper, size=d)


def random_search(problem: Problem, budget: int, rng: np.random.Generator) -> None:
    """Independent uniform samples of the search space."""
    for _ in range(budget):
        problem(_sample(problem, rng))


def hill_climber(problem: Problem, budget: int, rng: np.random.Generator) -> None:
    """Greedy walk from a random start, keeping strictly better neighbours.

    Real vectors take Gaussian steps (sigma 0.3, clipped to the box); bit
    vectors flip one random position.
    """
    if budget < 1:
        return
    direction = problem.meta.direction
    best_x = _sample(problem, rng)
    best_y = problem(best_x)
    d = problem.meta.dimension
    for _ in range(budget - 1):
        if problem.domain == "boolean":
            candidate = best_x.copy()
            flip = rng.integers(0, d)
            candidate[flip] ^= 1
        else:
            candidate = np.clip(best_x + rng.normal(0.0, 0.3, size=d),
                                problem.lower, problem.upper)
        y = problem(candidate)
        if direction.better(y, best_y):
            best_x, best_y = candidate, y


SOLVERS = {
    "random": random_search,
    "hill": hill_climber,
}
