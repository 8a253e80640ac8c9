"""Independent reference implementations used to cross-check the package.

Everything here deliberately avoids the production algorithms: attainment is
counted by direct dominance scans over raw points, minimal elements are
extracted from a coordinate grid, and areas are estimated by Monte-Carlo
hit counting. Agreement with the library is therefore evidence, not an
identity.
"""

from __future__ import annotations

import math

import numpy as np

from attainbench.attainment import AttainmentPoint, Trajectory
from attainbench.problems import Direction, MetaData

MIN = Direction.MINIMIZATION
MAX = Direction.MAXIMIZATION


def improvement_count(values, direction):
    """Number of strict running-best improvements in a value sequence."""
    best = math.inf if direction is MIN else -math.inf
    count = 0
    for v in values:
        if (v < best) if direction is MIN else (v > best):
            best = v
            count += 1
    return count


def attain_count(runs_points, t, q, direction):
    """How many runs have a point reached no later than t with quality no worse than q."""
    count = 0
    for points in runs_points:
        for pt, pq in points:
            quality_ok = (pq <= q) if direction is MIN else (pq >= q)
            if pt <= t and quality_ok:
                count += 1
                break
    return count


def attain_counts_grid(runs_points, direction):
    """Attainment counts at every observed-coordinate grid point.

    Returns (times ascending, qualities best-first, counts[i][j]).
    """
    times = sorted({p[0] for pts in runs_points for p in pts})
    best_first = sorted({p[1] for pts in runs_points for p in pts},
                        reverse=(direction is MAX))
    counts = [[attain_count(runs_points, t, q, direction) for q in best_first]
              for t in times]
    return times, best_first, counts


def minimal_from_grid(times, best_first, counts, level):
    """Minimal points of the region counted at >= level, from the counts grid.

    A grid point is minimal when it is attained but its earlier-time and
    better-quality neighbours are not; the attainment function only changes
    at observed coordinates, so all minimal points lie on the grid.
    """
    points = []
    for i, t in enumerate(times):
        for j, q in enumerate(best_first):
            if counts[i][j] >= level \
                    and (i == 0 or counts[i - 1][j] < level) \
                    and (j == 0 or counts[i][j - 1] < level):
                points.append((t, q))
    return sorted(points)


def eaf_levels_bruteforce(runs_points, level, direction):
    times, best_first, counts = attain_counts_grid(runs_points, direction)
    return minimal_from_grid(times, best_first, counts, level)


def eah_bruteforce(runs_points, discretization, direction, clamp=True):
    """Per-cell attainment counts against each cell's representative point."""
    t_axis, q_axis = discretization.time, discretization.quality
    clamped = []
    for points in runs_points:
        row = []
        for t, q in points:
            if clamp:
                t = min(max(t, t_axis.origin), t_axis.origin + t_axis.extent)
                q = min(max(q, q_axis.origin), q_axis.origin + q_axis.extent)
            row.append((t, q))
        clamped.append(row)
    return [[attain_count(clamped, rt, rq, direction) for rq in q_axis.representatives]
            for rt in t_axis.representatives]


def surface_monte_carlo(points, nadir, direction, samples, rng):
    """Monte-Carlo estimate of the dominated area inside the nadir box."""
    tn, qn = nadir
    t0 = min(p[0] for p in points)
    if direction is MIN:
        q_lo, q_hi = min(p[1] for p in points), qn
    else:
        q_lo, q_hi = qn, max(p[1] for p in points)
    ts = rng.uniform(t0, tn, samples)
    qs = rng.uniform(q_lo, q_hi, samples)
    hit = np.zeros(samples, dtype=bool)
    for pt, pq in points:
        if direction is MIN:
            hit |= (ts >= pt) & (qs >= pq)
        else:
            hit |= (ts >= pt) & (qs <= pq)
    return (tn - t0) * (q_hi - q_lo) * hit.mean()


def random_staircases(rng, m=None, max_points=8, coord_max=20, direction=MIN):
    """Random strict-staircase point lists with integer coordinates."""
    if m is None:
        m = int(rng.integers(1, 6))
    runs = []
    for _ in range(m):
        k = int(rng.integers(1, max_points + 1))
        times = sorted(rng.choice(np.arange(1, coord_max + 1), size=k, replace=False).tolist())
        quals = sorted(rng.choice(np.arange(1, coord_max + 1), size=k, replace=False).tolist(),
                       reverse=(direction is MIN))
        runs.append([(int(t), float(q)) for t, q in zip(times, quals)])
    return runs


def as_trajectories(runs_points, direction, suite="oracle"):
    meta = MetaData(suite, 1, 1, 1, direction)
    return [Trajectory(meta, i, [AttainmentPoint(int(t), float(q)) for t, q in pts])
            for i, pts in enumerate(runs_points)]
