"""Cross-run attainment analysis: trajectories, level sets, surfaces.

One optimization run is summarized by its attainment trajectory, the
staircase of (evaluation count, best quality so far) pairs recorded at each
strict improvement. A (time, quality) target is *attained* by a run when
some trajectory point weakly dominates it: reached no later, with quality no
worse. Over m runs the attained fraction is a two-dimensional cumulative
distribution on the time/quality plane; this module computes its level
sets exactly — for each count k, the minimal points attained by at least k
runs — plus scalar surface and volume statistics over nadir-bounded
regions.

All quality comparisons respect the optimization direction; time comparisons
never flip. Internally the code canonicalizes to minimization by negating
qualities, and un-negates on output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .loggers import CellKey, Logger, cell_key
from .problems import Direction, MetaData
from .triggers import OnImprovement


class AttainmentPoint(NamedTuple):
    """A (time, quality) target; time is an evaluation count, so >= 1."""

    time: int
    quality: float


@dataclass
class Trajectory:
    """One run's weakly non-dominated (time, quality) improvement staircase.

    Under minimization, times are strictly increasing and qualities strictly
    decreasing along :attr:`points` (mirrored for maximization).
    """

    meta: MetaData
    run: int
    points: list


@dataclass
class LevelSet:
    """Minimal points of the region attained by at least ``level`` runs."""

    level: int
    points: list
    direction: Direction = Direction.MINIMIZATION


def weakly_dominates(a, b, direction: Direction = Direction.MINIMIZATION) -> bool:
    """True iff point ``a`` attains at least everything ``b`` does.

    ``a`` must be no later in time and no worse in quality; both points are
    (time, quality) pairs.
    """
    ta, qa = a
    tb, qb = b
    return ta <= tb and direction.better_equal(qa, qb)


def ecdf(samples: Iterable[float], x: float) -> float:
    """Empirical cumulative distribution: fraction of samples <= x."""
    values = list(samples)
    if not values:
        raise ValueError("ecdf of an empty sample")
    return sum(1 for s in values if s <= x) / len(values)


def improvement_staircase(pairs: Iterable, direction: Direction) -> list:
    """Strict-improvement filter turning raw (time, quality) rows into a staircase.

    Rows are processed in time order; a row survives only if its quality
    strictly improves on everything seen before it. Should several rows
    share one time stamp, the improving ones collapse onto that time with
    the best quality.
    """
    points: list = []
    best = direction.worst
    for t, q in sorted(pairs, key=lambda row: row[0]):
        q = float(q)
        if direction.better(q, best):
            best = q
            point = AttainmentPoint(int(t), q)
            if points and points[-1].time == point.time:
                points[-1] = point
            else:
                points.append(point)
    return points


class TrajectoryLogger(Logger):
    """Logger capturing one attainment trajectory per run.

    Fires on strict improvement of the transformed quality and appends the
    (evaluation count, best so far) pair. Data is grouped per benchmark
    cell and zero-based run index; run boundaries come from reset
    notifications, so the capture loop is: evaluate, reset, repeat.
    """

    def __init__(self):
        super().__init__()
        self._gate = OnImprovement()
        self._metas: dict = {}
        self._points: dict = {}

    def _on_attach(self, meta) -> None:
        self._metas[cell_key(meta)] = meta
        self._gate.reset()

    def _on_reset(self) -> None:
        self._gate.reset()

    def _on_call(self, info) -> None:
        if self._gate(info, self._meta):
            runs = self._points.setdefault(cell_key(self._meta), {})
            point = AttainmentPoint(int(info.evaluations), float(info.transformed_y_best))
            runs.setdefault(self.current_run, []).append(point)

    def cells(self) -> list:
        """Benchmark cells with at least one recorded point, sorted."""
        return sorted(self._points)

    def trajectories(self, cell: Optional[CellKey] = None) -> list:
        """Trajectories of one cell (or of all cells, cell-major, run order)."""
        if cell is None:
            return [t for c in self.cells() for t in self.trajectories(c)]
        meta = self._metas[cell]
        runs = self._points.get(cell, {})
        return [Trajectory(meta, run, list(points)) for run, points in sorted(runs.items())]


def _common_direction(trajectories: Sequence[Trajectory]) -> Direction:
    directions = {t.meta.direction for t in trajectories}
    if len(directions) != 1:
        raise ValueError(f"trajectories mix optimization directions: {sorted(d.value for d in directions)}")
    return directions.pop()


def _validate_staircase(trajectory: Trajectory, direction: Direction) -> None:
    if not trajectory.points:
        raise ValueError(f"run {trajectory.run} has an empty trajectory")
    previous = None
    for p in trajectory.points:
        if previous is not None:
            if p.time <= previous.time or not direction.better(p.quality, previous.quality):
                raise ValueError(
                    f"run {trajectory.run}: points {tuple(previous)} -> {tuple(p)} "
                    f"do not form a strict staircase"
                )
        previous = p


def eaf_levels(trajectories: Sequence[Trajectory], levels: Optional[Iterable[int]] = None,
               direction: Optional[Direction] = None) -> list:
    """Attainment level sets over a group of runs.

    For each requested level k (1 <= k <= m, defaulting to all of them),
    returns the minimal (time, quality) points attained by at least k of the
    m trajectories. Level 1 is the best-case envelope, level m the
    worst-case. The sweep walks event times in ascending order, maintains
    each run's best quality so far and emits a point for level k whenever
    the k-th order statistic of those bests improves.

    Points tied across runs count each contributing run once, and the
    returned level sets are nested: the region attained at level k+1 is
    contained in the region attained at level k.
    """
    trajs = list(trajectories)
    if not trajs:
        raise ValueError("eaf_levels: empty trajectory list")
    if direction is None:
        direction = _common_direction(trajs)
    for traj in trajs:
        _validate_staircase(traj, direction)
    m = len(trajs)
    if levels is None:
        ks = list(range(1, m + 1))
    else:
        ks = sorted({int(k) for k in levels})
        bad = [k for k in ks if not 1 <= k <= m]
        if bad:
            raise ValueError(f"attainment level(s) {bad} outside [1, {m}] for {m} run(s)")

    sign = 1.0 if direction is Direction.MINIMIZATION else -1.0
    events: dict = {}
    for i, traj in enumerate(trajs):
        for p in traj.points:
            events.setdefault(p.time, []).append((i, sign * p.quality))

    bests = [math.inf] * m
    last: dict = {}
    points: dict = {k: [] for k in ks}
    for t in sorted(events):
        for i, q in events[t]:
            if q < bests[i]:
                bests[i] = q
        order = sorted(bests)
        for k in ks:
            qk = order[k - 1]
            if math.isfinite(qk) and (k not in last or qk < last[k]):
                last[k] = qk
                points[k].append(AttainmentPoint(t, sign * qk))
    return [LevelSet(k, points[k], direction) for k in ks]


class LevelSelector:
    """Selects attainment levels by zero-based index from a trajectory logger.

    Index j maps to level k = j + 1, so with m runs the indices
    {0, m // 2, m - 1} pick the best-case, median and worst-case envelopes.
    Level sets are computed per benchmark cell; merge trajectories yourself
    and call :func:`eaf_levels` for any other grouping.
    """

    def __init__(self, direction: Direction, indices: Iterable[int]):
        self.direction = direction
        self.indices = sorted({int(j) for j in indices})
        if not self.indices:
            raise ValueError("no level indices given")
        if self.indices[0] < 0:
            raise ValueError("level indices are zero-based and non-negative")

    def __call__(self, logger: TrajectoryLogger) -> dict:
        out = {}
        for cell in logger.cells():
            trajs = logger.trajectories(cell)
            if trajs[0].meta.direction is not self.direction:
                raise ValueError(
                    f"selector direction {self.direction.value} does not match "
                    f"cell {cell} ({trajs[0].meta.direction.value})"
                )
            m = len(trajs)
            bad = [j for j in self.indices if j >= m]
            if bad:
                raise ValueError(f"level index(es) {bad} out of range: cell {cell} has {m} run(s)")
            out[cell] = eaf_levels(trajs, [j + 1 for j in self.indices])
        return out


def default_nadir(trajectories: Sequence[Trajectory],
                  direction: Optional[Direction] = None) -> AttainmentPoint:
    """Componentwise worst corner over all trajectory points.

    The time coordinate is the largest observed time; the quality coordinate
    is the worst observed quality. Every trajectory point weakly dominates
    this corner, which makes it a valid default bound for surface and
    volume statistics.
    """
    trajs = list(trajectories)
    if not trajs or not any(t.points for t in trajs):
        raise ValueError("default_nadir: no trajectory points")
    if direction is None:
        direction = _common_direction(trajs)
    times = [p.time for t in trajs for p in t.points]
    quals = [p.quality for t in trajs for p in t.points]
    worst_q = max(quals) if direction is Direction.MINIMIZATION else min(quals)
    return AttainmentPoint(max(times), worst_q)


def surface(level_set: LevelSet, nadir) -> float:
    """Area of the region dominated by the level set, clipped at the nadir.

    The region is the set of (time, quality) points weakly dominated by some
    level-set point, intersected with the box whose worst corner is
    ``nadir``; for a staircase p_1 .. p_n sorted by time this is the sum of
    the rectangles (q_nadir - q_i) * (t_{i+1} - t_i) with t_{n+1} taken as
    the nadir time. The nadir must be weakly dominated by every level-set
    point.
    """
    points = sorted(level_set.points)
    if not points:
        raise ValueError("surface of an empty level set")
    direction = level_set.direction
    tn, qn = nadir
    for p in points:
        if not weakly_dominates(p, (tn, qn), direction):
            raise ValueError(f"nadir {(tn, qn)} is not weakly dominated by level-set point {tuple(p)}")
    sign = 1.0 if direction is Direction.MINIMIZATION else -1.0
    canonical_nadir = sign * qn
    area = 0.0
    for i, p in enumerate(points):
        if i + 1 < len(points):
            t_next = points[i + 1].time
            if t_next <= p.time or not direction.better(points[i + 1].quality, p.quality):
                raise ValueError(f"level set is not a strict staircase near {tuple(p)}")
        else:
            t_next = tn
        area += (canonical_nadir - sign * p.quality) * (t_next - p.time)
    return area


def volume(level_sets: Sequence[LevelSet], nadir, normalized: bool = False) -> float:
    """Sum of the level surfaces at a common nadir.

    With ``normalized`` the sum is divided by (number of levels) * (area of
    the box between the ideal corner and the nadir), so a single level
    filling the whole box scores 1. The ideal corner is the componentwise
    best over all points of the given level sets.
    """
    sets = list(level_sets)
    if not sets:
        raise ValueError("volume of an empty level-set collection")
    total = sum(surface(ls, nadir) for ls in sets)
    if not normalized:
        return total
    direction = sets[0].direction
    sign = 1.0 if direction is Direction.MINIMIZATION else -1.0
    all_points = [p for ls in sets for p in ls.points]
    tn, qn = nadir
    ideal_t = min(p.time for p in all_points)
    ideal_q = min(sign * p.quality for p in all_points)
    box = (tn - ideal_t) * (sign * qn - ideal_q)
    if box <= 0:
        raise ValueError("normalization box is degenerate (nadir equals the ideal corner)")
    return total / (len(sets) * box)
