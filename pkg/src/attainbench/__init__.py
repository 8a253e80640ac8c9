"""Benchmarking toolkit for anytime stochastic optimizers.

The package has three layers:

* problems — small synthetic suites (continuous and pseudo-Boolean) that
  count evaluations and notify loggers;
* logging — composable loggers assembled from triggers (when to record) and
  properties (what to record), with in-memory and flat-file backends;
* attainment — cross-run analysis: exact attainment level sets, bucketed
  attainment histograms, and surface/volume statistics.

The ``bench`` console script exposes the run/ingest/analyze pipeline.
"""

from .attainment import (AttainmentPoint, LevelSelector, LevelSet, Trajectory,
                         TrajectoryLogger, default_nadir, eaf_levels, ecdf,
                         improvement_staircase, surface, volume,
                         weakly_dominates)
from .histogram import (Axis, Discretization, Histogram, discretize_linear,
                        discretize_log, eah, fit_discretization)
from .loggers import (CellKey, Combine, Cursor, Logger, LogInfo, Record,
                      Store, Watcher)
from .problems import (SUITES, ContinuousSuite, Direction, LeadingOnes,
                       MetaData, OneMax, Problem, ProblemState,
                       PseudoBooleanSuite, Rastrigin, Sphere, Suite)
from .properties import (ABSENT, Evaluations, External, LoggedValue,
                         Property, RawY, RawYBest, TransformedY,
                         TransformedYBest)
from .solvers import SOLVERS, hill_climber, random_search
from . import triggers

__version__ = "0.1.0"

__all__ = [
    "ABSENT", "AttainmentPoint", "Axis", "CellKey", "Combine",
    "ContinuousSuite", "Cursor", "Direction", "Discretization", "Evaluations",
    "External", "Histogram", "LeadingOnes", "LevelSelector", "LevelSet",
    "LogInfo", "LoggedValue", "Logger", "MetaData", "OneMax", "Problem",
    "ProblemState", "Property", "PseudoBooleanSuite", "Rastrigin", "RawY",
    "RawYBest", "Record", "SOLVERS", "SUITES", "Sphere", "Store", "Suite",
    "Trajectory", "TrajectoryLogger", "TransformedY", "TransformedYBest",
    "Watcher", "default_nadir", "discretize_linear", "discretize_log",
    "eaf_levels", "eah", "ecdf", "fit_discretization", "hill_climber",
    "improvement_staircase", "random_search", "surface", "triggers",
    "volume", "weakly_dominates",
]
