"""File formats for run logs, trajectories, level sets and histograms.

Flat run logs
    One CSV per benchmark cell, named
    ``<suite>_f<problem>_d<dimension>_i<instance>.csv``. Line 1 is the
    header ``run,event,evaluations,<property names...>``; every following
    line is one logged event. Runs are zero-based, event indices are
    zero-based within their run, and the evaluation count is 1-based.
    Files are UTF-8 with ``\\n`` line endings. Absent readings render as
    ``NA``; numbers use the shortest decimal form that round-trips.

Trajectory files
    CSV with header ``run,evaluations,quality``, one row per recorded
    evaluation. Rows need not be improvement-filtered: ingestion applies
    the same strict-improvement filter trajectory capture uses.

Level-set export
    A JSON object with group metadata, the nadir in use, and ``levels``,
    an array of ``{level, points: [[time, quality], ...]}``.

Histogram export
    CSV body ``t_bucket,q_bucket,count`` preceded by ``#`` comment lines
    recording buckets, origin, extent and scale per axis.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .attainment import LevelSet, Trajectory, improvement_staircase
from .histogram import Histogram
from .loggers import Store
from .problems import Direction, MetaData
from .properties import ABSENT, LoggedValue

#: Token standing in for an absent reading in delimited files.
NA = "NA"


def _render(value: float) -> str:
    # repr() of a Python float is the shortest decimal string that parses
    # back to the same bits.
    return repr(float(value))


def flat_file_name(cell) -> str:
    return f"{cell.suite_name}_f{cell.problem_id}_d{cell.dimension}_i{cell.instance}.csv"


def write_flat_files(store: Store, directory) -> list:
    """Write one CSV per benchmark cell recorded in the store.

    A watched property literally named ``evaluations`` feeds the fixed
    evaluations column instead of duplicating it. Returns the written paths.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    names = [n for n in store.property_names if n != "evaluations"]
    evaluations_watched = "evaluations" in store.property_names
    paths = []
    for cell in store.cells():
        path = directory / flat_file_name(cell)
        try:
            with open(path, "w", encoding="utf-8", newline="") as fh:
                fh.write(",".join(["run", "event", "evaluations", *names]) + "\n")
                for run in store.runs(cell):
                    for index, record in enumerate(store.events(cell, run)):
                        if evaluations_watched:
                            evaluations = _cell_text(record.values["evaluations"])
                        else:
                            evaluations = str(record.evaluations)
                        cells = [str(run), str(index), evaluations]
                        cells += [_cell_text(record.values[n]) for n in names]
                        fh.write(",".join(cells) + "\n")
        except OSError as exc:
            raise OSError(f"cannot write flat file {path}: {exc}") from exc
        paths.append(path)
    return paths


def _cell_text(value: LoggedValue) -> str:
    return _render(value.value) if value.present else NA


@dataclass
class FlatRow:
    """One parsed flat-file event."""

    run: int
    event: int
    evaluations: float
    values: dict


def read_flat_file(path):
    """Parse a flat run log back into (property names, rows)."""
    path = Path(path)
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or header[:3] != ["run", "event", "evaluations"]:
                raise ValueError(f"{path}: not a flat run log (header {header!r})")
            names = header[3:]
            rows = []
            for line in reader:
                if len(line) != len(header):
                    raise ValueError(f"{path}: row has {len(line)} cells, expected {len(header)}")
                values = {}
                for name, text in zip(names, line[3:]):
                    values[name] = ABSENT if text == NA else LoggedValue.of(float(text))
                rows.append(FlatRow(int(line[0]), int(line[1]), float(line[2]), values))
    except OSError as exc:
        raise OSError(f"cannot read flat file {path}: {exc}") from exc
    return names, rows


def write_trajectories(path, trajectories: Sequence[Trajectory]) -> None:
    """Write trajectories as a ``run,evaluations,quality`` CSV."""
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write("run,evaluations,quality\n")
            for traj in trajectories:
                for p in traj.points:
                    fh.write(f"{traj.run},{p.time},{_render(p.quality)}\n")
    except OSError as exc:
        raise OSError(f"cannot write trajectory file {path}: {exc}") from exc


def read_trajectories(path, direction: Direction = Direction.MINIMIZATION,
                      meta: Optional[MetaData] = None) -> list:
    """Read a ``run,evaluations,quality`` CSV into improvement-filtered trajectories.

    Rows are grouped by run id and sorted by evaluation count; the strict
    improvement filter reduces each group to its attainment staircase. When
    no metadata is supplied, a placeholder carrying the direction is used.
    """
    path = Path(path)
    if meta is None:
        meta = MetaData("file", 1, 1, 1, direction)
    rows: dict = {}
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != ["run", "evaluations", "quality"]:
                raise ValueError(f"{path}: not a trajectory file (header {header!r})")
            for number, line in enumerate(reader, start=2):
                if len(line) != 3:
                    raise ValueError(f"{path}:{number}: expected 3 cells, got {len(line)}")
                try:
                    run, evaluations, quality = int(line[0]), int(line[1]), float(line[2])
                except ValueError as exc:
                    raise ValueError(f"{path}:{number}: {exc}") from exc
                rows.setdefault(run, []).append((evaluations, quality))
    except OSError as exc:
        raise OSError(f"cannot read trajectory file {path}: {exc}") from exc
    if not rows:
        raise ValueError(f"{path}: no trajectory rows")
    return [Trajectory(meta, run, improvement_staircase(pairs, meta.direction))
            for run, pairs in sorted(rows.items())]


def write_level_sets(path, level_sets: Sequence[LevelSet], nadir,
                     group: Optional[dict] = None) -> None:
    """Write level sets as JSON with group metadata and the nadir used."""
    path = Path(path)
    sets = list(level_sets)
    document = {
        "group": dict(group or {}),
        "direction": sets[0].direction.value if sets else None,
        "nadir": [nadir[0], nadir[1]],
        "levels": [
            {"level": ls.level, "points": [[p.time, p.quality] for p in ls.points]}
            for ls in sets
        ],
    }
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            json.dump(document, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"cannot write level sets {path}: {exc}") from exc


def write_histogram(path, histogram: Histogram) -> None:
    """Write a histogram as CSV with a ``#`` header block describing the axes."""
    path = Path(path)
    disc = histogram.discretization
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write("# axis,buckets,origin,extent,scale\n")
            for label, axis in (("time", disc.time), ("quality", disc.quality)):
                fh.write(f"# {label},{axis.buckets},{_render(axis.origin)},"
                         f"{_render(axis.extent)},{axis.scale}\n")
            fh.write(f"# runs,{histogram.runs}\n")
            fh.write("t_bucket,q_bucket,count\n")
            for i in range(disc.time.buckets):
                for j in range(disc.quality.buckets):
                    fh.write(f"{i},{j},{int(histogram.counts[i, j])}\n")
    except OSError as exc:
        raise OSError(f"cannot write histogram {path}: {exc}") from exc
