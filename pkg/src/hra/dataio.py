"""Dataset container, run statistics, and all file input/output.

Long CSV schema (one row per cell):
    dimension,measure,function,algorithm,value
Rank-matrix CSV schema (one row per alternative):
    algorithm,<criterion1>,<criterion2>,...
Lines starting with '#' are comments in both formats. Numbers are written
with 17 significant digits so a save/load round trip is exact.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from .exceptions import (
    DuplicateTuple,
    EmptyMatrix,
    EmptyRuns,
    InconsistentStatistics,
    IoError,
    MissingCell,
    NonFiniteValue,
    ParseError,
    ShapeMismatch,
)
from .rtopsis import DecisionMatrix

if TYPE_CHECKING:
    from .hierarchy import HraReport

LONG_CSV_HEADER = ("dimension", "measure", "function", "algorithm", "value")
STAT_MEASURES = ("best", "worst", "median", "mean", "std")

Cell = tuple  # (dimension, measure, algorithm, function)


def format_number(x: float) -> str:
    """17 significant digits: enough for float64 round-trip fidelity."""
    return format(float(x), ".17g")


class RunStatistics(NamedTuple):
    best: float
    worst: float
    median: float
    mean: float
    std: float


def compute_statistics(runs: Sequence[float],
                       population_std: bool = False) -> RunStatistics:
    """Five summary statistics of a list of run results.

    std is the sample standard deviation (denominator R-1) unless
    population_std is set; a single run has std 0 under either convention.
    """
    runs = np.asarray(runs, dtype=float)
    if runs.size == 0:
        raise EmptyRuns("cannot summarize an empty run list")
    if not np.isfinite(runs).all():
        raise NonFiniteValue("run values must be finite")
    if runs.size == 1:
        std = 0.0
    else:
        std = float(runs.std(ddof=0 if population_std else 1))
    return RunStatistics(best=float(runs.min()), worst=float(runs.max()),
                         median=float(np.median(runs)),
                         mean=float(runs.mean()), std=std)


def _check_statistic_ordering(values: Mapping[Cell, float],
                              dimensions, measures, algorithms, functions):
    """best <= median <= worst, best <= mean <= worst, std >= 0 per cell group."""
    have = set(measures)
    for d in dimensions:
        for a in algorithms:
            for f in functions:
                def get(p):
                    return values.get((d, p, a, f))

                best, worst = get("best"), get("worst")
                for p in ("median", "mean"):
                    mid = get(p)
                    if None not in (best, mid, worst) and not (best <= mid <= worst):
                        raise InconsistentStatistics(
                            f"({d}, {a}, {f}): {p}={mid} outside "
                            f"[best={best}, worst={worst}]")
                if "std" in have:
                    std = get("std")
                    if std is not None and std < 0.0:
                        raise InconsistentStatistics(
                            f"({d}, {a}, {f}): std={std} is negative")


@dataclass(frozen=True)
class PerformanceDataset:
    """Raw values indexed by (dimension, measure, algorithm, function).

    Axis tuples fix the presentation order everywhere downstream. A dataset
    may be partial (missing cells); the aggregation entry point rejects
    partial data rather than imputing.
    """

    algorithms: tuple[str, ...]
    functions: tuple[str, ...]
    dimensions: tuple
    measures: tuple[str, ...]
    values: Mapping[Cell, float]

    def __post_init__(self):
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        object.__setattr__(self, "functions", tuple(self.functions))
        object.__setattr__(self, "dimensions", tuple(self.dimensions))
        object.__setattr__(self, "measures", tuple(self.measures))
        object.__setattr__(self, "values", dict(self.values))
        for axis_name, axis in (("algorithms", self.algorithms),
                                ("functions", self.functions),
                                ("dimensions", self.dimensions),
                                ("measures", self.measures)):
            if len(axis) == 0:
                raise EmptyMatrix(f"dataset has no {axis_name}")
            if len(set(axis)) != len(axis):
                raise ShapeMismatch(f"duplicate entries in {axis_name}: {axis}")
        known_d, known_p = set(self.dimensions), set(self.measures)
        known_a, known_f = set(self.algorithms), set(self.functions)
        for (d, p, a, f), v in self.values.items():
            if d not in known_d or p not in known_p or a not in known_a \
                    or f not in known_f:
                raise ShapeMismatch(f"cell ({d}, {p}, {a}, {f}) is outside "
                                    "the declared axes")
            if not math.isfinite(v):
                raise NonFiniteValue(f"cell ({d}, {p}, {a}, {f}) is {v}")
        _check_statistic_ordering(self.values, self.dimensions, self.measures,
                                  self.algorithms, self.functions)

    def missing_cells(self) -> list[Cell]:
        """All (d, p, a, f) tuples without a value, in axis order."""
        return [(d, p, a, f)
                for d in self.dimensions for p in self.measures
                for a in self.algorithms for f in self.functions
                if (d, p, a, f) not in self.values]

    @property
    def is_complete(self) -> bool:
        return not self.missing_cells()

    def cell(self, dimension, measure, algorithm, function) -> float:
        key = (dimension, measure, algorithm, function)
        if key not in self.values:
            raise MissingCell([key])
        return self.values[key]

    def matrix(self, dimension, measure) -> DecisionMatrix:
        """Algorithms x functions decision matrix for one (d, p) leaf."""
        missing = [(dimension, measure, a, f)
                   for a in self.algorithms for f in self.functions
                   if (dimension, measure, a, f) not in self.values]
        if missing:
            raise MissingCell(missing)
        rows = [[self.values[(dimension, measure, a, f)]
                 for f in self.functions] for a in self.algorithms]
        return DecisionMatrix(np.array(rows), self.algorithms, self.functions)


@dataclass(frozen=True)
class RawRuns:
    """Per-run error values keyed by (dimension, algorithm, function)."""

    runs: Mapping[tuple, tuple[float, ...]]

    def __post_init__(self):
        runs = {key: tuple(float(v) for v in values)
                for key, values in dict(self.runs).items()}
        for key, values in runs.items():
            if len(values) == 0:
                raise EmptyRuns(f"no runs recorded for {key}")
            for v in values:
                if not math.isfinite(v):
                    raise NonFiniteValue(f"run value {v} for {key}")
                if v < 0.0:
                    raise ParseError(f"negative error value {v} for {key}")
        object.__setattr__(self, "runs", runs)

    def dimensions(self) -> list:
        return sorted({k[0] for k in self.runs}, key=_axis_sort_key)

    def algorithms(self) -> list:
        return sorted({k[1] for k in self.runs})

    def functions(self) -> list:
        return sorted({k[2] for k in self.runs}, key=_axis_sort_key)


def _axis_sort_key(value):
    return (0, value, "") if isinstance(value, (int, float)) else (1, 0, str(value))


def dataset_from_runs(raw: RawRuns,
                      population_std: bool = False) -> PerformanceDataset:
    """Summarize raw runs into the five standard measures."""
    values: dict[Cell, float] = {}
    for (d, a, f), runs in raw.runs.items():
        stats = compute_statistics(runs, population_std=population_std)
        for p, v in zip(STAT_MEASURES, stats):
            values[(d, p, a, f)] = v
    return PerformanceDataset(algorithms=tuple(raw.algorithms()),
                              functions=tuple(raw.functions()),
                              dimensions=tuple(raw.dimensions()),
                              measures=STAT_MEASURES, values=values)


# -- CSV input --------------------------------------------------------------

def _parse_dimension(text: str):
    try:
        return int(text)
    except ValueError:
        return text


def _data_rows(path: Path):
    """Yield (line_number, row) skipping blank and '#' comment lines."""
    try:
        handle = open(path, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    with handle:
        for number, row in enumerate(csv.reader(handle), start=1):
            if not row or (row[0].lstrip().startswith("#")):
                continue
            yield number, [cell.strip() for cell in row]


def load_long_csv(path) -> PerformanceDataset:
    """Load a long-format dataset; the result may be partial."""
    path = Path(path)
    rows = _data_rows(path)
    try:
        _, header = next(rows)
    except StopIteration:
        raise ParseError(f"{path}: file has no header row") from None
    if tuple(h.lower() for h in header) != LONG_CSV_HEADER:
        raise ParseError(f"{path}: expected header "
                         f"{','.join(LONG_CSV_HEADER)}, got {','.join(header)}")
    values: dict[Cell, float] = {}
    dimensions, measures, algorithms, functions = [], [], [], []
    for number, row in rows:
        if len(row) != 5:
            raise ParseError(f"{path}:{number}: expected 5 fields, got {len(row)}")
        d_text, p, f, a, v_text = row
        d = _parse_dimension(d_text)
        try:
            v = float(v_text)
        except ValueError:
            raise ParseError(
                f"{path}:{number}: value column is not a number: {v_text!r}"
            ) from None
        if not math.isfinite(v):
            raise NonFiniteValue(f"{path}:{number}: non-finite value {v_text!r}")
        key = (d, p, a, f)
        if key in values:
            raise DuplicateTuple(f"{path}:{number}: duplicate cell {key}")
        values[key] = v
        for axis, item in ((dimensions, d), (measures, p),
                           (algorithms, a), (functions, f)):
            if item not in axis:
                axis.append(item)
    if not values:
        raise ParseError(f"{path}: no data rows")
    return PerformanceDataset(algorithms=tuple(algorithms),
                              functions=tuple(functions),
                              dimensions=tuple(dimensions),
                              measures=tuple(measures), values=values)


def save_long_csv(dataset: PerformanceDataset, path) -> Path:
    """Write a dataset in long format, in axis order; skips missing cells."""
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(LONG_CSV_HEADER)
            for d in dataset.dimensions:
                for p in dataset.measures:
                    for f in dataset.functions:
                        for a in dataset.algorithms:
                            key = (d, p, a, f)
                            if key in dataset.values:
                                writer.writerow(
                                    [d, p, f, a, format_number(dataset.values[key])])
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
    return path


def load_rank_matrix_csv(path) -> DecisionMatrix:
    """Load an algorithm,criteria... table; labels keep file order."""
    path = Path(path)
    rows = _data_rows(path)
    try:
        _, header = next(rows)
    except StopIteration:
        raise EmptyMatrix(f"{path}: file is empty") from None
    if len(header) < 2:
        raise EmptyMatrix(f"{path}: header has no criterion columns")
    criteria = tuple(header[1:])
    labels: list[str] = []
    data: list[list[float]] = []
    for number, row in rows:
        if len(row) != len(header):
            raise ParseError(f"{path}:{number}: expected {len(header)} fields, "
                             f"got {len(row)}")
        if row[0] in labels:
            raise ParseError(f"{path}:{number}: duplicate alternative {row[0]!r}")
        labels.append(row[0])
        parsed = []
        for name, cell in zip(criteria, row[1:]):
            try:
                parsed.append(float(cell))
            except ValueError:
                raise ParseError(f"{path}:{number}: column {name!r} is not "
                                 f"a number: {cell!r}") from None
        data.append(parsed)
    if not data:
        raise EmptyMatrix(f"{path}: no data rows")
    return DecisionMatrix(np.array(data), tuple(labels), criteria)


def save_rank_matrix_csv(matrix: DecisionMatrix, path) -> Path:
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(("algorithm",) + matrix.criterion_labels)
            for label, row in zip(matrix.alternative_labels, matrix.values):
                writer.writerow([label] + [format_number(v) for v in row])
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
    return path


# -- report rendering -------------------------------------------------------

def _render_table(header: Sequence[str], rows: Iterable[Sequence[str]],
                  fmt: str) -> str:
    rows = list(rows)
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(row) for row in rows]
        return "\n".join(lines) + "\n"
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |",
                 "|" + "|".join(" --- " for _ in header) + "|"]
        lines += ["| " + " | ".join(row) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def emit_report(report: "HraReport", fmt: str = "csv",
                destination="report") -> list[Path]:
    """Write one file per aggregation level; byte-deterministic.

    Files: leaf_ranks, dimension_<d> (one per dimension, matrix plus its
    rank column), final_matrix, and final_ranking with header
    algorithm,score,hra_rank.
    """
    if fmt not in ("csv", "markdown"):
        raise ValueError(f"unknown report format {fmt!r}")
    ext = "csv" if fmt == "csv" else "md"
    destination = Path(destination)
    try:
        destination.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoError(f"cannot create {destination}: {exc}") from exc
    algorithms = report.algorithms
    written: list[Path] = []

    def write(name: str, header, rows):
        path = destination / f"{name}.{ext}"
        try:
            path.write_text(_render_table(header, rows, fmt), encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot write {path}: {exc}") from exc
        written.append(path)

    write("leaf_ranks", ("dimension", "measure", "algorithm", "rank"),
          [[str(d), str(p), a, format_number(r)]
           for (d, p), ranks in report.leaf_ranks.items()
           for a, r in zip(algorithms, ranks)])
    for d, matrix in report.dimension_matrices.items():
        write(f"dimension_{d}",
              ("algorithm",) + matrix.criterion_labels + ("rank",),
              [[a] + [format_number(v) for v in row] + [format_number(r)]
               for a, row, r in zip(algorithms, matrix.values,
                                    report.dimension_ranks[d])])
    write("final_matrix", ("algorithm",) + report.final_matrix.criterion_labels,
          [[a] + [format_number(v) for v in row]
           for a, row in zip(algorithms, report.final_matrix.values)])
    write("final_ranking", ("algorithm", "score", "hra_rank"),
          [[a, format_number(s), format_number(r)]
           for a, s, r in zip(algorithms, report.final_scores,
                              report.final_ranks)])
    return written
