"""Three-level aggregation tree over a performance dataset.

Level 1 turns every (dimension, measure) leaf into a rank vector, level 2
joins the measure vectors of each dimension into one per-dimension ranking,
and level 3 joins the dimensions into the overall ranking. Every join is
one fixed-domain TOPSIS evaluation, so a full run costs exactly
1 + k + l*k evaluations for k dimensions and l measures.

Vectors passed between levels are ranks, not raw closeness scores; the
scores of every evaluation are kept in the report's traces for audit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .dataio import PerformanceDataset
from .exceptions import MissingCell, ShapeMismatch
from .ranking import Objective, RankMatrix, rank_columns
from .rtopsis import CriteriaSpec, DecisionMatrix, TopsisResult, rtopsis


@dataclass(frozen=True)
class HraConfig:
    """Which dimensions/measures to aggregate, and the weights per level.

    Weight vectors left as None mean equal weights. Measures default to
    MINIMIZE; override individual ones through `objectives`.
    """

    dimensions: tuple
    measures: tuple[str, ...]
    function_weights: tuple[float, ...] | None = None
    measure_weights: tuple[float, ...] | None = None
    dimension_weights: tuple[float, ...] | None = None
    objectives: Mapping[str, Objective] | None = None

    def __post_init__(self):
        object.__setattr__(self, "dimensions", tuple(self.dimensions))
        object.__setattr__(self, "measures", tuple(self.measures))
        if len(self.dimensions) < 1 or len(self.measures) < 1:
            raise ShapeMismatch("config needs at least one dimension and "
                                "one measure")
        if len(set(self.dimensions)) != len(self.dimensions):
            raise ShapeMismatch(f"duplicate dimensions: {self.dimensions}")
        if len(set(self.measures)) != len(self.measures):
            raise ShapeMismatch(f"duplicate measures: {self.measures}")
        for name, weights, expected in (
                ("measure_weights", self.measure_weights, len(self.measures)),
                ("dimension_weights", self.dimension_weights,
                 len(self.dimensions))):
            if weights is not None and len(weights) != expected:
                raise ShapeMismatch(f"{name} has {len(weights)} entries, "
                                    f"expected {expected}")
        if self.objectives:
            unknown = set(self.objectives) - set(self.measures)
            if unknown:
                raise ShapeMismatch(f"objectives name unknown measures: "
                                    f"{sorted(unknown)}")

    @classmethod
    def for_dataset(cls, dataset: PerformanceDataset,
                    **kwargs) -> "HraConfig":
        return cls(dimensions=dataset.dimensions, measures=dataset.measures,
                   **kwargs)

    def objective_for(self, measure: str) -> Objective:
        return (self.objectives or {}).get(measure, Objective.MINIMIZE)


@dataclass(frozen=True)
class HraReport:
    """Every level of one aggregation run, plus the evaluation traces."""

    algorithms: tuple[str, ...]
    leaf_ranks: dict
    dimension_matrices: dict
    dimension_ranks: dict
    final_matrix: DecisionMatrix
    final_scores: np.ndarray
    final_ranks: np.ndarray
    invocation_count: int
    traces: dict = field(repr=False, default_factory=dict)


def _rank_evaluation(matrix: DecisionMatrix,
                     weights: Sequence[float] | None) -> TopsisResult:
    """One fixed-domain TOPSIS pass over a rank-valued matrix."""
    spec = CriteriaSpec.for_ranks(matrix.domain_rows, matrix.n, weights)
    return rtopsis(matrix, spec)


def _stack_rank_vectors(vectors: Sequence[np.ndarray], labels,
                        criterion_labels) -> DecisionMatrix:
    vectors = [np.asarray(v, dtype=float) for v in vectors]
    sizes = {v.shape for v in vectors}
    if len(sizes) != 1 or vectors[0].ndim != 1:
        raise ShapeMismatch(f"rank vectors have inconsistent shapes: {sizes}")
    return DecisionMatrix(np.column_stack(vectors), labels,
                          tuple(str(c) for c in criterion_labels))


def aggregate_leaf(rank_matrix: RankMatrix,
                   function_weights: Sequence[float] | None = None
                   ) -> np.ndarray:
    """Rank vector of one (dimension, measure) leaf."""
    return _rank_evaluation(rank_matrix, function_weights).ranks


def aggregate_dimension(leaf_ranks: Sequence[np.ndarray],
                        measure_weights: Sequence[float] | None = None,
                        measure_labels: Sequence[str] | None = None,
                        alternative_labels: Sequence[str] | None = None,
                        ) -> tuple[DecisionMatrix, np.ndarray]:
    """Join the per-measure rank vectors of one dimension.

    Returns the intermediate matrix (columns in measure order) and the
    dimension's rank vector.
    """
    if measure_labels is None:
        measure_labels = [f"P{i + 1}" for i in range(len(leaf_ranks))]
    matrix = _stack_rank_vectors(leaf_ranks, tuple(alternative_labels or ()),
                                 measure_labels)
    return matrix, _rank_evaluation(matrix, measure_weights).ranks


def aggregate_overall(dimension_ranks: Sequence[np.ndarray],
                      dimension_weights: Sequence[float] | None = None,
                      dimension_labels: Sequence[str] | None = None,
                      alternative_labels: Sequence[str] | None = None,
                      ) -> tuple[DecisionMatrix, np.ndarray, np.ndarray]:
    """Join the per-dimension rank vectors into the final ranking.

    Returns the final matrix, the closeness scores, and the overall ranks.
    """
    if dimension_labels is None:
        dimension_labels = [f"D{i + 1}" for i in range(len(dimension_ranks))]
    matrix = _stack_rank_vectors(dimension_ranks,
                                 tuple(alternative_labels or ()),
                                 dimension_labels)
    result = _rank_evaluation(matrix, dimension_weights)
    return matrix, result.closeness, result.ranks


def run_hra(dataset: PerformanceDataset,
            config: HraConfig | None = None) -> HraReport:
    """Full three-level aggregation of a complete dataset.

    Deterministic: identical inputs give bit-identical reports. The
    invocation count in the report counts actual TOPSIS evaluations and
    always equals 1 + k + l*k.
    """
    if config is None:
        config = HraConfig.for_dataset(dataset)
    missing = [(d, p, a, f)
               for d in config.dimensions for p in config.measures
               for a in dataset.algorithms for f in dataset.functions
               if (d, p, a, f) not in dataset.values]
    if missing:
        raise MissingCell(missing)
    if config.function_weights is not None \
            and len(config.function_weights) != len(dataset.functions):
        raise ShapeMismatch(
            f"function_weights has {len(config.function_weights)} entries, "
            f"expected {len(dataset.functions)}")

    traces: dict[tuple, TopsisResult] = {}

    def evaluate(key: tuple, matrix: DecisionMatrix, weights) -> TopsisResult:
        result = _rank_evaluation(matrix, weights)
        traces[key] = result
        return result

    leaf_ranks: dict[tuple, np.ndarray] = {}
    for d in config.dimensions:
        for p in config.measures:
            ranked = rank_columns(dataset.matrix(d, p), config.objective_for(p))
            leaf_ranks[(d, p)] = evaluate(("leaf", d, p), ranked,
                                          config.function_weights).ranks

    dimension_matrices: dict = {}
    dimension_ranks: dict = {}
    for d in config.dimensions:
        matrix = _stack_rank_vectors(
            [leaf_ranks[(d, p)] for p in config.measures],
            dataset.algorithms, config.measures)
        dimension_matrices[d] = matrix
        dimension_ranks[d] = evaluate(("dimension", d), matrix,
                                      config.measure_weights).ranks

    final_matrix = _stack_rank_vectors(
        [dimension_ranks[d] for d in config.dimensions],
        dataset.algorithms, config.dimensions)
    final = evaluate(("overall",), final_matrix, config.dimension_weights)

    return HraReport(algorithms=dataset.algorithms, leaf_ranks=leaf_ranks,
                     dimension_matrices=dimension_matrices,
                     dimension_ranks=dimension_ranks,
                     final_matrix=final_matrix, final_scores=final.closeness,
                     final_ranks=final.ranks, invocation_count=len(traces),
                     traces=traces)
