"""Re-creation pipeline: fit candidate distance functions to a source
network, race them, and regenerate families of statistically similar
networks.

Protocol: synthesize vertex attributes when none are given; build every
applicable catalog distance (fitting the learned kinds on the source
adjacency); run a short pilot per candidate scored by the mean two-sample
K-S statistic over the degree, betweenness, and closeness vectors; advance
the best three to full 20-run aggregation with out-degrees resampled from
the source; pick the winner with the smallest mean combined statistic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .distance import (
    AggregateDistance,
    CentralityDistance,
    CosineDistance,
    DistanceFunction,
    Euclidean1D,
    Euclidean2D,
    RandomDistance,
    build_training_set,
    fit_linear_regression_distance,
    fit_naive_bayes_distance,
    reference_centralities,
)
from .generate import DegreeSpec, priority_rank_generate
from .graph import AttributeColumn, AttributeTable, Graph, out_degree_sequence
from .metrics import (
    NetworkProfile,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    network_profile,
)
from .stats import KsResult, RngStream, ks_two_sample


def generate_synthetic_attributes(n: int, seed: int) -> AttributeTable:
    """Four synthetic vertex attributes: a 10-level ordinal built by
    rank-discretizing normal draws, a 5-label uniform categorical, a
    log-normal(0, 1) column, and an exponential(1) column."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    root = RngStream(seed)
    normal = root.child(0).generator.normal(0.0, 1.0, size=n)
    order = np.argsort(np.argsort(normal, kind="stable"), kind="stable")
    ordinal = np.minimum(order * 10 // n, 9).astype(np.float64)
    labels = root.child(1).generator.integers(0, 5, size=n)
    categorical = tuple(f"c{int(lab)}" for lab in labels)
    lognormal = root.child(2).generator.lognormal(0.0, 1.0, size=n)
    exponential = root.child(3).generator.exponential(1.0, size=n)
    return AttributeTable(
        [
            AttributeColumn("ordinal", "ordinal", tuple(ordinal)),
            AttributeColumn("category", "categorical", categorical),
            AttributeColumn("lognormal", "continuous", tuple(lognormal)),
            AttributeColumn("exponential", "continuous", tuple(exponential)),
        ]
    )


@dataclass(frozen=True)
class ComparisonRecord:
    """K-S outcomes for the three centrality vectors plus both profiles."""

    ks_degree: KsResult
    ks_betweenness: KsResult
    ks_closeness: KsResult
    profile_a: NetworkProfile
    profile_b: NetworkProfile
    alpha: float

    def passes(self) -> dict[str, bool]:
        return {
            "degree": self.ks_degree.p_value >= self.alpha,
            "betweenness": self.ks_betweenness.p_value >= self.alpha,
            "closeness": self.ks_closeness.p_value >= self.alpha,
        }

    def to_json_dict(self) -> dict:
        flags = self.passes()
        doc = {"alpha": self.alpha}
        for name, ks in (
            ("degree", self.ks_degree),
            ("betweenness", self.ks_betweenness),
            ("closeness", self.ks_closeness),
        ):
            doc[name] = {
                "statistic": ks.statistic,
                "p_value": ks.p_value,
                "pass": flags[name],
            }
        doc["profiles"] = {
            "a": self.profile_a.scalar_dict(),
            "b": self.profile_b.scalar_dict(),
        }
        return doc


def compare_networks(g1: Graph, g2: Graph, alpha: float = 0.05) -> ComparisonRecord:
    """K-S tests over degree, betweenness, and closeness distributions plus
    side-by-side scalar profiles."""
    if g1.n == 0 or g2.n == 0:
        raise ValueError("cannot compare empty graphs")
    p1 = network_profile(g1)
    p2 = network_profile(g2)
    return ComparisonRecord(
        ks_degree=ks_two_sample(p1.degree, p2.degree),
        ks_betweenness=ks_two_sample(p1.betweenness, p2.betweenness),
        ks_closeness=ks_two_sample(p1.closeness, p2.closeness),
        profile_a=p1,
        profile_b=p2,
        alpha=alpha,
    )


@dataclass(frozen=True)
class RecreateConfig:
    runs: int = 20
    pilot_runs: int = 3
    finalists: int = 3
    seed: int = 0
    workers: int = 1
    negative_ratio: float = 1.0
    alpha: float = 0.05


@dataclass(frozen=True)
class CandidateOutcome:
    kind: str
    pilot_statistic: float | None
    error: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "pilot_statistic": self.pilot_statistic,
            "error": self.error,
        }


@dataclass(frozen=True)
class RunRecord:
    seed: int
    statistic_mean: float
    p_degree: float
    p_betweenness: float
    p_closeness: float
    arc_count: int
    diameter: int
    density: float
    avg_path_length: float
    reciprocity: float
    centralization: float

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "statistic_mean": self.statistic_mean,
            "p_degree": self.p_degree,
            "p_betweenness": self.p_betweenness,
            "p_closeness": self.p_closeness,
            "arc_count": self.arc_count,
            "diameter": self.diameter,
            "density": self.density,
            "avg_path_length": self.avg_path_length,
            "reciprocity": self.reciprocity,
            "centralization": self.centralization,
        }


_AGGREGATE_FIELDS = (
    "statistic_mean",
    "p_degree",
    "p_betweenness",
    "p_closeness",
    "arc_count",
    "diameter",
    "density",
    "avg_path_length",
    "reciprocity",
    "centralization",
)


@dataclass(frozen=True)
class FinalistResult:
    kind: str
    seeds: tuple[int, ...]
    runs: tuple[RunRecord, ...]
    mean_statistic: float

    def aggregates(self) -> dict:
        out = {}
        for name in _AGGREGATE_FIELDS:
            values = np.array([getattr(r, name) for r in self.runs], dtype=np.float64)
            out[name] = {"mean": float(values.mean()), "std": float(values.std())}
        return out

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "seeds": list(self.seeds),
            "mean_statistic": self.mean_statistic,
            "aggregates": self.aggregates(),
            "runs": [r.to_json_dict() for r in self.runs],
        }


@dataclass(frozen=True)
class RecreationReport:
    source_profile: NetworkProfile
    candidates: tuple[CandidateOutcome, ...]
    finalists: tuple[FinalistResult, ...]
    winner: str
    master_seed: int
    config: RecreateConfig
    winner_graphs: tuple[Graph, ...] = field(repr=False, default=())

    def to_json_dict(self) -> dict:
        return {
            "master_seed": self.master_seed,
            "config": {
                "runs": self.config.runs,
                "pilot_runs": self.config.pilot_runs,
                "finalists": self.config.finalists,
                "negative_ratio": self.config.negative_ratio,
                "alpha": self.config.alpha,
            },
            "source_profile": self.source_profile.scalar_dict(),
            "candidates": [c.to_json_dict() for c in self.candidates],
            "finalists": [f.to_json_dict() for f in self.finalists],
            "winner": self.winner,
        }


def _candidate_specs(
    g: Graph, attrs: AttributeTable, negative_ratio: float, rng: RngStream
) -> list[tuple[str, DistanceFunction | None, str | None]]:
    """Every applicable catalog kind as (kind, spec, fit-error)."""
    numeric = attrs.numeric_names()
    candidates: list[tuple[str, DistanceFunction | None, str | None]] = [
        ("random", RandomDistance(), None)
    ]
    for centrality in ("degree", "betweenness", "closeness", "pagerank"):
        candidates.append((centrality, CentralityDistance(centrality=centrality), None))
    if len(numeric) >= 1:
        candidates.append(("euclidean1d", Euclidean1D(attr=numeric[0]), None))
    if len(numeric) >= 2:
        candidates.append(
            ("euclidean2d", Euclidean2D(attr1=numeric[0], attr2=numeric[1]), None)
        )
        candidates.append(("cosine", CosineDistance(attrs=tuple(numeric)), None))
    candidates.append(
        (
            "aggregate",
            AggregateDistance(weights=tuple((name, 1.0) for name in attrs.names)),
            None,
        )
    )
    try:
        ts = build_training_set(g, attrs, negative_ratio=negative_ratio, rng=rng)
    except ValueError as exc:
        reason = f"training set unavailable: {exc}"
        candidates.append(("linear_regression", None, reason))
        candidates.append(("naive_bayes", None, reason))
        return candidates
    try:
        candidates.append(("linear_regression", fit_linear_regression_distance(ts), None))
    except (ValueError, np.linalg.LinAlgError) as exc:
        candidates.append(("linear_regression", None, str(exc)))
    try:
        candidates.append(("naive_bayes", fit_naive_bayes_distance(ts), None))
    except ValueError as exc:
        candidates.append(("naive_bayes", None, str(exc)))
    return candidates


def _ks_statistics(source_vectors, generated: Graph) -> tuple[float, float, float]:
    deg = ks_two_sample(source_vectors[0], degree_centrality(generated, "total"))
    bet = ks_two_sample(source_vectors[1], betweenness_centrality(generated, "count"))
    clo = ks_two_sample(source_vectors[2], closeness_centrality(generated, "reciprocal"))
    return deg, bet, clo


def _draw_distinct_seed(stream: RngStream, used: set[int]) -> int:
    seed = stream.spawn_seed()
    while seed in used:
        seed = stream.spawn_seed()
    used.add(seed)
    return seed


def recreate(
    g: Graph,
    attrs: AttributeTable | None = None,
    config: RecreateConfig | None = None,
) -> RecreationReport:
    """Learn which catalog distance best re-creates ``g`` and aggregate the
    winner's generated family.  Deterministic for a fixed config seed."""
    if g.n < 3:
        raise ValueError(f"need a source network with n >= 3, got n={g.n}")
    config = config or RecreateConfig()
    master = RngStream(config.seed)
    if attrs is None:
        attrs = generate_synthetic_attributes(g.n, master.child(0).spawn_seed())
    elif attrs.n != g.n:
        raise ValueError(f"attribute table has {attrs.n} rows for n={g.n}")

    source_profile = network_profile(g)
    source_vectors = (
        source_profile.degree,
        source_profile.betweenness,
        source_profile.closeness,
    )
    centralities = reference_centralities(g)
    degrees = DegreeSpec.resample(out_degree_sequence(g))
    candidates = _candidate_specs(g, attrs, config.negative_ratio, master.child(1))

    used_seeds: set[int] = set()
    outcomes: list[CandidateOutcome] = []
    scored: list[tuple[float, str, DistanceFunction]] = []
    for index, (kind, spec, error) in enumerate(candidates):
        if spec is None:
            outcomes.append(CandidateOutcome(kind=kind, pilot_statistic=None, error=error))
            continue
        stats = []
        failure = None
        for run in range(config.pilot_runs):
            run_seed = _draw_distinct_seed(master.child(2, index, run), used_seeds)
            try:
                generated = priority_rank_generate(
                    g.n,
                    attrs,
                    spec,
                    degrees,
                    run_seed,
                    reference=g,
                    centralities=centralities,
                    workers=config.workers,
                )
            except (ValueError, ArithmeticError) as exc:
                failure = str(exc)
                break
            deg, bet, clo = _ks_statistics(source_vectors, generated)
            stats.append((deg.statistic + bet.statistic + clo.statistic) / 3.0)
        if failure is not None:
            outcomes.append(CandidateOutcome(kind=kind, pilot_statistic=None, error=failure))
            continue
        pilot = float(np.mean(stats))
        outcomes.append(CandidateOutcome(kind=kind, pilot_statistic=pilot, error=None))
        scored.append((pilot, kind, spec))

    if not scored:
        raise RuntimeError("no usable candidate distance functions")
    scored.sort(key=lambda item: (item[0], item[1]))
    finalists_specs = scored[: config.finalists]

    finalists: list[FinalistResult] = []
    graphs_by_kind: dict[str, tuple[Graph, ...]] = {}
    for index, (_, kind, spec) in enumerate(finalists_specs):
        seeds = []
        runs = []
        graphs = []
        for run in range(config.runs):
            run_seed = _draw_distinct_seed(master.child(3, index, run), used_seeds)
            seeds.append(run_seed)
            generated = priority_rank_generate(
                g.n,
                attrs,
                spec,
                degrees,
                run_seed,
                reference=g,
                centralities=centralities,
                workers=config.workers,
            )
            graphs.append(generated)
            deg, bet, clo = _ks_statistics(source_vectors, generated)
            profile = network_profile(generated)
            runs.append(
                RunRecord(
                    seed=run_seed,
                    statistic_mean=(deg.statistic + bet.statistic + clo.statistic) / 3.0,
                    p_degree=deg.p_value,
                    p_betweenness=bet.p_value,
                    p_closeness=clo.p_value,
                    arc_count=profile.arc_count,
                    diameter=profile.diameter,
                    density=profile.density,
                    avg_path_length=profile.avg_path_length,
                    reciprocity=profile.reciprocity,
                    centralization=profile.centralization,
                )
            )
        mean_statistic = float(np.mean([r.statistic_mean for r in runs]))
        finalists.append(
            FinalistResult(
                kind=kind,
                seeds=tuple(seeds),
                runs=tuple(runs),
                mean_statistic=mean_statistic,
            )
        )
        graphs_by_kind[kind] = tuple(graphs)

    winner = min(finalists, key=lambda f: (f.mean_statistic, f.kind))
    return RecreationReport(
        source_profile=source_profile,
        candidates=tuple(outcomes),
        finalists=tuple(finalists),
        winner=winner.kind,
        master_seed=config.seed,
        config=config,
        winner_graphs=graphs_by_kind[winner.kind],
    )
