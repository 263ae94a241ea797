"""Distance functions that induce local vertex rankings.

A distance function maps an ordered vertex pair (i, j), i != j, to a
non-negative finite real.  Smaller distance means higher attachment
priority.  The catalog covers random draws, inverse-centrality scores,
attribute-space metrics, weighted aggregates, a hierarchical blend, and two
machine-learned distances fitted from a graph's adjacency structure.

Evaluation runs against a :class:`DistanceContext` holding the attribute
table, the centrality vectors of a reference graph, and a random stream.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar, Mapping

import numpy as np

from . import metrics
from .graph import AttributeTable, Graph
from .stats import RngStream

CENTRALITY_KINDS = ("degree", "betweenness", "closeness", "pagerank")
DEFAULT_EPS = 1e-6

_VAR_FLOOR = 1e-9


class DistanceContext:
    """Evaluation context: vertex count, attributes, reference centralities,
    and a random stream for the stochastic distance kind.

    Centrality-based kinds read vectors computed on ``reference`` (or passed
    in directly via ``centralities``); they never see the graph being built.
    """

    def __init__(
        self,
        n: int | None = None,
        attrs: AttributeTable | None = None,
        reference: Graph | None = None,
        rng: RngStream | None = None,
        centralities: Mapping[str, np.ndarray] | None = None,
    ):
        if n is None:
            if attrs is not None:
                n = attrs.n
            elif reference is not None:
                n = reference.n
            else:
                raise ValueError("context needs n, attrs, or a reference graph")
        self.n = int(n)
        if attrs is not None and attrs.n != self.n:
            raise ValueError(f"attribute table has {attrs.n} rows, context n={self.n}")
        if reference is not None and reference.n != self.n:
            raise ValueError(f"reference graph has n={reference.n}, context n={self.n}")
        self.attrs = attrs
        self.reference = reference
        self.rng = rng
        self._centralities: dict[str, np.ndarray] = dict(centralities or {})
        self._random_rows: dict[tuple, np.ndarray] = {}
        self._features: dict = {}
        self._scores: dict = {}

    def centrality(self, kind: str) -> np.ndarray:
        if kind in self._centralities:
            return self._centralities[kind]
        if self.reference is None:
            raise ValueError(
                f"{kind} distance needs a reference graph or precomputed centralities"
            )
        if kind == "degree":
            vec = metrics.degree_centrality(self.reference, "total")
        elif kind == "betweenness":
            vec = metrics.betweenness_centrality(self.reference, "count")
        elif kind == "closeness":
            vec = metrics.closeness_centrality(self.reference, "reciprocal")
        elif kind == "pagerank":
            vec = metrics.pagerank_centrality(self.reference)
        else:
            raise ValueError(f"unknown centrality kind {kind!r}")
        self._centralities[kind] = vec
        return vec

    def random_row(self, source: int, mu: float, sigma: float) -> np.ndarray:
        """Memoized |N(mu, sigma)| draws for one source vertex, so repeated
        queries of the same pair stay consistent within a ranking build."""
        key = (source, mu, sigma)
        row = self._random_rows.get(key)
        if row is None:
            if self.rng is None:
                raise ValueError("random distance needs a context random stream")
            gen = self.rng.child(source).generator
            row = np.abs(gen.normal(mu, sigma, size=self.n))
            self._random_rows[key] = row
        return row

    def features(self, encoder: "FeatureEncoder") -> np.ndarray:
        mat = self._features.get(encoder)
        if mat is None:
            if self.attrs is None:
                raise ValueError("learned distance needs an attribute table")
            mat = encoder.encode(self.attrs)
            self._features[encoder] = mat
        return mat


def reference_centralities(g: Graph) -> dict[str, np.ndarray]:
    """Precompute every centrality vector a context may ask for."""
    return {
        "degree": metrics.degree_centrality(g, "total"),
        "betweenness": metrics.betweenness_centrality(g, "count"),
        "closeness": metrics.closeness_centrality(g, "reciprocal"),
        "pagerank": metrics.pagerank_centrality(g),
    }


@dataclass(frozen=True)
class DistanceFunction:
    """Base class; concrete kinds implement ``row``."""

    kind: ClassVar[str] = ""
    requires_attributes: ClassVar[bool] = False
    requires_centrality: ClassVar[bool] = False

    def row(self, ctx: DistanceContext, i: int) -> np.ndarray:
        """Distances from source i to every vertex; the self entry is a
        placeholder and must never be consumed."""
        raise NotImplementedError

    def evaluate(self, ctx: DistanceContext, i: int, j: int) -> float:
        if i == j:
            raise ValueError("distance is only queried for i != j")
        if not (0 <= i < ctx.n and 0 <= j < ctx.n):
            raise ValueError(f"vertex pair ({i}, {j}) outside context n={ctx.n}")
        return float(self.row(ctx, i)[j])

    def to_json_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class RandomDistance(DistanceFunction):
    """|N(mu, sigma)| per pair; rankings are uniform random permutations."""

    mu: float = 0.0
    sigma: float = 1.0
    kind: ClassVar[str] = "random"

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")

    def row(self, ctx, i):
        return ctx.random_row(i, self.mu, self.sigma)

    def to_json_dict(self):
        return {"kind": self.kind, "mu": self.mu, "sigma": self.sigma}


@dataclass(frozen=True)
class CentralityDistance(DistanceFunction):
    """1 / (C(j) + eps) for a chosen centrality; depends on the target only,
    so every source shares one global ranking."""

    centrality: str
    eps: float = DEFAULT_EPS
    requires_centrality: ClassVar[bool] = True

    def __post_init__(self):
        if self.centrality not in CENTRALITY_KINDS:
            raise ValueError(f"unknown centrality {self.centrality!r}")
        if self.eps <= 0:
            raise ValueError(f"eps must be positive, got {self.eps}")

    @property
    def kind(self) -> str:  # type: ignore[override]
        return self.centrality

    def row(self, ctx, i):
        return 1.0 / (ctx.centrality(self.centrality) + self.eps)

    def to_json_dict(self):
        return {"kind": self.centrality, "eps": self.eps}


def _numeric_column(ctx: DistanceContext, name: str) -> np.ndarray:
    if ctx.attrs is None:
        raise ValueError("attribute-based distance needs an attribute table")
    return ctx.attrs.numeric_array(name)


@dataclass(frozen=True)
class Euclidean1D(DistanceFunction):
    """|a_i - a_j| on a single numeric attribute."""

    attr: str
    kind: ClassVar[str] = "euclidean1d"
    requires_attributes: ClassVar[bool] = True

    def row(self, ctx, i):
        vals = _numeric_column(ctx, self.attr)
        return np.abs(vals - vals[i])

    def to_json_dict(self):
        return {"kind": self.kind, "attr": self.attr}


@dataclass(frozen=True)
class Euclidean2D(DistanceFunction):
    """Euclidean distance over two numeric attributes."""

    attr1: str
    attr2: str
    kind: ClassVar[str] = "euclidean2d"
    requires_attributes: ClassVar[bool] = True

    def row(self, ctx, i):
        a = _numeric_column(ctx, self.attr1)
        b = _numeric_column(ctx, self.attr2)
        return np.sqrt((a - a[i]) ** 2 + (b - b[i]) ** 2)

    def to_json_dict(self):
        return {"kind": self.kind, "attr1": self.attr1, "attr2": self.attr2}


@dataclass(frozen=True)
class CosineDistance(DistanceFunction):
    """1 - cosine similarity of the numeric attribute vectors."""

    attrs: tuple[str, ...] | None = None
    kind: ClassVar[str] = "cosine"
    requires_attributes: ClassVar[bool] = True

    def _matrix(self, ctx) -> np.ndarray:
        if ctx.attrs is None:
            raise ValueError("cosine distance needs an attribute table")
        names = self.attrs if self.attrs is not None else ctx.attrs.numeric_names()
        if not names:
            raise ValueError("cosine distance needs at least one numeric attribute")
        return np.column_stack([_numeric_column(ctx, n) for n in names])

    def row(self, ctx, i):
        mat = self._matrix(ctx)
        norms = np.linalg.norm(mat, axis=1)
        if (norms == 0.0).any():
            bad = int(np.argmin(norms))
            raise ValueError(f"vertex {bad} has a zero-norm attribute vector")
        sims = (mat @ mat[i]) / (norms * norms[i])
        return np.maximum(1.0 - sims, 0.0)

    def evaluate(self, ctx, i, j):
        if i == j:
            raise ValueError("distance is only queried for i != j")
        mat = self._matrix(ctx)
        ni = float(np.linalg.norm(mat[i]))
        nj = float(np.linalg.norm(mat[j]))
        if ni == 0.0 or nj == 0.0:
            bad = i if ni == 0.0 else j
            raise ValueError(f"vertex {bad} has a zero-norm attribute vector")
        return max(1.0 - float(mat[i] @ mat[j]) / (ni * nj), 0.0)

    def to_json_dict(self):
        return {"kind": self.kind, "attrs": list(self.attrs) if self.attrs else None}


@dataclass(frozen=True)
class AggregateDistance(DistanceFunction):
    """Weighted sum of per-attribute distances: |difference| for numeric
    attributes, 0/1 mismatch for categorical ones."""

    weights: tuple[tuple[str, float], ...]
    kind: ClassVar[str] = "aggregate"
    requires_attributes: ClassVar[bool] = True

    def __post_init__(self):
        if not self.weights:
            raise ValueError("aggregate distance needs at least one attribute weight")
        if any(w < 0 for _, w in self.weights):
            raise ValueError("aggregate weights must be non-negative")

    def row(self, ctx, i):
        if ctx.attrs is None:
            raise ValueError("aggregate distance needs an attribute table")
        total = np.zeros(ctx.n)
        for name, w in self.weights:
            col = ctx.attrs.column(name)
            if col.is_numeric:
                vals = ctx.attrs.numeric_array(name)
                total += w * np.abs(vals - vals[i])
            else:
                codes = ctx.attrs.codes(name)
                total += w * (codes != codes[i]).astype(np.float64)
        return total

    def to_json_dict(self):
        return {"kind": self.kind, "weights": [[n, w] for n, w in self.weights]}


def make_age_sex_distance() -> AggregateDistance:
    """Social-affinity distance: |age_i - age_j| plus a 10-year penalty when
    the sex labels differ.  Expects an ``age`` numeric column and a ``sex``
    categorical column."""
    return AggregateDistance(weights=(("age", 1.0), ("sex", 10.0)))


@dataclass(frozen=True)
class HierarchicalMixDistance(DistanceFunction):
    """alpha * euclidean + (1 - alpha) * |class rank difference|."""

    alpha: float
    class_ranks: tuple[int, ...]
    euclid_attrs: tuple[str, ...] = ()
    kind: ClassVar[str] = "hierarchical_mix"
    requires_attributes: ClassVar[bool] = True

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")

    def row(self, ctx, i):
        if len(self.class_ranks) != ctx.n:
            missing = ctx.n - len(self.class_ranks)
            raise ValueError(f"class map leaves {missing} vertex(es) unmapped")
        ranks = np.array(self.class_ranks, dtype=np.float64)
        hier = np.abs(ranks - ranks[i])
        if self.alpha == 0.0:
            return hier
        cols = [_numeric_column(ctx, name) for name in self.euclid_attrs]
        if not cols:
            raise ValueError("hierarchical mix with alpha > 0 needs euclidean attributes")
        sq = np.zeros(ctx.n)
        for vals in cols:
            sq += (vals - vals[i]) ** 2
        return self.alpha * np.sqrt(sq) + (1.0 - self.alpha) * hier

    def to_json_dict(self):
        return {
            "kind": self.kind,
            "alpha": self.alpha,
            "class_ranks": list(self.class_ranks),
            "euclid_attrs": list(self.euclid_attrs),
        }


def make_hierarchical_mix_distance(
    alpha: float, class_map, euclid_attrs=()
) -> HierarchicalMixDistance:
    """Build the blend from a vertex -> integer class rank mapping."""
    if isinstance(class_map, Mapping):
        if not class_map:
            raise ValueError("class map is empty")
        n = max(class_map) + 1
        ranks = []
        for v in range(n):
            if v not in class_map:
                raise ValueError(f"vertex {v} is unmapped in the class map")
            ranks.append(int(class_map[v]))
    else:
        ranks = [int(r) for r in class_map]
    return HierarchicalMixDistance(
        alpha=float(alpha),
        class_ranks=tuple(ranks),
        euclid_attrs=tuple(euclid_attrs),
    )


@dataclass(frozen=True)
class FeatureEncoder:
    """Per-vertex feature layout: numeric columns pass through, categorical
    columns expand one-hot against the label set seen at build time."""

    columns: tuple[tuple[str, str, tuple[str, ...]], ...]

    @classmethod
    def from_table(cls, table: AttributeTable) -> "FeatureEncoder":
        cols = []
        for col in table.columns:
            labels = table.labels(col.name) if not col.is_numeric else ()
            cols.append((col.name, col.kind, labels))
        return cls(columns=tuple(cols))

    @property
    def width(self) -> int:
        return sum(len(labels) if labels else 1 for _, _, labels in self.columns)

    @cached_property
    def binary_mask(self) -> np.ndarray:
        mask = []
        for _, _, labels in self.columns:
            if labels:
                mask.extend([True] * len(labels))
            else:
                mask.append(False)
        return np.array(mask, dtype=bool)

    def feature_names(self) -> list[str]:
        names = []
        for name, _, labels in self.columns:
            if labels:
                names.extend(f"{name}={lab}" for lab in labels)
            else:
                names.append(name)
        return names

    def encode(self, table: AttributeTable) -> np.ndarray:
        blocks = []
        for name, kind, labels in self.columns:
            col = table.column(name)
            if labels:
                if col.is_numeric:
                    raise ValueError(f"attribute {name!r} changed kind since fitting")
                block = np.zeros((table.n, len(labels)))
                index = {lab: k for k, lab in enumerate(labels)}
                for row, value in enumerate(col.values):
                    k = index.get(value)
                    if k is not None:
                        block[row, k] = 1.0
                blocks.append(block)
            else:
                blocks.append(table.numeric_array(name).reshape(-1, 1))
        return np.hstack(blocks) if blocks else np.zeros((table.n, 0))

    def to_json(self) -> list:
        return [[name, kind, list(labels)] for name, kind, labels in self.columns]

    @classmethod
    def from_json(cls, doc) -> "FeatureEncoder":
        return cls(
            columns=tuple((name, kind, tuple(labels)) for name, kind, labels in doc)
        )


@dataclass(frozen=True)
class TrainingSet:
    """Adjacency-labelled vertex-pair features: label 1 for an arc,
    0 for a sampled non-arc."""

    features: np.ndarray
    labels: np.ndarray
    encoder: FeatureEncoder

    @property
    def pair_binary_mask(self) -> np.ndarray:
        return np.tile(self.encoder.binary_mask, 2)


def build_training_set(
    g: Graph,
    attrs: AttributeTable,
    negative_ratio: float = 1.0,
    rng: RngStream | None = None,
) -> TrainingSet:
    """All adjacent pairs as positives plus uniformly sampled non-adjacent
    pairs as negatives, ceil(negative_ratio * positives) of them (capped by
    availability).  ``negative_ratio=math.inf`` keeps every non-arc."""
    if attrs.n != g.n:
        raise ValueError(f"attribute table has {attrs.n} rows for a graph of n={g.n}")
    if negative_ratio <= 0:
        raise ValueError(f"negative_ratio must be positive, got {negative_ratio}")
    positives = g.arc_list
    if not positives:
        raise ValueError("graph has no arcs, so no positive examples")
    non_arcs = [
        (i, j)
        for i in range(g.n)
        for j in range(g.n)
        if i != j and (i, j) not in g.arcs
    ]
    if not non_arcs:
        raise ValueError("graph is complete, so no negative examples")
    wanted = math.ceil(negative_ratio * len(positives)) if math.isfinite(negative_ratio) else len(non_arcs)
    wanted = min(wanted, len(non_arcs))
    if wanted < len(non_arcs):
        if rng is None:
            raise ValueError("negative subsampling needs an rng stream")
        picked = rng.generator.choice(len(non_arcs), size=wanted, replace=False)
        negatives = [non_arcs[k] for k in sorted(picked)]
    else:
        negatives = non_arcs
    encoder = FeatureEncoder.from_table(attrs)
    phi = encoder.encode(attrs)
    pairs = list(positives) + negatives
    feats = np.hstack(
        [
            phi[np.fromiter((p[0] for p in pairs), dtype=np.int64)],
            phi[np.fromiter((p[1] for p in pairs), dtype=np.int64)],
        ]
    )
    labels = np.concatenate(
        [np.ones(len(positives)), np.zeros(len(negatives))]
    )
    return TrainingSet(features=feats, labels=labels, encoder=encoder)


@dataclass(frozen=True)
class LinearRegressionDistance(DistanceFunction):
    """Least-squares fit of 1 - adjacency on pair features; negative raw
    outputs are clamped to zero."""

    beta: tuple[float, ...]
    encoder: FeatureEncoder
    kind: ClassVar[str] = "linear_regression"
    requires_attributes: ClassVar[bool] = True

    def row(self, ctx, i):
        phi = ctx.features(self.encoder)
        p = phi.shape[1]
        beta = np.array(self.beta)
        const = float(phi[i] @ beta[:p]) + beta[2 * p]
        return np.maximum(phi @ beta[p : 2 * p] + const, 0.0)

    def to_json_dict(self):
        return {
            "kind": self.kind,
            "beta": list(self.beta),
            "encoder": self.encoder.to_json(),
        }


def fit_linear_regression_distance(ts: TrainingSet) -> LinearRegressionDistance:
    """Ordinary least squares with intercept on y = 1 - label."""
    if ts.features.shape[0] < 2:
        raise ValueError("training set needs at least 2 rows")
    if len(np.unique(ts.labels)) < 2:
        raise ValueError("training set needs at least one example of each label")
    X = np.hstack([ts.features, np.ones((ts.features.shape[0], 1))])
    y = 1.0 - ts.labels
    beta, _, rank, _ = np.linalg.lstsq(X, y, rcond=None)
    if rank < X.shape[1]:
        warnings.warn(
            f"design matrix is rank-deficient (rank {rank} of {X.shape[1]}); "
            "using the minimum-norm solution",
            stacklevel=2,
        )
    return LinearRegressionDistance(beta=tuple(float(b) for b in beta), encoder=ts.encoder)


@dataclass(frozen=True)
class NaiveBayesDistance(DistanceFunction):
    """Posterior-odds distance P(no edge | features) / (P(edge | features) + eps).

    Continuous pair features carry per-class Gaussian statistics, one-hot
    features per-class Bernoulli rates with add-one smoothing.  Adjacent-looking
    pairs get small distances.
    """

    prior_edge: float
    prior_no_edge: float
    means: tuple        # (edge, no-edge) rows over 2p pair features
    variances: tuple
    bernoulli: tuple
    binary_mask: tuple
    encoder: FeatureEncoder
    eps: float = DEFAULT_EPS
    kind: ClassVar[str] = "naive_bayes"
    requires_attributes: ClassVar[bool] = True

    @cached_property
    def _params(self):
        return (
            np.array(self.means),
            np.array(self.variances),
            np.array(self.bernoulli),
            np.array(self.binary_mask, dtype=bool),
        )

    def _half_scores(self, phi: np.ndarray, offset: int) -> tuple[np.ndarray, np.ndarray]:
        """Per-vertex class log-likelihoods for one half of the pair features."""
        means, variances, bern, mask = self._params
        p = phi.shape[1]
        cols = slice(offset, offset + p)
        out = []
        for c in range(2):
            mu = means[c, cols]
            var = variances[c, cols]
            # rates for continuous slots are placeholders; clip keeps log finite
            rate = np.clip(bern[c, cols], 1e-12, 1.0 - 1e-12)
            gauss = -0.5 * (np.log(2.0 * math.pi * var) + (phi - mu) ** 2 / var)
            berno = phi * np.log(rate) + (1.0 - phi) * np.log(1.0 - rate)
            half_mask = mask[cols]
            out.append(np.where(half_mask, berno, gauss).sum(axis=1))
        return out[0], out[1]

    def _scores(self, ctx) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        cached = ctx._scores.get(self)
        if cached is None:
            phi = ctx.features(self.encoder)
            p = phi.shape[1]
            src_edge, src_no = self._half_scores(phi, 0)
            dst_edge, dst_no = self._half_scores(phi, p)
            cached = (src_edge, src_no, dst_edge, dst_no)
            ctx._scores[self] = cached
        return cached

    def row(self, ctx, i):
        src_edge, src_no, dst_edge, dst_no = self._scores(ctx)
        s_edge = math.log(self.prior_edge) + src_edge[i] + dst_edge
        s_no = math.log(self.prior_no_edge) + src_no[i] + dst_no
        top = np.maximum(s_edge, s_no)
        p_edge = np.exp(s_edge - top)
        p_no = np.exp(s_no - top)
        norm = p_edge + p_no
        return (p_no / norm) / (p_edge / norm + self.eps)

    def to_json_dict(self):
        return {
            "kind": self.kind,
            "prior_edge": self.prior_edge,
            "prior_no_edge": self.prior_no_edge,
            "means": [list(row) for row in self.means],
            "variances": [list(row) for row in self.variances],
            "bernoulli": [list(row) for row in self.bernoulli],
            "binary_mask": list(self.binary_mask),
            "eps": self.eps,
            "encoder": self.encoder.to_json(),
        }


def fit_naive_bayes_distance(ts: TrainingSet, eps: float = DEFAULT_EPS) -> NaiveBayesDistance:
    """Class-conditional Gaussian/Bernoulli fit; class order is (edge, no edge)."""
    if ts.features.shape[0] < 2:
        raise ValueError("training set needs at least 2 rows")
    counts = [int((ts.labels == 1).sum()), int((ts.labels == 0).sum())]
    if min(counts) < 1:
        raise ValueError("training set needs at least one example of each label")
    total = ts.features.shape[0]
    means, variances, bernoulli = [], [], []
    for label in (1.0, 0.0):
        rows = ts.features[ts.labels == label]
        means.append(rows.mean(axis=0))
        variances.append(np.maximum(rows.var(axis=0), _VAR_FLOOR))
        bernoulli.append((rows.sum(axis=0) + 1.0) / (rows.shape[0] + 2.0))
    return NaiveBayesDistance(
        prior_edge=counts[0] / total,
        prior_no_edge=counts[1] / total,
        means=tuple(tuple(float(v) for v in row) for row in means),
        variances=tuple(tuple(float(v) for v in row) for row in variances),
        bernoulli=tuple(tuple(float(v) for v in row) for row in bernoulli),
        binary_mask=tuple(bool(b) for b in ts.pair_binary_mask),
        encoder=ts.encoder,
        eps=eps,
    )


def spec_from_json_dict(doc: dict) -> DistanceFunction:
    """Rebuild a distance function from its JSON document."""
    kind = doc["kind"]
    if kind == "random":
        return RandomDistance(mu=doc.get("mu", 0.0), sigma=doc.get("sigma", 1.0))
    if kind in CENTRALITY_KINDS:
        return CentralityDistance(centrality=kind, eps=doc.get("eps", DEFAULT_EPS))
    if kind == "euclidean1d":
        return Euclidean1D(attr=doc["attr"])
    if kind == "euclidean2d":
        return Euclidean2D(attr1=doc["attr1"], attr2=doc["attr2"])
    if kind == "cosine":
        attrs = doc.get("attrs")
        return CosineDistance(attrs=tuple(attrs) if attrs else None)
    if kind == "aggregate":
        return AggregateDistance(
            weights=tuple((name, float(w)) for name, w in doc["weights"])
        )
    if kind == "hierarchical_mix":
        return HierarchicalMixDistance(
            alpha=doc["alpha"],
            class_ranks=tuple(int(r) for r in doc["class_ranks"]),
            euclid_attrs=tuple(doc.get("euclid_attrs") or ()),
        )
    if kind == "linear_regression":
        return LinearRegressionDistance(
            beta=tuple(float(b) for b in doc["beta"]),
            encoder=FeatureEncoder.from_json(doc["encoder"]),
        )
    if kind == "naive_bayes":
        return NaiveBayesDistance(
            prior_edge=doc["prior_edge"],
            prior_no_edge=doc["prior_no_edge"],
            means=tuple(tuple(row) for row in doc["means"]),
            variances=tuple(tuple(row) for row in doc["variances"]),
            bernoulli=tuple(tuple(row) for row in doc["bernoulli"]),
            binary_mask=tuple(bool(b) for b in doc["binary_mask"]),
            encoder=FeatureEncoder.from_json(doc["encoder"]),
            eps=doc.get("eps", DEFAULT_EPS),
        )
    raise ValueError(f"unknown distance kind {kind!r}")
