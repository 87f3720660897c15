"""Monte Carlo licci frequency in Erdos-Renyi random graphs.

A sampled graph is licci iff it is a forest, or it is the triangle K_3 (only
possible when n = 3). No homology runs here: the decision is a cheap cycle
check, so n in the hundreds is fine.

Reproducibility: trial t draws its randomness from a generator seeded by
counter-based splitting of the master seed (spawn key = (t,)), so a summary
depends only on the configuration, not on scheduling or trial order. Sweep
rows over different c share those per-trial draws; since an edge is present
iff its uniform draw is below p, the sampled edge sets grow with p and the
licci fraction is non-increasing in c exactly, not just on average.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graphs import SimpleGraph
from .invariants import is_licci

SPOT_CHECK_TRIALS = 100

CSV_HEADER = "n,c,p,trials,seed,licci_count,fraction_licci"


@dataclass(frozen=True)
class ExperimentConfig:
    """One G(n,p) experiment; give the edge probability as p or scaled as c/n."""

    n: int
    trials: int
    seed: int
    p: float | None = None
    c: float | None = None

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"need n >= 3, got {self.n}")
        if self.trials < 1:
            raise ValueError(f"need at least one trial, got {self.trials}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")
        if (self.p is None) == (self.c is None):
            raise ValueError("give exactly one of p and c, not both or neither")
        if self.p is not None and self.p < 0:
            raise ValueError(f"p must be nonnegative, got {self.p}")
        if self.c is not None and self.c < 0:
            raise ValueError(f"c must be nonnegative, got {self.c}")

    @property
    def edge_probability(self) -> float:
        if self.p is not None:
            return min(self.p, 1.0)
        return min(self.c / self.n, 1.0)


@dataclass(frozen=True)
class ExperimentSummary:
    """Counts from one experiment; fraction_licci is the exact count ratio.

    wall_time is measurement metadata and takes no part in equality, so two
    runs of the same configuration produce equal summaries.
    """

    config: ExperimentConfig
    licci_count: int
    forest_count: int
    cycle_count: int
    fraction_licci: Fraction
    wall_time: float = field(compare=False, default=0.0)


def _trial_generator(seed: int, trial: int) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(trial,))
    return np.random.Generator(np.random.PCG64(ss))


def sample_gnp(n: int, p: float, rng: np.random.Generator) -> SimpleGraph:
    """One Erdos-Renyi draw: each pair independently with probability min(p, 1)."""
    us, vs = np.triu_indices(n, k=1)
    keep = rng.random(us.shape[0]) < min(p, 1.0)
    edges = tuple((int(u) + 1, int(v) + 1) for u, v in zip(us[keep], vs[keep]))
    return SimpleGraph(n, edges)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Join the classes of a and b; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _forest_from_pairs(n: int, us: np.ndarray, vs: np.ndarray) -> bool:
    uf = _UnionFind(n)
    for u, v in zip(us.tolist(), vs.tolist()):
        if not uf.union(u, v):
            return False
    return True


def estimate_licci_probability(config: ExperimentConfig) -> ExperimentSummary:
    """Run the trials; licci means forest, or the full triangle when n = 3."""
    start = time.perf_counter()
    n = config.n
    p = config.edge_probability
    us_all, vs_all = np.triu_indices(n, k=1)
    pair_count = us_all.shape[0]
    licci = forest = 0
    for trial in range(config.trials):
        rng = _trial_generator(config.seed, trial)
        keep = rng.random(pair_count) < p
        us, vs = us_all[keep], vs_all[keep]
        is_forest_trial = _forest_from_pairs(n, us, vs)
        is_triangle = n == 3 and us.shape[0] == 3
        licci_trial = is_forest_trial or is_triangle
        if trial < SPOT_CHECK_TRIALS:
            graph = SimpleGraph(n, tuple((int(u) + 1, int(v) + 1) for u, v in zip(us, vs)))
            if graph.m and is_licci(graph).licci != licci_trial:
                raise RuntimeError(
                    f"licci fast path disagrees with the graph predicate on trial {trial}")
        licci += licci_trial
        forest += is_forest_trial
    return ExperimentSummary(
        config=config,
        licci_count=licci,
        forest_count=forest,
        cycle_count=config.trials - forest,
        fraction_licci=Fraction(licci, config.trials),
        wall_time=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[ExperimentSummary, ...]
    monotone_violations: tuple[tuple[float, float], ...]


def threshold_sweep(n: int, c_values: Sequence[float], trials: int, seed: int) -> SweepResult:
    """One experiment per c, all rows sharing the master seed and per-trial draws.

    The monotone_violations diagnostic lists consecutive c pairs where the
    licci fraction increased; with shared draws this should stay empty.
    """
    rows = []
    for c in c_values:
        config = ExperimentConfig(n=n, trials=trials, seed=seed, c=float(c))
        rows.append(estimate_licci_probability(config))
    violations = []
    ordered = sorted(rows, key=lambda s: s.config.c)
    for a, b in zip(ordered, ordered[1:]):
        if b.fraction_licci > a.fraction_licci:
            violations.append((a.config.c, b.config.c))
    return SweepResult(tuple(rows), tuple(violations))


def _fraction_6dp(value: Fraction) -> str:
    """Exact half-even decimal rendering with six digits, no float round trip."""
    scaled = round(value * 10 ** 6)
    whole, rest = divmod(scaled, 10 ** 6)
    return f"{whole}.{rest:06d}"


def summary_csv_line(summary: ExperimentSummary) -> str:
    cfg = summary.config
    c_text = "" if cfg.c is None else f"{cfg.c:g}"
    p_text = f"{cfg.edge_probability:.10g}"
    return (f"{cfg.n},{c_text},{p_text},{cfg.trials},{cfg.seed},"
            f"{summary.licci_count},{_fraction_6dp(summary.fraction_licci)}")


def summaries_to_csv(summaries: Sequence[ExperimentSummary]) -> str:
    lines = [CSV_HEADER]
    lines.extend(summary_csv_line(s) for s in summaries)
    return "\n".join(lines) + "\n"
