"""Simulated path-query oracles and their wrappers.

The reconstruction code never touches a tree directly; it sees one of these
handles instead. Base oracles answer from a hidden tree and count their own
evaluations in ``calls``. Wrappers (majority vote, counting, caching) stack
on top via an ``inner`` attribute, so a counting wrapper can always find the
innermost evaluation counter.

Query surfaces:

* ``query(i, j)``        exact / majority / counting / caching: 1 iff the
                          hidden tree has a directed path i -> j.
* ``noisy_query(i, j)``  noisy oracle: the exact bit, flipped independently
                          with the configured probability.
* ``additive_query(i, j)`` additive oracle: sum of edge weights on the
                          directed path i -> j, exactly 0.0 when there is none.
"""

from __future__ import annotations

import math
import random

from .errors import SelfQueryError
from .trees import ROOT, DirectedRootedTree, WeightedDirectedRootedTree


class ExactOracle:
    """Answers Q(i, j) from the hidden tree, no errors."""

    def __init__(self, tree: DirectedRootedTree):
        self.tree = tree
        self.calls = 0
        self._parent = tree.parent

    def query(self, i: int, j: int) -> int:
        _check(len(self._parent), i, j)
        self.calls += 1
        parent = self._parent
        k = parent[j]
        while k != ROOT:
            if k == i:
                return 1
            k = parent[k]
        return 0


class NoisyOracle:
    """Exact bit flipped independently per call with probability ``noise``.

    Deterministic given (seed, call order): every call draws exactly one
    uniform variate from its own RNG. ``noise`` may be 0.0 (degenerate no-flip
    limit) but must stay below 1/2.
    """

    def __init__(self, tree: DirectedRootedTree, noise: float, seed: int | None = None):
        if not 0.0 <= noise < 0.5:
            raise ValueError(f"noise must lie in [0, 0.5), got {noise}")
        self.tree = tree
        self.noise = noise
        self.calls = 0
        self._parent = tree.parent
        self._rng = random.Random(seed)

    def noisy_query(self, i: int, j: int) -> int:
        _check(len(self._parent), i, j)
        self.calls += 1
        parent = self._parent
        bit = 0
        k = parent[j]
        while k != ROOT:
            if k == i:
                bit = 1
                break
            k = parent[k]
        if self._rng.random() < self.noise:
            return 1 - bit
        return bit


class AdditiveOracle:
    """Returns the total weight of the directed path i -> j, or exactly 0.0."""

    def __init__(self, weighted: WeightedDirectedRootedTree):
        self.weighted = weighted
        self.calls = 0
        self._parent = weighted.tree.parent
        self._weights = dict(weighted.weights)

    def additive_query(self, i: int, j: int) -> float:
        _check(len(self._parent), i, j)
        self.calls += 1
        parent = self._parent
        weights = self._weights
        total = 0.0
        c = j
        while True:
            p = parent[c]
            if p == ROOT:
                return 0.0
            total += weights[(p, c)]
            if p == i:
                return total
            c = p


class MajorityOracle:
    """Wraps a noisy oracle; each query takes a majority over m fresh votes."""

    def __init__(self, inner, votes: int):
        if votes < 1 or votes % 2 == 0:
            raise ValueError(f"vote count must be odd and >= 1, got {votes}")
        self.inner = inner
        self.votes = votes
        self.calls = 0

    def query(self, i: int, j: int) -> int:
        self.calls += 1
        ask = self.inner.noisy_query
        ones = 0
        for _ in range(self.votes):
            ones += ask(i, j)
        return 1 if 2 * ones > self.votes else 0


class CountingOracle:
    """Transparent wrapper exposing logical and raw query counters.

    ``logical_count`` is the number of calls made through this wrapper.
    ``raw_count`` is the number of innermost oracle evaluations they caused
    (a majority voter multiplies by its vote count, a caching layer stops
    recharging repeats).
    """

    def __init__(self, inner):
        self.inner = inner
        self.logical_count = 0
        base = inner
        while hasattr(base, "inner"):
            base = base.inner
        self._base = base
        self._base_start = base.calls

    @property
    def raw_count(self) -> int:
        return self._base.calls - self._base_start

    def query(self, i: int, j: int) -> int:
        self.logical_count += 1
        return self.inner.query(i, j)

    def noisy_query(self, i: int, j: int) -> int:
        self.logical_count += 1
        return self.inner.noisy_query(i, j)

    def additive_query(self, i: int, j: int) -> float:
        self.logical_count += 1
        return self.inner.additive_query(i, j)


class CachingOracle:
    """Memoizes query bits per ordered pair; repeats cost nothing inside."""

    def __init__(self, inner):
        self.inner = inner
        self.calls = 0
        self._memo: dict[tuple[int, int], int] = {}

    def query(self, i: int, j: int) -> int:
        self.calls += 1
        key = (i, j)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self.inner.query(i, j)
        return hit


def majority_vote_count(
    noise: float,
    failure_prob: float,
    n: int,
    degree_bound: int,
    pair_budget: float | None = None,
) -> int:
    """Votes per majority query so a whole run stays correct w.h.p.

    Sized so that, with query noise ``noise``, the probability that any of
    the run's majority answers is wrong stays below ``failure_prob``: a
    Hoeffding bound per pair, a union bound over a budget of

        C = (2/failure_prob) * 4 * degree_bound * n * ceil(log2 n)^2

    logical queries (the calibrated high-probability query count of the
    exact algorithm), giving the smallest odd integer at least

        (ln C + ln(2/failure_prob)) / (2 * (1/2 - noise)^2).

    ``pair_budget`` overrides C directly (used by tests).
    """
    if not 0.0 < noise < 0.5:
        raise ValueError(f"noise must lie in (0, 0.5), got {noise}")
    if not 0.0 < failure_prob < 1.0:
        raise ValueError(f"failure probability must lie in (0, 1), got {failure_prob}")
    if n < 2:
        raise ValueError(f"need at least two nodes, got {n}")
    if degree_bound < 1:
        raise ValueError(f"degree bound must be >= 1, got {degree_bound}")
    if pair_budget is None:
        log_ceil = (n - 1).bit_length()  # ceil(log2 n) for n >= 2
        pair_budget = (2.0 / failure_prob) * 4.0 * degree_bound * n * log_ceil**2
    need = (math.log(pair_budget) + math.log(2.0 / failure_prob)) / (
        2.0 * (0.5 - noise) ** 2
    )
    m = max(1, math.ceil(need))
    return m if m % 2 == 1 else m + 1


def _check(n: int, i: int, j: int) -> None:
    if i == j:
        raise SelfQueryError(f"oracle queried with i == j == {i}")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"node pair ({i}, {j}) out of range for n={n}")
