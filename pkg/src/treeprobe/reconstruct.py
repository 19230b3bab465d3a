"""Tree reconstruction from path queries.

The driver is a Las-Vegas divide and conquer: sample a random node pair,
rebuild the skeleton path between them through the oracle, weigh how many
off-path nodes hang from each path position, and cut at an edge whose two
sides are balanced enough. Each side is then solved recursively. With a
degree bound d the cut leaves pieces no larger than a (d-1)/d fraction, so
the recursion stays logarithmic and the whole thing needs O(d n log^2 n)
queries in expectation.

Two more regimes ride on the same driver: noisy queries are cleaned up with
per-pair majority votes, and additive (weighted-sum) queries are thresholded
into reachability bits, with one extra additive call per recovered edge to
read its weight.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import InconsistentOracleError
from .oracles import MajorityOracle, majority_vote_count
from .trees import SkeletonPath


class SeparatorEdge(NamedTuple):
    """A cut edge in its true orientation."""

    parent: int
    child: int


@dataclass
class ReconstructionStats:
    """Counters from one reconstruction run.

    rounds_total: sampling rounds summed over all recursive calls; every
        call on >= 2 nodes runs at least one.
    recursion_depth_max: deepest recursion level, the top call being 1.
    """

    rounds_total: int = 0
    recursion_depth_max: int = 0


Edges = set[tuple[int, int]]
SeparatorHook = Callable[[SeparatorEdge, tuple[int, ...]], None]


def sort_by_ancestry(oracle, items: Sequence[int]) -> list[int]:
    """Sort nodes of one directed path ancestor-first, one query per compare."""

    def compare(a: int, b: int) -> int:
        return -1 if oracle.query(a, b) else 1

    return sorted(items, key=cmp_to_key(compare))


def find_root_path(oracle, nodes: Sequence[int], i: int) -> list[int]:
    """Proper ancestors of i within ``nodes``, ordered root first."""
    above = [k for k in nodes if k != i and oracle.query(k, i)]
    return sort_by_ancestry(oracle, above)


def find_lca(oracle, nodes: Sequence[int], i: int, j: int) -> int:
    """Lowest common ancestor of two incomparable nodes.

    Walks i's root path downward and keeps the deepest node that is still an
    ancestor of j. Ancestors of j form a prefix of that path, so the scan
    stops at the first miss. Finding j itself on that path contradicts the
    incomparability the caller established, so it is treated the same way as
    finding no shared ancestor at all: the oracle must be lying.
    """
    last = None
    for k in find_root_path(oracle, nodes, i):
        if k == j:
            raise InconsistentOracleError(
                f"node {j} turned up among the ancestors of {i} after denying a path"
            )
        if oracle.query(k, j):
            last = k
        else:
            break
    if last is None:
        raise InconsistentOracleError(
            f"nodes {i} and {j} share no ancestor; oracle answers are inconsistent"
        )
    return last


def find_bag(oracle, path_nodes: Sequence[int], node: int) -> int:
    """Largest 1-based index t on a directed path with Q(path[t], node) = 1.

    Returns 1 when no position qualifies. Reachability along a directed path
    is monotone (a prefix of ones), so a binary search over [lo, hi] with
    ceiling midpoints needs at most ceil(log2 k) queries: a hit moves lo to
    the midpoint, a miss moves hi just below it.
    """
    lo, hi = 1, len(path_nodes)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if oracle.query(path_nodes[mid - 1], node):
            lo = mid
        else:
            hi = mid - 1
    return lo


def assign_bag_index(
    left_index: int, right_index: int, lca_index: int, left_len: int
) -> int:
    """Merge the two per-side search results into one path position.

    The left search ran over the path positions lca..1 (reversed), the right
    one over lca..P. Position s of the left search is path position
    lca_index + 1 - s; the right side only decides when the left search
    landed on the shared LCA endpoint, and its position s maps to
    left_len + s - 1.
    """
    if left_index == 1:
        return left_len + right_index - 1
    return lca_index + 1 - left_index


def find_even_separator(
    bag_sizes: Sequence[int],
    path: SkeletonPath,
    n: int,
    degree_bound: int,
) -> SeparatorEdge | None:
    """First path edge whose cut leaves both sides big enough, if any.

    A side counts as big enough at ceil((n-1)/d) nodes. For integer sizes
    this matches the ideal n/d fraction except when n is 1 mod d, where the
    ideal is unreachable (stars and spiders with a full-degree hub have no
    better split than (n-1)/d) and one fewer node must be accepted. An edge
    meeting this threshold always exists: the heaviest component around a
    centroid has at least ceil((n-1)/d) nodes and at most floor(n/2).

    Edges left of the LCA point back toward the sequence head, so the cut
    between positions r and r+1 is oriented (x_{r+1}, x_r) there and
    (x_r, x_{r+1}) from the LCA on.
    """
    if degree_bound < 2:
        return None
    low = -(-(n - 1) // degree_bound)
    high = n - low
    seq, lca = path.sequence, path.lca_index
    left = 0
    for r in range(1, len(seq)):
        left += bag_sizes[r - 1]
        if low <= left <= high:
            a, b = seq[r - 1], seq[r]
            if r < lca:
                return SeparatorEdge(parent=b, child=a)
            return SeparatorEdge(parent=a, child=b)
    return None


def split_tree(oracle, nodes: Sequence[int], separator: SeparatorEdge):
    """Partition ``nodes`` across a true edge: descendants of the child
    (child included) versus everything else."""
    child = separator.child
    keep, below = [], [child]
    for k in nodes:
        if k == child:
            continue
        if oracle.query(child, k):
            below.append(k)
        else:
            keep.append(k)
    return keep, below


def reconstruct_skeleton_path(oracle, nodes: Sequence[int], i: int, j: int) -> SkeletonPath:
    """Rebuild the skeleton path between i and j through queries only.

    Matches the ground-truth path oriented i -> j. When one endpoint reaches
    the other, membership on the directed path is the conjunction
    Q(head, k) and Q(k, tail); otherwise both slopes hang off the LCA.
    """
    if oracle.query(i, j):
        interior = [
            k for k in nodes if k != i and k != j and oracle.query(i, k) and oracle.query(k, j)
        ]
        return SkeletonPath(tuple([i, *sort_by_ancestry(oracle, interior), j]), 1)

    if oracle.query(j, i):
        interior = [
            k for k in nodes if k != i and k != j and oracle.query(j, k) and oracle.query(k, i)
        ]
        seq = [j, *sort_by_ancestry(oracle, interior), i]
        seq.reverse()  # keep the promised i -> j orientation; the LCA is j
        return SkeletonPath(tuple(seq), len(seq))

    m = find_lca(oracle, nodes, i, j)
    left = [
        k for k in nodes if k != m and k != i and oracle.query(m, k) and oracle.query(k, i)
    ]
    right = [
        k for k in nodes if k != m and k != j and oracle.query(m, k) and oracle.query(k, j)
    ]
    left_sorted = sort_by_ancestry(oracle, left)
    right_sorted = sort_by_ancestry(oracle, right)
    seq = [i, *reversed(left_sorted), m, *right_sorted, j]
    return SkeletonPath(tuple(seq), 2 + len(left_sorted))


def reconstruct_tree(
    oracle,
    nodes: Iterable[int],
    degree_bound: int,
    rng: random.Random,
    separator_hook: SeparatorHook | None = None,
) -> tuple[Edges, ReconstructionStats]:
    """Recover every edge of the hidden tree spanning ``nodes``.

    ``degree_bound`` must be valid for the hidden tree. The run is
    deterministic given the rng state and the oracle's answers.
    ``separator_hook`` (if given) sees every accepted cut together with the
    node set it was accepted in, which is how the tests audit balance.
    """
    stats = ReconstructionStats()
    edges: Edges = set()

    def solve(part: list[int], depth: int) -> None:
        if depth > stats.recursion_depth_max:
            stats.recursion_depth_max = depth
        size = len(part)
        if size <= 1:
            return
        if size == 2 and degree_bound == 1:
            # The balance interval is empty at d=1; one query settles the edge.
            stats.rounds_total += 1
            a, b = part
            sep = SeparatorEdge(a, b) if oracle.query(a, b) else SeparatorEdge(b, a)
            if separator_hook is not None:
                separator_hook(sep, tuple(part))
            edges.add(tuple(sep))
            return

        while True:
            stats.rounds_total += 1
            i, j = rng.sample(part, 2)
            path = reconstruct_skeleton_path(oracle, part, i, j)
            seq, lca = path.sequence, path.lca_index
            path_left = seq[:lca][::-1]  # LCA first, descending toward the head
            path_right = seq[lca - 1 :]  # LCA first, descending toward the tail
            on_path = set(seq)
            bag_sizes = [1] * len(seq)
            for k in part:
                if k in on_path:
                    continue
                at_left = find_bag(oracle, path_left, k)
                at_right = find_bag(oracle, path_right, k)
                spot = assign_bag_index(at_left, at_right, lca, len(path_left))
                bag_sizes[spot - 1] += 1
            sep = find_even_separator(bag_sizes, path, size, degree_bound)
            if sep is not None:
                break

        if separator_hook is not None:
            separator_hook(sep, tuple(part))
        keep, below = split_tree(oracle, part, sep)
        if not keep:
            # The separator's parent claims to sit below its own child; both
            # answers cannot be true, and recursing on the whole part again
            # would never terminate.
            raise InconsistentOracleError(
                f"edge {tuple(sep)} swallowed its entire part of {size} nodes"
            )
        edges.add(tuple(sep))
        solve(keep, depth + 1)
        solve(below, depth + 1)

    solve(sorted(nodes), 1)
    return edges, stats


def reconstruct_noisy(
    oracle,
    nodes: Iterable[int],
    degree_bound: int,
    noise: float,
    failure_prob: float,
    rng: random.Random,
    votes: int | None = None,
) -> tuple[Edges, ReconstructionStats]:
    """Reconstruction over a noisy oracle, majority-voting every query.

    ``oracle`` must expose ``noisy_query``. With the default vote count the
    returned edge set equals the hidden tree with probability at least
    1 - failure_prob; a failed run returns some wrong edge set (or raises
    InconsistentOracleError when the votes contradict every tree).
    """
    node_list = sorted(nodes)
    if votes is None:
        votes = majority_vote_count(noise, failure_prob, len(node_list), degree_bound)
    voter = MajorityOracle(oracle, votes)
    return reconstruct_tree(voter, node_list, degree_bound, rng)


def reconstruct_weighted(
    oracle,
    nodes: Iterable[int],
    degree_bound: int,
    rng: random.Random,
) -> tuple[Edges, dict[tuple[int, int], float], ReconstructionStats]:
    """Recover edges and exact weights from an additive oracle.

    ``oracle`` must expose ``additive_query``. Reachability bits are derived
    as (sum > 0), which is sound because weights are strictly positive; the
    weights themselves come from one extra additive call per recovered edge,
    stored verbatim.
    """
    binary = _ThresholdedAdditive(oracle)
    edges, stats = reconstruct_tree(binary, nodes, degree_bound, rng)
    weights = {
        (p, c): oracle.additive_query(p, c) for (p, c) in sorted(edges)
    }
    return edges, weights, stats


class _ThresholdedAdditive:
    """Adapter turning additive sums into path-existence bits."""

    def __init__(self, inner):
        self.inner = inner

    def query(self, i: int, j: int) -> int:
        return 1 if self.inner.additive_query(i, j) > 0 else 0
