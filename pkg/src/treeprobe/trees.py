"""Directed rooted trees: validation, ancestry, skeleton paths, bags.

Everything in this module works from ground truth (the full parent array).
The query-driven counterparts live in :mod:`treeprobe.reconstruct` and are
only allowed to look at the tree through an oracle.

Node ids are dense integers ``0 .. n-1``. ``parent[v]`` is the parent of
``v`` and the single root carries the sentinel ``ROOT`` (-1). Trees are
immutable once validated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    CycleError,
    DegreeBoundError,
    InvalidTreeError,
    MultipleRootsError,
    SelfQueryError,
)

ROOT = -1


@dataclass(frozen=True)
class DirectedRootedTree:
    """Immutable tree in parent-array form.

    Attributes:
        parent: ``parent[v]`` is the parent of ``v``; ``ROOT`` marks the root.
        children: per-node child tuples derived from ``parent``.
        root: id of the unique root.
        degree_bound: declared bound; every node satisfies
            ``len(children[v]) + (0 if v is the root else 1) <= degree_bound``.
    """

    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    root: int
    degree_bound: int

    @property
    def n(self) -> int:
        return len(self.parent)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield the n-1 directed edges as (parent, child), child-ascending."""
        for child, par in enumerate(self.parent):
            if par != ROOT:
                yield (par, child)


@dataclass(frozen=True)
class WeightedDirectedRootedTree:
    """A validated tree plus a positive weight on every edge."""

    tree: DirectedRootedTree
    weights: Mapping[tuple[int, int], float]

    def __post_init__(self) -> None:
        expected = set(self.tree.edges())
        if set(self.weights) != expected:
            raise InvalidTreeError(
                "weights must be keyed by exactly the tree's (parent, child) edges"
            )
        for edge, w in self.weights.items():
            if not w > 0:
                raise InvalidTreeError(f"weight for edge {edge} must be > 0, got {w!r}")

    @property
    def n(self) -> int:
        return self.tree.n


@dataclass(frozen=True)
class SkeletonPath:
    """The unique path between two nodes in the undirected skeleton.

    ``sequence`` lists the nodes in order from the first endpoint to the
    second. ``lca_index`` is the 1-based position of the lowest common
    ancestor inside ``sequence``; it is 1 exactly when the whole sequence is
    a single directed path starting at the head.
    """

    sequence: tuple[int, ...]
    lca_index: int

    def __post_init__(self) -> None:
        if not 1 <= self.lca_index <= len(self.sequence):
            raise ValueError(
                f"lca_index {self.lca_index} out of range for a "
                f"{len(self.sequence)}-node sequence"
            )


def validate_tree(parent: Sequence[int], degree_bound: int) -> DirectedRootedTree:
    """Check a parent array and return the immutable tree.

    Raises MultipleRootsError, CycleError or DegreeBoundError when the array
    is not a directed rooted tree within the bound.
    """
    parent = tuple(parent)
    n = len(parent)
    if n == 0:
        raise InvalidTreeError("a tree needs at least one node")
    if degree_bound < 1:
        raise DegreeBoundError(f"degree bound must be >= 1, got {degree_bound}")

    roots = [v for v, p in enumerate(parent) if p == ROOT]
    if len(roots) > 1:
        raise MultipleRootsError(f"nodes {roots} all claim to be the root")
    if not roots:
        raise CycleError("no root: every parent chain must then loop")
    root = roots[0]

    kids: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(parent):
        if p == ROOT:
            continue
        if not 0 <= p < n:
            raise InvalidTreeError(f"parent of node {v} is out of range: {p}")
        if p == v:
            raise CycleError(f"node {v} is its own parent")
        kids[p].append(v)

    # Reachability from the root doubles as the cycle check: with exactly one
    # root and n-1 parent pointers, any unreachable node sits on a cycle.
    seen = 1
    stack = [root]
    reached = bytearray(n)
    reached[root] = 1
    while stack:
        u = stack.pop()
        for c in kids[u]:
            reached[c] = 1
            seen += 1
            stack.append(c)
    if seen != n:
        bad = [v for v in range(n) if not reached[v]]
        raise CycleError(f"nodes {bad} are not reachable from the root")

    for v in range(n):
        deg = len(kids[v]) + (0 if v == root else 1)
        if deg > degree_bound:
            raise DegreeBoundError(
                f"node {v} has degree {deg}, above the bound {degree_bound}"
            )

    return DirectedRootedTree(
        parent=parent,
        children=tuple(tuple(c) for c in kids),
        root=root,
        degree_bound=degree_bound,
    )


def is_ancestor(tree: DirectedRootedTree, i: int, j: int) -> bool:
    """True iff a directed path i -> j exists (i is a proper ancestor of j)."""
    _check_pair(tree.n, i, j)
    parent = tree.parent
    k = parent[j]
    while k != ROOT:
        if k == i:
            return True
        k = parent[k]
    return False


def root_chain(tree: DirectedRootedTree, v: int) -> list[int]:
    """All proper ancestors of v, ordered root first."""
    parent = tree.parent
    chain = []
    k = parent[v]
    while k != ROOT:
        chain.append(k)
        k = parent[k]
    chain.reverse()
    return chain


def skeleton_path(tree: DirectedRootedTree, i: int, j: int) -> SkeletonPath:
    """Ground-truth path between i and j, oriented from i to j.

    The result climbs from i to the lowest common ancestor and descends to
    j; when one endpoint is an ancestor of the other this degenerates to a
    single directed path.
    """
    _check_pair(tree.n, i, j)
    parent = tree.parent

    up_i = [i]
    k = parent[i]
    while k != ROOT:
        up_i.append(k)
        k = parent[k]
    pos = {v: t for t, v in enumerate(up_i)}

    down_j = []  # j's strict climb until it meets i's chain
    k = j
    while k not in pos:
        down_j.append(k)
        k = parent[k]
    lca_at = pos[k]

    sequence = up_i[: lca_at + 1] + down_j[::-1]
    return SkeletonPath(tuple(sequence), lca_at + 1)


def bag_indices(tree: DirectedRootedTree, path: SkeletonPath) -> dict[int, int]:
    """Map every node to the 1-based path position it hangs from.

    Remove the path's edges from the skeleton; each remaining component
    contains exactly one path node, and all nodes of the component share its
    index. Path nodes map to their own position.
    """
    seq = path.sequence
    index_of = {v: t + 1 for t, v in enumerate(seq)}
    cut = set()
    for a, b in zip(seq, seq[1:]):
        cut.add((a, b))
        cut.add((b, a))

    neighbours: list[list[int]] = [[] for _ in range(tree.n)]
    for p, c in tree.edges():
        if (p, c) not in cut:
            neighbours[p].append(c)
            neighbours[c].append(p)

    out: dict[int, int] = {}
    for start in seq:
        label = index_of[start]
        stack = [start]
        out[start] = label
        while stack:
            u = stack.pop()
            for w in neighbours[u]:
                if w not in out:
                    out[w] = label
                    stack.append(w)
    if len(out) != tree.n:
        raise ValueError("path does not belong to this tree")
    return out


def subtree_size(tree: DirectedRootedTree, v: int) -> int:
    """Number of nodes in the subtree rooted at v (v included)."""
    total = 0
    stack = [v]
    while stack:
        u = stack.pop()
        total += 1
        stack.extend(tree.children[u])
    return total


def tree_equals(a: DirectedRootedTree, b: DirectedRootedTree) -> bool:
    """Same node count and identical parent arrays (bounds are ignored)."""
    return a.parent == b.parent


def max_node_degree(parent: Sequence[int]) -> int:
    """Largest skeleton degree over the array's nodes (>= 1 for n >= 1)."""
    n = len(parent)
    deg = [0] * n
    for v, p in enumerate(parent):
        if p != ROOT:
            deg[v] += 1
            deg[p] += 1
    return max(deg, default=0) or 1


def from_edges(
    n: int, edges: Iterable[tuple[int, int]], degree_bound: int | None = None
) -> DirectedRootedTree:
    """Build a validated tree from (parent, child) pairs.

    Raises InvalidTreeError when the pairs are not a tree on 0..n-1 (useful
    for vetting edge sets recovered from unreliable oracles).
    """
    parent = [ROOT] * n
    count = 0
    for p, c in edges:
        if not 0 <= c < n:
            raise InvalidTreeError(f"child {c} out of range")
        if parent[c] != ROOT:
            raise InvalidTreeError(f"node {c} has two parents")
        parent[c] = p
        count += 1
    if count != n - 1:
        raise InvalidTreeError(f"expected {n - 1} edges, got {count}")
    if degree_bound is None:
        degree_bound = max_node_degree(parent)
    return validate_tree(parent, degree_bound)


def _check_pair(n: int, i: int, j: int) -> None:
    if i == j:
        raise SelfQueryError(f"i and j must differ, both are {i}")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"node pair ({i}, {j}) out of range for n={n}")
