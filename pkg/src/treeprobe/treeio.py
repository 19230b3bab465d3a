"""Plain-text serialization for trees.

Format::

    n
    <node> <parent> [weight]
    ...                         (one line per node, n lines total)

The root's parent is -1 and its line never carries a weight. Weighted trees
put the weight of the edge (parent -> node) in the third column of every
non-root line; weights are written with ``repr`` so reading them back gives
the identical float. Node order in the file is not significant.
"""

from __future__ import annotations

import os
from .errors import InvalidTreeError, TreeFormatError
from .trees import (
    ROOT,
    DirectedRootedTree,
    WeightedDirectedRootedTree,
    max_node_degree,
    validate_tree,
)

AnyTree = DirectedRootedTree | WeightedDirectedRootedTree


def format_tree(tree: AnyTree) -> str:
    """Render a tree (weighted or not) in the text format."""
    weights = None
    if isinstance(tree, WeightedDirectedRootedTree):
        weights = tree.weights
        tree = tree.tree
    lines = [str(tree.n)]
    for v, p in enumerate(tree.parent):
        if weights is not None and p != ROOT:
            lines.append(f"{v} {p} {weights[(p, v)]!r}")
        else:
            lines.append(f"{v} {p}")
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> AnyTree:
    """Parse the text format; returns a weighted tree iff weights appear.

    The degree bound of the returned tree is the smallest valid one (the
    maximum node degree), since the format does not carry a bound.
    """
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise TreeFormatError("empty input")
    if len(rows[0]) != 1:
        raise TreeFormatError(f"first line must be the node count, got {rows[0]}")
    n = _int(rows[0][0], "node count")
    if n < 1:
        raise TreeFormatError(f"node count must be >= 1, got {n}")
    if len(rows) - 1 != n:
        raise TreeFormatError(f"expected {n} node lines, got {len(rows) - 1}")

    parent = [None] * n
    weights: dict[tuple[int, int], float] = {}
    weighted_lines = 0
    for row in rows[1:]:
        if len(row) not in (2, 3):
            raise TreeFormatError(f"bad node line: {' '.join(row)!r}")
        v = _int(row[0], "node id")
        p = _int(row[1], "parent id")
        if not 0 <= v < n:
            raise TreeFormatError(f"node id {v} out of range")
        if parent[v] is not None:
            raise TreeFormatError(f"node {v} listed twice")
        parent[v] = p
        if len(row) == 3:
            if p == ROOT:
                raise TreeFormatError("the root line cannot carry a weight")
            try:
                w = float(row[2])
            except ValueError:
                raise TreeFormatError(f"bad weight {row[2]!r}") from None
            weights[(p, v)] = w
            weighted_lines += 1

    try:
        tree = validate_tree(parent, max_node_degree(parent))  # type: ignore[arg-type]
    except InvalidTreeError as exc:
        raise TreeFormatError(f"not a valid tree: {exc}") from None

    if weighted_lines == 0:
        return tree
    if weighted_lines != n - 1:
        raise TreeFormatError("either all non-root lines carry weights or none do")
    try:
        return WeightedDirectedRootedTree(tree, weights)
    except InvalidTreeError as exc:
        raise TreeFormatError(str(exc)) from None


def save_tree(tree: AnyTree, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as fp:
        fp.write(format_tree(tree))


def load_tree(path: str | os.PathLike) -> AnyTree:
    with open(path, "r", encoding="ascii") as fp:
        return parse_tree(fp.read())


def _int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise TreeFormatError(f"bad {what}: {token!r}") from None
