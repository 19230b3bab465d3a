"""Reference implementations used to cross-check the fast path.

Nothing here is clever on purpose: the brute-force reconstructor spends the
full n(n-1) queries, the enumerator walks every parent array, and the
separator check recomputes component sizes from ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EnumerationCapError, InvalidTreeError, NotAnEdgeError
from .reconstruct import SeparatorEdge
from .trees import DirectedRootedTree, subtree_size, validate_tree

ENUMERATION_CAP = 7


@dataclass
class QueryMatrix:
    """All n(n-1) ordered-pair query bits for a node set."""

    nodes: tuple[int, ...]
    bits: dict[tuple[int, int], int]

    @classmethod
    def collect(cls, oracle, nodes: Sequence[int]) -> "QueryMatrix":
        nodes = tuple(sorted(nodes))
        bits = {}
        for i in nodes:
            for j in nodes:
                if i != j:
                    bits[(i, j)] = oracle.query(i, j)
        return cls(nodes, bits)

    def is_transitive(self) -> bool:
        """Q(i,j) and Q(j,k) must force Q(i,k); lying oracles fail this."""
        for i in self.nodes:
            for j in self.nodes:
                if i == j or not self.bits[(i, j)]:
                    continue
                for k in self.nodes:
                    if k != i and k != j and self.bits[(j, k)] and not self.bits[(i, k)]:
                        return False
        return True


def brute_force_reconstruct(oracle, nodes: Sequence[int]) -> set[tuple[int, int]]:
    """Recover the tree by querying every ordered pair.

    The root is the node with no ancestors; every other node's parent is its
    deepest ancestor, i.e. the ancestor that itself has the most ancestors.
    """
    matrix = QueryMatrix.collect(oracle, nodes)
    ancestors = {
        j: [i for i in matrix.nodes if i != j and matrix.bits[(i, j)]]
        for j in matrix.nodes
    }
    edges = set()
    for j in matrix.nodes:
        if ancestors[j]:
            parent = max(ancestors[j], key=lambda a: len(ancestors[a]))
            edges.add((parent, j))
    return edges


def enumerate_trees(n: int, degree_bound: int) -> Iterator[DirectedRootedTree]:
    """Yield every valid directed rooted tree on n nodes, once each.

    Runs through all parent arrays and keeps those that validate under the
    bound. Capped at n = 7 (about 3.3e5 candidate arrays); anything larger
    raises EnumerationCapError.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > ENUMERATION_CAP:
        raise EnumerationCapError(
            f"enumeration is capped at n = {ENUMERATION_CAP}, asked for {n}"
        )
    parent = [0] * n
    others = [[p for p in range(n) if p != v] for v in range(n)]

    def fill(v: int, root: int) -> Iterator[DirectedRootedTree]:
        if v == n:
            try:
                yield validate_tree(parent, degree_bound)
            except InvalidTreeError:
                pass
            return
        if v == root:
            yield from fill(v + 1, root)
            return
        for p in others[v]:
            parent[v] = p
            yield from fill(v + 1, root)

    for root in range(n):
        parent[root] = -1
        yield from fill(0, root)


def check_separator(tree: DirectedRootedTree, separator: SeparatorEdge | tuple[int, int]) -> bool:
    """True iff cutting this true edge leaves both sides big enough.

    Uses the same balance threshold as the reconstruction (both components
    need at least ceil((n-1)/d) nodes, d taken from the tree). Raises
    NotAnEdgeError when the pair is not an edge of the tree.
    """
    p, c = separator
    if not (0 <= c < tree.n) or tree.parent[c] != p:
        raise NotAnEdgeError(f"({p}, {c}) is not an edge of this tree")
    below = subtree_size(tree, c)
    rest = tree.n - below
    low = -(-(tree.n - 1) // tree.degree_bound)
    return below >= low and rest >= low
