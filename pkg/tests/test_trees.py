"""Ground-truth tree core: validation, ancestry, skeleton paths, bags."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from treeprobe import (
    CycleError,
    DegreeBoundError,
    InvalidTreeError,
    MultipleRootsError,
    SelfQueryError,
    SkeletonPath,
    WeightedDirectedRootedTree,
    bag_indices,
    from_edges,
    is_ancestor,
    max_node_degree,
    root_chain,
    skeleton_path,
    subtree_size,
    tree_equals,
    validate_tree,
)

from conftest import BENT_PARENT, SPINE_PARENT, parent_array_trees


class TestValidateTree:
    def test_accepts_chain_and_derives_children(self):
        tree = validate_tree([-1, 0, 1], 2)
        assert tree.root == 0
        assert tree.children == ((1,), (2,), ())
        assert tree.n == 3
        assert list(tree.edges()) == [(0, 1), (1, 2)]

    def test_single_node(self):
        tree = validate_tree([-1], 1)
        assert tree.root == 0
        assert list(tree.edges()) == []

    def test_two_roots_rejected(self):
        with pytest.raises(MultipleRootsError):
            validate_tree([-1, -1, 0], 2)

    def test_no_root_rejected(self):
        with pytest.raises(CycleError):
            validate_tree([1, 0], 2)

    def test_self_parent_rejected(self):
        with pytest.raises(CycleError):
            validate_tree([-1, 1], 2)

    def test_cycle_off_the_root_rejected(self):
        # 1 and 2 point at each other while 0 is a lone root.
        with pytest.raises(CycleError):
            validate_tree([-1, 2, 1], 3)

    def test_parent_out_of_range_rejected(self):
        with pytest.raises(InvalidTreeError):
            validate_tree([-1, 5], 2)

    def test_degree_bound_enforced(self):
        with pytest.raises(DegreeBoundError):
            validate_tree([-1, 0, 0, 0], 2)  # star hub has degree 3

    def test_degree_counts_the_parent_edge(self):
        # Node 1 has two children plus its parent edge: degree 3.
        with pytest.raises(DegreeBoundError):
            validate_tree([-1, 0, 1, 1], 2)
        validate_tree([-1, 0, 1, 1], 3)

    def test_bound_below_one_rejected(self):
        with pytest.raises(DegreeBoundError):
            validate_tree([-1], 0)

    def test_empty_rejected(self):
        with pytest.raises(InvalidTreeError):
            validate_tree([], 1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_exhaustive_acceptance_count_is_cayley(self, n):
        # Over every possible parent array, exactly n^(n-1) validate.
        accepted = 0
        for candidate in itertools.product([-1, *range(n)], repeat=n):
            try:
                validate_tree(candidate, n)
            except InvalidTreeError:
                continue
            accepted += 1
        assert accepted == n ** (n - 1)


class TestAncestry:
    def test_is_ancestor_on_bent_tree(self, bent_tree):
        assert is_ancestor(bent_tree, 8, 0)
        assert is_ancestor(bent_tree, 2, 10)
        assert not is_ancestor(bent_tree, 0, 8)
        assert not is_ancestor(bent_tree, 1, 3)  # siblings' subtrees

    def test_is_ancestor_rejects_self(self, bent_tree):
        with pytest.raises(SelfQueryError):
            is_ancestor(bent_tree, 4, 4)

    def test_root_chain_is_root_first(self, bent_tree):
        assert root_chain(bent_tree, 5) == [8, 2, 1, 0]
        assert root_chain(bent_tree, 8) == []

    @given(parent_array_trees(max_n=8))
    def test_is_ancestor_matches_root_chain(self, tree):
        for i in range(tree.n):
            for j in range(tree.n):
                if i != j:
                    assert is_ancestor(tree, i, j) == (i in root_chain(tree, j))


class TestSkeletonPath:
    def test_straight_walk_from_the_spine_root(self, spine_tree):
        path = skeleton_path(spine_tree, 0, 4)
        assert path.sequence == (0, 1, 2, 3, 4)
        assert path.lca_index == 1

    def test_bent_walk_turns_at_the_spine_middle(self, bent_tree):
        path = skeleton_path(bent_tree, 0, 4)
        assert path.sequence == (0, 1, 2, 3, 4)
        assert path.lca_index == 3

    def test_walk_ending_at_an_ancestor(self, bent_tree):
        path = skeleton_path(bent_tree, 5, 9)
        assert path.sequence == (5, 0, 1, 2, 8, 9)
        assert path.lca_index == 5

    def test_adjacent_nodes(self, spine_tree):
        assert skeleton_path(spine_tree, 3, 2) == SkeletonPath((3, 2), 2)

    def test_rejects_self_path(self, spine_tree):
        with pytest.raises(SelfQueryError):
            skeleton_path(spine_tree, 3, 3)

    @given(parent_array_trees(min_n=2, max_n=10))
    def test_reverse_symmetry_and_lca_trichotomy(self, tree):
        for i in range(tree.n):
            for j in range(tree.n):
                if i == j:
                    continue
                forward = skeleton_path(tree, i, j)
                backward = skeleton_path(tree, j, i)
                assert backward.sequence == tuple(reversed(forward.sequence))
                assert backward.lca_index == len(forward.sequence) - forward.lca_index + 1
                if is_ancestor(tree, i, j):
                    assert forward.lca_index == 1
                elif is_ancestor(tree, j, i):
                    assert forward.lca_index == len(forward.sequence)
                else:
                    assert 1 < forward.lca_index < len(forward.sequence)

    @given(parent_array_trees(min_n=2, max_n=10))
    def test_consecutive_nodes_are_skeleton_edges(self, tree):
        for j in range(1, tree.n):
            seq = skeleton_path(tree, 0, j).sequence
            assert seq[0] == 0 and seq[-1] == j
            for a, b in zip(seq, seq[1:]):
                assert tree.parent[a] == b or tree.parent[b] == a


class TestBagIndices:
    def test_bent_tree_bags_along_the_spine(self, bent_tree):
        path = skeleton_path(bent_tree, 0, 4)
        bags = bag_indices(bent_tree, path)
        assert bags[8] == 3 and bags[9] == 3  # root side hangs off the LCA
        assert bags[5] == 1 and bags[6] == 1 and bags[7] == 2 and bags[10] == 5
        sizes = [0] * len(path.sequence)
        for spot in bags.values():
            sizes[spot - 1] += 1
        assert sizes == [3, 2, 3, 1, 2]

    def test_spine_tree_bags_along_the_spine(self, spine_tree):
        bags = bag_indices(spine_tree, skeleton_path(spine_tree, 0, 4))
        assert bags[9] == 3 and bags[10] == 5

    @given(parent_array_trees(min_n=2, max_n=10))
    def test_bags_partition_every_node(self, tree):
        path = skeleton_path(tree, 0, tree.n - 1)
        bags = bag_indices(tree, path)
        assert set(bags) == set(range(tree.n))
        assert all(1 <= spot <= len(path.sequence) for spot in bags.values())
        for at, node in enumerate(path.sequence, start=1):
            assert bags[node] == at


class TestHelpers:
    def test_subtree_size(self, bent_tree, spine_tree):
        assert subtree_size(bent_tree, 1) == 5
        assert subtree_size(spine_tree, 2) == 6
        assert subtree_size(spine_tree, spine_tree.root) == 11

    def test_tree_equals_ignores_the_bound(self):
        assert tree_equals(validate_tree([-1, 0], 1), validate_tree([-1, 0], 5))
        assert not tree_equals(validate_tree([-1, 0, 0], 2), validate_tree([-1, 0, 1], 2))

    def test_max_node_degree(self):
        assert max_node_degree([-1]) == 1
        assert max_node_degree([-1, 0, 1, 2]) == 2
        assert max_node_degree([-1, 0, 0, 0, 0]) == 4
        assert max_node_degree(BENT_PARENT) == 3

    def test_from_edges_round_trips_a_tree(self, spine_tree):
        rebuilt = from_edges(11, spine_tree.edges(), degree_bound=3)
        assert tree_equals(rebuilt, spine_tree)

    def test_from_edges_defaults_to_the_tight_bound(self):
        assert from_edges(4, [(0, 1), (0, 2), (0, 3)]).degree_bound == 3

    def test_from_edges_rejects_duplicate_children(self):
        with pytest.raises(InvalidTreeError):
            from_edges(3, [(0, 1), (2, 1)])

    def test_from_edges_rejects_wrong_edge_count(self):
        with pytest.raises(InvalidTreeError):
            from_edges(3, [(0, 1)])

    def test_from_edges_rejects_out_of_range(self):
        with pytest.raises(InvalidTreeError):
            from_edges(3, [(0, 1), (0, 7)])


class TestWeightedTree:
    def test_accepts_matching_weights(self, spine_tree):
        weights = {edge: 0.5 for edge in spine_tree.edges()}
        weighted = WeightedDirectedRootedTree(spine_tree, weights)
        assert weighted.n == 11

    def test_rejects_missing_or_extra_edges(self, spine_tree):
        weights = {edge: 0.5 for edge in spine_tree.edges()}
        weights.pop((0, 1))
        with pytest.raises(InvalidTreeError):
            WeightedDirectedRootedTree(spine_tree, weights)
        weights[(0, 1)] = 0.5
        weights[(4, 7)] = 0.5
        with pytest.raises(InvalidTreeError):
            WeightedDirectedRootedTree(spine_tree, weights)

    def test_rejects_nonpositive_weights(self, spine_tree):
        weights = {edge: 0.5 for edge in spine_tree.edges()}
        weights[(0, 1)] = 0.0
        with pytest.raises(InvalidTreeError):
            WeightedDirectedRootedTree(spine_tree, weights)


def test_skeleton_path_checks_lca_bounds():
    with pytest.raises(ValueError):
        SkeletonPath((0, 1), 3)
    with pytest.raises(ValueError):
        SkeletonPath((0, 1), 0)
