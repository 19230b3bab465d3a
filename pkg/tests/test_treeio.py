"""Text serialization round trips and malformed-input rejection."""

from __future__ import annotations

import pytest

from treeprobe import (
    TreeFormatError,
    WeightedDirectedRootedTree,
    format_tree,
    load_tree,
    parse_tree,
    save_tree,
    tree_equals,
    validate_tree,
)


def test_plain_round_trip(bent_tree):
    text = format_tree(bent_tree)
    back = parse_tree(text)
    assert tree_equals(back, bent_tree)
    assert back.degree_bound == 3  # tightest bound; the format carries none


def test_weighted_round_trip_is_float_exact(spine_tree):
    weights = {edge: (at + 1) / 7 for at, edge in enumerate(sorted(spine_tree.edges()))}
    weighted = WeightedDirectedRootedTree(spine_tree, weights)
    back = parse_tree(format_tree(weighted))
    assert isinstance(back, WeightedDirectedRootedTree)
    assert tree_equals(back.tree, spine_tree)
    assert dict(back.weights) == weights  # repr() writing makes == exact


def test_node_line_order_does_not_matter():
    straight = parse_tree("3\n0 -1\n1 0\n2 1\n")
    shuffled = parse_tree("3\n2 1\n0 -1\n1 0\n")
    assert tree_equals(straight, shuffled)


def test_save_and_load(tmp_path, bent_tree):
    target = tmp_path / "tree.txt"
    save_tree(bent_tree, target)
    assert tree_equals(load_tree(target), bent_tree)


def test_load_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        load_tree(tmp_path / "absent.txt")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "   \n\n",
        "2 extra\n0 -1\n1 0\n",  # first line must be the bare count
        "x\n0 -1\n",
        "0\n",
        "-3\n",
        "3\n0 -1\n1 0\n",  # one node line short
        "2\n0 -1\n1 0\n2 1\n",  # one node line over
        "2\n0 -1\n1 0 0.5 junk\n",  # too many columns
        "2\n0 -1\n7 0\n",  # id out of range
        "2\n0 -1\n0 -1\n",  # node listed twice
        "2\nzero -1\n1 0\n",
        "2\n0 -1\n1 zero\n",
        "2\n0 -1 0.25\n1 0 0.25\n",  # root line must not carry a weight
        "3\n0 -1\n1 0 0.25\n2 1\n",  # weights must cover every edge or none
        "2\n0 -1\n1 0 heavy\n",
        "2\n0 -1\n1 0 0.0\n",  # weights must be positive
        "2\n0 -1\n1 0 -2.5\n",
        "2\n0 1\n1 0\n",  # not a tree: parent cycle
        "2\n0 -1\n1 -1\n",  # not a tree: two roots
    ],
)
def test_malformed_inputs_rejected(text):
    with pytest.raises(TreeFormatError):
        parse_tree(text)


def test_single_node_round_trip():
    tree = validate_tree([-1], 1)
    assert format_tree(tree) == "1\n0 -1\n"
    assert tree_equals(parse_tree("1\n0 -1\n"), tree)
