"""Fixtures for test suite."""

import pytest

from fulltrees import LEAF, Node, enumerate_shapes
from fulltrees._tree import fold_tree


def _with_text_labels(tree):
    return fold_tree(
        tree, LEAF, lambda left, label, right: Node(left, str(label), right)
    )


@pytest.fixture(scope="session")
def small_trees():
    """Every tree with at most 9 nodes, labelled by infix position."""
    return [tree for n in range(10) for tree in enumerate_shapes(n)]


@pytest.fixture(scope="session")
def small_text_trees(small_trees):
    """small_trees with str labels, as the parsers return them."""
    return [_with_text_labels(tree) for tree in small_trees]


@pytest.fixture
def n1():
    return Node(LEAF, 1, LEAF)


@pytest.fixture
def n123():
    return Node(Node(LEAF, 1, LEAF), 2, Node(LEAF, 3, LEAF))


@pytest.fixture
def left_chain():
    """Not full: its right leaf sits two levels above the deepest leaves."""
    return Node(Node(Node(LEAF, 1, LEAF), 2, LEAF), 3, LEAF)
