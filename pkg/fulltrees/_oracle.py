"""
Independent checks for the balancers.

Nothing here reuses the traversal, height or fullness code of the library:
fullness is checked level by level, shapes are enumerated by brute force, and
inputs that break a balancer are shrunk to a small counterexample.
"""

import logging
from concurrent.futures import ThreadPoolExecutor

from ._balance import BALANCERS
from ._conf import ENUMERATION_LIMIT
from ._exceptions import FullTreesError, SizeLimit
from ._tree import LEAF, Node, is_full
from ._types import CheckFailure, CheckReport

logger = logging.getLogger(__name__)


def _level_counts(t):
    """Number of nodes on every level, top down."""
    counts = []
    level = [t]
    while True:
        nodes = [tree for tree in level if isinstance(tree, Node)]
        if not nodes:
            return counts
        counts.append(len(nodes))
        level = [child for node in nodes for child in (node.left, node.right)]


def _infix(t):
    if not isinstance(t, Node):
        return []
    return _infix(t.left) + [t.label] + _infix(t.right)


def _expected_index(n):
    k = 0
    while 2**k <= n:
        k += 1
    return k


def bfs_is_full(t):
    """
    Return True if every level of t except the last one is completely filled.

    Level d of a filled tree holds 2^d nodes.
    """
    counts = _level_counts(t)
    return all(count == 2**level for level, count in enumerate(counts[:-1]))


def enumerate_shapes(n):
    """
    Return every tree with n nodes.

    Nodes are labelled with their infix position 1..n, so distinct shapes are
    distinct trees.
    """
    if n > ENUMERATION_LIMIT:
        raise SizeLimit(n, ENUMERATION_LIMIT)
    memo = {}

    def shapes(lo, hi):
        if (lo, hi) not in memo:
            if lo == hi:
                memo[lo, hi] = [LEAF]
            else:
                memo[lo, hi] = [
                    Node(left, root, right)
                    for root in range(lo, hi)
                    for left in shapes(lo, root)
                    for right in shapes(root + 1, hi)
                ]
        return memo[lo, hi]

    return shapes(1, n + 1)


def enumerate_full_trees(n):
    """Return every full tree with n nodes, found by filtering all shapes."""
    return [t for t in enumerate_shapes(n) if bfs_is_full(t)]


def _tree_of(result):
    # typed tiers return witnesses, the naive tier a bare tree
    return getattr(result, "tree", result)


def _violations(algo, labels):
    """Return (property, detail) pairs broken by one balancer on labels."""
    try:
        result = BALANCERS[algo](labels)
    except FullTreesError as e:
        return [("total", "%s: %s" % (type(e).__name__, e))], None
    tree = _tree_of(result)
    found = []
    if _infix(tree) != labels:
        found.append(("order", "infix traversal differs from input"))
    full = bfs_is_full(tree)
    if not full:
        found.append(("full", "level counts %s" % _level_counts(tree)))
    index = is_full(tree)
    if (index is not None) != full:
        found.append(
            ("agreement", "is_full gave %s, bfs check %s" % (index, full))
        )
    expected = _expected_index(len(labels))
    height = len(_level_counts(tree))
    if height != expected:
        found.append(("height", "height %s, expected %s" % (height, expected)))
    if getattr(result, "k", expected) != expected:
        found.append(
            ("height", "witness index %s, expected %s" % (result.k, expected))
        )
    return found, tree


def _breaks(algo, prop):
    def fails(candidate):
        found, _ = _violations(algo, candidate)
        return any(p == prop for p, _ in found)

    return fails


def _minimize(labels, fails):
    """Drop chunks of labels while fails(candidate) holds."""
    current = list(labels)
    chunk = max(len(current) // 2, 1)
    while current:
        i = 0
        shrunk = False
        while i < len(current):
            candidate = current[:i] + current[i + chunk :]
            if fails(candidate):
                current = candidate
                shrunk = True
            else:
                i += chunk
        if not shrunk:
            if chunk == 1:
                break
            chunk //= 2
    return current


def cross_check(labels):
    """
    Run every balancer on labels and check order, fullness and height.

    Returns a CheckReport; failures carry a shrunk counterexample.
    """
    labels = list(labels)
    failures = []
    trees = {}
    for algo in BALANCERS:
        found, tree = _violations(algo, labels)
        if tree is not None:
            trees[algo] = tree
        for prop, detail in found:
            logger.debug(
                "%s broke %s on %s labels: %s", algo, prop, len(labels), detail
            )
            counterexample = _minimize(labels, _breaks(algo, prop))
            failures.append(CheckFailure(algo, prop, detail, counterexample))
    return CheckReport(labels, failures, trees)


def cross_check_many(label_lists, workers=None):
    """
    Cross check many inputs on a thread pool.

    Reports come back in input order.
    """
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(cross_check, label_lists))
