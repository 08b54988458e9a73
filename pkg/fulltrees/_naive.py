"""
Balancing through dynamically checked alternating lists.

An alternating list has length 2^k - 1, trees at odd positions and labels at
even positions (1-based). Nothing enforces this shape; every function checks it
and raises instead of failing silently.
"""

from ._conf import POW2_CEILING
from ._counters import alloc, tick
from ._exceptions import BadLength, InvariantViolation, MalformedAlternation, Overflow
from ._funcs import is_power_of_two_minus_one, validate_index
from ._tree import LEAF, Node
from ._types import Elt, TreeItem


def join(left, node, right):
    """Return TreeItem(Node(left, node, right))."""
    tick(allocs=1)
    return TreeItem(Node(left, node, right))


def _expect(items, position, kind):
    if position >= len(items):
        raise MalformedAlternation(
            position + 1, "expected %s, list ended" % kind.__name__
        )
    if not isinstance(items[position], kind):
        raise MalformedAlternation(
            position + 1,
            "expected %s, found %r" % (kind.__name__, items[position]),
        )
    return items[position]


def pass_naive(items):
    """
    Pair up the trees of an alternating list.

    Consumes [tree, label, tree, label] groups, joining the first three, and
    ends on a final [tree, label, tree]. A list of length 2^k - 1 >= 3 becomes
    one of length 2^(k-1) - 1.

    - items: sequence of TreeItem and Elt
    """
    items = list(items)
    out = []
    i = 0
    while True:
        tick()
        left = _expect(items, i, TreeItem)
        root = _expect(items, i + 1, Elt)
        right = _expect(items, i + 2, TreeItem)
        out.append(join(left.tree, root.label, right.tree))
        if i + 3 == len(items):
            return out
        out.append(_expect(items, i + 3, Elt))
        i += 4


def loop_naive(items):
    """Apply pass_naive until a single tree remains."""
    items = list(items)
    while True:
        tick()
        if not items:
            return LEAF
        if not is_power_of_two_minus_one(len(items)):
            raise BadLength(len(items), "alternating lists have length 2^k - 1")
        if len(items) == 1:
            if isinstance(items[0], TreeItem):
                return items[0].tree
            raise BadLength(1, "a lone label cannot become a tree")
        items = pass_naive(items)


def pad(missing, labels):
    """
    Interleave labels with trees of height 0 or 1.

    The first `missing` labels are each preceded by a leaf, the remaining ones
    are paired into a one-label tree followed by a label, and a trailing label
    becomes a one-label tree.

    - missing: number of leaves to insert
    - labels: sequence of labels
    """
    validate_index(missing)
    labels = list(labels)
    out = []
    i = 0
    while missing != 0 and i < len(labels):
        tick(allocs=2)
        out.append(TreeItem(LEAF))
        out.append(Elt(labels[i]))
        missing -= 1
        i += 1
    while len(labels) - i >= 2:
        tick()
        alloc()
        out.append(join(LEAF, labels[i], LEAF))
        out.append(Elt(labels[i + 1]))
        i += 2
    if i < len(labels):
        tick()
        out.append(join(LEAF, labels[i], LEAF))
    return out


def complete(labels):
    """
    Turn labels into an alternating list of length 2^k - 1.

    k is 1 + floor(log2 n) for n labels and 0 for none; the missing slots are
    filled with leaves by pad.
    """
    labels = list(labels)
    n = len(labels)
    if n >= POW2_CEILING:
        raise Overflow(n, POW2_CEILING)
    i = 1
    while i <= n:
        tick()
        i *= 2
    missing = i - n - 1
    if n and missing > n - 1:
        raise InvariantViolation(
            "%s leaves needed for %s labels, at most %s fit" % (missing, n, n - 1)
        )
    return pad(missing, labels)


def balance_naive(labels):
    """Return a full tree whose infix traversal is labels."""
    return loop_naive(complete(labels))
