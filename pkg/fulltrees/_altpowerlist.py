"""
Alternating power lists and the balancing loop over them.

An alternating power list is Zero or TwicePlusOne(odd, tail) where tail is a
power list of (even, odd) pairs: flattened, odd positions (1-based) hold one
kind of value and even positions another. Here odd slots hold FullTreeWitness
values sharing one height index and even slots hold labels, so the loop never
has to check the alternation and every join checks heights in constant time.
"""

from ._counters import alloc, tick
from ._exceptions import EmptyAPL, HeightMismatch, InvariantViolation
from ._funcs import identity, product
from ._powerlist import pl_map, pl_of_list
from ._tree import FullTreeWitness

_LEAF0 = FullTreeWitness.leaf(0)
_LEAF1 = FullTreeWitness.leaf(1)


class AlternatingPowerList(object):
    """
    A cell of an alternating power list.

    Use APL_ZERO and apl_twice_plus_one() to build them.

    - head: value of the first (odd) slot
    - tail: power list of (even, odd) pairs
    """

    __slots__ = ("head", "tail", "depth")

    def __init__(self, head, tail, depth):
        self.head = head
        self.tail = tail
        self.depth = depth

    @property
    def is_zero(self):
        return self.depth == 0

    def flatten(self):
        return apl_flatten(self)

    def __len__(self):
        return 2**self.depth - 1

    def __eq__(self, other):
        return (
            isinstance(other, self.__class__)
            and self.depth == other.depth
            and (
                self.is_zero
                or (self.head == other.head and self.tail == other.tail)
            )
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        if self.is_zero:
            return "AlternatingPowerList(Zero)"
        return "AlternatingPowerList(%r, %r)" % (self.head, self.tail)

    def __hash__(self):
        return hash((self.depth, self.head, self.tail))


APL_ZERO = AlternatingPowerList(None, None, 0)


def apl_twice_plus_one(head, tail):
    alloc()
    return AlternatingPowerList(head, tail, tail.depth + 1)


def apl_flatten(apl):
    """Return the slots in order: odd, even, odd, ..."""
    if apl.is_zero:
        return []
    out = [apl.head]
    for even, odd in apl.tail.flatten():
        out.append(even)
        out.append(odd)
    return out


def apl_map(odd_fn, even_fn, apl):
    """Map odd slots with odd_fn and even slots with even_fn."""
    if apl.is_zero:
        return APL_ZERO
    return apl_twice_plus_one(
        odd_fn(apl.head), pl_map(product(even_fn, odd_fn), apl.tail)
    )


def singleton(label):
    """Return the one-label tree at height index 1."""
    return FullTreeWitness.node(_LEAF0, label, _LEAF0)


def apl_of_list(leaf, up, ident, labels):
    """
    Turn labels into an alternating power list, padding with leaf.

    The first label goes to the head through up; the rest become a power list
    of (even, odd) pairs where padding puts leaf in an odd slot and coercion
    lifts a label into one through up.

    - leaf: odd slot value used for padding
    - up: function label -> odd slot value
    - ident: function label -> even slot value
    - labels: sequence of labels
    """
    labels = list(labels)
    tick()
    if not labels:
        return APL_ZERO

    def pad(x):
        return ident(x), leaf

    def coerce(pair):
        return ident(pair[0]), up(pair[1])

    return apl_twice_plus_one(up(labels[0]), pl_of_list(pad, coerce, labels[1:]))


def pass_typed(tree, pair, rest):
    """
    Join trees of height index p into trees of height index p + 1.

    The alternating power list TwicePlusOne(tree, TwicePlusOne(pair, rest))
    loses one level: its first three slots make the new head and every
    ((single, left), (root, right)) element of rest becomes
    (single, Node(left, root, right)).

    - tree: FullTreeWitness at index p
    - pair: (label, FullTreeWitness at index p)
    - rest: power list of ((label, witness), (label, witness))
    """
    p = tree.k
    root, right = pair
    head = FullTreeWitness.node(tree, root, right)

    def join_up(pairs):
        (single, left), (label, right) = pairs
        if left.k != p:
            raise HeightMismatch(p, left.k)
        return single, FullTreeWitness.node(left, label, right)

    tick()
    return apl_twice_plus_one(head, pl_map(join_up, rest))


def loop_typed(apl):
    """
    Reduce a non-empty alternating power list of trees to one full tree.

    A list of depth k with trees at index p gives a tree at index k - 1 + p.
    """
    if apl.is_zero:
        raise EmptyAPL()
    k = apl.depth
    p = apl.head.k
    while not apl.tail.is_zero:
        tick()
        apl = pass_typed(apl.head, apl.tail.head, apl.tail.tail)
    if apl.head.k != k - 1 + p:
        raise InvariantViolation(
            "depth %s at index %s gave index %s" % (k, p, apl.head.k)
        )
    return apl.head


def balance_typed(labels):
    """Return a FullTreeWitness whose infix traversal is labels."""
    apl = apl_of_list(_LEAF1, singleton, identity, labels)
    if apl.is_zero:
        return _LEAF0
    return loop_typed(apl)
