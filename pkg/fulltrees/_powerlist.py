"""
Power lists: lists of length exactly 2^k - 1.

A power list is either Zero or TwicePlusOne(head, tail) where tail is a power
list of pairs. Python needs no nested type for this: cell i simply holds a
perfectly nested pair tree with 2^i elements, and the depth k is stored on
every cell. For example the seven element list is

    [1; (2, 3); ((4, 5), (6, 7))]
"""

from ._counters import alloc, tick
from ._exceptions import BadLength
from ._funcs import (
    depth_for_length,
    is_power_of_two_minus_one,
    pack,
    pairwise,
    unpack,
)
from ._types import EMPTY, Even, Odd


class PowerList(object):
    """
    A cell of a power list.

    Use ZERO and twice_plus_one() to build power lists.

    - head: packed value holding 2^0 elements in the first cell, 2^1 in the next
    - tail: power list of pairs
    """

    __slots__ = ("head", "tail", "depth")

    def __init__(self, head, tail, depth):
        self.head = head
        self.tail = tail
        self.depth = depth

    @property
    def is_zero(self):
        return self.depth == 0

    def levels(self):
        """Yield the packed value of every cell, outermost first."""
        cell = self
        while cell.depth:
            yield cell.head
            cell = cell.tail

    def flatten(self):
        out = []
        for level, value in enumerate(self.levels()):
            out.extend(unpack(value, level))
        return out

    def expect_depth(self, k):
        """Return self if its depth is k, else raise BadLength."""
        if self.depth != k:
            raise BadLength(len(self), "expected a power list of depth %s" % k)
        return self

    def __len__(self):
        return 2**self.depth - 1

    def __iter__(self):
        return iter(self.flatten())

    def __eq__(self, other):
        return (
            isinstance(other, self.__class__)
            and self.depth == other.depth
            and list(self.levels()) == list(other.levels())
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "PowerList([%s])" % "; ".join(repr(v) for v in self.levels())

    def __hash__(self):
        return hash((self.depth, tuple(self.levels())))


ZERO = PowerList(None, None, 0)


def twice_plus_one(head, tail):
    """Prepend a packed head to a power list of pairs."""
    alloc()
    return PowerList(head, tail, tail.depth + 1)


def pl_flatten(pl):
    """Return the elements of a power list in order."""
    return pl.flatten()


def pl_from_list(items):
    """
    Build the power list whose flattening is items.

    - items: sequence of length 2^k - 1
    """
    items = list(items)
    if not is_power_of_two_minus_one(len(items)):
        raise BadLength(len(items), "power lists have length 2^k - 1")
    k = depth_for_length(len(items))
    packed = []
    start = 0
    for level in range(k):
        size = 2**level
        packed.append(pack(items[start : start + size], level))
        start += size
    pl = ZERO
    for value in reversed(packed):
        pl = twice_plus_one(value, pl)
    return pl


def pl_map(f, pl):
    """
    Apply f to every element.

    The tail holds pairs, so it is mapped with f lifted to pairs; this lifting
    doubles at every level.
    """
    tick()
    if pl.is_zero:
        return ZERO
    return twice_plus_one(f(pl.head), pl_map(pairwise(f), pl.tail))


def pair_up(items):
    """
    Return the parity view of items: EMPTY, Odd(head, pairs) or Even(pair, pairs).

    Computed as a right fold: the last element starts an Odd view, and every
    further element either closes a pair (Odd -> Even) or pushes the current
    pair onto the pairs (Even -> Odd).
    """
    held = None
    odd = None
    reversed_pairs = []
    for item in reversed(items):
        tick()
        if odd is None:
            odd, held = True, item
        elif odd:
            odd, held = False, (item, held)
        else:
            reversed_pairs.append(held)
            odd, held = True, item
    if odd is None:
        return EMPTY
    pairs = reversed_pairs[::-1]
    return Odd(held, pairs) if odd else Even(held, pairs)


def pl_of_list(pad, coerce, items):
    """
    Turn a list of any length into a power list, padding on the way.

    Every level turns a list of same-weight elements into one packed head plus
    half as many pairs: an odd count pads its first element, an even count
    coerces its first pair.

    - pad: function element -> packed value
    - coerce: function (element, element) -> packed value
    - items: sequence of elements
    """
    view = pair_up(items)
    tick()
    if view is EMPTY:
        return ZERO
    if isinstance(view, Odd):
        head = pad(view.head)
    else:
        head = coerce(view.pair)
    return twice_plus_one(
        head, pl_of_list(pairwise(pad), pairwise(coerce), view.pairs)
    )


def parity_flatten(view):
    """Rebuild the list a parity view was computed from."""
    if view is EMPTY:
        return []
    out = [view.head] if isinstance(view, Odd) else list(view.pair)
    for pair in view.pairs:
        out.extend(pair)
    return out
