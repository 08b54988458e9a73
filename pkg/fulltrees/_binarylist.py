"""
Binary lists in the 1-2 binary number system.

Every length has exactly one representation with digits 1 and 2, least
significant first: zero, tpo(a, tail) ("twice plus one") or tpt(a, b, tail)
("twice plus two"), where tail holds pairs. Consing is carry-light, so building
a list by repeated cons is linear, and every conversion below recurses on the
tail only, so its termination is structural.
"""

from ._altpowerlist import APL_ZERO, apl_twice_plus_one, loop_typed, singleton
from ._counters import alloc, tick
from ._funcs import identity, pairwise, product, unpack
from ._powerlist import ZERO, twice_plus_one
from ._tree import FullTreeWitness


class BinaryList(object):
    """
    A digit of a binary list.

    Use BL_ZERO, bl_tpo() and bl_tpt() to build binary lists.

    - digit: 1 or 2
    - first, second: packed values of this digit's weight (second only for 2)
    - tail: binary list of pairs
    """

    __slots__ = ("digit", "first", "second", "tail", "depth")

    def __init__(self, digit, first, second, tail, depth):
        self.digit = digit
        self.first = first
        self.second = second
        self.tail = tail
        self.depth = depth

    @property
    def is_zero(self):
        return self.depth == 0

    def cells(self):
        cell = self
        while not cell.is_zero:
            yield cell
            cell = cell.tail

    def __len__(self):
        return bl_value(self)

    def __iter__(self):
        return iter(bl_flatten(self))

    def __eq__(self, other):
        return isinstance(other, self.__class__) and [
            (c.digit, c.first, c.second) for c in self.cells()
        ] == [(c.digit, c.first, c.second) for c in other.cells()]

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        if self.is_zero:
            return "zero"
        if self.digit == 1:
            return "tpo(%r, %r)" % (self.first, self.tail)
        return "tpt(%r, %r, %r)" % (self.first, self.second, self.tail)

    def __hash__(self):
        return hash(tuple((c.digit, c.first, c.second) for c in self.cells()))


BL_ZERO = BinaryList(0, None, None, None, 0)


def bl_tpo(a, tail):
    alloc()
    return BinaryList(1, a, None, tail, tail.depth + 1)


def bl_tpt(a, b, tail):
    alloc()
    return BinaryList(2, a, b, tail, tail.depth + 1)


def bl_digits(bl):
    """Digits, least significant first."""
    return tuple(cell.digit for cell in bl.cells())


def bl_value(bl):
    return sum(cell.digit * 2**level for level, cell in enumerate(bl.cells()))


def bl_flatten(bl):
    out = []
    for level, cell in enumerate(bl.cells()):
        out.extend(unpack(cell.first, level))
        if cell.digit == 2:
            out.extend(unpack(cell.second, level))
    return out


def bl_cons(a, bl):
    """
    Add an element in front: the increment of the 1-2 system.

    A 1 becomes a 2 without carry, a 2 becomes a 1 and carries a pair.
    """
    tick()
    if bl.is_zero:
        return bl_tpo(a, BL_ZERO)
    if bl.digit == 1:
        return bl_tpt(a, bl.first, bl.tail)
    return bl_tpo(a, bl_cons((bl.first, bl.second), bl.tail))


def bl_of_list(items):
    """Right fold of bl_cons over items."""
    bl = BL_ZERO
    for item in reversed(list(items)):
        bl = bl_cons(item, bl)
    return bl


def bl_twice(bl):
    """
    Open the pairs of a binary list of pairs: multiplication by 2.

    Shifting the digits up would leave a 0 in front, so the lowest pair is
    opened into a 2 digit instead; what remains is the doubled tail after a 1
    digit, or the second pair as a 1 digit after a 2 digit.
    """
    tick()
    if bl.is_zero:
        return BL_ZERO
    a, b = bl.first
    if bl.digit == 1:
        return bl_tpt(a, b, bl_twice(bl.tail))
    return bl_tpt(a, b, bl_tpo(bl.second, bl.tail))


def pl_of_binary_list(d, f, bl):
    """
    Turn a binary list into a power list, one level per digit.

    A 1 digit is padded with d, a 2 digit is merged with f; both are lifted
    to pairs for the tail.

    - d: function element -> packed value
    - f: function (element, element) -> packed value
    - bl: binary list
    """
    tick()
    if bl.is_zero:
        return ZERO
    if bl.digit == 1:
        head = d(bl.first)
    else:
        head = f((bl.first, bl.second))
    return twice_plus_one(head, pl_of_binary_list(pairwise(d), pairwise(f), bl.tail))


def apl_of_binary_list(d, f, g, bl):
    """
    Turn a binary list of labels into an alternating power list.

    The first label becomes the head through f. The remaining labels form a
    binary list again: twice the tail after a 1 digit, tpo(second, tail) after
    a 2 digit. That list is converted with (g x, d) as padding and g x f as
    merge.

    - d: odd slot value used for padding
    - f: function label -> odd slot value
    - g: function label -> even slot value
    - bl: binary list of labels
    """
    tick()
    if bl.is_zero:
        return APL_ZERO

    def pad(x):
        return g(x), d

    if bl.digit == 1:
        rest = bl_twice(bl.tail)
    else:
        rest = bl_tpo(bl.second, bl.tail)
    return apl_twice_plus_one(
        f(bl.first), pl_of_binary_list(pad, product(g, f), rest)
    )


def apl_of_list_structural(d, f, g, labels):
    return apl_of_binary_list(d, f, g, bl_of_list(labels))


def balance_structural(labels):
    """Return a FullTreeWitness whose infix traversal is labels."""
    apl = apl_of_list_structural(FullTreeWitness.leaf(1), singleton, identity, labels)
    if apl.is_zero:
        return FullTreeWitness.leaf(0)
    return loop_typed(apl)
