"""Helper functions."""

from ._counters import tick


def validate_index(k):
    """Validate a height or depth index."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("index must be an integer")
    if k < 0:
        raise ValueError("index must be greater or equal 0")


def is_power_of_two_minus_one(n):
    return n >= 0 and (n + 1) & n == 0


def depth_for_length(n):
    """Return k with n = 2^k - 1."""
    if not is_power_of_two_minus_one(n):
        raise ValueError("%s is not of the form 2^k - 1" % n)
    return (n + 1).bit_length() - 1


def pairwise(f):
    """
    Lift f to pairs: (x, y) -> (f x, f y).

    Building the lifted function is constant time; its cost is paid per call.
    """

    def lifted(pair):
        tick()
        return f(pair[0]), f(pair[1])

    return lifted


def product(g, f):
    """Return g x f: (x, y) -> (g x, f y)."""

    def both(pair):
        tick()
        return g(pair[0]), f(pair[1])

    return both


def unpack(value, depth):
    """Flatten a perfectly nested pair tree of the given depth, left to right."""
    items = [value]
    for _ in range(depth):
        items = [item for pair in items for item in pair]
    return items


def pack(items, depth):
    """Inverse of unpack: nest 2^depth items into pairs."""
    if len(items) != 2**depth:
        raise ValueError(
            "need %s items to pack at depth %s, got %s"
            % (2**depth, depth, len(items))
        )
    for _ in range(depth):
        items = [(items[i], items[i + 1]) for i in range(0, len(items), 2)]
    return items[0]


def identity(x):
    return x
