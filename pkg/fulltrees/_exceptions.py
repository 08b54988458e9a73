"""Errors raised by fulltrees."""


class FullTreesError(Exception):
    """Base class of all fulltrees errors."""


class MalformedAlternation(FullTreesError, ValueError):
    """An alternating list has a tree where a label belongs or vice versa."""

    def __init__(self, position, reason=""):
        self.position = position
        super().__init__(
            "malformed alternation at position %s%s"
            % (position, ": %s" % reason if reason else "")
        )


class BadLength(FullTreesError, ValueError):
    """A sequence does not have a length of the form 2^k - 1."""

    def __init__(self, length, reason=""):
        self.length = length
        super().__init__(
            "bad length %s%s" % (length, ": %s" % reason if reason else "")
        )


class Overflow(FullTreesError, OverflowError):
    def __init__(self, n, ceiling):
        self.n = n
        super().__init__("input of length %s exceeds ceiling %s" % (n, ceiling))


class HeightMismatch(FullTreesError, ValueError):
    """Two trees that must share a height index do not."""

    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        super().__init__("expected height index %s, found %s" % (expected, found))


class EmptyAPL(FullTreesError, ValueError):
    def __init__(self):
        super().__init__("alternating power list must not be empty")


class SizeLimit(FullTreesError, ValueError):
    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__("size %s exceeds enumeration limit %s" % (n, limit))


class MalformedInput(FullTreesError, ValueError):
    """Input text could not be turned into labels or trees."""

    def __init__(self, line, column, reason):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__("line %s, column %s: %s" % (line, column, reason))


class InvariantViolation(FullTreesError, AssertionError):
    """An internal invariant failed; always a library bug."""
