"""Operation counters used by the benchmark."""

from contextlib import contextmanager
from contextvars import ContextVar

from ._types import OpCount

_ACTIVE = ContextVar("fulltrees_counter", default=None)


class OpCounter(object):
    """Clause executions and constructor calls seen while counting is active."""

    def __init__(self):
        self.clauses = 0
        self.allocs = 0

    def to_opcount(self, n):
        return OpCount(clause_executions=self.clauses, allocations=self.allocs, n=n)

    def __repr__(self):
        return "OpCounter(clauses=%s, allocs=%s)" % (self.clauses, self.allocs)


@contextmanager
def counting():
    """
    Count operations inside the block.

    Nested blocks get their own counter; the outer one does not see their
    ticks.
    """
    counter = OpCounter()
    token = _ACTIVE.set(counter)
    try:
        yield counter
    finally:
        _ACTIVE.reset(token)


def tick(clauses=1, allocs=0):
    counter = _ACTIVE.get()
    if counter is not None:
        counter.clauses += clauses
        counter.allocs += allocs


def alloc():
    counter = _ACTIVE.get()
    if counter is not None:
        counter.allocs += 1
