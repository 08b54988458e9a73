from collections import namedtuple


def _tagged(name, fields):
    """namedtuple which only compares equal to records of its own type."""
    base = namedtuple(name, fields)

    def __eq__(self, other):
        return type(self) is type(other) and tuple.__eq__(self, other)

    def __ne__(self, other):
        return not __eq__(self, other)

    return type(
        name,
        (base,),
        {
            "__slots__": (),
            "__eq__": __eq__,
            "__ne__": __ne__,
            "__hash__": base.__hash__,
            "__module__": __name__,
        },
    )


class _Empty(object):
    __slots__ = ()

    def __repr__(self):
        return "Empty"


# naive alternating list items
Elt = _tagged("Elt", "label")
TreeItem = _tagged("TreeItem", "tree")

# parity view of a list
EMPTY = _Empty()
Odd = _tagged("Odd", "head pairs")
Even = _tagged("Even", "pair pairs")

# benchmark records
OpCount = namedtuple("OpCount", "clause_executions allocations n")
ScalingRow = namedtuple("ScalingRow", "algo n count nanos")

# oracle records
CheckFailure = namedtuple("CheckFailure", "algo prop detail counterexample")


class CheckReport(namedtuple("CheckReport", "labels failures trees")):
    """
    Outcome of cross checking the balancers on one label list.

    - labels: the input
    - failures: list of CheckFailure
    - trees: dict of tier name to the tree it built
    """

    __slots__ = ()

    @property
    def ok(self):
        return not self.failures

    @property
    def shapes_agree(self):
        trees = list(self.trees.values())
        return all(tree == trees[0] for tree in trees[1:])
