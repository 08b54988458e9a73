"""Tier registry and the common balancing entry point."""

from ._altpowerlist import balance_typed
from ._binarylist import balance_structural
from ._conf import ALGORITHM_PARAMS, DEFAULT_ALGORITHM
from ._exceptions import InvariantViolation
from ._naive import balance_naive
from ._tree import FullTreeWitness, is_full

BALANCERS = {
    "naive": balance_naive,
    "typed": balance_typed,
    "structural": balance_structural,
}


def balance(labels, algo=DEFAULT_ALGORITHM):
    """
    Return a FullTreeWitness whose infix traversal is labels.

    The witness index is the minimal one, 1 + floor(log2 n) or 0 when empty.

    - labels: labels in the order the tree must preserve
    - algo: one of the keys of ALGORITHM_PARAMS (default: structural)
    """
    if algo not in ALGORITHM_PARAMS:
        raise ValueError(
            "algo must be one of %s, not %r" % (", ".join(ALGORITHM_PARAMS), algo)
        )
    result = BALANCERS[algo](list(labels))
    if isinstance(result, FullTreeWitness):
        return result
    k = is_full(result)
    if k is None:
        raise InvariantViolation("%s balancer built a tree which is not full" % algo)
    return FullTreeWitness(result, k)
