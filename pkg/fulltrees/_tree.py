"""Trees, infix traversal and fullness."""

from ._counters import alloc
from ._exceptions import HeightMismatch
from ._funcs import validate_index

# marks a leaf in preorder encodings
_LEAF_MARK = object()


class Leaf(object):
    """The empty tree."""

    __slots__ = ()
    is_leaf = True

    def __eq__(self, other):
        return isinstance(other, Leaf)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "Leaf"

    def __hash__(self):
        return hash(Leaf)


LEAF = Leaf()


class Node(object):
    """
    A binary tree node with its label in the middle.

    Trees are never mutated after construction; subtrees are shared freely.
    """

    __slots__ = ("left", "label", "right")
    is_leaf = False

    def __init__(self, left, label, right):
        alloc()
        self.left = left
        self.label = label
        self.right = right

    def _preorder(self):
        out = []
        stack = [self]
        while stack:
            tree = stack.pop()
            if tree.is_leaf:
                out.append(_LEAF_MARK)
            else:
                out.append(tree.label)
                stack.append(tree.right)
                stack.append(tree.left)
        return out

    def __eq__(self, other):
        return isinstance(other, Node) and (
            self is other or self._preorder() == other._preorder()
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return fold_tree(
            self,
            "Leaf",
            lambda left, label, right: "Node(%s, %r, %s)" % (left, label, right),
        )

    def __hash__(self):
        return hash(
            tuple(None if x is _LEAF_MARK else x for x in self._preorder())
        )

    def __iter__(self):
        yield self.left
        yield self.label
        yield self.right


def fold_tree(t, leaf, node):
    """
    Bottom-up fold of a tree without recursion.

    - t: a tree
    - leaf: value for every leaf
    - node: function (left_value, label, right_value) -> value
    """
    results = []
    stack = [(t, False)]
    while stack:
        tree, visited = stack.pop()
        if tree.is_leaf:
            results.append(leaf)
        elif visited:
            right = results.pop()
            left = results.pop()
            results.append(node(left, tree.label, right))
        else:
            stack.append((tree, True))
            stack.append((tree.right, False))
            stack.append((tree.left, False))
    return results[0]


def infix_traversal(t):
    """Return labels in left, label, right order."""
    out = []
    stack = []
    tree = t
    while stack or not tree.is_leaf:
        while not tree.is_leaf:
            stack.append(tree)
            tree = tree.left
        tree = stack.pop()
        out.append(tree.label)
        tree = tree.right
    return out


def node_count(t):
    count = 0
    stack = [t]
    while stack:
        tree = stack.pop()
        if not tree.is_leaf:
            count += 1
            stack.append(tree.left)
            stack.append(tree.right)
    return count


def height(t):
    """Leaf has height 0, a node one more than its highest subtree."""
    best = 0
    stack = [(t, 0)]
    while stack:
        tree, depth = stack.pop()
        if tree.is_leaf:
            best = max(best, depth)
        else:
            stack.append((tree.left, depth + 1))
            stack.append((tree.right, depth + 1))
    return best


def full_height(t, k):
    """
    Return True if t is a full tree at height index k.

    A leaf admits index 0 or 1, a node admits k + 1 if both subtrees admit k.
    Equivalently, every leaf of t sits at depth k - 1 or k.
    """
    validate_index(k)
    stack = [(t, k)]
    while stack:
        tree, index = stack.pop()
        if tree.is_leaf:
            if index > 1:
                return False
        elif index == 0:
            return False
        else:
            stack.append((tree.left, index - 1))
            stack.append((tree.right, index - 1))
    return True


def is_full(t):
    """
    Return the minimal height index of t, or None if t is not full.

    The minimal admissible index always equals the height; perfect trees also
    admit height + 1.
    """
    k = height(t)
    return k if full_height(t, k) else None


class FullTreeWitness(object):
    """
    A tree together with a height index certifying its fullness.

    Use leaf() and node() to build witnesses in constant time; the plain
    constructor checks the whole tree.

    - tree: a tree
    - k: height index
    """

    __slots__ = ("tree", "k")

    def __init__(self, tree, k):
        validate_index(k)
        if not full_height(tree, k):
            raise ValueError("tree is not full at height index %s" % k)
        self.tree = tree
        self.k = k

    @classmethod
    def _trusted(cls, tree, k):
        witness = object.__new__(cls)
        witness.tree = tree
        witness.k = k
        return witness

    @classmethod
    def leaf(cls, k=0):
        """Leaf at height index 0 or 1."""
        if k not in (0, 1):
            raise ValueError("a leaf has height index 0 or 1, not %s" % k)
        return cls._trusted(LEAF, k)

    @classmethod
    def node(cls, left, label, right):
        """Join two witnesses sharing one height index."""
        if left.k != right.k:
            raise HeightMismatch(left.k, right.k)
        return cls._trusted(Node(left.tree, label, right.tree), left.k + 1)

    def labels(self):
        return infix_traversal(self.tree)

    def __eq__(self, other):
        return (
            isinstance(other, self.__class__)
            and self.k == other.k
            and self.tree == other.tree
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "FullTreeWitness(%s, %s)" % (self.tree, self.k)

    def __hash__(self):
        return hash((self.tree, self.k))

    def __iter__(self):
        yield self.tree
        yield self.k
