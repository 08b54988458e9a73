"""Balancing through dynamically checked alternating lists."""

import pytest

import fulltrees._naive
from fulltrees import (
    LEAF,
    BadLength,
    Elt,
    MalformedAlternation,
    Node,
    Overflow,
    TreeItem,
    balance_naive,
    complete,
    infix_traversal,
    is_full,
    loop_naive,
    pad,
    pass_naive,
)
from fulltrees._naive import join


def _leaf(label):
    return Node(LEAF, label, LEAF)


def test_join():
    assert join(LEAF, 1, LEAF) == TreeItem(_leaf(1))
    assert join(_leaf(1), 2, LEAF) == TreeItem(Node(_leaf(1), 2, LEAF))
    assert join(LEAF, 3, _leaf(4)) == TreeItem(Node(LEAF, 3, _leaf(4)))


def test_items_compare_by_kind():
    assert Elt(1) == Elt(1)
    assert Elt(LEAF) != TreeItem(LEAF)
    assert TreeItem(LEAF) != (LEAF,)


def test_pass_naive():
    assert pass_naive([TreeItem(LEAF), Elt(1), TreeItem(LEAF)]) == [TreeItem(_leaf(1))]
    seven = [
        TreeItem(LEAF),
        Elt(1),
        TreeItem(LEAF),
        Elt(2),
        TreeItem(LEAF),
        Elt(3),
        TreeItem(LEAF),
    ]
    assert pass_naive(seven) == [TreeItem(_leaf(1)), Elt(2), TreeItem(_leaf(3))]


def test_pass_naive_malformed():
    with pytest.raises(MalformedAlternation) as exc:
        pass_naive([Elt(1), TreeItem(LEAF)])
    assert exc.value.position == 1

    # label where a tree belongs
    with pytest.raises(MalformedAlternation) as exc:
        pass_naive([TreeItem(LEAF), Elt(1), Elt(2)])
    assert exc.value.position == 3

    # list ends in the middle of a group
    with pytest.raises(MalformedAlternation) as exc:
        pass_naive([TreeItem(LEAF), Elt(1)])
    assert exc.value.position == 3

    with pytest.raises(MalformedAlternation) as exc:
        pass_naive([TreeItem(LEAF), Elt(1), TreeItem(LEAF), TreeItem(LEAF)])
    assert exc.value.position == 4

    # MalformedAlternation is a ValueError
    with pytest.raises(ValueError):
        pass_naive([])


def test_loop_naive():
    assert loop_naive([]) == LEAF
    assert loop_naive([TreeItem(_leaf(1))]) == _leaf(1)
    assert loop_naive([TreeItem(LEAF), Elt(1), TreeItem(_leaf(2))]) == Node(
        LEAF, 1, _leaf(2)
    )


def test_loop_naive_errors():
    with pytest.raises(BadLength) as exc:
        loop_naive([TreeItem(LEAF), Elt(1)])
    assert exc.value.length == 2
    with pytest.raises(BadLength):
        loop_naive([Elt(1)])
    with pytest.raises(MalformedAlternation):
        loop_naive([Elt(1), TreeItem(LEAF), Elt(2)])


def test_pad():
    assert pad(0, [1]) == [TreeItem(_leaf(1))]
    assert pad(1, [1, 2]) == [TreeItem(LEAF), Elt(1), TreeItem(_leaf(2))]
    assert pad(0, []) == []
    assert pad(0, [1, 2, 3]) == [TreeItem(_leaf(1)), Elt(2), TreeItem(_leaf(3))]
    with pytest.raises(ValueError):
        pad(-1, [1])


def test_complete():
    assert complete([]) == []
    assert complete([1, 2, 3]) == [TreeItem(_leaf(1)), Elt(2), TreeItem(_leaf(3))]
    assert complete([1, 2]) == [TreeItem(LEAF), Elt(1), TreeItem(_leaf(2))]


def test_complete_lengths():
    for n in range(1, 70):
        items = complete(range(n))
        assert len(items) == 2 ** n.bit_length() - 1
        flat = []
        for item in items:
            if isinstance(item, Elt):
                flat.append(item.label)
            else:
                flat.extend(infix_traversal(item.tree))
        assert flat == list(range(n))


def _alternates(items):
    return len(items) % 2 == 1 and all(
        isinstance(item, Elt if i % 2 else TreeItem) for i, item in enumerate(items)
    )


def test_missing_leaves_fit():
    for n in range(1, 1000):
        floor_log2 = n.bit_length() - 1
        missing = 2 ** (1 + floor_log2) - n - 1
        assert 0 <= missing <= n - 1
        leaves = sum(1 for item in complete(range(n)) if item == TreeItem(LEAF))
        assert leaves == missing


def test_pass_naive_keeps_alternation():
    for n in range(1, 200):
        items = complete(range(n))
        k = n.bit_length()
        assert _alternates(items)
        while k > 1:
            items = pass_naive(items)
            k -= 1
            assert len(items) == 2**k - 1
            assert _alternates(items)


def test_complete_overflow(monkeypatch):
    monkeypatch.setattr(fulltrees._naive, "POW2_CEILING", 4)
    complete([1, 2, 3])
    with pytest.raises(Overflow):
        complete([1, 2, 3, 4])


def test_balance_naive():
    assert balance_naive([]) == LEAF
    assert balance_naive([1, 2, 3]) == Node(_leaf(1), 2, _leaf(3))
    assert balance_naive([1, 2]) == Node(LEAF, 1, _leaf(2))
    assert balance_naive([1, 2, 3, 4, 5]) == Node(
        _leaf(1), 2, Node(_leaf(3), 4, _leaf(5))
    )


def test_balance_naive_properties():
    for n in range(200):
        labels = list(range(n))
        tree = balance_naive(labels)
        assert infix_traversal(tree) == labels
        assert is_full(tree) == n.bit_length()
