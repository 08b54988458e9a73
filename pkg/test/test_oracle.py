"""Brute force checks."""

import pytest

import fulltrees._balance
from fulltrees import (
    LEAF,
    Node,
    SizeLimit,
    balance_typed,
    bfs_is_full,
    cross_check,
    cross_check_many,
    enumerate_full_trees,
    enumerate_shapes,
    infix_traversal,
    is_full,
)
from fulltrees._oracle import _minimize


def test_bfs_is_full(n1, left_chain):
    assert bfs_is_full(LEAF)
    assert bfs_is_full(n1)
    assert bfs_is_full(Node(n1, 2, LEAF))
    assert not bfs_is_full(left_chain)


def test_enumerate_shapes():
    assert [len(enumerate_shapes(n)) for n in range(8)] == [
        1,
        1,
        2,
        5,
        14,
        42,
        132,
        429,
    ]
    for tree in enumerate_shapes(5):
        assert infix_traversal(tree) == [1, 2, 3, 4, 5]
    assert len(set(enumerate_shapes(6))) == 132


def test_enumerate_full_trees():
    assert enumerate_full_trees(0) == [LEAF]
    assert enumerate_full_trees(1) == [Node(LEAF, 1, LEAF)]
    assert len(enumerate_full_trees(2)) == 2
    assert [len(enumerate_full_trees(n)) for n in range(3, 8)] == [1, 4, 6, 4, 1]
    with pytest.raises(SizeLimit):
        enumerate_full_trees(16)


def test_fullness_definitions_agree(small_trees):
    for tree in small_trees:
        assert bfs_is_full(tree) == (is_full(tree) is not None)


def test_cross_check():
    report = cross_check([])
    assert report.ok
    assert report.shapes_agree

    report = cross_check(range(1, 8))
    assert report.ok
    assert report.shapes_agree
    assert set(report.trees) == {"naive", "typed", "structural"}

    report = cross_check(range(1, 7))
    assert report.ok
    assert report.trees["typed"] == report.trees["structural"]


def test_cross_check_small_inputs():
    for n in range(13):
        assert cross_check(range(n)).ok


def test_cross_check_reports_broken_balancer(monkeypatch):
    monkeypatch.setitem(
        fulltrees._balance.BALANCERS,
        "naive",
        lambda labels: balance_typed(labels[::-1]),
    )
    report = cross_check(range(1, 7))
    assert not report.ok
    assert not report.shapes_agree
    (failure,) = report.failures
    assert failure.algo == "naive"
    assert failure.prop == "order"
    assert len(failure.counterexample) == 2


def test_cross_check_reports_errors(monkeypatch):
    def broken(labels):
        raise SizeLimit(len(labels), 0)

    monkeypatch.setitem(fulltrees._balance.BALANCERS, "typed", broken)
    report = cross_check([1, 2, 3])
    (failure,) = report.failures
    assert failure.prop == "total"
    assert failure.counterexample == []
    assert "typed" not in report.trees


def test_minimize():
    assert _minimize(range(20), lambda labels: 7 in labels and 13 in labels) == [
        7,
        13,
    ]
    assert _minimize([], lambda labels: True) == []


def test_cross_check_many():
    inputs = [[], [1], list(range(10)), list("abcde")]
    reports = cross_check_many(inputs, workers=2)
    assert [report.labels for report in reports] == inputs
    assert all(report.ok for report in reports)
