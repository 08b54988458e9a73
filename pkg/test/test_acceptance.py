"""End to end guarantees of all three balancers."""

import itertools

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import fulltrees._balance
from fulltrees import (
    LEAF,
    FullTreesError,
    FullTreeWitness,
    InvariantViolation,
    MalformedAlternation,
    Node,
    balance,
    balance_naive,
    balance_structural,
    balance_typed,
    bfs_is_full,
    cross_check,
    infix_traversal,
    is_full,
    measure_cons_amortized,
    measure_scaling,
)
from fulltrees._bench import doubling_ratios, fit_loglog_slope
from fulltrees._conf import BENCH_SIZES, RATIO_BAND, SLOPE_BAND

ALGOS = ["naive", "typed", "structural"]


def _expected_index(n):
    return n.bit_length()


def test_exhaustive_small_lists():
    for n in range(13):
        for labels in itertools.product("ab", repeat=n):
            report = cross_check(labels)
            assert report.ok, report.failures


@settings(max_examples=200, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(st.integers(), max_size=1000))
def test_random_lists(labels):
    for algo in ALGOS:
        witness = balance(labels, algo)
        assert infix_traversal(witness.tree) == labels
        assert witness.k == is_full(witness.tree) == _expected_index(len(labels))
        assert bfs_is_full(witness.tree)


@pytest.mark.parametrize("n", [65535, 65536, 99999, 100000])
def test_large_lists(n):
    labels = list(range(n))
    for algo in ALGOS:
        witness = balance(labels, algo)
        assert infix_traversal(witness.tree) == labels
        assert is_full(witness.tree) == _expected_index(n)


@settings(max_examples=10000, deadline=None)
@given(st.lists(st.one_of(st.text(), st.integers(), st.none()), max_size=100))
def test_totality(labels):
    try:
        balance_typed(labels)
        balance_structural(labels)
        balance_naive(labels)
    except MalformedAlternation:
        pytest.fail("naive balancer built a malformed alternating list")
    except FullTreesError as e:
        pytest.fail("balancer raised %r" % e)


def test_perfect_lengths_agree():
    for k in range(8):
        labels = list(range(2**k - 1))
        report = cross_check(labels)
        assert report.ok
        assert report.shapes_agree
        assert balance_naive(labels) == balance_typed(labels).tree


def test_typed_tiers_agree():
    for n in range(65):
        assert balance_typed(range(n)) == balance_structural(range(n))


@pytest.mark.parametrize("algo", ALGOS)
def test_linear_clause_counts(algo):
    rows = measure_scaling(algo, BENCH_SIZES, trials=1)
    for ratio in doubling_ratios(rows):
        assert RATIO_BAND[0] <= ratio <= RATIO_BAND[1]
    assert SLOPE_BAND[0] <= fit_loglog_slope(rows) <= SLOPE_BAND[1]


def test_amortized_cons():
    for i in range(4, 17):
        n = 2**i
        assert measure_cons_amortized(n) <= 2 * n


def test_balance_entry_point():
    witness = balance([1, 2], "naive")
    assert witness.k == 2
    assert witness.labels() == [1, 2]
    assert balance([]).k == 0
    assert balance(iter("abc")).labels() == ["a", "b", "c"]
    with pytest.raises(ValueError):
        balance([1], "quick")


def test_balance_rejects_tree_which_is_not_full(monkeypatch):
    chain = Node(Node(Node(LEAF, 1, LEAF), 2, LEAF), 3, LEAF)
    monkeypatch.setitem(fulltrees._balance.BALANCERS, "naive", lambda labels: chain)
    with pytest.raises(InvariantViolation):
        balance([1, 2, 3], "naive")
    monkeypatch.setitem(
        fulltrees._balance.BALANCERS, "naive", lambda labels: Node(LEAF, 1, LEAF)
    )
    witness = balance([1], "naive")
    assert witness == FullTreeWitness(Node(LEAF, 1, LEAF), 1)
