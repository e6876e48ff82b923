import random

import pytest

from weakiasi.graph import Graph, complete, complete_bipartite, cycle, is_bipartite, path, random_graph
from weakiasi.labeling import classify
from weakiasi.sparing import (
    SearchLimitExceeded,
    mono_indexed_count_parity_check,
    mono_indexed_counts_on_cycle,
    sparing_branch_and_bound,
    sparing_closed_form,
    sparing_exhaustive,
    sparing_number,
)

from .conftest import petersen


def assert_sound(g, result):
    assert g.is_independent(result.witness_set)
    r = classify(g, result.witness_labeling)
    assert r.is_weak
    assert len(r.mono_indexed_edges) == result.value <= g.size


@pytest.mark.parametrize("g, expected", [(cycle(4), 0), (cycle(7), 1), (complete(4), 3)])
def test_exhaustive_examples(g, expected):
    result = sparing_exhaustive(g)
    assert result.value == expected and result.method == "exhaustive"
    assert_sound(g, result)


def test_exhaustive_size_guard():
    with pytest.raises(SearchLimitExceeded, match="limit 24"):
        sparing_exhaustive(Graph([f"x{i}" for i in range(25)]))


def test_branch_and_bound_k7_beats_full_enumeration():
    result = sparing_branch_and_bound(complete(7))
    assert result.value == sparing_exhaustive(complete(7)).value == 15
    assert result.nodes_explored < 2**7


def test_branch_and_bound_petersen_matches_oracle():
    g = petersen()
    assert sparing_branch_and_bound(g).value == sparing_exhaustive(g).value


def test_branch_and_bound_even_cycle():
    assert sparing_branch_and_bound(cycle(12)).value == 0


def test_branch_and_bound_guards_report_incumbent():
    g = random_graph(201, 0.02, random.Random(1))
    with pytest.raises(SearchLimitExceeded) as info:
        sparing_branch_and_bound(g)
    value, witness = info.value.incumbent
    assert g.is_independent(witness)
    assert value == len(g.edges_outside(witness))

    g = random_graph(40, 0.3, random.Random(2))
    with pytest.raises(SearchLimitExceeded) as info:
        sparing_branch_and_bound(g, node_limit=50)
    value, witness = info.value.incumbent
    assert g.is_independent(witness) and value == len(g.edges_outside(witness))


@pytest.mark.parametrize(
    "g, expected",
    [(complete_bipartite(3, 3), 0), (cycle(9), 1), (complete(5), 6), (cycle(10), 0), (path(1), 0)],
)
def test_closed_form_examples(g, expected):
    result = sparing_closed_form(g)
    assert result.value == expected == sparing_exhaustive(g).value
    assert result.method == "closed_form"
    assert_sound(g, result)


def test_closed_form_absent_for_other_graphs():
    assert sparing_closed_form(petersen()) is None
    result = sparing_number(petersen())
    assert result.method == "branch_and_bound"


def test_complete_graph_value_is_not_half_n_minus_one_squared():
    for n in range(3, 9):
        value = sparing_exhaustive(complete(n)).value
        assert value == (n - 1) * (n - 2) // 2
        assert 2 * value != (n - 1) ** 2


def test_oracle_equality_on_random_corpus(random_corpus):
    for g in random_corpus:
        a, b = sparing_exhaustive(g), sparing_branch_and_bound(g)
        assert a.value == b.value
        assert a.witness_set == b.witness_set
        assert_sound(g, b)


@pytest.mark.parametrize(
    "g",
    [path(n) for n in range(1, 13)] + [cycle(n) for n in range(3, 13)] + [complete(n) for n in range(1, 13)]
    + [complete_bipartite(m, 12 - m) for m in range(1, 12)],
    ids=lambda g: f"n{g.order}m{g.size}",
)
def test_oracle_equality_on_families(g):
    assert sparing_branch_and_bound(g).value == sparing_exhaustive(g).value
    closed = sparing_closed_form(g)
    assert closed is not None and closed.value == sparing_exhaustive(g).value


def test_zero_iff_bipartite(random_corpus):
    small = [g for g in random_corpus if g.order <= 8]
    assert len(small) > 100
    for g in small:
        assert (sparing_exhaustive(g).value == 0) == is_bipartite(g)


def test_deterministic_outputs():
    g = petersen()
    a, b = sparing_branch_and_bound(g), sparing_branch_and_bound(g)
    assert a == b and a.to_dict(g) == b.to_dict(g)


@pytest.mark.parametrize("n", [5, 6])
def test_parity_examples(n):
    assert mono_indexed_count_parity_check(n)
    assert all(c % 2 == n % 2 for c in mono_indexed_counts_on_cycle(n))


def test_parity_c3_counts():
    assert mono_indexed_count_parity_check(3)
    assert mono_indexed_counts_on_cycle(3) == [3, 1, 1, 1]


def test_parity_range_guard():
    with pytest.raises(ValueError):
        mono_indexed_count_parity_check(17)


def test_sparing_number_dispatch():
    assert sparing_number(cycle(7)).method == "closed_form"
    assert sparing_number(cycle(7), "exhaustive").value == 1
    assert sparing_number(cycle(7), "branch_and_bound").value == 1
    with pytest.raises(ValueError):
        sparing_number(petersen(), "closed_form")
    with pytest.raises(ValueError):
        sparing_number(cycle(3), "magic")
