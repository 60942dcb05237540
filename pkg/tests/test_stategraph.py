from fractions import Fraction

import numpy as np
import pytest

from domrat.circulant import domination_number, ratio_oracle, residues
from domrat.core import GeneratorSet, PeriodicSet, coverage_counts, verify_dominating
from domrat.errors import CapExceededError, InputError
from domrat.formulas import cong_family
from domrat.stategraph import (
    StateGraph,
    build_state_graph,
    domination_ratio,
    eds_exists,
    is_transition,
    min_mean_cycle,
    state_elements,
    state_of,
)

from oracles import (
    all_transitions_naive,
    brute_canonical_cycle,
    brute_small_period_exact_cover,
    karp_min_mean,
)


def test_state_helpers():
    assert state_elements(0b1011) == (1, 2, 4)
    assert state_of([1, 2, 4]) == 0b1011
    assert state_of([]) == 0


def test_is_transition_examples():
    s = GeneratorSet([1, 2])
    assert is_transition(state_of([1]), state_of([2]), s)
    assert not is_transition(0, 0, s)
    with pytest.raises(InputError):
        is_transition(0, 1 << 5, s)  # stray bits above c=2
    with pytest.raises(InputError):
        is_transition(0, 0, GeneratorSet([]))


@pytest.mark.parametrize("els", [[1], [1, 2], [1, -2], [2, 3], [1, 5],
                                 [-2, -3], [1, 2, -3], [3, -3], [2, -4],
                                 [1, -5], [4, 4 - 8]])
def test_full_state_always_a_successor(els):
    s = GeneratorSet(els)
    full = (1 << s.c) - 1
    for t in range(1 << s.c):
        assert is_transition(t, full, s)


@pytest.mark.parametrize("els", [[1], [2], [1, 2], [1, -2], [2, -3], [1, 5],
                                 [2, 3, -1], [3, -3]])
def test_graph_edges_match_naive_definition(els):
    s = GeneratorSet(els)
    g = build_state_graph(s)
    naive = all_transitions_naive(g, is_transition, s)
    implicit = {(t, u) for t in g.states() for u in g.successors(t)}
    assert implicit == naive
    for t in g.states():
        for u in g.states():
            assert g.is_edge(t, u) == ((t, u) in naive)


def test_build_graph_examples():
    g = build_state_graph(GeneratorSet([1, 2]))
    assert g.n_states == 4
    assert 0 in g.successors(g.full_state)  # full may be followed by empty

    g1 = build_state_graph(GeneratorSet([1]))
    assert g1.n_states == 2
    edges = {(t, u) for t in g1.states() for u in g1.successors(t)}
    assert edges == {(1, 1), (1, 0), (0, 1)}

    with pytest.raises(InputError):
        build_state_graph(GeneratorSet([]))


def test_build_graph_cap():
    with pytest.raises(CapExceededError) as err:
        build_state_graph(GeneratorSet([1, 9]), c_max=8)
    assert "c=9" in str(err.value) and "8" in str(err.value)


def test_min_mean_cycle_examples():
    mean, cycle = min_mean_cycle(build_state_graph(GeneratorSet([1, 2])))
    assert mean == Fraction(2, 3)
    assert cycle == (0, 1, 2)  # empty, {1}, {2}
    assert sum(bin(t).count("1") for t in cycle) == 2

    mean, cycle = min_mean_cycle(build_state_graph(GeneratorSet([1])))
    assert mean == Fraction(1, 2)
    assert cycle == (0, 1)


def test_min_mean_cycle_self_loop_fixture():
    # doctored graph: every state points only at the full state, so the
    # unique cycle is the full-state self-loop of mean c
    s = GeneratorSet([1, 2])
    c, n = 2, 4
    uncovered = np.full(n, 3, dtype=np.int64)
    covers = np.array([0, 0, 0, 3], dtype=np.int64)
    weights = np.array([0, 1, 1, 2], dtype=np.int64)
    g = StateGraph(s, c, uncovered, covers, weights)
    mean, cycle = min_mean_cycle(g)
    assert mean == Fraction(c)
    assert cycle == (3,)


def test_min_mean_cycle_rejects_acyclic_fixture():
    s = GeneratorSet([1, 2])
    uncovered = np.full(4, 3, dtype=np.int64)
    covers = np.zeros(4, dtype=np.int64)
    weights = np.array([0, 1, 1, 2], dtype=np.int64)
    with pytest.raises(InputError):
        min_mean_cycle(StateGraph(s, 2, uncovered, covers, weights))


@pytest.mark.parametrize("els,want", [
    ([1, 2], Fraction(1, 3)),
    ([1, 4], Fraction(2, 5)),
    ([1, -2], Fraction(2, 5)),
    ([3], Fraction(1, 2)),
])
def test_domination_ratio_known_values(els, want):
    assert domination_ratio(GeneratorSet(els)).ratio == want


def test_domination_ratio_against_circulant_oracle():
    s = GeneratorSet([2, 3])
    cert = domination_ratio(s)
    bound = ratio_oracle(s, max(cert.period, 4), n_max=40)
    assert bound == cert.ratio
    gamma, _ = domination_number(residues(s, cert.period), n_max=40)
    assert gamma == cert.ratio * cert.period


@pytest.mark.parametrize("els", [[1, 2], [1, 4], [2, 3], [1, -2], [2, -3],
                                 [1, 2, 3], [3, -3], [1, -5]])
def test_certificate_invariants(els):
    s = GeneratorSet(els)
    cert = domination_ratio(s)
    assert cert.ratio == Fraction(sum(bin(t).count("1") for t in cert.cycle),
                                  cert.period)
    assert cert.period == len(cert.cycle) * s.c
    assert cert.period <= s.c * (1 << s.c)
    assert cert.witness.period == cert.period
    assert cert.witness.density == cert.ratio
    assert verify_dominating(cert.witness, s)
    # witness residues are exactly the cycle states laid side by side
    expect = set()
    for i, t in enumerate(cert.cycle):
        expect.update(e + i * s.c for e in state_elements(t))
    assert cert.witness.residues == frozenset(expect)


@pytest.mark.parametrize("els", [[1], [2], [-1], [1, 2], [1, -1], [2, 3],
                                 [1, -2], [2, -3], [-2, -3], [1, 2, 3],
                                 [2, -4], [1, 5], [3, -3], [2, 4], [1, 2, -3],
                                 [1, -5], [6], [2, 3, -1], [1, 4], [1, -4],
                                 [3, 4, -2], [5]])
def test_min_mean_cycle_matches_independent_oracle(els):
    s = GeneratorSet(els)
    assert s.c <= 6
    g = build_state_graph(s)
    mean, cycle = min_mean_cycle(g)
    want_mean = karp_min_mean(g)
    assert mean == want_mean
    assert cycle == brute_canonical_cycle(g, want_mean)


@pytest.mark.parametrize("els", [[1, 3], [2, 5], [1, -4], [2, 3, -1], [7]])
def test_negation_symmetry(els):
    s = GeneratorSet(els)
    assert domination_ratio(s).ratio == domination_ratio(s.negate()).ratio


def test_subset_monotonicity():
    for els, extra in [([1, 4], 2), ([2, 3], -1), ([1, -2], 5), ([3], 1)]:
        s = GeneratorSet(els)
        bigger = GeneratorSet(els + [extra])
        assert domination_ratio(bigger).ratio <= domination_ratio(s).ratio


def test_ratio_bounds():
    for els in [[1], [1, 2], [2, 5], [1, -2, 4], [3, 4, -2]]:
        r = domination_ratio(GeneratorSet(els)).ratio
        assert Fraction(1, len(els) + 1) <= r <= Fraction(1, 2)


@pytest.mark.parametrize("d", [2, 3])
def test_scale_invariance(d):
    for els in [[1, 2], [1, -2], [2, 3]]:
        s = GeneratorSet(els)
        if s.c * d <= 16:
            assert domination_ratio(s.scale(d)).ratio == domination_ratio(s).ratio


def test_congruence_families_have_efficient_sets():
    cases = [(1, (0,)), (1, (-1,)), (2, (0, 0)), (2, (1, -1)), (3, (0, 0, 0)),
             (3, (1, 0, -1)), (4, (0, 0, 0, 0)), (4, (1, 0, 0, -1)),
             (4, (-1, 1, 0, 0)), (4, (0, -1, 2, 0))]
    for size, offsets in cases:
        s = cong_family(size, offsets)
        if s.c > 16:
            continue
        assert domination_ratio(s).ratio == Fraction(1, size + 1)
        exists, witness = eds_exists(s)
        assert exists
        assert all(k == 1 for k in coverage_counts(witness, s))


def test_eds_examples():
    s = GeneratorSet([1, 5])
    exists, witness = eds_exists(s)
    assert exists
    # the witness is a translate of the multiples-of-3 pattern
    assert witness.density == Fraction(1, 3)
    assert witness.same_set_as(PeriodicSet(3, {witness.sorted_residues()[0] % 3 or 3}))

    assert eds_exists(GeneratorSet([1, 4])) == (False, None)

    exists, witness = eds_exists(GeneratorSet([2, 4]))
    assert exists
    assert all(k == 1 for k in coverage_counts(witness, GeneratorSet([2, 4])))


def test_eds_ratio_link():
    # an exact cover forces the ratio down to 1/(|S|+1)
    for els in [[1, 5], [2, 4], [1, 2], [1, -1]]:
        s = GeneratorSet(els)
        exists, _ = eds_exists(s)
        assert exists
        assert domination_ratio(s).ratio == Fraction(1, len(els) + 1)


@pytest.mark.parametrize("els", [[1, 2], [1, 4], [1, 5], [2, 4], [2, 3],
                                 [1, 3], [1, -2], [3], [1, 2, 3], [2, 3, 4],
                                 [1, -4], [2, -4]])
def test_eds_agrees_with_small_period_brute_force(els):
    s = GeneratorSet(els)
    engine, witness = eds_exists(s)
    brute, _ = brute_small_period_exact_cover(s, coverage_counts, PeriodicSet)
    if brute:
        assert engine
    if engine and witness.period <= 10:
        assert brute


def test_eds_exists_cap_and_empty():
    with pytest.raises(CapExceededError):
        eds_exists(GeneratorSet([1, 9]), c_max=8)
    with pytest.raises(InputError):
        eds_exists(GeneratorSet([]))


def test_deterministic_output():
    a = domination_ratio(GeneratorSet([2, -3]))
    b = domination_ratio(GeneratorSet([2, -3]))
    assert a.cycle == b.cycle and a.witness == b.witness
