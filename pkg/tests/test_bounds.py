import math
from itertools import combinations

import mpmath
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digraphs
from subdp.bounds import (
    capacity_bracket,
    degree_upper_bound,
    kcore_upper_bound,
    lll_color_count,
    lll_condition,
    lll_lower_bound,
    turan_clique_lower_bound,
)
from subdp.ensembles import gen_random_bidirectional
from subdp.graph import (
    GraphInputError,
    avg_out_degree,
    build_bidirectional,
    build_graph,
    complete_graph,
    degree_stats,
    directed_cycle,
    full_selection,
    hypercube,
    is_bidirectional,
    petersen_graph,
)
from subdp.peel import peel_half_average


def lll_oracle(min_out, total_degree):
    """high-precision evaluation of floor((min_out + 1) / (1 + ln 3 + ln 2 + 3 ln D))"""
    with mpmath.workdps(50):
        q = mpmath.mpf(min_out + 1) / (1 + mpmath.log(3) + mpmath.log(2) + 3 * mpmath.log(total_degree))
        return max(1, int(mpmath.floor(q))), q


def test_degree_upper_bound_examples():
    assert degree_upper_bound(hypercube(3)) == 4
    assert degree_upper_bound(petersen_graph()) == 4
    assert degree_upper_bound(build_graph(1, [])) == 1


def test_kcore_upper_bound_examples(k4_pendant):
    assert kcore_upper_bound(complete_graph(5)) == 5
    assert kcore_upper_bound(k4_pendant) == 4
    assert degree_upper_bound(k4_pendant) == 5
    assert kcore_upper_bound(petersen_graph()) == 4


def test_lll_petersen_clamps_to_one():
    g = petersen_graph()
    value, q = lll_oracle(3, 6)
    assert float(q) == pytest.approx(4 / 8.167, abs=1e-3)
    assert value == 1
    assert lll_lower_bound(g, full_selection(g)) == 1


def test_lll_single_node():
    g = build_graph(1, [])
    assert lll_lower_bound(g, full_selection(g)) == 1


def test_lll_k200():
    g = complete_graph(200)
    value, q = lll_oracle(199, 398)
    assert float(q) == pytest.approx(200 / 20.75, abs=1e-2)
    assert value == 9
    assert lll_lower_bound(g, full_selection(g)) == 9


@pytest.mark.parametrize("min_out", [0, 3, 17, 64, 199, 500])
@pytest.mark.parametrize("total", [1, 2, 6, 50, 398, 1000])
def test_lll_color_count_matches_oracle(min_out, total):
    value, q = lll_oracle(min_out, total)
    assert abs(q - mpmath.nint(q)) > 1e-9
    assert lll_color_count(min_out, total) == value


def test_lll_condition_holds_at_target():
    for n in (40, 80, 200):
        g = complete_graph(n)
        sel = full_selection(g)
        ell = lll_lower_bound(g, sel)
        assert ell >= 2
        assert lll_condition(g, sel, ell) <= 1.0


def test_turan_examples(c4bi):
    k6 = complete_graph(6)
    assert k6.num_arcs // 2 == 15
    assert turan_clique_lower_bound(k6) == 6
    assert turan_clique_lower_bound(build_graph(5, [])) == 1
    assert turan_clique_lower_bound(c4bi) == 2


def test_turan_scan_by_hand():
    # scan r until 15 > 18 (r-2)/(r-1) fails
    m, n = 15, 6
    ok = [r for r in range(2, 8) if m > 0.5 * n * n * (r - 2) / (r - 1)]
    assert max(ok) == 6


def test_turan_rejects_directed():
    with pytest.raises(GraphInputError):
        turan_clique_lower_bound(directed_cycle(3))


@settings(max_examples=100)
@given(digraphs(min_n=1, max_n=10, bidirectional=True))
def test_turan_certifies_a_clique(g):
    r = turan_clique_lower_bound(g)
    und = nx.Graph()
    und.add_nodes_from(range(g.n))
    und.add_edges_from((u, v) for u, v in g.arcs if u < v)
    clique = max((len(c) for c in nx.find_cliques(und)), default=1)
    assert clique >= r


@settings(max_examples=60)
@given(digraphs(min_n=2, max_n=9, bidirectional=True), st.data())
def test_turan_monotone_under_arc_addition(g, data):
    missing = [(u, v) for u, v in combinations(range(g.n), 2) if (u, v) not in g.arcs]
    if not missing:
        return
    extra = data.draw(st.sampled_from(missing))
    bigger = build_bidirectional(g.n, [*((u, v) for u, v in g.arcs if u < v), extra])
    assert turan_clique_lower_bound(bigger) >= turan_clique_lower_bound(g)


@given(digraphs(max_n=10))
def test_kcore_below_degree_bound(g):
    assert kcore_upper_bound(g) <= degree_upper_bound(g)


@given(digraphs(max_n=10))
def test_bracket_invariants(g):
    b = capacity_bracket(g)
    assert 1 <= b.lower <= b.upper <= 1 + degree_stats(g).max_out
    assert b.components[f"lower:{b.lower_witness}"] == b.lower
    assert b.components[f"upper:{b.upper_witness}"] == b.upper
    assert ("lower:turan" in b.components) == is_bidirectional(g)


def test_bracket_examples():
    b = capacity_bracket(petersen_graph())
    assert b.lower >= 1 and b.upper == 4
    b = capacity_bracket(complete_graph(6))
    assert (b.lower, b.upper) == (6, 6) and b.closed
    b = capacity_bracket(build_graph(1, []))
    assert (b.lower, b.upper) == (1, 1)


def test_peel_terminal_beats_half_average_formula():
    for seed in range(30):
        g = gen_random_bidirectional(40, 0.05 + 0.03 * seed, seed=seed)
        if g.num_arcs == 0:
            continue
        stats = degree_stats(g)
        total = stats.max_out + stats.max_in
        guaranteed = max(stats.min_out, avg_out_degree(g) / 2)
        formula = max(1, math.floor((guaranteed + 1) / (1 + math.log(3) + math.log(2) + 3 * math.log(total))))
        assert lll_lower_bound(g, peel_half_average(g).terminal) >= formula
