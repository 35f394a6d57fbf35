"""The graph-based decision procedure: distinguished set, reachable
subgraph, verdicts, the word chain test, witness extraction, and DOT
export, pinned against hand-checked values over F_7 and F_13.
"""

import itertools

import pytest

from quadsemi.criterion import (
    REASON_GENERATOR,
    REASON_REACHABLE,
    check_semigroup_irreducible,
    distinguished_set,
    export_dot,
    max_indegree_from_nonsquares,
    reachable_subgraph,
    witness_word,
    word_irreducible,
)
from quadsemi.field import make_field
from quadsemi.quadratic import GeneratorSet, MonicQuadratic

F7 = make_field(7)
F13 = make_field(13)


def gset(field, *pairs):
    return GeneratorSet(field, [MonicQuadratic(a, b) for a, b in pairs])


# The three sets used throughout: an all-irreducible pair over F_13, an
# all-irreducible pair over F_7 that needs the linear shifts, and a
# reducible shift-free pair over F_7.
PAIR13 = gset(F13, (5, 8), (6, 8))
PAIR7_SHIFTED = gset(F7, (1, 5), (4, 5))
PAIR7_REDUCIBLE = gset(F7, (0, 3), (0, 5))


def test_distinguished_set_examples():
    assert distinguished_set(PAIR7_SHIFTED) == (2,)  # -5 mod 7
    assert distinguished_set(PAIR13) == (5,)  # -8 mod 13
    assert distinguished_set(gset(F7, (3, 0))) == (0,)
    assert distinguished_set(PAIR7_REDUCIBLE) == (2, 4)  # sorted


def test_reachable_subgraph_shifted_pair():
    g = reachable_subgraph(PAIR7_SHIFTED)
    assert g.seeds == (2,)
    assert g.nodes == (3, 6)
    assert g.edges == (
        (2, 0, 3),
        (2, 1, 6),
        (3, 0, 6),
        (3, 1, 3),
        (6, 0, 6),
        (6, 1, 6),
    )
    assert g.dist == {3: 1, 6: 1}
    assert g.parent == {3: (2, 0), 6: (2, 1)}
    assert g.first_square is None


def test_reachable_subgraph_swap_pair():
    # f loops at 5 and 6; g swaps them; the seed 5 is re-entered so it
    # is a node as well
    g = reachable_subgraph(PAIR13)
    assert g.seeds == (5,)
    assert g.nodes == (5, 6)
    assert g.edges == ((5, 0, 5), (5, 1, 6), (6, 0, 6), (6, 1, 5))
    assert g.dist == {5: 1, 6: 1}


def test_reachable_subgraph_single_generator_chain():
    # x^2 - 5 over F_7: 2 -> 6 -> 3 -> 4 with 4 a fixed point
    g = reachable_subgraph(gset(F7, (0, 5)))
    assert g.seeds == (2,)
    assert g.nodes == (6, 3, 4)
    assert g.dist == {6: 1, 3: 2, 4: 3}
    assert g.parent == {6: (2, 0), 3: (6, 0), 4: (3, 0)}
    assert g.first_square == (3, 0, 4)


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_reachable_subgraph_closure_and_membership(p, e):
    # every node is an image of a seed or node; applying any generator
    # to any node lands on a node
    field = make_field(p, e)
    quads = [MonicQuadratic(a, b) for a in field.elements() for b in field.elements()]
    for pair in itertools.combinations(quads[:: max(1, field.q // 3)], 2):
        s = GeneratorSet(field, list(pair))
        g = reachable_subgraph(s)
        nodes = g.node_set()
        sources = set(g.seeds) | nodes
        targets = set()
        for u, i, v in g.edges:
            assert u in sources
            assert v in nodes
            targets.add(v)
        assert targets == nodes
        # each source carries exactly one edge per generator
        assert len(g.edges) == len(sources) * len(s)


def test_dist_is_minimal_walk_length():
    # brute force all walks from the seeds and compare lengths
    for s in (PAIR13, PAIR7_SHIFTED, PAIR7_REDUCIBLE, gset(F7, (0, 5))):
        g = reachable_subgraph(s)
        field = s.field
        frontier = set(g.seeds)
        depth = 0
        best: dict[int, int] = {}
        while len(best) < len(g.nodes) and depth <= field.q:
            depth += 1
            frontier = {
                field.sub(field.mul(field.sub(u, q.a), field.sub(u, q.a)), q.b)
                for u in frontier
                for q in s.gens
            }
            for v in frontier:
                best.setdefault(v, depth)
        assert g.dist == best


def test_word_irreducible_examples():
    assert word_irreducible(PAIR13, [0, 0])
    assert not word_irreducible(gset(F7, (0, 4)), [0])  # b = 4 = 2^2
    # chain for x^2 - 5 repeated: 5(ns), f(2)=6(ns), f(6)=3(ns), f(3)=4 square
    single = gset(F7, (0, 5))
    assert word_irreducible(single, [0])
    assert word_irreducible(single, [0, 0])
    assert word_irreducible(single, [0, 0, 0])
    assert not word_irreducible(single, [0, 0, 0, 0])


def test_word_irreducible_rejects_bad_words():
    with pytest.raises(ValueError):
        word_irreducible(PAIR13, [])
    with pytest.raises(ValueError):
        word_irreducible(PAIR13, [2])


def test_verdict_irreducible_cases():
    for s in (PAIR13, PAIR7_SHIFTED):
        v = check_semigroup_irreducible(s)
        assert v.irreducible
        assert v.reason is None
        assert v.witness is None


def test_verdict_square_seed_is_not_tested_at_length_zero():
    # the seed 2 is a square mod 7 yet the verdict stays irreducible
    # because no walk of positive length re-enters it
    assert F7.is_square(2)
    v = check_semigroup_irreducible(PAIR7_SHIFTED)
    assert v.irreducible
    assert 2 not in v.graph.node_set()


def test_verdict_square_b_reports_generator():
    v = check_semigroup_irreducible(gset(F7, (0, 4), (0, 5)))
    assert not v.irreducible
    assert v.reason == REASON_GENERATOR
    assert v.witness == (0,)


def test_verdict_reachable_square_with_witness():
    v = check_semigroup_irreducible(PAIR7_REDUCIBLE)
    assert not v.irreducible
    assert v.reason == REASON_REACHABLE
    assert v.witness == (0, 1)
    assert not word_irreducible(PAIR7_REDUCIBLE, v.witness)


def test_witness_word_examples():
    v = check_semigroup_irreducible(PAIR7_REDUCIBLE)
    assert witness_word(PAIR7_REDUCIBLE, v.graph) == (0, 1)
    single = gset(F7, (0, 5))
    assert witness_word(single, reachable_subgraph(single)) == (0, 0, 0, 0)
    square_b = gset(F7, (0, 4))
    assert witness_word(square_b, reachable_subgraph(square_b)) == (0,)


def test_witness_word_raises_on_irreducible_set():
    with pytest.raises(ValueError):
        witness_word(PAIR13, reachable_subgraph(PAIR13))


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1)])
def test_witness_prefixes_all_irreducible_exhaustive(p, e):
    # witness soundness and prefix minimality over every pair of
    # shift-free generators (a = 0 keeps this sweep small)
    field = make_field(p, e)
    quads = [MonicQuadratic(0, b) for b in field.elements()]
    for pair in itertools.combinations(quads, 2):
        s = GeneratorSet(field, list(pair))
        v = check_semigroup_irreducible(s)
        if v.irreducible:
            continue
        assert not word_irreducible(s, v.witness)
        for cut in range(1, len(v.witness)):
            assert word_irreducible(s, v.witness[:cut])


@pytest.mark.parametrize("p,e", [(5, 1), (7, 1), (3, 2)])
def test_criterion_monotone_under_subsets(p, e):
    # an all-irreducible pair keeps both of its singletons irreducible
    field = make_field(p, e)
    quads = [MonicQuadratic(a, b) for a in field.elements() for b in field.elements()]
    for pair in itertools.combinations(quads, 2):
        s = GeneratorSet(field, list(pair))
        if check_semigroup_irreducible(s).irreducible:
            for q in pair:
                sub = GeneratorSet(field, [q])
                assert check_semigroup_irreducible(sub).irreducible


def test_indegree_bound_on_all_nonsquare_graphs():
    # over p = 3 (mod 4) with shift-free generators, a graph whose nodes
    # are all non-squares has at most one incoming edge per generator at
    # every node (sources u and -u collide and one of them is a square)
    checked = 0
    for p in (3, 7, 11, 19, 23, 31):
        field = make_field(p)
        singles = [GeneratorSet(field, [MonicQuadratic(0, b)]) for b in range(p)]
        pairs = [
            GeneratorSet(field, [MonicQuadratic(0, bf), MonicQuadratic(0, bg)])
            for bf, bg in itertools.combinations(range(p), 2)
        ]
        for s in singles + pairs:
            g = reachable_subgraph(s)
            if any(field.is_square(v) for v in g.nodes):
                continue
            assert max_indegree_from_nonsquares(g) <= 1
            checked += 1
    # at some primes (3, 11, ...) a few singletons qualify; the sweep
    # must exercise the bound at least once overall
    assert checked > 0


def test_export_dot_golden_layout():
    dot = export_dot(reachable_subgraph(PAIR7_SHIFTED))
    assert dot == (
        "digraph reach {\n"
        "  rankdir=LR;\n"
        "  node [shape=circle];\n"
        '  "2" [shape=doublecircle];\n'
        '  "3";\n'
        '  "6";\n'
        '  "2" -> "3" [label="f"];\n'
        '  "2" -> "6" [label="g"];\n'
        '  "3" -> "6" [label="f"];\n'
        '  "3" -> "3" [label="g"];\n'
        '  "6" -> "6" [label="f"];\n'
        '  "6" -> "6" [label="g"];\n'
        "}\n"
    )


def test_export_dot_marks_square_nodes():
    dot = export_dot(reachable_subgraph(PAIR7_REDUCIBLE))
    assert '"1" [style=filled, fillcolor=lightgrey];' in dot
    assert dot.count("doublecircle") == 2  # both seeds 2 and 4


def test_export_dot_deterministic():
    a = export_dot(reachable_subgraph(PAIR7_REDUCIBLE))
    b = export_dot(reachable_subgraph(gset(F7, (0, 3), (0, 5))))
    assert a == b


def test_input_order_breaks_ties_in_witness():
    # swapping the generators swaps the roles in the witness
    swapped = gset(F7, (0, 5), (0, 3))
    v = check_semigroup_irreducible(swapped)
    assert not v.irreducible
    assert not word_irreducible(swapped, v.witness)
    assert v.witness == (1, 0)  # same word with relabeled indices
