"""Decision procedure for compositional irreducibility.

A set S of monic quadratics (x - a)^2 - b over F_q (q odd) generates a
semigroup under composition.  Every member of that semigroup is
irreducible exactly when

  (i)  every b is a non-square, and
  (ii) starting from the distinguished values {-b : f in S}, no walk of
       positive length through the generator maps reaches a square of
       the field (0 counts as a square).

Condition (ii) is decided on a finite graph: nodes are field elements
reachable in at least one step, and each node u carries one out-edge per
generator f to f(u).  When the check fails, a witness word is extracted:
an explicitly reducible composition none of whose shorter outer-prefixes
is reducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import TYPE_CHECKING, Sequence

from .quadratic import GeneratorSet, check_word, evaluate

if TYPE_CHECKING:
    from .field import Field

# Reasons attached to a reducible verdict.
REASON_GENERATOR = "generator_reducible"  # some b is a square: that generator splits
REASON_REACHABLE = "square_reachable"  # a square is reachable at positive length


def distinguished_set(generators: GeneratorSet) -> tuple[int, ...]:
    """The walk's starting values {-b : f in S}, deduplicated and sorted."""
    field = generators.field
    return tuple(sorted({field.neg(f.b) for f in generators.gens}))


@dataclass(frozen=True)
class ReachGraph:
    """The part of the generator-application graph reachable from the
    distinguished set by paths of positive length.

    nodes lists elements in BFS discovery order; a distinguished value
    appears among the nodes only if some walk re-enters it.  edges holds
    one (source, generator index, target) triple per distinguished value
    or node and per generator, in expansion order.  parent maps each
    node to the (predecessor, generator index) that first discovered it;
    dist maps it to that minimal walk length (always >= 1).
    first_square is the edge that discovered the earliest square node,
    or None when every node is a non-square.
    """

    generators: GeneratorSet
    seeds: tuple[int, ...]
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]
    parent: dict[int, tuple[int, int]] = dc_field(repr=False)
    dist: dict[int, int] = dc_field(repr=False)
    first_square: tuple[int, int, int] | None

    @property
    def field(self) -> Field:
        return self.generators.field

    def node_set(self) -> frozenset[int]:
        return frozenset(self.nodes)

    def square_nodes(self) -> tuple[int, ...]:
        f = self.field
        return tuple(v for v in self.nodes if f.is_square(v))


def reachable_subgraph(generators: GeneratorSet) -> ReachGraph:
    """Breadth-first closure of the generator maps from the distinguished
    set.  Deterministic: seeds are expanded in sorted order, then nodes
    in discovery order, applying generators in input order; each source
    is expanded exactly once even if it is both a seed and a node.
    """
    field = generators.field
    gens = generators.gens
    seeds = distinguished_set(generators)
    n_seeds = len(seeds)

    sources: list[int] = list(seeds)
    queued: set[int] = set(seeds)
    nodes: list[int] = []
    discovered: set[int] = set()
    parent: dict[int, tuple[int, int]] = {}
    dist: dict[int, int] = {}
    edges: list[tuple[int, int, int]] = []
    first_square: tuple[int, int, int] | None = None

    pos = 0
    while pos < len(sources):
        u = sources[pos]
        base = 0 if pos < n_seeds else dist[u]
        pos += 1
        for i, g in enumerate(gens):
            v = evaluate(field, g, u)
            edges.append((u, i, v))
            if v not in discovered:
                discovered.add(v)
                nodes.append(v)
                parent[v] = (u, i)
                dist[v] = base + 1
                if first_square is None and field.is_square(v):
                    first_square = (u, i, v)
                if v not in queued:
                    queued.add(v)
                    sources.append(v)
    return ReachGraph(
        generators=generators,
        seeds=seeds,
        nodes=tuple(nodes),
        edges=tuple(edges),
        parent=parent,
        dist=dist,
        first_square=first_square,
    )


def _first_chain_failure(generators: GeneratorSet, word: tuple[int, ...]) -> int | None:
    """Index of the first failing value in the irreducibility chain of a
    word, or None when the word is irreducible.

    For word (i1, ..., im) read outermost-first the chain is b_{i1}
    followed by c_k = f_{i1}(f_{i2}(... f_{ik}(-b_{i(k+1)}) ...)) for
    k = 1..m-1; the word is irreducible exactly when no chain value is a
    square.  Values are tested in order because each squareness transfer
    down the chain is only valid while all earlier values are
    non-squares.
    """
    field = generators.field
    gens = generators.gens
    if field.is_square(gens[word[0]].b):
        return 0
    for k in range(1, len(word)):
        x = field.neg(gens[word[k]].b)
        for idx in reversed(word[:k]):
            x = evaluate(field, gens[idx], x)
        if field.is_square(x):
            return k
    return None


def word_irreducible(generators: GeneratorSet, word: Sequence[int]) -> bool:
    """Decide irreducibility of the composition named by word without
    expanding it (chain of squareness tests; degree stays out of play).
    """
    w = check_word(generators, word)
    return _first_chain_failure(generators, w) is None


def witness_word(generators: GeneratorSet, graph: ReachGraph) -> tuple[int, ...]:
    """A reducible word certifying a failed check, from a shortest walk
    to a square node.

    A generator whose b is square is already reducible on its own and is
    returned as a one-letter word (lowest index first).  Otherwise the
    walk seed -> ... -> square, read back from the square, gives the
    outer letters; the innermost letter is the lowest-index generator
    whose -b equals the seed.  The candidate is then cut at the first
    failing chain value, so no shorter outer-prefix of the result is
    reducible.  Raises ValueError when nothing is reducible.
    """
    field = generators.field
    for i, g in enumerate(generators.gens):
        if field.is_square(g.b):
            return (i,)
    if graph.first_square is None:
        raise ValueError("every composition is irreducible; nothing to witness")
    seed_set = set(graph.seeds)
    u, i, _v = graph.first_square
    labels = [i]
    while u not in seed_set:
        u, lab = graph.parent[u]
        labels.append(lab)
    inner = next(
        j for j, g in enumerate(generators.gens) if field.neg(g.b) == u
    )
    candidate = tuple(labels) + (inner,)
    fail = _first_chain_failure(generators, candidate)
    if fail is None:  # unreachable: the walk's square is a chain value
        raise AssertionError("witness candidate unexpectedly irreducible")
    return candidate[: fail + 1]


@dataclass(frozen=True)
class Verdict:
    """Outcome of the semigroup check.

    irreducible is True when every composition of the generators is
    irreducible.  Otherwise reason is one of REASON_GENERATOR /
    REASON_REACHABLE and witness is a reducible word whose strictly
    shorter outer-prefixes are all irreducible.  The reachability graph
    is attached in either case.
    """

    irreducible: bool
    reason: str | None
    witness: tuple[int, ...] | None
    graph: ReachGraph


def check_semigroup_irreducible(generators: GeneratorSet) -> Verdict:
    """Decide whether every composition of the generators is irreducible.

    The graph is always built so callers can inspect or render it.  A
    square b (reducible generator) short-circuits with a one-letter
    witness; otherwise the first square node discovered, if any, yields
    the witness.
    """
    field = generators.field
    graph = reachable_subgraph(generators)
    if any(field.is_square(g.b) for g in generators.gens):
        return Verdict(False, REASON_GENERATOR, witness_word(generators, graph), graph)
    if graph.first_square is not None:
        return Verdict(False, REASON_REACHABLE, witness_word(generators, graph), graph)
    return Verdict(True, None, None, graph)


def max_indegree_from_nonsquares(graph: ReachGraph) -> int:
    """Largest number of distinct non-square node sources feeding one
    (target, generator) slot, over edges internal to the node set.

    When every node is a non-square this is the per-generator in-degree
    of the graph restricted to its nodes; the shape of the generators
    (a = 0, -1 a non-square) forces it to be at most 1 in that case.
    """
    field = graph.field
    nodes = graph.node_set()
    counts: dict[tuple[int, int], int] = {}
    for u, i, v in graph.edges:
        if u in nodes and v in nodes and not field.is_square(u):
            key = (i, v)
            counts[key] = counts.get(key, 0) + 1
    return max(counts.values(), default=0)


def export_dot(graph: ReachGraph) -> str:
    """Deterministic DOT rendering: distinguished values double-circled,
    square nodes shaded, edges labeled with generator names.
    """
    gens = graph.generators
    field = graph.field
    node_set = graph.node_set()
    order: list[int] = list(graph.seeds)
    order.extend(v for v in graph.nodes if v not in set(graph.seeds))
    lines = ["digraph reach {", "  rankdir=LR;", '  node [shape=circle];']
    for v in order:
        attrs = []
        if v in graph.seeds:
            attrs.append("shape=doublecircle")
        if v in node_set and field.is_square(v):
            attrs.append("style=filled")
            attrs.append("fillcolor=lightgrey")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f'  "{v}"{suffix};')
    for u, i, v in graph.edges:
        lines.append(f'  "{u}" -> "{v}" [label="{gens.name(i)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
