"""Detection of interchangeable vertices.

Two distinct vertices are interchangeable exactly when swapping them is an
automorphism of the graph. That holds in precisely two situations:

* negative: they have identical open neighborhoods (such vertices are
  necessarily non-adjacent), or
* positive: they have identical closed neighborhoods (necessarily adjacent).

No vertex can sit in a non-trivial class of both kinds at once, so grouping
vertices by their open-neighborhood key and, separately, by their
closed-neighborhood key yields a single well-defined partition into classes.

Keys are canonical sorted tuples, so the whole computation is one pass over
the adjacency lists plus dictionary grouping: O(n^2) for dense graphs.
Self-loops are encoded by appending a reserved sentinel id (``n``, one past
the largest vertex id) to the key; for directed graphs a key holds the pair
of in- and out-neighbor tuples and the sentinel joins both sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import Graph

NEGATIVE = "negative"
POSITIVE = "positive"
SINGLETON = "singleton"


class NeighborhoodKey(NamedTuple):
    """Canonical neighborhood of one vertex, comparable across vertices.

    For undirected graphs ``in_members`` and ``out_members`` are identical.
    The kind tag participates in equality and hashing, so negative keys can
    never collide with positive ones.
    """

    kind: str
    in_members: tuple[int, ...]
    out_members: tuple[int, ...]

    @property
    def members(self) -> tuple[int, ...]:
        return self.out_members


def _neighborhood_key(g: Graph, v: int, kind: str) -> NeighborhoodKey:
    sentinel = g.n
    ins = g.in_neighbors(v)
    outs = g.neighbors(v) if g.directed else ins
    if kind == POSITIVE:
        ins = sorted(ins + [v])
        outs = sorted(outs + [v]) if g.directed else ins
    if g.loops[v]:
        # the sentinel joins both directions so a loop stays a single marker
        ins = ins + [sentinel]
        outs = outs + [sentinel] if g.directed else ins
    return NeighborhoodKey(kind, tuple(ins), tuple(outs))


def negative_neighborhood(g: Graph, v: int) -> NeighborhoodKey:
    """Open-neighborhood key of v (the vertex itself excluded)."""
    return _neighborhood_key(g, v, NEGATIVE)


def positive_neighborhood(g: Graph, v: int) -> NeighborhoodKey:
    """Closed-neighborhood key of v (the vertex itself included)."""
    return _neighborhood_key(g, v, POSITIVE)


@dataclass(frozen=True)
class SymmetryClasses:
    """Partition of the vertices into interchangeability classes.

    ``class_id[v]`` is the class of vertex v; ids are dense and assigned in
    order of each class's smallest member, which keeps downstream orderings
    deterministic. ``class_members`` and ``class_kind`` describe each class.
    """

    n: int
    class_id: list[int]
    class_members: dict[int, tuple[int, ...]]
    class_kind: dict[int, str]

    def kind_of(self, v: int) -> str:
        return self.class_kind[self.class_id[v]]

    def peers(self, v: int) -> tuple[int, ...]:
        return self.class_members[self.class_id[v]]

    def nontrivial(self) -> list[tuple[str, tuple[int, ...]]]:
        """(kind, members) for every class of size >= 2, in id order."""
        return [
            (self.class_kind[c], self.class_members[c])
            for c in sorted(self.class_members)
            if len(self.class_members[c]) > 1
        ]


def compute_symmetry_classes(g: Graph) -> SymmetryClasses:
    """Group vertices by canonical neighborhood keys.

    Dict lookup performs the hash-bucket-then-exact-compare step, so the
    result never depends on hash injectivity.
    """
    neg_groups: dict[NeighborhoodKey, list[int]] = {}
    pos_groups: dict[NeighborhoodKey, list[int]] = {}
    neg_keys = []
    pos_keys = []
    for v in range(g.n):
        nk = negative_neighborhood(g, v)
        pk = positive_neighborhood(g, v)
        neg_keys.append(nk)
        pos_keys.append(pk)
        neg_groups.setdefault(nk, []).append(v)
        pos_groups.setdefault(pk, []).append(v)

    class_id = [-1] * g.n
    class_members: dict[int, tuple[int, ...]] = {}
    class_kind: dict[int, str] = {}
    next_id = 0
    for v in range(g.n):
        if class_id[v] != -1:
            continue
        group = neg_groups[neg_keys[v]]
        kind = NEGATIVE
        if len(group) < 2:
            group = pos_groups[pos_keys[v]]
            kind = POSITIVE
        if len(group) < 2:
            group = [v]
            kind = SINGLETON
        # a vertex can belong to at most one non-trivial class; anything else
        # would make the assignment below ambiguous
        assert all(class_id[w] == -1 for w in group), "overlapping symmetry classes"
        for w in group:
            class_id[w] = next_id
        class_members[next_id] = tuple(group)
        class_kind[next_id] = kind
        next_id += 1
    return SymmetryClasses(g.n, class_id, class_members, class_kind)


def are_symmetric(classes: SymmetryClasses, u: int, v: int) -> bool:
    """O(1) interchangeability test; false for u == v and for singletons."""
    if u == v:
        return False
    return classes.class_id[u] == classes.class_id[v]


def verify_swap_automorphism(g: Graph, u: int, v: int) -> bool:
    """Check directly that transposing u and v maps the edge set onto itself.

    Independent of the key-based detection; used to cross-validate it.
    """
    if u == v:
        raise ValueError("swap requires two distinct vertices")
    if g.loops[u] != g.loops[v]:
        return False
    mask = ~((1 << u) | (1 << v))
    if (g.out_bits[u] & mask) != (g.out_bits[v] & mask):
        return False
    if g.directed:
        if (g.in_bits[u] & mask) != (g.in_bits[v] & mask):
            return False
        # the u-v edges themselves swap places
        if g.has_edge(u, v) != g.has_edge(v, u):
            return False
    return True
