"""Branch-and-bound search for a maximum common induced subgraph.

The search grows a mapping pair by pair. All unmatched vertices are kept in
a partition of bidomains: a bidomain pairs the G-vertices and H-vertices
whose adjacency pattern towards the already-matched pairs is identical, so
any vertex on the left side may still be matched to any vertex on the right
side. Matching v to u splits every bidomain by adjacency to v and u;
deciding to leave v unmatched (recorded as the pair ``(v, None)``) removes v
and recurses on the rest. The incumbent is the best mapping seen so far and
a branch is abandoned whenever matched-count plus the sum of min(side sizes)
cannot beat it.

Two optional pruning rules exploit interchangeable vertices (see
:mod:`mcis.symmetry`):

* variable rule: if an interchangeable sibling of v was already assigned a
  value u' earlier in the branch, candidates that precede u' in the fixed
  value order are skipped; the swapped branch was, or will be, explored via
  the sibling. Unmatched counts as the largest value, so once a sibling was
  left unmatched, v accepts no real value at all.
* value rule: among interchangeable candidates living in the same bidomain,
  only the first in the fixed value order is tried.

One fixed value order (degree descending, then class id, then vertex id) is
used both to iterate candidates and to compare values inside the pruning
rules, in every configuration. Keeping the two aligned means a skipped
branch's surviving twin is always explored earlier in depth-first order,
which in turn makes branch counts shrink monotonically as rules are added.

Module layout: the plain-list functions (``upper_bound``, ``select_*``,
``refine_partition``...) are the readable contract surface, convenient for
tests and instrumentation. ``solve`` runs the same decisions on a flat
vertex array with (start, length) slices, rebuilt in place per recursion,
which avoids churning small lists in the hot path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from time import perf_counter

from .graph import Graph
from .symmetry import SymmetryClasses, compute_symmetry_classes

CONFIG_NAMES = ("none", "var", "val", "dual")


@dataclass
class SolverConfig:
    var_sym: bool = True
    val_sym: bool = True
    timeout: float | None = None
    branch_check_interval: int = 1024

    def __post_init__(self):
        if self.branch_check_interval < 1:
            raise ValueError("branch_check_interval must be at least 1")
        if self.timeout is not None and self.timeout < 0:
            raise ValueError("timeout must be non-negative")

    @classmethod
    def from_name(cls, name: str, **kwargs) -> "SolverConfig":
        """Build one of the standard rule combinations by name."""
        try:
            var_sym, val_sym = {
                "none": (False, False),
                "var": (True, False),
                "val": (False, True),
                "dual": (True, True),
            }[name]
        except KeyError:
            raise ValueError(f"unknown config {name!r}, expected one of {CONFIG_NAMES}") from None
        return cls(var_sym=var_sym, val_sym=val_sym, **kwargs)

    @property
    def name(self) -> str:
        return {
            (False, False): "none",
            (True, False): "var",
            (False, True): "val",
            (True, True): "dual",
        }[(self.var_sym, self.val_sym)]


@dataclass
class SearchStats:
    branches: int = 0
    bound_prunes: int = 0
    var_sym_prunes: int = 0
    val_sym_prunes: int = 0
    incumbent_size: int = 0
    time_to_best: float = 0.0
    branches_to_best: int = 0
    completed: bool = True


@dataclass
class Solution:
    mapping: list[tuple[int, int]]
    stats: SearchStats

    @property
    def size(self) -> int:
        return len(self.mapping)


@dataclass
class Bidomain:
    """Unmatched vertices with one shared adjacency pattern, per side."""

    gs: list[int]
    hs: list[int]


Partition = list


def value_order_ranks(h: Graph, classes_h: SymmetryClasses) -> list[int]:
    """Position of each H-vertex in the fixed value order.

    Lower rank means tried earlier and considered smaller by the pruning
    rules; ``None`` (unmatched) is larger than every rank. Interchangeable
    vertices share degree and class, so they are consecutive and fall back
    to id order among themselves.
    """
    order = sorted(range(h.n), key=lambda u: (-h.degree(u), classes_h.class_id[u], u))
    ranks = [0] * h.n
    for i, u in enumerate(order):
        ranks[u] = i
    return ranks


def initial_partition(g: Graph, h: Graph) -> list[Bidomain]:
    """Starting partition: everything matchable, split only by loop flag.

    A vertex with a self-loop can never map to one without, so the two
    groups start in separate bidomains. This is the only point where the
    solver consults loop flags; refinement preserves the separation.
    """
    parts = []
    for want_loop in (False, True):
        gs = [v for v in range(g.n) if g.loops[v] == want_loop]
        hs = [u for u in range(h.n) if h.loops[u] == want_loop]
        if gs and hs:
            parts.append(Bidomain(gs, hs))
    return parts


def upper_bound(mapping: list[tuple[int, int | None]], partition: list[Bidomain]) -> int:
    """Matched pairs so far plus min(side sizes) over the bidomains."""
    matched = sum(1 for _, u in mapping if u is not None)
    return matched + sum(min(len(bd.gs), len(bd.hs)) for bd in partition)


def select_bidomain(partition: list[Bidomain]) -> int:
    """Index of the bidomain with the smallest larger side; first wins ties."""
    if not partition:
        raise ValueError("cannot select from an empty partition")
    return min(range(len(partition)), key=lambda i: max(len(partition[i].gs), len(partition[i].hs)))


def select_vertex(bd: Bidomain, g: Graph) -> int:
    """Branching vertex: maximum degree in G, ties to the lowest id."""
    return max(bd.gs, key=lambda v: (g.degree(v), -v))


def order_values(bd: Bidomain, h: Graph, classes_h: SymmetryClasses) -> list[int]:
    """Candidate values of the bidomain in the fixed value order."""
    return sorted(bd.hs, key=lambda u: (-h.degree(u), classes_h.class_id[u], u))


def var_sym_prunable(
    mapping: list[tuple[int, int | None]],
    v: int,
    u: int | None,
    classes_g: SymmetryClasses,
    value_rank: list[int],
) -> bool:
    """Candidate (v, u) loses to a swap with an earlier interchangeable pair.

    True iff some (v', u') in the mapping has v' interchangeable with v and
    u strictly smaller than u' in the value order (None largest): exchanging
    the two values would give an equivalent branch that sorts earlier.
    """
    cid = classes_g.class_id[v]
    if len(classes_g.class_members[cid]) < 2:
        return False
    bot = len(value_rank)
    ur = bot if u is None else value_rank[u]
    for pv, pu in mapping:
        if pv != v and classes_g.class_id[pv] == cid:
            if ur < (bot if pu is None else value_rank[pu]):
                return True
    return False


def val_sym_prunable(bd: Bidomain, u: int, classes_h: SymmetryClasses) -> bool:
    """An interchangeable candidate earlier in the value order is still here.

    Interchangeable vertices share degree and class id, so among them the
    value order reduces to vertex id.
    """
    cid = classes_h.class_id[u]
    if len(classes_h.class_members[cid]) < 2:
        return False
    return any(w != u and w < u and classes_h.class_id[w] == cid for w in bd.hs)


def refine_partition(
    partition: list[Bidomain], v: int, u: int, g: Graph, h: Graph
) -> list[Bidomain]:
    """Split every bidomain by adjacency to the new pair (v, u).

    Expects v and u to have been removed from their bidomain already. For
    directed graphs each side splits four ways, keyed by the (outgoing,
    incoming) edge pattern; children with an empty side are dropped. Bucket
    order (no-edge first) fixes the indices later selections depend on.
    """
    out = []
    nbuckets = 4 if g.directed else 2
    for bd in partition:
        gb: list[list[int]] = [[] for _ in range(nbuckets)]
        hb: list[list[int]] = [[] for _ in range(nbuckets)]
        for w in bd.gs:
            gb[_bucket(g, v, w)].append(w)
        for y in bd.hs:
            hb[_bucket(h, u, y)].append(y)
        for k in range(nbuckets):
            if gb[k] and hb[k]:
                out.append(Bidomain(gb[k], hb[k]))
    return out


def _bucket(g: Graph, v: int, w: int) -> int:
    if not g.directed:
        return (g.out_bits[v] >> w) & 1
    return (((g.out_bits[v] >> w) & 1) << 1) | ((g.in_bits[v] >> w) & 1)


class _Timeout(Exception):
    pass


class _Engine:
    """Flat-array implementation of the search.

    All bidomains are (start, length) slices into two shared vertex arrays.
    Refinement permutes vertices only inside the parent's slices, so every
    ancestor's view stays valid without any restore work on backtrack; the
    one in-place mutation (dropping the branching vertex) parks it just past
    the live region, still inside the parent slice.
    """

    def __init__(self, g, h, classes_g, classes_h, config, t0):
        self.g_out = g.out_bits
        self.g_in = g.in_bits
        self.h_out = h.out_bits
        self.h_in = h.in_bits
        self.directed = g.directed
        self.gdeg = [g.degree(v) for v in range(g.n)]
        self.gclass = classes_g.class_id
        self.hclass = classes_h.class_id
        self.g_peers = [len(classes_g.peers(v)) > 1 for v in range(g.n)]
        self.rank = value_order_ranks(h, classes_h)
        self.bot_rank = h.n
        self.use_var = config.var_sym
        self.use_val = config.val_sym
        self.t0 = t0
        self.deadline = None if config.timeout is None else t0 + config.timeout
        self.check_interval = config.branch_check_interval
        self._tick = 1

        parts = initial_partition(g, h)
        self.left = []
        self.right = []
        self.root_bds = []
        for bd in parts:
            self.root_bds.append([len(self.left), len(self.right), len(bd.gs), len(bd.hs)])
            self.left.extend(bd.gs)
            self.right.extend(bd.hs)

        self.mapping: list[tuple[int, int | None]] = []
        self.match_count = 0
        self.best: list[tuple[int, int]] = []
        self.best_size = 0
        self.branches = 0
        self.bound_prunes = 0
        self.var_sym_prunes = 0
        self.val_sym_prunes = 0
        self.time_to_best = 0.0
        self.branches_to_best = 0

    def run(self) -> bool:
        try:
            self._search(self.root_bds)
            return True
        except _Timeout:
            return False

    def _search(self, bds):
        self.branches += 1
        self._tick -= 1
        if self._tick <= 0:
            self._tick = self.check_interval
            if self.deadline is not None and perf_counter() >= self.deadline:
                raise _Timeout

        mc = self.match_count
        if mc > self.best_size:
            self.best_size = mc
            self.best = [p for p in self.mapping if p[1] is not None]
            self.time_to_best = perf_counter() - self.t0
            self.branches_to_best = self.branches

        bound = mc
        for bd in bds:
            bound += bd[2] if bd[2] < bd[3] else bd[3]
        if bound <= self.best_size:
            self.bound_prunes += 1
            return

        best_i = 0
        best_k = 1 << 60
        for i, bd in enumerate(bds):
            k = bd[2] if bd[2] >= bd[3] else bd[3]
            if k < best_k:
                best_k = k
                best_i = i
        bd = bds[best_i]
        l, r, ll, rl = bd

        left = self.left
        gdeg = self.gdeg
        vpos = l
        v = left[l]
        for i in range(l + 1, l + ll):
            w = left[i]
            if gdeg[w] > gdeg[v] or (gdeg[w] == gdeg[v] and w < v):
                v = w
                vpos = i
        last = l + ll - 1
        left[vpos] = left[last]
        left[last] = v
        bd[2] = ll - 1

        rank = self.rank
        var_bound = -1
        if self.use_var and self.g_peers[v]:
            cls = self.gclass[v]
            gclass = self.gclass
            for pv, pu in self.mapping:
                if gclass[pv] == cls:
                    rk = self.bot_rank if pu is None else rank[pu]
                    if rk > var_bound:
                        var_bound = rk

        cands = sorted(self.right[r : r + rl], key=rank.__getitem__)
        hclass = self.hclass
        use_val = self.use_val
        mapping = self.mapping
        prev_class = -1
        for u in cands:
            ucls = hclass[u]
            if var_bound >= 0 and rank[u] < var_bound:
                self.var_sym_prunes += 1
                prev_class = ucls
                continue
            if use_val and ucls == prev_class:
                # an interchangeable candidate was first in this bidomain
                self.val_sym_prunes += 1
                continue
            prev_class = ucls
            mapping.append((v, u))
            self.match_count = mc + 1
            self._search(self._refine(bds, v, u))
            mapping.pop()
            self.match_count = mc

        mapping.append((v, None))
        if bd[2] == 0:
            self._search([b for b in bds if b is not bd])
        else:
            self._search(bds)
        mapping.pop()

    def _refine(self, bds, v, u):
        left = self.left
        right = self.right
        new_bds = []
        if not self.directed:
            g_adj = self.g_out[v]
            h_adj = self.h_out[u]
            for bd in bds:
                l, r, ll, rl = bd
                g0 = []
                g1 = []
                for i in range(l, l + ll):
                    w = left[i]
                    if (g_adj >> w) & 1:
                        g1.append(w)
                    else:
                        g0.append(w)
                h0 = []
                h1 = []
                had_u = False
                for i in range(r, r + rl):
                    y = right[i]
                    if y == u:
                        had_u = True
                    elif (h_adj >> y) & 1:
                        h1.append(y)
                    else:
                        h0.append(y)
                pos = l
                for w in g0:
                    left[pos] = w
                    pos += 1
                for w in g1:
                    left[pos] = w
                    pos += 1
                pos = r
                for y in h0:
                    right[pos] = y
                    pos += 1
                for y in h1:
                    right[pos] = y
                    pos += 1
                if had_u:
                    right[pos] = u
                if g0 and h0:
                    new_bds.append([l, r, len(g0), len(h0)])
                if g1 and h1:
                    new_bds.append([l + len(g0), r + len(h0), len(g1), len(h1)])
        else:
            g_o, g_i = self.g_out[v], self.g_in[v]
            h_o, h_i = self.h_out[u], self.h_in[u]
            for bd in bds:
                l, r, ll, rl = bd
                gb = ([], [], [], [])
                for i in range(l, l + ll):
                    w = left[i]
                    gb[(((g_o >> w) & 1) << 1) | ((g_i >> w) & 1)].append(w)
                hb = ([], [], [], [])
                had_u = False
                for i in range(r, r + rl):
                    y = right[i]
                    if y == u:
                        had_u = True
                    else:
                        hb[(((h_o >> y) & 1) << 1) | ((h_i >> y) & 1)].append(y)
                pos = l
                goff = [0, 0, 0, 0]
                for k in range(4):
                    goff[k] = pos
                    for w in gb[k]:
                        left[pos] = w
                        pos += 1
                pos = r
                hoff = [0, 0, 0, 0]
                for k in range(4):
                    hoff[k] = pos
                    for y in hb[k]:
                        right[pos] = y
                        pos += 1
                if had_u:
                    right[pos] = u
                for k in range(4):
                    if gb[k] and hb[k]:
                        new_bds.append([goff[k], hoff[k], len(gb[k]), len(hb[k])])
        return new_bds


def solve(g: Graph, h: Graph, config: SolverConfig | None = None) -> Solution:
    """Find a maximum common induced subgraph of g and h.

    Interchangeability classes for both graphs are computed here, inside the
    measured solve, and drive the two pruning rules when enabled. On timeout
    the incumbent found so far is returned with ``stats.completed`` false.
    """
    if config is None:
        config = SolverConfig()
    if g.n == 0 or h.n == 0:
        raise ValueError("solve requires non-empty graphs")
    if g.directed != h.directed:
        raise ValueError("graphs must agree on directedness")

    t0 = perf_counter()
    classes_g = compute_symmetry_classes(g)
    classes_h = compute_symmetry_classes(h)
    engine = _Engine(g, h, classes_g, classes_h, config, t0)
    completed = engine.run()
    stats = SearchStats(
        branches=engine.branches,
        bound_prunes=engine.bound_prunes,
        var_sym_prunes=engine.var_sym_prunes,
        val_sym_prunes=engine.val_sym_prunes,
        incumbent_size=engine.best_size,
        time_to_best=engine.time_to_best,
        branches_to_best=engine.branches_to_best,
        completed=completed,
    )
    return Solution(mapping=list(engine.best), stats=stats)
