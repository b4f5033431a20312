"""Small labeled simple graphs on up to 16 vertices, bitset adjacency.

Every induced-subgraph loop is a word-level mask operation, which keeps
exhaustive searches (independence number, minimum induced maximum degree,
subgraph embedding) trivial at this scale.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .sequences import DegreeSequence

MAX_VERTICES = 16


class SmallGraph:
    """Labeled simple graph; vertices are 0..k-1, adjacency stored as masks."""

    __slots__ = ("k", "adj")

    def __init__(self, k: int, edges: Iterable[Tuple[int, int]] = ()):
        if k < 0:
            raise ValueError("vertex count must be nonnegative")
        if k > MAX_VERTICES:
            raise ValueError(f"vertex count {k} exceeds cap {MAX_VERTICES}")
        adj = [0] * k
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < k and 0 <= v < k):
                raise ValueError(f"edge ({u},{v}) out of range for k={k}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("SmallGraph is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, SmallGraph) and self.k == other.k and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.k, self.adj))

    def __repr__(self) -> str:
        return f"SmallGraph(k={self.k}, edges={self.edges()})"

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for u in range(self.k):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> Tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(self.degrees())

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def is_complete(self) -> bool:
        return self.edge_count() == self.k * (self.k - 1) // 2

    def induced(self, vertices: Sequence[int]) -> "SmallGraph":
        """Induced subgraph, relabeled by the sorted order of ``vertices``."""
        vs = sorted(set(vertices))
        rank = {v: i for i, v in enumerate(vs)}
        edges = [
            (rank[u], rank[v])
            for u, v in combinations(vs, 2)
            if self.has_edge(u, v)
        ]
        return SmallGraph(len(vs), edges)

    def relabel(self, perm: Sequence[int]) -> "SmallGraph":
        """Image under the permutation vertex i -> perm[i]."""
        return SmallGraph(self.k, [(perm[u], perm[v]) for u, v in self.edges()])

    def with_edges(self, added: Iterable[Tuple[int, int]] = (),
                   removed: Iterable[Tuple[int, int]] = ()) -> "SmallGraph":
        cur = {frozenset(e) for e in self.edges()}
        for e in removed:
            fe = frozenset(e)
            if fe not in cur:
                raise ValueError(f"edge {tuple(e)} not present")
            cur.discard(fe)
        for e in added:
            fe = frozenset(e)
            if fe in cur:
                raise ValueError(f"edge {tuple(e)} already present")
            cur.add(fe)
        return SmallGraph(self.k, [tuple(e) for e in cur])


# ---------------------------------------------------------------------------
# Constructors


def complete_graph(n: int) -> SmallGraph:
    return SmallGraph(n, combinations(range(n), 2))


def empty_graph(n: int) -> SmallGraph:
    return SmallGraph(n)


def cycle_graph(n: int) -> SmallGraph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return SmallGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SmallGraph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return SmallGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(r: int, s: int) -> SmallGraph:
    return SmallGraph(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def complete_split(r: int, t: int) -> SmallGraph:
    """Clique of order r fully joined to an independent set of order t."""
    return join(complete_graph(r), empty_graph(t))


def double_star(b1: int, b2: int) -> SmallGraph:
    """Two adjacent centers with b1 and b2 pendant leaves.

    Vertex 0 is the center of degree b1 + 1, vertex 1 the center of degree
    b2 + 1; leaves of vertex 0 come first.
    """
    if b1 < 0 or b2 < 0:
        raise ValueError("leaf counts must be nonnegative")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(b1)]
    edges += [(1, 2 + b1 + i) for i in range(b2)]
    return SmallGraph(b1 + b2 + 2, edges)


def friendship_graph(t: int) -> SmallGraph:
    """t triangles sharing vertex 0."""
    if t < 0:
        raise ValueError("triangle count must be nonnegative")
    edges = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return SmallGraph(2 * t + 1, edges)


def join(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    """Disjoint union plus all edges between the two sides; g comes first."""
    k = g.k + h.k
    edges = list(g.edges())
    edges += [(g.k + u, g.k + v) for u, v in h.edges()]
    edges += [(u, g.k + v) for u in range(g.k) for v in range(h.k)]
    return SmallGraph(k, edges)


def disjoint_union(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    edges = list(g.edges()) + [(g.k + u, g.k + v) for u, v in h.edges()]
    return SmallGraph(g.k + h.k, edges)


def complement(g: SmallGraph) -> SmallGraph:
    edges = [
        (u, v) for u, v in combinations(range(g.k), 2) if not g.has_edge(u, v)
    ]
    return SmallGraph(g.k, edges)


# ---------------------------------------------------------------------------
# Invariants


@lru_cache(maxsize=None)
def independence_number(g: SmallGraph) -> int:
    """Exact maximum independent set size by branch and bound."""
    if g.k == 0:
        return 0
    adj = g.adj
    best = 0

    def grow(avail: int, size: int) -> None:
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if not avail:
            best = max(best, size)
            return
        # branch on a vertex of maximum degree within the candidate set
        v = max(_bits(avail), key=lambda u: (adj[u] & avail).bit_count())
        grow(avail & ~(adj[v] | (1 << v)), size + 1)
        grow(avail & ~(1 << v), size)

    grow((1 << g.k) - 1, 0)
    return best


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def nabla(h: SmallGraph, i: int) -> int:
    """Minimum over all order-i induced subgraphs of the maximum degree.

    Defined only for alpha(h)+1 <= i <= k: below that range an independent
    set would force the value to 0.
    """
    a = independence_number(h)
    if not a + 1 <= i <= h.k:
        raise ValueError(f"order {i} outside valid range {a + 1}..{h.k}")
    best = h.k
    for subset in combinations(range(h.k), i):
        mask = 0
        for v in subset:
            mask |= 1 << v
        delta = max((h.adj[v] & mask).bit_count() for v in subset)
        if delta < best:
            best = delta
            if best == 1:
                # cannot reach 0 in this range
                break
    return best


def deleted_family(h: SmallGraph, t: int, dedup: bool = False) -> Iterator[SmallGraph]:
    """Induced subgraphs obtained by deleting exactly t vertices.

    With ``dedup`` one representative per isomorphism class is yielded;
    by default every labeled (k-t)-subset produces a graph.
    """
    if not 0 <= t < h.k:
        raise ValueError(f"deletion count {t} out of range 0..{h.k - 1}")
    seen: List[SmallGraph] = []
    for subset in combinations(range(h.k), h.k - t):
        sub = h.induced(subset)
        if dedup:
            if any(is_isomorphic(sub, other) for other in seen):
                continue
            seen.append(sub)
        yield sub


def one_edge_set_exists(h: SmallGraph, size: int) -> bool:
    """True iff some ``size``-subset of vertices induces exactly one edge."""
    if not 1 <= size <= h.k:
        raise ValueError(f"subset size {size} out of range 1..{h.k}")
    return find_one_edge_set(h, size) is not None


def find_one_edge_set(h: SmallGraph, size: int) -> Optional[Tuple[int, ...]]:
    """First vertex subset of the given size inducing exactly one edge."""
    for subset in combinations(range(h.k), size):
        mask = 0
        for v in subset:
            mask |= 1 << v
        count = sum((h.adj[v] & mask).bit_count() for v in subset) // 2
        if count == 1:
            return subset
    return None


# ---------------------------------------------------------------------------
# Embedding and isomorphism


def find_embedding(pattern: SmallGraph, host: SmallGraph) -> Optional[Dict[int, int]]:
    """Injective vertex map carrying every pattern edge to a host edge.

    Backtracking with degree-sorted pruning; pattern vertices are placed
    most-constrained first. Returns None when no embedding exists.
    """
    if pattern.k > host.k:
        return None
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    order: List[int] = []
    placed_mask = 0
    # order: repeatedly take the unplaced vertex with most placed neighbors,
    # breaking ties toward high degree
    while len(order) < pattern.k:
        u = max(
            (v for v in range(pattern.k) if not (placed_mask >> v) & 1),
            key=lambda v: ((pattern.adj[v] & placed_mask).bit_count(), pdeg[v]),
        )
        order.append(u)
        placed_mask |= 1 << u

    assignment: Dict[int, int] = {}
    used = 0

    def place(depth: int) -> bool:
        nonlocal used
        if depth == len(order):
            return True
        u = order[depth]
        need = pattern.adj[u]
        for w in range(host.k):
            if (used >> w) & 1 or hdeg[w] < pdeg[u]:
                continue
            ok = True
            m = need
            while m:
                low = m & -m
                nb = low.bit_length() - 1
                m ^= low
                if nb in assignment and not host.has_edge(assignment[nb], w):
                    ok = False
                    break
            if ok:
                assignment[u] = w
                used |= 1 << w
                if place(depth + 1):
                    return True
                used &= ~(1 << w)
                del assignment[u]
        return False

    return dict(assignment) if place(0) else None


def spanning_subgraph_of(h: SmallGraph, host: SmallGraph) -> bool:
    """True iff some bijection maps every edge of h to an edge of host."""
    if h.k != host.k:
        raise ValueError(f"order mismatch: {h.k} vs {host.k}")
    if h.edge_count() > host.edge_count():
        return False
    return find_embedding(h, host) is not None


def is_isomorphic(a: SmallGraph, b: SmallGraph) -> bool:
    if a.k != b.k or a.edge_count() != b.edge_count():
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    # equal order and edge count: an edge-preserving bijection is an isomorphism
    return find_embedding(a, b) is not None


@lru_cache(maxsize=None)
def canonical_key(g: SmallGraph) -> Tuple:
    """Hashable canonical form: minimum edge bitstring over relabelings.

    Exhaustive over permutations compatible with iterated degree
    refinement; exact for any order, intended for k <= 8 where the class
    sizes stay tiny.
    """
    k = g.k
    if k == 0:
        return (0,)
    classes = _refinement_classes(g)
    best = None
    for perm in _class_permutations(classes, k):
        code = 0
        for u, v in combinations(range(k), 2):
            code <<= 1
            if g.has_edge(perm[u], perm[v]):
                code |= 1
        if best is None or code < best:
            best = code
    return (k, best)


def _refinement_classes(g: SmallGraph) -> List[List[int]]:
    """Iterated neighbor-signature partition, ordered canonically."""
    sig = {v: (g.degree(v),) for v in range(g.k)}
    while True:
        new_sig = {}
        for v in range(g.k):
            nb = tuple(sorted(sig[u] for u in _bits(g.adj[v])))
            new_sig[v] = (sig[v], nb)
        # relabel signatures to compact canonical tokens
        ordered = sorted(set(new_sig.values()))
        token = {s: i for i, s in enumerate(ordered)}
        compact = {v: (token[new_sig[v]],) for v in range(g.k)}
        if len(set(compact.values())) == len(set(sig.values())):
            sig = compact
            break
        sig = compact
    groups: Dict[Tuple, List[int]] = {}
    for v in range(g.k):
        groups.setdefault(sig[v], []).append(v)
    return [groups[key] for key in sorted(groups)]


def _class_permutations(classes: List[List[int]], k: int) -> Iterator[List[int]]:
    """All vertex orders listing refinement classes in order."""
    def rec(idx: int, acc: List[int]) -> Iterator[List[int]]:
        if idx == len(classes):
            yield acc
            return
        for perm in permutations(classes[idx]):
            yield from rec(idx + 1, acc + list(perm))

    for order in rec(0, []):
        # order lists, for each slot position, which original vertex sits there
        yield order


# ---------------------------------------------------------------------------
# Edge-list file format: first line "n <k>", then "e <u> <v>" lines, 1-based.


def parse_graph_file(text: str) -> SmallGraph:
    k = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if k is not None:
                raise ValueError(f"line {lineno}: duplicate vertex-count line")
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'n <k>'")
            k = int(parts[1])
        elif parts[0] == "e":
            if k is None:
                raise ValueError(f"line {lineno}: edge before vertex count")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= k and 1 <= v <= k):
                raise ValueError(f"line {lineno}: vertex out of range 1..{k}")
            edges.append((u - 1, v - 1))
        else:
            raise ValueError(f"line {lineno}: unknown directive {parts[0]!r}")
    if k is None:
        raise ValueError("missing 'n <k>' line")
    return SmallGraph(k, edges)


def format_graph_file(g: SmallGraph) -> str:
    lines = [f"n {g.k}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
