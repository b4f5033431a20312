"""Ground-truth brute force at desk scale.

Exact potentially-H-graphic decisions, canonical realizations, and exact
potential numbers by exhaustive enumeration. The decision procedure:

* dominating heads (d1 = n-1) are stripped recursively, trading H for its
  one-vertex-deleted family, which keeps near-extremal sequences cheap;
* otherwise every degree-class-distinct k-subset of positions hosts every
  automorphism-distinct copy of H, and the leftover demands are realized
  by backtracking edge assignment avoiding the placed copy, pruned by
  Erdős–Gallai feasibility at each level.

Caps (n <= 10, k <= 8 by default) are explicit arguments; exceeding them
raises, never truncates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, combinations, permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .graphs import MAX_VERTICES, SmallGraph, canonical_key, find_embedding
from .sequences import DegreeSequence, is_graphic

DEFAULT_CAP_N = 10
DEFAULT_CAP_K = 8


class CapExceededError(ValueError):
    """Requested size exceeds the configured desk-scale cap."""


@dataclass(frozen=True)
class Realization:
    """Labeled realization: vertex i carries degree sequence term i."""

    graph: SmallGraph
    sequence: DegreeSequence

    def __post_init__(self):
        degs = self.graph.degrees()
        if tuple(degs) != self.sequence.terms:
            raise ValueError("vertex degrees do not match the sequence positionally")


@dataclass(frozen=True)
class PotentialCertificate:
    answer: bool
    embedding: Optional[Dict[int, int]] = None
    realization: Optional[Realization] = None
    exhausted: Optional[Dict[str, int]] = None

    def to_json_dict(self) -> Dict:
        out: Dict = {"potentially": self.answer}
        if self.embedding is not None:
            out["embedding"] = {str(u + 1): v + 1 for u, v in sorted(self.embedding.items())}
        if self.realization is not None:
            out["realizationEdges"] = [
                [u + 1, v + 1] for u, v in self.realization.graph.edges()
            ]
        if self.exhausted is not None:
            out["exhausted"] = dict(self.exhausted)
        return out


@dataclass(frozen=True)
class SigmaExact:
    n: int
    value: int
    extremal_sequences: Tuple[DegreeSequence, ...]

    def to_json_dict(self) -> Dict:
        return {
            "n": self.n,
            "value": self.value,
            "maximizers": [s.to_text() for s in self.extremal_sequences],
        }


# ---------------------------------------------------------------------------
# Realization construction


def canonical_realization(seq: DegreeSequence) -> Realization:
    """Havel–Hakimi construction: each pivot of maximum remaining demand
    connects to the next-highest demands; ties break toward lower index.

    Vertex 0 ends up adjacent to vertices 1..d1, so the maximum-degree
    vertex is adjacent to the d1 highest-degree others.
    """
    if not is_graphic(seq):
        raise ValueError(f"sequence {seq.to_text()} is not graphic")
    n = seq.n
    if n > MAX_VERTICES:
        raise CapExceededError(f"realization on {n} vertices exceeds cap {MAX_VERTICES}")
    rem = list(seq.terms)
    edges: List[Tuple[int, int]] = []
    while True:
        u = min(range(n), key=lambda v: (-rem[v], v), default=None)
        if u is None or rem[u] == 0:
            break
        targets = sorted(
            (v for v in range(n) if v != u and rem[v] > 0),
            key=lambda v: (-rem[v], v),
        )[: rem[u]]
        if len(targets) < rem[u]:
            raise AssertionError("Havel–Hakimi ran out of targets on graphic input")
        for v in targets:
            edges.append((u, v))
            rem[v] -= 1
        rem[u] = 0
    return Realization(graph=SmallGraph(n, edges), sequence=seq)


def two_switch(real: Realization, edge1: Tuple[int, int], edge2: Tuple[int, int]) -> Realization:
    """Exchange edges ab, cd for ac, bd; the degree sequence is unchanged.

    Preconditions: ab and cd are edges, ac and bd are nonedges, and the
    four endpoints are pairwise distinct in the required pattern.
    """
    a, b = edge1
    c, d = edge2
    g = real.graph
    if len({a, b}) != 2 or len({c, d}) != 2:
        raise ValueError("switch endpoints must be distinct within each edge")
    if a == c or b == d or a == d or b == c:
        raise ValueError("switch requires four distinct vertices in the crossing pattern")
    if not g.has_edge(a, b) or not g.has_edge(c, d):
        raise ValueError("both switch pairs must currently be edges")
    if g.has_edge(a, c) or g.has_edge(b, d):
        raise ValueError("replacement pairs must currently be nonedges")
    new_graph = g.with_edges(added=[(a, c), (b, d)], removed=[(a, b), (c, d)])
    return Realization(graph=new_graph, sequence=real.sequence)


# ---------------------------------------------------------------------------
# Fast graphicality on raw descending tuples (hot path)


@lru_cache(maxsize=1 << 18)
def _graphic_desc(terms: Tuple[int, ...]) -> bool:
    n = len(terms)
    if n == 0:
        return True
    if sum(terms) % 2 or terms[0] > n - 1:
        return False
    prefix = [0] + list(accumulate(terms))
    m = n  # running count of terms >= p; terms is nonincreasing
    for p in range(1, n + 1):
        while m > 0 and terms[m - 1] < p:
            m -= 1
        capped = max(m - p, 0)
        start = max(m, p)
        if prefix[p] > p * (p - 1) + p * capped + (prefix[n] - prefix[start]):
            return False
    return True


# ---------------------------------------------------------------------------
# H preprocessing


@lru_cache(maxsize=None)
def _d1_classes(h: SmallGraph) -> Tuple[Tuple[SmallGraph, int, Tuple[int, ...]], ...]:
    """One-vertex-deleted subgraphs up to isomorphism.

    Each entry is (subgraph, deleted vertex, vertex map): position u of the
    map gives the subgraph vertex hosting h's vertex u (deleted vertex
    maps to -1).
    """
    out = []
    seen = set()
    for v in range(h.k):
        kept = [u for u in range(h.k) if u != v]
        sub = h.induced(kept)
        key = canonical_key(sub)
        if key in seen:
            continue
        seen.add(key)
        vmap = tuple(-1 if u == v else (u if u < v else u - 1) for u in range(h.k))
        out.append((sub, v, vmap))
    return tuple(out)


@lru_cache(maxsize=None)
def _distinct_copies(h: SmallGraph) -> Tuple[Tuple[Tuple[Tuple[int, int], ...], Tuple[int, ...]], ...]:
    """Distinct labeled copies of h on slots 0..k-1, one per edge set.

    Each entry is (sorted edge tuple, vertex map h-vertex -> slot). The
    count is k!/|Aut(h)|; enumeration collapses automorphic duplicates.
    """
    k = h.k
    hedges = h.edges()
    seen = set()
    out = []
    for perm in permutations(range(k)):
        edges = frozenset(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in hedges
        )
        if edges in seen:
            continue
        seen.add(edges)
        out.append((tuple(sorted(edges)), tuple(perm)))
    return tuple(out)


@lru_cache(maxsize=None)
def _sorted_degrees(h: SmallGraph) -> Tuple[int, ...]:
    return tuple(sorted(h.degrees(), reverse=True))


# ---------------------------------------------------------------------------
# Residual realizability: demands + forbidden pairs


def _solve_residual(demands: List[int], forb: Sequence[int]) -> Optional[List[Tuple[int, int]]]:
    """Edge set realizing ``demands`` while avoiding forbidden pairs.

    Pivot on the vertex of maximum remaining demand; candidate partners
    collapse into interchangeability classes (equal demand, equal
    forbidden-partner set among active vertices), and only class counts
    are branched on. Erdős–Gallai feasibility prunes each node.
    """
    n = len(demands)
    edges: List[Tuple[int, int]] = []

    def rec() -> bool:
        u = -1
        du = 0
        for i in range(n):
            if demands[i] > du:
                u, du = i, demands[i]
        if du == 0:
            return True
        active_mask = 0
        for v in range(n):
            if demands[v] > 0:
                active_mask |= 1 << v
        cands = [
            v for v in range(n)
            if v != u and demands[v] > 0 and not (forb[u] >> v) & 1
        ]
        if len(cands) < du:
            return False
        classes: Dict[Tuple[int, int], List[int]] = {}
        for v in cands:
            classes.setdefault((demands[v], forb[v] & active_mask), []).append(v)
        items = sorted(classes.items(), key=lambda kv: -kv[0][0])
        members = [m for _, m in items]
        suffix_cap = [0] * (len(members) + 1)
        for i in range(len(members) - 1, -1, -1):
            suffix_cap[i] = suffix_cap[i + 1] + len(members[i])

        def choose(ci: int, remaining: int, chosen: List[int]) -> bool:
            if remaining == 0:
                demands[u] = 0
                for v in chosen:
                    demands[v] -= 1
                if _graphic_desc(tuple(sorted(demands, reverse=True))) and rec():
                    edges.extend((u, v) for v in chosen)
                    return True
                for v in chosen:
                    demands[v] += 1
                demands[u] = du
                return False
            if ci == len(members) or suffix_cap[ci] < remaining:
                return False
            group = members[ci]
            for take in range(min(len(group), remaining), -1, -1):
                if choose(ci + 1, remaining - take, chosen + group[:take]):
                    return True
            return False

        return choose(0, du, [])

    return edges if rec() else None


# ---------------------------------------------------------------------------
# Full placement search


_SEARCH_STATS = {"subsets": 0, "patterns": 0, "residual_calls": 0}


def _full_search(terms: Tuple[int, ...], h: SmallGraph) -> Optional[Tuple[Dict[int, int], List[Tuple[int, int]]]]:
    """Search all degree-distinct position subsets and all copies of h.

    Returns (embedding, realization edge list) or None. Complete on its
    own: any realization containing a copy of h induces a successful
    placement.
    """
    n = len(terms)
    k = h.k
    hdegs = _sorted_degrees(h)
    copies = _distinct_copies(h)

    # contiguous runs of equal degree
    runs: List[Tuple[int, int]] = []  # (start, count)
    i = 0
    while i < n:
        j = i
        while j < n and terms[j] == terms[i]:
            j += 1
        runs.append((i, j - i))
        i = j

    def subsets(run_idx: int, need: int, acc: List[int]) -> Iterator[List[int]]:
        if need == 0:
            yield acc
            return
        if run_idx == len(runs):
            return
        start, count = runs[run_idx]
        remaining_capacity = sum(c for _, c in runs[run_idx:])
        if remaining_capacity < need:
            return
        for take in range(min(count, need), -1, -1):
            yield from subsets(run_idx + 1, need - take, acc + list(range(start, start + take)))

    for positions in subsets(0, k, []):
        _SEARCH_STATS["subsets"] += 1
        if any(terms[p] < hdegs[idx] for idx, p in enumerate(positions)):
            continue
        for slot_edges, vmap in copies:
            _SEARCH_STATS["patterns"] += 1
            patdeg = [0] * k
            for a, b in slot_edges:
                patdeg[a] += 1
                patdeg[b] += 1
            demands = list(terms)
            ok = True
            for slot in range(k):
                demands[positions[slot]] -= patdeg[slot]
                if demands[positions[slot]] < 0:
                    ok = False
            if not ok:
                continue
            forb = [0] * n
            placed = []
            for a, b in slot_edges:
                pa, pb = positions[a], positions[b]
                forb[pa] |= 1 << pb
                forb[pb] |= 1 << pa
                placed.append((pa, pb))
            _SEARCH_STATS["residual_calls"] += 1
            rest = _solve_residual(demands, forb)
            if rest is not None:
                embedding = {u: positions[vmap[u]] for u in range(k)}
                return embedding, placed + rest
    return None


# ---------------------------------------------------------------------------
# The decision procedure


_DECIDE_CACHE: Dict[Tuple, bool] = {}


def _decide(terms: Tuple[int, ...], h: SmallGraph, use_yin_li: bool = True) -> bool:
    key = (terms, canonical_key(h), use_yin_li)
    hit = _DECIDE_CACHE.get(key)
    if hit is not None:
        return hit
    n = len(terms)
    k = h.k
    if h.edge_count() == 0:
        ans = n >= k
    elif n < k:
        ans = False
    else:
        hdegs = _sorted_degrees(h)
        if any(terms[i] < hdegs[i] for i in range(k)):
            ans = False
        elif use_yin_li and _yin_li_terms(terms, k):
            # a clique on k vertices contains every order-k graph
            ans = True
        elif terms[0] == n - 1:
            lay = tuple(t - 1 for t in terms[1:])
            ans = any(_decide(lay, sub, use_yin_li) for sub, _, _ in _d1_classes(h))
        else:
            real = canonical_realization(DegreeSequence(terms))
            if find_embedding(h, real.graph) is not None:
                ans = True
            else:
                ans = _full_search(terms, h) is not None
    _DECIDE_CACHE[key] = ans
    return ans


def _certify(terms: Tuple[int, ...], h: SmallGraph) -> Tuple[Dict[int, int], Realization]:
    """Embedding and realization for a sequence known to be potentially
    h-graphic; mirrors the decision recursion."""
    n = len(terms)
    k = h.k
    seq = DegreeSequence(terms)
    if h.edge_count() == 0:
        real = canonical_realization(seq)
        return {u: u for u in range(k)}, real
    if terms and terms[0] == n - 1:
        lay = tuple(t - 1 for t in terms[1:])
        for sub, deleted, vmap in _d1_classes(h):
            if _decide(lay, sub):
                sub_emb, sub_real = _certify(lay, sub)
                edges = [(0, j + 1) for j in range(n - 1)]
                edges += [(u + 1, v + 1) for u, v in sub_real.graph.edges()]
                real = Realization(graph=SmallGraph(n, edges), sequence=seq)
                embedding = {
                    u: 0 if u == deleted else sub_emb[vmap[u]] + 1 for u in range(k)
                }
                return embedding, real
        raise AssertionError("certify: recursion found no deleted-subgraph witness")
    real = canonical_realization(seq)
    emb = find_embedding(h, real.graph)
    if emb is not None:
        return emb, real
    found = _full_search(terms, h)
    if found is None:
        raise AssertionError("certify called on a non-potentially-graphic sequence")
    embedding, edges = found
    return embedding, Realization(graph=SmallGraph(n, edges), sequence=seq)


def potentially(
    seq: DegreeSequence,
    h: SmallGraph,
    cap_n: int = DEFAULT_CAP_N,
    cap_k: int = DEFAULT_CAP_K,
) -> PotentialCertificate:
    """Exact decision: does some realization of ``seq`` contain ``h``?

    Returns an embedding plus a witnessing realization when true, and the
    search statistics when false.
    """
    if not is_graphic(seq):
        raise ValueError(f"sequence {seq.to_text()} is not graphic")
    if seq.n > cap_n:
        raise CapExceededError(f"length {seq.n} exceeds cap {cap_n}")
    if h.k > cap_k:
        raise CapExceededError(f"graph order {h.k} exceeds cap {cap_k}")
    for key in _SEARCH_STATS:
        _SEARCH_STATS[key] = 0
    if not _decide(seq.terms, h):
        return PotentialCertificate(answer=False, exhausted=dict(_SEARCH_STATS))
    embedding, real = _certify(seq.terms, h)
    for u, v in h.edges():
        if not real.graph.has_edge(embedding[u], embedding[v]):
            raise AssertionError("certificate embedding does not carry an edge")
    return PotentialCertificate(answer=True, embedding=embedding, realization=real)


def _yin_li_terms(terms: Tuple[int, ...], k: int) -> bool:
    n = len(terms)
    if k < 1 or n < k or terms[k - 1] < k - 1:
        return False
    if all(terms[i - 1] >= 2 * (k - 1) - i for i in range(1, k - 1)):
        return True
    return n >= 2 * k and terms[2 * k - 1] >= k - 2


def yin_li_kk(seq: DegreeSequence, k: int) -> bool:
    """Sufficient test for potentially-clique-graphic (never a refutation).

    True iff d_k >= k-1 together with either d_i >= 2(k-1)-i for all
    i <= k-2, or d_2k >= k-2. False only means undecided.
    """
    return _yin_li_terms(seq.terms, k)


def potentially_split(
    seq: DegreeSequence,
    r: int,
    t: int,
    cap_n: int = DEFAULT_CAP_N,
) -> bool:
    """Exact decision for the complete split graph, clique order r joined
    to an independent set of order t.

    Only the placement with the clique on positions 1..r and the
    independent set on positions r+1..r+t is searched; that placement is
    always achievable when any is.
    """
    if not is_graphic(seq):
        raise ValueError(f"sequence {seq.to_text()} is not graphic")
    if seq.n > cap_n:
        raise CapExceededError(f"length {seq.n} exceeds cap {cap_n}")
    if r < 0 or t < 0:
        raise ValueError("split parameters must be nonnegative")
    n = seq.n
    if r + t > n:
        return False
    terms = seq.terms
    # degree sufficiency for the fixed placement
    if any(terms[i] < r - 1 + t for i in range(r)):
        return False
    if any(terms[i] < r for i in range(r, r + t)):
        return False
    demands = list(terms)
    forb = [0] * n
    placed = []
    for a, b in combinations(range(r), 2):
        placed.append((a, b))
    for a in range(r):
        for b in range(r, r + t):
            placed.append((a, b))
    for a, b in placed:
        demands[a] -= 1
        demands[b] -= 1
        forb[a] |= 1 << b
        forb[b] |= 1 << a
    if any(d < 0 for d in demands):
        return False
    return _solve_residual(demands, forb) is not None


# ---------------------------------------------------------------------------
# Exhaustive sequence enumeration and exact potential numbers


def enumerate_graphic_sequences(n: int, total: Optional[int] = None) -> Iterator[DegreeSequence]:
    """All nonincreasing graphic sequences of length n (terms <= n-1).

    With ``total`` fixed, only sequences of that sum are produced, in
    lexicographically decreasing order. Without it, sums descend from
    n(n-1) to 0.
    """
    if n < 0:
        raise ValueError("length must be nonnegative")
    if total is not None:
        totals = [total] if total % 2 == 0 and 0 <= total <= n * (n - 1) else []
    else:
        totals = list(range(n * (n - 1), -1, -2))
    for s in totals:
        for parts in _partitions_desc(s, n, max(n - 1, 0)):
            if _graphic_desc(parts):
                yield DegreeSequence(parts)


def _partitions_desc(remaining: int, slots: int, bound: int) -> Iterator[Tuple[int, ...]]:
    if slots == 0:
        if remaining == 0:
            yield ()
        return
    if remaining > slots * bound:
        return
    lo = -(-remaining // slots)
    for first in range(min(bound, remaining), lo - 1, -1):
        for rest in _partitions_desc(remaining - first, slots - 1, first):
            yield (first,) + rest


_SIGMA_CACHE: Dict[Tuple[SmallGraph, int], SigmaExact] = {}


def sigma_exact(
    h: SmallGraph,
    n: int,
    cap_n: int = DEFAULT_CAP_N,
    cap_k: int = DEFAULT_CAP_K,
    threads: int = 1,
) -> SigmaExact:
    """Exact potential number: the minimum even integer such that every
    graphic sequence of length n with at least that sum is potentially
    h-graphic; also returns every maximizing non-potential sequence.

    Scans sums downward, deciding every sequence at each level, and stops
    at the first level carrying a refutation.
    """
    if n > cap_n:
        raise CapExceededError(f"length {n} exceeds cap {cap_n}")
    if h.k > cap_k:
        raise CapExceededError(f"graph order {h.k} exceeds cap {cap_k}")
    if n < h.k:
        raise ValueError(f"length {n} below graph order {h.k}")
    cached = _SIGMA_CACHE.get((h, n))
    if cached is not None:
        return cached
    result = None
    for total in range(n * (n - 1), -1, -2):
        batch = list(enumerate_graphic_sequences(n, total))
        if not batch:
            continue
        decisions = _decide_batch(batch, h, threads)
        falses = tuple(s for s, ok in zip(batch, decisions) if not ok)
        if falses:
            result = SigmaExact(n=n, value=total + 2, extremal_sequences=falses)
            break
    if result is None:
        result = SigmaExact(n=n, value=0, extremal_sequences=())
    _SIGMA_CACHE[(h, n)] = result
    return result


def _decide_batch(batch: List[DegreeSequence], h: SmallGraph, threads: int) -> List[bool]:
    if threads <= 1 or len(batch) < 4 * threads:
        return [_decide(s.terms, h) for s in batch]
    from concurrent.futures import ProcessPoolExecutor

    payload = (h.k, tuple(h.edges()))
    chunks: List[List[Tuple[int, ...]]] = [[] for _ in range(threads)]
    for idx, s in enumerate(batch):
        chunks[idx % threads].append(s.terms)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(_decide_chunk, [(payload, chunk) for chunk in chunks]))
    merged: List[bool] = [False] * len(batch)
    for lane, lane_results in enumerate(results):
        for offset, value in enumerate(lane_results):
            merged[lane + offset * threads] = value
    return merged


def _decide_chunk(args) -> List[bool]:
    (k, edges), chunk = args
    h = SmallGraph(k, edges)
    return [_decide(terms, h) for terms in chunk]
