"""Executable form of the iterative near-threshold analysis.

The algorithm lays off small terms, then repeatedly strips the dominating
vertex of a canonical realization (deleting its non-neighbors first) and
re-floors the minimum term, building a clique joined onto the shrinking
remainder. Halting analysis either certifies a contained subgraph, points
at an extremal target sequence nearby, or declares the input potentially
graphic via one of the guard bounds.

The default cutoff f(k) = C(k, floor(k/2)) * 8k^2 exceeds any desk-scale
length, so step 1 would always halt immediately; ``f_override`` exists to
exercise the loop, and every trace records which cutoff was used. All
rational arithmetic is exact (fractions).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .graphs import (
    SmallGraph,
    complete_graph,
    complete_split,
    double_star,
    find_embedding,
    find_one_edge_set,
    independence_number,
    join,
    nabla,
)
from .oracle import (
    DEFAULT_CAP_K,
    DEFAULT_CAP_N,
    Realization,
    canonical_realization,
    potentially,
)
from .potential import profile, target_sequence, TargetSequence
from .sequences import DegreeSequence, degree_sufficient, is_graphic, l1_distance, layoff, layoff_batch_below

FOUND_H = "found_h"
FOUND_SPLIT = "found_split"
CLOSE_TO_TARGET = "close_to_target"
DECLARED_POTENTIAL = "declared_potential"
INCONCLUSIVE = "inconclusive"

REASON_INIT_GUARD = "init_guard"
REASON_STEP4_GUARD = "step4_guard"
REASON_EARLY_EXIT = "yin_li_early_exit"


def default_f(k: int) -> int:
    """Default step-1 cutoff: C(k, floor(k/2)) * 8k^2."""
    return math.comb(k, k // 2) * 8 * k * k


def delta_bound(epsilon: Fraction, k: int) -> Fraction:
    """Strict upper bound on delta used by the convergence argument."""
    return epsilon / (16 * k**3 + 48 * k**2 + (32 + epsilon) * k)


@dataclass(frozen=True)
class ProbeConfig:
    epsilon: Fraction = Fraction(1, 4)
    delta: Optional[Fraction] = None  # defaults to half the bound for (epsilon, k)
    f_override: Optional[int] = None
    oracle_fallback: bool = True
    cap_n: int = DEFAULT_CAP_N
    cap_k: int = DEFAULT_CAP_K

    def resolve(self, k: int) -> Tuple[Fraction, int, List[str]]:
        """Concrete (delta, f) for a graph of order k, plus warnings."""
        eps = Fraction(self.epsilon)
        if not 0 < eps < Fraction(1, 2):
            raise ValueError(f"epsilon must lie in (0, 1/2), got {eps}")
        warnings: List[str] = []
        bound = delta_bound(eps, k)
        if self.delta is None:
            delta = bound / 2
        else:
            delta = Fraction(self.delta)
            if delta <= 0:
                raise ValueError(f"delta must be positive, got {delta}")
            if delta >= bound:
                warnings.append(
                    f"delta {delta} is not below the convergence bound {bound}"
                )
            if delta >= Fraction(1, k):
                warnings.append(
                    f"delta {delta} >= 1/k makes the step-4 guard bound degenerate"
                )
        f = self.f_override if self.f_override is not None else default_f(k)
        if f < 1:
            raise ValueError(f"step-1 cutoff must be positive, got {f}")
        return delta, f, warnings


@dataclass(frozen=True)
class ProbeVerdict:
    kind: str
    subgraph: Optional[SmallGraph] = None
    embedding: Optional[Dict[int, int]] = None
    target: Optional[TargetSequence] = None
    distance: Optional[int] = None
    reason: Optional[str] = None
    verified: Optional[bool] = None

    def to_json_dict(self) -> Dict:
        out: Dict = {"verdict": self.kind}
        if self.subgraph is not None:
            out["subgraphOrder"] = self.subgraph.k
            out["subgraphEdges"] = [[u + 1, v + 1] for u, v in self.subgraph.edges()]
        if self.embedding is not None:
            out["embedding"] = {str(u + 1): v + 1 for u, v in sorted(self.embedding.items())}
        if self.target is not None:
            out["target"] = self.target.to_json_dict()
        if self.distance is not None:
            out["distance"] = self.distance
        if self.reason is not None:
            out["reason"] = self.reason
        if self.verified is not None:
            out["verified"] = self.verified
        return out


@dataclass
class IterationRecord:
    t: int
    n_t: int
    sequence: DegreeSequence
    sum_bound: Fraction
    sum_bound_ok: bool
    removed_nonneighbors: Optional[int] = None
    step3_laid_off: Optional[int] = None
    step4_laid_off: Optional[int] = None
    step4_threshold: Optional[int] = None
    halting_reason: Optional[str] = None

    def to_json_dict(self) -> Dict:
        return {
            "t": self.t,
            "nT": self.n_t,
            "sequence": self.sequence.to_text(),
            "sumBound": str(self.sum_bound),
            "sumBoundOk": self.sum_bound_ok,
            "removedNonneighbors": self.removed_nonneighbors,
            "step3LaidOff": self.step3_laid_off,
            "step4LaidOff": self.step4_laid_off,
            "step4Threshold": self.step4_threshold,
            "haltingReason": self.halting_reason,
        }


@dataclass
class ProbeTrace:
    n: int
    sigma: int
    epsilon: Fraction
    delta: Fraction
    f: int
    warnings: List[str]
    precondition_ok: bool
    init_threshold: Optional[int] = None
    init_laid_off: Optional[int] = None
    init_laid_off_sum: Optional[int] = None
    early_exit: bool = False
    iterations: List[IterationRecord] = field(default_factory=list)
    ell: Optional[int] = None
    final: Optional[Dict] = None
    verdict: Optional[ProbeVerdict] = None

    def removals_accounting(self) -> Dict[str, int]:
        """Bookkeeping of every removed term across the run."""
        init = self.init_laid_off or 0
        step2 = sum(r.removed_nonneighbors or 0 for r in self.iterations)
        step3 = sum(r.step3_laid_off or 0 for r in self.iterations)
        step4 = sum(r.step4_laid_off or 0 for r in self.iterations)
        return {
            "init": init,
            "step2": step2,
            "step3": step3,
            "step4": step4,
            "total": init + step2 + step3 + step4,
        }

    def shrinkage_bound_applicable(self, k: int, alpha: int) -> bool:
        """Whether the run's constants justify asserting the asymptotic
        shrinkage bound n - n_ell < (epsilon / 8k) n."""
        if 1 - k * self.delta <= 0:
            return False
        constant = (
            self.delta * (k * k + 3 * k + 2) / (1 - k * self.delta) * self.n
            + k * self.f
            + k
        )
        return constant <= Fraction(self.epsilon, 8 * k) * self.n

    def to_json_lines(self) -> List[str]:
        head = {
            "record": "config",
            "n": self.n,
            "sigma": self.sigma,
            "epsilon": str(self.epsilon),
            "delta": str(self.delta),
            "f": self.f,
            "warnings": list(self.warnings),
            "preconditionOk": self.precondition_ok,
            "earlyExit": self.early_exit,
            "initThreshold": self.init_threshold,
            "initLaidOff": self.init_laid_off,
            "initLaidOffSum": self.init_laid_off_sum,
        }
        lines = [json.dumps(head)]
        for rec in self.iterations:
            lines.append(json.dumps({"record": "iteration", **rec.to_json_dict()}))
        tail: Dict = {"record": "final", "ell": self.ell}
        if self.final is not None:
            tail.update(self.final)
        if self.verdict is not None:
            tail["verdict"] = self.verdict.to_json_dict()
        lines.append(json.dumps(tail))
        return lines


def _ceil_frac(x: Fraction) -> int:
    return math.ceil(x)


def _oracle_check(
    seq: DegreeSequence, target: SmallGraph, cfg: ProbeConfig
) -> Tuple[Optional[bool], Optional[Dict[int, int]], Optional[Realization]]:
    """Verify a claimed containment with the exact oracle when in range."""
    if not cfg.oracle_fallback or seq.n > cfg.cap_n or target.k > cfg.cap_k:
        return None, None, None
    cert = potentially(seq, target, cap_n=cfg.cap_n, cap_k=cfg.cap_k)
    return cert.answer, cert.embedding, cert.realization


def run_probe(
    seq: DegreeSequence, h: SmallGraph, cfg: ProbeConfig = ProbeConfig()
) -> Tuple[ProbeVerdict, ProbeTrace]:
    """Run the iteration on a near-threshold sequence; returns the verdict
    and a full per-iteration audit trace.

    Caller-facing guarantees: found_h, found_split, and declared_potential
    verdicts below the cap are always oracle-verified (a refuted claim
    degrades to inconclusive with the failed guard named), and
    close_to_target names the extremal target it is near.
    """
    if not is_graphic(seq):
        raise ValueError(f"sequence {seq.to_text()} is not graphic")
    prof = profile(h)
    k, alpha, b_h = prof.k, prof.alpha, prof.b_h
    i_star, nab = prof.i_star, prof.nabla_table[prof.i_star]
    delta, f, warnings = cfg.resolve(k)

    n = seq.n
    sigma = seq.sum()
    precondition_ok = sigma >= (prof.sigma_tilde - delta) * n
    if not precondition_ok:
        warnings = warnings + [
            f"sum {sigma} below (sigma_tilde - delta) * n = {(prof.sigma_tilde - delta) * n}"
        ]
    trace = ProbeTrace(
        n=n, sigma=sigma, epsilon=Fraction(cfg.epsilon), delta=delta, f=f,
        warnings=warnings, precondition_ok=precondition_ok,
    )

    def finish(verdict: ProbeVerdict) -> Tuple[ProbeVerdict, ProbeTrace]:
        trace.verdict = verdict
        return verdict, trace

    def declared(reason: str) -> Tuple[ProbeVerdict, ProbeTrace]:
        # a declaration below the cap is never emitted unconfirmed: the
        # guard arguments assume large lengths, so a refuted one degrades
        # to inconclusive with both facts recorded
        ok, emb, _ = _oracle_check(seq, h, cfg)
        if ok is False:
            return finish(
                ProbeVerdict(
                    kind=INCONCLUSIVE,
                    reason=(
                        f"{reason} fired, but the oracle refutes potentiality "
                        f"at this length"
                    ),
                )
            )
        return finish(
            ProbeVerdict(
                kind=DECLARED_POTENTIAL, reason=reason, verified=ok,
                embedding=emb, subgraph=h if emb is not None else None,
            )
        )

    def certified(target_graph: SmallGraph, kind: str, context: str) -> Tuple[ProbeVerdict, ProbeTrace]:
        """Emit found_h / found_split, or inconclusive when the oracle refutes."""
        ok, emb, _ = _oracle_check(seq, target_graph, cfg)
        if ok is False:
            return finish(
                ProbeVerdict(
                    kind=INCONCLUSIVE,
                    reason=f"{context}, but the oracle refutes the containment at this length",
                )
            )
        return finish(
            ProbeVerdict(
                kind=kind, subgraph=target_graph, embedding=emb,
                verified=ok, reason=context,
            )
        )

    # early exit on the input sequence, before any terms are laid off
    if n >= 2 * k and seq.term(2 * k) >= k - 1:
        trace.early_exit = True
        return declared(REASON_EARLY_EXIT)

    # initialization: raise the minimum term to ceil(sigma / 2n)
    init_threshold = _ceil_frac(Fraction(sigma, 2 * n)) if n else 0
    cur, j_init, init_sum = layoff_batch_below(seq, init_threshold)
    trace.init_threshold = init_threshold
    trace.init_laid_off = j_init
    trace.init_laid_off_sum = init_sum
    if j_init > 2 * delta * n / (1 + delta):
        return declared(REASON_INIT_GUARD)

    halting_reason = None
    t = 0
    while True:
        bound = (2 * (k - i_star) + nab - 1 - (t + 1) * delta - 2 * t) * cur.n
        rec = IterationRecord(
            t=t, n_t=cur.n, sequence=cur,
            sum_bound=bound, sum_bound_ok=cur.sum() >= bound,
        )
        trace.iterations.append(rec)
        # step 1: halt on small maximum degree or iteration limit
        if t == k - alpha - b_h:
            halting_reason = "iteration_limit"
            rec.halting_reason = halting_reason
            break
        if cur.n == 0 or cur.terms[0] < cur.n - f:
            halting_reason = "max_degree_small"
            rec.halting_reason = halting_reason
            break
        # step 2: drop the non-neighbors of the top vertex of a canonical
        # realization
        real = canonical_realization(cur)
        keep = [0] + sorted(
            v for v in range(cur.n) if real.graph.has_edge(0, v)
        )
        rec.removed_nonneighbors = cur.n - len(keep)
        hat = real.graph.induced(keep).degree_sequence()
        # step 3: lay off the dominating vertex (the maximum term)
        check = layoff(hat, 1)
        rec.step3_laid_off = 1
        # step 4: lay off minima until the floor holds
        threshold = k - i_star + _ceil_frac((nab - 1 - (t + 1) * delta) / 2) - (t + 1)
        rec.step4_threshold = threshold
        nxt, j4, _ = layoff_batch_below(check, max(threshold, 0))
        rec.step4_laid_off = j4
        # the guard bound is meaningful only while 1 - k*delta stays positive;
        # a degenerate delta (warned about in resolve) falls through instead
        # of declaring unsoundly
        if 1 - k * delta > 0:
            guard = Fraction(t + 3) * delta * cur.n / (1 - k * delta)
            if j4 >= guard:
                rec.halting_reason = "step4_guard"
                return declared(REASON_STEP4_GUARD)
        cur = nxt
        t += 1

    ell = t
    trace.ell = ell
    n_ell = cur.n

    trace.final = {
        "eta": DegreeSequence(
            [n_ell + ell - 1] * ell + [d + ell for d in cur.terms]
        ).to_text(),
        "sEll": {"clique": max(k - ell - alpha - b_h, 0), "independent": alpha + b_h},
    }
    if halting_reason == "iteration_limit":
        if n_ell < alpha + b_h:
            return finish(
                ProbeVerdict(
                    kind=INCONCLUSIVE,
                    reason=(
                        f"iteration limit reached with only {n_ell} terms left; "
                        f"need {alpha + b_h} for the join-back"
                    ),
                )
            )
        if b_h == 0:
            return certified(h, FOUND_H, "iteration limit: clique join-back covers the graph")
        return certified(
            complete_split(k - alpha - 1, alpha + 1),
            FOUND_SPLIT,
            "iteration limit: clique join-back yields the split graph",
        )

    # halted with ell < k - alpha - b_h and small maximum degree
    floor_needed = k - ell - alpha - b_h
    min_term = cur.terms[-1] if cur.n else 0
    if cur.n == 0 or (floor_needed > 0 and min_term < floor_needed):
        return finish(
            ProbeVerdict(
                kind=INCONCLUSIVE,
                reason=(
                    f"minimum term {min_term} below the floor {floor_needed} "
                    f"required by the halt analysis"
                ),
            )
        )

    s_ell = complete_split(k - ell - alpha - b_h, alpha + b_h)
    if degree_sufficient(cur, s_ell.degree_sequence()):
        # bounded-max-degree hypotheses hold: d1 < n_ell - f by the halt,
        # minimum term at least the split's minimum degree checked above
        trace.final["branch"] = "bounded_max_degree"
        if b_h == 0:
            return certified(
                h, FOUND_H, "degree-sufficient for the split remainder under a small maximum degree"
            )
        return certified(
            complete_split(k - alpha - 1, alpha + 1),
            FOUND_SPLIT,
            "degree-sufficient for the split remainder under a small maximum degree",
        )

    p = 0
    for j in range(cur.n, 0, -1):
        if cur.term(j) >= k - ell - 1:
            p = j
            break
    trace.final["p"] = p
    if p >= k - ell - alpha - b_h:
        return finish(
            ProbeVerdict(
                kind=INCONCLUSIVE,
                reason=(
                    f"p = {p} not below k - ell - alpha - b = {k - ell - alpha - b_h}; "
                    "halt analysis inapplicable"
                ),
            )
        )
    idx = k - ell - p
    f_sub = _pick_min_maxdeg_subgraph(h, idx)
    trace.final["fSubgraphVertices"] = list(f_sub[1])
    host = join(complete_graph(p), f_sub[0])
    if degree_sufficient(cur, host.degree_sequence()):
        trace.final["branch"] = "clique_plus_subgraph"
        return certified(
            h, FOUND_H, "degree-sufficient for a clique joined onto an induced subgraph"
        )
    trace.final["branch"] = "near_target"
    try:
        tgt = target_sequence(h, idx, n)
    except ValueError as exc:
        return finish(
            ProbeVerdict(kind=INCONCLUSIVE, reason=f"target sequence unavailable: {exc}")
        )
    return finish(
        ProbeVerdict(
            kind=CLOSE_TO_TARGET, target=tgt, distance=l1_distance(seq, tgt.seq)
        )
    )


def _pick_min_maxdeg_subgraph(h: SmallGraph, j: int) -> Tuple[SmallGraph, Tuple[int, ...]]:
    """Order-j induced subgraph attaining the minimum maximum degree.

    Prefers a subset containing a maximum independent set of h (detected
    by an unchanged independence number), then the lexicographically first
    attaining subset.
    """
    target = nabla(h, j)
    alpha = independence_number(h)
    fallback = None
    for subset in combinations(range(h.k), j):
        sub = h.induced(subset)
        if sub.max_degree() != target:
            continue
        if independence_number(sub) == alpha:
            return sub, subset
        if fallback is None:
            fallback = (sub, subset)
    assert fallback is not None
    return fallback


# ---------------------------------------------------------------------------
# Refinement for split realizations of Type 2 graphs


@dataclass(frozen=True)
class Type2RefineResult:
    embedding: Optional[Dict[int, int]]
    realization: Optional[Realization]
    cert_max_degree: bool
    cert_tail_degrees: bool
    method: Optional[str] = None


def type2_refine(g: Realization, h: SmallGraph) -> Type2RefineResult:
    """Edge exchanges turning a split-graph realization into one containing h.

    The realization must place a clique of order k - alpha - 1 on the top
    positions, fully joined to the next alpha + 1 positions. Attempts, in
    order: an edge already inside the independent part (immediate), the
    pigeonhole exchange building a double star on the independent part
    plus one clique vertex, and the exchanges that create exactly one edge
    inside the independent part. Certificates report whether the two
    degree bounds the refinement relies on hold on this instance.
    """
    prof = profile(h)
    k, alpha = prof.k, prof.alpha
    q_size, r_size = k - alpha - 1, alpha + 1
    if q_size < 1:
        raise ValueError("refinement needs a nonempty clique part (k - alpha - 1 >= 1)")
    graph = g.graph
    n = graph.k
    if n < k:
        raise ValueError(f"realization has {n} < {k} vertices")
    q = list(range(q_size))
    r = list(range(q_size, q_size + r_size))
    for a, b in ((x, y) for i, x in enumerate(q) for y in q[i + 1:]):
        if not graph.has_edge(a, b):
            raise ValueError("malformed clique part: missing internal edge")
    for a in q:
        for b in r:
            if not graph.has_edge(a, b):
                raise ValueError("malformed split: missing clique-to-independent edge")

    terms = g.sequence.terms
    cert_max_degree = terms[k - alpha - 1] < 2 * k * k
    tail_index = k - alpha + 8 * k**4
    cert_tail = True if tail_index > n else terms[tail_index - 1] <= k - alpha - 1

    one_edge_set = find_one_edge_set(h, alpha + 1)

    def embed_via_one_edge(cur: SmallGraph, edge: Tuple[int, int]) -> Optional[Dict[int, int]]:
        if one_edge_set is None:
            return None
        subset = set(one_edge_set)
        sub = h.induced(sorted(subset))
        ranked = sorted(subset)
        (a, b) = next(
            (ranked[x], ranked[y])
            for x in range(len(ranked))
            for y in range(x + 1, len(ranked))
            if sub.has_edge(x, y)
        )
        u, v = edge
        mapping = {a: u, b: v}
        rest_r = [w for w in r if w not in (u, v)]
        for hv, gv in zip((w for w in ranked if w not in (a, b)), rest_r):
            mapping[hv] = gv
        outside = [w for w in range(h.k) if w not in subset]
        for hv, gv in zip(outside, q):
            mapping[hv] = gv
        for x, y in h.edges():
            if not cur.has_edge(mapping[x], mapping[y]):
                return None
        return mapping

    # immediate branch: the independent part already spans an edge
    for i, u in enumerate(r):
        for v in r[i + 1:]:
            if graph.has_edge(u, v):
                emb = embed_via_one_edge(graph, (u, v))
                if emb is not None:
                    return Type2RefineResult(
                        embedding=emb, realization=g,
                        cert_max_degree=cert_max_degree, cert_tail_degrees=cert_tail,
                        method="edge_already_present",
                    )

    outside = [w for w in range(n) if w not in set(q) | set(r)]
    vstar = r[0]

    # full-join sub-case: alpha outside neighbors of vstar adjacent to all of Q
    helpers = [w for w in outside if graph.has_edge(vstar, w) and all(graph.has_edge(w, a) for a in q)]
    if len(helpers) >= alpha:
        chosen = helpers[:alpha]
        core = q + [vstar]
        max_ind = _max_independent_set(h)
        rest = [w for w in range(h.k) if w not in max_ind]
        mapping = dict(zip(max_ind, chosen))
        mapping.update(zip(rest, core))
        if all(graph.has_edge(mapping[x], mapping[y]) for x, y in h.edges()):
            return Type2RefineResult(
                embedding=mapping, realization=g,
                cert_max_degree=cert_max_degree, cert_tail_degrees=cert_tail,
                method="full_join_neighbors",
            )

    # pigeonhole exchange: build a double star on R together with one
    # clique vertex, leaves borrowed via non-neighbors of that vertex
    for b1 in range((alpha + 1) // 2, alpha + 1):
        b2 = alpha - b1
        cover_host = join(complete_graph(k - alpha - 2), double_star(b1, b2))
        cover_map = find_embedding(h, cover_host)
        if cover_map is None:
            continue
        for p in q:
            w_p = [
                x for x in outside
                if graph.has_edge(vstar, x) and not graph.has_edge(p, x)
            ]
            star_leaves = r[1: 1 + b2]
            p_leaves = r[1 + b2:]
            needed = [ell for ell in star_leaves if not graph.has_edge(vstar, ell)]
            if len(w_p) < len(needed):
                continue
            removed, added = [], []
            ok = True
            for ell, x in zip(needed, w_p):
                if not graph.has_edge(p, ell):
                    ok = False
                    break
                removed += [(x, vstar), (p, ell)]
                added += [(x, p), (vstar, ell)]
            if not ok:
                continue
            new_graph = graph.with_edges(added=added, removed=removed)
            host_vertices = (
                [a for a in q if a != p] + [p, vstar] + p_leaves + star_leaves
            )
            mapping = {hv: host_vertices[slot] for hv, slot in cover_map.items()}
            if all(new_graph.has_edge(mapping[x], mapping[y]) for x, y in h.edges()):
                return Type2RefineResult(
                    embedding=mapping,
                    realization=Realization(graph=new_graph, sequence=g.sequence),
                    cert_max_degree=cert_max_degree, cert_tail_degrees=cert_tail,
                    method="double_star_exchange",
                )

    # exchanges creating exactly one edge inside R
    if one_edge_set is not None:
        blocked = set(q) | set(r)
        for i, u in enumerate(r):
            for v in r[i + 1:]:
                if graph.has_edge(u, v):
                    continue
                a1s = [x for x in outside if graph.has_edge(u, x)]
                a2s = [x for x in outside if graph.has_edge(v, x)]
                for a1 in a1s:
                    for a2 in a2s:
                        if a1 != a2 and not graph.has_edge(a1, a2):
                            new_graph = graph.with_edges(
                                added=[(u, v), (a1, a2)], removed=[(u, a1), (v, a2)]
                            )
                            emb = embed_via_one_edge(new_graph, (u, v))
                            if emb is not None:
                                return Type2RefineResult(
                                    embedding=emb,
                                    realization=Realization(graph=new_graph, sequence=g.sequence),
                                    cert_max_degree=cert_max_degree,
                                    cert_tail_degrees=cert_tail,
                                    method="two_switch",
                                )
                for a1 in a1s:
                    for a2 in a2s:
                        banned = blocked | {a1, a2}
                        for w, x in graph.edges():
                            for ww, xx in ((w, x), (x, w)):
                                if ww in banned or xx in banned:
                                    continue
                                if graph.has_edge(ww, a1) or graph.has_edge(xx, a2):
                                    continue
                                new_graph = graph.with_edges(
                                    added=[(u, v), (ww, a1), (xx, a2)],
                                    removed=[(u, a1), (v, a2), (ww, xx)],
                                )
                                emb = embed_via_one_edge(new_graph, (u, v))
                                if emb is not None:
                                    return Type2RefineResult(
                                        embedding=emb,
                                        realization=Realization(
                                            graph=new_graph, sequence=g.sequence
                                        ),
                                        cert_max_degree=cert_max_degree,
                                        cert_tail_degrees=cert_tail,
                                        method="three_edge_exchange",
                                    )

    return Type2RefineResult(
        embedding=None, realization=None,
        cert_max_degree=cert_max_degree, cert_tail_degrees=cert_tail,
    )


def _max_independent_set(h: SmallGraph) -> List[int]:
    alpha = independence_number(h)
    for subset in combinations(range(h.k), alpha):
        if all(not h.has_edge(a, b) for i, a in enumerate(subset) for b in subset[i + 1:]):
            return list(subset)
    raise AssertionError("no independent set of the computed size")
