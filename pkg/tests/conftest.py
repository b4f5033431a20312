"""Shared fixtures and independent oracles for the test suite."""

from functools import lru_cache
from itertools import combinations

from potnum.graphs import (
    complete_bipartite,
    complete_graph,
    complete_split,
    cycle_graph,
    friendship_graph,
    path_graph,
)


def corpus():
    """The eight-graph verification corpus used across the suite."""
    return {
        "K3": complete_graph(3),
        "K4": complete_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "P4": path_graph(4),
        "K23": complete_bipartite(2, 3),
        "split23": complete_split(2, 3),
        "friendship2": friendship_graph(2),
    }


@lru_cache(maxsize=None)
def realizable_by_search(terms):
    """Realization existence by pure search, independent of any
    graphicality formula: branch over every neighbor set of the top term."""
    terms = tuple(sorted(terms, reverse=True))
    if not terms or terms[0] == 0:
        return True
    d, rest = terms[0], list(terms[1:])
    positive = [i for i, v in enumerate(rest) if v > 0]
    if d > len(positive):
        return False
    seen = set()
    for pick in combinations(positive, d):
        nxt = rest[:]
        for i in pick:
            nxt[i] -= 1
        key = tuple(sorted(nxt, reverse=True))
        if key in seen:
            continue
        seen.add(key)
        if realizable_by_search(key):
            return True
    return False
