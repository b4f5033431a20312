"""Degree-sequence arithmetic: graphicality tests, lay-offs, and distances.

Sequences are always kept in canonical form: nonincreasing, zeros retained.
All operations are pure functions on immutable values.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Iterable, Iterator, Tuple


class DegreeSequence:
    """A nonincreasing tuple of nonnegative integer degrees.

    Zeros are legal terms and count toward the length ``n``. Construction
    sorts the input, so any iterable of degrees yields the canonical form.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[int] = ()):
        ts = tuple(sorted((int(t) for t in terms), reverse=True))
        if ts and ts[-1] < 0:
            raise ValueError("degrees must be nonnegative")
        object.__setattr__(self, "terms", ts)

    @property
    def n(self) -> int:
        return len(self.terms)

    def sum(self) -> int:
        return sum(self.terms)

    def term(self, i: int) -> int:
        """1-based access: d_i."""
        if not 1 <= i <= len(self.terms):
            raise IndexError(f"term index {i} out of range 1..{len(self.terms)}")
        return self.terms[i - 1]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __getitem__(self, idx):
        return self.terms[idx]

    def __eq__(self, other) -> bool:
        return isinstance(other, DegreeSequence) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"DegreeSequence({self.to_text()!r})"

    def __setattr__(self, name, value):
        raise AttributeError("DegreeSequence is immutable")

    def to_text(self) -> str:
        """Run-length form, e.g. ``7,1^7``; runs of one or two stay bare."""
        parts = []
        i = 0
        ts = self.terms
        while i < len(ts):
            j = i
            while j < len(ts) and ts[j] == ts[i]:
                j += 1
            run = j - i
            if run >= 3:
                parts.append(f"{ts[i]}^{run}")
            else:
                parts.extend([str(ts[i])] * run)
            i = j
        return ",".join(parts)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        return parse_sequence(text)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse comma-separated degrees; ``v^m`` means m repeats of v.

    Whitespace is ignored anywhere. The empty string parses to the empty
    sequence. Round-trips exactly with ``DegreeSequence.to_text``.
    """
    stripped = "".join(text.split())
    if not stripped:
        return DegreeSequence(())
    terms = []
    for piece in stripped.split(","):
        if not piece:
            raise ValueError(f"empty item in sequence text {text!r}")
        if "^" in piece:
            base, _, count = piece.partition("^")
            try:
                v, m = int(base), int(count)
            except ValueError:
                raise ValueError(f"bad run-length item {piece!r}") from None
            if m < 0:
                raise ValueError(f"negative repeat count in {piece!r}")
        else:
            try:
                v, m = int(piece), 1
            except ValueError:
                raise ValueError(f"bad degree {piece!r}") from None
        if v < 0:
            raise ValueError(f"negative degree {v}")
        terms.extend([v] * m)
    return DegreeSequence(terms)


def is_graphic(seq: DegreeSequence) -> bool:
    """Erdős–Gallai test: even sum and all n prefix inequalities hold.

    Trailing zeros are treated as isolated vertices. Total function: never
    raises on a valid DegreeSequence.
    """
    d = seq.terms
    n = len(d)
    if n == 0:
        return True
    total = sum(d)
    if total % 2:
        return False
    if d[0] > n - 1:
        return False
    prefix = [0] + list(accumulate(d))
    # count_ge(p): number of terms >= p, via binary search on the
    # nonincreasing sequence.
    def count_ge(p: int) -> int:
        lo, hi = 0, n
        while lo < hi:
            mid = (lo + hi) // 2
            if d[mid] >= p:
                lo = mid + 1
            else:
                hi = mid
        return lo

    for p in range(1, n + 1):
        m = count_ge(p)
        # sum_{i=p+1..n} min(d_i, p): the first max(m-p, 0) of those are
        # capped at p, the rest contribute their own value.
        capped = max(m - p, 0)
        start = max(m, p)
        rhs = p * (p - 1) + p * capped + (prefix[n] - prefix[start])
        if prefix[p] > rhs:
            return False
    return True


def layoff(seq: DegreeSequence, index: int) -> DegreeSequence:
    """Lay off the 1-based ``index``-th term (Kleitman–Wang reduction).

    Case d_i < i reduces the first d_i terms by one; case d_i >= i reduces
    every other term among the first d_i + 1 positions. The result is
    re-sorted and has length n - 1. Raises ValueError if the reduction
    would drive a term below zero (the input was not graphic-consistent).
    """
    d = list(seq.terms)
    n = len(d)
    if not 1 <= index <= n:
        raise ValueError(f"layoff index {index} out of range 1..{n}")
    di = d[index - 1]
    if di < index:
        targets = range(di)
    else:
        if di + 1 > n:
            raise ValueError(f"term {di} too large to lay off from length {n}")
        targets = [j for j in range(di + 1) if j != index - 1]
    for j in targets:
        d[j] -= 1
        if d[j] < 0:
            raise ValueError("layoff drove a term below zero; input not graphic-consistent")
    del d[index - 1]
    return DegreeSequence(d)


def layoff_batch_below(seq: DegreeSequence, threshold: int) -> Tuple[DegreeSequence, int, int]:
    """Repeatedly lay off a minimum term while it is below ``threshold``.

    Ties among minima resolve to the last (rightmost) position, so traces
    are deterministic. Returns (final sequence, count laid off, total of
    the laid-off values at the moment each was removed). The bookkeeping
    identities sigma(out) = sigma(in) - 2*laid_off_sum and
    laid_off_sum <= count*(threshold-1) always hold.
    """
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    cur = seq
    count = 0
    laid_off_sum = 0
    while cur.n and cur.terms[-1] < threshold:
        laid_off_sum += cur.terms[-1]
        cur = layoff(cur, cur.n)
        count += 1
    return cur, count, laid_off_sum


def l1_distance(a: DegreeSequence, b: DegreeSequence) -> int:
    """Sum of termwise absolute differences; the shorter side is zero-padded."""
    ta, tb = a.terms, b.terms
    if len(ta) < len(tb):
        ta, tb = tb, ta
    short = len(tb)
    return sum(abs(x - y) for x, y in zip(ta, tb)) + sum(ta[short:])


def degree_sufficient(seq: DegreeSequence, h: DegreeSequence) -> bool:
    """True iff the first k terms of ``seq`` termwise dominate ``h``."""
    if h.n > seq.n:
        raise ValueError(f"comparison sequence longer ({h.n}) than subject ({seq.n})")
    return all(s >= t for s, t in zip(seq.terms, h.terms))
