"""Finite combinatorics kernel over the ground set {0, ..., a-1}.

Canonical forms used throughout the package:

* subset          -- tuple of strictly increasing ints
* disjoint tuple  -- tuple of subsets, pairwise disjoint
* partition       -- tuple of blocks (subsets), sorted by least element

All enumeration orders are deterministic and documented per function.
Counting uses Python's arbitrary-precision ints throughout.
"""

from __future__ import annotations

import itertools
from functools import cache
from math import comb, factorial


# ---------------------------------------------------------------------------
# canonical forms and validation

def as_subset(elems):
    """Canonical subset (sorted, deduplicated tuple) from an iterable."""
    return tuple(sorted(set(elems)))


def check_subset(s, a):
    """Validate a canonical subset of {0..a-1}; raises ValueError."""
    if list(s) != sorted(set(s)):
        raise ValueError(f"not a canonical subset: {s!r}")
    if s and (s[0] < 0 or s[-1] >= a):
        raise ValueError(f"element out of range [0, {a}): {s!r}")


def is_disjoint(components):
    """True iff the components are pairwise disjoint."""
    seen = set()
    for c in components:
        for x in c:
            if x in seen:
                return False
            seen.add(x)
    return True


def check_disjoint_tuple(t, a, profile=None):
    for c in t:
        check_subset(c, a)
    if not is_disjoint(t):
        raise ValueError(f"components not pairwise disjoint: {t!r}")
    if profile is not None and profile_of(t) != tuple(profile):
        raise ValueError(f"tuple {t!r} does not match profile {tuple(profile)}")


def profile_of(t):
    """Size profile (|t_1|, ..., |t_n|) of a disjoint tuple."""
    return tuple(len(c) for c in t)


def tuple_support(t):
    """Union of the components of a disjoint tuple, as a canonical subset."""
    return as_subset(x for c in t for x in c)


# ---------------------------------------------------------------------------
# enumeration

def enum_k_subsets(a, k):
    """All k-subsets of {0..a-1} in lexicographic order.

    Empty stream when k > a; the single empty subset when k == 0.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    return itertools.combinations(range(a), k)


def enum_disjoint_tuples(a, profile):
    """All tuples of pairwise disjoint subsets of {0..a-1} with the given
    size profile, ordered lexicographically by the concatenation of their
    canonical components.  Empty stream when sum(profile) > a.
    """
    profile = tuple(profile)
    if any(m < 0 for m in profile):
        raise ValueError("profile entries must be non-negative")
    n = len(profile)

    def rec(i, used):
        if i == n:
            yield ()
            return
        avail = [x for x in range(a) if x not in used]
        for comp in itertools.combinations(avail, profile[i]):
            for rest in rec(i + 1, used | set(comp)):
                yield (comp,) + rest

    yield from rec(0, frozenset())


def enum_O_n(a, n, cap=None):
    """All n-tuples of pairwise disjoint (possibly empty) subsets of
    {0..a-1}, optionally with every component of size <= cap.

    Order: by the element-to-component assignment vector, where value 0
    means "in no component" and value i places the element in component i.
    Without a cap the stream has exactly (n+1)**a tuples.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for assign in itertools.product(range(n + 1), repeat=a):
        comps = [[] for _ in range(n)]
        for x, c in enumerate(assign):
            if c:
                comps[c - 1].append(x)
        if cap is not None and any(len(c) > cap for c in comps):
            continue
        yield tuple(tuple(c) for c in comps)


def enum_set_partitions(a):
    """All partitions of {0..a-1} in restricted-growth order.

    Blocks come out sorted by least element, so every partition is canonical.
    """
    if a == 0:
        yield ()
        return
    blocks = []

    def rec(i):
        if i == a:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def ns_blocks(P):
    """The non-singleton blocks of a partition, in canonical order."""
    return tuple(b for b in P if len(b) >= 2)


def enum_B_n(a, n):
    """All finitary partitions of {0..a-1} with exactly n non-singleton
    blocks, in restricted-growth order of the underlying set partitions.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    for P in enum_set_partitions(a):
        if len(ns_blocks(P)) == n:
            yield P


def enum_B_fin(a, max_ns=None):
    """All finitary partitions of {0..a-1}, optionally with at most max_ns
    non-singleton blocks."""
    for P in enum_set_partitions(a):
        if max_ns is None or len(ns_blocks(P)) <= max_ns:
            yield P


# ---------------------------------------------------------------------------
# counting

@cache
def assoc_stirling(j, n):
    """Number of partitions of a j-set into exactly n blocks of size >= 2.

    Recurrence: b(j, n) = n*b(j-1, n) + (j-1)*b(j-2, n-1), b(0, 0) = 1.
    """
    if j < 0 or n < 0:
        raise ValueError("arguments must be non-negative")
    if n == 0:
        return 1 if j == 0 else 0
    if j < 2 * n:
        return 0
    return n * assoc_stirling(j - 1, n) + (j - 1) * assoc_stirling(j - 2, n - 1)


def count_B_n(a, n):
    """|enum_B_n(a, n)|: choose which elements sit in non-singleton blocks,
    then partition them with every block of size >= 2."""
    if a < 0 or n < 0:
        raise ValueError("arguments must be non-negative")
    return sum(comb(a, j) * assoc_stirling(j, n) for j in range(a + 1))


def count_disjoint_tuples(a, profile):
    """|enum_disjoint_tuples(a, profile)| in closed form."""
    profile = tuple(profile)
    total = sum(profile)
    if total > a:
        return 0
    out = factorial(a) // factorial(a - total)
    for m in profile:
        out //= factorial(m)
    return out


# ---------------------------------------------------------------------------
# partitions

def canonicalize_partition(a, blocks):
    """Canonical form of a partition of {0..a-1}.

    Raises ValueError naming the offending block on overlap, an empty
    block, an out-of-range element, or incomplete cover.
    """
    covered = {}
    canon = []
    for b in blocks:
        cb = as_subset(b)
        if not cb:
            raise ValueError("empty block")
        for x in cb:
            if not 0 <= x < a:
                raise ValueError(f"element {x} of block {cb!r} out of range [0, {a})")
            if x in covered:
                raise ValueError(f"overlap at element {x} between {covered[x]!r} and {cb!r}")
            covered[x] = cb
        canon.append(cb)
    for x in range(a):
        if x not in covered:
            raise ValueError(f"element {x} uncovered")
    canon.sort(key=lambda b: b[0])
    return tuple(canon)


def partition_from_ns(a, ns):
    """Partition of {0..a-1} with the pairwise disjoint blocks `ns` kept
    as-is (empty ones dropped) and every remaining element a singleton."""
    blocks = [as_subset(b) for b in ns if b]
    used = {x for b in blocks for x in b}
    blocks.extend((x,) for x in range(a) if x not in used)
    blocks.sort(key=lambda b: b[0])
    return tuple(blocks)
