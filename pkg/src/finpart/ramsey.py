"""Polarized Ramsey engine: exhaustive verification over product grids of
k-subsets, exact minimal side sizes by search, and constructive (validated,
not optimal) upper bounds.

A query (j_1..j_n, c, r) asks: how large must the side sets S_1..S_n be so
that every c-coloring of [S_1]^{j_1} x ... x [S_n]^{j_n} admits subsets
T_i of size r with the whole sub-grid [T_1]^{j_1} x ... x [T_n]^{j_n}
monochromatic?
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cache
from math import comb, prod

from .operators import BudgetExceeded

DEFAULT_MAX_COLORINGS = 2_000_000


@dataclass(frozen=True)
class RamseyQuery:
    j: tuple
    c: int
    r: int

    def __post_init__(self):
        if self.c < 1:
            raise ValueError("at least one color required")
        if self.r < 0 or any(x < 0 for x in self.j):
            raise ValueError("sizes must be non-negative")


def grid_points(sizes, j):
    """The product grid, as a list of points; each point is a tuple of one
    j_i-subset (of range(size_i)) per coordinate.  Lexicographic order."""
    axes = [
        list(itertools.combinations(range(N), jj)) for N, jj in zip(sizes, j)
    ]
    return [tuple(pt) for pt in itertools.product(*axes)]


@dataclass
class ProductColoring:
    """A total coloring of a product grid; colors are 0-based ints."""

    sizes: tuple
    j: tuple
    colors: dict  # point -> color

    def __post_init__(self):
        expected = set(grid_points(self.sizes, self.j))
        if set(self.colors) != expected:
            raise ValueError("coloring is not total on the grid")


def subgrid(Ts, j):
    """All grid points lying within the given subsets T_1..T_n."""
    axes = [list(itertools.combinations(T, jj)) for T, jj in zip(Ts, j)]
    return [tuple(pt) for pt in itertools.product(*axes)]


def check_witness(coloring, Ts, d, r=None):
    """True iff every grid point within T_1 x ... x T_n has color d."""
    Ts = [tuple(sorted(T)) for T in Ts]
    if len(Ts) != len(coloring.j):
        raise ValueError("wrong number of witness sets")
    for T, N in zip(Ts, coloring.sizes):
        if any(not 0 <= x < N for x in T):
            raise ValueError(f"witness set {T} not within the side set")
        if r is not None and len(T) != r:
            raise ValueError(f"witness set {T} does not have size {r}")
    return all(coloring.colors[pt] == d for pt in subgrid(Ts, coloring.j))


@dataclass
class PropertyResult:
    holds: bool
    exhaustive: bool
    searched: int
    pruned: int = 0
    counterexample: dict = None  # point -> color, when holds is False
    note: str = ""


def _witness_masks(sizes, j, r, index):
    """Per witness tuple T-bar: bitmask of the grid points inside it."""
    out = []
    for Ts in itertools.product(
        *(itertools.combinations(range(N), r) for N in sizes)
    ):
        mask = 0
        for pt in subgrid(Ts, j):
            mask |= 1 << index[pt]
        out.append(mask)
    return out


def _perm_generators(sizes, j, points, index):
    """Grid-point permutations induced by adjacent transpositions of each
    side set.  Used for sound lex-leader pruning: every orbit's minimal
    coloring survives the generator test, and the monochromatic-witness
    property is invariant under these permutations."""
    gens = []
    for coord, N in enumerate(sizes):
        for t in range(N - 1):
            swap = {t: t + 1, t + 1: t}

            def apply(pt, coord=coord, swap=swap):
                comp = tuple(sorted(swap.get(x, x) for x in pt[coord]))
                return pt[:coord] + (comp,) + pt[coord + 1 :]

            perm = [index[apply(pt)] for pt in points]
            if perm != list(range(len(points))):
                gens.append(perm)
    return gens


def has_property(sizes, query, max_colorings=DEFAULT_MAX_COLORINGS, prune=True):
    """Exhaustively decide whether every c-coloring of the grid admits a
    monochromatic r-witness.  Exact; raises BudgetExceeded rather than
    guessing when there are too many colorings."""
    sizes = tuple(sizes)
    j, c, r = query.j, query.c, query.r
    if len(sizes) != len(j):
        raise ValueError("sizes/arity mismatch")
    points = grid_points(sizes, j)
    index = {pt: i for i, pt in enumerate(points)}
    P = len(points)

    if any(r > N for N in sizes):
        return PropertyResult(
            holds=False,
            exhaustive=True,
            searched=0,
            counterexample={pt: 0 for pt in points},
            note=f"no witness sets of size {r} exist",
        )
    if P == 0:
        # witnesses exist and the grid is empty: vacuously monochromatic
        return PropertyResult(holds=True, exhaustive=True, searched=0,
                              note="empty grid")

    total = c**P
    if total > max_colorings:
        raise BudgetExceeded(
            f"{c}^{P} = {total} colorings exceed the budget of {max_colorings}"
        )

    witnesses = _witness_masks(sizes, j, r, index)
    if any(w == 0 for w in witnesses):
        return PropertyResult(holds=True, exhaustive=True, searched=0,
                              note="vacuous witness (empty sub-grid)")
    gens = _perm_generators(sizes, j, points, index) if prune else []

    searched = pruned = 0
    if c == 2:
        full = (1 << P) - 1
        for col in range(total):
            if gens and any(
                sum(((col >> i) & 1) << k for k, i in enumerate(g)) < col
                for g in gens
            ):
                pruned += 1
                continue
            searched += 1
            if not any(col & w == 0 or col & w == w for w in witnesses):
                cex = {points[i]: (col >> i) & 1 for i in range(P)}
                return PropertyResult(False, True, searched, pruned, cex)
        return PropertyResult(True, True, searched, pruned)

    wit_points = [
        [i for i in range(P) if w >> i & 1] for w in witnesses
    ]
    for col in itertools.product(range(c), repeat=P):
        if gens and any(tuple(col[g[i]] for i in range(P)) < col for g in gens):
            pruned += 1
            continue
        searched += 1
        if not any(
            all(col[i] == col[wp[0]] for i in wp) for wp in wit_points
        ):
            cex = {points[i]: col[i] for i in range(P)}
            return PropertyResult(False, True, searched, pruned, cex)
    return PropertyResult(True, True, searched, pruned)


@dataclass
class SearchResult:
    value: int = None          # least N, or None if unknown above the cap
    cap: int = 0
    counterexample: dict = None  # certificate at value - 1, when available
    counterexample_N: int = None
    searched_total: int = 0


def search_min_N(query, cap, max_colorings=DEFAULT_MAX_COLORINGS, prune=True):
    """Least N <= cap such that the property holds on sides of size N.

    Exact (exhaustive per N); the certificate for N-1 is kept so a caller
    can replay why the returned value is minimal."""
    last_cex = None
    last_cex_N = None
    searched = 0
    for N in range(cap + 1):
        res = has_property((N,) * len(query.j), query,
                           max_colorings=max_colorings, prune=prune)
        searched += res.searched
        if res.holds:
            return SearchResult(N, cap, last_cex, last_cex_N, searched)
        last_cex = res.counterexample
        last_cex_N = N
    return SearchResult(None, cap, last_cex, last_cex_N, searched)


# ---------------------------------------------------------------------------
# constructive upper bounds (sufficient, monotone; never claimed optimal)

@cache
def _graph_bound(rvec):
    """Clique-style bound for pairs (j = 2) with per-color targets rvec,
    via the classical recurrence R(r-bar) <= 2 - c + sum_i R(r-bar - e_i)."""
    rvec = tuple(sorted(rvec))
    if not rvec:
        return 2
    if rvec[0] <= 1:
        return max(rvec[0], 0)
    if len(rvec) == 1:
        return rvec[0]
    if rvec[0] == 2:
        return max(2, _graph_bound(rvec[1:]))
    c = len(rvec)
    return 2 - c + sum(
        _graph_bound(rvec[:i] + (rvec[i] - 1,) + rvec[i + 1 :])
        for i in range(c)
    )


@cache
def _single_coordinate_bound(j, c, r):
    if r <= j:
        return max(r, 0)  # a single (or empty) sub-grid point suffices
    if j == 0:
        return r
    if j == 1:
        return c * (r - 1) + 1  # pigeonhole, exact
    if j == 2:
        return _graph_bound((r,) * c)
    # hypergraph step-down, Erdos--Rado shape: color (j-1)-sets through a
    # large enough lower-uniformity bound
    m = _single_coordinate_bound(j - 1, c, r - 1)
    return j - 1 + c ** comb(m, j - 1)


def upper_bound_R(query):
    """A side size guaranteed sufficient for the query.

    Coordinates are peeled off one at a time: once sides for the first
    n-1 coordinates are fixed, the last coordinate is colored by the full
    color pattern over the remaining sub-grid, which costs c**K colors for
    K the number of points over the first n-1 coordinates."""
    j, c, r = query.j, query.c, query.r
    if not j:
        return max(r, 0)
    if len(j) == 1:
        return _single_coordinate_bound(j[0], c, r)
    prefix = upper_bound_R(RamseyQuery(j[:-1], c, r))
    K = prod(comb(prefix, jj) for jj in j[:-1])
    last = _single_coordinate_bound(j[-1], c**K, r)
    return max(prefix, last, r)
