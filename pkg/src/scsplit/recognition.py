"""Split and pseudo-split recognition plus the order-changing reductions.

Split recognition follows Hammer and Simeone: with degrees sorted
d_1 >= ... >= d_n and m the largest index with d_m >= m - 1, the graph is
split iff sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i, and then the m
highest-degree vertices form a clique.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, delete_vertices, from_mask, popcount, to_mask


@dataclass(frozen=True)
class PseudoSplitPartition:
    K: frozenset[int]
    I: frozenset[int]
    C: frozenset[int] = frozenset()

    def __post_init__(self):
        if len(self.C) not in (0, 1, 5):
            raise ValueError(f"|C| must be 0, 1 or 5, got {len(self.C)}")
        if self.K & self.I or self.K & self.C or self.I & self.C:
            raise ValueError("K, I, C must be disjoint")

    def is_valid_for(self, g: Graph) -> bool:
        if self.K | self.I | self.C != frozenset(range(g.n)):
            return False
        if not (g.is_clique(self.K) and g.is_independent(self.I)):
            return False
        if len(self.C) == 5:
            if not _induces_c5(g, self.C):
                return False
        if self.C:
            return g.is_complete_to(self.C, self.K) and g.is_anticomplete_to(self.C, self.I)
        return True


def _induces_c5(g: Graph, vertices) -> bool:
    mask = to_mask(vertices)
    if popcount(mask) != 5:
        return False
    # the only 2-regular graph on five vertices is C5
    return all(popcount(g.rows[v] & mask) == 2 for v in from_mask(mask))


def _degree_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degrees[v], v))


def split_partition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A split partition (K, I) of g, or None if g is not split.

    A vertex that could sit on either side is placed in I.
    """
    if g.n == 0:
        return frozenset(), frozenset()
    order = _degree_order(g)
    d = [g.degrees[v] for v in order]
    m = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    K = set(order[:m])
    I = set(order[m:])
    imask = to_mask(I)
    # At most one clique vertex can be free of I-neighbors once one has moved.
    for v in sorted(K, key=lambda v: (g.degrees[v], v)):
        if g.rows[v] & imask == 0:
            K.discard(v)
            I.add(v)
            break
    K, I = frozenset(K), frozenset(I)
    if not (g.is_clique(K) and g.is_independent(I)):
        raise AssertionError("degree test accepted a graph whose partition is invalid")
    return K, I


def is_split(g: Graph) -> bool:
    return split_partition(g) is not None


def unique_sc_split_partition(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """The degree-threshold split partition of a self-complementary split graph of order 4k.

    K = {v : d(v) >= 2k}, I = {v : d(v) < 2k}.
    """
    if g.n % 4:
        raise ValueError(f"order {g.n} is not a multiple of 4")
    half = g.n // 2
    K = frozenset(v for v in range(g.n) if g.degrees[v] >= half)
    I = frozenset(range(g.n)) - K
    if len(K) != half or not g.is_clique(K) or not g.is_independent(I):
        raise ValueError("graph is not a self-complementary split graph: degree partition is not a split partition")
    return K, I


def pseudo_split_partition(g: Graph) -> PseudoSplitPartition | None:
    """A pseudo-split partition with |C| in {0, 5}, or None.

    When C is nonempty its vertices all have degree |K| + 2, every clique vertex
    has degree at least |K| + 4 and every independent vertex at most |K|, so
    the only candidate for C is a degree class with exactly five members and
    exactly (degree - 2) vertices above it.
    """
    sp = split_partition(g)
    if sp is not None:
        return PseudoSplitPartition(sp[0], sp[1])
    for d in sorted(set(g.degrees)):
        C = frozenset(v for v in range(g.n) if g.degrees[v] == d)
        if len(C) != 5:
            continue
        K = frozenset(v for v in range(g.n) if g.degrees[v] > d)
        if len(K) != d - 2:
            continue
        I = frozenset(v for v in range(g.n) if g.degrees[v] < d)
        p = PseudoSplitPartition(K, I, C)
        if p.is_valid_for(g):
            return p
    return None


def is_pseudo_split(g: Graph) -> bool:
    return pseudo_split_partition(g) is not None


def odd_reduce(g: Graph) -> tuple[int, Graph]:
    """Split off the unique middle-degree vertex of an SC split graph on 4k+1 vertices."""
    if g.n % 4 != 1:
        raise ValueError(f"order {g.n} is not 1 mod 4")
    k = g.n // 4
    middle = [v for v in range(g.n) if g.degrees[v] == 2 * k]
    if len(middle) != 1:
        raise ValueError(f"expected exactly one vertex of degree {2 * k}, found {len(middle)}")
    v = middle[0]
    return v, delete_vertices(g, [v])


def apex_extend(g: Graph) -> Graph:
    """Add one vertex adjacent exactly to the clique side (order 4k -> 4k+1)."""
    K, _ = unique_sc_split_partition(g)
    return g.add_vertices(1, [sorted(K)])


def c5_extend(g: Graph) -> Graph:
    """Add an induced five-cycle complete to the clique side (order 4k -> 4k+5)."""
    K, _ = unique_sc_split_partition(g)
    n = g.n
    h = g.add_vertices(5, [sorted(K)] * 5)
    return h.with_edges(add=[(n + i, n + (i + 1) % 5) for i in range(5)])


def split_core(g: Graph) -> Graph:
    """Turn the 2k highest-degree vertices into a clique and the rest into an independent set.

    Cross edges are untouched.  Degree ties are broken by vertex label.
    """
    if g.n % 4:
        raise ValueError(f"order {g.n} is not a multiple of 4")
    order = _degree_order(g)
    H = order[: g.n // 2]
    L = order[g.n // 2:]
    hmask, lmask = to_mask(H), to_mask(L)
    rows = list(g.rows)
    for v in H:
        rows[v] = (rows[v] & lmask) | (hmask & ~(1 << v))
    for v in L:
        rows[v] = rows[v] & hmask
    return Graph(g.n, tuple(rows))
