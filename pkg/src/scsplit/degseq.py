"""Degree sequences: realization, 2-switches, slices, and forcibly-SC tests."""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterator

from .graph import (
    Graph,
    IsomorphismClasses,
    find_antimorphism,
    from_mask,
    graph6_write,
    induced_subgraph,
    popcount,
    to_mask,
)

BRUTEFORCE_MAX_ORDER = 10


@dataclass(frozen=True)
class DegreeSequence:
    """Grouped degree sequence ((d_1, n_1), ..., (d_l, n_l)) with d_1 > ... > d_l."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        ds = [d for d, _ in self.pairs]
        if any(a <= b for a, b in zip(ds, ds[1:])):
            raise ValueError(f"degrees must be strictly decreasing: {ds}")
        if any(c < 1 for _, c in self.pairs) or any(d < 0 for d in ds):
            raise ValueError("multiplicities must be positive and degrees non-negative")
        if self.pairs and ds[0] > self.n - 1:
            raise ValueError(f"degree {ds[0]} too large for {self.n} vertices")

    @classmethod
    def from_degrees(cls, degrees) -> "DegreeSequence":
        counts = Counter(degrees)
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse "5^4,2^4" (a bare degree means multiplicity 1)."""
        text = text.strip().strip("()")
        pairs = []
        for part in filter(None, (p.strip() for p in text.split(","))):
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", part)
            if not m:
                raise ValueError(f"cannot parse degree group {part!r}")
            pairs.append((int(m.group(1)), int(m.group(2) or 1)))
        merged = Counter()
        for d, c in pairs:
            merged[d] += c
        return cls(tuple(sorted(merged.items(), reverse=True)))

    @property
    def n(self) -> int:
        return sum(c for _, c in self.pairs)

    @property
    def length(self) -> int:
        return len(self.pairs)

    def flat(self) -> list[int]:
        return [d for d, c in self.pairs for _ in range(c)]

    def __str__(self):
        return ",".join(f"{d}^{c}" for d, c in self.pairs)


@dataclass(frozen=True)
class Slice:
    index: int  # 1-based
    high: frozenset[int]
    low: frozenset[int]
    subgraph: Graph


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence.from_degrees(g.degrees)


def realize(ds: DegreeSequence) -> Graph | None:
    """Havel-Hakimi realization; vertex i receives the i-th largest degree."""
    degs = ds.flat()
    n = len(degs)
    if sum(degs) % 2:
        return None
    residual = list(degs)
    edges = []
    remaining = set(range(n))
    while remaining:
        v = max(remaining, key=lambda x: (residual[x], -x))
        remaining.discard(v)
        need = residual[v]
        residual[v] = 0
        if need == 0:
            continue
        partners = sorted(remaining, key=lambda x: (-residual[x], x))[:need]
        if len(partners) < need or residual[partners[-1]] == 0:
            return None
        for u in partners:
            residual[u] -= 1
            edges.append((v, u))
    return Graph.from_edges(n, edges)


def two_switch(g: Graph, v1: int, v2: int, v3: int, v4: int) -> Graph:
    """(v1v2, v3v4) -> (v1v3, v2v4)."""
    if len({v1, v2, v3, v4}) != 4:
        raise ValueError("2-switch needs four distinct vertices")
    if not (g.has_edge(v1, v2) and g.has_edge(v3, v4)):
        raise ValueError(f"2-switch needs edges {v1}{v2} and {v3}{v4}")
    if g.has_edge(v1, v3) or g.has_edge(v2, v4):
        raise ValueError(f"2-switch needs non-edges {v1}{v3} and {v2}{v4}")
    return g.with_edges(add=[(v1, v3), (v2, v4)], remove=[(v1, v2), (v3, v4)])


def applicable_two_switches(g: Graph) -> Iterator[tuple[int, int, int, int]]:
    """Every (v1, v2, v3, v4) accepted by two_switch, each unordered switch once."""
    seen = set()
    for v1, v2 in g.edges():
        for a, b in ((v1, v2), (v2, v1)):
            # candidates v3 with a !~ v3, then v4 ~ v3 and b !~ v4
            cand3 = g.vertex_mask() & ~g.rows[a] & ~(1 << a) & ~(1 << b)
            for v3 in from_mask(cand3):
                cand4 = g.rows[v3] & ~g.rows[b] & ~(1 << b) & ~(1 << a)
                for v4 in from_mask(cand4):
                    removed = frozenset([frozenset((a, b)), frozenset((v3, v4))])
                    added = frozenset([frozenset((a, v3)), frozenset((b, v4))])
                    key = (removed, added)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield a, b, v3, v4


def iter_realizations(ds: DegreeSequence, iso_dedupe: bool = True) -> Iterator[Graph]:
    """Breadth-first search over 2-switches starting from realize(ds).

    By Ryser's theorem the 2-switch graph on realizations is connected, so
    this reaches every realization (every isomorphism class when deduplicating).
    """
    start = realize(ds)
    if start is None:
        raise ValueError(f"degree sequence {ds} is not graphical")
    if iso_dedupe:
        classes = IsomorphismClasses()
        classes.add(start)
    else:
        visited = {graph6_write(start)}
    queue = deque([start])
    yield start
    while queue:
        g = queue.popleft()
        for sw in applicable_two_switches(g):
            h = two_switch(g, *sw)
            if iso_dedupe:
                if not classes.add(h):
                    continue
            else:
                key = graph6_write(h)
                if key in visited:
                    continue
                visited.add(key)
            queue.append(h)
            yield h


def realization_closure(ds: DegreeSequence, iso_dedupe: bool = True) -> list[Graph]:
    return list(iter_realizations(ds, iso_dedupe))


def degree_classes(g: Graph) -> list[frozenset[int]]:
    """V_1, ..., V_l: vertex sets of equal degree, highest degree first."""
    by_deg: dict[int, set[int]] = {}
    for v, d in enumerate(g.degrees):
        by_deg.setdefault(d, set()).add(v)
    return [frozenset(by_deg[d]) for d in sorted(by_deg, reverse=True)]


def slices(g: Graph) -> list[Slice]:
    classes = degree_classes(g)
    ell = len(classes)
    out = []
    for i in range(1, (ell + 1) // 2 + 1):
        high, low = classes[i - 1], classes[ell - i]
        out.append(Slice(i, high, low, induced_subgraph(g, high | low)))
    return out


def _even_degree_classes(g: Graph, part: list[int]) -> bool:
    mask = to_mask(part)
    counts = Counter(popcount(g.rows[v] & mask) for v in part)
    return all(c % 2 == 0 for c in counts.values())


def parity_conditions(g: Graph) -> bool:
    """Necessary parity conditions for an order-4k graph to be self-complementary.

    Every degree value occurs an even number of times in G, in G[H] and in
    G[L], where H holds the 2k highest-degree vertices (ties by label).
    False certifies that g is not self-complementary.
    """
    if g.n % 4:
        raise ValueError(f"parity conditions need order divisible by 4, got {g.n}")
    order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    H, L = order[: g.n // 2], order[g.n // 2:]
    return (
        _even_degree_classes(g, list(range(g.n)))
        and _even_degree_classes(g, H)
        and _even_degree_classes(g, L)
    )


def is_forcibly_sc(ds: DegreeSequence) -> bool:
    """Rao's condition for every realization to be self-complementary.

    For each i <= l/2 the i-th and (l+1-i)-th groups mirror each other with
    multiplicity 2 or 4 and low degree n-1-d_i = (n_1 + ... + n_i) - n_i/2;
    an odd middle group has 1 or 5 vertices of degree (n-1)/2.
    """
    pairs = ds.pairs
    ell = len(pairs)
    n = ds.n
    prefix = 0
    for i in range(ell // 2):
        d_hi, n_hi = pairs[i]
        d_lo, n_lo = pairs[ell - 1 - i]
        prefix += n_hi
        if n_lo != n_hi or n_hi not in (2, 4):
            return False
        if not (d_lo == n - 1 - d_hi and 2 * d_lo == 2 * prefix - n_hi):
            return False
    if ell % 2:
        d_mid, n_mid = pairs[ell // 2]
        if n_mid not in (1, 5) or 2 * d_mid != n - 1:
            return False
    return True


def _mirror_symmetric(ds: DegreeSequence) -> bool:
    counts = dict(ds.pairs)
    return all(counts.get(ds.n - 1 - d) == c for d, c in ds.pairs)


def is_potentially_sc_bruteforce(ds: DegreeSequence) -> bool:
    """True iff some realization of ds is self-complementary (exhaustive, n <= 10)."""
    if ds.n > BRUTEFORCE_MAX_ORDER:
        raise ValueError(f"brute force limited to order {BRUTEFORCE_MAX_ORDER}, got {ds.n}")
    if realize(ds) is None:
        return False
    # an antimorphism sends degree d to n-1-d
    if not _mirror_symmetric(ds):
        return False
    return any(find_antimorphism(g) is not None for g in iter_realizations(ds))


def is_forcibly_sc_bruteforce(ds: DegreeSequence) -> bool:
    """True iff ds is graphical and every realization is self-complementary (n <= 10)."""
    if ds.n > BRUTEFORCE_MAX_ORDER:
        raise ValueError(f"brute force limited to order {BRUTEFORCE_MAX_ORDER}, got {ds.n}")
    if realize(ds) is None:
        return False
    return all(find_antimorphism(g) is not None for g in iter_realizations(ds))


def graphical_sequences(n: int) -> Iterator[DegreeSequence]:
    """Every graphical degree sequence on n vertices (Erdos-Gallai), largest first."""

    def rec(prefix, max_d, left):
        if left == 0:
            yield tuple(prefix)
            return
        for d in range(max_d, -1, -1):
            prefix.append(d)
            yield from rec(prefix, d, left - 1)
            prefix.pop()

    for seq in rec([], max(n - 1, 0), n):
        if _erdos_gallai(seq):
            yield DegreeSequence.from_degrees(seq)


def _erdos_gallai(seq) -> bool:
    if sum(seq) % 2:
        return False
    n = len(seq)
    for k in range(1, n + 1):
        lhs = sum(seq[:k])
        rhs = k * (k - 1) + sum(min(d, k) for d in seq[k:])
        if lhs > rhs:
            return False
    return True
