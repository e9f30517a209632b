"""Diamond and rectangle partitions of self-complementary split graphs.

Rectangle: V1 complete to V2 and anticomplete to V3, V4 complete to V3 and
anticomplete to V2.  Diamond: V1 complete to V3, V2 anticomplete to V4.
A partition is self-complementary when some antimorphism maps the family of
parts onto itself, so the same four sets form a partition of that kind in
the complement.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .constructors import build_Zk
from .graph import Graph, Permutation, complement, find_antimorphism, is_antimorphism, is_isomorphic
from .recognition import split_partition


class PartitionKind(str, enum.Enum):
    RECTANGLE = "rectangle"
    DIAMOND = "diamond"


@dataclass(frozen=True)
class FourPartition:
    parts: tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]]
    kind: PartitionKind

    def __post_init__(self):
        if len(self.parts) != 4:
            raise ValueError("need exactly four parts")
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in self.parts))
        object.__setattr__(self, "kind", PartitionKind(self.kind))

    def covers(self, n: int) -> bool:
        seen = set()
        for p in self.parts:
            if not p or seen & p:
                return False
            seen |= p
        return seen == set(range(n))

    def __str__(self):
        return f"{self.kind.value}: " + " | ".join(",".join(map(str, sorted(p))) for p in self.parts)


def _pattern_holds(g: Graph, parts, kind: PartitionKind) -> bool:
    v1, v2, v3, v4 = parts
    if kind is PartitionKind.DIAMOND:
        return g.is_complete_to(v1, v3) and g.is_anticomplete_to(v2, v4)
    return (
        g.is_complete_to(v1, v2)
        and g.is_anticomplete_to(v1, v3)
        and g.is_complete_to(v4, v3)
        and g.is_anticomplete_to(v4, v2)
    )


def is_valid_partition(g: Graph, p: FourPartition) -> bool:
    return p.covers(g.n) and _pattern_holds(g, p.parts, p.kind)


def diamond_from_antimorphism(g: Graph, sigma: Permutation, starts=None) -> FourPartition:
    """Deal each cycle of sigma round-robin into V1..V4, starting inside `starts`.

    `starts` defaults to the high-degree half {v : d(v) >= n/2}, the clique
    side of an SC split graph; sigma then rotates the parts, V_j -> V_{j+1}.
    """
    if g.n % 4:
        raise ValueError(f"order {g.n} is not a multiple of 4")
    if not is_antimorphism(g, sigma):
        raise ValueError("sigma is not an antimorphism of g")
    if starts is None:
        starts = {v for v in range(g.n) if g.degrees[v] >= g.n // 2}
    starts = set(starts)
    parts = [set(), set(), set(), set()]
    for cycle in sigma.cycles:
        first = next((i for i, v in enumerate(cycle) if v in starts), None)
        if first is None:
            raise ValueError(f"cycle {cycle} has no vertex in the start set")
        rotated = cycle[first:] + cycle[:first]
        for j, v in enumerate(rotated):
            parts[j % 4].add(v)
    p = FourPartition(tuple(parts), PartitionKind.DIAMOND)
    if not is_valid_partition(g, p):
        raise ValueError("round-robin assignment is not a diamond partition")
    return p


def any_diamond(g: Graph) -> FourPartition:
    """K', K - K', I', I - I' for a split partition with |K|, |I| >= 2."""
    sp = split_partition(g)
    if sp is None:
        raise ValueError("graph is not split")
    K, I = sorted(sp[0]), sorted(sp[1])
    if len(K) < 2 or len(I) < 2:
        raise ValueError("need at least two vertices on each side of the split partition")
    return FourPartition(({K[0]}, {I[0]}, set(K[1:]), set(I[1:])), PartitionKind.DIAMOND)


@dataclass(frozen=True)
class PartitionSymmetry:
    """Outcome of the self-complementarity test for a partition."""

    self_complementary: bool
    witness: Permutation | None = None
    role_map: tuple[int, ...] | None = None  # sigma(V_j) = V_{role_map[j]}
    strict_rotation: bool = False  # some witness has sigma(V_j) = V_{j+1 mod 4}


def _antimorphism_with_roles(g: Graph, parts, roles) -> Permutation | None:
    if any(len(parts[j]) != len(parts[roles[j]]) for j in range(4)):
        return None
    colors = [0] * g.n
    target = [0] * g.n
    for j in range(4):
        for v in parts[j]:
            colors[v] = j
        for w in parts[roles[j]]:
            target[w] = j
    return find_antimorphism(g, colors, target)


def partition_symmetry(g: Graph, p: FourPartition) -> PartitionSymmetry:
    if not is_valid_partition(g, p):
        return PartitionSymmetry(False)
    gc = complement(g)
    rotation = (1, 2, 3, 0)
    found = None
    # try the rotation first so the strict flag is exact
    for roles in [rotation] + [r for r in itertools.permutations(range(4)) if r != rotation]:
        image = [p.parts[roles[j]] for j in range(4)]
        if not _pattern_holds(gc, image, p.kind):
            continue
        sigma = _antimorphism_with_roles(g, p.parts, roles)
        if sigma is not None:
            found = (sigma, roles)
            break
    if found is None:
        return PartitionSymmetry(False)
    sigma, roles = found
    return PartitionSymmetry(True, sigma, tuple(roles), tuple(roles) == rotation)


def is_self_complementary_partition(g: Graph, p: FourPartition) -> bool:
    return partition_symmetry(g, p).self_complementary


def rectangle_partition(g: Graph) -> FourPartition | None:
    """The block partition of Z_k carried over to g, or None when g is not isomorphic to Z_k."""
    if g.n == 0 or g.n % 4:
        return None
    k = g.n // 4
    z = build_Zk(k)
    iso = is_isomorphic(z, g)
    if iso is None:
        return None
    # Z_k: independent 2k..3k-1, clique blocks 0..k-1 and k..2k-1, independent 3k..4k-1
    blocks = [range(2 * k, 3 * k), range(0, k), range(k, 2 * k), range(3 * k, 4 * k)]
    parts = tuple(frozenset(iso(v) for v in b) for b in blocks)
    p = FourPartition(parts, PartitionKind.RECTANGLE)
    if not is_valid_partition(g, p):
        raise AssertionError("isomorphic image of the Z_k blocks is not a rectangle partition")
    return p


def find_rectangle_bruteforce(g: Graph) -> FourPartition | None:
    """Any rectangle partition of g, by backtracking over part assignments."""
    n = g.n
    if n < 4:
        return None
    # required relation between parts a, b: True = complete, False = anticomplete
    rel = {}
    for a, b, r in ((0, 1, True), (0, 2, False), (3, 2, True), (3, 1, False)):
        rel[a, b] = rel[b, a] = r
    assign = [-1] * n

    def ok(v, part):
        for u in range(v):
            r = rel.get((part, assign[u]))
            if r is not None and g.has_edge(u, v) != r:
                return False
        return True

    def rec(v):
        if v == n:
            if len(set(assign)) == 4:
                return True
            return False
        # reversing the roles (V1..V4 -> V4..V1) is a symmetry; pin vertex 0 to V1 or V2
        choices = (0, 1) if v == 0 else range(4)
        for part in choices:
            if ok(v, part):
                assign[v] = part
                if rec(v + 1):
                    return True
                assign[v] = -1
        return False

    if not rec(0):
        return None
    parts = tuple(frozenset(v for v in range(n) if assign[v] == j) for j in range(4))
    return FourPartition(parts, PartitionKind.RECTANGLE)
