"""Graph families: elementary SC pseudo-split graphs, one-cycle SC graphs,
Z_k, circulant powers, and non-self-complementary witnesses for degree
sequences that are not forcibly self-complementary.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .graph import (
    Graph,
    Permutation,
    find_antimorphism,
    from_mask,
    graph6_read,
    induced_subgraph,
    is_antimorphism,
    is_isomorphic,
    path_graph,
    popcount,
)
from .degseq import DegreeSequence, degree_classes, degree_sequence, is_potentially_sc_bruteforce, two_switch

KINDS = ("P4", "A", "B")
TAILS = ("none", "apex", "c5")


@dataclass(frozen=True)
class _Block:
    graph: Graph
    K: tuple[int, ...]
    I: tuple[int, ...]
    antimorphism: Permutation


# Order-8 SC split graphs with degrees (5^4, 2^4); vertices 0-3 form the clique.
# A: the K-I edges form an 8-cycle.  B: two disjoint K_{2,2} (isomorphic to Z_2).
FIG_A = graph6_read("G~qa`_")
FIG_B = graph6_read("G~r@`_")
# Order-8 graph with degrees (4^4, 3^4) that is not self-complementary.
FIG_NOT_SC_4433 = graph6_read("GfpdHo")


def _make_block(g: Graph, K) -> _Block:
    sigma = find_antimorphism(g)
    assert sigma is not None, "block prototype must be self-complementary"
    return _Block(g, tuple(K), tuple(v for v in range(g.n) if v not in K), sigma)


def _validate_prototypes():
    for g in (FIG_A, FIG_B):
        if degree_sequence(g) != DegreeSequence(((5, 4), (2, 4))):
            raise RuntimeError("order-8 prototype has the wrong degree sequence")
        if find_antimorphism(g) is None:
            raise RuntimeError("order-8 prototype is not self-complementary")
    if is_isomorphic(FIG_A, FIG_B) is not None:
        raise RuntimeError("order-8 prototypes must be non-isomorphic")
    if degree_sequence(FIG_NOT_SC_4433) != DegreeSequence(((4, 4), (3, 4))):
        raise RuntimeError("(4^4,3^4) witness has the wrong degree sequence")


_validate_prototypes()

BLOCKS = {
    "P4": _make_block(path_graph(4), (1, 2)),
    "A": _make_block(FIG_A, (0, 1, 2, 3)),
    "B": _make_block(FIG_B, (0, 1, 2, 3)),
}


@dataclass(frozen=True)
class BlockSpec:
    """Blocks S_1..S_p (each P4, A or B) plus a tail: none, apex vertex or C5."""

    blocks: tuple[str, ...]
    tail: str = "none"

    def __post_init__(self):
        bad = [b for b in self.blocks if b not in KINDS]
        if bad:
            raise ValueError(f"unknown block kinds {bad}; expected one of {KINDS}")
        if self.tail not in TAILS:
            raise ValueError(f"unknown tail {self.tail!r}; expected one of {TAILS}")
        if not self.blocks and self.tail == "none":
            raise ValueError("an empty block list needs an apex or C5 tail")

    @classmethod
    def parse(cls, text: str) -> "BlockSpec":
        """Parse "P4,A,B;c5", "P4,P4;apex", ";c5" or "P4,P4"."""
        head, _, tail = text.strip().partition(";")
        blocks = tuple(b.strip() for b in head.split(",") if b.strip())
        aliases = {"FIG_A": "A", "FIG_B": "B", "p4": "P4", "a": "A", "b": "B"}
        blocks = tuple(aliases.get(b, b) for b in blocks)
        return cls(blocks, tail.strip().lower() or "none")

    @property
    def order(self) -> int:
        return sum(BLOCKS[b].graph.n for b in self.blocks) + {"none": 0, "apex": 1, "c5": 5}[self.tail]

    def __str__(self):
        text = ",".join(self.blocks)
        return text if self.tail == "none" else f"{text};{self.tail}"


def _elementary_layout(spec: BlockSpec):
    """Vertex offsets: blocks in order, then the tail."""
    offsets = []
    pos = 0
    for b in spec.blocks:
        offsets.append(pos)
        pos += BLOCKS[b].graph.n
    return offsets, pos


def build_elementary(spec: BlockSpec) -> Graph:
    offsets, tail_start = _elementary_layout(spec)
    n = spec.order
    edges = []
    Ks, Is = [], []
    for b, off in zip(spec.blocks, offsets):
        blk = BLOCKS[b]
        edges += [(u + off, v + off) for u, v in blk.graph.edges()]
        Ks.append([v + off for v in blk.K])
        Is.append([v + off for v in blk.I])
    all_k = [v for K in Ks for v in K]
    edges += [(u, v) for i, u in enumerate(all_k) for v in all_k[i + 1:]]
    for i, K in enumerate(Ks):
        later_i = [v for I in Is[i + 1:] for v in I]
        edges += [(u, v) for u in K for v in later_i]
    tail = list(range(tail_start, n))
    edges += [(t, u) for t in tail for u in all_k]
    if spec.tail == "c5":
        edges += [(tail[i], tail[(i + 1) % 5]) for i in range(5)]
    g = Graph.from_edges(n, set(tuple(sorted(e)) for e in edges))
    return g


def elementary_antimorphism(spec: BlockSpec) -> Permutation:
    """The blockwise antimorphism: each block's own, a fixed apex, C5's squaring map."""
    offsets, tail_start = _elementary_layout(spec)
    image = list(range(spec.order))
    for b, off in zip(spec.blocks, offsets):
        for v, w in enumerate(BLOCKS[b].antimorphism.image):
            image[v + off] = w + off
    if spec.tail == "c5":
        for i in range(5):
            image[tail_start + i] = tail_start + (2 * i) % 5
    return Permutation(tuple(image))


def decompose_elementary(g: Graph) -> BlockSpec | None:
    """Recover a BlockSpec whose elementary graph is isomorphic to g, or None.

    The i-th highest and i-th lowest degree classes must form block i (clique
    side on top); an odd middle class must be a single vertex or a C5.
    """
    if g.n == 0:
        return None
    classes = degree_classes(g)
    ell = len(classes)
    blocks = []
    for i in range(ell // 2):
        high, low = classes[i], classes[ell - 1 - i]
        if len(high) != len(low) or len(high) not in (2, 4):
            return None
        if not (g.is_clique(high) and g.is_independent(low)):
            return None
        s = induced_subgraph(g, high | low)
        kind = _block_kind(s)
        if kind is None:
            return None
        blocks.append(kind)
    tail = "none"
    if ell % 2:
        mid = classes[ell // 2]
        if len(mid) == 1:
            tail = "apex"
        elif len(mid) == 5 and all(popcount(g.rows[v] & sum(1 << u for u in mid)) == 2 for v in mid):
            tail = "c5"
        else:
            return None
    spec = BlockSpec(tuple(blocks), tail)
    if is_isomorphic(build_elementary(spec), g) is None:
        return None
    return spec


def _block_kind(s: Graph) -> str | None:
    for kind in ("P4", "A", "B"):
        if is_isomorphic(BLOCKS[kind].graph, s) is not None:
            return kind
    return None


def build_gibbs_onecycle(k: int, d: int) -> Graph:
    """SC graph on 4k vertices with antimorphism (v_1 v_2 ... v_4k); vertex i-1 is v_i.

    v_1 is adjacent to v_2, v_6, ..., v_{4k-2} and a set X of odd-indexed
    vertices chosen by the parity of d - k.  Every other pair follows from
    sigma flipping adjacency: adj(v_i, v_j) = adj(v_1, v_{j-i+1}) xor (i-1 mod 2).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not 2 * k <= d <= 3 * k - 1:
        raise ValueError(f"need 2k <= d <= 3k-1, got k={k}, d={d}")
    n = 4 * k
    nbrs = set(range(2, 4 * k - 1, 4))
    if (d - k) % 2:
        nbrs |= set(range(3, d - k + 1, 2)) | {2 * k + 1} | set(range(4 * k - 1, 5 * k - d + 1, -2))
    else:
        nbrs |= set(range(3, d - k + 2, 2)) | set(range(4 * k - 1, 5 * k - d, -2))
    assert len(nbrs) == d, (k, d, sorted(nbrs))
    first = [False] * (n + 1)  # first[m]: v_1 ~ v_{1+m}
    for j in nbrs:
        first[j - 1] = True
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if first[(j - i) % n] ^ (i % 2 == 1):
                rows[i] |= 1 << j
    g = Graph(n, tuple(rows))  # raises if the rule were asymmetric
    sigma = Permutation(tuple((i + 1) % n for i in range(n)))
    assert is_antimorphism(g, sigma)
    return g


def gibbs_antimorphism(k: int) -> Permutation:
    n = 4 * k
    return Permutation(tuple((i + 1) % n for i in range(n)))


def build_Zk(k: int) -> Graph:
    """P4 with ends blown up to independent k-sets and middles to k-cliques.

    Vertices 0..2k-1 are the clique (0..k-1 and k..2k-1 are the two blocks);
    2k..3k-1 hang on the first block and 3k..4k-1 on the second.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = 4 * k
    edges = [(u, v) for u in range(2 * k) for v in range(u + 1, 2 * k)]
    edges += [(u, 2 * k + t) for u in range(k) for t in range(k)]
    edges += [(k + u, 3 * k + t) for u in range(k) for t in range(k)]
    return Graph.from_edges(n, edges)


def build_circulant_power(k: int) -> Graph:
    """C_{4k+1}^k: vertices on a (4k+1)-cycle joined when at distance <= k."""
    if k < 1:
        raise ValueError("k must be positive")
    n = 4 * k + 1
    return Graph.from_edges(n, [(i, (i + j) % n) for i in range(n) for j in range(1, k + 1)])


def neighborhood_edge_counts(g: Graph) -> tuple[list[int], list[int]]:
    """Per vertex: edges inside N(v), and non-edges inside V - N[v].

    An antimorphism carries the first multiset onto the second, so unequal
    multisets prove g is not self-complementary.
    """
    inside, outside = [], []
    full = g.vertex_mask()
    for v in range(g.n):
        nb = g.rows[v]
        rest = full & ~nb & ~(1 << v)
        inside.append(sum(popcount(g.rows[u] & nb) for u in from_mask(nb)) // 2)
        m = popcount(rest)
        e = sum(popcount(g.rows[u] & rest) for u in from_mask(rest)) // 2
        outside.append(m * (m - 1) // 2 - e)
    return inside, outside


def witness_regular(k: int) -> Graph:
    """Non-SC realization of ((2k)^{4k+1}) for k >= 2."""
    if k < 2:
        raise ValueError("witness_regular needs k >= 2")
    return build_circulant_power(k)


def witness_two_degree(k: int, d: int) -> Graph:
    """Non-SC realization of (d^{2k}, (4k-1-d)^{2k}), k >= 2, for potentially SC sequences."""
    if k < 2:
        raise ValueError("witness_two_degree needs k >= 2")
    if not 2 * k <= d <= 3 * k - 1:
        raise ValueError(f"({d}^{2 * k},{4 * k - 1 - d}^{2 * k}) has no SC realization; need 2k <= d <= 3k-1")
    if k == 2:
        if d == 5:
            raise ValueError("(5^4,2^4) is forcibly self-complementary")
        return FIG_NOT_SC_4433
    if d == 3 * k - 1:
        # u_1..u_2k = vertices 0..2k-1, v_1..v_2k = 2k..4k-1 in build_Zk
        g = build_Zk(k)
        u = lambda i: i - 1
        v = lambda i: 2 * k + i - 1
        for i in range(1, k + 1):
            g = two_switch(g, u(k), v(i), v(k + i), u(k + i))
        return g
    g = build_gibbs_onecycle(k, d)
    v = lambda i: i - 1
    if g.has_edge(v(1), v(2 * k + 1)):
        return two_switch(g, v(1), v(2 * k + 1), v(2 * k - 1), v(2 * k))
    j = d - k + 1
    return two_switch(g, v(1), v(j), v(j + 2), v(j + 3))


class PotentialityUncheckedWarning(UserWarning):
    """Raised when a witness's degree sequence could not be confirmed potentially SC."""


def four_degree_sequence(k1: int, k2: int, d: int, n: int) -> DegreeSequence:
    return DegreeSequence(((d, 2 * k1), (d - 1, 2 * k2), (n - d, 2 * k2), (n - 1 - d, 2 * k1)))


def witness_four_degree(k1: int, k2: int, d: int, n: int, check: bool = True) -> Graph:
    """Non-SC realization of (d^{2k1}, (d-1)^{2k2}, (n-d)^{2k2}, (n-1-d)^{2k1}).

    Starts from the one-cycle graph on 4(k1+k2) vertices, moves k2 edges
    v_{1+4i}v_{3+4i} to v_{2+4i}v_{4+4i}, then applies
    (v_1v_5, v_3v_4) -> (v_1v_3, v_4v_5).
    """
    if k1 < 1 or k2 < 1:
        raise ValueError("k1 and k2 must be positive")
    k = k1 + k2
    if n != 4 * k:
        raise ValueError(f"n must equal 4(k1+k2) = {4 * k}")
    if not 2 * k + 1 <= d <= 3 * k - 1:
        raise ValueError(f"sequence is not potentially self-complementary unless 2k+1 <= d <= 3k-1 (k={k})")
    if check:
        ds = four_degree_sequence(k1, k2, d, n)
        if n <= 10:
            ok = is_potentially_sc_bruteforce(ds)
        elif n <= 13:
            from .oracle import has_sc_realization

            ok = has_sc_realization(ds)
        else:
            ok = None
            warnings.warn(f"{ds} not verified to be potentially self-complementary", PotentialityUncheckedWarning)
        if ok is False:
            raise ValueError(f"{ds} is not potentially self-complementary")
    g = build_gibbs_onecycle(k, d)
    v = lambda i: (i - 1) % n
    if not (g.has_edge(v(1), v(3)) and g.has_edge(v(1), v(5))):
        raise AssertionError("one-cycle construction lacks v1v3 or v1v5")
    for i in range(k2):
        g = g.with_edges(remove=[(v(1 + 4 * i), v(3 + 4 * i))], add=[(v(2 + 4 * i), v(4 + 4 * i))])
    return two_switch(g, v(1), v(5), v(3), v(4))
