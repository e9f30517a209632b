"""Labeled simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit row per vertex, so set operations on
neighborhoods are single machine-word operations.  Graphs are immutable;
every operation that changes structure returns a new graph.

Isomorphism testing uses color refinement followed by individualization
backtracking.  The same engine finds antimorphisms (isomorphisms onto the
complement) with extra pruning on the cycle structure of the partial map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(r) for r in self.rows)

    @property
    def num_edges(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def with_edges(self, add=(), remove=()) -> "Graph":
        rows = list(self.rows)
        for u, v in remove:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        for u, v in add:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def add_vertices(self, count: int, neighborhoods: Sequence[Iterable[int]] = ()) -> "Graph":
        """Append `count` vertices; the i-th new vertex gets neighborhoods[i]."""
        n = self.n + count
        rows = list(self.rows) + [0] * count
        for i, nbrs in enumerate(neighborhoods):
            v = self.n + i
            for u in nbrs:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def relabel(self, perm: "Permutation") -> "Graph":
        """Graph with vertex perm(v) playing the role of v."""
        rows = [0] * self.n
        img = perm.image
        for u in range(self.n):
            r = 0
            for v in _bits(self.rows[u]):
                r |= 1 << img[v]
            rows[img[u]] = r
        return Graph(self.n, tuple(rows))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(mask & ~self.rows[v] == 1 << v for v in _bits(mask))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(self.rows[v] & mask == 0 for v in _bits(mask))

    def is_complete_to(self, a: Iterable[int], b: Iterable[int]) -> bool:
        mb = to_mask(b)
        return all(self.rows[v] & mb == mb for v in _bits(to_mask(a)))

    def is_anticomplete_to(self, a: Iterable[int], b: Iterable[int]) -> bool:
        mb = to_mask(b)
        return all(self.rows[v] & mb == 0 for v in _bits(to_mask(a)))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_mask(mask: int) -> list[int]:
    return list(_bits(mask))


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..n-1}, stored as its image list."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        image = list(range(n))
        seen = set()
        for cyc in cycles:
            for i, v in enumerate(cyc):
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two cycles")
                seen.add(v)
                image[v] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            v = start
            while not seen[v]:
                seen[v] = True
                cyc.append(v)
                v = self.image[v]
            out.append(tuple(cyc))
        return tuple(out)

    def cycle_lengths(self) -> list[int]:
        return sorted(len(c) for c in self.cycles)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        return Permutation(tuple(self.image[other.image[v]] for v in range(self.n)))

    def power(self, e: int) -> "Permutation":
        base = self if e >= 0 else self.inverse()
        out = Permutation.identity(self.n)
        for _ in range(abs(e)):
            out = base.compose(out)
        return out

    def map_set(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.image[v] for v in vertices)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by `vertices`, relabeled 0.. in increasing label order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph of order {g.n}")
    pos = {v: i for i, v in enumerate(vs)}
    mask = to_mask(vs)
    rows = []
    for v in vs:
        r = 0
        for u in _bits(g.rows[v] & mask):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph(len(vs), tuple(rows))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    drop = set(vertices)
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


def is_isomorphism(g: Graph, h: Graph, perm: Permutation) -> bool:
    if g.n != h.n or perm.n != g.n:
        return False
    return g.relabel(perm) == h


def is_antimorphism(g: Graph, perm: Permutation) -> bool:
    return is_isomorphism(g, complement(g), perm)


# --- isomorphism search ---------------------------------------------------


def _refine(ga: Graph, gb: Graph, ca: list[int], cb: list[int]):
    """Jointly refine two colorings to equitable ones.

    Color ids are assigned from the sorted union of signatures, so a vertex of
    `ga` and a vertex of `gb` share a color exactly when no isomorphism
    respecting the input colors can be ruled out by counting.  Returns None
    when the color-class sizes diverge.
    """
    while True:
        ncol = max(max(ca, default=-1), max(cb, default=-1)) + 1
        masks_a = [0] * ncol
        masks_b = [0] * ncol
        for v, c in enumerate(ca):
            masks_a[c] |= 1 << v
        for v, c in enumerate(cb):
            masks_b[c] |= 1 << v
        sig_a = [(ca[v], tuple(popcount(ga.rows[v] & m) for m in masks_a)) for v in range(ga.n)]
        sig_b = [(cb[v], tuple(popcount(gb.rows[v] & m) for m in masks_b)) for v in range(gb.n)]
        ids = {s: i for i, s in enumerate(sorted(set(sig_a) | set(sig_b)))}
        na = [ids[s] for s in sig_a]
        nb = [ids[s] for s in sig_b]
        if sorted(na) != sorted(nb):
            return None
        if len(ids) == ncol:
            return na, nb
        ca, cb = na, nb


def _cycle_ok(mapping: dict[int, int], n: int) -> bool:
    """Partial antimorphism check: closed cycles have length 1 or 4t, <=1 fixed point."""
    fixed = 0
    seen: set[int] = set()
    for start in mapping:
        if start in seen:
            continue
        v = start
        length = 0
        while True:
            seen.add(v)
            v = mapping[v]
            length += 1
            if v == start:
                if length == 1:
                    fixed += 1
                    if fixed > 1 or n % 4 != 1:
                        return False
                elif length % 4:
                    return False
                break
            if v not in mapping or v in seen:
                break
    return True


def _search(ga: Graph, gb: Graph, ca: list[int], cb: list[int], anti: bool):
    ref = _refine(ga, gb, ca, cb)
    if ref is None:
        return None
    ca, cb = ref
    classes_a: dict[int, list[int]] = {}
    classes_b: dict[int, list[int]] = {}
    for v, c in enumerate(ca):
        classes_a.setdefault(c, []).append(v)
    for v, c in enumerate(cb):
        classes_b.setdefault(c, []).append(v)
    if anti:
        partial = {classes_a[c][0]: classes_b[c][0] for c in classes_a if len(classes_a[c]) == 1}
        if not _cycle_ok(partial, ga.n):
            return None
    cells = [c for c in classes_a if len(classes_a[c]) > 1]
    if not cells:
        perm = [0] * ga.n
        for c, vs in classes_a.items():
            perm[vs[0]] = classes_b[c][0]
        p = Permutation(tuple(perm))
        return p if ga.relabel(p) == gb else None
    target = min(cells, key=lambda c: (len(classes_a[c]), c))
    u = classes_a[target][0]
    fresh = max(max(ca), max(cb)) + 1
    for w in classes_b[target]:
        na = list(ca)
        nb = list(cb)
        na[u] = fresh
        nb[w] = fresh
        found = _search(ga, gb, na, nb, anti)
        if found is not None:
            return found
    return None


def _mapping_search(g: Graph, h: Graph, colors_g=None, colors_h=None, anti=False):
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees) != sorted(h.degrees):
        return None
    if g.n == 0:
        return Permutation(())
    ca = list(colors_g) if colors_g is not None else [0] * g.n
    cb = list(colors_h) if colors_h is not None else [0] * h.n
    return _search(g, h, ca, cb, anti)


def is_isomorphic(g: Graph, h: Graph, colors_g=None, colors_h=None) -> Permutation | None:
    """An isomorphism g -> h as a Permutation, or None.

    Optional integer colorings restrict the search to maps sending each
    vertex of g to a vertex of h with the same color.
    """
    return _mapping_search(g, h, colors_g, colors_h)


def find_antimorphism(g: Graph, colors=None, target_colors=None) -> Permutation | None:
    """An isomorphism from g onto its complement, or None if g is not self-complementary.

    A vertex of degree d can only map to a vertex of degree n-1-d, so the
    initial coloring pairs those classes; partial maps whose closed cycles
    have a length other than 1 or a multiple of 4 are discarded.
    """
    n = g.n
    if (n * (n - 1)) % 4 or g.num_edges * 4 != n * (n - 1):
        return None
    gc = complement(g)
    if colors is None:
        return _mapping_search(g, gc, anti=True)
    return _mapping_search(g, gc, colors, target_colors, anti=True)


def is_self_complementary(g: Graph) -> bool:
    return find_antimorphism(g) is not None


def invariant_key(g: Graph) -> tuple:
    """Isomorphism invariant used to bucket graphs before exact testing."""
    per_vertex = []
    for v in range(g.n):
        row = g.rows[v]
        tri = sum(popcount(g.rows[u] & row) for u in _bits(row)) // 2
        nbr_deg = tuple(sorted(g.degrees[u] for u in _bits(row)))
        per_vertex.append((g.degrees[v], tri, nbr_deg))
    return (g.n, tuple(sorted(per_vertex)))


class IsomorphismClasses:
    """Collects graphs, keeping one representative per isomorphism class."""

    def __init__(self):
        self._buckets: dict[tuple, list[Graph]] = {}
        self.representatives: list[Graph] = []

    def find(self, g: Graph) -> Graph | None:
        for rep in self._buckets.get(invariant_key(g), ()):
            if is_isomorphic(rep, g) is not None:
                return rep
        return None

    def add(self, g: Graph) -> bool:
        """Insert g; True when g opened a new class."""
        key = invariant_key(g)
        bucket = self._buckets.setdefault(key, [])
        for rep in bucket:
            if is_isomorphic(rep, g) is not None:
                return False
        bucket.append(g)
        self.representatives.append(g)
        return True

    def __len__(self):
        return len(self.representatives)


# --- graph6 ---------------------------------------------------------------


def graph6_write(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = [chr(126)] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    bits = []
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def graph6_read(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise ValueError(f"invalid graph6 character in {line!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise ValueError("unsupported or truncated graph6 order header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_ORDER:
        raise ValueError(f"graph6 order {n} exceeds {MAX_ORDER}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for x in body:
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if any(bits[k:]):
        raise ValueError("nonzero padding bits in graph6 string")
    return Graph(n, tuple(rows))


# --- small named graphs ---------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
