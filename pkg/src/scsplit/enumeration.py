"""Exact counts of self-complementary split and pseudo-split graphs.

lambda_{4k} = sum over cycle structures c of 2^P(c) / prod_q (4q)^{c_q} c_q!
where c_q counts antimorphism cycles of length 4q.  Terms are rational;
only the total is an integer, so everything is summed as Fractions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Iterator

# Published counts (n: split, pseudo-split, all).
TABLE1 = {
    4: (1, 1, 1),
    5: (1, 2, 2),
    8: (3, 3, 10),
    9: (3, 4, 36),
    12: (16, 16, 720),
    13: (16, 19, 5600),
    16: (218, 218, 703760),
    17: (218, 234, 11220000),
    20: (9608, 9608, 9168331776),
    21: (9608, 9826, 293293716992),
}


@dataclass(frozen=True)
class CycleStructure:
    """c_q = number of cycles of length 4q, stored as sorted (q, c_q) pairs with c_q > 0."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if any(q < 1 or c < 0 for q, c in self.counts):
            raise ValueError(f"invalid cycle structure {self.counts}")
        object.__setattr__(self, "counts", tuple(sorted((q, c) for q, c in self.counts if c)))

    @classmethod
    def from_mapping(cls, c: dict[int, int]) -> "CycleStructure":
        return cls(tuple(c.items()))

    @property
    def k(self) -> int:
        return sum(q * c for q, c in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def cycle_lengths(self) -> list[int]:
        return sorted((4 * q for q, c in self.counts for _ in range(c)), reverse=True)


def _partitions(m: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for p in range(min(m, max_part), 0, -1):
        for rest in _partitions(m - p, p):
            yield (p,) + rest


def cycle_structures(k: int) -> Iterator[CycleStructure]:
    """Every cycle structure on 4k vertices (one per integer partition of k), lazily."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    for part in _partitions(k, k):
        c: dict[int, int] = {}
        for q in part:
            c[q] = c.get(q, 0) + 1
        yield CycleStructure.from_mapping(c)


def exponent_P(c: CycleStructure) -> int:
    """P = sum_q (q c_q^2 + c_q) + 2 sum_{r<s} c_r c_s gcd(r, s)."""
    items = c.counts
    total = sum(q * cq * cq + cq for q, cq in items)
    for i, (r, cr) in enumerate(items):
        for s, cs in items[i + 1:]:
            total += 2 * cr * cs * gcd(r, s)
    return total


def _centralizer(c: CycleStructure) -> int:
    out = 1
    for q, cq in c.counts:
        out *= (4 * q) ** cq * factorial(cq)
    return out


def lambda_split_term(c: CycleStructure) -> Fraction:
    return Fraction(2 ** exponent_P(c), _centralizer(c))


def lambda_split(n: int) -> int:
    """Number of non-isomorphic SC split graphs on n vertices."""
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if n in (0, 1):
        return 1
    if n % 4 in (2, 3):
        return 0
    k = n // 4
    total = sum((lambda_split_term(c) for c in cycle_structures(k)), Fraction(0))
    if total.denominator != 1:
        raise AssertionError(f"count for n={n} is not an integer: {total}")
    return total.numerator


def lambda_pseudo_split(n: int) -> int:
    """Number of non-isomorphic SC pseudo-split graphs on n vertices."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n % 4 == 0:
        return lambda_split(n)
    if n % 4 == 1:
        return lambda_split(n - 1) + (lambda_split(n - 5) if n >= 5 else 0)
    return 0


def labeled_count(k: int) -> int:
    """Pairs (labeled SC split graph on 4k vertices, antimorphism): sum_c (4k)!/z_c * 2^P."""
    n_fact = factorial(4 * k)
    return sum(n_fact // _centralizer(c) * 2 ** exponent_P(c) for c in cycle_structures(k))


def count_rows(orders) -> list[dict]:
    return [{"n": n, "split": lambda_split(n), "pseudo_split": lambda_pseudo_split(n)} for n in orders]


def format_table(orders, family: str | None = None) -> str:
    """Aligned text table with a header row of orders and one row per family."""
    rows = count_rows(orders)
    families = [("split", "split graphs"), ("pseudo_split", "pseudo-split graphs")]
    if family is not None:
        families = [f for f in families if f[0] == family.replace("-", "_")]
    cells = [["n"] + [str(r["n"]) for r in rows]]
    for key, label in families:
        cells.append([label] + [str(r[key]) for r in rows])
    widths = [max(len(line[i]) for line in cells) for i in range(len(cells[0]))]
    out = []
    for line in cells:
        first = line[0].ljust(widths[0])
        rest = [cell.rjust(w) for cell, w in zip(line[1:], widths[1:])]
        out.append("  ".join([first] + rest))
    return "\n".join(out)


def format_json(orders, family: str | None = None) -> str:
    rows = count_rows(orders)
    if family is not None:
        key = family.replace("-", "_")
        rows = [{"n": r["n"], key: r[key]} for r in rows]
    return json.dumps(rows, indent=2)
