"""Self-complementary split and pseudo-split graphs: construction, recognition, counting."""

from .graph import (
    Graph,
    Permutation,
    complement,
    find_antimorphism,
    graph6_read,
    graph6_write,
    induced_subgraph,
    is_isomorphic,
)

__all__ = [
    "Graph",
    "Permutation",
    "complement",
    "find_antimorphism",
    "graph6_read",
    "graph6_write",
    "induced_subgraph",
    "is_isomorphic",
]
