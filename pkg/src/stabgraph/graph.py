"""Decorated graphs for stabilizer states, plus the primitive rewrite moves.

A state is drawn as a simple graph whose nodes carry three decorations:

* fill: solid or hollow (hollow marks a terminal Hadamard on that qubit),
* an optional loop (a terminal phase gate),
* an optional negative sign (a terminal Z).

Edges live in ``adj`` as one bitmask per node (bit k of ``adj[j]`` means an
edge j-k); the matrix is symmetric with a zero diagonal, and loops are kept
separately in ``loop``.  A graph is *reduced* when no hollow node has a
loop and no two hollow nodes are adjacent; every state has a reduced
drawing, which is what the reduced rewrite rules operate on.

All operations return new graphs; instances are frozen and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class StabilizerGraph:
    """A decorated graph describing a stabilizer state."""

    n: int
    hollow: Tuple[bool, ...]
    loop: Tuple[bool, ...]
    neg: Tuple[bool, ...]
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one node, got n={self.n}")
        for name in ("hollow", "loop", "neg", "adj"):
            if len(getattr(self, name)) != self.n:
                raise ValueError(f"{name} must have length n={self.n}")
        full = (1 << self.n) - 1
        for j, row in enumerate(self.adj):
            if not 0 <= row <= full:
                raise ValueError(f"adjacency row {j} out of range")
            if (row >> j) & 1:
                raise ValueError(f"node {j} has a diagonal adjacency entry")
            for k in _bits(row):
                if not (self.adj[k] >> j) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({j}, {k})")

    @classmethod
    def empty(cls, n: int) -> "StabilizerGraph":
        """All nodes solid, no loops, no signs, no edges (the |+...+> state)."""
        f = (False,) * n
        return cls(n, f, f, f, (0,) * n)

    @classmethod
    def build(
        cls,
        n: int,
        *,
        edges: Iterable[Tuple[int, int]] = (),
        hollow: Iterable[int] = (),
        loops: Iterable[int] = (),
        neg: Iterable[int] = (),
    ) -> "StabilizerGraph":
        """Convenience constructor from node index sets and an edge list."""
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self edge at node {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        hol = [False] * n
        lp = [False] * n
        ng = [False] * n
        for name, flags, idxs in (
            ("hollow", hol, hollow),
            ("loops", lp, loops),
            ("neg", ng, neg),
        ):
            for j in idxs:
                if not 0 <= j < n:
                    raise ValueError(f"{name} index {j} out of range")
                flags[j] = True
        return cls(n, tuple(hol), tuple(lp), tuple(ng), tuple(adj))

    def edges(self) -> list[Tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i]) if i < j]

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)


class _Mutable:
    """Scratch copy used internally while applying a rewrite."""

    __slots__ = ("n", "hollow", "loop", "neg", "adj")

    def __init__(self, g: StabilizerGraph) -> None:
        self.n = g.n
        self.hollow = list(g.hollow)
        self.loop = list(g.loop)
        self.neg = list(g.neg)
        self.adj = list(g.adj)

    def freeze(self) -> StabilizerGraph:
        return StabilizerGraph(
            self.n,
            tuple(self.hollow),
            tuple(self.loop),
            tuple(self.neg),
            tuple(self.adj),
        )

    def neighbors_mask(self, j: int) -> int:
        return self.adj[j]

    def neighbors(self, j: int) -> set[int]:
        return set(_bits(self.adj[j]))

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def toggle_edge(self, i: int, j: int) -> None:
        if i == j:
            raise ValueError(f"self edge at node {i}")
        self.adj[i] ^= 1 << j
        self.adj[j] ^= 1 << i

    def flip_fill(self, j: int) -> None:
        self.hollow[j] = not self.hollow[j]

    def flip_sign(self, j: int) -> None:
        self.neg[j] = not self.neg[j]

    def advance(self, j: int) -> None:
        # One application of a phase gate: add a loop, or trade an existing
        # loop for a sign flip (two loops make a Z).
        if self.loop[j]:
            self.loop[j] = False
            self.neg[j] = not self.neg[j]
        else:
            self.loop[j] = True

    def local_complement(self, j: int) -> None:
        nb = self.adj[j]
        for l in _bits(nb):
            self.adj[l] ^= nb & ~(1 << l)

    def local_complement_edge(self, j: int, k: int) -> None:
        # Simultaneous update: entry (l, m) gains a_l*b_m + a_m*b_l, where
        # a/b are the adjacency rows of the decision pair with the node
        # itself included.  Diagonal entries are left untouched.
        a = self.adj[j] | (1 << j)
        b = self.adj[k] | (1 << k)
        old = list(self.adj)
        for l in range(self.n):
            delta = 0
            if (a >> l) & 1:
                delta ^= b
            if (b >> l) & 1:
                delta ^= a
            self.adj[l] = (old[l] ^ delta) & ~(1 << l)

    def local_complement_edge_step3(self, j: int, k: int) -> None:
        # Only the third step of edge complementation: toggle edges between
        # non-decision nodes whose decision neighborhoods are non-empty and
        # different (adjacent to j only / to k only / to both).
        dm = (1 << j) | (1 << k)
        only_j = self.adj[j] & ~self.adj[k] & ~dm
        only_k = self.adj[k] & ~self.adj[j] & ~dm
        both = self.adj[j] & self.adj[k] & ~dm
        for group_a, group_b in ((only_j, only_k), (only_j, both), (only_k, both)):
            for l in _bits(group_a):
                self.adj[l] ^= group_b
            for l in _bits(group_b):
                self.adj[l] ^= group_a


def _check_node(g: StabilizerGraph, j: int) -> None:
    if not 0 <= j < g.n:
        raise ValueError(f"node {j} out of range for n={g.n}")


def is_reduced(g: StabilizerGraph) -> bool:
    """True when no hollow node has a loop or a hollow neighbor."""
    hollow_mask = 0
    for j in range(g.n):
        if g.hollow[j]:
            hollow_mask |= 1 << j
    for j in _bits(hollow_mask):
        if g.loop[j] or g.adj[j] & hollow_mask:
            return False
    return True


def neighbors(g: StabilizerGraph, j: int) -> set[int]:
    _check_node(g, j)
    return set(_bits(g.adj[j]))


def local_complement(g: StabilizerGraph, j: int) -> StabilizerGraph:
    """Complement the subgraph induced by the neighbors of j."""
    _check_node(g, j)
    m = _Mutable(g)
    m.local_complement(j)
    return m.freeze()


def local_complement_edge(g: StabilizerGraph, j: int, k: int) -> StabilizerGraph:
    """Complement along the pair (j, k).

    For a connected pair this swaps the private neighborhoods of j and k
    and complements edges between nodes whose decision neighborhoods are
    non-empty and different; it equals complementing on j, then k, then j.
    """
    _check_node(g, j)
    _check_node(g, k)
    if j == k:
        raise ValueError("decision nodes must differ")
    m = _Mutable(g)
    m.local_complement_edge(j, k)
    return m.freeze()


def local_complement_edge_step3(
    g: StabilizerGraph, j: int, k: int
) -> StabilizerGraph:
    """Only the cross-neighborhood toggles of edge complementation."""
    _check_node(g, j)
    _check_node(g, k)
    if j == k:
        raise ValueError("decision nodes must differ")
    m = _Mutable(g)
    m.local_complement_edge_step3(j, k)
    return m.freeze()


def advance_loop(g: StabilizerGraph, j: int) -> StabilizerGraph:
    """Add a loop at j, or trade an existing loop for a sign flip."""
    _check_node(g, j)
    m = _Mutable(g)
    m.advance(j)
    return m.freeze()


def flip_fill(g: StabilizerGraph, j: int) -> StabilizerGraph:
    _check_node(g, j)
    m = _Mutable(g)
    m.flip_fill(j)
    return m.freeze()


def flip_sign(g: StabilizerGraph, j: int) -> StabilizerGraph:
    _check_node(g, j)
    m = _Mutable(g)
    m.flip_sign(j)
    return m.freeze()
