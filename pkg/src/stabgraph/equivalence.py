"""State-preserving rewrites and the graph-equivalence decision procedure.

Unlike the gate rules, the rewrites here leave the described state exactly
fixed (not merely up to a known gate), so they generate the set of graphs
drawing the same state:

* E1   flips the fill of a node with a loop, after complementing on it and
       advancing its neighbors' loops; the loop stays put.
* E2   flips the fills of two connected loop-free nodes after
       complementing along their edge.
* E(i) and E(ii) are the reduced-form counterparts used when two reduced
  graphs disagree on a single fill: they move a hollow marker across an
  edge onto a solid neighbor (with a loop for E(i), without for E(ii)).

``graphs_equivalent`` decides whether two graphs describe the same state
up to global phase: reduce both, then repeatedly fix connected nodes on
which the hollow sets disagree with E(i)/E(ii), and finally compare the
graphs bit for bit.  Sign conditions inside a rule are always evaluated on
the decorations as they stand when the sign stage begins, and both
conditional flips are then applied; this is the reading certified by the
dense-simulation oracle.
"""

from __future__ import annotations

from .graph import StabilizerGraph, _Mutable, _bits, is_reduced


def _e1_core(m: _Mutable, j: int) -> None:
    m.flip_fill(j)
    m.local_complement(j)
    nb = m.neighbors(j)
    for l in nb:
        m.advance(l)
    m.flip_sign(j)
    if m.neg[j]:
        for l in nb:
            m.flip_sign(l)


def _e2_core(m: _Mutable, j: int, k: int) -> None:
    m.flip_fill(j)
    m.flip_fill(k)
    m.local_complement_edge(j, k)
    for l in m.neighbors(j) & m.neighbors(k):
        m.flip_sign(l)
    # Both sign conditions are read before either flip is applied.
    j_neg, k_neg = m.neg[j], m.neg[k]
    if j_neg:
        m.flip_sign(j)
        for l in m.neighbors(j):
            m.flip_sign(l)
    if k_neg:
        m.flip_sign(k)
        for l in m.neighbors(k):
            m.flip_sign(l)


def apply_E1(g: StabilizerGraph, j: int) -> StabilizerGraph:
    """Flip the fill of node j, which must carry a loop.

    Complements on j, advances the loops of its neighbors, flips j's fill
    and sign, and, when j ends up negative, flips its neighbors' signs.
    j keeps its loop.  The described state is unchanged.
    """
    if not 0 <= j < g.n:
        raise ValueError(f"node {j} out of range for n={g.n}")
    if not g.loop[j]:
        raise ValueError(f"node {j} has no loop")
    m = _Mutable(g)
    _e1_core(m, j)
    return m.freeze()


def apply_E2(g: StabilizerGraph, j: int, k: int) -> StabilizerGraph:
    """Flip the fills of connected loop-free nodes j and k.

    Complements along the edge, flips signs of common neighbors, and for
    each of j, k that was negative flips it and its current neighbors.
    The described state is unchanged.
    """
    for node in (j, k):
        if not 0 <= node < g.n:
            raise ValueError(f"node {node} out of range for n={g.n}")
        if g.loop[node]:
            raise ValueError(f"node {node} has a loop")
    if j == k or not g.has_edge(j, k):
        raise ValueError(f"nodes {j} and {k} are not connected")
    m = _Mutable(g)
    _e2_core(m, j, k)
    return m.freeze()


def apply_Ei(g: StabilizerGraph, hollow: int, solid: int) -> StabilizerGraph:
    """Swap the fills of a hollow node and a connected solid node that has
    a loop, in a reduced graph.  The described state is unchanged.

    Complement on the solid node and then on the hollow one, drop the
    solid node's loop, advance its current neighbors' loops and flip both
    fills.  Signs: originally-common neighbors flip; a negative solid node
    flips itself and its current neighbors; a negative hollow node flips
    only its current neighbors.
    """
    _check_pair(g, hollow, solid, want_loop=True)
    m = _Mutable(g)
    common0 = m.neighbors(solid) & m.neighbors(hollow)
    solid_neg0, hollow_neg0 = m.neg[solid], m.neg[hollow]
    m.local_complement(solid)
    m.local_complement(hollow)
    m.loop[solid] = False
    for l in m.neighbors(solid):
        m.advance(l)
    m.flip_fill(hollow)
    m.flip_fill(solid)
    for l in common0:
        m.flip_sign(l)
    if solid_neg0:
        m.flip_sign(solid)
        for l in m.neighbors(solid):
            m.flip_sign(l)
    if hollow_neg0:
        for l in m.neighbors(hollow):
            m.flip_sign(l)
    return m.freeze()


def apply_Eii(g: StabilizerGraph, hollow: int, solid: int) -> StabilizerGraph:
    """Swap the fills of a hollow node and a connected loop-free solid
    node, in a reduced graph.  This is exactly the E2 action applied to an
    opposite-fill pair.  The described state is unchanged.
    """
    _check_pair(g, hollow, solid, want_loop=False)
    m = _Mutable(g)
    _e2_core(m, hollow, solid)
    return m.freeze()


def _check_pair(g: StabilizerGraph, hollow: int, solid: int, want_loop: bool) -> None:
    for node in (hollow, solid):
        if not 0 <= node < g.n:
            raise ValueError(f"node {node} out of range for n={g.n}")
    if not is_reduced(g):
        raise ValueError("graph is not reduced")
    if not g.hollow[hollow] or g.hollow[solid]:
        raise ValueError(f"expected hollow node {hollow} and solid node {solid}")
    if hollow == solid or not g.has_edge(hollow, solid):
        raise ValueError(f"nodes {hollow} and {solid} are not connected")
    if g.loop[solid] != want_loop:
        have = "a loop" if g.loop[solid] else "no loop"
        need = "a loop" if want_loop else "no loop"
        raise ValueError(f"solid node {solid} has {have}, rule needs {need}")


def to_reduced(g: StabilizerGraph) -> StabilizerGraph:
    """Rewrite into reduced form without changing the described state.

    First every hollow node with a loop is made solid with E1 (lowest
    index first; advancing may mint new loops on hollow neighbors, so the
    scan restarts).  Then every hollow-hollow edge is cleared with E2 on
    the lexicographically smallest such pair.  Each step fills at least
    one hollow node, so the hollow count never increases and the loop
    terminates within n steps per phase.
    """
    m = _Mutable(g)
    for _ in range(g.n + 1):
        j = next((i for i in range(g.n) if m.hollow[i] and m.loop[i]), None)
        if j is None:
            break
        _e1_core(m, j)
    else:
        raise AssertionError("loop-clearing phase failed to terminate")
    for _ in range(g.n + 1):
        pair = next(
            (
                (i, k)
                for i in range(g.n)
                if m.hollow[i]
                for k in sorted(m.neighbors(i))
                if k > i and m.hollow[k]
            ),
            None,
        )
        if pair is None:
            break
        _e2_core(m, *pair)
    else:
        raise AssertionError("edge-clearing phase failed to terminate")
    out = m.freeze()
    assert is_reduced(out)
    return out


def simplify_pair(
    g1: StabilizerGraph, g2: StabilizerGraph
) -> tuple[StabilizerGraph, StabilizerGraph]:
    """Align the hollow sets of two reduced graphs where possible.

    While there is a connected pair (a, b) with a hollow only in g1 and b
    hollow only in g2, apply E(i) or E(ii) in whichever graph has the
    edge (g1 when both do), choosing the lexicographically smallest pair.
    Each application swaps one disagreement away, so at most n/2 + 1
    passes are needed.  Neither state changes.
    """
    if g1.n != g2.n:
        raise ValueError(f"size mismatch: {g1.n} vs {g2.n}")
    for g in (g1, g2):
        if not is_reduced(g):
            raise ValueError("inputs must be reduced")
    for _ in range(g1.n + 1):
        only1 = [j for j in range(g1.n) if g1.hollow[j] and not g2.hollow[j]]
        only2 = [j for j in range(g2.n) if g2.hollow[j] and not g1.hollow[j]]
        hit = next(
            (
                (a, b)
                for a in only1
                for b in only2
                if g1.has_edge(a, b) or g2.has_edge(a, b)
            ),
            None,
        )
        if hit is None:
            return g1, g2
        a, b = hit
        if g1.has_edge(a, b):
            rule = apply_Ei if g1.loop[b] else apply_Eii
            g1 = rule(g1, a, b)
        else:
            rule = apply_Ei if g2.loop[a] else apply_Eii
            g2 = rule(g2, b, a)
    raise AssertionError("pair simplification failed to terminate")


def graphs_equivalent(g1: StabilizerGraph, g2: StabilizerGraph) -> bool:
    """Decide whether two graphs describe the same state up to phase."""
    if g1.n != g2.n:
        raise ValueError(f"size mismatch: {g1.n} vs {g2.n}")
    r1, r2 = simplify_pair(to_reduced(g1), to_reduced(g2))
    return r1 == r2
