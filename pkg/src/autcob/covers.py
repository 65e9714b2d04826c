"""Covering constructions on automata and covering checks.

A (weak) covering is a surjective map of labelled oriented graphs that
preserves initial/accepting decorations by exact preimage.  Coverings lift
edges uniquely on both sides of every state (local triviality); weak
coverings only guarantee that every out-edge of the base lifts somewhere.
Either way the cover keeps the interval language and can only shrink the
trace language.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Nfa


@dataclass(frozen=True)
class GraphMap:
    """A map of automaton graphs: states to states, transitions to
    transitions."""

    vertex_map: dict
    edge_map: dict

    @classmethod
    def from_vertex_map(cls, cover: Nfa, base: Nfa, vertex_map: dict) -> GraphMap:
        """Derive the edge map; fails if some cover edge has no image edge."""
        vm = dict(vertex_map)
        edge_map = {}
        for q, a, r in cover.delta:
            if q not in vm or r not in vm:
                raise ValueError(f"vertex map is not total on edge ({q}, {a}, {r})")
            image = (vm[q], a, vm[r])
            if image not in base.delta:
                raise ValueError(f"edge ({q}, {a}, {r}) has no image in the base")
            edge_map[(q, a, r)] = image
        return cls(vm, edge_map)


def fiber_projection(cover: Nfa, base: Nfa, sep: str = "@") -> GraphMap:
    """Projection for covers built here, whose states are named base@fiber."""
    vm = {q: q.rsplit(sep, 1)[0] for q in cover.states}
    return GraphMap.from_vertex_map(cover, base, vm)


def cyclic_cover(nfa: Nfa, order, n: int) -> Nfa:
    """Arrange the states around a circle in the given order and unroll n
    times.  An edge winds once iff its target's position does not exceed
    its source's (so a self-loop makes a full rotation); the lift of
    q -> r from fiber k lands in fiber k + winding mod n.  Decorations are
    lifted by full preimage.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if sorted(order) != sorted(nfa.states) or len(order) != len(nfa.states):
        raise ValueError("order must be a permutation of the states")
    pos = {q: i for i, q in enumerate(order)}
    states = [f"{q}@{k}" for q in nfa.states for k in range(n)]
    delta = []
    for q, a, r in nfa.delta:
        w = 1 if pos[r] <= pos[q] else 0
        for k in range(n):
            delta.append((f"{q}@{k}", a, f"{r}@{(k + w) % n}"))
    return Nfa.make(
        states,
        nfa.alphabet,
        delta,
        [f"{q}@{k}" for q in nfa.initial for k in range(n)],
        [f"{q}@{k}" for q in nfa.accepting for k in range(n)],
    )


def voltage_cover(nfa: Nfa, n: int, voltages: dict) -> Nfa:
    """Lift each edge across the fibers 0..n-1 by its own permutation; the
    projection is a locally trivial covering by construction."""
    if n < 1:
        raise ValueError("need n >= 1")
    voltages = {tuple(e): tuple(p) for e, p in voltages.items()}
    missing = nfa.delta - set(voltages)
    if missing:
        raise ValueError(f"no voltage for transitions {sorted(missing)}")
    for e, perm in voltages.items():
        if sorted(perm) != list(range(n)):
            raise ValueError(f"voltage for {e} is not a permutation of 0..{n - 1}")
    states = [f"{q}@{k}" for q in nfa.states for k in range(n)]
    delta = [
        (f"{q}@{k}", a, f"{r}@{voltages[(q, a, r)][k]}")
        for q, a, r in nfa.delta
        for k in range(n)
    ]
    return Nfa.make(
        states,
        nfa.alphabet,
        delta,
        [f"{q}@{k}" for q in nfa.initial for k in range(n)],
        [f"{q}@{k}" for q in nfa.accepting for k in range(n)],
    )


def _structure_ok(p: GraphMap, cover: Nfa, base: Nfa) -> bool:
    vm = p.vertex_map
    missing = set(cover.states) - set(vm)
    if missing or set(cover.delta) - set(p.edge_map):
        raise ValueError("map is not total on the cover")
    # surjective on states, consistent and label-preserving on edges
    if set(vm.values()) != set(base.states):
        return False
    for e in cover.delta:
        q, a, r = e
        if p.edge_map[e] != (vm[q], a, vm[r]) or p.edge_map[e] not in base.delta:
            return False
    # decorations are exact preimages
    if {q for q in cover.states if vm[q] in base.initial} != cover.initial:
        return False
    if {q for q in cover.states if vm[q] in base.accepting} != cover.accepting:
        return False
    return True


def is_weak_covering(p: GraphMap, cover: Nfa, base: Nfa) -> bool:
    """Structure checks plus: every base edge lifts at every point of the
    fiber over its source."""
    if not _structure_ok(p, cover, base):
        return False
    vm = p.vertex_map
    for q1, a, q2 in base.delta:
        for q1p in (q for q in cover.states if vm[q] == q1):
            if not any(
                (q1p, a, q2p) in cover.delta
                for q2p in cover.states
                if vm[q2p] == q2
            ):
                return False
    return True


def is_covering(p: GraphMap, cover: Nfa, base: Nfa) -> bool:
    """Structure checks plus unique local lifting of both out- and
    in-edges (local triviality)."""
    if not _structure_ok(p, cover, base):
        return False
    vm = p.vertex_map
    for q in cover.states:
        for pick in (lambda e, s: e[0] == s, lambda e, s: e[2] == s):
            local = [e for e in cover.delta if pick(e, q)]
            local_base = {e for e in base.delta if pick(e, vm[q])}
            images = [p.edge_map[e] for e in local]
            if len(images) != len(set(images)) or set(images) != local_base:
                return False
    return True
