"""Strongly connected components, the condensation DAG, and restricted automata."""
from __future__ import annotations

from dataclasses import dataclass

from .nfa import NormalizedNfa, UnaryNfa, forward_reach, restrict, trim


@dataclass(frozen=True)
class SccDecomposition:
    """Components are numbered in topological order of the condensation."""

    component_of: tuple
    components: tuple
    condensation_edges: frozenset
    nontrivial: tuple

    def nontrivial_ids(self):
        return [c for c, flag in enumerate(self.nontrivial) if flag]

    def topological_order(self):
        """Kahn's algorithm over the condensation; raises if it is not acyclic."""
        indeg = [0] * len(self.components)
        out = [[] for _ in self.components]
        for a, b in self.condensation_edges:
            indeg[b] += 1
            out[a].append(b)
        ready = [c for c, d in enumerate(indeg) if d == 0]
        order = []
        while ready:
            c = ready.pop()
            order.append(c)
            for d in out[c]:
                indeg[d] -= 1
                if indeg[d] == 0:
                    ready.append(d)
        if len(order) != len(self.components):
            raise ValueError("condensation has a cycle")
        return order


def _as_nfa(nfa):
    return nfa.automaton if isinstance(nfa, NormalizedNfa) else nfa


def decompose(nfa) -> SccDecomposition:
    """Kosaraju's two-pass algorithm, iterative so deep chains don't hit the recursion limit."""
    nfa = _as_nfa(nfa)
    n = nfa.state_count
    succ, pred = nfa.successors, nfa.predecessors

    # Pass 1: finishing order on the forward graph.
    visited = [False] * n
    finish = []
    for root in range(n):
        if visited[root]:
            continue
        visited[root] = True
        stack = [(root, iter(succ[root]))]
        while stack:
            u, it = stack[-1]
            for v in it:
                if not visited[v]:
                    visited[v] = True
                    stack.append((v, iter(succ[v])))
                    break
            else:
                stack.pop()
                finish.append(u)

    # Pass 2: reverse finishing order on the transposed graph. Components come
    # out in topological order of the condensation.
    component_of = [-1] * n
    components = []
    for root in reversed(finish):
        if component_of[root] != -1:
            continue
        cid = len(components)
        component_of[root] = cid
        members = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for v in pred[u]:
                if component_of[v] == -1:
                    component_of[v] = cid
                    members.append(v)
                    stack.append(v)
        components.append(frozenset(members))

    condensation = frozenset(
        (component_of[u], component_of[v])
        for u, v in nfa.edges
        if component_of[u] != component_of[v]
    )
    nontrivial = tuple(
        len(comp) > 1 or (next(iter(comp)),) * 2 in nfa.edges for comp in components
    )
    return SccDecomposition(tuple(component_of), tuple(components), condensation, nontrivial)


def reach_states(nfa, component) -> set:
    """All states reachable from ``component`` (a state set), the component included."""
    return forward_reach(_as_nfa(nfa), component)


def build_restricted(nfa, dec: SccDecomposition, component: int) -> UnaryNfa | None:
    """The automaton whose accepting walks are exactly those of ``nfa`` that
    leave their last nontrivial component from inside ``component``.

    Deletes every other nontrivial component reachable from it, and every
    edge entering the reach of ``component`` from outside except edges into
    ``component`` itself; then trims.  Returns None if nothing survives.
    """
    if not dec.nontrivial[component]:
        raise ValueError(f"component {component} is trivial")
    nfa = _as_nfa(nfa)
    members = dec.components[component]
    reach = reach_states(nfa, members)

    dropped = set()
    for cid in dec.nontrivial_ids():
        if cid != component and dec.components[cid] <= reach:
            dropped |= dec.components[cid]
    keep = set(range(nfa.state_count)) - dropped
    below = reach - members
    edges = frozenset(
        (u, v) for u, v in nfa.edges if not (u not in reach and v in below)
    )
    sub, _ = restrict(nfa, keep, edges=edges)
    return trim(sub)
