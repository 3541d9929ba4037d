"""gcd of simple-cycle lengths of a strongly connected component.

Adjacency matrices here are square sequences of truthy/falsy rows, indexed
densely from 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from . import _kernels


@dataclass(frozen=True)
class CycleProfile:
    component_size: int
    witness_lengths: frozenset
    gcd_value: int
    states: tuple = ()


def component_adjacency(nfa, states):
    """Dense adjacency matrix of the subgraph induced by ``states``, plus the index map."""
    order = tuple(sorted(states))
    pos = {q: i for i, q in enumerate(order)}
    size = len(order)
    matrix = [[False] * size for _ in range(size)]
    for u, v in nfa.edges:
        if u in pos and v in pos:
            matrix[pos[u]][pos[v]] = True
    return matrix, order


def _flatten(adjacency):
    size = len(adjacency)
    for row in adjacency:
        if len(row) != size:
            raise ValueError("adjacency matrix must be square")
    return size, bytes(1 if adjacency[i][j] else 0 for i in range(size) for j in range(size))


def _require_nontrivial(size, flat):
    if size == 0:
        raise ValueError("empty component")
    if size == 1:
        if not flat[0]:
            raise ValueError("trivial component: single state without a self-loop")
        return
    # strongly connected iff every state reaches and is reached from state 0
    for forward in (True, False):
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in range(size):
                edge = flat[u * size + v] if forward else flat[v * size + u]
                if edge and v not in seen:
                    seen.add(v)
                    stack.append(v)
        if len(seen) != size:
            raise ValueError("component is not strongly connected")


def cycle_lengths_via_powers(adjacency) -> set:
    """``{j <= |D| : the j-th boolean power of the adjacency has a true diagonal entry}``."""
    size, flat = _flatten(adjacency)
    _require_nontrivial(size, flat)
    return set(_kernels.closed_walk_lengths(size, flat, size))


def scc_gcd(adjacency) -> int:
    return reduce(gcd, cycle_lengths_via_powers(adjacency))


def cycle_profile(adjacency, states=()) -> CycleProfile:
    lengths = cycle_lengths_via_powers(adjacency)
    return CycleProfile(len(adjacency), frozenset(lengths), reduce(gcd, lengths), tuple(states))


def simple_cycle_lengths(adjacency) -> set:
    """Lengths of all simple cycles, by exhaustive search.

    Each cycle is found once, rooted at its smallest vertex.
    """
    size = len(adjacency)
    succ = [[j for j in range(size) if adjacency[i][j]] for i in range(size)]
    lengths = set()
    for root in range(size):
        on_path = [False] * size
        on_path[root] = True
        stack = [(root, iter(succ[root]), 0)]
        while stack:
            u, it, depth = stack[-1]
            for v in it:
                if v == root:
                    lengths.add(depth + 1)
                elif v > root and not on_path[v]:
                    on_path[v] = True
                    stack.append((v, iter(succ[v]), depth + 1))
                    break
            else:
                stack.pop()
                on_path[u] = False
        on_path[root] = False
    return lengths


def simple_cycle_gcd_bruteforce(adjacency, limit: int = 10) -> int:
    size = len(adjacency)
    if size > limit:
        raise ValueError(f"component has {size} states; brute force limit is {limit}")
    lengths = simple_cycle_lengths(adjacency)
    if not lengths:
        raise ValueError("component has no cycle")
    return reduce(gcd, lengths)
