"""Ground truth for the conversion: brute force that shares no code with it.

``determinize`` runs the unary subset construction, whose chain of subsets
is eventually periodic (a rho shape) and gives the language exactly.
``diophantine_overapprox`` is the naive simple-path-plus-cycle-combinations
construction; it is a sound overapproximation but misses dependencies
between cycles, which ``example1_graph`` exposes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cycle_gcd import simple_cycle_lengths
from .nfa import NormalizedNfa, UnaryNfa, trim
from .semilinear import (
    ArithmeticProgression,
    EventuallyPeriodicSet,
    ProgressionSet,
    numerical_semigroup_decompose,
)

DETERMINIZE_LIMIT = 24
PATH_STATE_LIMIT = 12
PATH_LENGTH_LIMIT = 40
OVERAPPROX_LIMIT = 24


class BudgetExceeded(ValueError):
    """The input is too large for a brute-force computation."""


@dataclass(frozen=True)
class RhoShape:
    subset_chain: tuple
    tail_length: int
    cycle_length: int


def rho_shape(nfa: UnaryNfa, limit: int = DETERMINIZE_LIMIT) -> RhoShape:
    if nfa.state_count > limit:
        raise BudgetExceeded(
            f"{nfa.state_count} states exceeds the determinization limit {limit}"
        )
    succ = {q: set() for q in range(nfa.state_count)}
    for u, v in nfa.edges:
        succ[u].add(v)
    chain = []
    first_seen = {}
    current = frozenset([nfa.initial])
    while current not in first_seen:
        first_seen[current] = len(chain)
        chain.append(current)
        current = frozenset(v for u in current for v in succ[u])
    start = first_seen[current]
    return RhoShape(tuple(chain), start, len(chain) - start)


def determinize(nfa: UnaryNfa, limit: int = DETERMINIZE_LIMIT) -> EventuallyPeriodicSet:
    rho = rho_shape(nfa, limit)
    flags = bytearray(1 if s & nfa.finals else 0 for s in rho.subset_chain)
    return EventuallyPeriodicSet.from_flags(flags, rho.tail_length, rho.cycle_length).canonical()


def _unpack(nfa):
    if isinstance(nfa, NormalizedNfa):
        return nfa.automaton, nfa.final
    (final,) = nfa.finals
    return nfa, final


def enumerate_paths_lastscc(nfa, dec, component: int, bound: int) -> set:
    """Lengths ``<= bound`` of initial-to-final walks whose last vertex in a
    nontrivial component belongs to ``component``.

    Explores every walk, carrying the most recent nontrivial component as
    part of the search state.
    """
    automaton, final = _unpack(nfa)
    if automaton.state_count > PATH_STATE_LIMIT or bound > PATH_LENGTH_LIMIT:
        raise BudgetExceeded(
            f"brute force allows {PATH_STATE_LIMIT} states and length {PATH_LENGTH_LIMIT}"
        )
    succ = automaton.successors

    def tag(q, last):
        c = dec.component_of[q]
        return c if dec.nontrivial[c] else last

    lengths = set()
    frontier = {(automaton.initial, tag(automaton.initial, None))}
    for length in range(bound + 1):
        if any(q == final and last == component for q, last in frontier):
            lengths.add(length)
        frontier = {(v, tag(v, last)) for q, last in frontier for v in succ[q]}
        if not frontier:
            break
    return lengths


def example1_graph() -> UnaryNfa:
    """A 7-cycle at ``v`` with a 5-cycle hanging off one of its states.

    Numbering: q0=0, u1..u3=1..3, v=4, c1..c6=5..10, d1..d4=11..14,
    w1..w5=15..19, qF=20.  The 5-cycle can only be reached after entering
    the 7-cycle, so the language is
    ``{10 + 7x : x >= 0} ∪ {10 + 7x + 5y : x >= 1, y >= 0}``.
    """
    q0, v, qf = 0, 4, 20
    u = [1, 2, 3]
    c = list(range(5, 11))
    d = list(range(11, 15))
    w = list(range(15, 20))
    edges = set()

    def chain(states):
        edges.update(zip(states, states[1:]))

    chain([q0, *u, v])
    chain([v, *c, v])
    chain([c[2], *d, c[2]])
    chain([v, *w, qf])
    return UnaryNfa(21, q0, frozenset([qf]), frozenset(edges))


def _simple_path_lengths(nfa: UnaryNfa) -> set:
    succ = nfa.successors
    lengths = set()
    on_path = [False] * nfa.state_count
    on_path[nfa.initial] = True
    if nfa.initial in nfa.finals:
        lengths.add(0)
    stack = [(nfa.initial, iter(succ[nfa.initial]), 0)]
    while stack:
        q, it, depth = stack[-1]
        for v in it:
            if not on_path[v]:
                if v in nfa.finals:
                    lengths.add(depth + 1)
                on_path[v] = True
                stack.append((v, iter(succ[v]), depth + 1))
                break
        else:
            stack.pop()
            on_path[q] = False
    return lengths


def diophantine_overapprox(nfa: UnaryNfa, limit: int = OVERAPPROX_LIMIT) -> ProgressionSet:
    """``{x0 + sum a_i x_i}`` over simple accepting path lengths x0 and simple cycle lengths a_i.

    Treats every cycle as freely usable, which is exactly the unsound
    assumption; the result always contains the language but may be larger.
    """
    if nfa.state_count > limit:
        raise BudgetExceeded(f"{nfa.state_count} states exceeds the limit {limit}")
    trimmed = trim(nfa)
    if trimmed is None:
        return ProgressionSet()

    size = trimmed.state_count
    matrix = [[False] * size for _ in range(size)]
    for a, b in trimmed.edges:
        matrix[a][b] = True
    coins = sorted(simple_cycle_lengths(matrix))
    bases = _simple_path_lengths(trimmed)

    items = set()
    if not coins:
        items.update(ArithmeticProgression(x0, 0) for x0 in bases)
    else:
        semigroup = numerical_semigroup_decompose(coins, size)
        for x0 in bases:
            items.update(ArithmeticProgression(x0 + s, 0) for s in semigroup.sporadic_set)
            items.add(ArithmeticProgression(x0 + semigroup.tail_offset, semigroup.gcd))
    return ProgressionSet(frozenset(items)).pruned()
