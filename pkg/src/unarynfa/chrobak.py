"""NFA to arithmetic progressions to Chrobak normal form.

The conversion follows the four-step polynomial algorithm with the corrected
final step: every accepted length up to ``2n^2 + n`` is listed explicitly,
and above that, for each nontrivial component D with cycle gcd d, an offset
``a`` in the open interval ``(2n^2 + n, 2n^2 + 3n)`` yields ``a + dN``
exactly when some accepting walk of length ``a`` leaves its last nontrivial
component from D.  ``n`` is the normalized automaton's state count.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cycle_gcd import component_adjacency, cycle_profile
from .nfa import UnaryNfa, accepted_up_to, check_bound, normalize, NormalizedNfa
from .scc import SccDecomposition, build_restricted, decompose
from .semilinear import ArithmeticProgression, ProgressionSet


@dataclass(frozen=True, order=True)
class Cycle:
    period: int
    final_positions: frozenset = frozenset()


@dataclass(frozen=True)
class ChrobakNfa:
    """Tail ``q_0 .. q_m`` branching at ``q_m`` into disjoint cycles.

    Length ``x <= m`` is accepted iff ``x in tail_finals``; length ``x > m``
    iff some cycle has ``(x - m - 1) mod period`` among its final positions.
    """

    tail_length: int = 0
    tail_finals: frozenset = frozenset()
    cycles: tuple = ()

    def __contains__(self, x):
        m = self.tail_length
        if x < 0:
            return False
        if x <= m:
            return x in self.tail_finals
        return any((x - m - 1) % c.period in c.final_positions for c in self.cycles)

    @property
    def state_count(self):
        return self.tail_length + 1 + sum(c.period for c in self.cycles)


def _bounds(n_prime):
    return 2 * n_prime * n_prime + n_prime, 2 * n_prime * n_prime + 3 * n_prime


@dataclass(frozen=True)
class Conversion:
    """Everything the pipeline computed, for diagnostics and JSON output."""

    progressions: ProgressionSet
    cnf: ChrobakNfa
    n_prime: int = 0
    zero_accepted: bool = False
    component_gcds: dict = field(default_factory=dict)
    normalized: NormalizedNfa | None = None
    decomposition: SccDecomposition | None = None

    @property
    def singleton_bound(self):
        return _bounds(self.n_prime)[0]

    @property
    def offset_upper(self):
        return _bounds(self.n_prime)[1]


def component_gcds(norm, dec: SccDecomposition) -> dict:
    """Cycle gcd of every nontrivial component, keyed by component id."""
    automaton = norm.automaton if isinstance(norm, NormalizedNfa) else norm
    gcds = {}
    for cid in dec.nontrivial_ids():
        matrix, states = component_adjacency(automaton, dec.components[cid])
        gcds[cid] = cycle_profile(matrix, states).gcd_value
    return gcds


def collect_progressions(norm: NormalizedNfa, dec: SccDecomposition, gcds: dict) -> set:
    """Periodic progressions for the lengths above ``2n^2 + n``.

    For each nontrivial component and residue class only the smallest
    passing offset is kept, since it covers the larger ones.
    """
    low, high = _bounds(norm.n_prime)
    found = set()
    for cid in sorted(gcds):
        d = gcds[cid]
        restricted = build_restricted(norm, dec, cid)
        if restricted is None:
            continue
        flags = restricted.accepting_lengths(high - 1)
        seen_residues = set()
        for a in range(low + 1, high):
            if flags[a] and a % d not in seen_residues:
                seen_residues.add(a % d)
                found.add(ArithmeticProgression(a, d))
    return found


def convert_detailed(nfa: UnaryNfa) -> Conversion:
    zero_accepted, norm = normalize(nfa)
    if norm is None:
        ps = ProgressionSet.of((0, 0)) if zero_accepted else ProgressionSet()
        return Conversion(ps, progressions_to_cnf(ps), zero_accepted=zero_accepted)

    n_prime = norm.n_prime
    check_bound(n_prime)
    low, _ = _bounds(n_prime)

    # Step (i) runs on the input automaton so that length 0 is covered directly.
    items = {ArithmeticProgression(x, 0) for x in accepted_up_to(nfa, low)}
    dec = decompose(norm)
    gcds = component_gcds(norm, dec)
    items |= collect_progressions(norm, dec, gcds)

    ps = ProgressionSet(frozenset(items))
    return Conversion(ps, progressions_to_cnf(ps), n_prime, zero_accepted, gcds, norm, dec)


def convert(nfa: UnaryNfa):
    """Return ``(progression set, Chrobak automaton)`` both denoting the language of ``nfa``."""
    result = convert_detailed(nfa)
    return result.progressions, result.cnf


# --- normal form conversions ----------------------------------------------------

def progressions_to_cnf(ps: ProgressionSet) -> ChrobakNfa:
    """Tail as long as the largest offset; one cycle per distinct period."""
    m = max((p.offset for p in ps.progressions), default=0)
    tail_finals = set()
    positions = {}
    for p in ps.progressions:
        if p.period == 0:
            tail_finals.add(p.offset)
            continue
        tail_finals.update(range(p.offset, m + 1, p.period))
        positions.setdefault(p.period, set()).add((p.offset - m - 1) % p.period)
    cycles = tuple(Cycle(b, frozenset(positions[b])) for b in sorted(positions))
    return ChrobakNfa(m, frozenset(tail_finals), cycles)


def cnf_to_progressions(cnf: ChrobakNfa) -> ProgressionSet:
    m = cnf.tail_length
    items = {ArithmeticProgression(t, 0) for t in cnf.tail_finals}
    for c in cnf.cycles:
        items.update(ArithmeticProgression(m + 1 + h, c.period) for h in c.final_positions)
    return ProgressionSet(frozenset(items))


def cnf_to_nfa(cnf: ChrobakNfa) -> UnaryNfa:
    """Materialize the automaton: tail states ``0..m``, then each cycle's states in turn."""
    m = cnf.tail_length
    edges = {(i, i + 1) for i in range(m)}
    finals = set(cnf.tail_finals)
    base = m + 1
    for c in cnf.cycles:
        edges.add((m, base))
        for h in range(c.period):
            edges.add((base + h, base + (h + 1) % c.period))
        finals.update(base + h for h in c.final_positions)
        base += c.period
    return UnaryNfa(base, 0, frozenset(finals), frozenset(edges))


def is_cnf(nfa: UnaryNfa) -> bool:
    """Structural check: deterministic tail from the initial state, a single
    branching state at its end, and pairwise-disjoint simple cycles entered
    once each from that state.  No other states or edges are allowed.
    """
    dec = decompose(nfa)
    succ = nfa.successors
    on_cycle = set()
    for cid in dec.nontrivial_ids():
        comp = dec.components[cid]
        for q in comp:
            if len(succ[q]) != 1 or succ[q][0] not in comp:
                return False
        on_cycle |= comp

    if nfa.initial in on_cycle:
        return False
    tail = [nfa.initial]
    while len(succ[tail[-1]]) == 1 and succ[tail[-1]][0] not in on_cycle:
        tail.append(succ[tail[-1]][0])
    branch = succ[tail[-1]]
    if any(q not in on_cycle for q in branch):
        return False
    if len(tail) + len(on_cycle) != nfa.state_count:
        return False

    entered = [dec.component_of[q] for q in branch]
    return sorted(entered) == sorted(dec.nontrivial_ids())
