"""Seeded random automata and the convert-vs-oracle comparison loop.

Generator (reproducible across implementations): state count uniform in
``[1, max_states]``; edge density drawn from {0.1, 0.2, 0.3}; every ordered
pair (self-loops included) is an edge independently with that density;
initial state 0; every state final with probability 0.3.  Instance ``i`` of
a run with seed ``s`` draws from ``random.Random(s * 1_000_003 + i)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .chrobak import convert
from .nfa import UnaryNfa
from .oracle import determinize, diophantine_overapprox, example1_graph
from .semilinear import eps_from_progressions, first_difference

DENSITIES = (0.1, 0.2, 0.3)
FINAL_PROBABILITY = 0.3


def random_nfa(rng: random.Random, max_states: int) -> UnaryNfa:
    n = rng.randint(1, max_states)
    density = rng.choice(DENSITIES)
    edges = frozenset(
        (u, v) for u in range(n) for v in range(n) if rng.random() < density
    )
    finals = frozenset(q for q in range(n) if rng.random() < FINAL_PROBABILITY)
    return UnaryNfa(n, 0, finals, edges)


def instance_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1_000_003 + index)


def random_sample(count: int, max_states: int, seed: int):
    return [random_nfa(instance_rng(seed, i), max_states) for i in range(count)]


def named_fixtures() -> dict:
    """Hand-built automata that every fuzz run also checks."""
    return {
        "example1": example1_graph(),
        "single-final": UnaryNfa(1, 0, frozenset([0])),
        "self-loop": UnaryNfa(1, 0, frozenset([0]), frozenset([(0, 0)])),
        "two-cycle": UnaryNfa(2, 0, frozenset([0]), frozenset([(0, 1), (1, 0)])),
        "empty": UnaryNfa(2, 0, frozenset([1])),
        "chain": UnaryNfa(3, 0, frozenset([2]), frozenset([(0, 1), (1, 2)])),
        "parallel-2-3": UnaryNfa(
            7, 0, frozenset([6]),
            frozenset([(0, 1), (1, 2), (2, 1), (2, 6), (0, 3), (3, 4), (4, 5), (5, 3), (5, 6)]),
        ),
    }


@dataclass
class FuzzReport:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def check_one(nfa: UnaryNfa, naive: bool = False):
    """Return the smallest length where the candidate and the oracle disagree, or None."""
    expected = determinize(nfa)
    if naive:
        candidate = eps_from_progressions(diophantine_overapprox(nfa))
    else:
        candidate = eps_from_progressions(convert(nfa)[0])
    return first_difference(candidate, expected)


def run_fuzz(count: int, max_states: int, seed: int, naive: bool = False,
             include_fixtures: bool = True) -> FuzzReport:
    report = FuzzReport()
    cases = []
    if include_fixtures:
        cases.extend(named_fixtures().items())
    cases.extend((f"random-{i}", nfa) for i, nfa in enumerate(random_sample(count, max_states, seed)))
    for name, nfa in cases:
        witness = check_one(nfa, naive=naive)
        report.checked += 1
        if witness is not None:
            report.failures.append((name, nfa, witness))
    return report
