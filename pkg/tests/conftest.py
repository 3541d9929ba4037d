import random

import pytest

from unarynfa.nfa import NormalizedNfa, UnaryNfa


def nfa(n, initial, finals, edges):
    return UnaryNfa(n, initial, frozenset(finals), frozenset(edges))


def set_simulation(automaton, bound):
    """Accepted lengths <= bound by plain set-of-states simulation (independent of the kernels)."""
    succ = {q: set() for q in range(automaton.state_count)}
    for u, v in automaton.edges:
        succ[u].add(v)
    current = {automaton.initial}
    out = set()
    for x in range(bound + 1):
        if current & automaton.finals:
            out.add(x)
        current = {v for u in current for v in succ[u]}
    return out


def as_normalized(automaton):
    """Wrap a hand-built automaton that already has the normalized shape."""
    (final,) = automaton.finals
    assert all(v != automaton.initial for _, v in automaton.edges)
    assert all(u != final for u, _ in automaton.edges)
    return NormalizedNfa(automaton, final, False, tuple(range(automaton.state_count)))


def random_automaton(rng, max_states, density=None):
    n = rng.randint(1, max_states)
    p = density if density is not None else rng.choice((0.1, 0.2, 0.3, 0.45))
    edges = {(u, v) for u in range(n) for v in range(n) if rng.random() < p}
    finals = {q for q in range(n) if rng.random() < 0.3}
    return nfa(n, 0, finals, edges)


# Hand fixtures -----------------------------------------------------------------

SINGLE_FINAL = nfa(1, 0, [0], [])
TWO_CYCLE = nfa(2, 0, [0], [(0, 1), (1, 0)])
CHAIN3 = nfa(3, 0, [2], [(0, 1), (1, 2)])
CYCLE_EXIT = nfa(3, 0, [2], [(0, 1), (1, 0), (1, 2)])

# single nontrivial SCC {1,2,3} (3-cycle) between a fresh initial and sink
SINGLE_SCC = nfa(5, 0, [4], [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)])

# D1 = {1,2} (2-cycle), D2 = {3,4,5} (3-cycle); 1 -> 6 bypasses D2
SEQUENTIAL = nfa(8, 0, [7], [
    (0, 1), (1, 2), (2, 1), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7), (1, 6),
])

# branch at 1: D1 = {2,3} (2-cycle), D2 = {4,5,6} (3-cycle); both exit to the sink 8
PARALLEL = nfa(9, 0, [8], [
    (0, 1), (1, 2), (2, 3), (3, 2), (3, 8),
    (1, 4), (4, 5), (5, 6), (6, 4), (6, 7), (7, 8),
])

STRUCTURAL_FIXTURES = {
    "single": SINGLE_SCC,
    "sequential": SEQUENTIAL,
    "parallel": PARALLEL,
}


@pytest.fixture
def rng():
    return random.Random(20240611)


# Acceptance report ---------------------------------------------------------------

ACCEPTANCE_RESULTS = {}


def record(criterion, passed, detail):
    ACCEPTANCE_RESULTS[criterion] = (passed, detail)
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {key}: {detail}")
