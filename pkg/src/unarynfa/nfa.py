"""Unary NFAs: representation, text format, trimming and normalization.

A unary NFA only needs its transition graph; the single letter is implicit,
so an edge ``(u, v)`` means "reading one letter moves from u to v".
"""
from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from . import _kernels

# Largest state count accepted by the conversion pipeline.
MAX_STATES = 10**6


class NfaError(ValueError):
    """Malformed automaton or automaton text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BoundTooLarge(ValueError):
    """The automaton is too large for the requested exact computation."""


@dataclass(frozen=True)
class UnaryNfa:
    state_count: int
    initial: int
    finals: frozenset = field(default_factory=frozenset)
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        n = self.state_count
        if n < 1:
            raise NfaError("an automaton needs at least one state")
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "edges", frozenset((int(u), int(v)) for u, v in self.edges))
        if not 0 <= self.initial < n:
            raise NfaError(f"initial state {self.initial} out of range [0, {n})")
        for f in self.finals:
            if not 0 <= f < n:
                raise NfaError(f"final state {f} out of range [0, {n})")
        for u, v in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise NfaError(f"edge ({u}, {v}) out of range [0, {n})")

    @cached_property
    def successors(self) -> tuple:
        succ = [[] for _ in range(self.state_count)]
        for u, v in sorted(self.edges):
            succ[u].append(v)
        return tuple(tuple(s) for s in succ)

    @cached_property
    def predecessors(self) -> tuple:
        pred = [[] for _ in range(self.state_count)]
        for u, v in sorted(self.edges):
            pred[v].append(u)
        return tuple(tuple(p) for p in pred)

    @cached_property
    def _csr(self):
        indptr = array("i", [0])
        indices = array("i")
        for succ in self.successors:
            indices.extend(succ)
            indptr.append(len(indices))
        finals = bytes(1 if q in self.finals else 0 for q in range(self.state_count))
        return indptr, indices, finals

    def accepting_lengths(self, upto: int) -> bytearray:
        """Byte flags for every length ``0..upto``: 1 iff that length is accepted."""
        if upto < 0:
            return bytearray()
        indptr, indices, finals = self._csr
        return _kernels.accepting_lengths(
            self.state_count, indptr, indices, self.initial, finals, upto
        )

    def __contains__(self, x):
        return member(self, x)


@dataclass(frozen=True)
class NormalizedNfa:
    """Single-initial, single-final form of an automaton's positive-length part.

    ``origin[i]`` is the state of the input automaton that state ``i`` came
    from, or None for the fresh initial and fresh sink.
    """

    automaton: UnaryNfa
    final: int
    zero_accepted: bool
    origin: tuple = ()

    @property
    def n_prime(self) -> int:
        return self.automaton.state_count

    @property
    def initial(self) -> int:
        return self.automaton.initial


# --- text format -----------------------------------------------------------

def parse_nfa(text: str) -> UnaryNfa:
    state_count = None
    initial = None
    finals = set()
    edges = set()

    def index(token, lineno):
        try:
            value = int(token)
        except ValueError:
            raise NfaError(f"expected a state index, got {token!r}", lineno) from None
        if value < 0 or value >= state_count:
            raise NfaError(f"state index {value} out of range [0, {state_count})", lineno)
        return value

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *args = line.split()
        if keyword == "states":
            if state_count is not None:
                raise NfaError("duplicate 'states' directive", lineno)
            if len(args) != 1:
                raise NfaError("'states' takes exactly one argument", lineno)
            try:
                state_count = int(args[0])
            except ValueError:
                raise NfaError(f"expected a state count, got {args[0]!r}", lineno) from None
            if state_count < 1:
                raise NfaError("state count must be positive", lineno)
            continue
        if keyword not in ("initial", "final", "edge"):
            raise NfaError(f"unknown directive {keyword!r}", lineno)
        if state_count is None:
            raise NfaError(f"'{keyword}' before 'states'", lineno)
        if keyword == "initial":
            if len(args) != 1:
                raise NfaError("'initial' takes exactly one state", lineno)
            if initial is not None:
                raise NfaError("duplicate 'initial' directive", lineno)
            initial = index(args[0], lineno)
        elif keyword == "final":
            finals.update(index(a, lineno) for a in args)
        else:
            if len(args) != 2:
                raise NfaError("'edge' takes exactly two states", lineno)
            edges.add((index(args[0], lineno), index(args[1], lineno)))

    if state_count is None:
        raise NfaError("missing 'states' directive")
    if initial is None:
        raise NfaError("missing 'initial' directive")
    return UnaryNfa(state_count, initial, frozenset(finals), frozenset(edges))


def serialize_nfa(nfa: UnaryNfa) -> str:
    lines = [f"states {nfa.state_count}", f"initial {nfa.initial}"]
    if nfa.finals:
        lines.append("final " + " ".join(str(f) for f in sorted(nfa.finals)))
    lines.extend(f"edge {u} {v}" for u, v in sorted(nfa.edges))
    return "\n".join(lines) + "\n"


# --- membership ------------------------------------------------------------

def member(nfa: UnaryNfa, x: int) -> bool:
    if x < 0:
        return False
    return bool(nfa.accepting_lengths(x)[x])


def accepted_up_to(nfa: UnaryNfa, bound: int) -> set:
    flags = nfa.accepting_lengths(bound)
    return {x for x, hit in enumerate(flags) if hit}


def exact_length_path_exists(nfa, a: int) -> bool:
    """True iff a walk of exactly ``a`` steps leads from the initial state to the final sink."""
    if isinstance(nfa, NormalizedNfa):
        nfa = nfa.automaton
    return member(nfa, a)


# --- reachability, trimming, normalization -----------------------------------

def _reach(adjacency, sources: Iterable[int]) -> set:
    seen = set(sources)
    queue = deque(seen)
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def forward_reach(nfa: UnaryNfa, sources: Iterable[int]) -> set:
    return _reach(nfa.successors, sources)


def backward_reach(nfa: UnaryNfa, targets: Iterable[int]) -> set:
    return _reach(nfa.predecessors, targets)


def restrict(nfa: UnaryNfa, keep: Iterable[int], edges=None, finals=None):
    """Induced sub-automaton on ``keep`` (which must contain the initial state).

    States are renumbered in increasing order; returns the new automaton and
    the list mapping new indices to old ones.
    """
    kept = sorted(keep)
    new_index = {q: i for i, q in enumerate(kept)}
    edges = nfa.edges if edges is None else edges
    finals = nfa.finals if finals is None else finals
    sub = UnaryNfa(
        len(kept),
        new_index[nfa.initial],
        frozenset(new_index[f] for f in finals if f in new_index),
        frozenset(
            (new_index[u], new_index[v])
            for u, v in edges
            if u in new_index and v in new_index
        ),
    )
    return sub, kept


def _trim_with_map(nfa: UnaryNfa):
    useful = forward_reach(nfa, [nfa.initial]) & backward_reach(nfa, nfa.finals)
    if nfa.initial not in useful:
        return None, None
    return restrict(nfa, useful)


def trim(nfa: UnaryNfa) -> UnaryNfa | None:
    """Keep the states both reachable from the initial state and co-reachable from a final.

    Returns None when the language is empty.
    """
    trimmed, _ = _trim_with_map(nfa)
    return trimmed


def normalize(nfa: UnaryNfa):
    """Split the language into (0 accepted?, automaton for the positive lengths).

    The positive part gets a fresh initial state copying the old initial's
    out-edges, and a fresh sink that every edge into a final state is
    duplicated onto.  The second component is None if no positive length is
    accepted.
    """
    trimmed, kept = _trim_with_map(nfa)
    if trimmed is None:
        return False, None
    zero_accepted = trimmed.initial in trimmed.finals

    n = trimmed.state_count
    fresh_initial, sink = n, n + 1
    edges = set(trimmed.edges)
    edges.update((u, sink) for u, v in trimmed.edges if v in trimmed.finals)
    edges.update((fresh_initial, v) for u, v in list(edges) if u == trimmed.initial)
    widened = UnaryNfa(n + 2, fresh_initial, frozenset([sink]), frozenset(edges))

    norm, kept2 = _trim_with_map(widened)
    if norm is None:
        return zero_accepted, None
    origin = tuple(kept[q] if q < n else None for q in kept2)
    (final,) = norm.finals
    return zero_accepted, NormalizedNfa(norm, final, zero_accepted, origin)


def check_bound(n_prime: int):
    if n_prime > MAX_STATES:
        raise BoundTooLarge(
            f"normalized automaton has {n_prime} states; the limit is {MAX_STATES}"
        )
