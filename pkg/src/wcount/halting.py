"""Toy single-tape machines and the halting weight oracle.

The machine model is the smallest one that makes the construction
concrete: a single bi-infinite tape over {0, 1, blank}, an explicit
transition table, and a set of halting states. The derived weighted
counting problem has weight 2**-t on the all-zero path when the machine
halts at step t and weight 0 everywhere else; its approximation map
simulates for b + p(|x|) steps, which is all the decidability one gets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .intpoly import IntPolynomial
from .oracle import RangeTag, WeightedCountingProblem, WeightOracle

BLANK = "_"
MOVES = {"L": -1, "R": 1, "S": 0}


@dataclass(frozen=True)
class ToyMachine:
    """Explicit transition table: (state, symbol) -> (state, symbol, move)."""

    transitions: Mapping[tuple[str, str], tuple[str, str, str]]
    start: str
    halting: frozenset[str]

    def __post_init__(self):
        for (state, sym), (nstate, nsym, move) in self.transitions.items():
            if sym not in ("0", "1", BLANK) or nsym not in ("0", "1", BLANK):
                raise ValueError("symbols must be 0, 1 or blank")
            if move not in MOVES:
                raise ValueError("move must be L, R or S")
            if state in self.halting:
                raise ValueError("halting states take no transitions")

    def run_bounded(self, tape_input: str, max_steps: int) -> Optional[int]:
        """Simulate up to max_steps; return the halting step or None.

        Entering a halting state after applying t transitions counts as
        halting at step t; a start state that halts immediately is step 0.
        A missing transition also halts (implicit halt).
        """
        tape = {i: c for i, c in enumerate(tape_input)}
        state, head = self.start, 0
        for step in range(max_steps + 1):
            if state in self.halting:
                return step
            key = (state, tape.get(head, BLANK))
            if key not in self.transitions:
                return step
            state, sym, move = self.transitions[key]
            tape[head] = sym
            head += MOVES[move]
        return None


def halting_oracle(machine: ToyMachine, y: str) -> WeightedCountingProblem:
    """Weighted counting problem deciding (in the limit) whether machine halts on y.

    The sum is 2**-t if the machine halts at step t and 0 otherwise. No
    exact map is attached: producing one would decide the general halting
    question. The approximation at precision b simulates b + p(|x|)
    steps, leaving at most 2**-b unaccounted.
    """
    path_poly = IntPolynomial.constant(1)

    def approx(x: str, u: str, b: int) -> int:
        if u.strip("0"):
            return 0
        return _halt_weight(machine, y, b, path_poly(len(x)))

    oracle = WeightOracle(approx=approx, exact=None, range_tag=RangeTag.QPOLY,
                          weight_bound=lambda n: 1)
    return WeightedCountingProblem(path_poly, oracle)


def _halt_weight(machine: ToyMachine, y: str, b: int, extra: int) -> int:
    t = machine.run_bounded(y, b + extra)
    if t is None or t > b:
        return 0
    return 1 << (b - t)


def machine_halting_after(t: int) -> ToyMachine:
    """Walk right for t steps, then halt; known halting time t."""
    if t == 0:
        return ToyMachine(transitions={}, start="halt", halting=frozenset({"halt"}))
    transitions = {}
    for i in range(t):
        target = "halt" if i + 1 == t else "s%d" % (i + 1)
        for sym in ("0", "1", BLANK):
            transitions[("s%d" % i, sym)] = (target, sym, "R")
    return ToyMachine(transitions=transitions, start="s0", halting=frozenset({"halt"}))


def machine_looping() -> ToyMachine:
    """Spin right forever in a single state."""
    transitions = {("spin", sym): ("spin", sym, "R") for sym in ("0", "1", BLANK)}
    return ToyMachine(transitions=transitions, start="spin", halting=frozenset())


def machine_ping_pong() -> ToyMachine:
    """Bounce between two cells forever."""
    transitions = {}
    for sym in ("0", "1", BLANK):
        transitions[("a", sym)] = ("b", sym, "R")
        transitions[("b", sym)] = ("a", sym, "L")
    return ToyMachine(transitions=transitions, start="a", halting=frozenset())
