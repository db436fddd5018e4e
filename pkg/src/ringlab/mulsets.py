"""Multiplicative sets and the report type returned by every decider."""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass, field
from typing import Any

from ._bits import mask_of


@dataclass
class WitnessReport:
    """Outcome of a decider.

    A TRUE verdict carries a replayable ``witness``; a FALSE verdict carries
    ``exhaustion``, the size of the space that was searched.  Bounded
    semi-decisions that found nothing set ``exhaustive=False`` and read as
    NOT-FOUND rather than FALSE.
    """

    verdict: bool
    witness: Any = None
    exhaustion: int | None = None
    counterexample: Any = None
    flags: list = field(default_factory=list)
    elapsed: float = 0.0
    exhaustive: bool = True

    def __bool__(self):
        return self.verdict

    @property
    def status(self):
        if self.verdict:
            return "TRUE"
        return "FALSE" if self.exhaustive else "NOT-FOUND"


def timed(fn):
    """Stamp the wall time of a decider onto the report it returns."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    return wrapper


class MultiplicativeSet:
    """A multiplicatively closed subset containing 1 (0 is allowed, and flagged)."""

    def __init__(self, ring, elements, generators):
        self.ring = ring
        self.elements = tuple(sorted(set(int(x) for x in elements)))
        self.generators = tuple(int(g) for g in generators)
        self.mask = mask_of(self.elements, ring.order)
        self.contains_zero = ring.zero in self.elements
        self.all_units = all(x in ring.units for x in self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return "{" + ", ".join(repr(self.ring.labels[x]) for x in self.elements) + "}"

    @property
    def ring_id(self):
        return self.ring.ring_id

    @property
    def flags(self):
        out = []
        if self.contains_zero:
            out.append("degenerate-S:contains-zero")
        if self.all_units:
            out.append("S-units-only")
        return out


def make_mult_set(R, gens):
    """Multiplicative closure of ``gens`` together with 1."""
    gens = [R.index(g) for g in gens]
    rows = R.mul_rows
    closed = {R.one}
    frontier = [R.one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = rows[x][g]
                if y not in closed:
                    closed.add(y)
                    nxt.append(y)
        frontier = nxt
    return MultiplicativeSet(R, closed, gens)


def mult_set_from_elements(R, elements):
    """Wrap an already closed subset (e.g. a prime complement); closure is verified."""
    els = set(elements)
    rows = R.mul_rows
    if R.one not in els:
        raise ValueError("multiplicative set must contain 1")
    for x in els:
        for y in els:
            if rows[x][y] not in els:
                raise ValueError(f"not multiplicatively closed: {x}*{y}")
    return MultiplicativeSet(R, els, sorted(els))
