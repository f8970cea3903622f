"""The even-biased measure lattice.

Measures are d-tuples of naturals that are zero on even positions and
bounded per odd position i by the number of priority-i vertices, plus a
greatest element TOP.  They are ordered lexicographically, with the derived
family of prefix orders ``<_i`` (compare up to and including position i).
Prog is the least increase required along an edge; Lift is the per-vertex
monotone transformer whose least fixpoint separates the winning regions.
"""

from __future__ import annotations

import itertools
from math import prod
from typing import Iterator, Union


class _Top:
    """Greatest element of the measure lattice (singleton)."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOP"


TOP = _Top()

Measure = Union[tuple, _Top]


def measure_key(m: Measure):
    """Sort key realizing the lattice order on same-domain measures."""
    if m is TOP:
        return (1, ())
    return (0, m)


def cmp(a: Measure, b: Measure) -> int:
    """Full lexicographic comparison; returns -1, 0 or 1."""
    ka, kb = measure_key(a), measure_key(b)
    return (ka > kb) - (ka < kb)


def cmp_upto(a: Measure, b: Measure, i: int) -> int:
    """Compare prefixes through position i; tuples are 0-padded past their end.

    Any finite tuple is below TOP, and TOP equals TOP, at every i.
    """
    if a is TOP or b is TOP:
        return (b is not TOP) - (a is not TOP)
    pa = tuple(a[j] if j < len(a) else 0 for j in range(i + 1))
    pb = tuple(b[j] if j < len(b) else 0 for j in range(i + 1))
    return (pa > pb) - (pa < pb)


class MeasureDomain:
    """Tuple length and per-position caps for one game.

    caps[i] is the number of priority-i vertices for odd i and 0 for even i;
    derived once per game.
    """

    __slots__ = ("d", "caps")

    def __init__(self, caps):
        caps = tuple(int(c) for c in caps)
        if len(caps) < 1:
            raise ValueError("measure domain needs d >= 1")
        if any(c != 0 for c in caps[::2]):
            raise ValueError("even positions must have cap 0")
        if any(c < 0 for c in caps):
            raise ValueError("caps must be naturals")
        self.d = len(caps)
        self.caps = caps

    @classmethod
    def from_game(cls, game) -> "MeasureDomain":
        caps = [0] * game.d
        for p in game.priority:
            if p % 2 == 1:
                caps[p] += 1
        return cls(caps)

    def zero(self) -> tuple:
        return (0,) * self.d

    def size(self) -> int:
        """Number of lattice elements, TOP included."""
        return 1 + prod(c + 1 for c in self.caps[1::2])

    def contains(self, m: Measure) -> bool:
        if m is TOP:
            return True
        return (
            isinstance(m, tuple)
            and len(m) == self.d
            and all(0 <= x <= c for x, c in zip(m, self.caps))
        )

    def members(self) -> Iterator[Measure]:
        """All elements in ascending lattice order, TOP last."""
        ranges = [range(c + 1) if i % 2 else (0,) for i, c in enumerate(self.caps)]
        yield from itertools.product(*ranges)
        yield TOP

    def __repr__(self):
        return f"MeasureDomain(caps={self.caps})"


def is_saturated(dom: MeasureDomain, m: Measure, i: int) -> bool:
    """Whether position i of m holds its cap."""
    if m is TOP:
        raise ValueError("saturation is undefined for TOP")
    if i % 2 == 0:
        raise ValueError("saturation queries are for odd positions")
    return m[i] == dom.caps[i]


def succ_upto(dom: MeasureDomain, m: Measure, k: int) -> Measure:
    """Least element strictly greater than m up to position k (k odd).

    Increments position k, carrying toward more significant odd positions
    when saturated; TOP once the carry passes position 1.
    """
    if m is TOP:
        raise ValueError("TOP has no successor")
    if k % 2 == 0:
        raise ValueError("successor-up-to is taken at odd positions")
    out = list(m[: k + 1]) + [0] * (dom.d - k - 1)
    j = k
    while j >= 1:
        if out[j] < dom.caps[j]:
            out[j] += 1
            for l in range(j + 1, dom.d):
                out[l] = 0
            return tuple(out)
        out[j] = 0
        j -= 2
    return TOP


def prog_value(dom: MeasureDomain, p: int, m: Measure) -> Measure:
    """Least element >=_p m when p even, >_p m when p odd; TOP absorbs."""
    if m is TOP:
        return TOP
    if p % 2 == 0:
        # truncation: keep the prefix, zero the rest
        return m[: p + 1] + (0,) * (dom.d - p - 1)
    return succ_upto(dom, m, p)


class MeasureMap:
    """Per-vertex measure assignment with lift bookkeeping.

    Single-writer: one solver instance owns and mutates a map.  Effective
    lifts are counted per vertex; tops forced by attractor surgery are
    counted separately from lifts.
    """

    def __init__(self, game, domain: MeasureDomain | None = None):
        self.game = game
        self.domain = domain if domain is not None else MeasureDomain.from_game(game)
        self.values: list = [self.domain.zero()] * game.vertex_count
        self.lift_counts = [0] * game.vertex_count
        self.total_lifts = 0
        self.forced_tops = 0

    def __getitem__(self, v: int) -> Measure:
        return self.values[v]

    def __len__(self):
        return len(self.values)

    def copy(self) -> "MeasureMap":
        dup = MeasureMap.__new__(MeasureMap)
        dup.game = self.game
        dup.domain = self.domain
        dup.values = list(self.values)
        dup.lift_counts = list(self.lift_counts)
        dup.total_lifts = self.total_lifts
        dup.forced_tops = self.forced_tops
        return dup

    def lift_value(self, v: int, successors=None) -> Measure:
        """Target of lifting v: current value joined with the min (even owner)
        or max (odd owner) of Prog over the given successors."""
        game, dom = self.game, self.domain
        if successors is None:
            successors = game.post(v)
        p = game.priority[v]
        vals = [prog_value(dom, p, self.values[w]) for w in successors]
        pick = min if game.owner[v] == 0 else max
        best = pick(vals, key=measure_key)
        return max(self.values[v], best, key=measure_key)

    def lift(self, v: int, successors=None):
        """Apply one lift at v; returns (old, new).  Counts only when effective."""
        old = self.values[v]
        new = self.lift_value(v, successors)
        if measure_key(new) > measure_key(old):
            self.values[v] = new
            self.lift_counts[v] += 1
            self.total_lifts += 1
        return old, new

    def set_top(self, vertices) -> None:
        """Force TOP on a set of vertices resolved by attractor surgery."""
        for v in vertices:
            if self.values[v] is not TOP:
                self.values[v] = TOP
                self.forced_tops += 1

    def top_set(self) -> set:
        return {v for v, m in enumerate(self.values) if m is TOP}

    def __eq__(self, other):
        if isinstance(other, MeasureMap):
            return self.values == other.values
        return NotImplemented

    def __repr__(self):
        return f"MeasureMap({self.values!r})"


def prog(dom: MeasureDomain, rho: MeasureMap, v: int, w: int) -> Measure:
    """Least measure a vertex of v's priority may take given w's value."""
    if w not in rho.game.post(v):
        raise ValueError(f"{w} is not a successor of {v}")
    return prog_value(dom, rho.game.priority[v], rho[w])


def lift(dom: MeasureDomain, game, rho: MeasureMap, v: int) -> MeasureMap:
    """Lift transformer at v; updates rho in place and returns it."""
    assert rho.game is game and rho.domain is dom
    rho.lift(v)
    return rho
