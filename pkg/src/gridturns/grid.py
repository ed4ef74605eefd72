"""Grid and cycle data model: dimensions, tours, turn statistics, invariants.

Coordinates are 1-based: x in [1, m] grows rightward, y in [1, n] grows
upward, so figure-style drawings can be transcribed directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

Cell = tuple[int, int]
Edge = tuple[Cell, Cell]  # normalized: smaller endpoint first


class NoHamiltonCycleError(ValueError):
    """Raised when asked to build or bound cycles on dims that admit none."""


def norm_edge(u: Cell, v: Cell) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True, order=True)
class GridDims:
    """Board size: m columns, n rows; cells are unit squares."""
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"dims must be positive, got {self.m}x{self.n}")

    @property
    def area(self) -> int:
        return self.m * self.n

    def cells(self):
        for y in range(1, self.n + 1):
            for x in range(1, self.m + 1):
                yield (x, y)

    def contains(self, c: Cell) -> bool:
        return 1 <= c[0] <= self.m and 1 <= c[1] <= self.n

    def transpose(self) -> "GridDims":
        return GridDims(self.n, self.m)


def hamilton_exists(dims: GridDims) -> bool:
    """A Hamilton cycle exists iff the area is even and both sides are >= 2."""
    return dims.area % 2 == 0 and dims.m >= 2 and dims.n >= 2


@dataclass(frozen=True)
class Violation:
    kind: str          # off_grid | non_unit_step | repeated_cell | missing_cell | wrong_length
    index: int | None = None
    cell: Cell | None = None

    def __str__(self):
        parts = [self.kind]
        if self.index is not None:
            parts.append(f"at index {self.index}")
        if self.cell is not None:
            parts.append(f"cell {self.cell}")
        return " ".join(parts)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()


@dataclass(frozen=True)
class TurnStats:
    turns: int
    straights: int
    row_turns: tuple[int, ...]  # indexed by y-1, length n
    col_turns: tuple[int, ...]  # indexed by x-1, length m


@dataclass(frozen=True)
class HamCycle:
    """A Hamilton tour stored as an ordered, cyclically-closed cell sequence."""
    dims: GridDims
    tour: tuple[Cell, ...]

    def __post_init__(self):
        report = validate_tour(self.dims, self.tour)
        if not report.ok:
            raise ValueError(f"invalid tour: {report.violations[0]}")

    @cached_property
    def edges(self) -> frozenset[Edge]:
        t = self.tour
        return frozenset(norm_edge(t[i], t[(i + 1) % len(t)]) for i in range(len(t)))

    def __len__(self):
        return len(self.tour)


def validate_tour(dims: GridDims, tour) -> ValidationReport:
    """Check an arbitrary candidate tour; reports every violation found."""
    tour = tuple(tuple(c) for c in tour)
    violations = []
    if len(tour) != dims.area:
        violations.append(Violation("wrong_length", index=len(tour)))
    seen = set()
    for i, c in enumerate(tour):
        if not dims.contains(c):
            violations.append(Violation("off_grid", index=i, cell=c))
        elif c in seen:
            violations.append(Violation("repeated_cell", index=i, cell=c))
        seen.add(c)
    for c in dims.cells():
        if c not in seen:
            violations.append(Violation("missing_cell", cell=c))
    for i in range(len(tour)):
        a, b = tour[i], tour[(i + 1) % len(tour)]
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            violations.append(Violation("non_unit_step", index=i, cell=a))
    return ValidationReport(not violations, tuple(violations))


def validate(cycle_or_dims, tour=None) -> ValidationReport:
    """validate(cycle) or validate(dims, tour)."""
    if tour is None:
        return validate_tour(cycle_or_dims.dims, cycle_or_dims.tour)
    return validate_tour(cycle_or_dims, tour)


def turn_stats(cycle: HamCycle) -> TurnStats:
    """Classify each cell by its two incident tour edges; tally per row/column."""
    t = cycle.tour
    L = len(t)
    row = [0] * cycle.dims.n
    col = [0] * cycle.dims.m
    turns = 0
    for i in range(L):
        a, b, c = t[i - 1], t[i], t[(i + 1) % L]
        if (b[0] - a[0], b[1] - a[1]) != (c[0] - b[0], c[1] - b[1]):
            turns += 1
            col[b[0] - 1] += 1
            row[b[1] - 1] += 1
    return TurnStats(turns, cycle.dims.area - turns, tuple(row), tuple(col))


def signed_area2(tour) -> int:
    """Twice the shoelace area with y growing upward."""
    s = 0
    L = len(tour)
    for i in range(L):
        (x1, y1), (x2, y2) = tour[i], tour[(i + 1) % L]
        s += x1 * y2 - x2 * y1
    return s


def orient_clockwise(cycle: HamCycle) -> HamCycle:
    """Traverse so the signed area is negative in screen coordinates (y down).

    Equivalently: positive shoelace area in this module's y-up coordinates.
    Idempotent; reverses the sequence when needed.
    """
    if signed_area2(cycle.tour) < 0:
        return HamCycle(cycle.dims, cycle.tour[::-1])
    return cycle


def transpose(cycle: HamCycle) -> HamCycle:
    """Swap x and y; a valid cycle on the transposed dims with equal turn count."""
    return HamCycle(cycle.dims.transpose(), tuple((y, x) for x, y in cycle.tour))


def canonical(cycle: HamCycle) -> HamCycle:
    """Canonical representative: clockwise orientation, rotated to start at (1,1)."""
    c = orient_clockwise(cycle)
    i = c.tour.index(min(c.tour))
    return HamCycle(c.dims, c.tour[i:] + c.tour[:i])


def check_invariants(cycle: HamCycle) -> list[str]:
    """Row/column turn-parity suite; returns failure descriptions (empty = pass).

    - every row and column has an even number of turns;
    - the union of any cell's row and column contains at least two turns;
    - if m is odd every row has >= 2 turns; if n is odd every column has >= 2.
    """
    stats = turn_stats(cycle)
    m, n = cycle.dims.m, cycle.dims.n
    failures = []
    for y, k in enumerate(stats.row_turns, start=1):
        if k % 2:
            failures.append(f"row {y} has odd turn count {k}")
    for x, k in enumerate(stats.col_turns, start=1):
        if k % 2:
            failures.append(f"column {x} has odd turn count {k}")
    for y in range(1, n + 1):
        for x in range(1, m + 1):
            if stats.row_turns[y - 1] + stats.col_turns[x - 1] < 2:
                failures.append(f"row {y} + column {x} union has < 2 turns")
    if m % 2 == 1:
        for y, k in enumerate(stats.row_turns, start=1):
            if k < 2:
                failures.append(f"m odd but row {y} has {k} turns")
    if n % 2 == 1:
        for x, k in enumerate(stats.col_turns, start=1):
            if k < 2:
                failures.append(f"n odd but column {x} has {k} turns")
    return failures


def cycle_from_edges(dims: GridDims, edges) -> HamCycle | None:
    """Trace an edge set into a HamCycle; None if it is not a single full tour."""
    adj: dict[Cell, list[Cell]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if len(adj) != dims.area or any(len(nb) != 2 for nb in adj.values()):
        return None
    start = min(adj)
    tour = [start]
    prev: Cell | None = None
    cur = start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        step = nxt[0] if nxt else prev
        if step == start:
            break
        tour.append(step)
        prev, cur = cur, step
    if len(tour) != dims.area:
        return None
    return HamCycle(dims, tuple(tour))
