"""Exhaustive perfect-code search in Gamma_n(1^s) as an exact cover problem.

Columns are the vertices of the graph and row ``v`` is the closed
neighbourhood N[v]; a perfect code is exactly a set of rows partitioning the
columns.  The solver is Knuth's Algorithm X over dict-of-sets with fixed
branching: the uncovered column with the fewest candidate rows (ties to the
smallest vertex mask), rows in ascending mask order, so the order in which
solutions are found is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .avoidance import AvoidanceGraph, CapacityError, gamma
from .codes import Code, verify_perfect_qn

VERTEX_BUDGET = 4096
DEFAULT_NODE_BUDGET = 20_000_000


@dataclass
class SearchOutcome:
    n: int
    s: int
    exists: bool
    solutions: list[Code] = field(default_factory=list)
    solution_count: int = 0
    nodes_expanded: int = 0
    exhausted: bool = True
    vertices: int = 0
    stopped_by: str | None = None  # "limit" or "budget" when not exhausted

    @property
    def undecided(self) -> bool:
        return self.stopped_by == "budget"

    def to_kv(self) -> str:
        lines = [
            f"n: {self.n}",
            f"s: {self.s}",
            f"vertices: {self.vertices}",
            f"exists: {str(self.exists).lower()}",
            f"exhausted: {str(self.exhausted).lower()}",
            f"solution_count: {self.solution_count}",
        ]
        for i, sol in enumerate(self.solutions):
            lines.append(f"solution_{i}: {' '.join(sol.strings())}")
        return "\n".join(lines) + "\n"


class _Budget(Exception):
    pass


def exact_cover_rows(g: AvoidanceGraph) -> tuple[list[int], dict[int, list[int]]]:
    """Vertex list and the closed neighbourhood of each vertex."""
    verts = [int(v) for v in g.vertex_masks()]
    rows = {v: sorted([v, *g.neighbor_bits(v)]) for v in verts}
    return verts, rows


def _algorithm_x(columns, rows, limit, node_budget):
    solutions: list[list[int]] = []
    partial: list[int] = []
    nodes = 0

    def select(r):
        removed = []
        for j in rows[r]:
            for i in columns[j]:
                for k in rows[i]:
                    if k != j:
                        columns[k].discard(i)
            removed.append(columns.pop(j))
        return removed

    def deselect(r, removed):
        for j in reversed(rows[r]):
            columns[j] = removed.pop()
            for i in columns[j]:
                for k in rows[i]:
                    if k != j:
                        columns[k].add(i)

    def solve():
        nonlocal nodes
        if not columns:
            solutions.append(sorted(partial))
            return limit is not None and len(solutions) >= limit
        nodes += 1
        if nodes > node_budget:
            raise _Budget
        col = min(columns, key=lambda c: (len(columns[c]), c))
        for r in sorted(columns[col]):
            partial.append(r)
            removed = select(r)
            stop = solve()
            deselect(r, removed)
            partial.pop()
            if stop:
                return True
        return False

    try:
        stopped_by = "limit" if solve() else None
    except _Budget:
        stopped_by = "budget"
    return solutions, nodes, stopped_by


def search_perfect_codes(
    n: int,
    s: int,
    limit: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SearchOutcome:
    """All perfect codes of Gamma_n(1^s), up to ``limit`` of them.

    ``exhausted`` is False when either ``limit`` or ``node_budget`` stopped
    the search early.
    """
    g = gamma(n, s)
    count = g.vertex_count
    if count > VERTEX_BUDGET:
        raise CapacityError(
            f"{g.descriptor} has {count} vertices, budget is {VERTEX_BUDGET}"
        )
    verts, rows = exact_cover_rows(g)
    columns = {v: set() for v in verts}
    for r, cols in rows.items():
        for c in cols:
            columns[c].add(r)
    found, nodes, stopped_by = _algorithm_x(columns, rows, limit, node_budget)
    codes = [Code.from_masks(n, sol) for sol in found]
    return SearchOutcome(
        n=n,
        s=s,
        exists=bool(codes),
        solutions=codes,
        solution_count=len(codes),
        nodes_expanded=nodes,
        exhausted=stopped_by is None,
        vertices=count,
        stopped_by=stopped_by,
    )


def min_s(n: int, s_max: int, node_budget: int = DEFAULT_NODE_BUDGET) -> int | None:
    """Smallest s in [2, s_max] for which Gamma_n(1^s) has a perfect code.

    Raises :class:`CapacityError` if a smaller s could not be decided.
    """
    for s in range(2, s_max + 1):
        outcome = search_perfect_codes(n, s, limit=1, node_budget=node_budget)
        if outcome.exists:
            return s
        if outcome.undecided:
            raise CapacityError(f"Gamma_{n}(1^{s}) undecided within the node budget")
    return None


def is_perfect_length(n: int) -> bool:
    """n = 2^p - 1 for some p >= 1."""
    return n >= 1 and (n + 1) & n == 0


@dataclass
class ScanCell:
    n: int
    s: int
    vertices: int | None
    status: str  # exists | absent | undecided
    count: int
    verdict: str  # consistent | counterexample | s1-anomaly | undecided
    counterexamples: list[Code] = field(default_factory=list)
    note: str = ""


@dataclass
class ScanReport:
    cells: list[ScanCell]

    @property
    def counterexamples(self) -> list[ScanCell]:
        return [c for c in self.cells if c.verdict == "counterexample"]

    @property
    def undecided(self) -> list[ScanCell]:
        return [c for c in self.cells if c.status == "undecided"]

    @property
    def anomalies(self) -> list[ScanCell]:
        return [c for c in self.cells if c.verdict == "s1-anomaly"]

    def table(self) -> str:
        head = f"{'n':>3} {'s':>3} {'vertices':>9} {'exists':>10} {'count':>6} {'consistent':>15}"
        rows = [head]
        for c in self.cells:
            v = "-" if c.vertices is None else str(c.vertices)
            rows.append(
                f"{c.n:>3} {c.s:>3} {v:>9} {c.status:>10} {c.count:>6} {c.verdict:>15}"
            )
        for c in self.cells:
            for code in c.counterexamples:
                rows.append(f"counterexample n={c.n} s={c.s}: {' '.join(code.strings())}")
        return "\n".join(rows) + "\n"

    def to_kv(self) -> str:
        return (
            f"cells: {len(self.cells)}\n"
            f"counterexamples: {len(self.counterexamples)}\n"
            f"anomalies: {len(self.anomalies)}\n"
            f"undecided: {len(self.undecided)}\n"
        )


def _scan_cell(n: int, s: int, node_budget: int) -> ScanCell:
    try:
        outcome = search_perfect_codes(n, s, node_budget=node_budget)
    except CapacityError as exc:
        return ScanCell(n, s, None, "undecided", 0, "undecided", note=str(exc))
    if outcome.undecided:
        return ScanCell(n, s, outcome.vertices, "undecided", outcome.solution_count,
                        "undecided", note="node budget exhausted")
    if not outcome.exists:
        return ScanCell(n, s, outcome.vertices, "absent", 0, "consistent")
    bad = [
        code for code in outcome.solutions
        if not (is_perfect_length(n) and verify_perfect_qn(code).perfect)
    ]
    if not bad:
        verdict = "consistent"
    elif s == 1:
        # Gamma_n(1) is the single vertex 0^n, so {0^n} is trivially perfect
        verdict = "s1-anomaly"
    else:
        verdict = "counterexample"
    return ScanCell(
        n, s, outcome.vertices, "exists", outcome.solution_count, verdict,
        counterexamples=bad if verdict == "counterexample" else [],
    )


def conjecture_scan(
    n_range: range | tuple[int, int],
    s_range: range | tuple[int, int] | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ScanReport:
    """Enumerate all perfect codes per (n, s) cell and test each one for
    n = 2^p - 1 and perfectness in Q_n.

    Tuples are inclusive bounds.  Without ``s_range`` each n is scanned over
    s = 2..n+1, the last of which is the full cube.
    """
    if isinstance(n_range, tuple):
        n_range = range(n_range[0], n_range[1] + 1)
    if isinstance(s_range, tuple):
        s_range = range(s_range[0], s_range[1] + 1)
    cells = []
    for n in n_range:
        for s in s_range if s_range is not None else range(2, n + 2):
            cells.append(_scan_cell(n, s, node_budget))
    return ScanReport(cells)
