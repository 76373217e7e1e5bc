"""Coloring counts of singular diagrams by finite singquandles.

Two backends: generic backtracking with constraint propagation for arbitrary
structures, and exact modular linear algebra (Smith normal form over Z) for
the linear family, where every crossing constraint is a linear congruence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .alexander import AlexanderParams, LinearOps
from .diagrams import Classical, SingularDiagram
from .smith import kernel_count_mod, kernel_vectors_mod
from .tables import Singquandle

BACKEND_BRUTE = "brute-force"
BACKEND_LINEAR = "linear"

DEFAULT_LIST_CAP = 10 ** 6

# sentinel for "no viable value recorded yet" in the deduction sweep
_UNSEEN = object()


@dataclass(frozen=True)
class ColoringReport:
    """Coloring count plus an optional explicit list of colorings.

    A listed coloring is one tuple of arcs + free values, lexicographically
    sorted.  When the full list would exceed the cap, truncated is set and
    colorings holds the lexicographic prefix that fit (or None).
    """

    count: int
    backend: str
    colorings: tuple | None = None
    truncated: bool = False


def serialize_report(report: ColoringReport) -> str:
    lines = [f"count {report.count}"]
    if report.colorings is not None:
        for coloring in report.colorings:
            lines.append(" ".join(str(c) for c in coloring))
    return "\n".join(lines) + "\n"


class _Backtracker:
    """Depth-first search over arc colors with worklist propagation.

    After every assignment, crossings touching it are rescanned: the output
    legs are functions of the input legs, so sweeping the unknown inputs
    (at most n^2 cases) finds every arc whose satisfying values collapse to
    a single candidate.  The search branches on the arc involved in the
    most-determined crossing (or in index order, which emits solutions
    lexicographically).
    """

    def __init__(self, diagram: SingularDiagram, s: Singquandle, active=None):
        self.n = s.order
        self.m = diagram.arcs
        star, r1, r2 = s.star.rows, s.r1.rows, s.r2.rows
        self.constraints = []
        for cr in diagram.crossings:
            if isinstance(cr, Classical):
                self.constraints.append((star, cr.a, cr.b, cr.c, None))
            else:
                self.constraints.append((r1, cr.nw, cr.ne, cr.sw, (r2, cr.se)))
        self.con_labels = [frozenset(cr.labels) for cr in diagram.crossings]
        self.incident = [[] for _ in range(self.m)]
        for ci, labels in enumerate(self.con_labels):
            for x in labels:
                self.incident[x].append(ci)
        self.active = list(range(self.m)) if active is None else sorted(active)
        self.color = [None] * self.m
        self.aborted = False

    def _deduce(self, con):
        """None: nothing new; False: contradiction; else forced (arc, value) list."""
        color = self.color
        table, a, b, out, extra = con
        va, vb = color[a], color[b]
        if va is not None and vb is not None:
            # both inputs known: outputs are computable directly
            w = table[va][vb]
            co = color[out]
            if extra is None:
                if co is None:
                    return ((out, w),)
                return None if co == w else False
            se_rows, se = extra
            ws = se_rows[va][vb]
            cs = color[se]
            if co is None:
                if out == se:
                    return ((out, w),) if w == ws else False
                if cs is None:
                    return ((out, w), (se, ws))
                return ((out, w),) if cs == ws else False
            if co != w:
                return False
            if cs is None:
                return ((se, ws),)
            return None if cs == ws else False
        # some input unknown: sweep the unknown input values, outputs
        # follow; aliased legs are caught by reading back through color.
        # pending maps each unknown arc to the single value every viable
        # sweep case agreed on so far; once all arcs have disagreed the
        # sweep can stop early (nothing forced, no contradiction)
        se_rows, se = extra if extra is not None else (None, None)
        pending = {}
        for x in (a, b, out) if se is None else (a, b, out, se):
            if color[x] is None:
                pending.setdefault(x, _UNSEEN)
        inputs = (a,) if a == b else tuple(x for x in (a, b) if color[x] is None)
        hits = 0
        for combo in product(range(self.n), repeat=len(inputs)):
            for x, v in zip(inputs, combo):
                color[x] = v
            w = table[color[a]][color[b]]
            co = color[out]
            if co is not None and co != w:
                continue
            cs = None
            if se_rows is not None:
                ws = se_rows[color[a]][color[b]]
                cs = color[se]
                if cs is None:
                    if se == out and ws != w:
                        continue
                elif cs != ws:
                    continue
            hits += 1
            if not pending:
                break
            seen = list(zip(inputs, combo))
            if co is None:
                seen.append((out, w))
            if se_rows is not None and cs is None and se != out:
                seen.append((se, ws))
            for x, v in seen:
                cur = pending.get(x)
                if cur is _UNSEEN:
                    pending[x] = v
                elif cur is not None and cur != v:
                    del pending[x]
        for x in inputs:
            color[x] = None
        if hits == 0:
            return False
        return list(pending.items()) or None

    def _propagate(self, queue: set, trail: list) -> bool:
        while queue:
            ci = queue.pop()
            got = self._deduce(self.constraints[ci])
            if got is False:
                return False
            if got is not None:
                for arc, v in got:
                    self.color[arc] = v
                    trail.append(arc)
                    queue.update(self.incident[arc])
                # forcing an arc cannot shrink the forcing crossing's own
                # viable set, so rescanning it would conclude nothing new
                queue.discard(ci)
        return True

    def _pick(self, by_index: bool):
        color = self.color
        best = None
        best_known = -1
        for a in self.active:
            if color[a] is not None:
                continue
            if by_index:
                return a
            known = 0
            for ci in self.incident[a]:
                pinned = 0
                for x in self.con_labels[ci]:
                    if color[x] is not None:
                        pinned += 1
                if pinned > known:
                    known = pinned
            if known > best_known:
                best_known = known
                best = a
        return best

    def search(self, on_solution=None, by_index: bool = False) -> int:
        """Count solutions over the active arcs; on_solution may abort by
        returning False (the count is then meaningless)."""
        return self._search(set(range(len(self.constraints))), on_solution, by_index)

    def _search(self, dirty, on_solution, by_index) -> int:
        trail = []
        total = 0
        if self._propagate(set(dirty), trail):
            arc = self._pick(by_index)
            if arc is None:
                total = 1
                if on_solution is not None and not on_solution(tuple(self.color)):
                    self.aborted = True
            else:
                for v in range(self.n):
                    self.color[arc] = v
                    total += self._search(self.incident[arc], on_solution, by_index)
                    if self.aborted:
                        break
                self.color[arc] = None
        for a in reversed(trail):
            self.color[a] = None
        return total


def count_colorings_bruteforce(diagram: SingularDiagram, s: Singquandle,
                               list_colorings: bool = False,
                               cap: int = DEFAULT_LIST_CAP) -> ColoringReport:
    """Exact coloring count by backtracking; works for any structure."""
    n = s.order
    referenced = set()
    for cr in diagram.crossings:
        referenced.update(cr.labels)
    unreferenced = diagram.arcs - len(referenced)

    solver = _Backtracker(diagram, s, active=referenced)
    count = solver.search() * n ** (unreferenced + diagram.free)

    colorings = None
    truncated = False
    if list_colorings:
        collected = []

        def collect(arcs_tuple):
            for free_combo in product(range(n), repeat=diagram.free):
                if len(collected) >= cap:
                    return False
                collected.append(arcs_tuple + free_combo)
            return True

        lister = _Backtracker(diagram, s)
        lister.search(on_solution=collect, by_index=True)
        colorings = tuple(collected)
        truncated = len(collected) < count
    return ColoringReport(count, BACKEND_BRUTE, colorings, truncated)


@dataclass(frozen=True)
class ModularSystem:
    """Homogeneous system A c == 0 (mod modulus), one column per arc."""

    modulus: int
    arcs: int
    rows: tuple

    @staticmethod
    def from_diagram(diagram: SingularDiagram, ops: LinearOps) -> "ModularSystem":
        rows = []
        for cr in diagram.crossings:
            if isinstance(cr, Classical):
                rows.append(_constraint_row(diagram.arcs, ops.n, cr.c, cr.a, cr.b, ops.star))
            else:
                rows.append(_constraint_row(diagram.arcs, ops.n, cr.sw, cr.nw, cr.ne, ops.r1))
                rows.append(_constraint_row(diagram.arcs, ops.n, cr.se, cr.nw, cr.ne, ops.r2))
        return ModularSystem(ops.n, diagram.arcs, tuple(rows))


def _constraint_row(arcs, n, out, in1, in2, coeffs):
    row = [0] * arcs
    row[out] += 1
    row[in1] -= coeffs[0]
    row[in2] -= coeffs[1]
    return tuple(x % n for x in row)


def _as_ops(p) -> LinearOps:
    return LinearOps.from_params(p) if isinstance(p, AlexanderParams) else p


def count_colorings_linear(diagram: SingularDiagram, p,
                           list_colorings: bool = False,
                           cap: int = DEFAULT_LIST_CAP) -> ColoringReport:
    """Coloring count for a linear structure via Smith normal form."""
    ops = _as_ops(p)
    n = ops.n
    system = ModularSystem.from_diagram(diagram, ops)
    base = kernel_count_mod([list(r) for r in system.rows], diagram.arcs, n)
    count = base * n ** diagram.free

    colorings = None
    truncated = False
    if list_colorings:
        if base <= cap:
            vectors = sorted(kernel_vectors_mod(
                [list(r) for r in system.rows], diagram.arcs, n))
            collected = []
            for vec in vectors:
                for free_combo in product(range(n), repeat=diagram.free):
                    if len(collected) >= cap:
                        break
                    collected.append(vec + free_combo)
            colorings = tuple(collected)
            truncated = len(collected) < count
        else:
            truncated = True
    return ColoringReport(count, BACKEND_LINEAR, colorings, truncated)


def fig8_system_count(k: int, side: str, p: AlexanderParams,
                      list_colorings: bool = False) -> ColoringReport:
    """Count pairs (x, y) in Z_n x Z_n satisfying one side's two congruences.

    These are the displayed colorability conditions for the two closed
    2-strand diagrams with one singular crossing and a 2k-twist region;
    both conditions constrain the single difference x - y.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    n, t, b = p.n, p.t, p.b
    if side == "left":
        coeffs = ((1 - b) ** 2, -k * t + b + k)
    else:
        coeffs = (-k + k * t + b, -1 + k + t - k + b)
    pairs = tuple(
        (x, y)
        for x in range(n) for y in range(n)
        if all(c * (x - y) % n == 0 for c in coeffs))
    return ColoringReport(len(pairs), BACKEND_LINEAR,
                          pairs if list_colorings else None, False)


@dataclass(frozen=True)
class Verdict:
    """Outcome of scanning a family of structures against two diagrams."""

    separated: bool
    structure: object = None
    index: int = None
    counts: tuple = None

    def __str__(self):
        if not self.separated:
            return "not separated"
        return f"separated at index {self.index}: counts {self.counts[0]} vs {self.counts[1]}"


def _count_for(member, diagram: SingularDiagram) -> int:
    if isinstance(member, (AlexanderParams, LinearOps)):
        return count_colorings_linear(diagram, member).count
    return count_colorings_bruteforce(diagram, member).count


def distinguish(d1: SingularDiagram, d2: SingularDiagram, family) -> Verdict:
    """Scan the family in order; report the first member with differing counts."""
    for index, member in enumerate(family):
        c1 = _count_for(member, d1)
        c2 = _count_for(member, d2)
        if c1 != c2:
            return Verdict(True, member, index, (c1, c2))
    return Verdict(False)
