"""Axiom checking for quandle tables and singquandle triples.

Every axiom is an equation evaluated over tuples of colors; an axiom holds
when lhs == rhs at every tuple.  Reports carry, per axiom, the
lexicographically first failing tuple (scanning the first coordinate
outermost) together with the two sides evaluated there, so a failure can be
reproduced with :func:`evaluate_axiom`.

The full VERIFIED predicate for a triple (star, r1, r2):

* star is a quandle (right translations bijective, right self-distributive,
  idempotent) and involutive;
* the five rotation axioms hold (a singular crossing reads the same after a
  quarter turn);
* the five move axioms hold ("riva", "rv-r1", "rv-r2", "rivb-r1", "rivb-r2",
  the coloring conditions of the singular Reidemeister moves).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .tables import OpTable, Singquandle


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    holds: bool
    witness: tuple[int, ...] | None = None
    lhs: object = None
    rhs: object = None


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...]

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.results)

    def failures(self) -> tuple[AxiomResult, ...]:
        return tuple(r for r in self.results if not r.holds)

    def result(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def __iter__(self):
        return iter(self.results)


# --- evaluators: each returns (lhs, rhs); the axiom holds at args iff lhs == rhs


def _idempotent(t, args):
    (x,) = args
    return t[x][x], x


def _right_bijective(t, args):
    # injectivity of each right translation, as a biconditional
    x, y, z = args
    return x == y, t[x][z] == t[y][z]


def _self_distributive(t, args):
    x, y, z = args
    return t[t[x][y]][z], t[t[x][z]][t[y][z]]


def _involutive(t, args):
    x, y = args
    return t[t[x][y]][y], x


TABLE_AXIOMS = {
    "right-bijective": (3, _right_bijective),
    "self-distributive": (3, _self_distributive),
    "idempotent": (1, _idempotent),
    "involutive": (2, _involutive),
}


def _rot_x_via_r1(s, args):
    x, y = args
    return s.r1.rows[y][s.r2.rows[x][y]], x


def _rot_x_via_r2(s, args):
    x, y = args
    r1, r2 = s.r1.rows, s.r2.rows
    return r2[r2[x][y]][r1[x][y]], x


def _rot_y_via_r2(s, args):
    x, y = args
    return s.r2.rows[s.r1.rows[x][y]][x], y


def _rot_y_via_r1(s, args):
    x, y = args
    r1, r2 = s.r1.rows, s.r2.rows
    return r1[r2[x][y]][r1[x][y]], y


def _rot_outputs(s, args):
    x, y = args
    r1, r2 = s.r1.rows, s.r2.rows
    c, d = r1[x][y], r2[x][y]
    return (c, d), (r2[y][d], r1[c][x])


def _riva(s, args):
    x, y, z = args
    star, r1, r2 = s.star.rows, s.r1.rows, s.r2.rows
    return star[star[y][z]][r2[x][z]], star[star[y][x]][r1[x][z]]


def _rv_r1(s, args):
    x, y = args
    star = s.star.rows
    return s.r1.rows[x][y], s.r2.rows[star[y][x]][x]


def _rv_r2(s, args):
    x, y = args
    star, r1, r2 = s.star.rows, s.r1.rows, s.r2.rows
    u = star[y][x]
    return r2[x][y], star[r1[u][x]][r2[u][x]]


def _rivb_r1(s, args):
    x, y, z = args
    star, r1 = s.star.rows, s.r1.rows
    return star[r1[star[x][y]][z]][y], r1[x][star[z][y]]


def _rivb_r2(s, args):
    x, y, z = args
    star, r2 = s.star.rows, s.r2.rows
    return r2[star[x][y]][z], star[r2[x][star[z][y]]][y]


ROTATION_AXIOMS = {
    "rotation-x-via-r1": (2, _rot_x_via_r1),
    "rotation-x-via-r2": (2, _rot_x_via_r2),
    "rotation-y-via-r2": (2, _rot_y_via_r2),
    "rotation-y-via-r1": (2, _rot_y_via_r1),
    "rotation-outputs": (2, _rot_outputs),
}

MOVE_AXIOMS = {
    "riva": (3, _riva),
    "rv-r1": (2, _rv_r1),
    "rv-r2": (2, _rv_r2),
    "rivb-r1": (3, _rivb_r1),
    "rivb-r2": (3, _rivb_r2),
}


def _scan(name: str, arity: int, evaluate, target, n: int) -> AxiomResult:
    for args in product(range(n), repeat=arity):
        lhs, rhs = evaluate(target, args)
        if lhs != rhs:
            return AxiomResult(name, False, args, lhs, rhs)
    return AxiomResult(name, True)


def evaluate_axiom(target, name: str, args: tuple[int, ...]):
    """Re-evaluate one axiom at a tuple; returns (lhs, rhs)."""
    if name in TABLE_AXIOMS:
        table = target.star if isinstance(target, Singquandle) else target
        return TABLE_AXIOMS[name][1](table.rows, args)
    for registry in (ROTATION_AXIOMS, MOVE_AXIOMS):
        if name in registry:
            if not isinstance(target, Singquandle):
                raise ValueError(f"axiom {name!r} needs a full singquandle")
            return registry[name][1](target, args)
    raise KeyError(name)


def check_quandle(table: OpTable) -> AxiomReport:
    rows = table.rows
    names = ("right-bijective", "self-distributive", "idempotent")
    return AxiomReport(tuple(
        _scan(nm, TABLE_AXIOMS[nm][0], TABLE_AXIOMS[nm][1], rows, table.order)
        for nm in names))


def check_involutive(table: OpTable) -> AxiomReport:
    arity, fn = TABLE_AXIOMS["involutive"]
    return AxiomReport((_scan("involutive", arity, fn, table.rows, table.order),))


def check_rotation_axioms(s: Singquandle) -> AxiomReport:
    return AxiomReport(tuple(
        _scan(nm, arity, fn, s, s.order) for nm, (arity, fn) in ROTATION_AXIOMS.items()))


def check_singquandle_axioms(s: Singquandle) -> AxiomReport:
    return AxiomReport(tuple(
        _scan(nm, arity, fn, s, s.order) for nm, (arity, fn) in MOVE_AXIOMS.items()))


def check_all(s: Singquandle) -> AxiomReport:
    """All 14 axioms of the VERIFIED predicate, in report order."""
    return AxiomReport(check_quandle(s.star).results
                       + check_involutive(s.star).results
                       + check_rotation_axioms(s).results
                       + check_singquandle_axioms(s).results)


def is_rack(table: OpTable) -> bool:
    rows, n = table.rows, table.order
    return (_scan("right-bijective", 3, _right_bijective, rows, n).holds
            and _scan("self-distributive", 3, _self_distributive, rows, n).holds)


def is_quandle(table: OpTable) -> bool:
    return is_rack(table) and _scan("idempotent", 1, _idempotent, table.rows, table.order).holds


def is_involutive(table: OpTable) -> bool:
    return _scan("involutive", 2, _involutive, table.rows, table.order).holds


def is_verified(s: Singquandle) -> bool:
    return check_all(s).all_hold


def is_connected(table: OpTable) -> bool:
    """True iff the right translations generate a transitive action."""
    if not is_quandle(table):
        raise ValueError("connectivity is defined here for quandles only")
    n = table.order
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for y in range(n):
            v = table.rows[x][y]
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    return len(seen) == n
