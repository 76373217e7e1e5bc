"""Exhaustive enumeration of singquandle structures of small order.

The search fixes the star table first (an involutive quandle, built column
by column; each column is an involution fixing its own index), then picks
r1 row by row.  Two facts collapse the space:

- In any verified structure, r2 is determined by r1 and star:
  r2(a, b) = r1(b, a * b).
- The map y -> r1(x, y) composed with itself equals y -> y * x, so row x of
  r1 must be a permutation square root of column x of star.

Both are consequences of the axioms (the first from the move axiom relating
r1 and r2, the second from that plus the rotation axiom returning y), so
restricting the search this way loses nothing.  Partial assignments are
pruned by checking every axiom instance as soon as the rows it touches are
assigned, and every surviving candidate still runs the full checker.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations

from .axioms import check_all
from .tables import OpTable, Singquandle, serialize_tables

MAX_ORDER = 5


def _involutions_fixing(n: int, fixed: int) -> list:
    out = []
    for p in permutations(range(n)):
        if p[fixed] == fixed and all(p[p[i]] == i for i in range(n)):
            out.append(p)
    return out


def involutive_quandles(n: int) -> list:
    """All involutive quandle tables of order n, in lexicographic row order."""
    if n < 1:
        raise ValueError("order must be >= 1")
    column_choices = [_involutions_fixing(n, y) for y in range(n)]
    cols = [None] * n
    found = []

    def distributive_so_far(c: int) -> bool:
        # (x*y)*z == (x*z)*(y*z) for instances decidable from columns 0..c
        for y in range(c + 1):
            for z in range(c + 1):
                w = cols[z][y]
                if w > c or max(y, z, w) != c:
                    continue
                col_y, col_z, col_w = cols[y], cols[z], cols[w]
                for x in range(n):
                    if col_z[col_y[x]] != col_w[col_z[x]]:
                        return False
        return True

    def place(c: int) -> None:
        if c == n:
            rows = tuple(tuple(cols[y][x] for y in range(n)) for x in range(n))
            found.append(OpTable(rows))
            return
        for col in column_choices[c]:
            cols[c] = col
            if distributive_so_far(c):
                place(c + 1)
        cols[c] = None

    place(0)
    return found


def _square_roots(target, perms) -> list:
    n = len(target)
    return [p for p in perms if all(p[p[i]] == target[i] for i in range(n))]


def derive_r2(star: OpTable, r1: OpTable) -> OpTable:
    """The unique r2 compatible with star and r1: r2(a,b) = r1(b, a*b)."""
    n = star.order
    return OpTable(tuple(
        tuple(r1.rows[b][star.rows[a][b]] for b in range(n)) for a in range(n)))


def singquandles_for_star(star: OpTable) -> list:
    """All verified structures with the given star table."""
    n = star.order
    srows = star.rows
    perms = list(permutations(range(n)))
    domains = []
    for x in range(n):
        rho = tuple(srows[y][x] for y in range(n))
        roots = _square_roots(rho, perms)
        if not roots:
            return []
        domains.append(roots)

    rows = [None] * n
    found = []

    def consistent(k: int) -> bool:
        # check every axiom instance whose involved rows peak at row k
        fk = rows[k]
        rg = range(n)
        # returning y: y = r2(r1(k,y), k), involving only row k
        for y in rg:
            if fk[srows[fk[y]][k]] != y:
                return False
        for x in rg:
            rx = rows[x]
            if rx is None:
                continue
            for y in rg:
                ry = rows[y]
                if ry is None:
                    continue
                v = rx[y]                      # r1(x, y)
                u = ry[srows[x][y]]            # r2(x, y)
                # returning x via r2: x = r2(r2(x,y), r1(x,y))
                if v <= k and max(x, y, v) == k:
                    if rows[v][srows[u][v]] != x:
                        return False
                # returning y via r1: y = r1(r2(x,y), r1(x,y))
                if u <= k and max(x, y, u) == k:
                    if rows[u][v] != y:
                        return False
                # rotated outputs: r1(x,y) = r2(y, r2(x,y))
                if u <= k and max(x, y, u) == k:
                    if v != rows[u][srows[y][u]]:
                        return False
                # rotated outputs: r2(x,y) = r1(r1(x,y), x)
                if v <= k and max(x, y, v) == k:
                    if u != rows[v][x]:
                        return False
                # relating r1, r2 across a classical pass:
                # r2(x,y) = r1(y*x, x) * r2(y*x, x)
                w = srows[y][x]
                if w <= k and max(x, y, w) == k:
                    a = rows[w][x]
                    b = rows[x][srows[w][x]]
                    if u != srows[a][b]:
                        return False
        # triple-instance families
        for x in rg:
            rx = rows[x]
            if rx is None:
                continue
            for z in rg:
                rz = rows[z]
                if rz is None or max(x, z) != k:
                    continue
                # (y*z) * r2(x,z) == (y*x) * r1(x,z) for all y
                r2xz = rz[srows[x][z]]
                r1xz = rx[z]
                for y in rg:
                    if srows[srows[y][z]][r2xz] != srows[srows[y][x]][r1xz]:
                        return False
        for x in rg:
            rx = rows[x]
            if rx is None:
                continue
            for y in rg:
                w = srows[x][y]
                if rows[w] is None or max(x, w) != k:
                    continue
                # r1(x*y, z) * y == r1(x, z*y) for all z
                rw = rows[w]
                for z in rg:
                    if srows[rw[z]][y] != rx[srows[z][y]]:
                        return False
        for z in rg:
            rz = rows[z]
            if rz is None:
                continue
            for y in rg:
                w = srows[z][y]
                if rows[w] is None or max(z, w) != k:
                    continue
                # r2(x*y, z) == r2(x, z*y) * y for all x
                rw = rows[w]
                for x in rg:
                    if rz[srows[srows[x][y]][z]] != srows[rw[srows[x][w]]][y]:
                        return False
        return True

    def place(k: int) -> None:
        if k == n:
            r1 = OpTable(tuple(rows))
            candidate = Singquandle(star, r1, derive_r2(star, r1))
            if check_all(candidate).all_hold:
                found.append(candidate)
            return
        for g in domains[k]:
            rows[k] = g
            if consistent(k):
                place(k + 1)
        rows[k] = None

    place(0)
    return found


@dataclass(frozen=True)
class Census:
    order: int
    count: int
    structures: tuple = None
    elapsed: float = 0.0


def enumerate_singquandles(n: int, up_to_iso: bool = False) -> Census:
    """Complete census of order-n structures; hard order limit MAX_ORDER."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be between 1 and {MAX_ORDER}")
    start = time.perf_counter()
    count = 0
    canonical = {}
    for star in involutive_quandles(n):
        for s in singquandles_for_star(star):
            count += 1
            if up_to_iso:
                rep = canonical_form(s)
                canonical[_flat_key(rep)] = rep
    structures = None
    if up_to_iso:
        structures = tuple(canonical[key] for key in sorted(canonical))
    return Census(n, count, structures, time.perf_counter() - start)


def _flat_key(s: Singquandle) -> tuple:
    return (sum(s.star.rows, ()) + sum(s.r1.rows, ()) + sum(s.r2.rows, ()))


def relabel(s: Singquandle, perm) -> Singquandle:
    """Transport all three tables along the permutation of labels."""
    n = s.order
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of the label set")

    def move(table: OpTable) -> OpTable:
        rows = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                rows[perm[x]][perm[y]] = perm[table.rows[x][y]]
        return OpTable(tuple(tuple(r) for r in rows))

    return Singquandle(move(s.star), move(s.r1), move(s.r2))


def canonical_form(s: Singquandle) -> Singquandle:
    """Lexicographically least relabeling of the structure."""
    best = None
    best_key = None
    for perm in permutations(range(s.order)):
        candidate = relabel(s, perm)
        key = _flat_key(candidate)
        if best_key is None or key < best_key:
            best, best_key = candidate, key
    return best


def is_isomorphic(s1: Singquandle, s2: Singquandle) -> bool:
    """True iff some relabeling carries all three tables of s1 onto s2."""
    if s1.order != s2.order:
        raise ValueError("orders differ")
    return any(relabel(s1, perm) == s2 for perm in permutations(range(s1.order)))


def serialize_census(census: Census) -> str:
    lines = [f"order {census.order}", f"count {census.count}"]
    text = "\n".join(lines) + "\n"
    if census.structures is not None:
        for s in census.structures:
            text += "\n" + serialize_tables(s)
    return text
