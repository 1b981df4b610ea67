"""The Littlewood-Richardson commutor, two independent ways.

``rho1_switching`` moves a ballot pair through itself by local switches (with
pluggable switch orders, including a jeu-de-taquin "infusion" order), while
``rho1_internal`` computes the same involution by a recursion over rows built
from internal row insertions and row appends.  ``staged_decomposition``
exposes the intermediate state of row-by-row staged switching.
"""

from __future__ import annotations

import random
from typing import Callable, NamedTuple

from .insertion import (GluedPair, InsertionTrace, glued_pair,
                        internal_insert, lr_violation)
from .tableaux import (Cell, EMPTY, SkewTableau, as_partition,
                       is_ballot_tableau, tableau_content,
                       yamanouchi_tableau)

STRATEGIES = ("greedy", "infusion", "random")


class SwitchSite(NamedTuple):
    cell_u: Cell
    cell_v: Cell


class TwoColorTableau:
    """Cells of a glued pair mid-switching, tagged by member.

    ``cells`` maps a 1-based (row, col) to (value, color) with color "u" for
    the inner member and "v" for the outer one.
    """

    __slots__ = ("outer", "inner", "cells")

    def __init__(self, outer, inner, cells: dict[Cell, tuple[int, str]]):
        self.outer = as_partition(outer)
        self.inner = as_partition(inner)
        self.cells = dict(cells)

    @classmethod
    def from_pair(cls, u: SkewTableau, v: SkewTableau) -> "TwoColorTableau":
        if as_partition(v.inner) != as_partition(u.outer):
            raise ValueError("v does not extend u")
        cells: dict[Cell, tuple[int, str]] = {}
        for cell, val in u.cells():
            cells[cell] = (val, "u")
        for cell, val in v.cells():
            cells[cell] = (val, "v")
        return cls(v.outer, u.inner, cells)

    def __eq__(self, other):
        if not isinstance(other, TwoColorTableau):
            return NotImplemented
        return (self.outer == other.outer and self.inner == other.inner
                and self.cells == other.cells)

    def __hash__(self):
        return hash((self.outer, self.inner, tuple(sorted(self.cells.items()))))

    def __repr__(self):
        return f"TwoColorTableau({self.outer}/{self.inner}, {len(self.cells)} cells)"


def _placement_ok(cells, color, val, at, skip):
    """Whether placing val at ``at`` keeps its color class a valid filling:
    rows weakly increase, columns strictly increase, values weakly increase
    along strict northwest-to-southeast diagonals."""
    r, c = at
    for cell, (v2, col2) in cells.items():
        if col2 != color or cell == skip or cell == at:
            continue
        r2, c2 = cell
        if r2 == r:
            if v2 > val if c2 < c else v2 < val:
                return False
        elif c2 == c:
            if v2 >= val if r2 < r else v2 <= val:
                return False
        elif r2 < r and c2 < c:
            if v2 > val:
                return False
        elif r2 > r and c2 > c:
            if v2 < val:
                return False
    return True


def _admissible(cells, cu, cv, ucol="u", vcol="v"):
    vu = cells[cu][0]
    vv = cells[cv][0]
    return (_placement_ok(cells, ucol, vu, cv, cu)
            and _placement_ok(cells, vcol, vv, cu, cv))


def _find_sites(cells, ucol="u", vcol="v"):
    sites = []
    for (r, c), (val, col) in cells.items():
        if col != ucol:
            continue
        for cv in ((r, c + 1), (r + 1, c)):
            e = cells.get(cv)
            if e is not None and e[1] == vcol and _admissible(cells, (r, c), cv, ucol, vcol):
                sites.append(SwitchSite((r, c), cv))
    sites.sort()
    return sites


def switch_sites(t: TwoColorTableau) -> list[SwitchSite]:
    """All admissible switches, sorted row-major by the u-cell, horizontal
    before vertical."""
    return _find_sites(t.cells)


def apply_switch(t: TwoColorTableau, s: SwitchSite) -> TwoColorTableau:
    """Interchange the letters at an admissible site."""
    cells = dict(t.cells)
    if s.cell_v not in ((s.cell_u[0], s.cell_u[1] + 1),
                        (s.cell_u[0] + 1, s.cell_u[1])):
        raise ValueError(f"cells {s.cell_u} and {s.cell_v} are not adjacent")
    if (s.cell_u not in cells or s.cell_v not in cells
            or cells[s.cell_u][1] != "u" or cells[s.cell_v][1] != "v"
            or not _admissible(cells, s.cell_u, s.cell_v)):
        raise ValueError(f"site {s} is not admissible")
    _swap(cells, s.cell_u, s.cell_v)
    return TwoColorTableau(t.outer, t.inner, cells)


def _swap(cells, cu, cv):
    vu, ucol = cells[cu]
    vv, vcol = cells[cv]
    cells[cu] = (vv, vcol)
    cells[cv] = (vu, ucol)


def _run_switching(cells, ucol, vcol, strategy, rng=None, on_frame=None) -> bool:
    """Switch until no site remains; mutates ``cells`` in place.

    Returns whether any step offered more than one admissible site (when not,
    every order walks the same path).
    """
    tracked = None
    had_choice = False
    while True:
        sites = _find_sites(cells, ucol, vcol)
        if not sites:
            return had_choice
        if len(sites) > 1:
            had_choice = True
        if strategy == "greedy":
            site = sites[0]
        elif strategy == "random":
            site = rng.choice(sites)
        elif strategy == "infusion":
            mine = [s for s in sites if s.cell_u == tracked] if tracked else []
            if not mine:
                tracked = min(s.cell_u for s in sites)
                mine = [s for s in sites if s.cell_u == tracked]
            if len(mine) == 2:
                east, south = mine[0], mine[1]
                # jeu de taquin move: the smaller neighbour slides in, the
                # south one on ties
                if cells[south.cell_v][0] <= cells[east.cell_v][0]:
                    site = south
                else:
                    site = east
            else:
                site = mine[0]
            tracked = site.cell_v
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        _swap(cells, site.cell_u, site.cell_v)
        if on_frame is not None:
            on_frame(site, dict(cells))


def _trimmed_skew(outer, inner, rows) -> SkewTableau:
    """Build a tableau from parallel lists that may carry trailing empty rows."""
    outer = list(outer)
    k = len(outer)
    while k and outer[k - 1] == 0:
        if inner[k - 1] or rows[k - 1]:
            raise ValueError("nonempty data beyond the outer shape")
        k -= 1
    return SkewTableau(outer[:k], inner[:k], rows[:k])


def _split_cells(outer, inner, cells, ucol, vcol):
    """Decompose terminal cells into (S, H): the v-material must fill a
    partition-bounded region extending the inner border."""
    outer = as_partition(outer)
    inner = tuple(as_partition(inner)) + (0,) * (len(outer) - len(as_partition(inner)))
    sigma = []
    for k in range(len(outer)):
        count = sum(1 for (r, _c), (_v, col) in cells.items()
                    if r == k + 1 and col == vcol)
        sigma.append(inner[k] + count)
    s_rows = []
    h_rows = []
    for k in range(len(outer)):
        srow = []
        for col in range(inner[k] + 1, sigma[k] + 1):
            e = cells.get((k + 1, col))
            if e is None or e[1] != vcol:
                raise ValueError("switching did not separate the members")
            srow.append(e[0])
        hrow = []
        for col in range(sigma[k] + 1, outer[k] + 1):
            e = cells.get((k + 1, col))
            if e is None or e[1] != ucol:
                raise ValueError("switching did not separate the members")
            hrow.append(e[0])
        s_rows.append(tuple(srow))
        h_rows.append(tuple(hrow))
    s = _trimmed_skew(sigma, inner, s_rows)
    h = SkewTableau(outer, sigma, h_rows)
    return s, h


def switching(u: SkewTableau, v: SkewTableau, strategy: str = "greedy",
              seed: int = 0,
              on_frame: Callable | None = None) -> tuple[SkewTableau, SkewTableau]:
    """Switch v through u until no switch applies; returns (S, H) with
    S Knuth-equivalent to v and H to u, on the same union shape."""
    if strategy == "seeded-random":
        strategy = "random"
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")
    tc = TwoColorTableau.from_pair(u, v)
    cells = tc.cells
    rng = random.Random(seed) if strategy == "random" else None
    _run_switching(cells, "u", "v", strategy, rng, on_frame)
    return _split_cells(tc.outer, tc.inner, cells, "u", "v")


def rho1_switching(p: GluedPair, strategy: str = "greedy",
                   seed: int = 0) -> GluedPair:
    """The switching involution on a ballot pair of partition shape."""
    why = lr_violation(p)
    if why:
        raise ValueError(f"not a ballot pair of partition shape: {why}")
    nu = tableau_content(p.skew)
    s, h = switching(p.yam, p.skew, strategy=strategy, seed=seed)
    if s != yamanouchi_tableau(nu):
        raise ValueError("switching did not produce the Yamanouchi tableau")
    return GluedPair(s, h)


class StagedDecomposition(NamedTuple):
    d: int
    s: SkewTableau
    f_hat: tuple[int, ...]
    big_d: tuple[int, ...]
    q: SkewTableau


def staged_decomposition(p: GluedPair) -> StagedDecomposition:
    """Switch the skew member through the Yamanouchi rows bottom-up and stop
    once a lifted letter settles in the last row; returns the intermediate
    state (d, S, F-hat, D, Q) of that staged switching."""
    why = lr_violation(p)
    if why:
        raise ValueError(f"not a ballot pair of partition shape: {why}")
    t = p.skew
    mu = as_partition(t.inner)
    lam = t.outer
    np1 = len(lam)
    n = np1 - 1
    if n < 1 or not mu:
        raise ValueError("need a nonzero inner shape and at least two rows")
    if len(mu) > n:
        raise ValueError("the inner shape must vanish in the last row")
    last = t.rows[-1]
    nu_last = sum(1 for x in last if x == np1)
    f_word = tuple(x for x in last if x <= n)
    if len(f_word) + nu_last != len(last) or not f_word:
        raise ValueError("last row must be a nonempty word over [n] followed "
                         "by largest letters")
    tc = TwoColorTableau.from_pair(p.yam, t)
    cells = tc.cells
    # recolor: unswitched Yamanouchi rows are "y"
    for cell, (val, col) in list(cells.items()):
        if col == "u":
            cells[cell] = (val, "y")
    d = None
    for r in range(n, 0, -1):
        if r > len(mu) or mu[r - 1] == 0:
            continue
        # activate row r of the Yamanouchi factor
        for cell, (val, col) in list(cells.items()):
            if col == "y" and val == r:
                cells[cell] = (val, "u")
        _run_switching(cells, "u", "v", "greedy")
        reached = any(cell[0] == np1 for cell, (_val, col) in cells.items()
                      if col == "u")
        # retire the switched row into the "q" class
        for cell, (val, col) in list(cells.items()):
            if col == "u":
                cells[cell] = (val, "q")
        if reached:
            d = r
            break
    if d is None:
        raise ValueError("no lifted letter reached the last row")
    # remaining "y" cells are Y_(mu_1..mu_{d-1}) in place; split v from q
    y_outer = mu[:d - 1]
    v_cells = {c: e for c, e in cells.items() if e[1] == "v"}
    q_cells = {c: e for c, e in cells.items() if e[1] == "q"}
    sigma = list(y_outer) + [0] * (np1 - (d - 1))
    for (r, _c), _ in v_cells.items():
        sigma[r - 1] += 1
    s_rows = []
    inner_s = list(y_outer) + [0] * (np1 - (d - 1))
    for k in range(np1):
        row = []
        for col in range(inner_s[k] + 1, sigma[k] + 1):
            e = v_cells.get((k + 1, col))
            if e is None:
                raise ValueError("staged switching left a ragged middle member")
            row.append(e[0])
        s_rows.append(tuple(row))
    s = _trimmed_skew(sigma, inner_s, s_rows)
    q_rows = []
    for k in range(np1):
        row = []
        for col in range(sigma[k] + 1, lam[k] + 1):
            e = q_cells.get((k + 1, col))
            if e is None:
                raise ValueError("staged switching left a ragged outer member")
            row.append(e[0])
        q_rows.append(tuple(row))
    q = SkewTableau(lam, as_partition(tuple(sigma)), q_rows)
    s_last = s.rows[np1 - 1] if len(s.rows) >= np1 else ()
    f_hat = tuple(x for x in s_last if x <= n)
    big_d = q.rows[np1 - 1]
    return StagedDecomposition(d, s, f_hat, big_d, q)


def _chi_skew(skew: SkewTableau, i: int) -> SkewTableau:
    outer = list(skew.outer)
    inner = list(skew.inner)
    rows = [list(r) for r in skew.rows]
    if i == len(outer) + 1:
        outer.append(1)
        inner.append(0)
        rows.append([i])
    elif 1 <= i <= len(outer):
        outer[i - 1] += 1
        rows[i - 1].append(i)
    else:
        raise ValueError(f"row {i} out of range for appending")
    try:
        return SkewTableau(outer, inner, rows)
    except ValueError as exc:
        raise ValueError(f"appending {i} to row {i} breaks the tableau: {exc}")


def chi_append(p: GluedPair, i: int) -> GluedPair:
    """Append one letter i at the end of row i of the skew member."""
    return GluedPair(p.yam, _chi_skew(p.skew, i))


def nu_hat(t: SkewTableau) -> tuple[int, ...]:
    """Count of letter i in row i, for each row, trailing zeros stripped."""
    counts = tuple(sum(1 for x in t.rows[k] if x == k + 1)
                   for k in range(len(t.outer)))
    while counts and counts[-1] == 0:
        counts = counts[:-1]
    return counts


def gt_order_word(t: SkewTableau) -> tuple[int, ...]:
    """The insertion-order word V_n n^h_n ... V_2 2^h_2 1^h_1 read off the
    rows of a ballot tableau, where V_i is row i without its trailing i's
    and h_i counts them."""
    if not is_ballot_tableau(t):
        raise ValueError("tableau is not ballot")
    word: list[int] = []
    for k in range(len(t.outer) - 1, -1, -1):
        i = k + 1
        row = t.rows[k]
        v_i = [x for x in row if x < i]
        h_i = len(row) - len(v_i)
        if any(x > i for x in row):
            raise ValueError(f"row {i} holds a letter above {i}")
        word.extend(v_i)
        word.extend([i] * h_i)
    return tuple(word)


def _assert_route_claim(traces: list[InsertionTrace], row: int):
    seen: set[Cell] = set()
    for tr in traces:
        if not tr.route:
            raise ValueError("a row-word insertion was a blank move")
        if tr.created[0] != row:
            raise ValueError(f"a row-word bumping route ended in row "
                             f"{tr.created[0]}, expected {row}")
        cells = set(tr.route)
        if seen & cells:
            raise ValueError("row-word bumping routes are not disjoint")
        seen |= cells
    return True


def rho1_internal(p: GluedPair) -> GluedPair:
    """The commutor computed by the row recursion: strip the last row into
    its sub-[n] word and its n's, recurse, then reinsert and append.

    Checks, at every level, that the row-word bumping routes are pairwise
    disjoint and land in that level's row.
    """
    why = lr_violation(p)
    if why:
        raise ValueError(f"not a ballot pair of partition shape: {why}")
    t = p.skew
    for k, row in enumerate(t.rows):
        if any(x > k + 1 for x in row):
            raise ValueError(f"row {k + 1} holds a letter above {k + 1}")

    def rec(n: int) -> SkewTableau:
        if n == 0:
            return EMPTY
        cur = rec(n - 1)
        row = t.rows[n - 1]
        v_word = [x for x in row if x < n]
        count_n = len(row) - len(v_word)
        for _ in range(count_n):
            cur, _tr = internal_insert(cur, n)
        traces = []
        for x in reversed(v_word):
            cur, tr = internal_insert(cur, x)
            traces.append(tr)
        _assert_route_claim(traces, n)
        for _ in range(t.inner[n - 1]):
            cur = _chi_skew(cur, n)
        return cur

    return glued_pair(rec(len(t.outer)))


def rho1_scratch(p: GluedPair) -> GluedPair:
    """The commutor built from the empty tableau by the flat product of
    insert-and-append operators, one block per row."""
    why = lr_violation(p)
    if why:
        raise ValueError(f"not a ballot pair of partition shape: {why}")
    t = p.skew
    cur = EMPTY
    for k in range(len(t.outer)):
        i = k + 1
        row = t.rows[k]
        v_word = [x for x in row if x < i]
        if len(v_word) + sum(1 for x in row if x == i) != len(row):
            raise ValueError(f"row {i} holds a letter above {i}")
        for _ in range(len(row) - len(v_word)):
            cur, _tr = internal_insert(cur, i)
        for x in reversed(v_word):
            cur, _tr = internal_insert(cur, x)
        for _ in range(t.inner[k]):
            cur = _chi_skew(cur, i)
    return glued_pair(cur)
