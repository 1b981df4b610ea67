"""Internal row insertion and the empty-matrix-word skew RSK correspondence.

The basic move vacates the inner corner of a row and Schensted-inserts the
bumped entry into the rows below; it grows the inner and outer borders by one
box each without changing the multiset of entries.  A companion word drives a
whole sequence of such moves, which is the forward direction of the
correspondence (T, U) -> (P, Q); the inverse reverse-bumps in the opposite
order.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import NamedTuple

from .tableaux import (Cell, SkewTableau, as_partition, companion_word,
                       is_ballot_tableau, yamanouchi_tableau)


class InsertionTrace(NamedTuple):
    """One internal insertion: the vacated inner cell, the bumping route
    (vacated cell first, created cell last), and the created outer cell.
    Blank-corner moves carry an empty route and created == vacated."""
    vacated: Cell
    route: tuple[Cell, ...]
    created: Cell


class GluedPair(NamedTuple):
    """A Yamanouchi tableau glued to a skew tableau sharing its border."""
    yam: SkewTableau
    skew: SkewTableau


def glued_pair(skew: SkewTableau) -> GluedPair:
    """Glue the Yamanouchi tableau of the inner border onto skew."""
    return GluedPair(yamanouchi_tableau(as_partition(skew.inner)), skew)


def lr_violation(p: GluedPair) -> str | None:
    """Why p fails to be a ballot pair of partition shape, or None."""
    mu = as_partition(p.skew.inner)
    if p.yam != yamanouchi_tableau(mu):
        return ("the inner member must be the Yamanouchi tableau of the "
                f"skew member's inner border {mu}")
    if not is_ballot_tableau(p.skew):
        return "the skew member's reading word is not ballot"
    return None


def is_lr_pair(p: GluedPair) -> bool:
    return lr_violation(p) is None


def inner_corners(t: SkewTableau) -> list[int]:
    """Rows at which an internal insertion is defined, 1-based.

    Row i qualifies when the cell (i, inner_i + 1) is a filled inner corner
    (nothing filled above it), or as a blank corner when the row is empty and
    adjoining the cell keeps both borders partition shaped.
    """
    outer, inner = t.outer, t.inner
    n = len(outer)
    out = []
    for i in range(1, n + 2):
        mu_i = inner[i - 1] if i <= n else 0
        lam_i = outer[i - 1] if i <= n else 0
        if lam_i > mu_i:
            if i == 1 or inner[i - 2] > mu_i:
                out.append(i)
        else:
            if i == 1 or inner[i - 2] >= mu_i + 1:
                out.append(i)
    return out


def _insert_inplace(outer: list, inner: list, rows: list, i: int) -> InsertionTrace:
    """Internal insertion at row i on parallel mutable lists."""
    n = len(outer)
    if i < 1 or i > n + 1:
        raise ValueError(f"row {i} is not an inner corner")
    mu_i = inner[i - 1] if i <= n else 0
    lam_i = outer[i - 1] if i <= n else 0
    cell = (i, mu_i + 1)
    if lam_i > mu_i:
        # filled corner: bump and reinsert below
        if not (i == 1 or inner[i - 2] > mu_i):
            raise ValueError(f"row {i} is not an inner corner")
        x = rows[i - 1].pop(0)
        inner[i - 1] += 1
        route = [cell]
        k = i  # 0-based index of the next row
        while True:
            if k == len(outer):
                outer.append(1)
                inner.append(0)
                rows.append([x])
                route.append((k + 1, 1))
                break
            row = rows[k]
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                outer[k] += 1
                route.append((k + 1, inner[k] + len(row)))
                break
            row[j], x = x, row[j]
            route.append((k + 1, inner[k] + j + 1))
            k += 1
        return InsertionTrace(cell, tuple(route), route[-1])
    # blank corner: adjoin the cell to both borders
    if not (i == 1 or inner[i - 2] >= mu_i + 1):
        raise ValueError(f"row {i} is not an inner corner")
    if i == n + 1:
        outer.append(1)
        inner.append(1)
        rows.append([])
    else:
        inner[i - 1] += 1
        outer[i - 1] += 1
    return InsertionTrace(cell, (), cell)


def _freeze(outer, inner, rows) -> SkewTableau:
    return SkewTableau._fast(tuple(outer), tuple(inner),
                             tuple(tuple(r) for r in rows))


def internal_insert(t: SkewTableau, i: int) -> tuple[SkewTableau, InsertionTrace]:
    """Apply the row internal insertion at row i.

    Filled corner: bump the entry at (i, inner_i+1) and row-insert it starting
    at row i+1, the route ending at one new outer box.  Blank corner: adjoin
    the blank cell to both borders.
    """
    outer, inner = list(t.outer), list(t.inner)
    rows = [list(r) for r in t.rows]
    trace = _insert_inplace(outer, inner, rows, i)
    return _freeze(outer, inner, rows), trace


def order_word_steps(t: SkewTableau, word) -> tuple[SkewTableau, list[InsertionTrace]]:
    """Apply the order word (rightmost letter first); returns result and the
    per-step traces in application order."""
    outer, inner = list(t.outer), list(t.inner)
    rows = [list(r) for r in t.rows]
    traces = []
    for step, i in enumerate(reversed(tuple(word)), start=1):
        try:
            traces.append(_insert_inplace(outer, inner, rows, i))
        except ValueError:
            raise ValueError(
                f"step {step}: row {i} is not an inner corner") from None
    return _freeze(outer, inner, rows), traces


def apply_order_word(t: SkewTableau, word) -> SkewTableau:
    """The composite insertion operator for an order word, applied to t."""
    result, _ = order_word_steps(t, word)
    return result


def extended_insert(p: GluedPair, i: int) -> GluedPair:
    """Internal insertion on a glued pair: the Yamanouchi factor gains one
    box in row i (a new bottom row when i is one past its length)."""
    mu = as_partition(p.yam.outer)
    n = len(mu)
    if i == n + 1:
        if n > 0 and mu[-1] < 1:
            raise ValueError("new Yamanouchi row needs a nonzero last part")
        new_mu = mu + (1,)
    elif 1 <= i <= n:
        new_mu = mu[:i - 1] + (mu[i - 1] + 1,) + mu[i:]
    else:
        raise ValueError(f"row {i} out of range for the Yamanouchi factor")
    skew, _ = internal_insert(p.skew, i)
    return GluedPair(yamanouchi_tableau(new_mu), skew)


def _standard_values(u: SkewTableau) -> list[int]:
    """Original entries of u listed in standard order."""
    order = sorted(((x, c[1], c[0]) for c, x in u.cells()))
    return [x for x, _c, _r in order]


def _forward_core(t: SkewTableau, rev_word, values, check: bool = True):
    """Run the insertions of a reversed order word, recording driven values
    at created boxes; returns (P, Q)."""
    outer, inner = list(t.outer), list(t.inner)
    rows = [list(r) for r in t.rows]
    recorded: dict[Cell, int] = {}
    for val, i in zip(values, rev_word):
        tr = _insert_inplace(outer, inner, rows, i)
        recorded[tr.created] = val
    p = _freeze(outer, inner, rows)
    q = _tableau_from_cells(p.outer, t.outer, recorded, check=check)
    return p, q


def skew_rsk_forward(t: SkewTableau, u: SkewTableau) -> tuple[SkewTableau, SkewTableau]:
    """Insert t internally in the standard order of u; returns (P, Q).

    P is the fully inserted tableau and Q records, at each created outer box,
    the entry of u that drove the step.
    """
    if as_partition(t.inner) != as_partition(u.inner):
        raise ValueError(
            f"inner borders differ: {as_partition(t.inner)} vs {as_partition(u.inner)}")
    word = companion_word(u)
    return _forward_core(t, tuple(reversed(word)), _standard_values(u))


def _tableau_from_cells(outer, inner, values: dict[Cell, int],
                        check: bool = True) -> SkewTableau:
    outer = as_partition(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(tuple(inner)))
    rows = []
    for k in range(len(outer)):
        row = []
        for col in range(inner[k] + 1, outer[k] + 1):
            if (k + 1, col) not in values:
                raise ValueError(f"cell ({k + 1}, {col}) missing a value")
            row.append(values[(k + 1, col)])
        rows.append(tuple(row))
    if not check:
        return SkewTableau._fast(outer, inner, tuple(rows))
    return SkewTableau(outer, inner, rows)


def skew_rsk_inverse(p: SkewTableau, q: SkewTableau) -> tuple[SkewTableau, SkewTableau]:
    """Invert the forward correspondence by reverse bumping in reverse
    standard order of Q; returns (T, U)."""
    if as_partition(p.outer) != as_partition(q.outer):
        raise ValueError("P and Q must share their outer border")
    # reverse standard order: by value, then column, then row, descending
    labelled = sorted(((val, c[1], c[0]) for c, val in q.cells()), reverse=True)
    outer = list(p.outer)
    inner = list(p.inner)
    rows = [list(r) for r in p.rows]
    u_values: dict[Cell, int] = {}
    for q_val, c, r in labelled:
        if c <= inner[r - 1]:
            # blank step: the cell sits inside the inner border; un-adjoin it
            if not (inner[r - 1] == c and outer[r - 1] == c):
                raise ValueError(f"cell ({r}, {c}) is not a removable blank box")
            if r == len(outer) and c == 1:
                outer.pop()
                inner.pop()
                rows.pop()
            else:
                inner[r - 1] -= 1
                outer[r - 1] -= 1
            u_values[(r, c)] = q_val
            continue
        # filled step: must be a removable outer box
        if c != outer[r - 1] or (r < len(outer) and outer[r] >= c):
            raise ValueError(f"cell ({r}, {c}) is not a removable outer box")
        v = rows[r - 1].pop()
        if r == len(outer) and not rows[r - 1] and inner[r - 1] == 0:
            outer.pop()
            inner.pop()
            rows.pop()
        else:
            outer[r - 1] -= 1
        k = r - 1  # 1-based row the reverse bump moves into next
        while True:
            if k == 0:
                raise ValueError("reverse bump ran past the first row")
            row = rows[k - 1]
            # rightmost entry strictly smaller than v
            j = len(row) - 1
            while j >= 0 and row[j] >= v:
                j -= 1
            if j < 0:
                # v returns to the end of the inner border of row k
                if inner[k - 1] == 0:
                    raise ValueError("reverse bump found no inner box to restore")
                cell = (k, inner[k - 1])
                row.insert(0, v)
                inner[k - 1] -= 1
                u_values[cell] = q_val
                break
            row[j], v = v, row[j]
            k -= 1
    t = SkewTableau(outer, inner, rows)
    u = _tableau_from_cells(p.inner, t.inner, u_values)
    return t, u
