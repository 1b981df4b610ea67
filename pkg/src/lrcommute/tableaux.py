"""Partitions, skew semistandard tableaux, reading words and enumerators.

Conventions: English (matrix) orientation, rows and columns 1-based in every
public interface.  Partitions are tuples of weakly decreasing nonnegative
integers; trailing zeros are stripped on input, so ``(6, 4, 0, 0)`` and
``(6, 4)`` denote the same partition.  All values are immutable.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, NamedTuple

Cell = tuple[int, int]


def as_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate a weakly decreasing nonnegative sequence; strip trailing zeros."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {p}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    """Whether the diagram of ``inner`` fits inside ``outer`` row by row."""
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def partitions_of(n: int, max_len: int | None = None,
                  max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n, largest part first, optionally bounded."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for head in range(min(n, max_part), 0, -1):
        for tail in partitions_of(n - head, max_len - 1, head):
            yield (head,) + tail


def subpartitions(outer: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All partitions contained in ``outer``."""
    def rec(i, prev):
        if i == len(outer):
            yield ()
            return
        for part in range(min(outer[i], prev), -1, -1):
            if part == 0:
                yield ()
                return
            for tail in rec(i + 1, part):
                yield (part,) + tail
    yield from rec(0, outer[0] if outer else 0)


class SkewShape(NamedTuple):
    outer: tuple[int, ...]
    inner: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


def skew_shape(outer: Iterable[int], inner: Iterable[int]) -> SkewShape:
    o, i = as_partition(outer), as_partition(inner)
    if not contains(o, i):
        raise ValueError(f"inner {i} not contained in outer {o}")
    return SkewShape(o, i)


class SkewTableau:
    """A semistandard filling of a skew shape.

    ``rows[i]`` holds the entries of row ``i+1`` left to right; row ``i+1``
    has ``outer[i] - inner[i]`` entries sitting in columns
    ``inner[i]+1 .. outer[i]``.  Rows weakly increase, columns strictly
    increase.  Inner cells are positional blanks, never sentinel entries.
    """

    __slots__ = ("outer", "inner", "rows")

    def __init__(self, outer, inner, rows, check: bool = True):
        o = as_partition(outer)
        i = as_partition(inner)
        i = i + (0,) * (len(o) - len(i))
        r = tuple(tuple(int(x) for x in row) for row in rows)
        r = r + ((),) * (len(o) - len(r))
        self.outer = o
        self.inner = i
        self.rows = r
        if check:
            self._validate()

    def _validate(self):
        o, i, r = self.outer, self.inner, self.rows
        if len(i) != len(o) or len(r) != len(o):
            raise ValueError("row count mismatch with outer shape")
        if not contains(o, tuple(x for x in i if x)):
            raise ValueError(f"inner {i} not contained in outer {o}")
        for k, row in enumerate(r):
            if len(row) != o[k] - i[k]:
                raise ValueError(
                    f"row {k + 1} has {len(row)} entries, expected {o[k] - i[k]}")
            for x in row:
                if x < 1:
                    raise ValueError(f"entry {x} < 1 in row {k + 1}")
            for a, b in zip(row, row[1:]):
                if a > b:
                    raise ValueError(f"row {k + 1} not weakly increasing")
        for k in range(1, len(r)):
            lo = max(i[k], i[k - 1])
            hi = min(o[k], o[k - 1])
            for col in range(lo + 1, hi + 1):
                above = r[k - 1][col - 1 - i[k - 1]]
                below = r[k][col - 1 - i[k]]
                if above >= below:
                    raise ValueError(
                        f"column {col} not strictly increasing at row {k + 1}")

    @staticmethod
    def _fast(outer: tuple, inner: tuple, rows: tuple) -> "SkewTableau":
        # caller guarantees normalized tuples of matching lengths
        t = SkewTableau.__new__(SkewTableau)
        t.outer = outer
        t.inner = inner
        t.rows = rows
        return t

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def n_rows(self) -> int:
        return len(self.outer)

    def entry(self, row: int, col: int) -> int:
        """Entry at 1-based (row, col); raises if the cell is not filled."""
        if not (1 <= row <= len(self.outer)):
            raise ValueError(f"row {row} out of range")
        if not (self.inner[row - 1] < col <= self.outer[row - 1]):
            raise ValueError(f"cell ({row}, {col}) not filled")
        return self.rows[row - 1][col - 1 - self.inner[row - 1]]

    def cells(self) -> Iterator[tuple[Cell, int]]:
        """Filled cells with entries, row-major."""
        for k, row in enumerate(self.rows):
            for j, x in enumerate(row):
                yield (k + 1, self.inner[k] + j + 1), x

    def is_normal(self) -> bool:
        return not any(self.inner)

    def __eq__(self, other):
        if not isinstance(other, SkewTableau):
            return NotImplemented
        return (self.outer == other.outer and self.inner == other.inner
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.outer, self.inner, self.rows))

    def __repr__(self):
        return f"SkewTableau({self.outer}/{self.inner})"

    def __str__(self):
        return to_text(self)


EMPTY = SkewTableau((), (), ())


def empty_of_shape(mu) -> SkewTableau:
    """The empty skew tableau mu/mu (a bare Young diagram)."""
    mu = as_partition(mu)
    return SkewTableau(mu, mu, ((),) * len(mu), check=False)


def reading_word(t: SkewTableau) -> tuple[int, ...]:
    """Row reading word: rows bottom to top, each left to right."""
    out = []
    for row in reversed(t.rows):
        out.extend(row)
    return tuple(out)


def content(word: Iterable[int]) -> tuple[int, ...]:
    """counts[i] = multiplicity of letter i+1; length = largest letter."""
    counts: list[int] = []
    for x in word:
        if x < 1:
            raise ValueError(f"letter {x} < 1")
        if x > len(counts):
            counts.extend([0] * (x - len(counts)))
        counts[x - 1] += 1
    return tuple(counts)


def is_ballot(word) -> bool:
    """True iff the content of every suffix is a partition."""
    counts: dict[int, int] = {}
    for x in reversed(tuple(word)):
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts.get(x - 1, 0) < counts[x]:
            return False
    return True


def is_ballot_tableau(t: SkewTableau) -> bool:
    return is_ballot(reading_word(t))


def tableau_content(t: SkewTableau) -> tuple[int, ...]:
    return content(reading_word(t))


def standardize(t: SkewTableau) -> SkewTableau:
    """Renumber entries 1..size; among equal entries the one in the smaller
    column gets the smaller number (equal entries never share a column)."""
    order = sorted(((x, c[1], c[0]) for c, x in t.cells()))
    label = {(r, c): p + 1 for p, (_, c, r) in enumerate(order)}
    rows = []
    for k in range(len(t.outer)):
        rows.append(tuple(label[(k + 1, t.inner[k] + j + 1)]
                          for j in range(t.outer[k] - t.inner[k])))
    return SkewTableau(t.outer, t.inner, rows, check=False)


def companion_word(t: SkewTableau) -> tuple[int, ...]:
    """Word u_N .. u_1 where u_p is the row of entry p in the standardization."""
    order = sorted(((x, c[1], c[0]) for c, x in t.cells()))
    return tuple(r for _, _, r in reversed(order))


def yamanouchi_tableau(mu) -> SkewTableau:
    """Normal-shape tableau with row i filled with mu_i copies of i."""
    mu = as_partition(mu)
    rows = tuple((i + 1,) * m for i, m in enumerate(mu))
    return SkewTableau(mu, (), rows, check=False)


def glue(a: SkewTableau, b: SkewTableau) -> SkewTableau:
    """Union of a and an extending b as one skew tableau."""
    if as_partition(b.inner) != as_partition(a.outer):
        raise ValueError("b does not extend a")
    outer = b.outer
    inner = a.inner + (0,) * (len(outer) - len(a.inner))
    rows = []
    for k in range(len(outer)):
        row = a.rows[k] if k < len(a.rows) else ()
        rows.append(row + (b.rows[k] if k < len(b.rows) else ()))
    return SkewTableau(outer, inner, rows)


def restrict_rows(t: SkewTableau, i: int) -> tuple[SkewTableau, SkewTableau]:
    """Factor across row i: returns (rows i+1.., first i rows)."""
    n = len(t.outer)
    if not (0 <= i <= n):
        raise ValueError(f"row index {i} out of range 0..{n}")
    top = SkewTableau(t.outer[:i], t.inner[:i], t.rows[:i], check=False)
    bottom = SkewTableau(t.outer[i:], t.inner[i:], t.rows[i:], check=False)
    return bottom, top


def _fill_backtrack(outer, inner, accept_entry, on_complete):
    """Shared cell-by-cell filler, top row to bottom, left to right.

    accept_entry(row_idx0, col, lower_bound, state) yields the admissible
    (value, state) choices for one cell; on_complete(rows) is called with
    the filled rows for every complete filling.
    """
    n = len(outer)
    rows = [[0] * (outer[k] - inner[k]) for k in range(n)]

    def rec(k, j, state):
        if k == n:
            on_complete(rows)
            return
        if j == len(rows[k]):
            rec(k + 1, 0, state)
            return
        col = inner[k] + j + 1
        lo = rows[k][j - 1] if j > 0 else 1
        above = 0
        if k > 0 and inner[k - 1] < col <= outer[k - 1]:
            above = rows[k - 1][col - 1 - inner[k - 1]]
        lo = max(lo, above + 1)
        for val, st in accept_entry(k, col, lo, state):
            rows[k][j] = val
            rec(k, j + 1, st)
        rows[k][j] = 0

    rec(0, 0, None)


def enumerate_ssyt(shape: SkewShape, max_letter: int) -> list[SkewTableau]:
    """All semistandard fillings over alphabet [max_letter], ordered
    lexicographically by reading word."""
    if max_letter < 1:
        raise ValueError("max_letter must be >= 1")
    outer, inner = shape.outer, shape.inner + (0,) * (len(shape.outer) - len(shape.inner))
    found: list[SkewTableau] = []

    def accept(k, col, lo, state):
        for v in range(lo, max_letter + 1):
            yield v, state

    def done(rows):
        found.append(SkewTableau(outer, inner, [tuple(r) for r in rows],
                                 check=False))

    _fill_backtrack(outer, inner, accept, done)
    found.sort(key=reading_word)
    return found


def enumerate_with_content(shape: SkewShape, nu) -> list[SkewTableau]:
    """All semistandard fillings of the shape with exact content nu."""
    nu = tuple(nu)
    outer, inner = shape.outer, shape.inner + (0,) * (len(shape.outer) - len(shape.inner))
    if sum(outer) - sum(inner) != sum(nu):
        return []
    found: list[SkewTableau] = []
    remaining = list(nu)

    def accept(k, col, lo, state):
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] > 0:
                remaining[v - 1] -= 1
                yield v, state
                remaining[v - 1] += 1

    def done(rows):
        found.append(SkewTableau(outer, inner, [tuple(r) for r in rows],
                                 check=False))

    _fill_backtrack(outer, inner, accept, done)
    found.sort(key=reading_word)
    return found


def enumerate_ballot(shape: SkewShape, nu) -> list[SkewTableau]:
    """All ballot semistandard tableaux of the given shape and content,
    in reading-word lexicographic order.

    Fills cells in reverse reading order (top row rightmost first) so the
    ballot condition prunes every prefix of the search.
    """
    nu = as_partition(nu)
    outer = shape.outer
    inner = shape.inner + (0,) * (len(outer) - len(shape.inner))
    if sum(outer) - sum(inner) != sum(nu):
        return []
    n = len(outer)
    rows = [[0] * (outer[k] - inner[k]) for k in range(n)]
    remaining = list(nu)
    suffix = [0] * (len(nu) + 1)
    found: list[SkewTableau] = []

    # reverse reading order is rows top to bottom, each row right to left;
    # every partial filling is then a suffix of the reading word
    def walk(k, j):
        if k == n:
            found.append(SkewTableau(outer, inner,
                                     [tuple(r) for r in rows], check=False))
            return
        width = len(rows[k])
        if j == width:
            walk(k + 1, 0)
            return
        pos = width - 1 - j
        col = inner[k] + pos + 1
        hi = rows[k][pos + 1] if pos + 1 < width else len(nu)
        above = 0
        if k > 0 and inner[k - 1] < col <= outer[k - 1]:
            above = rows[k - 1][col - 1 - inner[k - 1]]
        for v in range(hi, above, -1):
            if remaining[v - 1] == 0:
                continue
            # ballot: reading this letter keeps suffix content a partition
            if v > 1 and suffix[v] + 1 > suffix[v - 1]:
                continue
            remaining[v - 1] -= 1
            suffix[v] += 1
            rows[k][pos] = v
            walk(k, j + 1)
            rows[k][pos] = 0
            suffix[v] -= 1
            remaining[v - 1] += 1

    walk(0, 0)
    found.sort(key=reading_word)
    return found


# ---------------------------------------------------------------------------
# serialization

def to_json_dict(t: SkewTableau) -> dict:
    return {"outer": list(t.outer), "inner": list(t.inner),
            "rows": [list(r) for r in t.rows]}


def from_json_dict(d: dict) -> SkewTableau:
    return SkewTableau(d["outer"], d["inner"], d["rows"])


def to_json(t: SkewTableau) -> str:
    return json.dumps(to_json_dict(t))


def from_json(s: str) -> SkewTableau:
    return from_json_dict(json.loads(s))


def to_text(t: SkewTableau) -> str:
    """Grid format: one row per line, '.' per inner blank, entries space
    separated."""
    lines = []
    for k in range(len(t.outer)):
        parts = ["."] * t.inner[k] + [str(x) for x in t.rows[k]]
        lines.append(" ".join(parts))
    return "\n".join(lines)


def from_text(s: str) -> SkewTableau:
    outer, inner, rows = [], [], []
    for line in s.splitlines():
        line = line.strip()
        if not line:
            continue
        toks = line.split()
        blanks = 0
        while blanks < len(toks) and toks[blanks] == ".":
            blanks += 1
        entries = []
        for tok in toks[blanks:]:
            if tok == ".":
                raise ValueError("blank after entries in a row")
            entries.append(int(tok))
        inner.append(blanks)
        outer.append(blanks + len(entries))
        rows.append(tuple(entries))
    return SkewTableau(outer, inner, rows)
