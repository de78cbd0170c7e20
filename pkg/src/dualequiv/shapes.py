"""Partitions, skew shapes and standard tableaux.

Cells are ``(row, col)`` pairs, 0-based, with row 0 at the bottom (French
convention), so the content of a cell is ``col - row``.  Words are tuples of
positive integers and signatures are strings over ``+``/``-``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Cell = tuple[int, int]
Word = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize (drop trailing zeros) a partition."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not weakly decreasing")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def conjugate(la: Sequence[int]) -> Partition:
    la = as_partition(la)
    if not la:
        return ()
    return tuple(sum(1 for part in la if part >= i) for i in range(1, la[0] + 1))


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n == 0:
        return ((),)

    def gen(remaining: int, cap: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    return len(inner) <= len(outer) and all(i <= o for i, o in zip(inner, outer))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer = as_partition(self.outer)
        inner = as_partition(self.inner)
        if not contains(outer, inner):
            raise ValueError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def straight(cls, la: Sequence[int]) -> "SkewShape":
        return cls(tuple(la), ())

    def inner_part(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    def row_range(self, r: int) -> range:
        return range(self.inner_part(r), self.outer[r])

    @property
    def is_straight(self) -> bool:
        return not self.inner

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def cells(self) -> tuple[Cell, ...]:
        return tuple((r, c) for r in range(len(self.outer)) for c in self.row_range(r))

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 0 <= r < len(self.outer) and self.inner_part(r) <= c < self.outer[r]

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def columns(self) -> list[list[int]]:
        """Rows occupied in each column ``0 .. outer[0]-1`` (possibly empty)."""
        width = self.outer[0] if self.outer else 0
        cols: list[list[int]] = [[] for _ in range(width)]
        for r, c in self.cells:
            cols[c].append(r)
        return cols

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data) -> "SkewShape":
        if isinstance(data, dict):
            return cls(tuple(data["outer"]), tuple(data.get("inner", ())))
        outer, inner = data
        return cls(tuple(outer), tuple(inner))

    def __str__(self) -> str:
        if self.is_straight:
            return f"({','.join(map(str, self.outer))})"
        return f"({','.join(map(str, self.outer))})/({','.join(map(str, self.inner))})"


def content(cell: Cell) -> int:
    r, c = cell
    return c - r


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape; ``rows[r]`` lists the entries of row ``r``
    from left to right, bottom row first."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if len(rows) != len(self.shape.outer) or any(
            len(row) != len(self.shape.row_range(r)) for r, row in enumerate(rows)
        ):
            raise ValueError(f"rows {rows} do not fit shape {self.shape}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_cells(cls, shape: SkewShape, entries: dict[Cell, int]) -> "Tableau":
        rows = tuple(tuple(entries[(r, c)] for c in shape.row_range(r)) for r in range(len(shape.outer)))
        return cls(shape, rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        """Straight-shape tableau from bottom-to-top rows."""
        return cls(SkewShape(tuple(len(r) for r in rows)), tuple(tuple(r) for r in rows))

    def __getitem__(self, cell: Cell) -> int:
        r, c = cell
        return self.rows[r][c - self.shape.inner_part(r)]

    def items(self) -> Iterator[tuple[Cell, int]]:
        for r, row in enumerate(self.rows):
            start = self.shape.inner_part(r)
            for j, v in enumerate(row):
                yield (r, start + j), v

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.items())

    @property
    def size(self) -> int:
        return self.shape.size

    def is_standard(self) -> bool:
        """Strictly increasing along rows and up columns; entries distinct."""
        d = self.as_dict()
        if len(set(d.values())) != len(d):
            return False
        for (r, c), v in d.items():
            if (r, c + 1) in d and d[(r, c + 1)] <= v:
                return False
            if (r + 1, c) in d and d[(r + 1, c)] <= v:
                return False
        return True

    def is_syt(self) -> bool:
        return self.is_standard() and sorted(v for _, v in self.items()) == list(range(1, self.size + 1))

    def relabel(self, mapping) -> "Tableau":
        return Tableau(self.shape, tuple(tuple(mapping(v) for v in row) for row in self.rows))

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "rows": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        # display top row first, 1-based rows are implicit in the picture
        lines = []
        for r in reversed(range(len(self.rows))):
            pad = "  ." * self.shape.inner_part(r)
            lines.append(pad + "".join(f"{v:3d}" for v in self.rows[r]))
        return "\n".join(lines)


def _addable(shape: SkewShape, filled: set[Cell], cell: Cell) -> bool:
    r, c = cell
    left_ok = c == shape.inner_part(r) or (r, c - 1) in filled
    below_ok = r == 0 or c < shape.inner_part(r - 1) or (r - 1, c) in filled
    return left_ok and below_ok


def iter_standard_fillings(shape: SkewShape) -> Iterator[dict[Cell, int]]:
    """Every standard filling of ``shape`` by ``1..size`` (unordered)."""
    cells = shape.cells
    n = len(cells)
    filled: dict[Cell, int] = {}

    def rec(value: int) -> Iterator[dict[Cell, int]]:
        if value > n:
            yield dict(filled)
            return
        for cell in cells:
            if cell not in filled and _addable(shape, filled.keys(), cell):
                filled[cell] = value
                yield from rec(value + 1)
                del filled[cell]

    yield from rec(1)


def enumerate_syt(shape: SkewShape | Sequence[int]) -> list[Tableau]:
    """All standard Young tableaux of ``shape``, ordered by row reading word."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape.straight(shape)
    tabs = [Tableau.from_cells(shape, f) for f in iter_standard_fillings(shape)]
    tabs.sort(key=row_reading_word)
    return tabs


@cache
def count_syt(la: Partition) -> int:
    """Number of SYT of straight shape ``la`` by removing outer corners."""
    la = as_partition(la)
    if sum(la) == 0:
        return 1
    total = 0
    for i, part in enumerate(la):
        nxt = la[i + 1] if i + 1 < len(la) else 0
        if part > nxt:
            total += count_syt(as_partition(la[:i] + (part - 1,) + la[i + 1:]))
    return total


def row_reading_word(t: Tableau) -> Word:
    """Rows left to right, top row first."""
    return tuple(v for row in reversed(t.rows) for v in row)


def content_reading_word(t: Tableau) -> Word:
    """Diagonals of increasing content, each read south-west to north-east."""
    return tuple(v for (r, c), v in sorted(t.items(), key=lambda it: (content(it[0]), it[0][0])))


def signature(w: Sequence[int]) -> str:
    """``+`` in position i iff i occurs before i+1 in ``w``."""
    pos = {v: k for k, v in enumerate(w)}
    n = len(w)
    if sorted(pos) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(w)} is not a permutation of 1..{n}")
    return "".join("+" if pos[i] < pos[i + 1] else "-" for i in range(1, n))


def tableau_signature(t: Tableau) -> str:
    return signature(content_reading_word(t))


def superstandard(la: Sequence[int]) -> Tableau:
    """U_la: 1..n filled row by row from the bottom."""
    la = as_partition(la)
    rows, start = [], 1
    for part in la:
        rows.append(tuple(range(start, start + part)))
        start += part
    return Tableau(SkewShape(la), tuple(rows))


def inner_corners(shape: SkewShape) -> list[Cell]:
    """Removable cells of the inner partition."""
    inner = shape.inner
    out = []
    for r, part in enumerate(inner):
        nxt = inner[r + 1] if r + 1 < len(inner) else 0
        if part > nxt:
            out.append((r, part - 1))
    return out


def jdt_rectify(t: Tableau) -> Tableau:
    """Rectify a skew tableau by jeu de taquin.

    Slides always start in the inner corner of largest content; the final
    tableau does not depend on this choice.
    """
    entries = t.as_dict()
    inner = list(t.shape.inner)
    outer = list(t.shape.outer)
    while any(inner):
        shape = SkewShape(tuple(outer), tuple(inner))
        r, c = max(inner_corners(shape), key=lambda cell: (content(cell), -cell[0]))
        inner[r] -= 1
        hole = (r, c)
        while True:
            hr, hc = hole
            right, up = (hr, hc + 1), (hr + 1, hc)
            cand = [x for x in (right, up) if x in entries]
            if not cand:
                break
            nxt = min(cand, key=entries.__getitem__)
            entries[hole] = entries.pop(nxt)
            hole = nxt
        hr, hc = hole
        outer[hr] -= 1
        while inner and inner[-1] == 0:
            inner.pop()
    shape = SkewShape(tuple(outer), ())
    return Tableau.from_cells(shape, entries)


def is_yamanouchi(w: Sequence[int]) -> bool:
    """Every suffix has at least as many i's as (i+1)'s, for all i."""
    counts: dict[int, int] = {}
    for x in reversed(w):
        if x < 1:
            return False
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def yamanouchi_content(w: Sequence[int]) -> Partition:
    top = max(w, default=0)
    return tuple(sum(1 for x in w if x == i) for i in range(1, top + 1))


def standardize_yam(w: Sequence[int]) -> Word:
    """Replace the 1's by 1..la_1 left to right, the 2's by the next la_2 values, and so on."""
    if not is_yamanouchi(w):
        raise ValueError(f"{tuple(w)} is not a Yamanouchi word")
    la = yamanouchi_content(w)
    nxt = {}
    start = 1
    for i, part in enumerate(la, start=1):
        nxt[i] = start
        start += part
    out = []
    for x in w:
        out.append(nxt[x])
        nxt[x] += 1
    return tuple(out)


def yamanouchi_words(la: Sequence[int]) -> Iterator[Word]:
    """All Yamanouchi words of content ``la``, built right to left."""
    la = as_partition(la)
    n = sum(la)
    counts = [0] * len(la)
    suffix: list[int] = []

    def rec() -> Iterator[Word]:
        if len(suffix) == n:
            yield tuple(reversed(suffix))
            return
        for i in range(len(la)):
            if counts[i] < la[i] and (i == 0 or counts[i] < counts[i - 1]):
                counts[i] += 1
                suffix.append(i + 1)
                yield from rec()
                suffix.pop()
                counts[i] -= 1

    yield from rec()


def format_word(w: Sequence[int]) -> str:
    if len(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def parse_word(text: str) -> Word:
    text = text.strip()
    if "," in text:
        return tuple(int(x) for x in text.split(",") if x.strip())
    return tuple(int(ch) for ch in text)
