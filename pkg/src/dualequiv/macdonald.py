"""Modified Macdonald polynomials through tuples of ribbons.

A filling of the skew shape mu/rho becomes a tuple of ribbons, one per
column: ribbon i holds the entries of column i, with the entry in row j
placed at content -j.  Reading a column from the top down, a rise puts the
next cell to the right and a fall puts it directly below, which makes the
ribbon filling standard.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .llt import SkewTuple, TupleFilling, inv_k, llt_f_expansion, shifted_content_word
from .qsym import FExpansion, QTPoly, SchurExpansion, f_equal
from .shapes import Cell, Partition, SkewShape, Tableau, as_partition, content, signature
from .words import rsk_shape, syam_member

DIRECT_FORBIDDEN: tuple[Partition, ...] = ((3, 3), (4,))
CONJUGATE_FORBIDDEN: tuple[Partition, ...] = ((2, 2, 2), (1, 1, 1, 1))


class ShapeNotCovered(ValueError):
    def __init__(self, shape, pattern):
        super().__init__(f"{shape} contains {pattern} as a subdiagram")
        self.pattern = pattern


def as_skew(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(as_partition(shape))


def contains_subdiagram(shape, pattern: Sequence[int]) -> bool:
    """True if some translate of the diagram of ``pattern`` lies in ``shape``."""
    shape = as_skew(shape)
    cells = set(shape.cells)
    pat = SkewShape(as_partition(pattern)).cells
    if not cells or not pat:
        return not pat
    rows = max(r for r, _ in cells) + 1
    cols = max(c for _, c in cells) + 1
    for dr in range(rows):
        for dc in range(cols):
            if all((r + dr, c + dc) in cells for r, c in pat):
                return True
    return False


# ----------------------------------------------------------------------
# ribbons


def ribbon_shape(top_content: int, steps: str) -> SkewShape:
    """Ribbon whose first cell has content ``top_content`` and whose next
    cells go right ('R') or down ('D').  Empty rows are padded underneath
    so the cell contents are exactly top_content, top_content+1, ..."""
    downs = steps.count("D")
    base = max(0, -top_content - downs)
    col = downs + base + top_content
    row = downs + base
    cells = [(row, col)]
    for s in steps:
        row, col = (row, col + 1) if s == "R" else (row - 1, col)
        cells.append((row, col))
    lo, hi = {}, {}
    for r, c in cells:
        lo[r] = min(lo.get(r, c), c)
        hi[r] = max(hi.get(r, c), c + 1)
    width = hi[base]
    outer = [width] * base + [hi[r] for r in range(base, downs + base + 1)]
    inner = [width] * base + [lo[r] for r in range(base, downs + base + 1)]
    return SkewShape(tuple(outer), tuple(inner))


def _column_rows(shape: SkewShape) -> list[list[int]]:
    return [sorted(rows) for rows in shape.columns()]


def tr_tuples(shape) -> list[SkewTuple]:
    """Every tuple of ribbons whose component i has a cell of content -j
    exactly when (j, i) is a cell of the shape."""
    shape = as_skew(shape)
    options = []
    for rows in _column_rows(shape):
        if not rows:
            options.append([SkewShape(())])
            continue
        top = -max(rows)
        h = len(rows)
        options.append([ribbon_shape(top, "".join(s)) for s in product("DR", repeat=h - 1)])
    return [SkewTuple(tuple(choice)) for choice in product(*options)]


def filling_to_tuple(shape, filling: dict[Cell, int]) -> TupleFilling:
    """Transfer a bijective filling of the shape to a standard filling of the
    matching ribbon tuple."""
    shape = as_skew(shape)
    ribbons, tabs = [], []
    for rows in _column_rows(shape):
        i = len(ribbons)
        if not rows:
            empty = SkewShape(())
            ribbons.append(empty)
            tabs.append(Tableau(empty, ()))
            continue
        vals = [filling[(j, i)] for j in sorted(rows, reverse=True)]
        steps = "".join("R" if b > a else "D" for a, b in zip(vals, vals[1:]))
        rib = ribbon_shape(-max(rows), steps)
        entries = {}
        ordered = sorted(rib.cells, key=content)
        for cell, v in zip(ordered, vals):
            entries[cell] = v
        ribbons.append(rib)
        tabs.append(Tableau.from_cells(rib, entries))
    return TupleFilling(SkewTuple(tuple(ribbons)), tuple(tabs))


def tuple_to_filling(t: TupleFilling) -> dict[Cell, int]:
    """Inverse of filling_to_tuple: entry at content -j of ribbon i goes to (j, i)."""
    out = {}
    for (i, cell), v in t.entries.items():
        out[(-content(cell), i)] = v
    return out


def iter_fillings(shape) -> Iterator[dict[Cell, int]]:
    """All bijective fillings of the shape by 1..n."""
    cells = as_skew(shape).cells
    for perm in permutations(range(1, len(cells) + 1)):
        yield dict(zip(cells, perm))


# ----------------------------------------------------------------------
# statistics on ribbon tuples


def _check_cell(nu: SkewTuple, x):
    i, cell = x
    if not (0 <= i < nu.k and cell in nu.shapes[i]):
        raise ValueError(f"cell {x} is not in the tuple")


def arm(x: tuple[int, Cell], nu: SkewTuple) -> int:
    """Number of later components with a cell of the same content as x."""
    _check_cell(nu, x)
    i, cell = x
    c = content(cell)
    return sum(1 for j in range(i + 1, nu.k) if any(content(y) == c for y in nu.shapes[j].cells))


def leg(x: tuple[int, Cell], nu: SkewTuple) -> int:
    """Number of cells of the same ribbon with smaller content."""
    _check_cell(nu, x)
    i, cell = x
    return sum(1 for y in nu.shapes[i].cells if content(y) < content(cell))


def des(nu: SkewTuple) -> list[tuple[int, Cell]]:
    """Cells with a cell of the same ribbon directly below them."""
    out = []
    for i, s in enumerate(nu.shapes):
        for r, c in s.cells:
            if (r - 1, c) in s:
                out.append((i, (r, c)))
    return out


def a_nu(nu: SkewTuple) -> int:
    return sum(arm(x, nu) for x in des(nu))


def maj(nu: SkewTuple) -> int:
    return sum(1 + leg(x, nu) for x in des(nu))


def mac_inv(t: TupleFilling) -> int:
    value = inv_k(t) - a_nu(t.tuple)
    if value < 0:
        raise RuntimeError(f"negative inversion statistic for {t.to_json()}")
    return value


@dataclass(frozen=True)
class FillingStats:
    word: tuple[int, ...]
    inv: int
    maj: int


def filling_stats(shape, filling: dict[Cell, int]) -> FillingStats:
    t = filling_to_tuple(shape, filling)
    return FillingStats(shifted_content_word(t), mac_inv(t), maj(t.tuple))


# ----------------------------------------------------------------------
# expansions


def macdonald_f_expansion(shape) -> FExpansion:
    """sum over all fillings of q^inv t^maj F_sigma."""
    shape = as_skew(shape)
    pairs = []
    for f in iter_fillings(shape):
        st = filling_stats(shape, f)
        pairs.append((signature(st.word), QTPoly.monomial(st.inv, st.maj)))
    return FExpansion.from_pairs(shape.size, pairs)


def macdonald_llt_form(shape) -> FExpansion:
    """sum over ribbon tuples nu of q^(-a(nu)) t^maj(nu) G_nu."""
    shape = as_skew(shape)
    out = FExpansion(shape.size)
    for nu in tr_tuples(shape):
        out = out + llt_f_expansion(nu).scale(QTPoly.monomial(-a_nu(nu), maj(nu)))
    return out


def forbidden_pattern(shape, mode: str = "direct"):
    patterns = DIRECT_FORBIDDEN if mode == "direct" else CONJUGATE_FORBIDDEN
    for p in patterns:
        if contains_subdiagram(shape, p):
            return p
    return None


def yamanouchi_mac_sum(shape) -> SchurExpansion:
    """sum over fillings whose reading word lies in SYam(la) of q^inv t^maj s_la."""
    shape = as_skew(shape)
    acc: dict = {}
    for f in iter_fillings(shape):
        st = filling_stats(shape, f)
        la = rsk_shape(st.word)
        if syam_member(st.word, la):
            acc[la] = acc.get(la, QTPoly()) + QTPoly.monomial(st.inv, st.maj)
    return SchurExpansion(shape.size, acc)


def macdonald_schur_expansion(shape, mode: str = "direct") -> SchurExpansion:
    """Schur expansion by the Yamanouchi sum.

    ``direct`` needs a shape avoiding (3,3) and (4); ``conjugate`` needs a
    shape avoiding (2,2,2) and (1,1,1,1) and works on the conjugate shape
    with q and t exchanged.  The result is checked against the F-expansion."""
    shape = as_skew(shape)
    if mode not in ("direct", "conjugate"):
        raise ValueError(f"unknown mode {mode!r}")
    bad = forbidden_pattern(shape, mode)
    if bad is not None:
        raise ShapeNotCovered(shape, bad)
    if mode == "direct":
        result = yamanouchi_mac_sum(shape)
    else:
        result = yamanouchi_mac_sum(shape.conjugate()).swap_qt()
    check = f_equal(result.to_f(), macdonald_f_expansion(shape))
    if not check:
        raise RuntimeError(f"Schur expansion of {shape} does not re-expand; first difference at F[{check.witness}]")
    return result
