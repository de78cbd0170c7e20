"""Tuples of skew shapes, shifted contents, LLT graphs and LLT polynomials."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

from .graphs import SignedColoredGraph, component_sets, graph_from_moves
from .qsym import FExpansion, QTPoly, SchurExpansion, f_equal
from .shapes import Cell, SkewShape, Tableau, Word, content, enumerate_syt, signature
from .words import check_tau, d_tau_move, rsk_shape, syam_member, twisted_fires_nonadjacent


class DiameterTooLarge(ValueError):
    def __init__(self, diam: int):
        super().__init__(f"diameter {diam} exceeds 3")
        self.diam = diam


@dataclass(frozen=True)
class SkewTuple:
    shapes: tuple[SkewShape, ...]

    def __post_init__(self):
        shapes = tuple(s if isinstance(s, SkewShape) else SkewShape.from_json(s) for s in self.shapes)
        if not shapes:
            raise ValueError("a tuple needs at least one shape")
        object.__setattr__(self, "shapes", shapes)

    @classmethod
    def of(cls, *parts) -> "SkewTuple":
        """``SkewTuple.of((2,), (1,), ((3, 1), (1,)))``: partitions or (outer, inner) pairs."""
        shapes = []
        for p in parts:
            if isinstance(p, SkewShape):
                shapes.append(p)
            elif p and isinstance(p[0], (tuple, list)):
                shapes.append(SkewShape(tuple(p[0]), tuple(p[1])))
            else:
                shapes.append(SkewShape(tuple(p)))
        return cls(tuple(shapes))

    @property
    def k(self) -> int:
        return len(self.shapes)

    @property
    def size(self) -> int:
        return sum(s.size for s in self.shapes)

    @cached_property
    def cells(self) -> tuple[tuple[int, Cell], ...]:
        """(component, cell) pairs ordered as in the shifted content reading."""
        k = self.k
        out = [(i, cell) for i, s in enumerate(self.shapes) for cell in s.cells]
        out.sort(key=lambda ic: (k * content(ic[1]) + ic[0], ic[1][0]))
        return tuple(out)

    def shifted_content(self, i: int, cell: Cell) -> int:
        return self.k * content(cell) + i

    @cached_property
    def shifted_contents(self) -> tuple[int, ...]:
        """Weakly increasing sequence of shifted contents, one per cell."""
        return tuple(self.shifted_content(i, c) for i, c in self.cells)

    def to_json(self) -> list:
        return [[list(s.outer), list(s.inner)] for s in self.shapes]

    @classmethod
    def from_json(cls, data) -> "SkewTuple":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(SkewShape.from_json(s) for s in data))

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.shapes) + ")"


@dataclass(frozen=True)
class TupleFilling:
    tuple: SkewTuple
    tableaux: tuple[Tableau, ...]

    @cached_property
    def entries(self) -> dict[tuple[int, Cell], int]:
        return {(i, cell): v for i, t in enumerate(self.tableaux) for cell, v in t.items()}

    def value(self, i: int, cell: Cell) -> int:
        return self.entries[(i, cell)]

    def is_valid(self) -> bool:
        vals = sorted(self.entries.values())
        return vals == list(range(1, len(vals) + 1)) and all(t.is_standard() for t in self.tableaux)

    def to_json(self) -> dict:
        return {"tuple": self.tuple.to_json(), "rows": [[list(r) for r in t.rows] for t in self.tableaux]}


def enumerate_tuple_fillings(nu: SkewTuple) -> list[TupleFilling]:
    """All standard fillings, ordered by shifted content word."""
    sizes = [s.size for s in nu.shapes]
    per_shape = [enumerate_syt(s) for s in nu.shapes]
    n = sum(sizes)
    out = []

    def splits(values: tuple[int, ...], idx: int) -> Iterator[list[tuple[int, ...]]]:
        if idx == len(sizes) - 1:
            yield [values]
            return
        for chosen in combinations(values, sizes[idx]):
            rest = tuple(v for v in values if v not in chosen)
            for tail in splits(rest, idx + 1):
                yield [chosen] + tail

    for parts in splits(tuple(range(1, n + 1)), 0):
        options = [[t.relabel(lambda v, p=p: p[v - 1]) for t in per_shape[i]] for i, p in enumerate(parts)]

        def product(idx, acc):
            if idx == len(options):
                yield tuple(acc)
                return
            for t in options[idx]:
                acc.append(t)
                yield from product(idx + 1, acc)
                acc.pop()

        for tabs in product(0, []):
            out.append(TupleFilling(nu, tabs))
    out.sort(key=shifted_content_word)
    return out


def shifted_content_word(t: TupleFilling) -> Word:
    return tuple(t.value(i, c) for i, c in t.tuple.cells)


def inv_k(t: TupleFilling) -> int:
    """Pairs (x, y) with 0 < c~(y) - c~(x) < k and T(x) > T(y)."""
    nu = t.tuple
    k = nu.k
    items = [(nu.shifted_content(i, c), t.value(i, c)) for i, c in nu.cells]
    total = 0
    for a, (cx, vx) in enumerate(items):
        for cy, vy in items[a + 1:]:
            if 0 < cy - cx < k and vx > vy:
                total += 1
    return total


def tau_from_contents(contents: Sequence[int], k: int) -> tuple[int, ...]:
    """tau_i = max{j : c_j - c_i <= k} for a weakly increasing sequence."""
    n = len(contents)
    out = []
    j = 0
    for i in range(n):
        j = max(j, i)
        while j + 1 < n and contents[j + 1] - contents[i] <= k:
            j += 1
        out.append(j + 1)
    return tuple(out)


def diam_from_contents(contents: Sequence[int], k: int) -> int:
    """Largest set of distinct values fitting in a window of width k."""
    vals = sorted(set(contents))
    best, lo = 0, 0
    for hi in range(len(vals)):
        while vals[hi] - vals[lo] > k:
            lo += 1
        best = max(best, hi - lo + 1)
    return best


def tau_of(nu: SkewTuple) -> tuple[int, ...]:
    return check_tau(tau_from_contents(nu.shifted_contents, nu.k))


def diam(nu: SkewTuple) -> int:
    if nu.size == 0:
        raise ValueError("empty tuple")
    return diam_from_contents(nu.shifted_contents, nu.k)


def build_llt_graph(nu: SkewTuple, check_two_row: bool = True) -> SignedColoredGraph:
    """Vertices are shifted content words; edges are the nontrivial orbits of
    D_i^(tau) with tau = tau(nu).  ``meta['inv']`` records inv_k per vertex."""
    fillings = enumerate_tuple_fillings(nu)
    words = [shifted_content_word(t) for t in fillings]
    n = nu.size
    tau = tau_of(nu)
    moves = {i: (lambda w, i=i: d_tau_move(w, i, tau)) for i in range(2, n)}
    g = graph_from_moves(words, [signature(w) for w in words], moves, 1, n, n)
    g.meta.update(tau=tau, tuple=nu, inv=tuple(inv_k(t) for t in fillings), fillings=tuple(fillings))
    if check_two_row and diam(nu) <= 3:
        for w in words:
            if len(rsk_shape(w)) < 3:
                for i in range(2, n):
                    if twisted_fires_nonadjacent(w, i, tau):
                        raise RuntimeError(f"twisted move {i} acts on non-adjacent letters of {w}")
    return g


def llt_f_expansion(nu: SkewTuple) -> FExpansion:
    """sum over fillings of q^inv_k F_sigma."""
    fills = enumerate_tuple_fillings(nu)
    return FExpansion.from_pairs(
        nu.size, ((signature(shifted_content_word(t)), QTPoly.monomial(q=inv_k(t))) for t in fills)
    )


def yamanouchi_sum(nu: SkewTuple) -> SchurExpansion:
    """sum over fillings whose word is in SYam(la) of q^inv_k s_la (no diameter check)."""
    acc: dict = {}
    for t in enumerate_tuple_fillings(nu):
        w = shifted_content_word(t)
        la = rsk_shape(w)
        if syam_member(w, la):
            acc[la] = acc.get(la, QTPoly()) + QTPoly.monomial(q=inv_k(t))
    return SchurExpansion(nu.size, acc)


def llt_schur_expansion(nu: SkewTuple) -> SchurExpansion:
    d = diam(nu)
    if d > 3:
        raise DiameterTooLarge(d)
    result = yamanouchi_sum(nu)
    check = f_equal(result.to_f(), llt_f_expansion(nu))
    if not check:
        raise RuntimeError(f"Schur expansion of {nu} does not re-expand; first difference at F[{check.witness}]")
    return result


def component_syam_counts(g: SignedColoredGraph) -> list[int]:
    """Number of standardized Yamanouchi words in each component."""
    out = []
    for vs in component_sets(g):
        out.append(sum(1 for v in vs if syam_member(g.labels[v], rsk_shape(g.labels[v]))))
    return out


def straight_tuples(k: int, max_size: int, min_size: int = 1) -> list[SkewTuple]:
    """All k-tuples of (possibly empty) straight shapes with total size in range,
    each component nonempty."""
    from .shapes import partitions

    out = []

    def rec(idx, remaining, acc):
        if idx == k:
            if sum(map(sum, acc)) >= min_size:
                out.append(SkewTuple.of(*acc))
            return
        for size in range(1, remaining - (k - idx - 1) + 1):
            for la in partitions(size):
                acc.append(la)
                rec(idx + 1, remaining - size, acc)
                acc.pop()

    rec(0, max_size, [])
    return out
