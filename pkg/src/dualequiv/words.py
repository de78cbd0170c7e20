"""Permutation words: RSK, Knuth moves, dual equivalence moves and their twisted variants."""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache
from typing import Sequence

from .shapes import Partition, SkewShape, Tableau, Word, as_partition, superstandard

# Each move permutes the values i-1, i, i+1.  Patterns are the relative order in
# which they appear in the word: 0 = i-1, 1 = i, 2 = i+1.
_DUAL = {(1, 0, 2): (2, 0, 1), (2, 0, 1): (1, 0, 2), (0, 2, 1): (1, 2, 0), (1, 2, 0): (0, 2, 1)}
_TWISTED = {(1, 0, 2): (0, 2, 1), (0, 2, 1): (1, 0, 2), (1, 2, 0): (2, 0, 1), (2, 0, 1): (1, 2, 0)}


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def _check_perm(w: Sequence[int]) -> Word:
    w = tuple(w)
    if not is_permutation(w):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def inverse(w: Sequence[int]) -> Word:
    w = _check_perm(w)
    inv = [0] * len(w)
    for pos, v in enumerate(w, start=1):
        inv[v - 1] = pos
    return tuple(inv)


@lru_cache(maxsize=200_000)
def _rsk(w: Word) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            k = bisect_right(row, x)
            if k == len(row):
                row.append(x)
                q_rows[r].append(step)
                break
            row[k], x = x, row[k]
            r += 1
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def rsk(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row-insertion RSK: returns the insertion and recording tableaux (P, Q)."""
    p_rows, q_rows = _rsk(tuple(w))
    return Tableau.from_rows(p_rows), Tableau.from_rows(q_rows)


def p_tableau(w: Sequence[int]) -> Tableau:
    return Tableau.from_rows(_rsk(tuple(w))[0])


def q_tableau(w: Sequence[int]) -> Tableau:
    return Tableau.from_rows(_rsk(tuple(w))[1])


def rsk_shape(w: Sequence[int]) -> Partition:
    return tuple(len(r) for r in _rsk(tuple(w))[0])


def longest_increasing(w: Sequence[int]) -> int:
    """Patience sorting; independent of the RSK code path."""
    tails: list[int] = []
    for x in w:
        k = bisect_right(tails, x)
        if k == len(tails):
            tails.append(x)
        else:
            tails[k] = x
    return len(tails)


def syam_member(w: Sequence[int], la: Sequence[int]) -> bool:
    """True iff P(w) is the superstandard tableau U_la."""
    la = as_partition(la)
    if len(w) != sum(la):
        raise ValueError("word length and partition size differ")
    return _rsk(tuple(w))[0] == superstandard(la).rows


def knuth_move(w: Sequence[int], j: int) -> Word:
    """K_j: act on positions j-1, j, j+1 (1-based) by swapping the two extreme
    values unless the three entries are monotone."""
    w = tuple(w)
    n = len(w)
    if not 1 < j < n:
        raise ValueError(f"Knuth move index {j} out of range for length {n}")
    a, b, c = w[j - 2], w[j - 1], w[j]
    if a < b < c or a > b > c:
        return w
    lo, hi = min(a, b, c), max(a, b, c)
    swap = {lo: hi, hi: lo}
    return w[: j - 2] + tuple(swap.get(x, x) for x in (a, b, c)) + w[j + 1:]


def _positions(w: Word, i: int) -> list[int]:
    n = len(w)
    if not 1 < i < n:
        raise ValueError(f"move index {i} out of range for length {n}")
    pos = [0, 0, 0]
    for k, v in enumerate(w):
        if i - 1 <= v <= i + 1:
            pos[v - i + 1] = k
    return pos


def _apply(w: Word, i: int, table: dict) -> Word:
    pos = _positions(w, i)
    slots = sorted(pos)
    pattern = tuple(sorted(range(3), key=pos.__getitem__))
    new = table.get(pattern)
    if new is None:
        return w
    out = list(w)
    for slot, rel in zip(slots, new):
        out[slot] = i - 1 + rel
    return tuple(out)


def dual_move(w: Sequence[int], i: int) -> Word:
    """Elementary dual equivalence d_i."""
    return _apply(tuple(w), i, _DUAL)


def twisted_move(w: Sequence[int], i: int) -> Word:
    """Twisted dual equivalence d~_i used by LLT graphs."""
    return _apply(tuple(w), i, _TWISTED)


def check_tau(tau: Sequence[int]) -> tuple[int, ...]:
    tau = tuple(int(x) for x in tau)
    n = len(tau)
    if n == 0 or tau[-1] != n:
        raise ValueError(f"tau {tau} must end with its length")
    for idx in range(n - 1):
        i = idx + 1
        if not (i <= tau[idx] <= tau[idx + 1]):
            raise ValueError(f"tau {tau} violates i <= tau_i <= tau_(i+1) at i={i}")
    return tau


def first_last_positions(w: Sequence[int], i: int) -> tuple[int, int]:
    """1-based positions m(i), M(i) of the first and last of i-1, i, i+1 in w."""
    pos = _positions(tuple(w), i)
    return min(pos) + 1, max(pos) + 1


def d_tau_move(w: Sequence[int], i: int, tau: Sequence[int]) -> Word:
    """D_i^(tau): d_i when tau_{m(i)} < M(i), otherwise d~_i."""
    w = tuple(w)
    if len(tau) != len(w):
        raise ValueError("tau and word lengths differ")
    lo, hi = first_last_positions(w, i)
    if tau[lo - 1] < hi:
        return dual_move(w, i)
    return twisted_move(w, i)


def twisted_fires_nonadjacent(w: Sequence[int], i: int, tau: Sequence[int]) -> bool:
    """True when D_i^(tau) acts nontrivially through d~_i on non-adjacent positions."""
    w = tuple(w)
    lo, hi = first_last_positions(w, i)
    if tau[lo - 1] < hi:
        return False
    return twisted_move(w, i) != w and hi - lo != 2
