"""Expansions in the fundamental quasisymmetric basis with (q, t) coefficients."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Mapping

from .shapes import Partition, SkewShape, as_partition, enumerate_syt, partitions, superstandard, tableau_signature


class QTPoly:
    """Laurent polynomial in q and t with integer coefficients.

    Stored as ``{(q_exp, t_exp): coeff}`` without zero entries."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if c:
                clean[(int(a), int(b))] = int(c)
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, q: int = 0, t: int = 0, c: int = 1) -> "QTPoly":
        return cls({(q, t): c})

    @classmethod
    def parse_terms(cls, items: Iterable[dict]) -> "QTPoly":
        out: dict = defaultdict(int)
        for it in items:
            out[(it.get("q", 0), it.get("t", 0))] += it["c"]
        return cls(out)

    def __add__(self, other: "QTPoly") -> "QTPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return QTPoly(out)

    def __neg__(self) -> "QTPoly":
        return QTPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "QTPoly") -> "QTPoly":
        return self + (-other)

    def __mul__(self, other) -> "QTPoly":
        if isinstance(other, int):
            return QTPoly({k: c * other for k, c in self.terms.items()})
        out: dict = defaultdict(int)
        for (a, b), c in self.terms.items():
            for (x, y), d in other.terms.items():
                out[(a + x, b + y)] += c * d
        return QTPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QTPoly.monomial(c=other)
        return isinstance(other, QTPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, q: int = 0, t: int = 0) -> int:
        return self.terms.get((q, t), 0)

    def swap(self) -> "QTPoly":
        """Exchange the roles of q and t."""
        return QTPoly({(b, a): c for (a, b), c in self.terms.items()})

    def at_one(self) -> int:
        return sum(self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def to_json(self) -> list[dict]:
        return [{"q": a, "t": b, "c": c} for (a, b), c in self.terms.items()]

    def __repr__(self) -> str:
        return f"QTPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.terms.items():
            mono = "".join(
                s for s in (
                    "" if a == 0 else ("q" if a == 1 else f"q^{a}"),
                    "" if b == 0 else ("t" if b == 1 else f"t^{b}"),
                )
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ONE = QTPoly.monomial()


def _check_sig(sig: str, n: int) -> str:
    if len(sig) != max(n - 1, 0) or set(sig) - {"+", "-"}:
        raise ValueError(f"signature {sig!r} does not have length {n - 1}")
    return sig


class FExpansion:
    """sum over signatures sigma of coeff(sigma) * F_sigma, all of degree n."""

    def __init__(self, n: int, terms: Mapping[str, QTPoly] | None = None):
        self.n = n
        clean = {}
        for sig, poly in (terms or {}).items():
            _check_sig(sig, n)
            if poly:
                clean[sig] = poly
        self.terms: dict[str, QTPoly] = dict(sorted(clean.items()))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[str, QTPoly]]) -> "FExpansion":
        acc: dict[str, QTPoly] = {}
        for sig, poly in pairs:
            acc[sig] = acc.get(sig, QTPoly()) + poly
        return cls(n, acc)

    def __add__(self, other: "FExpansion") -> "FExpansion":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return FExpansion.from_pairs(self.n, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "FExpansion") -> "FExpansion":
        return self + other.scale(QTPoly.monomial(c=-1))

    def scale(self, poly: QTPoly) -> "FExpansion":
        return FExpansion(self.n, {s: p * poly for s, p in self.terms.items()})

    def swap_qt(self) -> "FExpansion":
        return FExpansion(self.n, {s: p.swap() for s, p in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, FExpansion) and self.n == other.n and self.terms == other.terms

    def __getitem__(self, sig: str) -> QTPoly:
        return self.terms.get(sig, QTPoly())

    def monomials(self) -> list[tuple[int, int]]:
        return sorted({k for p in self.terms.values() for k in p.terms})

    def to_json(self) -> dict:
        return {"n": self.n, "terms": {s: p.to_json() for s, p in self.terms.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "FExpansion":
        return cls(data["n"], {s: QTPoly.parse_terms(v) for s, v in data["terms"].items()})

    def __repr__(self) -> str:
        return " + ".join(f"({p})F[{s}]" for s, p in self.terms.items()) or "0"


class SchurExpansion:
    """sum over partitions la of coeff(la) * s_la."""

    def __init__(self, n: int, terms: Mapping[Partition, QTPoly] | None = None):
        self.n = n
        clean = {}
        for la, poly in (terms or {}).items():
            la = as_partition(la)
            if sum(la) != n:
                raise ValueError(f"{la} is not a partition of {n}")
            if poly:
                clean[la] = poly
        self.terms: dict[Partition, QTPoly] = dict(sorted(clean.items(), reverse=True))

    def to_f(self) -> FExpansion:
        out = FExpansion(self.n)
        for la, poly in self.terms.items():
            out = out + schur_to_f(la).scale(poly)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SchurExpansion) and self.n == other.n and self.terms == other.terms

    def __getitem__(self, la) -> QTPoly:
        return self.terms.get(as_partition(la), QTPoly())

    def swap_qt(self) -> "SchurExpansion":
        return SchurExpansion(self.n, {la: p.swap() for la, p in self.terms.items()})

    def is_positive(self) -> bool:
        return all(p.is_nonnegative() for p in self.terms.values())

    def to_json(self) -> dict:
        return {"n": self.n, "terms": [{"lambda": list(la), "coeff": p.to_json()} for la, p in self.terms.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "SchurExpansion":
        return cls(data["n"], {tuple(t["lambda"]): QTPoly.parse_terms(t["coeff"]) for t in data["terms"]})

    def __repr__(self) -> str:
        return " + ".join(f"({p})s{list(la)}" for la, p in self.terms.items()) or "0"


@cache
def _schur_sigs(shape: SkewShape) -> tuple[tuple[str, int], ...]:
    counts: dict[str, int] = defaultdict(int)
    for t in enumerate_syt(shape):
        counts[tableau_signature(t)] += 1
    return tuple(sorted(counts.items()))


def schur_to_f(shape) -> FExpansion:
    """s_shape as the sum of F_{sigma(T)} over standard tableaux T."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(as_partition(shape))
    return FExpansion(shape.size, {s: QTPoly.monomial(c=c) for s, c in _schur_sigs(shape)})


def sig_order(sig: str) -> str:
    """Sort key placing '-' before '+'."""
    return sig.replace("-", "0").replace("+", "1")


@dataclass
class Comparison:
    equal: bool
    witness: str | None = None
    left: QTPoly | None = None
    right: QTPoly | None = None

    def __bool__(self) -> bool:
        return self.equal


def f_equal(a: FExpansion, b: FExpansion) -> Comparison:
    """Coefficientwise equality; the witness is the first differing signature."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    for sig in sorted(set(a.terms) | set(b.terms), key=sig_order):
        if a[sig] != b[sig]:
            return Comparison(False, sig, a[sig], b[sig])
    return Comparison(True)


class NotSchurPositive(ValueError):
    def __init__(self, message: str, residual: FExpansion | None = None, solution: SchurExpansion | None = None):
        super().__init__(message)
        self.residual = residual
        self.solution = solution


@cache
def _basis(n: int):
    """Rows: all signatures occurring in some s_la; columns: partitions of n."""
    lams = partitions(n)
    sigs = sorted({s for la in lams for s, _ in _schur_sigs(SkewShape(la))})
    col = {la: dict(_schur_sigs(SkewShape(la))) for la in lams}
    matrix = [[col[la].get(s, 0) for la in lams] for s in sigs]
    return lams, sigs, matrix


def _eliminate(matrix: list[list[Fraction]], ncols: int):
    """In-place reduced row echelon form on the first ncols columns; returns pivot columns."""
    pivots = []
    r = 0
    rows = len(matrix)
    for c in range(ncols):
        p = next((i for i in range(r, rows) if matrix[i][c] != 0), None)
        if p is None:
            continue
        matrix[r], matrix[p] = matrix[p], matrix[r]
        inv = 1 / matrix[r][c]
        matrix[r] = [x * inv for x in matrix[r]]
        for i in range(rows):
            if i != r and matrix[i][c] != 0:
                f = matrix[i][c]
                matrix[i] = [x - f * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def schur_basis_rank(n: int) -> int:
    lams, sigs, matrix = _basis(n)
    m = [[Fraction(x) for x in row] for row in matrix]
    return len(_eliminate(m, len(lams)))


def _solve(a: FExpansion) -> tuple[dict[Partition, QTPoly], bool]:
    n = a.n
    lams, sigs, matrix = _basis(n)
    extra = sorted(set(a.terms) - set(sigs))
    monos = a.monomials()
    rows = [[Fraction(x) for x in matrix[k]] + [Fraction(a[s].coeff(*mo)) for mo in monos] for k, s in enumerate(sigs)]
    pivots = _eliminate(rows, len(lams))
    consistent = not extra and all(
        all(x == 0 for x in row[len(lams):]) for row in rows[len(pivots):]
    )
    sol: dict[Partition, dict] = defaultdict(dict)
    integral = True
    for r, c in enumerate(pivots):
        for j, mo in enumerate(monos):
            val = rows[r][len(lams) + j]
            if val.denominator != 1:
                integral = False
            if val:
                sol[lams[c]][mo] = int(val) if val.denominator == 1 else val
    return {la: QTPoly(d) for la, d in sol.items()} if integral else sol, consistent and integral


def _peel(a: FExpansion) -> dict[Partition, QTPoly]:
    residual = a
    out = {}
    for la in partitions(a.n):
        key = tableau_signature(superstandard(la))
        c = residual[key]
        if c:
            out[la] = c
            residual = residual - schur_to_f(la).scale(c)
    return out


def extract_schur(a: FExpansion, method: str = "solve") -> SchurExpansion:
    """Write ``a`` as a combination of Schur functions.

    ``solve`` runs exact Gaussian elimination over the rationals; ``peel``
    subtracts Schur functions in decreasing lexicographic order using the
    coefficient of F at the superstandard signature.  Either way the result
    is re-expanded and compared with ``a``.  Raises NotSchurPositive when no
    integral solution exists or some coefficient is negative."""
    if a.n == 0:
        raise ValueError("degree 0 expansion")
    if method == "solve":
        sol, ok = _solve(a)
        if not ok:
            raise NotSchurPositive("not in the integral span of Schur functions", residual=a)
    elif method == "peel":
        sol = _peel(a)
    else:
        raise ValueError(f"unknown method {method!r}")
    result = SchurExpansion(a.n, sol)
    check = f_equal(result.to_f(), a)
    if not check:
        raise NotSchurPositive(
            f"re-expansion differs at F[{check.witness}]", residual=a - result.to_f(), solution=result
        )
    if not result.is_positive():
        raise NotSchurPositive("negative Schur coefficient", solution=result)
    return result
