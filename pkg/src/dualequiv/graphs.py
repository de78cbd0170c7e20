"""Signed colored graphs: builders, restrictions, components, isomorphism, morphisms.

A graph stores vertices as dense integer ids ``0..V-1``.  Payloads (words or
tableaux) live in ``labels`` and signatures in ``sigs``; algorithms only touch
the integer ids.  Edge colors range over ``m+1..n-1`` and signatures have
length ``N-1``.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cache, cached_property
from itertools import permutations
from typing import Callable, Hashable, Iterable, Sequence

from .shapes import (
    Partition,
    SkewShape,
    Tableau,
    as_partition,
    enumerate_syt,
    format_word,
    partitions,
    row_reading_word,
    signature,
    tableau_signature,
)
from .words import _rsk, check_tau, d_tau_move, dual_move, p_tableau, rsk_shape, syam_member


class ClosureError(RuntimeError):
    """A move sent a vertex outside the vertex set, or was not an involution."""


@dataclass(frozen=True, eq=False)
class SignedColoredGraph:
    labels: tuple
    sigs: tuple[str, ...]
    edges: dict[int, tuple[tuple[int, int], ...]]
    m: int = 1
    n: int = 1
    N: int = 1
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        V = len(self.labels)
        if len(self.sigs) != V:
            raise ValueError("one signature per vertex required")
        if not (1 <= self.m <= max(self.n, 1)) or self.N < self.n:
            raise ValueError(f"bad type parameters m={self.m} n={self.n} N={self.N}")
        for s in self.sigs:
            if len(s) != self.N - 1:
                raise ValueError(f"signature {s!r} should have length {self.N - 1}")
        clean = {}
        for color, pairs in self.edges.items():
            if not self.m < color < self.n:
                raise ValueError(f"edge color {color} outside {self.m + 1}..{self.n - 1}")
            norm = set()
            for a, b in pairs:
                if a == b or not (0 <= a < V and 0 <= b < V):
                    raise ValueError(f"bad edge {(a, b)}")
                norm.add((a, b) if a < b else (b, a))
            if norm:
                clean[color] = tuple(sorted(norm))
        object.__setattr__(self, "edges", dict(sorted(clean.items())))

    # -- basic accessors -------------------------------------------------
    def __len__(self) -> int:
        return len(self.labels)

    @property
    def vertices(self) -> range:
        return range(len(self.labels))

    @property
    def colors(self) -> range:
        return range(self.m + 1, self.n)

    @property
    def type_params(self) -> tuple[int, int, int]:
        return self.m, self.n, self.N

    @cached_property
    def adj(self) -> dict[int, dict[int, list[int]]]:
        """color -> vertex -> list of neighbors."""
        out: dict[int, dict[int, list[int]]] = {}
        for color, pairs in self.edges.items():
            d: dict[int, list[int]] = defaultdict(list)
            for a, b in pairs:
                d[a].append(b)
                d[b].append(a)
            out[color] = dict(d)
        return out

    @cached_property
    def index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def neighbors(self, v: int, color: int) -> list[int]:
        return self.adj.get(color, {}).get(v, [])

    def partner(self, v: int, color: int):
        """The unique ``color``-neighbor of v, or None (assumes a matching)."""
        nb = self.neighbors(v, color)
        return nb[0] if nb else None

    def sig_at(self, v: int, i: int) -> str | None:
        """sigma(v)_i with 1-based i, or None when undefined."""
        if 1 <= i <= self.N - 1:
            return self.sigs[v][i - 1]
        return None

    def admits(self, v: int, i: int) -> bool:
        """v admits an i-neighbor: sigma_{i-1} = -sigma_i."""
        a, b = self.sig_at(v, i - 1), self.sig_at(v, i)
        return a is not None and b is not None and a != b

    def num_edges(self) -> int:
        return sum(len(p) for p in self.edges.values())

    def with_edges(self, edges, m=None, n=None, N=None, sigs=None) -> "SignedColoredGraph":
        return SignedColoredGraph(
            self.labels,
            self.sigs if sigs is None else tuple(sigs),
            edges,
            self.m if m is None else m,
            self.n if n is None else n,
            self.N if N is None else N,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedColoredGraph):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.sigs == other.sigs
            and self.edges == other.edges
            and self.type_params == other.type_params
        )

    __hash__ = None

    # -- export ----------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "type": {"m": self.m, "n": self.n, "N": self.N},
            "vertices": [label_text(lab) for lab in self.labels],
            "signatures": list(self.sigs),
            "edges": {str(c): [list(p) for p in pairs] for c, pairs in self.edges.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "SignedColoredGraph":
        t = data["type"]
        edges = {int(c): [tuple(p) for p in pairs] for c, pairs in data["edges"].items()}
        return cls(tuple(data["vertices"]), tuple(data["signatures"]), edges, t["m"], t["n"], t["N"])

    def to_dot(self, name: str = "G") -> str:
        merged: dict[tuple[int, int], list[int]] = defaultdict(list)
        for color, pairs in self.edges.items():
            for p in pairs:
                merged[p].append(color)
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            text = f"{label_text(self.labels[v])}\\n{self.sigs[v]}"
            lines.append(f'  v{v} [label="{text}"];')
        for (a, b), cols in sorted(merged.items()):
            lines.append(f'  v{a} -- v{b} [label="{",".join(map(str, cols))}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def label_text(label) -> str:
    """Display a vertex payload: words as one-line strings, tableaux as rows
    from top to bottom separated by '/' (inner cells shown as '.')."""
    if isinstance(label, Tableau):
        big = label.size > 9
        parts = []
        for r in reversed(range(len(label.rows))):
            cells = ["."] * label.shape.inner_part(r) + [str(v) for v in label.rows[r]]
            parts.append(("," if big else "").join(cells))
        return "/".join(parts)
    if isinstance(label, tuple) and all(isinstance(x, int) for x in label):
        return format_word(label)
    return str(label)


# ----------------------------------------------------------------------
# builders


def graph_from_moves(
    labels: Sequence[Hashable],
    sigs: Sequence[str],
    moves: dict[int, Callable],
    m: int,
    n: int,
    N: int,
) -> SignedColoredGraph:
    """Edges are the nontrivial orbits of the given involutions.

    Raises ClosureError when a move leaves the vertex set or is not an involution.
    """
    index = {lab: i for i, lab in enumerate(labels)}
    edges: dict[int, list[tuple[int, int]]] = {}
    for color, move in moves.items():
        pairs = []
        for v, lab in enumerate(labels):
            img = move(lab)
            if img == lab:
                continue
            u = index.get(img)
            if u is None:
                raise ClosureError(f"move {color} sends {label_text(lab)} outside the vertex set")
            if move(img) != lab:
                raise ClosureError(f"move {color} is not an involution at {label_text(lab)}")
            if v < u:
                pairs.append((v, u))
        edges[color] = pairs
    return SignedColoredGraph(tuple(labels), tuple(sigs), edges, m, n, N)


def build_skew_deg(shape: SkewShape | Sequence[int]) -> SignedColoredGraph:
    """The standard dual equivalence graph on SYT(shape)."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(shape)
    tabs = enumerate_syt(shape)
    n = shape.size
    words = [row_reading_word(t) for t in tabs]
    by_word = dict(zip(words, tabs))
    moves = {i: (lambda t, i=i: by_word.get(dual_move(row_reading_word(t), i), None)) for i in range(2, n)}
    g = graph_from_moves(tabs, [tableau_signature(t) for t in tabs], moves, 1, n, n)
    g.meta["shape"] = shape
    return g


def build_standard_deg(la: Sequence[int]) -> SignedColoredGraph:
    return build_skew_deg(SkewShape(as_partition(la)))


@cache
def standard_graph(la: Partition) -> SignedColoredGraph:
    """Cached G_la; callers must not mutate the result."""
    return build_standard_deg(la)


def build_word_graph(words: Iterable[Sequence[int]], move: Callable[[tuple, int], tuple], n: int | None = None):
    """Graph on a set of permutations with inverse-descent signatures and
    edges from ``move(w, i)``."""
    words = sorted(tuple(w) for w in words)
    if n is None:
        n = len(words[0]) if words else 1
    moves = {i: (lambda w, i=i: move(w, i)) for i in range(2, n)}
    return graph_from_moves(words, [signature(w) for w in words], moves, 1, n, n)


def build_gn(n: int) -> SignedColoredGraph:
    if n < 1:
        raise ValueError("n must be positive")
    return build_word_graph(permutations(range(1, n + 1)), dual_move, n)


def build_gn_tau(tau: Sequence[int]) -> SignedColoredGraph:
    tau = check_tau(tau)
    n = len(tau)
    g = build_word_graph(permutations(range(1, n + 1)), lambda w, i: d_tau_move(w, i, tau), n)
    g.meta["tau"] = tau
    return g


def disjoint_union(graphs: Sequence[SignedColoredGraph]) -> SignedColoredGraph:
    if not graphs:
        raise ValueError("empty union")
    m, n, N = graphs[0].type_params
    if any(g.type_params != (m, n, N) for g in graphs):
        raise ValueError("union of graphs of different types")
    labels, sigs, edges, offset = [], [], defaultdict(list), 0
    for g in graphs:
        labels.extend(g.labels)
        sigs.extend(g.sigs)
        for c, pairs in g.edges.items():
            edges[c].extend((a + offset, b + offset) for a, b in pairs)
        offset += len(g)
    return SignedColoredGraph(tuple(labels), tuple(sigs), dict(edges), m, n, N)


def standard_union(n: int, shapes: Iterable[Partition] | None = None) -> SignedColoredGraph:
    """Disjoint union of the standard graphs G_la (tableau labels carry la)."""
    shapes = partitions(n) if shapes is None else sorted(set(shapes), reverse=True)
    return disjoint_union([build_standard_deg(la) for la in shapes])


# ----------------------------------------------------------------------
# restrictions


def restrict(g: SignedColoredGraph, n2: int, N2: int) -> SignedColoredGraph:
    """(n2, N2)-restriction: drop E_i for i >= n2 and keep the first N2-1 signs."""
    if not (g.m <= n2 <= g.n and n2 <= N2 <= g.N):
        raise ValueError(f"cannot restrict type {g.type_params} to ({n2},{N2})")
    edges = {c: p for c, p in g.edges.items() if c < n2}
    return g.with_edges(edges, n=n2, N=N2, sigs=[s[: N2 - 1] for s in g.sigs])


def upward_restrict(g: SignedColoredGraph, h: int = 1) -> SignedColoredGraph:
    """sigma'_i = sigma_{i+h}, E'_i = E_{i+h}."""
    if not 0 <= h < g.n:
        raise ValueError(f"shift {h} out of range for type {g.type_params}")
    edges = {c - h: p for c, p in g.edges.items() if c - h >= 2}
    return g.with_edges(edges, m=max(1, g.m - h), n=g.n - h, N=g.N - h, sigs=[s[h:] for s in g.sigs])


def downward_restrict(g: SignedColoredGraph) -> SignedColoredGraph:
    if g.n - 1 <= g.m:
        raise ValueError("no color left to drop")
    edges = {c: p for c, p in g.edges.items() if c < g.n - 1}
    return g.with_edges(edges, n=g.n - 1)


def color_reverse(g: SignedColoredGraph) -> SignedColoredGraph:
    """sigma'_{N-i} = sigma_i and E'_{N+1-i} = E_i."""
    N = g.N
    edges = {N + 1 - c: p for c, p in g.edges.items()}
    return g.with_edges(edges, m=N + 1 - g.n, n=N + 1 - g.m, sigs=[s[::-1] for s in g.sigs])


def select_colors(g: SignedColoredGraph, colors: Iterable[int]) -> dict[int, tuple]:
    keep = set(colors)
    return {c: p for c, p in g.edges.items() if c in keep}


# ----------------------------------------------------------------------
# components


def component_sets(g: SignedColoredGraph, colors: Iterable[int] | None = None) -> list[list[int]]:
    """Vertex sets of the connected components using only ``colors``
    (all colors by default), ordered by smallest vertex id."""
    parent = list(range(len(g)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cols = g.edges.keys() if colors is None else [c for c in colors if c in g.edges]
    for c in cols:
        for a, b in g.edges[c]:
            ra, rb = find(a), find(b)
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
    groups: dict[int, list[int]] = defaultdict(list)
    for v in g.vertices:
        groups[find(v)].append(v)
    return [groups[r] for r in sorted(groups)]


def induced(g: SignedColoredGraph, verts: Sequence[int], colors: Iterable[int] | None = None) -> SignedColoredGraph:
    verts = sorted(verts)
    pos = {v: k for k, v in enumerate(verts)}
    keep = None if colors is None else set(colors)
    edges = {}
    for c, pairs in g.edges.items():
        if keep is not None and c not in keep:
            continue
        edges[c] = [(pos[a], pos[b]) for a, b in pairs if a in pos and b in pos]
    return SignedColoredGraph(
        tuple(g.labels[v] for v in verts), tuple(g.sigs[v] for v in verts), edges, g.m, g.n, g.N
    )


def components(g: SignedColoredGraph) -> list[SignedColoredGraph]:
    return [induced(g, vs) for vs in component_sets(g)]


# ----------------------------------------------------------------------
# isomorphism


def _is_matching_graph(g: SignedColoredGraph) -> bool:
    return all(len(nb) == 1 for d in g.adj.values() for nb in d.values())


def _bfs_code(g: SignedColoredGraph, start: int, verts: set[int], colors: list[int], signed: bool, shift: int):
    """Encoding of the component of ``start`` visiting neighbors in color
    order.  For matching-colored graphs this is a complete invariant of the
    rooted graph."""
    order = [start]
    idx = {start: 0}
    k = 0
    while k < len(order):
        v = order[k]
        k += 1
        for c in colors:
            u = g.partner(v, c)
            if u is not None and u in verts and u not in idx:
                idx[u] = len(order)
                order.append(u)
    edges = []
    for c in colors:
        for v in order:
            u = g.partner(v, c)
            if u is not None and u in idx and idx[v] < idx[u]:
                edges.append((c - shift, idx[v], idx[u]))
    sig = tuple(g.sigs[v] for v in order) if signed else ()
    return (len(order), tuple(edges), sig), order


def canonical_form(g: SignedColoredGraph, verts: Sequence[int] | None = None, signed: bool = True, shift: int = 0):
    """Canonical encoding of a connected matching-colored (sub)graph."""
    vs = set(g.vertices if verts is None else verts)
    colors = sorted(g.edges)
    best = None
    for s in sorted(vs):
        code, _ = _bfs_code(g, s, vs, colors, signed, shift)
        if best is None or code < best:
            best = code
    return best


def _nx_graph(g: SignedColoredGraph, verts, signed: bool, shift: int):
    import networkx as nx

    h = nx.Graph()
    for v in verts:
        h.add_node(v, sig=g.sigs[v] if signed else "")
    vs = set(verts)
    for c, pairs in g.edges.items():
        for a, b in pairs:
            if a in vs and b in vs:
                cols = h.edges[a, b]["colors"] if h.has_edge(a, b) else frozenset()
                h.add_edge(a, b, colors=cols | {c - shift})
    return h


def _nx_iso(g, gv, h, hv, signed, shift_g, shift_h):
    from networkx.algorithms.isomorphism import GraphMatcher

    gm = GraphMatcher(
        _nx_graph(g, gv, signed, shift_g),
        _nx_graph(h, hv, signed, shift_h),
        node_match=lambda a, b: a["sig"] == b["sig"],
        edge_match=lambda a, b: a["colors"] == b["colors"],
    )
    if gm.is_isomorphic():
        return dict(gm.mapping)
    return None


def _propagate(g, gv, h, hv, g0, h0, signed, delta):
    """Try to extend g0 -> h0 to an isomorphism of connected components in
    matching-colored graphs (h color = g color + delta)."""
    phi = {g0: h0}
    stack = [g0]
    while stack:
        v = stack.pop()
        w = phi[v]
        if signed and g.sigs[v] != h.sigs[w]:
            return None
        for c in g.edges:
            u = g.partner(v, c)
            x = h.partner(w, c + delta)
            if (u is None) != (x is None):
                return None
            if u is None:
                continue
            if u in phi:
                if phi[u] != x:
                    return None
            else:
                phi[u] = x
                stack.append(u)
    if len(phi) != len(gv) or len(set(phi.values())) != len(hv):
        return None
    # color-degree check in reverse direction
    for c in h.edges:
        if c - delta not in g.edges and any(h.partner(w, c) is not None for w in hv):
            return None
    return phi


@dataclass
class Morphism:
    map: dict[int, int]

    def __call__(self, v: int) -> int:
        return self.map[v]


def _uniform_shift(g, h, allow_color_shift):
    if not allow_color_shift or not g.edges or not h.edges:
        return 0
    return min(h.edges) - min(g.edges)


def isomorphic(g: SignedColoredGraph, h: SignedColoredGraph, allow_color_shift: bool = False, signed: bool = True):
    """Return an isomorphism witness g -> h, or None.

    With ``allow_color_shift`` the colors of h may be those of g plus a fixed
    integer.  Signatures are compared when ``signed`` is true."""
    if len(g) != len(h) or g.num_edges() != h.num_edges():
        return None
    if signed and Counter(g.sigs) != Counter(h.sigs):
        return None
    delta = _uniform_shift(g, h, allow_color_shift)
    if sorted(c + delta for c in g.edges) != sorted(h.edges):
        return None
    gcomps, hcomps = component_sets(g), component_sets(h)
    if len(gcomps) != len(hcomps):
        return None
    matching = _is_matching_graph(g) and _is_matching_graph(h)
    used = [False] * len(hcomps)
    result: dict[int, int] = {}
    for gv in gcomps:
        found = None
        for j, hv in enumerate(hcomps):
            if used[j] or len(hv) != len(gv):
                continue
            if matching:
                g0 = gv[0]
                for h0 in hv:
                    phi = _propagate(g, gv, h, hv, g0, h0, signed, delta)
                    if phi is not None:
                        found = (j, phi)
                        break
            else:
                phi = _nx_iso(g, gv, h, hv, signed, 0, -delta)
                if phi is not None:
                    found = (j, phi)
            if found:
                break
        if found is None:
            return None
        used[found[0]] = True
        result.update(found[1])
    return Morphism(result)


def check_morphism(phi: Morphism | dict, g: SignedColoredGraph, h: SignedColoredGraph, signed: bool = True) -> bool:
    """Pointwise check that phi preserves signatures and i-edges."""
    mp = phi.map if isinstance(phi, Morphism) else phi
    if set(mp) != set(g.vertices) or any(not 0 <= w < len(h) for w in mp.values()):
        return False
    if signed:
        for v, w in mp.items():
            if g.sigs[v] != h.sigs[w]:
                return False
    for c, pairs in g.edges.items():
        hset = set(h.edges.get(c, ()))
        for a, b in pairs:
            x, y = mp[a], mp[b]
            if (min(x, y), max(x, y)) not in hset:
                return False
    return True


class HypothesisViolation(ValueError):
    pass


def induced_P_morphism(g: SignedColoredGraph) -> tuple[Morphism, SignedColoredGraph]:
    """Map each word vertex w to P(w) inside the union of standard graphs.

    Checks the hypotheses first: word vertices with inverse-descent
    signatures, Axiom 1, and that each i-edge {v, w} has w Knuth equivalent
    to d_i(v)."""
    n = g.n
    for v, w in enumerate(g.labels):
        if not (isinstance(w, tuple) and len(w) == n):
            raise HypothesisViolation(f"vertex {v} is not a word of length {n}")
        if g.sigs[v] != signature(w):
            raise HypothesisViolation(f"signature of {format_word(w)} is not given by inverse descents")
    for c in g.colors:
        for v in g.vertices:
            nb = g.neighbors(v, c)
            if len(nb) > 1 or (len(nb) == 1) != g.admits(v, c):
                raise HypothesisViolation(f"Axiom 1 fails at vertex {label_text(g.labels[v])}, color {c}")
    for c, pairs in g.edges.items():
        for a, b in pairs:
            for x, y in ((a, b), (b, a)):
                if _rsk(dual_move(g.labels[x], c))[0] != _rsk(g.labels[y])[0]:
                    raise HypothesisViolation(
                        f"edge {label_text(g.labels[a])}-{label_text(g.labels[b])} of color {c} "
                        "is not Knuth equivalent to the dual move"
                    )
    shapes = {rsk_shape(w) for w in g.labels}
    target = standard_union(n, shapes)
    mp = {v: target.index[p_tableau(w)] for v, w in enumerate(g.labels)}
    return Morphism(mp), target


def syam_schur_expansion(words: Iterable[Sequence[int]]) -> dict[Partition, int]:
    """la -> |V ∩ SYam(la)|; only nonzero entries are returned."""
    counts: Counter = Counter()
    for w in words:
        w = tuple(w)
        la = rsk_shape(w)
        if syam_member(w, la):
            counts[la] += 1
    return dict(sorted(counts.items(), reverse=True))


def dumps(g: SignedColoredGraph) -> str:
    return json.dumps(g.to_json(), indent=1)
