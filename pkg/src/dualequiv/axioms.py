"""Decide the dual equivalence axioms for signed colored graphs.

Axioms 1, 2, 3 and 5 are direct quantifier sweeps.  Axioms 4 and 4+ compare
components of consecutive-color windows against a catalog generated from
standard graphs.  Axiom 6 is checked through quotient completeness.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cache
from importlib import resources

from .graphs import (
    SignedColoredGraph,
    _bfs_code,
    _is_matching_graph,
    component_sets,
    induced,
    label_text,
    standard_graph,
)
from .shapes import Partition, count_syt, enumerate_syt, partitions, superstandard, tableau_signature
from .words import rsk_shape


class RouteDisagreement(RuntimeError):
    """The two characterizations of dual equivalence graphs disagree."""


class PreconditionError(ValueError):
    pass


class ClassificationError(ValueError):
    pass


@dataclass
class AxiomReport:
    axiom: str
    ok: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "ok": self.ok, "witness": self.witness}

    def describe(self) -> str:
        if self.ok:
            return f"axiom {self.axiom}: ok"
        return f"axiom {self.axiom}: FAIL {json.dumps(self.witness, sort_keys=True)}"


def _fail(axiom, g, **witness):
    for key in ("vertex", "other"):
        if key in witness and isinstance(witness[key], int):
            witness[key] = label_text(g.labels[witness[key]])
    if "edge" in witness:
        a, b = witness["edge"]
        witness["edge"] = [label_text(g.labels[a]), label_text(g.labels[b])]
    return AxiomReport(axiom, False, witness)


# ----------------------------------------------------------------------
# Axioms 1, 2, 3, 5


def check_axiom1(g: SignedColoredGraph) -> AxiomReport:
    for c in g.colors:
        for v in g.vertices:
            nb = g.neighbors(v, c)
            if len(nb) > 1:
                return _fail("1", g, vertex=v, color=c, reason="more than one edge of this color")
            if bool(nb) != g.admits(v, c):
                reason = "admits a neighbor but has no edge" if not nb else "has an edge without admitting one"
                return _fail("1", g, vertex=v, color=c, reason=reason)
    return AxiomReport("1", True)


def check_axiom2(g: SignedColoredGraph) -> AxiomReport:
    for i, pairs in g.edges.items():
        for a, b in pairs:
            sa, sb = g.sigs[a], g.sigs[b]
            for h in range(1, g.N):
                same = sa[h - 1] == sb[h - 1]
                if h in (i - 1, i) and same:
                    return _fail("2", g, edge=(a, b), color=i, position=h, reason="sign should flip")
                if (h < i - 2 or h > i + 1) and not same:
                    return _fail("2", g, edge=(a, b), color=i, position=h, reason="sign should agree")
    return AxiomReport("2", True)


def _axiom3_admission(g: SignedColoredGraph):
    for i, pairs in g.edges.items():
        for a, b in pairs:
            if i - 2 >= 1 and not (g.admits(a, i - 1) or g.admits(b, i - 1)):
                return (a, b), i, i - 1
            if i + 1 <= g.N - 1 and not (g.admits(a, i + 1) or g.admits(b, i + 1)):
                return (a, b), i, i + 1
    return None


def _axiom3_signature(g: SignedColoredGraph):
    for i, pairs in g.edges.items():
        for a, b in pairs:
            sa, sb = g.sigs[a], g.sigs[b]
            if i > 2 and sa[i - 3] != sb[i - 3] and sa[i - 3] == sa[i - 2]:
                return (a, b), i, i - 1
            if i + 1 <= g.N - 1 and sa[i] != sb[i] and sa[i] == sa[i - 1]:
                return (a, b), i, i + 1
    return None


def check_axiom3(g: SignedColoredGraph) -> AxiomReport:
    """Neighbor-admission form.  When Axiom 2 holds the signature form is
    evaluated as well and must reach the same verdict."""
    bad = _axiom3_admission(g)
    if check_axiom2(g):
        alt = _axiom3_signature(g)
        if (bad is None) != (alt is None):
            raise RuntimeError(f"Axiom 3 forms disagree: {bad} vs {alt}")
    if bad is None:
        return AxiomReport("3", True)
    edge, i, j = bad
    return _fail("3", g, edge=edge, color=i, missing_neighbor_color=j)


def check_axiom5(g: SignedColoredGraph) -> AxiomReport:
    cols = sorted(g.edges)
    for w in g.vertices:
        for i in cols:
            for v in g.neighbors(w, i):
                for j in cols:
                    if abs(i - j) <= 2:
                        continue
                    for x in g.neighbors(w, j):
                        if not set(g.neighbors(v, j)) & set(g.neighbors(x, i)):
                            return _fail("5", g, vertex=w, colors=[i, j], reason="edges do not commute")
    return AxiomReport("5", True)


# ----------------------------------------------------------------------
# local catalog for Axioms 4 and 4+


def window_code(g: SignedColoredGraph, verts, start: int):
    """Unsigned canonical code of a window component, colors shifted so the
    window starts at 0.  None when some color is not a matching."""
    vs = set(verts)
    colors = sorted(g.edges)
    for c in colors:
        adj = g.adj[c]
        for v in vs:
            if len(adj.get(v, ())) > 1:
                return None
    best = None
    for s in sorted(vs):
        code, _ = _bfs_code(g, s, vs, colors, False, start)
        if best is None or code < best:
            best = code
    return best


@dataclass(frozen=True)
class LocalCatalog:
    """Edge-colored component types on ``width`` consecutive colors."""

    width: int
    codes: frozenset

    def __contains__(self, code) -> bool:
        return code in self.codes

    def __len__(self) -> int:
        return len(self.codes)


def _window_codes(g: SignedColoredGraph, start: int, width: int) -> set:
    cols = range(start, start + width)
    sub = g.with_edges({c: p for c, p in g.edges.items() if c in cols})
    return {window_code(sub, vs, start) for vs in component_sets(sub)}


@cache
def local_catalog(width: int, size: int | None = None) -> LocalCatalog:
    """Components of the standard graphs G_la, la |- width+2 (or ``size``),
    restricted to ``width`` consecutive colors."""
    if width < 1:
        raise ValueError("width must be positive")
    n = width + 2 if size is None else size
    codes: set = set()
    for la in partitions(n):
        g = standard_graph(la)
        for start in range(2, n - width + 1):
            codes |= _window_codes(g, start, width)
    return LocalCatalog(width, frozenset(codes))


def _check_windows(g: SignedColoredGraph, axiom: str, max_width: int) -> AxiomReport:
    m, n = g.m, g.n
    for i in range(m + 2, n):
        start = max(m + 1, i - max_width + 1)
        width = i - start + 1
        cat = local_catalog(width)
        cols = range(start, i + 1)
        sub = g.with_edges({c: p for c, p in g.edges.items() if c in cols})
        for vs in component_sets(sub):
            code = window_code(sub, vs, start)
            if code is None or code not in cat:
                return _fail(
                    axiom,
                    g,
                    vertex=vs[0],
                    colors=list(cols),
                    component_size=len(vs),
                    component_edges=sum(1 for c in cols for a, b in g.edges.get(c, ()) if a in set(vs)),
                )
    return AxiomReport(axiom, True)


def check_axiom4(g: SignedColoredGraph) -> AxiomReport:
    return _check_windows(g, "4", 3)


def check_axiom4plus(g: SignedColoredGraph) -> AxiomReport:
    return _check_windows(g, "4+", 4)


# ----------------------------------------------------------------------
# Axiom 6


def check_axiom6(g: SignedColoredGraph) -> AxiomReport:
    """For each i, inside every component of E_{m+1..i} the classes of
    E_{m+1..i-1}-components must be pairwise joined by an E_i edge."""
    for i in range(g.m + 1, g.n):
        big = component_sets(g, range(g.m + 1, i + 1))
        small = component_sets(g, range(g.m + 1, i))
        cls = {}
        for k, vs in enumerate(small):
            for v in vs:
                cls[v] = k
        joined = set()
        for a, b in g.edges.get(i, ()):
            ca, cb = cls[a], cls[b]
            if ca != cb:
                joined.add((min(ca, cb), max(ca, cb)))
        for vs in big:
            classes = sorted({cls[v] for v in vs})
            for x in range(len(classes)):
                for y in range(x + 1, len(classes)):
                    if (classes[x], classes[y]) not in joined:
                        return _fail(
                            "6",
                            g,
                            vertex=small[classes[x]][0],
                            other=small[classes[y]][0],
                            color=i,
                            reason="classes not joined by a single edge",
                        )
    return AxiomReport("6", True)


# ----------------------------------------------------------------------
# the obstruction family


@dataclass
class FDetection:
    found: bool
    window: list[int] | None = None
    vertices: list[str] = field(default_factory=list)
    copies: int = 0

    def __bool__(self) -> bool:
        return self.found

    def to_json(self) -> dict:
        return {"found": self.found, "window": self.window, "copies": self.copies, "vertices": self.vertices}


@cache
def _staircase():
    """G_(3,2,1) and the codes of its three (5,6)-component types."""
    g = standard_graph((3, 2, 1))
    low = g.with_edges({c: p for c, p in g.edges.items() if c < 5})
    codes = {window_code(low, vs, 2) for vs in component_sets(low)}
    return g, frozenset(codes)


def covering_map(g: SignedColoredGraph, verts, h: SignedColoredGraph, delta: int = 0):
    """A covering morphism of edge-colored graphs from the component ``verts``
    of g onto the connected matching graph h, with h-color = g-color - delta.
    Found by propagation from the first vertex; returns a dict or None."""
    vs = sorted(verts)
    vset = set(vs)
    gcols = sorted(g.edges)
    for target in h.vertices:
        phi = {vs[0]: target}
        stack = [vs[0]]
        ok = True
        while stack and ok:
            v = stack.pop()
            w = phi[v]
            for c in set(gcols) | {c + delta for c in h.edges}:
                u = g.partner(v, c) if c in g.edges else None
                if u is not None and u not in vset:
                    u = None
                x = h.partner(w, c - delta)
                if (u is None) != (x is None):
                    ok = False
                    break
                if u is None:
                    continue
                if u in phi:
                    if phi[u] != x:
                        ok = False
                        break
                else:
                    phi[u] = x
                    stack.append(u)
        if ok and len(phi) == len(vs):
            return phi
    return None


def recognize_f_member(g: SignedColoredGraph, verts, top: int) -> int:
    """Number of copies m >= 2 if the component ``verts`` of the 4-color
    window ending at ``top`` is a member of the loop family, else 0."""
    base, types = _staircase()
    vs = sorted(verts)
    vset = set(vs)
    if len(vs) % len(base) or len(vs) < 2 * len(base):
        return 0
    # every member has at least two distinct neighbors at each vertex
    for v in vs:
        if len({u for c in g.edges for u in g.neighbors(v, c) if u in vset}) < 2:
            return 0
    start = top - 3
    low = g.with_edges({c: p for c, p in g.edges.items() if start <= c < top})
    classes = [[vs[k] for k in cl] for cl in component_sets(induced(low, vs))]
    cls_of = {}
    for k, cl in enumerate(classes):
        if window_code(low, cl, start) not in types:
            return 0
        for v in cl:
            cls_of[v] = k
    copies, rem = divmod(len(classes), 3)
    if rem or copies < 2:
        return 0
    quotient = defaultdict(set)
    for a, b in g.edges.get(top, ()):
        if a in vset and b in vset and cls_of[a] != cls_of[b]:
            quotient[cls_of[a]].add(cls_of[b])
            quotient[cls_of[b]].add(cls_of[a])
    if len(quotient) != len(classes) or any(len(nb) != 2 for nb in quotient.values()):
        return 0
    # a single cycle through all classes
    seen, prev, cur = {0}, None, 0
    while True:
        nxt = [x for x in quotient[cur] if x != prev]
        if not nxt:
            return 0
        prev, cur = cur, nxt[0]
        if cur == 0:
            break
        if cur in seen:
            return 0
        seen.add(cur)
    if len(seen) != len(classes):
        return 0
    sub = g.with_edges({c: p for c, p in g.edges.items() if start <= c <= top})
    if covering_map(sub, vs, base, top - 5) is None:
        return 0
    return copies


def detect_f_family(g: SignedColoredGraph) -> FDetection:
    """Scan every 4-consecutive-color window for a component in the loop
    family.  Requires Axioms 1-5."""
    for check in (check_axiom1, check_axiom2, check_axiom3, check_axiom4, check_axiom5):
        rep = check(g)
        if not rep:
            raise PreconditionError(f"detect_f_family needs Axioms 1-5: {rep.describe()}")
    for top in range(g.m + 4, g.n):
        cols = range(top - 3, top + 1)
        sub = g.with_edges({c: p for c, p in g.edges.items() if c in cols})
        for vs in component_sets(sub):
            copies = recognize_f_member(sub, vs, top)
            if copies:
                return FDetection(True, list(cols), [label_text(g.labels[v]) for v in vs], copies)
    return FDetection(False)


# ----------------------------------------------------------------------
# combined checks


CHECKS = {
    "1": check_axiom1,
    "2": check_axiom2,
    "3": check_axiom3,
    "4": check_axiom4,
    "4+": check_axiom4plus,
    "5": check_axiom5,
    "6": check_axiom6,
}


def axiom_reports(g: SignedColoredGraph, which=("1", "2", "3", "4", "5", "6", "4+")) -> dict[str, AxiomReport]:
    return {name: CHECKS[name](g) for name in which}


def is_deg(g: SignedColoredGraph, reports: dict | None = None) -> bool:
    """Route A: Axioms 1-6.  Route B: Axioms 1, 2, 3, 4+, 5.  They must agree."""
    r = reports if reports is not None else axiom_reports(g)
    common = r["1"].ok and r["2"].ok and r["3"].ok and r["5"].ok
    route_a = common and r["4"].ok and r["6"].ok
    route_b = common and r["4+"].ok
    if route_a != route_b:
        raise RouteDisagreement(f"axioms 1-6 give {route_a}, axioms 1,2,3,4+,5 give {route_b}")
    return route_a


@cache
def _standard_sig_counter(la: Partition) -> Counter:
    return Counter(tableau_signature(t) for t in enumerate_syt(la))


def classify_component(c: SignedColoredGraph) -> Partition:
    """The unique la with c isomorphic to G_la (c connected, a DEG of type (n, n)).

    Candidates are filtered by size and signature multiset, then an explicit
    isomorphism is built by anchoring at the vertex with the signature of
    U_la.  For word vertices the answer is cross-checked against RSK."""
    n = c.n
    if c.m != 1:
        raise ClassificationError("expected a graph with colors starting at 2")
    if len(component_sets(c)) != 1:
        raise ClassificationError("graph is not connected")
    sigs = Counter(s[: n - 1] for s in c.sigs)
    for la in partitions(n):
        if count_syt(la) != len(c) or _standard_sig_counter(la) != sigs:
            continue
        target = standard_graph(la)
        anchor_sig = tableau_signature(superstandard(la))
        g0 = [v for v in c.vertices if c.sigs[v][: n - 1] == anchor_sig]
        h0 = target.index[superstandard(la)]
        if len(g0) != 1:
            break
        phi = _anchored_iso(c, target, g0[0], h0)
        if phi is None:
            break
        if isinstance(c.labels[0], tuple):
            shapes = {rsk_shape(w) for w in c.labels}
            if shapes != {la}:
                raise ClassificationError(f"RSK shapes {shapes} disagree with {la}")
        return la
    raise ClassificationError("component is not isomorphic to any standard graph")


def _anchored_iso(c, target, g0, h0):
    phi = {g0: h0}
    stack = [g0]
    n = c.n
    while stack:
        v = stack.pop()
        w = phi[v]
        if c.sigs[v][: n - 1] != target.sigs[w]:
            return None
        for col in range(2, n):
            u, x = c.partner(v, col), target.partner(w, col)
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
    if len(phi) != len(c) or len(set(phi.values())) != len(c):
        return None
    return phi


def classify_graph(g: SignedColoredGraph) -> Counter:
    """Multiset of shapes over the components of a DEG of type (n, n)."""
    out: Counter = Counter()
    for vs in component_sets(g):
        out[classify_component(induced(g, vs))] += 1
    return out


def load_fixture(name: str = "smallest_f.json") -> SignedColoredGraph:
    data = json.loads(resources.files("dualequiv").joinpath("data").joinpath(name).read_text())
    return SignedColoredGraph.from_json(data)
