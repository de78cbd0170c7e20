"""Verification campaigns.

A campaign is a list of independent instances (one per shape, tuple or tau
word) and a check run on each of them.  Instances are JSON values; results
are reduced in sorted instance order so reports do not depend on the number
of workers.  Every failure carries the instance it came from, which is all
that is needed to replay it.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import permutations, product

from .axioms import (
    RouteDisagreement,
    axiom_reports,
    classify_graph,
    detect_f_family,
    is_deg,
    load_fixture,
)
from .graphs import (
    build_gn_tau,
    build_skew_deg,
    check_morphism,
    component_sets,
    induced,
    induced_P_morphism,
    label_text,
    syam_schur_expansion,
)
from .llt import (
    SkewTuple,
    build_llt_graph,
    component_syam_counts,
    diam,
    diam_from_contents,
    llt_f_expansion,
    llt_schur_expansion,
    straight_tuples,
    tau_from_contents,
    yamanouchi_sum,
)
from .macdonald import macdonald_f_expansion, macdonald_schur_expansion
from .qsym import extract_schur, f_equal
from .shapes import (
    SkewShape,
    content_reading_word,
    contains,
    count_syt,
    partitions,
    row_reading_word,
)
from .words import check_tau, rsk_shape

MAX_N = 8


class CampaignError(ValueError):
    pass


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


# ----------------------------------------------------------------------
# corpora


def trim_skew_shapes(n: int) -> list[SkewShape]:
    """Skew shapes with n cells and no empty row or column.

    Deleting an empty row or column changes neither the tableaux nor their
    reading words, so these represent every skew shape with n cells."""
    out = []
    for total in range(n, n * (n + 1) // 2 + 1):
        for la in partitions(total):
            if la[0] > n or len(la) > n:
                continue
            for rho in partitions(total - n) if total > n else [()]:
                if not contains(la, rho):
                    continue
                if any(la[r] == (rho[r] if r < len(rho) else 0) for r in range(len(la))):
                    continue
                shape = SkewShape(la, rho)
                if all(shape.columns()):
                    out.append(shape)
    return out


def tau_words(n: int, reach: int | None = None) -> list[tuple[int, ...]]:
    """All valid tau words of length n; with ``reach`` only those with tau_i <= i + reach."""
    out = []

    def rec(acc):
        i = len(acc) + 1
        if i == n + 1:
            out.append(tuple(acc))
            return
        lo = max(i, acc[-1] if acc else 1)
        hi = n if reach is None else min(n, i + reach)
        if i == n:
            lo = hi = n
        for v in range(lo, hi + 1):
            rec(acc + [v])

    rec([])
    return out


def content_sequences(n: int, kmax: int = 7):
    """Pairs (k, weakly increasing sequence from 0 with steps at most k + 1)."""
    for k in range(1, kmax + 1):
        for steps in product(range(k + 2), repeat=n - 1):
            seq = [0]
            for d in steps:
                seq.append(seq[-1] + d)
            yield k, tuple(seq)


def _order_convex(cells, upto: int | None = None) -> bool:
    """Order-convexity of a cell set.  With ``upto``, only cells of content at
    most ``upto`` are required, so a partial placement can still be completed
    by cells of larger content."""
    s = set(cells)
    for r1, c1 in s:
        for r2, c2 in s:
            if r1 <= r2 and c1 <= c2:
                for r in range(r1, r2 + 1):
                    for c in range(c1, c2 + 1):
                        if (r, c) not in s and (upto is None or c - r <= upto):
                            return False
    return True


@lru_cache(maxsize=None)
def _placements(mults: tuple[tuple[int, int], ...]) -> tuple[frozenset, ...]:
    """Ways to place one component with the given (content, multiplicity) data.

    Cells of equal content stack along a diagonal; the diagonals are shifted
    against each other and kept when the cell set is order-convex, which is
    exactly when it is a skew shape.  Each placement is returned as its set
    of adjacencies ((c, j), (c', j')), read 'the j-th cell of content c lies
    directly left of or below the j'-th cell of content c''."""
    found = set()

    def rec(idx, offsets):
        cells = [(a + j, c + a + j) for (c, m), a in zip(mults[:idx], offsets) for j in range(m)]
        done = idx == len(mults)
        if idx and not _order_convex(cells, None if done else mults[idx - 1][0]):
            return
        if done:
            s = set(cells)
            rank = {}
            for c, _ in mults:
                for j, cell in enumerate(sorted(x for x in s if x[1] - x[0] == c)):
                    rank[cell] = (c, j)
            found.add(
                frozenset(
                    (rank[x], rank[y])
                    for x in s
                    for y in ((x[0], x[1] + 1), (x[0] + 1, x[1]))
                    if y in s
                )
            )
            return
        if not offsets:
            rec(1, [0])
            return
        span = sum(m for _, m in mults) + 2
        for d in range(-span, span + 1):
            rec(idx + 1, offsets + [offsets[-1] + d])

    rec(0, [])
    return tuple(sorted(found, key=sorted))


def realizations(k: int, seq) -> list[tuple[tuple[int, int], ...]]:
    """Constraint sets of all tuples of skew shapes with these shifted contents.

    A constraint (p, q) says the letter in position p of the shifted content
    word is smaller than the letter in position q.  Steps larger than k cut
    the sequence into blocks that can be realized independently."""
    block = [0]
    for a, b in zip(seq, seq[1:]):
        block.append(block[-1] + (b - a > k))
    groups: dict = {}
    for p, v in enumerate(seq):
        groups.setdefault((block[p], v % k), {}).setdefault(v // k, []).append(p)
    options = []
    for key in sorted(groups):
        g = groups[key]
        mults = tuple((c, len(ps)) for c, ps in sorted(g.items()))
        options.append(
            [frozenset((g[c1][j1], g[c2][j2]) for (c1, j1), (c2, j2) in adj) for adj in _placements(mults)]
        )
    out = set()
    for choice in product(*options):
        out.add(tuple(sorted(frozenset().union(*choice))))
    return sorted(out)


@lru_cache(maxsize=None)
def tau_constraints(n: int, kmax: int = 7) -> dict:
    """tau -> (number of (k, sequence) pairs of diameter <= 3, sorted constraint sets)."""
    acc: dict = {}
    for k, seq in content_sequences(n, kmax):
        if diam_from_contents(seq, k) > 3:
            continue
        tau = tau_from_contents(seq, k)
        hits, cons = acc.setdefault(tau, [0, set()])
        acc[tau][0] += 1
        cons.update(realizations(k, seq))
    return {tau: (hits, tuple(sorted(cons))) for tau, (hits, cons) in sorted(acc.items())}


def linear_extensions(n: int, constraints) -> set[tuple[int, ...]]:
    return {w for w in permutations(range(1, n + 1)) if all(w[p] < w[q] for p, q in constraints)}


def canonical_tuples(n2: int = 7, n3: int = 6) -> list[SkewTuple]:
    """Straight 2-tuples up to size n2 and straight 3-tuples of diameter <= 3 up to size n3."""
    out = list(straight_tuples(2, n2, 2))
    out += [nu for nu in straight_tuples(3, n3, 3) if diam(nu) <= 3]
    return out


NAMED_TUPLES = (
    SkewTuple.of((2, 1), (1,)),
    SkewTuple.of((2,), (1,), (1,)),
    SkewTuple.of((1,), (1,), (1,), (1,)),
    SkewTuple.of((2,), (2,), (1,), (1,)),
    SkewTuple.of(((3, 1), (1,)), (2,)),
    SkewTuple.of(((2, 2), (1,)), (1,), (1,)),
)


# ----------------------------------------------------------------------
# instance checks: each returns {"ok": bool, "counts": {...}, "failures": [...]}


def _result(counts=None, failures=None) -> dict:
    failures = failures or []
    return {"ok": not failures, "counts": dict(counts or {}), "failures": failures}


def _failed_reports(reports) -> list[dict]:
    return [r.to_json() for r in reports.values() if not r]


def check_standard_shape(inst: dict) -> dict:
    shape = SkewShape.from_json(inst)
    g = build_skew_deg(shape)
    failures = []
    reports = axiom_reports(g)
    bad = _failed_reports(reports)
    if bad:
        failures.append({"reason": "axiom failure", "reports": bad})
    try:
        is_deg(g, reports)
    except RouteDisagreement as exc:
        failures.append({"reason": "route disagreement", "detail": str(exc)})
    found = classify_graph(g)
    by_rows = syam_schur_expansion(row_reading_word(t) for t in g.labels)
    by_contents = syam_schur_expansion(content_reading_word(t) for t in g.labels)
    if dict(found) != by_rows or by_rows != by_contents:
        failures.append(
            {
                "reason": "classification differs from Yamanouchi count",
                "classified": {",".join(map(str, la)): c for la, c in sorted(found.items())},
                "yamanouchi": {",".join(map(str, la)): c for la, c in sorted(by_rows.items())},
            }
        )
    counts = {"graphs": 1, "vertices": len(g), "components": sum(found.values())}
    return _result(counts, failures)


def check_tuple_graph(nu: SkewTuple) -> tuple[dict, list]:
    """Axioms 1, 2, 3, 5, constancy of inv on components, and the diameter criterion."""
    g = build_llt_graph(nu)
    failures = []
    reports = axiom_reports(g)
    for key in ("1", "2", "3", "5"):
        if not reports[key]:
            failures.append({"reason": f"axiom {key} fails", "report": reports[key].to_json()})
    inv = g.meta["inv"]
    for vs in component_sets(g):
        if len({inv[v] for v in vs}) != 1:
            failures.append({"reason": "inv not constant", "component": [label_text(g.labels[v]) for v in vs]})
            break
    d = diam(nu)
    try:
        deg = is_deg(g, reports)
    except RouteDisagreement as exc:
        failures.append({"reason": "route disagreement", "detail": str(exc)})
        deg = None
    if deg is not None and deg != (d <= 3):
        failures.append({"reason": "diameter criterion fails", "diam": d, "is_deg": deg})
    counts = {"tuples": 1, "vertices": len(g), "deg": int(bool(deg)), f"diam_{d}": 1}
    return counts, failures


def check_theorem_4plus(inst: dict) -> dict:
    kind = inst["kind"]
    if kind == "fixture":
        g = load_fixture()
        reports = axiom_reports(g)
        failures = []
        expected = {"1": True, "2": True, "3": True, "4": True, "5": True, "6": False, "4+": False}
        got = {k: bool(r) for k, r in reports.items()}
        if got != expected:
            failures.append({"reason": "fixture axiom pattern", "got": got})
        try:
            if is_deg(g, reports):
                failures.append({"reason": "fixture classified as a DEG"})
        except RouteDisagreement as exc:
            failures.append({"reason": "route disagreement", "detail": str(exc)})
        det = detect_f_family(g)
        if not det:
            failures.append({"reason": "fixture not detected as a member of the looped family"})
        return _result({"fixtures": 1, "vertices": len(g)}, failures)
    if kind == "tuple":
        counts, failures = check_tuple_graph(SkewTuple.from_json(inst["tuple"]))
        return _result(counts, failures)
    if kind == "tau":
        g = build_gn_tau(inst["tau"])
        failures = []
        deg = 0
        comps = component_sets(g)
        for vs in comps:
            c = induced(g, vs)
            try:
                deg += is_deg(c)
            except RouteDisagreement as exc:
                failures.append({"reason": "route disagreement", "detail": str(exc)})
        return _result({"tau_graphs": 1, "tau_components": len(comps), "tau_deg_components": deg}, failures)
    raise CampaignError(f"unknown instance kind {kind!r}")


def check_llt_tau(inst: dict) -> dict:
    tau = check_tau(inst["tau"])
    n = len(tau)
    hits, cons_sets = tau_constraints(n).get(tau, (0, ()))
    g = build_gn_tau(tau)
    comps = component_sets(g)
    where = {}
    for idx, vs in enumerate(comps):
        for v in vs:
            where[g.labels[v]] = idx
    failures = []
    in_scope = set()
    for cons in cons_sets:
        verts = linear_extensions(n, cons)
        touched = {where[w] for w in verts}
        size = sum(len(comps[i]) for i in touched)
        if size != len(verts):
            failures.append({"reason": "tuple vertices are not a union of components", "constraints": cons})
        in_scope |= touched
    for idx in sorted(in_scope):
        c = induced(g, comps[idx])
        try:
            if not is_deg(c):
                failures.append(
                    {
                        "reason": "in-scope component is not a DEG",
                        "component": [label_text(w) for w in c.labels],
                        "failed_axioms": _failed_reports(axiom_reports(c)),
                    }
                )
        except RouteDisagreement as exc:
            failures.append({"reason": "route disagreement", "detail": str(exc)})
    counts = {
        "taus": 1,
        "unrealized_taus": int(not cons_sets),
        "sequences": hits,
        "constraint_sets": len(cons_sets),
        "components": len(comps),
        "in_scope_components": len(in_scope),
    }
    return _result(counts, failures)


def check_gap_tau(inst: dict) -> dict:
    tau = check_tau(inst["tau"])
    g = build_gn_tau(tau)
    failures = []
    comps = component_sets(g)
    try:
        phi, target = induced_P_morphism(g)
        if not check_morphism(phi, g, target):
            failures.append({"reason": "P is not a morphism"})
    except ValueError as exc:
        failures.append({"reason": "P hypotheses fail", "detail": str(exc)})
        phi = None
    for vs in comps:
        c = induced(g, vs)
        try:
            ok = is_deg(c)
        except RouteDisagreement as exc:
            failures.append({"reason": "route disagreement", "detail": str(exc)})
            continue
        if not ok:
            failures.append({"reason": "component is not a DEG", "component": [label_text(w) for w in c.labels]})
        if phi is not None:
            image = {phi(v) for v in vs}
            la = rsk_shape(g.labels[vs[0]])
            if len(image) != len(vs) or len(vs) != count_syt(la):
                failures.append({"reason": "P is not an isomorphism on a component", "vertex": label_text(g.labels[vs[0]])})
    return _result({"taus": 1, "components": len(comps)}, failures)


def check_llt_expansion(inst: dict) -> dict:
    nu = SkewTuple.from_json(inst["tuple"])
    failures = []
    f = llt_f_expansion(nu)
    try:
        schur = llt_schur_expansion(nu)
    except RuntimeError as exc:
        return _result({"tuples": 1}, [{"reason": "Schur expansion does not re-expand", "detail": str(exc)}])
    cmp = f_equal(schur.to_f(), f)
    if not cmp:
        failures.append({"reason": "F-expansions differ", "witness": cmp.witness})
    if extract_schur(f) != schur:
        failures.append({"reason": "Yamanouchi sum differs from the extracted Schur expansion"})
    g = build_llt_graph(nu)
    syam = component_syam_counts(g)
    if any(c != 1 for c in syam):
        failures.append({"reason": "component without a unique Yamanouchi word", "counts": syam})
    inv = g.meta["inv"]
    if any(len({inv[v] for v in vs}) != 1 for vs in component_sets(g)):
        failures.append({"reason": "inv not constant on a component"})
    return _result({"tuples": 1, "fillings": len(g), "components": len(syam)}, failures)


def check_mac(inst: dict) -> dict:
    mu = tuple(inst["mu"])
    failures = []
    if inst["check"] == "direct":
        try:
            schur = macdonald_schur_expansion(mu, "direct")
        except RuntimeError as exc:
            return _result({"direct": 1}, [{"reason": "direct expansion does not re-expand", "detail": str(exc)}])
        if extract_schur(macdonald_f_expansion(mu)) != schur:
            failures.append({"reason": "Yamanouchi sum differs from the extracted Schur expansion"})
        return _result({"direct": 1}, failures)
    if inst["check"] == "conjugate":
        left = macdonald_f_expansion(mu).swap_qt()
        right = macdonald_f_expansion(SkewShape(mu).conjugate())
        cmp = f_equal(left, right)
        if not cmp:
            failures.append({"reason": "conjugate symmetry fails", "witness": cmp.witness})
        return _result({"conjugate": 1}, failures)
    raise CampaignError(f"unknown check {inst['check']!r}")


SHARPNESS = (
    {"family": "llt", "tuple": [[[2], []], [[1], []], [[1], []]], "la": [2, 2]},
    {"family": "llt", "tuple": [[[1], []], [[1], []], [[1], []], [[1], []]], "la": [2, 2]},
    {"family": "mac", "mu": [4], "la": [2, 2]},
    {"family": "mac", "mu": [3, 3], "la": [4, 2]},
)


def sharpness_values(inst: dict) -> tuple[int, int]:
    """(coefficient of q^2 s_la in the polynomial, same in the Yamanouchi sum)."""
    from .macdonald import yamanouchi_mac_sum

    la = tuple(inst["la"])
    if inst["family"] == "llt":
        nu = SkewTuple.from_json(inst["tuple"])
        full, yam = extract_schur(llt_f_expansion(nu)), yamanouchi_sum(nu)
    else:
        mu = tuple(inst["mu"])
        full, yam = extract_schur(macdonald_f_expansion(mu)), yamanouchi_mac_sum(mu)
    return full[la].coeff(2, 0), yam[la].coeff(2, 0)


def check_sharpness(inst: dict) -> dict:
    full, yam = sharpness_values(inst)
    failures = []
    if (full, yam) != (1, 0):
        failures.append({"reason": "sharpness values differ", "polynomial": full, "yamanouchi": yam})
    return _result({"equations": 1}, failures)


# ----------------------------------------------------------------------
# instance lists


def _axioms_std_instances(n: int) -> list:
    return [s.to_json() for m in range(1, n + 1) for s in trim_skew_shapes(m)]


def _theorem_4plus_instances(n: int) -> list:
    out = [{"kind": "fixture"}]
    tuples = {canonical_json(nu.to_json()): nu for nu in canonical_tuples(min(n, 6), min(n, 6)) + list(NAMED_TUPLES)}
    tuples.update({canonical_json(nu.to_json()): nu for nu in straight_tuples(3, min(n, 6), 3) if diam(nu) > 3})
    out += [{"kind": "tuple", "tuple": nu.to_json()} for nu in tuples.values() if nu.size <= n]
    out += [{"kind": "tau", "tau": list(t)} for t in tau_words(min(n, 5))]
    return out


def _llt_tau_instances(n: int) -> list:
    return [{"tau": list(t)} for t in tau_constraints(n)]


def _gap_tau_instances(n: int) -> list:
    return [{"tau": list(t)} for t in tau_words(n, reach=2)]


def _llt_expansion_instances(n: int) -> list:
    tuples = {canonical_json(nu.to_json()): nu for nu in canonical_tuples(n, n - 1)}
    for nu in NAMED_TUPLES:
        if nu.size <= n and diam(nu) <= 3:
            tuples[canonical_json(nu.to_json())] = nu
    return [{"tuple": nu.to_json()} for nu in tuples.values()]


def _mac_instances(n: int) -> list:
    out = []
    for m in range(1, n + 1):
        for mu in partitions(m):
            if mu[0] <= 3 and (len(mu) < 2 or mu[1] <= 2):
                out.append({"mu": list(mu), "check": "direct"})
    for m in range(1, min(n, 6) + 1):
        out += [{"mu": list(mu), "check": "conjugate"} for mu in partitions(m)]
    return out


CAMPAIGNS = {
    "axioms-std": (6, _axioms_std_instances, check_standard_shape),
    "theorem-4plus": (6, _theorem_4plus_instances, check_theorem_4plus),
    "llt-n5": (5, _llt_tau_instances, check_llt_tau),
    "llt-n6": (6, _llt_tau_instances, check_llt_tau),
    "gap-tau": (6, _gap_tau_instances, check_gap_tau),
    "llt-expansion": (7, _llt_expansion_instances, check_llt_expansion),
    "mac-expansion": (7, _mac_instances, check_mac),
    "sharpness": (6, lambda n: list(SHARPNESS), check_sharpness),
}


def _lookup(name: str):
    if name not in CAMPAIGNS:
        raise CampaignError(f"unknown campaign {name!r}; choose from {', '.join(CAMPAIGNS)}")
    return CAMPAIGNS[name]


def campaign_instances(name: str, n: int | None = None) -> list:
    default, make, _ = _lookup(name)
    return make(default if n is None else n)


def run_instance(name: str, inst) -> dict:
    return _lookup(name)[2](inst)


def _run_one(job):
    name, inst = job
    return run_instance(name, inst)


def _reduce(name: str, n: int, instances: list, results: list) -> dict:
    counts: Counter = Counter()
    failures = []
    passed = 0
    for inst, res in sorted(zip(instances, results), key=lambda ir: canonical_json(ir[0])):
        counts.update(res["counts"])
        if res["ok"]:
            passed += 1
        for f in res["failures"]:
            failures.append({"campaign": name, "n": n, "instance": inst, **f})
    return {
        "campaign": name,
        "n": n,
        "status": "pass" if not failures else "fail",
        "instances": len(instances),
        "passed": passed,
        "failed": len(instances) - passed,
        "counts": dict(sorted(counts.items())),
        "failures": failures,
    }


def run_campaign(name: str, n: int | None = None, jobs: int = 1, force: bool = False) -> dict:
    """Run every instance of a campaign and return a deterministic report."""
    default = _lookup(name)[0]
    n = default if n is None else n
    if n < 1:
        raise CampaignError("n must be positive")
    if n > MAX_N and not force:
        raise CampaignError(f"n = {n} is above {MAX_N}; pass force=True to run anyway")
    instances = campaign_instances(name, n)
    jobs_list = [(name, inst) for inst in instances]
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, jobs_list, chunksize=max(1, len(jobs_list) // (4 * jobs))))
    else:
        results = [_run_one(job) for job in jobs_list]
    return _reduce(name, n, instances, results)


def replay(witness: dict) -> dict:
    """Re-run the single instance a failure record points at."""
    name, n, inst = witness["campaign"], witness["n"], witness["instance"]
    return _reduce(name, n, [inst], [run_instance(name, inst)])


def render_text(report: dict) -> str:
    lines = [f"{report['campaign']} n={report['n']}: {report['status'].upper()} "
             f"({report['passed']}/{report['instances']} instances)"]
    for k, v in report["counts"].items():
        lines.append(f"  {k}: {v}")
    for f in report["failures"][:20]:
        lines.append("  FAIL " + canonical_json(f))
    if len(report["failures"]) > 20:
        lines.append(f"  ... {len(report['failures']) - 20} more failures")
    return "\n".join(lines)
