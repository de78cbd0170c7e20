"""The ``deg`` command line tool.

Exit codes: 0 on success, 1 when a computation or check fails, 2 on usage
errors.  JSON output is canonical (sorted keys) so it can be compared byte
for byte; nothing here is random, and ``--seedless`` is accepted only to
state that explicitly.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import campaigns
from .axioms import PreconditionError, RouteDisagreement, axiom_reports, detect_f_family, is_deg, load_fixture
from .graphs import (
    SignedColoredGraph,
    build_gn,
    build_gn_tau,
    build_skew_deg,
    component_sets,
)
from .llt import DiameterTooLarge, SkewTuple, build_llt_graph, diam, llt_f_expansion, llt_schur_expansion, tau_of
from .macdonald import ShapeNotCovered, macdonald_f_expansion, macdonald_schur_expansion
from .qsym import FExpansion, NotSchurPositive, extract_schur
from .shapes import SkewShape, as_partition, format_word, parse_word
from .words import rsk


class UsageError(Exception):
    pass


def _emit(args, data, text: str | None = None) -> None:
    if args.out == "json" or text is None:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(text)


def _parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {exc}") from None


def _parse_parts(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if text.startswith("["):
        parts = _parse_json(text, what)
    else:
        parts = [p for p in text.split(",") if p.strip()]
    try:
        return as_partition(int(p) for p in parts)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{what}: {exc}") from None


def _shape(args) -> SkewShape:
    outer = _parse_parts(args.shape, "--shape")
    inner = _parse_parts(args.inner, "--inner") if args.inner else ()
    try:
        return SkewShape(outer, inner)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _tuple(text: str) -> SkewTuple:
    data = _parse_json(text, "--tuple")
    try:
        return SkewTuple.from_json(data)
    except (TypeError, ValueError, KeyError, IndexError) as exc:
        raise UsageError(f"--tuple: {exc}") from None


# ----------------------------------------------------------------------
# commands


def cmd_rsk(args) -> int:
    try:
        w = parse_word(args.word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{args.word} is not a permutation of 1..{len(w)}")
        p, q = rsk(w)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = {
        "word": list(w),
        "shape": list(p.shape.outer),
        "P": [list(r) for r in p.rows],
        "Q": [list(r) for r in q.rows],
    }
    text = "\n".join(
        [
            f"word  {format_word(w)}",
            f"shape {tuple(p.shape.outer)}",
            "P     " + " / ".join(" ".join(map(str, r)) for r in reversed(p.rows)),
            "Q     " + " / ".join(" ".join(map(str, r)) for r in reversed(q.rows)),
        ]
    )
    _emit(args, data, text)
    return 0


def _select_graph(args) -> SignedColoredGraph:
    chosen = [x for x in (args.partition, args.shape, args.n, args.tau, args.file, args.fixture or None) if x]
    if len(chosen) != 1:
        raise UsageError("choose exactly one of --partition, --shape, --n, --tau, --file, --fixture")
    if args.partition:
        return build_skew_deg(SkewShape(_parse_parts(args.partition, "--partition")))
    if args.shape:
        return build_skew_deg(_shape(args))
    if args.n:
        if args.n > campaigns.MAX_N and not args.force:
            raise UsageError(f"n above {campaigns.MAX_N} needs --force")
        return build_gn(args.n)
    if args.tau:
        text = args.tau.strip()
        tau = _parse_json(text, "--tau") if text.startswith("[") else [int(c) for c in text]
        try:
            return build_gn_tau(tau)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.file:
        with open(args.file) as fh:
            return SignedColoredGraph.from_json(json.load(fh))
    return load_fixture()


def _check_data(g: SignedColoredGraph) -> tuple[dict, bool]:
    reports = axiom_reports(g)
    data = {"axioms": {k: r.to_json() for k, r in reports.items()}}
    try:
        deg = is_deg(g, reports)
        data["is_deg"] = deg
    except RouteDisagreement as exc:
        data["is_deg"] = None
        data["error"] = str(exc)
        deg = False
    try:
        data["looped_family"] = detect_f_family(g).to_json()
    except PreconditionError:
        data["looped_family"] = {"found": False, "skipped": "axioms 1-5 do not hold"}
    data["components"] = len(component_sets(g))
    return data, bool(deg)


def _check_text(data: dict) -> str:
    lines = []
    for key, rep in data["axioms"].items():
        status = "ok" if rep["ok"] else "FAIL " + json.dumps(rep["witness"], sort_keys=True)
        lines.append(f"axiom {key}: {status}")
    lines.append(f"components: {data['components']}")
    lines.append(f"dual equivalence graph: {data['is_deg']}")
    if data["looped_family"]["found"]:
        lines.append(f"looped family member found in colors {data['looped_family']['window']}")
    return "\n".join(lines)


def cmd_graph(args) -> int:
    g = _select_graph(args)
    if args.action == "dot" or args.dot:
        sys.stdout.write(g.to_dot())
        return 0
    if args.action == "build":
        data = g.to_json()
        m, n, N = g.type_params
        text = f"type ({m},{n},{N}), {len(g)} vertices, {g.num_edges} edges, {len(component_sets(g))} components"
        _emit(args, data, text)
        return 0
    data, ok = _check_data(g)
    _emit(args, data, _check_text(data))
    return 0 if ok else 1


def cmd_llt(args) -> int:
    nu = _tuple(args.tuple)
    if args.action == "expand":
        if args.f:
            f = llt_f_expansion(nu)
            _emit(args, f.to_json(), repr(f))
            return 0
        try:
            s = llt_schur_expansion(nu)
        except DiameterTooLarge as exc:
            print(f"error: {exc}; use --f for the quasisymmetric expansion", file=sys.stderr)
            return 1
        _emit(args, s.to_json(), repr(s))
        return 0
    g = build_llt_graph(nu)
    if args.action == "graph":
        if args.dot:
            sys.stdout.write(g.to_dot())
            return 0
        data = g.to_json()
        data["tau"] = list(g.meta["tau"])
        data["inv"] = list(g.meta["inv"])
        text = f"tau {''.join(map(str, g.meta['tau']))}, {len(g)} vertices, {len(component_sets(g))} components"
        _emit(args, data, text)
        return 0
    data, ok = _check_data(g)
    data["diam"] = diam(nu)
    data["tau"] = list(tau_of(nu))
    _emit(args, data, f"diam {data['diam']}\n" + _check_text(data))
    return 0 if ok else 1


def cmd_mac(args) -> int:
    shape = _shape(args)
    if args.f:
        f = macdonald_f_expansion(shape)
        _emit(args, f.to_json(), repr(f))
        return 0
    mode = "conjugate" if args.conjugate else "direct"
    try:
        s = macdonald_schur_expansion(shape, mode)
    except ShapeNotCovered as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, s.to_json(), repr(s))
    return 0


def cmd_schur(args) -> int:
    if bool(args.file) == bool(args.json):
        raise UsageError("give exactly one of --file and --json")
    if args.file:
        with open(args.file) as fh:
            data = json.load(fh)
    else:
        data = _parse_json(args.json, "--json")
    try:
        f = FExpansion.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"not an F-expansion: {exc}") from None
    try:
        s = extract_schur(f, args.method)
    except NotSchurPositive as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, s.to_json(), repr(s))
    return 0


def cmd_campaign(args) -> int:
    start = time.perf_counter()
    try:
        if args.replay:
            with open(args.replay) as fh:
                witness = json.load(fh)
            if "failures" in witness:
                if not witness["failures"]:
                    raise UsageError(f"{args.replay} records no failures to replay")
                witness = witness["failures"][0]
            report = campaigns.replay(witness)
        else:
            if not args.name:
                raise UsageError("campaign name required")
            report = campaigns.run_campaign(args.name, args.n, args.jobs, args.force)
    except campaigns.CampaignError as exc:
        raise UsageError(str(exc)) from None
    body = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(body)
    if args.out == "json":
        sys.stdout.write(body)
    else:
        print(campaigns.render_text(report))
    print(f"wall time {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return 0 if report["status"] == "pass" else 1


# ----------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=("json", "text"), default="text")
    common.add_argument("--seedless", action="store_true", help="accepted for clarity; nothing is random")

    parser = argparse.ArgumentParser(prog="deg", description="Dual equivalence graphs, LLT and Macdonald expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rsk", parents=[common], help="RSK insertion and recording tableaux")
    p.add_argument("word", help="one-line permutation, e.g. 15342 or 10,2,3,...")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("graph", parents=[common], help="standard, skew and permutation graphs")
    p.add_argument("action", choices=("build", "dot", "check"))
    p.add_argument("--partition", help="straight shape, e.g. 3,2")
    p.add_argument("--shape", help="outer shape of a skew shape")
    p.add_argument("--inner", help="inner shape of a skew shape")
    p.add_argument("--n", type=int, help="all permutations of 1..n")
    p.add_argument("--tau", help="tau word, e.g. 566666")
    p.add_argument("--file", help="graph JSON file")
    p.add_argument("--fixture", action="store_true", help="the bundled looped graph")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("llt", parents=[common], help="LLT graphs and expansions")
    p.add_argument("action", choices=("expand", "graph", "check-deg"))
    p.add_argument("--tuple", required=True, help="JSON list of [outer, inner] pairs")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--f", action="store_true", help="fundamental quasisymmetric expansion instead")
    p.set_defaults(func=cmd_llt)

    p = sub.add_parser("mac", parents=[common], help="modified Macdonald expansions")
    p.add_argument("action", choices=("expand",))
    p.add_argument("--shape", required=True)
    p.add_argument("--inner")
    p.add_argument("--conjugate", action="store_true")
    p.add_argument("--f", action="store_true", help="fundamental quasisymmetric expansion instead")
    p.set_defaults(func=cmd_mac)

    p = sub.add_parser("campaign", parents=[common], help="verification campaigns")
    p.add_argument("action", choices=("run",))
    p.add_argument("name", nargs="?", help=", ".join(campaigns.CAMPAIGNS))
    p.add_argument("--n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--replay", help="failure record or report JSON to re-run")
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("schur", parents=[common], help="Schur expansion of an F-expansion")
    p.add_argument("action", choices=("extract",))
    p.add_argument("--file")
    p.add_argument("--json")
    p.add_argument("--method", choices=("solve", "peel"), default="solve")
    p.set_defaults(func=cmd_schur)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"deg: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"deg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
