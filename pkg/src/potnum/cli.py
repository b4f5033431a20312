"""Command-line surface: analyze, build, check, sigma, probe, dist.

Graphs are given either as generator expressions (``"join(K 2, Kbar 3)"``)
or as paths to edge-list files (first line ``n <k>``, then ``e <u> <v>``
lines, 1-based). Sequences use the run-length text form ``7,1^7``.

Exit codes: 0 success, 1 parse/usage error, 2 cap exceeded, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional

from .generators import graph_from_text
from .graphs import SmallGraph, parse_graph_file
from .oracle import CapExceededError, potentially, sigma_exact
from .potential import profile, rho, target_family, target_sequence
from .probe import ProbeConfig, run_probe
from .sequences import l1_distance, parse_sequence
from .stability import classify_sigma, classify_weak

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class UsageError(ValueError):
    pass


def _load_graph(source: str, cap: int) -> SmallGraph:
    if os.path.exists(source):
        with open(source, "r", encoding="utf-8") as fh:
            return parse_graph_file(fh.read())
    return graph_from_text(source, cap=cap)


def _emit(payload, as_json: bool, human_lines: List[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines:
            print(line)


def _target_pattern(h: SmallGraph, i: int) -> str:
    prof = profile(h)
    value = prof.k - i + prof.nabla_table[i] - 1
    return f"(n-1)^{prof.k - i},{value}^(n-{prof.k - i})"


def cmd_analyze(args) -> int:
    h = _load_graph(args.graph, args.cap_n)
    prof = profile(h)
    sigma_verdict = classify_sigma(h)
    weak_verdict = classify_weak(h)
    patterns = [
        {"i": i, "pattern": _target_pattern(h, i)}
        for i in sorted(prof.sigma_tilde_i)
        if prof.sigma_tilde_i[i] == prof.sigma_tilde
    ]
    payload = {
        "profile": prof.to_json_dict(),
        "sigmaStability": sigma_verdict.to_json_dict(),
        "weakStability": weak_verdict.to_json_dict(),
        "targetPatterns": patterns,
    }
    human = [
        f"order {prof.k}, independence number {prof.alpha}",
        f"type: {prof.type_label} (bH={prof.b_h})",
        f"sigmaTilde: {prof.sigma_tilde} at iStar={prof.i_star}",
        "nabla: " + ", ".join(f"{i}:{v}" for i, v in sorted(prof.nabla_table.items())),
        f"sigma-stability: {sigma_verdict.status}"
        + (f" via {sigma_verdict.theorem}" if sigma_verdict.theorem else "")
        + (f" cover={sigma_verdict.cover}" if sigma_verdict.cover else ""),
        f"weak stability: {weak_verdict.status}"
        + (f" via {weak_verdict.basis}" if weak_verdict.basis else ""),
        "targets: " + "; ".join(p["pattern"] for p in patterns),
    ]
    _emit(payload, args.json, human)
    return EXIT_OK


def cmd_build(args) -> int:
    h = _load_graph(args.graph, args.cap_n)
    kind = args.kind
    if kind == "pi_tilde":
        if len(args.params) != 2:
            raise UsageError("pi_tilde needs two arguments: i n")
        i, n = map(int, args.params)
        ts = target_sequence(h, i, n)
        _emit(ts.to_json_dict(), args.json, [ts.seq.to_text()])
    elif kind == "rho":
        if len(args.params) != 1:
            raise UsageError("rho needs one argument: n")
        wit = rho(h, int(args.params[0]))
        _emit(wit.to_json_dict(), args.json, [wit.seq.to_text()])
    elif kind == "family":
        if len(args.params) != 1:
            raise UsageError("family needs one argument: n")
        fam = target_family(h, int(args.params[0]))
        _emit(
            {"family": [ts.to_json_dict() for ts in fam]},
            args.json,
            [ts.seq.to_text() for ts in fam],
        )
    else:
        raise UsageError(f"unknown build kind {kind!r}")
    return EXIT_OK


def cmd_check(args) -> int:
    seq = parse_sequence(args.sequence)
    h = _load_graph(args.graph, args.cap_n)
    cert = potentially(seq, h, cap_n=args.cap_n)
    human = [f"potentially: {'true' if cert.answer else 'false'}"]
    if cert.answer and cert.embedding is not None:
        human.append(
            "embedding: "
            + ", ".join(f"{u + 1}->{v + 1}" for u, v in sorted(cert.embedding.items()))
        )
        human.append(
            "realization edges: "
            + " ".join(f"({u + 1},{v + 1})" for u, v in cert.realization.graph.edges())
        )
    _emit(cert.to_json_dict(), args.json, human)
    return EXIT_OK


def cmd_sigma(args) -> int:
    h = _load_graph(args.graph, args.cap_n)
    result = sigma_exact(h, args.n, cap_n=args.cap_n, threads=args.threads)
    human = [str(result.value)]
    human += [f"maximizer: {s.to_text()}" for s in result.extremal_sequences]
    _emit(result.to_json_dict(), args.json, human)
    return EXIT_OK


def cmd_probe(args) -> int:
    seq = parse_sequence(args.sequence)
    h = _load_graph(args.graph, args.cap_n)
    cfg = ProbeConfig(
        epsilon=Fraction(args.epsilon) if args.epsilon else Fraction(1, 4),
        delta=Fraction(args.delta) if args.delta else None,
        f_override=args.f_override,
        oracle_fallback=not args.no_oracle,
        cap_n=args.cap_n,
    )
    verdict, trace = run_probe(seq, h, cfg)
    if args.trace:
        for line in trace.to_json_lines():
            print(line)
        return EXIT_OK
    human = [f"verdict: {verdict.kind}"]
    if verdict.reason:
        human.append(f"reason: {verdict.reason}")
    if verdict.verified is not None:
        human.append(f"verified: {'true' if verdict.verified else 'false'}")
    if verdict.target is not None:
        human.append(f"target: {verdict.target.seq.to_text()} (i={verdict.target.i})")
    if verdict.distance is not None:
        human.append(f"distance: {verdict.distance}")
    _emit(verdict.to_json_dict(), args.json, human)
    return EXIT_OK


def cmd_dist(args) -> int:
    a = parse_sequence(args.sequence_a)
    b = parse_sequence(args.sequence_b)
    d = l1_distance(a, b)
    _emit({"distance": d}, args.json, [str(d)])
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="potnum",
        description="Potential-number profiles, stability classification, and desk-scale oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--cap-n", type=int, default=10, help="oracle length cap")

    p = sub.add_parser("analyze", help="profile a graph and classify its stability")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("build", help="emit extremal sequences for a graph")
    p.add_argument("graph")
    p.add_argument("kind", choices=["pi_tilde", "rho", "family"])
    p.add_argument("params", nargs="*")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="decide potentially-H-graphic exactly")
    p.add_argument("sequence")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sigma", help="exact potential number by enumeration")
    p.add_argument("graph")
    p.add_argument("n", type=int)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("probe", help="run the near-threshold iteration with a trace")
    p.add_argument("sequence")
    p.add_argument("graph")
    p.add_argument("--epsilon", default=None, help="rational like 1/4")
    p.add_argument("--delta", default=None, help="rational like 1/1000")
    p.add_argument("--f-override", type=int, default=None)
    p.add_argument("--trace", action="store_true", help="emit JSON-lines trace")
    p.add_argument("--no-oracle", action="store_true", help="skip oracle verification")
    common(p)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("dist", help="l1 distance between two sequences")
    p.add_argument("sequence_a")
    p.add_argument("sequence_b")
    common(p)
    p.set_defaults(func=cmd_dist)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
