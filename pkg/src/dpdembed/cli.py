"""Command-line front end.

Exit codes: 0 success, 1 construction error, 2 parse error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .divisors import QDivisor
from .dpd import DPDPair, smoothness_check, to_normal_form
from .embedding import (
    build_embedding,
    cover_invariance_check,
    dehomogenize,
    eliminate_z,
    normality_flags,
    positive_weight_embedding,
    report,
    toric_replacement,
    universal_cover_form,
)
from .errors import InvalidPairError, NormalizationError, ParseError
from .gizatullin import (
    GizatullinParams,
    action_consistency_check,
    classify,
    generator_relations_check,
    plane_embedding,
    toric_embedding,
    toric_iso_check,
)
from .parsing import parse_pair

EXIT_OK, EXIT_CONSTRUCTION, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3

GRAMMAR = """\
pair syntax:   "(D_plus; D_minus)"
divisor:       term (('+'|'-') term)*   or  0
term:          [coeff '*'] atom
coeff:         INT | INT '/' INT
atom:          '[' rational ']'   (shorthand for div(t - p))
             | 'div(' poly ')'    (poly in t; non-squarefree input is decomposed)
poly:          +, -, *, ^ and parentheses over integers and t

example:       dpdembed embed --pair "(-1/2*[0]; -1/3*[1])"

exit codes:    0 ok, 1 construction error, 2 parse error, 3 verification failure
"""


class VerificationFailure(Exception):
    def __init__(self, failures: list[dict], payload: dict):
        super().__init__(f"{len(failures)} check(s) failed")
        self.failures = failures
        self.payload = payload


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            if isinstance(value, bool):
                value = str(value).lower()
            elif isinstance(value, list):
                value = "(" + ", ".join(str(v) for v in value) + ")"
            lines.append(f"{pad}{key}: {value}")
    return lines


def _require_checks(payload: dict, checks: dict):
    failures = [{"check": name} for name, ok in checks.items() if not ok]
    if failures:
        raise VerificationFailure(failures, payload)


# -- subcommands -------------------------------------------------------


def cmd_normalize(args) -> dict:
    pair = parse_pair(args.pair)
    nf, transcript = to_normal_form(pair)
    smooth = smoothness_check(pair)
    return {
        "input": str(pair),
        "normal_form": nf.to_json(),
        "normal_pair": str(nf.to_pair()),
        "transcript": transcript.to_json(),
        "smoothness": {
            "literal": smooth.literal,
            "pointwise": smooth.pointwise,
            "agree": smooth.agree,
        },
    }


def _embed_payload(pair: DPDPair) -> dict:
    nf, _ = to_normal_form(pair)
    E = build_embedding(nf)
    out = report(E)
    out["normal_form"] = nf.to_json()
    out["statement"] = E.statement()
    out["normality"] = normality_flags(nf).to_json()
    if not E.flags.all_weights_positive:
        P = positive_weight_embedding(nf)
        out["positive_weight"] = {
            "F": str(P.F),
            "weights": list(P.weights),
            "ambient": P.ambient_str(),
            "degree": P.degree,
            "alpha": P.flags.alpha_used,
        }
    toric = toric_replacement(nf)
    if toric is not None:
        out["toric_replacement"] = {"F": str(toric.F), "ambient": toric.ambient_str(), "degree": toric.degree}
    cov = dehomogenize(E)
    out["covering"] = cov.to_json()
    _require_checks(out, out["checks"])
    return out


def cmd_embed(args) -> dict:
    return _embed_payload(parse_pair(args.pair))


def cmd_dg(args) -> dict:
    if not 1 <= args.d < args.n:
        raise ValueError(f"need 1 <= d < n, got n={args.n}, d={args.d}")
    pair = DPDPair(QDivisor.point(0, Fraction(-1, args.d)), QDivisor.point(1, Fraction(-1, args.n - args.d)))
    out = {"pair": str(pair)}
    out.update(_embed_payload(pair))
    smooth = smoothness_check(pair)
    out["smoothness"] = {"literal": smooth.literal, "pointwise": smooth.pointwise}
    return out


def cmd_toric(args) -> dict:
    return toric_embedding(args.d, args.e).to_json()


def cmd_toric_iso(args) -> dict:
    for name, v in (("e", args.e), ("e2", args.e2)):
        if not 1 <= v < args.d:
            raise ValueError(f"need 1 <= {name} < d, got {name}={v}, d={args.d}")
    return {"d": args.d, "e": args.e, "e2": args.e2, "isomorphic": toric_iso_check(args.d, args.e, args.e2)}


def _rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}", text, 0, ["p/q"]) from exc


def cmd_gizatullin(args) -> dict:
    gp = GizatullinParams(args.e, args.m, args.c, _rational_arg(args.p), _rational_arg(args.q))
    pe = plane_embedding(gp)
    out = pe.to_json()
    out["pair"] = str(gp.pair())
    out["statement"] = pe.statement()
    out["checks"] = {
        "invariants": not pe.invariant_violations(gp.e),
        "generator_relations": generator_relations_check(gp),
        "action_consistency": action_consistency_check(pe, gp),
    }
    _require_checks(out, out["checks"])
    return out


def cmd_classify(args) -> dict:
    return classify(parse_pair(args.pair)).to_json()


def cmd_cover(args) -> dict:
    cover = universal_cover_form(args.e, args.d, args.k)
    out = cover.to_json()
    out["checks"] = {"invariant": cover_invariance_check(cover)}
    _require_checks(out, out["checks"])
    return out


def cmd_eliminate(args) -> dict:
    if args.pair is not None:
        pair = parse_pair(args.pair)
    else:
        if None in (args.e, args.d, args.k):
            raise ValueError("give --pair or all of --e, --d, --k")
        pair = DPDPair(
            QDivisor.point(0, Fraction(-args.e, args.d)),
            QDivisor.point(0, Fraction(args.e, args.d)) + QDivisor.point(1, Fraction(-1, args.k)),
        )
    nf, _ = to_normal_form(pair)
    E = build_embedding(nf)
    red = eliminate_z(E)
    if red is None:
        raise ValueError(f"z does not occur linearly in a single term of {E.F}")
    return {
        "pair": str(pair),
        "F": str(E.F),
        "G": str(red.G),
        "weights": list(red.weights),
        "statement": str(red),
        "all_weights_positive": red.all_weights_positive,
    }


def cmd_verify(args) -> dict:
    from .verify import run_grid

    results = run_grid(args.grid, args.inject_fault)
    failures = [r.to_json() for r in results if not r.ok]
    counts: dict[str, list[int]] = {}
    for r in results:
        tally = counts.setdefault(r.check, [0, 0])
        tally[0 if r.ok else 1] += 1
    out = {
        "grid": args.grid,
        "fault": args.inject_fault,
        "cells": len(results),
        "checks": {name: {"passed": p, "failed": f} for name, (p, f) in sorted(counts.items())},
        "ok": not failures,
    }
    if failures:
        raise VerificationFailure(failures, out)
    return out


# -- driver ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .verify import FAULTS

    parser = argparse.ArgumentParser(
        prog="dpdembed",
        description="Compile DPD pairs of Q-divisors into weighted projective hypersurface embeddings.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"dpdembed {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text, epilog=GRAMMAR,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.set_defaults(func=func)
        return p

    p = add("normalize", cmd_normalize, "bring a pair to normal form (d, e+, e-, k, Q)")
    p.add_argument("--pair", required=True)
    p = add("embed", cmd_embed, "hypersurface embedding with flags and oracle checks")
    p.add_argument("--pair", required=True)
    p = add("dg", cmd_dg, "embedding of the pair (-(1/d)[0], -(1/(n-d))[1])")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = add("toric", cmd_toric, "V_{d,e} as D_+(z) in P(1, e, d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p = add("toric-iso", cmd_toric_iso, "whether V_{d,e} and V_{d,e2} coincide")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--e2", type=int, required=True)
    p = add("gizatullin", cmd_gizatullin, "plane embedding for (-(e/m)[p], (e/m)[p] - c[q])")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--p", default="0", help="rational point p (default 0)")
    p.add_argument("--q", default="1", help="rational point q (default 1)")
    p = add("classify", cmd_classify, "toric / nontoric / other shape of a pair")
    p.add_argument("--pair", required=True)
    p = add("cover", cmd_cover, "universal cover x^k y - (s^d - 1) with its E_d action")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = add("eliminate", cmd_eliminate, "drop z when it enters F linearly")
    p.add_argument("--pair")
    p.add_argument("--e", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p = add("verify", cmd_verify, "run the verification grid")
    p.add_argument("--grid", choices=("default", "quick"), default="default")
    p.add_argument("--inject-fault", choices=FAULTS, default=None,
                   help="corrupt one input coefficient of the named check")
    return parser


def _emit(args, payload: dict, out):
    if args.json:
        out.write(_dump(payload) + "\n")
    else:
        out.write("\n".join(_text(payload)) + "\n")


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except ParseError as exc:
        if args.json:
            out.write(_dump({"error": {"kind": "parse", "message": str(exc), "position": exc.position}}) + "\n")
        err.write(f"parse error: {exc}\n{exc.caret()}\n")
        return EXIT_PARSE
    except VerificationFailure as exc:
        payload = dict(exc.payload, ok=False, failures=exc.failures)
        _emit(args, payload, out)
        err.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    except NormalizationError as exc:
        if args.json:
            out.write(_dump({"error": {"kind": "construction", "reason": exc.reason, "message": str(exc)}}) + "\n")
        err.write(f"error ({exc.reason}): {exc}\n")
        return EXIT_CONSTRUCTION
    except (InvalidPairError, ValueError, ZeroDivisionError) as exc:
        if args.json:
            out.write(_dump({"error": {"kind": "construction", "message": str(exc)}}) + "\n")
        err.write(f"error: {exc}\n")
        return EXIT_CONSTRUCTION
    _emit(args, payload, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
