"""Command-line front end: ``reidpair run <suite>`` and ``reidpair eval <verb> <payload>``.

Exit codes: 0 when every check passes, 1 on a check failure, 2 on a
configuration or usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Optional

from .errors import ConfigurationError, PreconditionError, ReidpairError, StructuralError, UsageError
from .groupring import GroupRingElem, check_genus, format_fraction, parse_vector, zero_vector
from .reidemeister import closed_form_pairing, oracle_pairing
from .surfacegroup import Word
from .suites import SUITES, make_config, run_suite
from .xcalculus import XExpr, YSym, project_group_ring, reduce_to_W1, reduce_to_W2, theta, x_q, y_canonicalize

VERBS = ("pair", "pair-oracle", "xq", "reduce", "project", "theta")


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dump(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, integer vectors on one line."""
    text = json.dumps(obj, sort_keys=True, indent=2)
    return _INT_LIST.sub(lambda m: "[" + ", ".join(m.group(1).replace(",", " ").split()) + "]", text) + "\n"


# ------------------------------------------------------------------ eval verbs


def _genus(payload: dict, default: int) -> int:
    g = payload.get("genus", default)
    if not isinstance(g, int) or isinstance(g, bool):
        raise UsageError("genus must be an integer", "$.genus")
    return check_genus(g)


def _vector(payload: dict, key: str, g: int, default_zero=False):
    if key not in payload and default_zero:
        return zero_vector(g)
    return parse_vector(payload.get(key), g, f"$.{key}")


def _object(payload) -> dict:
    if not isinstance(payload, dict):
        raise UsageError("payload must be a JSON object", "$")
    return payload


def eval_pair(payload, genus):
    p = _object(payload)
    g = _genus(p, genus)
    kind = p.get("kind", "separating-vs-commutator")
    if kind == "separated":
        return closed_form_pairing(kind, genus=g).to_json()
    if kind != "separating-vs-commutator":
        raise UsageError(f"unknown kind {kind!r}", "$.kind")
    h = _vector(p, "h", g, default_zero=True)
    return closed_form_pairing(kind, h, _vector(p, "eta", g), _vector(p, "lam", g)).to_json()


def eval_pair_oracle(payload, genus):
    p = _object(payload)
    g = _genus(p, genus)
    words = []
    for key in ("x", "y"):
        if key not in p:
            raise UsageError("missing word", f"$.{key}")
        words.append(Word.from_json(g, p[key], f"$.{key}"))
    x, y = words
    return oracle_pairing(x, y, _vector(p, "h1", g, True), _vector(p, "h2", g, True)).to_json()


def eval_xq(payload, genus):
    p = _object(payload)
    expr = XExpr.from_json(p, "$", genus=genus)
    check_genus(expr.genus)
    return x_q(expr).to_json()


def _ysym(data, g, path) -> YSym:
    if not isinstance(data, dict):
        raise UsageError("expected an object", path)
    h = parse_vector(data.get("h"), g, f"{path}.h")
    x = parse_vector(data.get("x"), g, f"{path}.x")
    try:
        return y_canonicalize(h, x)
    except PreconditionError as exc:
        raise UsageError(str(exc), f"{path}.x") from None


def eval_reduce(payload, genus):
    p = _object(payload)
    target = p.get("target", "W1")
    if target == "W1":
        expr = XExpr.from_json(p.get("expr"), "$.expr", genus=genus)
        check_genus(expr.genus)
        out = XExpr(expr.genus)
        for s, c in expr.items():
            out = out + reduce_to_W1(s).scale(c)
        return out.to_json()
    if target == "W2":
        g = _genus(p, genus)
        comb = reduce_to_W2(_ysym(p.get("y"), g, "$.y"))
        terms = [{"c": format_fraction(c), "d": s.d, "h": list(s.h), "x": list(s.x)}
                 for s, c in sorted(comb.items())]
        return {"genus": g, "terms": terms}
    raise UsageError("target must be 'W1' or 'W2'", "$.target")


def eval_project(payload, genus):
    p = _object(payload)
    level = p.get("level", 1)
    if level not in (1, 2):
        raise UsageError("level must be 1 or 2", "$.level")
    xi = GroupRingElem.from_json(p.get("element"), "$.element")
    check_genus(xi.genus)
    return project_group_ring(level, xi).to_json()


def eval_theta(payload, genus):
    p = _object(payload)
    g = _genus(p, genus)
    d = p.get("d")
    if not isinstance(d, int) or not 1 <= d <= g:
        raise UsageError(f"d must be an integer in 1..{g}", "$.d")
    return theta(g, d).to_json()


EVALUATORS = {
    "pair": eval_pair,
    "pair-oracle": eval_pair_oracle,
    "xq": eval_xq,
    "reduce": eval_reduce,
    "project": eval_project,
    "theta": eval_theta,
}


def evaluate(verb: str, payload, genus: int = 4):
    if verb not in EVALUATORS:
        raise UsageError(f"unknown verb {verb!r}; choose from {', '.join(VERBS)}")
    try:
        return EVALUATORS[verb](payload, genus)
    except (PreconditionError, StructuralError) as exc:
        raise UsageError(str(exc), getattr(exc, "path", None) or "$") from None


# ------------------------------------------------------------------ formatting


def to_markdown(report: dict) -> str:
    lines = [f"# {report['suite']}", ""]
    cfg = ", ".join(f"{k}={v}" for k, v in sorted(report["config"].items()))
    lines += [f"config: {cfg}", f"library version: {report['library_version']}", ""]
    lines += ["| check | result | instances | detail |", "|---|---|---|---|"]
    for c in report["checks"]:
        detail = ""
        if not c["pass"]:
            detail = json.dumps(c.get("failures", c.get("residual", "")), sort_keys=True)[:200]
        lines.append(f"| {c['id']} | {'pass' if c['pass'] else 'FAIL'} | {c.get('instances', 1)} | {detail} |")
    s = report["summary"]
    lines += ["", f"{s['passed']}/{s['total']} checks passed"]
    extra = {k: v for k, v in report.items()
             if k not in ("suite", "config", "library_version", "checks", "summary", "pass")}
    if extra:
        lines += ["", "```json", json.dumps(extra, sort_keys=True, indent=2), "```"]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_payload(arg: str):
    if arg == "-":
        raw = sys.stdin.read()
    elif arg.startswith("@"):
        raw = Path(arg[1:]).read_text()
    else:
        raw = arg
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"payload is not valid JSON: {exc.msg}", "$") from None


# ------------------------------------------------------------------ entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--genus", type=int, default=4)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--box", type=int, default=None, help="box bound B (suite default when omitted)")
    common.add_argument("--count", type=int, default=None, help="instances per check family")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "markdown"), default="json")

    parser = _Parser(prog="reidpair", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    run = sub.add_parser("run", parents=[common], help="run a verification suite")
    run.add_argument("suite", choices=SUITES)
    ev = sub.add_parser("eval", parents=[common], help="evaluate a single expression")
    ev.add_argument("verb", choices=VERBS)
    ev.add_argument("payload", help="JSON text, @file, or - for stdin")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        check_genus(args.genus)
        if args.command == "run":
            cfg = make_config(args.suite, args.genus, args.seed, args.box, args.count, args.out)
            report = run_suite(args.suite, cfg)
            _emit(to_markdown(report) if args.format == "markdown" else dump(report), args.out)
            return 0 if report["pass"] else 1
        result = evaluate(args.verb, _read_payload(args.payload), args.genus)
        text = dump(result)
        _emit(f"```json\n{text}```\n" if args.format == "markdown" else text, args.out)
        return 0
    except (ConfigurationError, UsageError) as exc:
        kind = "configuration error" if isinstance(exc, ConfigurationError) else "usage error"
        sys.stderr.write(f"{kind}: {exc}\n")
        return 2
    except ReidpairError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
