"""Command-line front end.

Every subcommand builds a normalized input record, runs, and emits a report
{"command", "inputs", "result", "certified"}.  The ``inputs`` record can be
fed back with ``--input`` (inline JSON or @file) to reproduce the report;
explicit flags win over keys in that record.

Exit status: 0 decided/verified, 1 decided negative, 2 uncertified,
3 input error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import curvecomp as cc
from . import piclattice as pl
from . import quotsing as qs
from . import reproduce
from .germcalc import (Branch, Center, DegeneratePairError, GermPair, UncertifiedSearchError, Valuation,
                       blowup_trace, classify_phi_i, classify_two2, delta_count, family_by_name,
                       min_discrepancy_search, sharp_epsilon_bound)
from .germcalc.classify import ClassificationGapError
from .rational import fmt, parse_rational

OK, NEGATIVE, UNCERTIFIED, INPUT_ERROR = 0, 1, 2, 3


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- serialization

def jsonable(x):
    if isinstance(x, Fraction):
        return fmt(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Valuation):
        return [fmt(x.vx), fmt(x.vy)]
    if isinstance(x, qs.QuotientSingularity):
        return {"n": x.n, "q": x.q}
    if isinstance(x, Branch):
        return x.to_json()
    if isinstance(x, GermPair):
        return x.to_json()
    if isinstance(x, pl.DivisorClass):
        return [fmt(c) for c in x.coords]
    if dataclasses.is_dataclass(x):
        return {f.name: jsonable(getattr(x, f.name)) for f in dataclasses.fields(x) if f.repr}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in x]
    return str(x)


def _load_json(text: str):
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"bad JSON: {e}") from None


def _rationals(text) -> list[Fraction]:
    if isinstance(text, list):
        return [parse_rational(t) for t in text]
    return [parse_rational(t) for t in str(text).split(",") if t.strip()]


def _ints(text) -> list[int]:
    if isinstance(text, list):
        return [int(t) for t in text]
    return [int(t) for t in str(text).split(",") if t.strip()]


# ---------------------------------------------------------------- germ input

def _entry(text: str) -> dict:
    """TAG[:param]=coeff, e.g. Tangent:3=1/2 or X=1/2."""
    if "=" not in text:
        raise InputError(f"entry {text!r} must look like TAG[:param]=coeff")
    lhs, coeff = text.split("=", 1)
    tag, _, param = lhs.partition(":")
    b = {"tag": tag.strip()}
    if param:
        b["k" if tag.strip() != "CuspB" else "l"] = int(param)
    return {"branch": b, "coeff": fmt(parse_rational(coeff))}


def _germ(inputs: dict) -> GermPair:
    g = inputs.get("germ")
    if g is None:
        raise InputError("a germ is required (--germ JSON or --sing/--entry)")
    return GermPair.from_json(g)


def _add_germ_flags(p):
    p.add_argument("--germ", help='germ as JSON or @file, e.g. {"sing":{"n":2,"q":1},"entries":[...]}')
    p.add_argument("--sing", help="n,q of the cyclic quotient (1,0 for a smooth point)")
    p.add_argument("--entry", action="append", help="boundary entry TAG[:param]=coeff (repeatable)")


def _germ_inputs(args, inputs: dict) -> dict:
    g = dict(_load_json(args.germ) if args.germ else inputs.get("germ") or {})
    if args.sing:
        n, q = _ints(args.sing)
        g["sing"] = {"n": n, "q": q}
    if args.entry:
        g["entries"] = [_entry(e) for e in args.entry]
    if not g:
        raise InputError("a germ is required (--germ JSON or --sing/--entry)")
    # normalize through the parser
    return {"germ": GermPair.from_json(g).to_json()}


# ---------------------------------------------------------------- commands

def cmd_resolve(inputs):
    s = qs.QuotientSingularity(int(inputs["n"]), int(inputs["q"]))
    ch = qs.discrepancies(s)
    res = {"chain": list(ch.bs), "discrepancies": list(ch.discrepancies),
           "min_discrepancy": ch.min_discrepancy, "du_val": ch.du_val,
           "residual": qs.residual(ch)}
    text = [f"{s}: chain {list(ch.bs)}", "discrepancies " + ", ".join(fmt(a) for a in ch.discrepancies),
            f"min {fmt(ch.min_discrepancy)}, Du Val: {ch.du_val}"]
    return res, True, OK, text


def cmd_scan(inputs):
    found = qs.scan_half_bound(int(inputs["n_max"]))
    res = [{"sing": s, "min_discrepancy": qs.discrepancies(s).min_discrepancy} for s in found]
    text = [f"{len(found)} non-Du-Val germs with every discrepancy > -1/2"]
    text += [f"  {s}  min {fmt(qs.discrepancies(s).min_discrepancy)}" for s in found[:10]]
    if len(found) > 10:
        text.append(f"  ... {len(found) - 10} more")
    return res, True, OK, text


def cmd_mld(inputs):
    pair = _germ(inputs)
    seq = inputs.get("sequence")
    if seq:
        steps = blowup_trace(pair, [Center.from_json(c) for c in seq])
        res = {"steps": steps, "discrepancy": steps[-1].discrepancy}
        return res, True, OK, [f"{pair}: last exceptional curve has a = {fmt(steps[-1].discrepancy)}"]
    r = min_discrepancy_search(pair)
    status = OK if r.certified else UNCERTIFIED
    text = [f"{pair}: min discrepancy {fmt(r.min_found)} at {r.witness}"
            + ("" if r.certified else " (not certified)")]
    return r, r.certified, status, text


def cmd_classify(inputs):
    pair = _germ(inputs)
    i = inputs.get("i")
    if i is None:
        r = classify_two2(pair)
        neg = r.case == "none"
    else:
        r = classify_phi_i(pair, int(i))
        neg = r.case == "not_phi_i"
    return r, True, NEGATIVE if neg else OK, [f"{pair}: {r.case} (min a = {fmt(r.min_discrepancy)})"]


def cmd_bound(inputs):
    fam = family_by_name(inputs["family"], inputs.get("param"))
    d = _rationals(inputs.get("direction") or ",".join(["0"] * (fam.n_eps - 1) + ["1"]))
    r = sharp_epsilon_bound(fam, d)
    text = [f"{fam.name} along ({', '.join(fmt(x) for x in d)}): t < {fmt(r.bound)}",
            f"binding: {r.binding[0]} {r.binding[1] or ''}".rstrip()]
    return r, r.certified, OK if r.certified else UNCERTIFIED, text


def cmd_delta(inputs):
    pair = _germ(inputs)
    r = delta_count(pair)
    return r, r.certified, OK, [f"{pair}: delta = {r.count}"]


def _topology(text: str) -> cc.Topology:
    kind, _, length = text.partition(":")
    names = {"p1": "P1", "chain": "Chain", "cycle": "Cycle", "elliptic": "Elliptic"}
    if kind.lower() not in names:
        raise InputError(f"unknown topology {text!r}")
    return cc.Topology(names[kind.lower()], int(length) if length else 1)


def _points(text) -> list[tuple[int, Fraction]]:
    """'d1,d2' on component 0, or 'c:d' entries for chains and cycles."""
    items = text if isinstance(text, list) else [t for t in str(text).split(",") if t.strip()]
    out = []
    for t in items:
        c, sep, d = str(t).partition(":")
        out.append((int(c), parse_rational(d)) if sep else (0, parse_rational(c)))
    return out


def cmd_complement(inputs):
    topo = _topology(inputs.get("topology", "p1"))
    b = cc.CurveBoundary(topo, tuple(_points(inputs.get("points", ""))),
                         tuple((c, 1) for c in _rationals(inputs.get("horizontal") or [])))
    search = _ints(inputs.get("search") or "1,2,3,4,6")
    per_n = {n: cc.has_n_complement(b, n) for n in sorted(search)}
    best = next((n for n, (ok, _) in per_n.items() if ok), None)
    res = {"minimal_index": best,
           "witness": per_n[best][1] if best else None,
           "failures": [str(w) for ok, w in per_n.values() if not ok]}
    text = [f"minimal index {best}" if best else "no complement in the search set"]
    if best:
        w = per_n[best][1]
        text.append("complement " + ", ".join(fmt(d) for _, d in w.plus + w.fresh))
    text += [f"  {f}" for f in res["failures"]]
    return res, True, OK if best else NEGATIVE, text


def cmd_model(inputs):
    ex = inputs["example"]
    if ex == "mainind1":
        k = int(inputs.get("k", 0))
        r = pl.verify_mainind1(k)
        L = pl.PicardLattice.hirzebruch(k)
        einf, f = L.basis("Einf"), L.basis("f")
        D = [(einf, Fraction(1)), (einf + k * f, Fraction(1)), (f, r.fibre_sum)]
        cfg = pl.CurveConfig({"Einf": einf, "f": f})
        shape = pl.model_shape_check(L, D, cfg, int(inputs.get("i", 2)), rays=("f", "Einf"))
        res = {"residual": r.residual, "fibre_sum": r.fibre_sum, "trivial": r.trivial, "shape": shape}
        text = [f"F_{k}: K + D residual {jsonable(r.residual)}, fibre sum {fmt(r.fibre_sum)}",
                f"shape {shape.shape} (declared curves only)"]
        return res, shape.certified, OK if r.trivial else NEGATIVE, text
    if ex == "ex1-3":
        r = pl.verify_ex1_3()
        L, curves, _ = pl.ex1_3_model()
        cfg = pl.CurveConfig(dict(curves))
        shape = pl.model_shape_check(L, [], cfg, 3, contracted=list(curves.values()))
        res = {"report": r, "ok": r.ok, "shape": shape}
        text = [f"self-intersections {list(map(fmt, r.self_intersections))}, genera {list(map(fmt, r.genera))}",
                f"rho = {r.rho}, K + (E1+E2+E3)/3 zero: {r.residual.is_zero()}",
                f"shape: {shape.shape} ({'; '.join(shape.notes)})"]
        return res, True, OK if r.ok else NEGATIVE, text
    raise InputError(f"unknown example {ex!r} (mainind1, ex1-3)")


def cmd_main3(inputs):
    r = pl.enumerate_main3_system(int(inputs["r_max"]), int(inputs["n_max"]),
                                  int(inputs.get("k2_max", 5)), int(inputs.get("rho_max", 9)))
    text = [f"{len(r.solutions)} solution(s):"]
    text += [f"  n = {s.ns}, K^2 = {fmt(s.k2)}, rho = {s.rho}, h1 = {s.h1}" for s in r.solutions]
    text.append(f"{len(r.excluded_by_rank_one)} excluded at rho = 1, "
                f"{len(r.degenerate)} all-ones entries with K numerically trivial")
    return r, True, OK if r.unique else NEGATIVE, text


def cmd_verify(inputs):
    keys = inputs.get("only") or list(reproduce.CHECKS)
    keys = keys if isinstance(keys, list) else [k.strip() for k in str(keys).split(",")]
    unknown = [k for k in keys if k not in reproduce.CHECKS]
    if unknown:
        raise InputError(f"unknown checks {unknown}")
    checks = reproduce.run_all(keys)
    rows = [{"key": c.key, "title": c.title, "pass": c.passed, "cases": c.n_cases,
             "failures": c.details[:20], "findings": c.findings} for c in checks]
    text = [c.line() for c in checks]
    for c in checks:
        text += [f"    note: {f}" for f in c.findings]
    return rows, True, OK if all(c.passed for c in checks) else NEGATIVE, text


# name -> (handler, flag specs); a flag spec is (dest, kwargs)
_COMMANDS = {
    "resolve": (cmd_resolve, [("n", dict(type=int)), ("q", dict(type=int))]),
    "scan-singularities": (cmd_scan, [("n_max", dict(type=int))]),
    "mld": (cmd_mld, [("sequence", dict(help='blow-up centres as JSON, e.g. [{"exceptional":[0],"branches":[0,1]}]'))]),
    "classify": (cmd_classify, [("i", dict(type=int, help="classify as a Phi_i germ; omit for the strictly lc cases"))]),
    "bound": (cmd_bound, [("family", dict()), ("param", dict(type=int)),
                          ("direction", dict(help="comma-separated direction in eps-space"))]),
    "delta": (cmd_delta, []),
    "complement": (cmd_complement, [("topology", dict(help="p1, chain:L, cycle:L or elliptic")),
                                    ("points", dict(help="comma-separated coefficients, c:d for component c")),
                                    ("horizontal", dict(help="coefficients of horizontal sections")),
                                    ("search", dict(help="comma-separated indices n"))]),
    "model": (cmd_model, [("example", dict(choices=["mainind1", "ex1-3"])), ("k", dict(type=int)),
                          ("i", dict(type=int))]),
    "enumerate-main3": (cmd_main3, [("r_max", dict(type=int)), ("n_max", dict(type=int)),
                                    ("k2_max", dict(type=int)), ("rho_max", dict(type=int))]),
    "verify-paper": (cmd_verify, [("only", dict(help="comma-separated check keys, e.g. C1,C3"))]),
}

_DEFAULTS = {
    "scan-singularities": {"n_max": 200},
    "complement": {"topology": "p1", "search": "1,2,3,4,6"},
    "model": {"k": 0, "i": 2},
    "enumerate-main3": {"r_max": 12, "n_max": 6, "k2_max": 5, "rho_max": 9},
}
_GERM_COMMANDS = {"mld", "classify", "delta"}
_REQUIRED = {"resolve": ["n", "q"], "bound": ["family"], "model": ["example"]}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="logdelpezzo", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, flags) in _COMMANDS.items():
        sp = sub.add_parser(name)
        for dest, kw in flags:
            sp.add_argument("--" + dest.replace("_", "-"), dest=dest, default=None, **kw)
        if name in _GERM_COMMANDS:
            _add_germ_flags(sp)
        sp.add_argument("--input", help="input record as JSON or @file; flags win on conflict")
        sp.add_argument("--json", action="store_true", help="emit the report as JSON")
        sp.add_argument("--quiet", action="store_true", help="suppress prose output")
    return p


def _inputs(args) -> dict:
    inputs = dict(_DEFAULTS.get(args.command, {}))
    if args.input:
        rec = _load_json(args.input)
        if not isinstance(rec, dict):
            raise InputError("--input must be a JSON object")
        inputs.update(rec)
    for dest, _ in _COMMANDS[args.command][1]:
        v = getattr(args, dest)
        if v is not None:
            inputs[dest] = v
    if args.command in _GERM_COMMANDS:
        inputs.update(_germ_inputs(args, inputs))
        if isinstance(inputs.get("sequence"), str):
            inputs["sequence"] = _load_json(inputs["sequence"])
    missing = [k for k in _REQUIRED.get(args.command, []) if inputs.get(k) is None]
    if missing:
        raise InputError(f"missing inputs: {', '.join(missing)}")
    return inputs


def run(argv=None) -> tuple[dict | None, int]:
    args = build_parser().parse_args(argv)
    try:
        inputs = _inputs(args)
        handler = _COMMANDS[args.command][0]
        result, certified, status, text = handler(inputs)
    except (InputError, ValueError, KeyError, TypeError, DegeneratePairError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return None, INPUT_ERROR
    except (UncertifiedSearchError, ClassificationGapError) as e:
        report = {"command": args.command, "error": str(e),
                  "partial": jsonable(getattr(e, "partial", None)), "certified": False}
        if not args.quiet or args.json:
            print(json.dumps(report, indent=2) if args.json else f"uncertified: {e}")
        return report, UNCERTIFIED
    report = {"command": args.command, "inputs": jsonable(inputs), "result": jsonable(result),
              "certified": certified}
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    elif not args.quiet:
        print("\n".join(text))
    return report, status


def main(argv=None) -> int:
    return run(argv)[1]


if __name__ == "__main__":
    sys.exit(main())
