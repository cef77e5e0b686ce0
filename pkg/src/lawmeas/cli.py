"""Command-line front end.

Exit codes: 0 every check passed, 1 a verification failed (the report says
which), 2 the input could not be read or parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import io
from .cocountable import coco_non_topology_witness
from .errors import CapExceeded, LawmeasError, NoConstantsError
from .measmodel import NotATopologicalModel, verify_theorem
from .setcore import CAP_ENV_VAR, enumeration_cap
from .sigma import atom_labels
from .suite import MAX_SUITE_CARRIER, run_suite
from .theory.model import check_model
from .topology import borel, is_topology

COMMANDS = ("theory-check", "borel", "meas-verify", "suite", "cocountable-demo")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    paths: list[str] = field(default_factory=list)
    output: str = "text"
    caps: dict = field(default_factory=dict)
    max_carrier: int = MAX_SUITE_CARRIER

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise io.InputError(f"unknown command {self.command!r}")
        # positions of arguments that must be existing files; theories may be builtin names
        files = {"theory-check": (1,), "borel": (0,), "meas-verify": (0, 1)}.get(self.command, ())
        for i in files:
            if not Path(self.paths[i]).is_file():
                raise io.InputError(f"{self.paths[i]}: no such file")
        if self.command == "suite" and not 1 <= self.max_carrier <= MAX_SUITE_CARRIER:
            raise io.InputError(f"--max-carrier must be between 1 and {MAX_SUITE_CARRIER}")


def _emit(out, cfg: RunConfig, doc: dict, text: str) -> None:
    if cfg.output == "json":
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(text)


def _fmt_sets(sets) -> str:
    return ", ".join("{" + ",".join(s) + "}" for s in sets)


def _theory_check(cfg: RunConfig, out) -> int:
    th = io.load_theory(cfg.paths[0])
    alg = io.load_algebra(cfg.paths[1], th)
    try:
        report = check_model(alg, th, cap=cfg.caps.get("states", 10**7))
    except LawmeasError as exc:
        raise io.InputError(str(exc)) from None
    doc = {"schema": "1", **report.to_dict()}
    lines = [f"theory {th.name}: {'pass' if report.passed else 'FAIL'} ({report.instances_checked} instances)"]
    for f in report.failures:
        lines.append(f"  {f.label} fails at ({', '.join(f.env_labels)}): {f.lhs_value} != {f.rhs_value}")
    _emit(out, cfg, doc, "\n".join(lines) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def _borel(cfg: RunConfig, out) -> int:
    carrier, top, raw = io.load_topology(cfg.paths[0])
    if top is None:
        check = is_topology(carrier, raw)
        doc = {
            "schema": "1",
            "pass": False,
            "axiom": check.axiom,
            "witness": [list(w.labels()) for w in check.witness],
        }
        text = f"not a topology: {check.axiom} fails at {_fmt_sets(w.labels() for w in check.witness)}\n"
        _emit(out, cfg, doc, text)
        return EXIT_FAIL
    b = borel(top)
    members = [list(m.labels()) for m in b.members]
    doc = {
        "schema": "1",
        "pass": True,
        "carrier": list(carrier.labels),
        "opens": [list(o.labels()) for o in top.opens],
        "atoms": atom_labels(b),
        "borel": members,
        "size": len(b),
    }
    text = (
        f"opens ({len(top)}): {_fmt_sets(doc['opens'])}\n"
        f"atoms ({len(doc['atoms'])}): {_fmt_sets(doc['atoms'])}\n"
        f"borel ({len(b)}): {_fmt_sets(members)}\n"
    )
    _emit(out, cfg, doc, text)
    return EXIT_OK


def _meas_verify(cfg: RunConfig, out) -> int:
    space = io.load_space(cfg.paths[0])
    th = io.load_theory(cfg.paths[2])
    Y, _ = io.load_topalgebra(cfg.paths[1], th)
    try:
        Y.algebra.restrict(th)
    except LawmeasError as exc:
        raise io.InputError(str(exc)) from None
    try:
        report = verify_theorem(space, Y, th, cap=cfg.caps.get("functions", 10**6))
    except NotATopologicalModel as exc:
        doc = {
            "schema": "1",
            "pass": False,
            "closure": False,
            "equations": False,
            "product_preservation": False,
            "function_count": 0,
            "failures": [{"kind": "precondition", **exc.report.to_dict()}],
        }
        lines = ["target is not a topological model:"]
        lines += [f"  {f.label} fails at ({', '.join(f.env_labels)})" for f in exc.report.model.failures]
        lines += [
            f"  {f.op} is not continuous: preimage {{{','.join(f.preimage)}}} of {{{','.join(f.open_set)}}} is not open"
            for f in exc.report.continuity_failures
        ]
        _emit(out, cfg, doc, "\n".join(lines) + "\n")
        return EXIT_FAIL
    except (NoConstantsError, CapExceeded) as exc:
        raise io.InputError(str(exc)) from None
    doc = report.to_dict()
    lines = [
        f"theory {report.theory}: {'pass' if report.passed else 'FAIL'}",
        f"  measurable functions: {report.function_count}",
        f"  closure: {'pass' if report.closure_pass else 'FAIL'}",
        f"  equations: {'pass' if report.equations_pass else 'FAIL'}",
        f"  product preservation: {'pass' if report.product_preservation_pass else 'FAIL'}",
    ]
    for p in report.products:
        lines.append(f"    n={p.arity}: |Meas(X,Y^n)| = {p.power_count}, |Meas(X,Y)|^n = {p.base_count ** p.arity}")
    lines += [f"  failure: {json.dumps(f, ensure_ascii=False)}" for f in report.failures]
    _emit(out, cfg, doc, "\n".join(lines) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def _suite(cfg: RunConfig, out) -> int:
    results = run_suite(cfg.max_carrier)
    ok = all(r.passed for r in results)
    # timings only go to the text report so that the JSON stays byte-stable
    criteria = [{k: v for k, v in r.to_dict().items() if k != "seconds"} for r in results]
    doc = {"schema": "1", "max_carrier": cfg.max_carrier, "pass": ok, "criteria": criteria}
    text = "".join(r.line + "\n" for r in results)
    text += f"{sum(r.passed for r in results)}/{len(results)} criteria passed\n"
    _emit(out, cfg, doc, text)
    return EXIT_OK if ok else EXIT_FAIL


def _cocountable(cfg: RunConfig, out) -> int:
    report = coco_non_topology_witness()
    _emit(out, cfg, report.to_dict(), report.to_text())
    return EXIT_OK if report.fact_c else EXIT_FAIL


_HANDLERS = {
    "theory-check": _theory_check,
    "borel": _borel,
    "meas-verify": _meas_verify,
    "suite": _suite,
    "cocountable-demo": _cocountable,
}


def dispatch(cfg: RunConfig, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        cfg.validate()
        return _HANDLERS[cfg.command](cfg, out)
    except io.InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lawmeas", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        return p

    theory = sub.add_parser("theory", help="equational model checking")
    tsub = theory.add_subparsers(dest="action", required=True)
    tc = with_json(tsub.add_parser("check", help="check an algebra file against a theory"))
    tc.add_argument("theory", help="DSL file or builtin name (Group, Ring, PaperRing, Monoid)")
    tc.add_argument("algebra", help="algebra JSON file")

    b = with_json(sub.add_parser("borel", help="Borel algebra of a topology file"))
    b.add_argument("space", help="topology JSON file (opens or subbasis)")

    meas = sub.add_parser("meas", help="measurable-function models")
    msub = meas.add_subparsers(dest="action", required=True)
    mv = with_json(msub.add_parser("verify", help="verify Meas(X, Y) is a model of the theory"))
    mv.add_argument("space", help="measurable space JSON file")
    mv.add_argument("topalgebra", help="topological algebra JSON file")
    mv.add_argument("theory", help="DSL file or builtin name")

    s = with_json(sub.add_parser("suite", help="run the property sweeps"))
    s.add_argument("--max-carrier", type=int, default=MAX_SUITE_CARRIER)

    coco = sub.add_parser("cocountable", help="countable/cocountable σ-algebra")
    csub = coco.add_subparsers(dest="action", required=True)
    with_json(csub.add_parser("demo", help="why it is not a topology"))
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    output = "json" if ns.json else "text"
    caps = {"enumeration": enumeration_cap()}
    if ns.group == "theory":
        return RunConfig("theory-check", [ns.theory, ns.algebra], output, caps)
    if ns.group == "borel":
        return RunConfig("borel", [ns.space], output, caps)
    if ns.group == "meas":
        return RunConfig("meas-verify", [ns.space, ns.topalgebra, ns.theory], output, caps)
    if ns.group == "suite":
        return RunConfig("suite", [], output, caps, ns.max_carrier)
    return RunConfig("cocountable-demo", [], output, caps)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
    except ValueError:
        sys.stderr.write(f"error: {CAP_ENV_VAR} must be an integer\n")
        return EXIT_INPUT
    return dispatch(cfg)


if __name__ == "__main__":
    sys.exit(main())
