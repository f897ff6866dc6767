"""Command-line entry point: ``diffalg <command> [args] [--json]``.

Exit codes: 0 for decided results, 2 for Undecided / BoundedNo, 1 for
usage, parse and domain errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .. import atlas
from ..classifiers import (
    lotka_volterra_classify,
    poizat_classify,
    reduced_family_classify,
    rosenlicht_family_classify,
)
from ..constants import DEFAULT_DEG_MAX, DEFAULT_POW_MAX, VectorFieldDerivation, ej_classify, find_darboux
from ..integrability import (
    hermite_reduce,
    is_log_derivative,
    is_scaled_log_derivative,
    rational_antiderivative,
    rosenlicht_new_constants,
)
from ..operators import SeriesError, riccati_of, series_solutions, sym_power
from ..verdicts import LogDerivVerdict
from .convert import to_operator, univariate_inputs, vector_field_inputs
from .parser import ParseError, parse_expression, to_source

UNDECIDED_STATUSES = {"Undecided", "BoundedNo"}


@dataclass
class CommandResult:
    command: str
    input: object
    status: str
    witness: object = None
    certificate: list[str] = field(default_factory=list)
    citations: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    def as_json(self) -> str:
        obj = {
            "command": self.command,
            "input": self.input,
            "status": self.status,
            "witness": self.witness,
            "certificate": self.certificate,
            "citations": self.citations,
        }
        return json.dumps(obj, ensure_ascii=False)

    def as_text(self) -> str:
        out = [f"{self.command}: {_echo(self.input)}", f"status: {self.status}"]
        out.extend(self.lines)
        if self.certificate:
            out.append("certificate: " + ", ".join(self.certificate))
        if self.citations:
            out.append("see: " + "; ".join(self.citations))
        return "\n".join(out)

    @property
    def exit_code(self) -> int:
        return 2 if self.status in UNDECIDED_STATUSES else 0


def _echo(inp) -> str:
    if isinstance(inp, list):
        return ", ".join(str(x) for x in inp)
    if isinstance(inp, dict):
        return ", ".join(f"{k}={v}" for k, v in inp.items())
    return str(inp)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# -- helpers -------------------------------------------------------------------------


def _canon(src: str) -> str:
    return to_source(parse_expression(src))


def _rational_constant(src: str) -> Fraction:
    trees, (f,), _ = univariate_inputs([src])
    if not f.is_constant():
        raise UsageError(f"expected a rational number, got {src!r}")
    return f.constant_value()


def _verdict_payload(v: LogDerivVerdict):
    witness = None if v.witness is None else str(v.witness)
    lines = []
    if v.kind:
        lines.append(f"kind: {v.kind}")
    if witness:
        lines.append(f"witness: {witness}")
    lines.extend(f"note: {n}" for n in v.notes)
    return witness, [c.value for c in v.certificates], lines


# -- commands ---------------------------------------------------------------------------


def cmd_riccati(args):
    for src in args.operator:
        L = to_operator(src)
        R = riccati_of(L)
        yield CommandResult("riccati", _canon(src), "Computed", str(R),
                            citations=["Riccati equation of w = y'/y: P_0 = 1, P_(i+1) = P_i' + w P_i"],
                            lines=[str(R)])


def cmd_sympow(args):
    L = to_operator(args.operator)
    S = sym_power(L, args.degree)
    yield CommandResult("sympow", {"operator": _canon(args.operator), "degree": args.degree},
                        "Computed", str(S), citations=["symmetric power: minimal operator for d-fold products"],
                        lines=[str(S)])


def cmd_opmul(args):
    A, B = to_operator(args.left), to_operator(args.right)
    P = A * B
    yield CommandResult("opmul", [_canon(args.left), _canon(args.right)], "Computed", str(P),
                        citations=["Leibniz rule D*a = a*D + a'"], lines=[str(P)])


def cmd_series(args):
    for src in args.operator:
        L = to_operator(src)
        if L.parameters():
            raise UsageError(f"series needs numeric coefficients; found parameters {', '.join(L.parameters())}")
        point = None if args.point is None else _rational_constant(args.point)
        p, basis = series_solutions(L, point, args.truncation)
        shown = [b.format(f"(t - {p})" if p else "t") for b in basis]
        yield CommandResult("series", _canon(src), "Computed",
                            {"point": str(p), "truncation": args.truncation, "basis": shown},
                            citations=["power series at an ordinary point, canonical initial conditions"],
                            lines=[f"point: {p}"] + [f"y{i}: {s}" for i, s in enumerate(shown)])


def cmd_antiderivative(args):
    for src in args.function:
        _, (f,), v = univariate_inputs([src])
        h = hermite_reduce(f)
        g = rational_antiderivative(f)
        cites = ["Hermite reduction"]
        parts = [f"rational part: {h.rational_part}", f"polynomial part: {h.poly_antiderivative}",
                 f"logarithmic part: {h.log_part}"]
        if g is None:
            yield CommandResult("antiderivative", _canon(src), "No", None, ["LogPartNonzero"], cites, parts)
        else:
            yield CommandResult("antiderivative", _canon(src), "Yes", f"u = {g}", [], cites,
                                [f"antiderivative: {g}"] + parts)


def _logderiv_like(name, fn, cites):
    def run(args):
        for src in args.function:
            _, (f,), _ = univariate_inputs([src])
            v = fn(f)
            witness, certs, lines = _verdict_payload(v)
            yield CommandResult(name, _canon(src), v.status.value, witness, certs, cites, lines)
    return run


cmd_logderiv = _logderiv_like("logderiv", is_log_derivative,
                              ["Rothstein-Trager resultant", "integer residues characterize u'/u"])
cmd_scaledlogderiv = _logderiv_like("scaledlogderiv", is_scaled_log_derivative,
                                    ["Rothstein-Trager resultant",
                                     "residues with rational ratios characterize u'/(c u)"])
cmd_rosenlicht = _logderiv_like("rosenlicht", rosenlicht_new_constants,
                                ["Rosenlicht: x' = f(x) has new constants iff 1/f = u' or u'/(c u)"])


def cmd_constants(args):
    _, comps, variables = vector_field_inputs(args.components)
    D = VectorFieldDerivation(variables, comps)
    if not D.is_polynomial():
        raise UsageError("constant search needs polynomial components")
    v = ej_classify(D, args.deg_max, args.pow_max)
    pairs = find_darboux(D, args.deg_max)
    lines = [f"derivation: {' + '.join(f'({c})*d/d{x}' for x, c in zip(variables, comps))}"]
    lines += [f"darboux: {p}" for p in pairs]
    if v.witness is not None:
        w = v.witness
        witness = {"kind": w.kind.value, "z": str(w.z), "c": None if w.c is None else str(w.c)}
        lines.append(f"witness: {w}")
    else:
        witness = None
        lines.append(f"no witness with deg_max = {v.deg_max}, pow_max = {v.pow_max} (not a proof of nonexistence)")
    yield CommandResult("constants", [_canon(s) for s in args.components], v.status.value, witness, [],
                        ["Eagles-Jimenez alternatives: z' = 0, z' = 1 or z' = c z",
                         "Darboux polynomials as denominators"], lines)


def cmd_poizat(args):
    _, (h,), v = univariate_inputs([args.h])
    rep = poizat_classify(h)
    inp = {"h": _canon(args.h)}
    lines = [rep.family_note]
    cites = ["Poizat equation t'' = t' h(t): generic solution iff h has no rational antiderivative"]
    if rep.generic_exists:
        if args.c is not None:
            lines.append("--c ignored: there is no reduced family without an antiderivative")
        yield CommandResult("poizat", inp, "Infinite", None, ["LogPartNonzero"], cites, lines)
        return
    witness = {"g": str(rep.g)}
    if args.c is None:
        yield CommandResult("poizat", inp, "NoGenericSolution", witness, [], cites, lines)
        return
    c = _rational_constant(args.c)
    inp["c"] = str(c)
    fam = reduced_family_classify(rep.g, c)
    lines.append(f"t' = {rep.g} - ({c}): {fam}")
    if fam.witness is not None:
        witness["family"] = str(fam.witness)
    cites.append("Rosenlicht criterion applied to 1/(g - c)")
    yield CommandResult("poizat", inp, fam.status.value, witness, [x.value for x in fam.certificates], cites, lines)


def cmd_lv(args):
    params = [_rational_constant(p) for p in (args.alpha, args.beta, args.gamma, args.delta)]
    res = lotka_volterra_classify(*params)
    inp = {k: str(p) for k, p in zip(("alpha", "beta", "gamma", "delta"), params)}
    lines = [f"derivation: {res.derivation}", res.verdict.reason]
    witness = None
    if res.witness is not None:
        w = res.witness
        witness = {"kind": w.kind.value, "z": str(w.z), "c": str(w.c)}
        lines.append(f"witness: {w}")
    yield CommandResult("lv", inp, res.verdict.status.value, witness, [],
                        ["Lotka-Volterra: infinite solution sets iff alpha != gamma",
                         "Eagles-Jimenez alternatives: z' = 0, z' = 1 or z' = c z"], lines)


def cmd_rosfamily(args):
    trees, coeffs, _ = univariate_inputs(args.coefficients)
    v = rosenlicht_family_classify(coeffs, constant_base=args.constant_base)
    inp = {f"a{i + 2}": to_source(t) for i, t in enumerate(trees)}
    yield CommandResult("rosfamily", inp, v.status.value, None, [c.value for c in v.certificates],
                        ["Rosenlicht family t' + a_n t^n + ... + a_2 t^2 = 0: infinite when neither "
                         "a_2 nor a_3 is a derivative"], [v.reason])


def _group(name: str) -> atlas.GroupDescriptor:
    gs = []
    for p in re.split(r"\s*[x*]\s*", name.strip()):
        u = p.upper()
        if u == "G2":
            gs.append(atlas.G2)
        elif u == "GM":
            gs.append(atlas.GM)
        elif u == "GA":
            gs.append(atlas.GA)
        elif u[:2] in ("SL", "SP", "SO") and u[2:].isdigit():
            gs.append({"SL": atlas.SL, "SP": atlas.SP, "SO": atlas.SO}[u[:2]](int(u[2:])))
        else:
            raise UsageError(f"unknown group {p!r}; use SLn, SPn, SOn, G2, Gm, Ga or products like SL2xSL2")
    return gs[0] if len(gs) == 1 else atlas.product(*gs)


def cmd_atlas(args):
    cites = ["classical dimensions: SL_(r+1): r(r+2), Sp_2m: 2m^2 + m, G2: 14",
             "rank bound r <= tr.deg <= r(r+2)"]
    if args.dim:
        g = _group(args.dim)
        d = atlas.dim_of(g)
        yield CommandResult("atlas", {"dim": g.name}, "Computed", {"dimension": d, "rank": atlas.rank_of(g)},
                            [], cites, [f"dim {g.name} = {d}, rank {atlas.rank_of(g)}"])
        return
    if args.rank_check:
        r, d = args.rank_check
        ok = atlas.rank_bound_check(r, d)
        yield CommandResult("atlas", {"rank": r, "trdeg": d}, "Yes" if ok else "No", None, [], cites,
                            [f"{r} <= {d} <= {r * (r + 2)}: {ok}"])
        return
    if args.g2:
        rep = atlas.g2_counterexample()
        yield CommandResult("atlas", {"g2": True}, "Computed", rep.as_dict(), [], cites,
                            [f"dim G2 - dim SL3 = {rep.dim_g2} - {rep.dim_subgroup} = {rep.trdeg}",
                             f"rank bound {rep.rank} <= {rep.trdeg} <= {rep.rank * (rep.rank + 2)}: "
                             f"{rep.rank_bound_holds}", rep.verdict])
        return
    ds = [args.bound] if args.bound else list(range(1, 7))
    for d in ds:
        v = atlas.solvability_bound(d)
        yield CommandResult("atlas", {"d": d}, "Computed",
                            {"bound_kind": v.bound_kind.value, "candidates": [g.name for g in v.candidate_groups]},
                            [], [v.citation], [str(v)])


# -- argument parsing ------------------------------------------------------------------


def _shield_negatives(argv: list[str]) -> list[str]:
    # "-x1" or "-1" is an expression, not an option: all options here are long
    return [" " + a if len(a) > 1 and a[0] == "-" and a[1] != "-" and a != "-h" else a for a in argv]


def _expand_files(argv: list[str]) -> list[str]:
    out = []
    for a in argv:
        if a.startswith("@") and len(a) > 1:
            try:
                with open(a[1:], encoding="utf-8") as fh:
                    out.extend(line.strip() for line in fh if line.strip() and not line.startswith("#"))
            except OSError as e:
                raise UsageError(f"cannot read {a[1:]}: {e.strerror}") from None
        else:
            out.append(a)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output, one object per line")

    p = _Parser(prog="diffalg", description="Exact differential-algebra decisions over Q(t).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(run=fn)
        return sp

    sp = add("riccati", cmd_riccati, "Riccati polynomial of a linear operator")
    sp.add_argument("operator", nargs="+")
    sp = add("sympow", cmd_sympow, "symmetric power of an operator")
    sp.add_argument("operator")
    sp.add_argument("degree", type=int)
    sp = add("opmul", cmd_opmul, "product of two operators")
    sp.add_argument("left")
    sp.add_argument("right")
    sp = add("series", cmd_series, "power series solution basis")
    sp.add_argument("operator", nargs="+")
    sp.add_argument("--truncation", type=int, default=24)
    sp.add_argument("--point", default=None)
    for name, fn, help in [
        ("antiderivative", cmd_antiderivative, "rational antiderivative (Hermite reduction)"),
        ("logderiv", cmd_logderiv, "is f = u'/u?"),
        ("scaledlogderiv", cmd_scaledlogderiv, "is f = u'/(c u)?"),
        ("rosenlicht", cmd_rosenlicht, "new constants for x' = f(x)"),
    ]:
        sp = add(name, fn, help)
        sp.add_argument("function", nargs="+")
    sp = add("constants", cmd_constants, "bounded search for z' in {0, 1, cz}")
    sp.add_argument("components", nargs="+")
    sp.add_argument("--deg-max", type=int, default=DEFAULT_DEG_MAX)
    sp.add_argument("--pow-max", type=int, default=DEFAULT_POW_MAX)
    sp = add("poizat", cmd_poizat, "t'' = t' h(t) and its reduced family")
    sp.add_argument("--h", required=True)
    sp.add_argument("--c", default=None)
    sp = add("lv", cmd_lv, "Lotka-Volterra solution sets")
    for name in ("alpha", "beta", "gamma", "delta"):
        sp.add_argument(name)
    sp = add("rosfamily", cmd_rosfamily, "t' + a_n t^n + ... + a_2 t^2 = 0")
    sp.add_argument("coefficients", nargs="+", help="a_2 a_3 ... a_n")
    sp.add_argument("--constant-base", action="store_true", help="base field Q with zero derivation")
    sp = add("atlas", cmd_atlas, "group dimensions and solvability bounds")
    sp.add_argument("--bound", type=int, default=None, metavar="D")
    sp.add_argument("--g2", action="store_true")
    sp.add_argument("--dim", default=None, metavar="GROUP")
    sp.add_argument("--rank-check", type=int, nargs=2, metavar=("R", "D"))
    return p


def _positive(args, *names):
    for n in names:
        v = getattr(args, n, None)
        if v is not None and v < 1:
            raise UsageError(f"--{n.replace('_', '-')} must be positive")


def run_command(argv: list[str]) -> tuple[int, list[CommandResult], str]:
    """Run one invocation; returns ``(exit_code, results, error_message)``."""
    try:
        argv = _expand_files(list(argv))
    except UsageError as e:
        return 1, [], str(e)
    parser = build_parser()
    try:
        args = parser.parse_args(_shield_negatives(argv))
    except SystemExit as e:
        return int(e.code or 0), [], ""
    try:
        _positive(args, "deg_max", "pow_max", "truncation", "degree", "bound")
        results = list(args.run(args))
    except ParseError as e:
        return 1, [], f"parse error: {e}"
    except (UsageError, ValueError, SeriesError, ZeroDivisionError) as e:
        return 1, [], f"error: {e}"
    code = max((r.exit_code for r in results), default=0)
    return code, results, ""


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, results, err = run_command(argv)
    as_json = "--json" in argv
    for i, r in enumerate(results):
        if as_json:
            print(r.as_json())
        else:
            if i:
                print()
            print(r.as_text())
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
