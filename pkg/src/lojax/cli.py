"""Command-line interface: ``lojax <command> ...``.

Ideals are given either inline (``"x^4, x*y, y^4"`` or a JSON exponent list
``"[[5,0],[0,5]]"``) or by name from an ``--input`` file of the form
``{"variables": [...], "ideals": {"NAME": [generator, ...]}}``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from .errors import InvalidInput, LimitExceeded, NotApplicable, NotStabilized
from .filtration import build_filtration
from .geometry import Rational
from .lojasiewicz import LojaReport, build_K_ideals, loja_sequence
from .multiplicity import MultiplicityTable, mixed_sequence, rees_sigma, samuel_multiplicity
from .newton import MonomialIdeal, NewtonPolyhedron, closure_generators, newton_polyhedron
from .relations import HickelReport, check_nondegenerate, hickel_report, inequality_suite

SCHEMA_VERSION = "lojax-report/1"

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<num>\d+)|(?P<op>[\^*,+-])|(?P<bad>\S))")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _natural_key(name: str):
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


def identifiers(text: str) -> list[str]:
    return re.findall(r"[A-Za-z_][A-Za-z_0-9]*", text)


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def parse_monomials(text: str, variables: Sequence[str]) -> list[tuple[int, ...]]:
    """Exponent vectors of a comma-separated list of monomials; coefficients are ignored."""
    index = {v: i for i, v in enumerate(variables)}
    toks = _tokens(text)
    gens = []
    at = 0

    def peek():
        return toks[at]

    while True:
        exps = [0] * len(variables)
        while peek()[0] == "op" and peek()[1] in "+-":
            at += 1
        while True:
            kind, value, pos = peek()
            if kind == "ident":
                if value not in index:
                    raise InvalidInput(f"unknown variable {value!r}", pos)
                at += 1
                power = 1
                if peek()[:2] == ("op", "^"):
                    at += 1
                    kind2, value2, pos2 = peek()
                    if kind2 == "op" and value2 == "-":
                        raise InvalidInput("negative exponent", pos2)
                    if kind2 != "num":
                        raise InvalidInput("expected an exponent after '^'", pos2)
                    power = int(value2)
                    at += 1
                exps[index[value]] += power
            elif kind == "num":
                at += 1
            elif kind == "bad":
                raise InvalidInput(f"unexpected character {value!r}", pos)
            else:
                raise InvalidInput("expected a variable or coefficient", pos)
            if peek()[:2] == ("op", "*"):
                at += 1
                continue
            break
        gens.append(tuple(exps))
        kind, value, pos = peek()
        if kind == "end":
            break
        if (kind, value) != ("op", ","):
            raise InvalidInput(f"expected ',' between generators, found {value!r}", pos)
        at += 1
    return gens


def parse_ideal(source: Any, variables: Sequence[str]) -> MonomialIdeal:
    """Ideal from a monomial string, a list of monomial strings, or a list of exponent rows."""
    n = len(variables)
    if isinstance(source, str):
        stripped = source.strip()
        if stripped.startswith("["):
            try:
                source = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise InvalidInput(f"malformed exponent list: {exc.msg}", exc.pos) from None
        else:
            if not stripped:
                raise InvalidInput("empty generator list", 0)
            return MonomialIdeal(n, tuple(parse_monomials(source, variables)), tuple(variables))
    if not isinstance(source, list) or not source:
        raise InvalidInput("an ideal needs a non-empty list of generators")
    gens = []
    for position, g in enumerate(source):
        if isinstance(g, str):
            gens.extend(parse_monomials(g, variables))
        elif isinstance(g, list):
            if len(g) != n:
                raise InvalidInput(f"exponent row {g} does not have {n} entries", position)
            if any(not isinstance(c, int) or isinstance(c, bool) for c in g):
                raise InvalidInput(f"exponent row {g} must contain integers", position)
            if any(c < 0 for c in g):
                raise InvalidInput(f"negative exponent in row {g}", position)
            gens.append(tuple(g))
        else:
            raise InvalidInput(f"generator {g!r} is neither a monomial string nor an exponent row", position)
    return MonomialIdeal(n, tuple(gens), tuple(variables))


def default_variables(n: int) -> list[str]:
    return list("xyz"[:n]) if n <= 3 else [f"x{i}" for i in range(1, n + 1)]


def format_monomial(exps: Sequence[int], variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def q(x: Rational | None) -> str | None:
    if x is None:
        return None
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def point_json(p) -> list[str]:
    return [q(c) for c in p]


def ideal_json(I: MonomialIdeal, variables: Sequence[str]) -> list[str]:
    return [format_monomial(g, variables) for g in I.generators]


def newton_json(P: NewtonPolyhedron) -> dict:
    faces = P.compact_faces
    return {
        "vertices": [point_json(v) for v in P.vertices],
        "facets": [{"normal": list(f.normal), "offset": q(f.offset)} for f in P.facets],
        "compact_faces": [
            {"dim": f.dim, "vertices": [point_json(v) for v in f.vertices]} for f in faces
        ],
        "axis_intercepts": [q(t) for t in P.axis_intercepts],
        "convenient": P.convenient,
    }


def filtration_json(J: MonomialIdeal) -> dict:
    F = build_filtration(J)
    out = {
        "M_J": q(F.M),
        "pieces": [{"normal": list(p.normal), "level": q(p.level), "multiplier": q(p.multiplier)} for p in F.pieces],
        "diagonal": None,
    }
    if F.diagonal is not None:
        d = F.diagonal
        out["diagonal"] = {
            "exponents": list(d.exponents),
            "w_J": list(d.weights),
            "w0": d.w0,
            "v_J": list(d.v),
        }
    return out


def table_json(t: MultiplicityTable) -> dict:
    return {
        "e_I": q(t.e_I),
        "e_J": q(t.e_J),
        "mixed": {str(i): q(v) for i, v in enumerate(t.mixed)},
        "covolumes": [{"I": a, "J": b, "covolume": q(v)} for (a, b), v in t.covolumes],
    }


def loja_json(r: LojaReport) -> dict:
    return {
        "n": r.n,
        "M_J": q(r.M),
        "a": {str(i + 1): q(v) for i, v in enumerate(r.a)},
        "c_J": q(r.c),
        "L": {str(i): {"value": q(r.L[i].value), "kind": r.L[i].kind.value} for i in range(r.n, 0, -1)},
        "exponent": q(r.exponent),
        "inclusion": r.inclusion,
        "diagonal": r.diagonal,
        "notes": list(r.notes),
    }


def hickel_json(h: HickelReport) -> dict:
    return {
        "ratio_e": q(h.ratio_e),
        "product_L": q(h.product_L),
        "product_a": q(h.product_a),
        "is_hickel": h.is_hickel.value,
        "gap": q(h.gap),
        "equality_in_a_bound": h.equality_58,
        "per_i": [
            {
                "i": c.i,
                "ratio": q(c.ratio),
                "L": q(c.L),
                "kind": c.kind.value,
                "satisfied": c.satisfied,
                "equality": c.equality,
            }
            for c in h.per_i
        ],
    }


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------

def render_text(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(lines)


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "(" + ", ".join(_scalar(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{}"
    return str(v)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

class Context:
    """Variables and named ideals available to a command."""

    def __init__(self, args: argparse.Namespace):
        self.named: dict[str, Any] = {}
        self.variables: list[str] | None = None
        if args.input:
            try:
                with open(args.input, encoding="utf-8") as fh:
                    data = json.load(fh)
            except OSError as exc:
                raise InvalidInput(f"cannot read {args.input}: {exc.strerror}") from None
            except json.JSONDecodeError as exc:
                raise InvalidInput(f"malformed JSON in {args.input}: {exc.msg}", exc.pos) from None
            if not isinstance(data, dict) or not isinstance(data.get("ideals"), dict):
                raise InvalidInput("input file needs an 'ideals' object")
            self.named = data["ideals"]
            if "variables" in data:
                self.variables = list(data["variables"])
        if args.vars:
            self.variables = [v.strip() for v in args.vars.split(",") if v.strip()]
        sources = [s for s in _inline_sources(args) if s not in self.named]
        if self.variables is None:
            self.variables = self._infer(sources)
        names = self.variables
        if len(set(names)) != len(names) or any(not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v) for v in names):
            raise InvalidInput(f"variable names {names} must be unique identifiers")
        self.labels: dict[str, str] = {}

    def _infer(self, sources: Sequence[str]) -> list[str]:
        found = set()
        width = None
        for s in sources:
            if s.strip().startswith("["):
                try:
                    rows = json.loads(s)
                except json.JSONDecodeError:
                    continue
                if rows and isinstance(rows[0], list):
                    width = len(rows[0])
            else:
                found.update(identifiers(s))
        for source in self.named.values():
            for g in source if isinstance(source, list) else [source]:
                if isinstance(g, str):
                    found.update(identifiers(g))
                elif isinstance(g, list):
                    width = len(g)
        if found:
            return sorted(found, key=_natural_key)
        if width is None:
            raise InvalidInput("cannot infer variables; pass --vars")
        return default_variables(width)

    def ideal(self, text: str, label: str) -> MonomialIdeal:
        self.labels[label] = text if text in self.named else label
        return parse_ideal(self.named.get(text, text), self.variables)


def _inline_sources(args) -> list[str]:
    out = []
    for key in ("ideal", "ideal_J"):
        if getattr(args, key, None):
            out.append(getattr(args, key))
    out.extend(getattr(args, "pair", None) or [])
    out.extend(getattr(args, "ideals", None) or [])
    return out


def _pair(ctx: Context, args) -> tuple[MonomialIdeal, MonomialIdeal]:
    if args.pair:
        return ctx.ideal(args.pair[0], "I"), ctx.ideal(args.pair[1], "J")
    if args.ideal and args.ideal_J:
        return ctx.ideal(args.ideal, "I"), ctx.ideal(args.ideal_J, "J")
    raise InvalidInput("this command needs --pair I J or both --ideal and --ideal-J")


def _single(ctx: Context, args) -> MonomialIdeal:
    if args.ideal:
        return ctx.ideal(args.ideal, "I")
    if args.pair:
        return ctx.ideal(args.pair[0], "I")
    raise InvalidInput("this command needs --ideal")


def _echo(ctx: Context, ideals: dict[str, MonomialIdeal]) -> dict:
    return {
        "variables": list(ctx.variables),
        "ideals": {name: ideal_json(I, ctx.variables) for name, I in ideals.items()},
    }


def _parse_point(text: str, n: int) -> tuple[Fraction, ...]:
    try:
        coords = tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"malformed point {text!r}") from None
    if len(coords) != n:
        raise InvalidInput(f"point {text!r} needs {n} coordinates")
    if any(c < 0 for c in coords):
        raise InvalidInput(f"point {text!r} has a negative coordinate")
    return coords


def cmd_newton(ctx, args):
    I = _single(ctx, args)
    return {"input": _echo(ctx, {"I": I}), "newton": newton_json(newton_polyhedron(I))}, 0


def cmd_closure(ctx, args):
    I = _single(ctx, args)
    return {"input": _echo(ctx, {"I": I}), "closure": ideal_json(closure_generators(I), ctx.variables)}, 0


def cmd_mult(ctx, args):
    I = _single(ctx, args)
    return {"input": _echo(ctx, {"I": I}), "e": q(samuel_multiplicity(I))}, 0


def cmd_mixed(ctx, args):
    I, J = _pair(ctx, args)
    table = mixed_sequence(I, J, cross_check=args.cross_check)
    return {"input": _echo(ctx, {"I": I, "J": J}), "multiplicities": table_json(table)}, 0


def cmd_sigma(ctx, args):
    if not args.ideals:
        raise InvalidInput("sigma needs --ideals")
    ideals = [ctx.ideal(s, f"I{k + 1}") for k, s in enumerate(args.ideals)]
    echo = _echo(ctx, {f"I{k + 1}": I for k, I in enumerate(ideals)})
    if args.ideal_J:
        J = ctx.ideal(args.ideal_J, "J")
        check = check_nondegenerate(ideals, J, cap=args.cap)
        if check.sigma is None:
            raise NotStabilized("sigma did not stabilize before the cap; it may be infinite")
        return {"input": echo, "sigma": q(check.sigma), "lower_bound": q(check.bound), "nondegenerate": check.verdict.value}, 0
    return {"input": echo, "sigma": q(rees_sigma(ideals, cap=args.cap))}, 0


def cmd_phi(ctx, args):
    source = args.ideal_J or args.ideal
    if not source:
        raise InvalidInput("phi needs --ideal-J")
    if not args.point:
        raise InvalidInput("phi needs --point")
    J = ctx.ideal(source, "J")
    F = build_filtration(J)
    point = _parse_point(args.point, J.num_vars)
    return {"input": _echo(ctx, {"J": J}), "point": point_json(point), "M_J": q(F.M), "phi": q(F.phi(point))}, 0


def cmd_loja(ctx, args):
    I, J = _pair(ctx, args)
    report = loja_sequence(I, J)
    out = {"input": _echo(ctx, {"I": I, "J": J}), "loja": loja_json(report)}
    code = 0
    if not report.all_exact and not args.bounds_ok:
        code = 2
    return out, code


def cmd_kideals(ctx, args):
    I, J = _pair(ctx, args)
    Ks = build_K_ideals(I, J)
    report = loja_sequence(I, J)
    out = {
        "input": _echo(ctx, {"I": I, "J": J}),
        "c_J": q(report.c),
        "M_J": q(report.M),
        "K": [{"i": i + 1, "level": q(report.c * report.M * report.a[i]), "generators": ideal_json(K, ctx.variables)} for i, K in enumerate(Ks)],
    }
    if args.check:
        check = check_nondegenerate(Ks, J, cap=args.cap)
        if check.sigma is None:
            raise NotStabilized("sigma did not stabilize before the cap; it may be infinite")
        out["sigma"] = q(check.sigma)
        out["lower_bound"] = q(check.bound)
        out["nondegenerate"] = check.verdict.value
    return out, 0


def cmd_hickel(ctx, args):
    I, J = _pair(ctx, args)
    h = hickel_report(I, J, cross_check=args.cross_check)
    return {"input": _echo(ctx, {"I": I, "J": J}), "hickel": hickel_json(h)}, 0


def cmd_report(ctx, args):
    I, J = _pair(ctx, args)
    h = hickel_report(I, J, cross_check=args.cross_check)
    checks = inequality_suite(I, J)
    warnings = list(h.loja.notes)
    failed = [c.name for c in checks if not c.passed]
    if failed:
        warnings.append("failed checks: " + ", ".join(failed))
    return {
        "schema_version": SCHEMA_VERSION,
        "input": _echo(ctx, {"I": I, "J": J}),
        "newton": {"I": newton_json(newton_polyhedron(I)), "J": newton_json(newton_polyhedron(J))},
        "filtration": filtration_json(J),
        "multiplicities": table_json(h.table),
        "loja": loja_json(h.loja),
        "hickel": hickel_json(h),
        "checks": [
            {"name": c.name, "lhs": q(c.lhs), "relation": c.relation, "rhs": q(c.rhs), "passed": c.passed}
            for c in checks
        ],
        "warnings": warnings,
    }, 0


COMMANDS = {
    "newton": (cmd_newton, "dump the Newton polyhedron of an ideal"),
    "closure": (cmd_closure, "generators of the integral closure"),
    "mult": (cmd_mult, "Samuel multiplicity"),
    "mixed": (cmd_mixed, "mixed multiplicities e_0..e_n of a pair"),
    "sigma": (cmd_sigma, "Rees mixed multiplicity of n ideals"),
    "phi": (cmd_phi, "filtration value of a point"),
    "loja": (cmd_loja, "sequence of mixed exponents of a pair"),
    "kideals": (cmd_kideals, "level-set ideals attached to a pair"),
    "hickel": (cmd_hickel, "multiplicity ratio against the product of exponents"),
    "report": (cmd_report, "everything above for a pair"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lojax", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--input", help="JSON file with variables and named ideals")
        p.add_argument("--vars", help="comma-separated variable names")
        p.add_argument("--ideal", help="ideal (inline or a name from --input)")
        p.add_argument("--ideal-J", dest="ideal_J", help="second ideal J (inline or a name)")
        p.add_argument("--pair", nargs=2, metavar=("I", "J"), help="the pair (I, J)")
        if name == "sigma":
            p.add_argument("--ideals", nargs="+", help="n ideals")
        if name in ("sigma", "kideals"):
            p.add_argument("--cap", type=int, default=None, help="stabilization cap (default: LOJAX_SIGMA_CAP or 64)")
        if name == "kideals":
            p.add_argument("--check", action="store_true", help="also test non-degeneracy of the tuple")
        if name == "phi":
            p.add_argument("--point", help="comma-separated rationals, e.g. 5/2,5/2")
        if name == "loja":
            p.add_argument("--bounds-ok", dest="bounds_ok", action="store_true", help="exit 0 even when some entries are only bounds")
        if name in ("mixed", "hickel", "report"):
            p.add_argument("--cross-check", dest="cross_check", action="store_true", help="recompute mixed multiplicities by polynomial fitting")
    return parser


def run_command(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        ctx = Context(args)
        out, code = COMMANDS[args.command][0](ctx, args)
    except NotApplicable as exc:
        print(f"not applicable: {exc}", file=stderr)
        return 2
    except LimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=stderr)
        return 3
    except InvalidInput as exc:
        print(f"input error: {exc}", file=stderr)
        return 1
    if args.format == "json":
        stdout.write(json.dumps(out, indent=2, ensure_ascii=False) + "\n")
    else:
        stdout.write(render_text(out) + "\n")
    if code == 2:
        print("not applicable: some entries are upper bounds or absent; pass --bounds-ok to accept them", file=stderr)
    return code


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
