"""Command-line front end.

Every subcommand builds a report dict ``{command, inputs, results, warnings}``
and prints it as ``key: value`` text or as JSON with sorted keys, so equal
inputs always produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .diagram import (
    Diagram,
    Partition,
    diagonal_profile,
    diagram_to_partition,
    inner_corners,
    outer_corners,
    partition_sum,
    partition_to_diagram,
)
from .errors import DimensionError, ParseError, UnknownVariable, YoungError
from .families import (
    FamilySetup,
    flatness_check,
    generic_fiber_ideal,
    intersection_structure,
    special_fiber_ideal,
)
from .hilbert import (
    hilbert_equivalent,
    hilbert_function,
    hilbert_polynomial,
    multiplicity,
    structure_decomposition,
)
from .ideal import (
    MonomialIdeal,
    VariableList,
    diagram_from_ideal,
    filtration_layers,
    format_ideal,
    ideal_from_diagram,
    is_cm_structure,
    s1_filtration,
)
from .oracle import degree_table, interpolate_polynomial, stabilization_bound
from .resolution import (
    degree_pair,
    format_resolution,
    hilbert_scheme_dimension,
    reduce_pair,
    resolution_equivalent,
    same_component,
    validate_pair,
)


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_digits(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]


def parse_ideal(text: str, vars: VariableList) -> MonomialIdeal:
    """Parse ``"x^4, x^3*y^2, x^2 y^3, y^4"`` into a minimalized ideal.

    A monomial is a product of factors ``NAME`` or ``NAME^k``, joined by
    ``*`` or whitespace; a name is a letter followed by optional digits.
    ``1`` stands for the unit monomial.
    """
    lex = _Lexer(text)
    gens = []
    while True:
        gens.append(_parse_monomial(lex, vars))
        c = lex.peek()
        if c == "":
            break
        if c != ",":
            raise ParseError(f"expected ',' or end of input, found {c!r}", lex.pos)
        lex.pos += 1
    return MonomialIdeal(vars, frozenset(gens))


def _parse_monomial(lex, vars):
    exps = [0] * len(vars)
    c = lex.peek()
    if c == "1":
        lex.pos += 1
        if lex.peek() not in ("", ","):
            raise ParseError("the unit monomial 1 must stand alone", lex.pos)
        return tuple(exps)
    if not c.isalpha():
        raise ParseError(f"expected a variable name, found {c or 'end of input'!r}", lex.pos)
    while True:
        start = lex.pos
        name = lex.text[lex.pos]
        lex.pos += 1
        name += lex.take_digits()
        if name not in vars.names:
            raise UnknownVariable(f"unknown variable {name!r} at position {start}")
        power = 1
        if lex.peek() == "^":
            lex.pos += 1
            lex.skip()
            digits = lex.take_digits()
            if not digits:
                raise ParseError("expected an exponent after '^'", lex.pos)
            power = int(digits)
        exps[vars.index(name)] += power
        c = lex.peek()
        if c == "*":
            lex.pos += 1
            c = lex.peek()
            if not c.isalpha():
                raise ParseError("expected a variable name after '*'", lex.pos)
        elif not c.isalpha():
            return tuple(exps)


def render_diagram(d: Diagram) -> str:
    """2D: rows of ``[]`` from the top row down. 3D: one block per layer ``k``."""
    if d.dim == 2:
        rows = diagram_to_partition(d).parts
        return "\n".join("[]" * r for r in reversed(rows))
    if d.dim == 3:
        return "\n".join(f"k={k}:\n{render_diagram(layer)}" for k, layer in enumerate(d.layers()))
    raise DimensionError(f"cannot render a {d.dim}-dimensional diagram as text")


# --- report helpers ---------------------------------------------------------

def _boxes(d: Diagram) -> list:
    return [list(b) for b in sorted(d.boxes)]


def _diagram_json(d: Diagram) -> dict:
    out = {"dim": d.dim, "size": len(d), "boxes": _boxes(d)}
    if d.dim == 2:
        out["partition"] = list(diagram_to_partition(d).parts)
    return out


def _poly_json(p) -> dict:
    return {"text": p.format(), "coeffs": p.to_json()}


def _text_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict) and "text" in value:
        return value["text"]
    if isinstance(value, dict) and "partition" in value:
        return "(" + ",".join(str(p) for p in value["partition"]) + ")"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
        return
    for key, value in report["results"].items():
        if isinstance(value, str) and "\n" in value:
            out.write(f"{key}:\n{value}\n")
        else:
            out.write(f"{key}: {_text_value(value)}\n")
    for w in report["warnings"]:
        out.write(f"warning: {w}\n")


class _UsageError(Exception):
    pass


def _vars(args):
    if not getattr(args, "vars", None):
        return None
    return VariableList.parse(args.vars, args.codim)


def _support_dim(args):
    if getattr(args, "n", None) is not None:
        return args.n
    vl = _vars(args)
    if vl is None:
        raise _UsageError("--n is required when --vars is not given")
    return vl.support_count - 1


def _input_diagram(args, inputs):
    """The structure named by ``--partition`` or ``--ideal``/``--vars``."""
    if getattr(args, "partition", None) is not None:
        inputs["partition"] = args.partition
        return partition_to_diagram(Partition.parse(args.partition))
    if getattr(args, "ideal", None) is not None:
        vl = _vars(args)
        if vl is None:
            raise _UsageError("--ideal needs --vars")
        inputs.update(ideal=args.ideal, vars=list(vl.names), codim=vl.codim)
        return diagram_from_ideal(parse_ideal(args.ideal, vl))
    raise _UsageError("give --partition or --ideal")


def _default_vars(d: Diagram, n: int) -> VariableList:
    return VariableList.standard(d.dim, n + 1)


# --- subcommands ------------------------------------------------------------

def cmd_diagram(args, inputs, results, warnings):
    d = _input_diagram(args, inputs)
    results["diagram"] = _diagram_json(d)
    if d.dim in (2, 3):
        results["picture"] = render_diagram(d)
    results["multiplicity"] = len(d)
    results["diagonal_profile"] = list(diagonal_profile(d))
    results["inner_corners"] = [list(c) for c in sorted(inner_corners(d))]
    if d.dim == 2:
        results["outer_corners"] = [list(c) for c in sorted(outer_corners(d))]


def cmd_ideal(args, inputs, results, warnings):
    d = _input_diagram(args, inputs)
    vl = _vars(args) or VariableList.standard(d.dim, 2)
    ideal = ideal_from_diagram(d, vl)
    results["ideal"] = format_ideal(ideal)
    results["cm_structure"] = is_cm_structure(ideal)
    results["diagram"] = _diagram_json(d)
    results["s1_filtration"] = [
        list(diagram_to_partition(t).parts) if d.dim == 2 else _boxes(t)
        for t in s1_filtration(d)
    ]
    results["filtration_layers"] = [
        {"level": layer.level, "twists": list(layer.twists)} for layer in filtration_layers(d)
    ]


def cmd_hilbert(args, inputs, results, warnings):
    d = _input_diagram(args, inputs)
    n = _support_dim(args)
    inputs["n"] = n
    max_d = args.max_d if args.max_d is not None else max(d.max_weight, 0) + 3
    results["hilbert_polynomial"] = _poly_json(hilbert_polynomial(d, n))
    results["multiplicity"] = multiplicity(d)
    results["hilbert_function"] = [hilbert_function(d, n, k) for k in range(max_d + 1)]
    results["structure_sheaf"] = str(structure_decomposition(d, n))
    results["box_weights"] = list(structure_decomposition(d, n).weights)


def cmd_resolution(args, inputs, results, warnings):
    d = _input_diagram(args, inputs)
    p = degree_pair(d)
    results["resolution"] = format_resolution(p)
    results["degree_pair"] = p.to_json()
    results["valid"] = validate_pair(p)
    results["reduced_pair"] = reduce_pair(p).to_json()


def cmd_hilbdim(args, inputs, results, warnings):
    d = _input_diagram(args, inputs)
    n = _support_dim(args)
    inputs["n"] = n
    results["hilbert_scheme_dimension"] = hilbert_scheme_dimension(d, n)


def cmd_equiv(args, inputs, results, warnings):
    inputs.update(a=args.a, b=args.b)
    a = partition_to_diagram(Partition.parse(args.a))
    b = partition_to_diagram(Partition.parse(args.b))
    results["R"] = hilbert_equivalent(a, b)
    if a and b:
        results["r"] = resolution_equivalent(a, b)
    else:
        warnings.append("r needs nonempty diagrams")
    results["same_component"] = same_component(a, b)


def _lam_mu(args, inputs):
    inputs.update(lam=args.lam, mu=args.mu)
    return Partition.parse(args.lam), Partition.parse(args.mu)


def cmd_sum(args, inputs, results, warnings):
    lam, mu = _lam_mu(args, inputs)
    s = partition_sum(lam, mu)
    results["sum"] = str(s)
    results["picture"] = render_diagram(partition_to_diagram(s))
    results["ideal"] = format_ideal(ideal_from_diagram(
        partition_to_diagram(s), VariableList(("x", "y"), 2)))


def cmd_intersect(args, inputs, results, warnings):
    lam, mu = _lam_mu(args, inputs)
    d = intersection_structure(FamilySetup(lam, mu, 0))
    results["size"] = len(d)
    results["layers"] = [list(diagram_to_partition(layer).parts) for layer in d.layers()]
    results["picture"] = render_diagram(d)
    results["boxes"] = _boxes(d)


def cmd_flat_check(args, inputs, results, warnings):
    lam, mu = _lam_mu(args, inputs)
    inputs["n"] = args.n
    f = FamilySetup(lam, mu, args.n)
    r = flatness_check(f)
    results["hilb_lam"] = _poly_json(r.hilb_lam)
    results["hilb_mu"] = _poly_json(r.hilb_mu)
    results["hilb_intersection"] = _poly_json(r.hilb_intersection)
    results["hilb_sum"] = _poly_json(r.hilb_sum)
    results["generic_fiber"] = format_ideal(generic_fiber_ideal(f))
    results["special_fiber"] = format_ideal(special_fiber_ideal(f))
    results["intersection_layers"] = render_diagram(intersection_structure(f))
    results["status"] = "PASS" if r.holds else "FAIL"


def cmd_oracle(args, inputs, results, warnings):
    vl = _vars(args)
    if vl is None:
        raise _UsageError("oracle needs --vars")
    ideal = parse_ideal(args.ideal, vl)
    inputs.update(ideal=args.ideal, vars=list(vl.names), codim=vl.codim, max_d=args.max_d)
    n = vl.support_count - 1
    if args.start is not None:
        start = args.start
    elif is_cm_structure(ideal):
        start = max(diagram_from_ideal(ideal).max_weight, 0)
    else:
        start = stabilization_bound(ideal)
        warnings.append(f"not a CM structure; interpolating from the bound {start}")
    degree_bound = len(vl) - 1
    top = max(args.max_d, start + degree_bound + 1)
    table = degree_table(ideal, top)
    results["degree_table"] = table[:args.max_d + 1]
    results["interpolation_start"] = start
    results["hilbert_polynomial"] = _poly_json(interpolate_polynomial(table, start, degree_bound))
    if n >= 0 and is_cm_structure(ideal):
        results["formula_agrees"] = table == [
            hilbert_function(diagram_from_ideal(ideal), n, k) for k in range(top + 1)]


COMMANDS = {
    "diagram": cmd_diagram,
    "ideal": cmd_ideal,
    "hilbert": cmd_hilbert,
    "resolution": cmd_resolution,
    "hilbdim": cmd_hilbdim,
    "equiv": cmd_equiv,
    "sum": cmd_sum,
    "intersect-structures": cmd_intersect,
    "flat-check": cmd_flat_check,
    "oracle": cmd_oracle,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="youngcm", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    structure = _Parser(add_help=False)
    structure.add_argument("--partition", help="e.g. 4,4,3,2")
    structure.add_argument("--ideal", help='e.g. "x^5, x^4*y, y^2"')
    structure.add_argument("--vars", help="e.g. x,y,z,w")
    structure.add_argument("--codim", type=int, default=2)
    pair = _Parser(add_help=False)
    pair.add_argument("--lam", required=True)
    pair.add_argument("--mu", required=True)

    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("diagram", parents=[common, structure], help="corners and picture")
    sub.add_parser("ideal", parents=[common, structure], help="ideal and S1-filtration")
    p = sub.add_parser("hilbert", parents=[common, structure], help="Hilbert polynomial/function")
    p.add_argument("--n", type=int)
    p.add_argument("--max-d", type=int)
    sub.add_parser("resolution", parents=[common, structure], help="minimal free resolution")
    p = sub.add_parser("hilbdim", parents=[common, structure], help="Hilbert scheme dimension")
    p.add_argument("--n", type=int)
    p = sub.add_parser("equiv", parents=[common], help="compare two partitions")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    sub.add_parser("sum", parents=[common, pair], help="partswise sum")
    sub.add_parser("intersect-structures", parents=[common, pair], help="3D intersection diagram")
    p = sub.add_parser("flat-check", parents=[common, pair], help="flatness identity")
    p.add_argument("--n", type=int, default=1)
    p = sub.add_parser("oracle", parents=[common], help="brute-force degree table")
    p.add_argument("--ideal", required=True)
    p.add_argument("--vars", required=True)
    p.add_argument("--codim", type=int, default=2)
    p.add_argument("--max-d", type=int, default=10)
    p.add_argument("--start", type=int)
    return parser


def run(argv=None, out=None, err=None) -> int:
    """Run one subcommand; 0 on success, 1 on a domain error, 2 on bad usage."""
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    if args.command is None:
        parser.print_help(err)
        return 2
    inputs, results, warnings = {}, {}, []
    try:
        COMMANDS[args.command](args, inputs, results, warnings)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except (YoungError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    report = {"command": args.command, "inputs": inputs, "results": results, "warnings": warnings}
    _emit(report, args.format, out)
    return 0


def main() -> None:
    sys.exit(run())
