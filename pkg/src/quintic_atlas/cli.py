"""Command-line surface: construct catalogue members, compute invariants,
classify, test smoothness, and run the liaison pipeline on ideal files.

Ideal file format (text, canonical writes round-trip byte-identically)::

    # optional comment lines
    field: GF(32003)          (or: field: Q)
    vars: x0 x1 x2 x3
    x0*x2 + x1*x3
    x0^2*x3 + ...             (one generator per line, poly grammar)

The format carries saturated homogeneous ideals; pass ``--saturate`` to
force re-saturation of untrusted input.  Exit codes: 0 success, 2 input
error, 3 computation budget or genericity failure.  The seed comes from
``--seed`` or the QUINTIC_ATLAS_SEED environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import constructors
from .classifier import ClassificationInputError, classify
from .constructors import (Cone, ConstructionRecipe, ExampleLinkedQuintic,
                           Grassmannian14, LinearSection, LinkedQuintic,
                           QuinticHypersurface, RationalNormalCurve, Scroll,
                           build)
from .geometry import is_smooth, verify_linkage
from .ideal_ops import (GenericityError, Ideal, ideal_colon, irrelevant_ideal,
                        saturate)
from .invariants import (BudgetExceededError, DEFAULT_DEGREE_BUDGET,
                         compute_invariants)
from .poly import (QQ, Field, ParseError, QuinticAtlasError, Ring,
                   format_polynomial, parse_field_spec, parse_polynomial)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    max_degree_budget: int = DEFAULT_DEGREE_BUDGET
    slice_retries: int = 8
    output: str = "text"

    def __post_init__(self):
        if self.max_degree_budget <= 0 or self.slice_retries <= 0:
            raise ValueError("budgets must be positive")


# ---------------------------------------------------------------------------
# ideal files
# ---------------------------------------------------------------------------

def write_ideal_text(ideal: Ideal) -> str:
    lines = [f"field: {ideal.ring.field.describe()}",
             "vars: " + " ".join(ideal.ring.variables)]
    lines.extend(format_polynomial(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"


def read_ideal_text(text: str, *, trusted: bool = True) -> Ideal:
    field = None
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("field:"):
            if field is not None:
                raise ValueError(f"line {lineno}: duplicate field line")
            field = parse_field_spec(line[len("field:"):])
            continue
        if line.startswith("vars:"):
            if field is None:
                raise ValueError(f"line {lineno}: vars line before field line")
            if ring is not None:
                raise ValueError(f"line {lineno}: duplicate vars line")
            names = tuple(line[len("vars:"):].split())
            ring = Ring(names, field)
            continue
        if ring is None:
            raise ValueError(f"line {lineno}: generator before header lines")
        try:
            gens.append(parse_polynomial(line, ring))
        except ParseError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    if ring is None:
        raise ValueError("missing 'field:' / 'vars:' header lines")
    ideal = Ideal(ring, gens, saturated=True if trusted else None)
    if not ideal.is_homogeneous():
        raise ValueError("ideal file must contain homogeneous generators")
    return ideal


def read_ideal_file(path: str, *, trusted: bool = True) -> Ideal:
    with open(path, "r", encoding="ascii") as fh:
        return read_ideal_text(fh.read(), trusted=trusted)


def write_ideal_file(ideal: Ideal, path: str):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(write_ideal_text(ideal))


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _parse_field_flag(text: str) -> Field:
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    if t in ("gf32003", "default"):
        return constructors.DEFAULT_FIELD
    if t.startswith("gf"):
        body = t[2:].strip("():")
        if body.isdigit():
            return parse_field_spec(f"GF({body})")
    if t.isdigit():
        return parse_field_spec(f"GF({t})")
    raise ValueError(f"cannot parse field {text!r} (try q, gf32003, gf:101)")


def _base_kind(args) -> object:
    name = args.base
    if name == "rnc":
        return RationalNormalCurve()
    if name == "grassmannian14":
        return Grassmannian14()
    if name == "hypersurface":
        return QuinticHypersurface(args.base_n)
    if name == "scroll":
        if not args.base_partition:
            raise ValueError("--base scroll needs --base-partition")
        return Scroll(tuple(int(a) for a in args.base_partition.split(",")))
    raise ValueError(f"unsupported cone/section base {name!r}")


def _recipe_from_args(args, field: Field, seed: int) -> ConstructionRecipe:
    kind_name = args.kind
    if kind_name == "hypersurface":
        kind = QuinticHypersurface(args.n)
    elif kind_name == "rnc":
        kind = RationalNormalCurve()
    elif kind_name == "scroll":
        if not args.partition:
            raise ValueError("--kind scroll needs --partition, e.g. 1,1,3")
        kind = Scroll(tuple(int(a) for a in args.partition.split(",")))
    elif kind_name == "grassmannian14":
        kind = Grassmannian14()
    elif kind_name == "g14-section":
        kind = LinearSection(Grassmannian14(), args.cuts)
    elif kind_name == "linked":
        kind = LinkedQuintic(args.rank, args.n)
    elif kind_name == "linked-example":
        kind = ExampleLinkedQuintic(args.rank)
    elif kind_name == "cone":
        kind = Cone(_base_kind(args), args.s)
    else:
        raise ValueError(f"unknown construction kind {kind_name!r}")
    kind.validate()
    return ConstructionRecipe(kind=kind, field=field, seed=seed)


def _load(args, config: RunConfig) -> Ideal:
    ideal = read_ideal_file(args.path, trusted=not args.saturate)
    if args.saturate:
        ideal, _ = saturate(ideal, irrelevant_ideal(ideal.ring))
    return ideal


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_construct(args, config: RunConfig) -> int:
    field = _parse_field_flag(args.field)
    recipe = _recipe_from_args(args, field, config.seed)
    ideal = build(recipe, budget=config.max_degree_budget)
    text = write_ideal_text(ideal)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_invariants(args, config: RunConfig) -> int:
    ideal = _load(args, config)
    inv = compute_invariants(ideal, seed=config.seed,
                             retries=config.slice_retries,
                             budget=config.max_degree_budget,
                             assume_saturated=True)
    if config.output == "machine":
        lines = ["report=invariants", f"seed={config.seed}",
                 f"n={inv.n}", f"N={inv.N}", f"d={inv.d}",
                 f"delta={inv.delta}", f"g={inv.g}", f"codim={inv.codim}",
                 f"nondegenerate={'true' if inv.nondegenerate else 'false'}"]
        lines += [f"dimI{m}={inv.h0_I[m]}" for m in sorted(inv.h0_I)]
        print("\n".join(lines))
    else:
        print(str(inv))
    return EXIT_OK


def cmd_classify(args, config: RunConfig) -> int:
    ideal = _load(args, config)
    report = classify(ideal, seed=config.seed, budget=config.max_degree_budget,
                      retries=config.slice_retries, assume_saturated=True)
    if config.output == "machine":
        sys.stdout.write(report.to_machine())
    else:
        summary = f"case={report.case}"
        for k in sorted(report.params):
            summary += f" {k}={report.params[k]}"
        print(summary)
        print(report.to_text())
    return EXIT_OK


def cmd_smooth(args, config: RunConfig) -> int:
    ideal = _load(args, config)
    smooth = is_smooth(ideal, budget=config.max_degree_budget)
    print(f"smooth={'true' if smooth else 'false'}")
    return EXIT_OK


def cmd_link(args, config: RunConfig) -> int:
    ci = read_ideal_file(args.path)
    if len(ci.generators) != 2:
        raise ValueError("link expects a file with exactly two generators (Q, V3)")
    q, v3 = ci.generators
    if q.total_degree() != 2 or v3.total_degree() != 3:
        raise ValueError("link expects generators of degrees 2 and 3, in order")
    p_gens = [parse_polynomial(src.strip(), ci.ring)
              for src in args.linear_space.split(";") if src.strip()]
    if not p_gens or any(g.total_degree() != 1 for g in p_gens):
        raise ValueError("--p must list linear forms separated by ';'")
    p = Ideal(ci.ring, p_gens, saturated=True)
    linked = ideal_colon(ci, p)
    linked, iterations = saturate(linked, p)
    linked.saturated = True
    report = verify_linkage(linked, p, q, v3, budget=config.max_degree_budget)
    print(f"saturation_iterations={iterations}")
    print(report)
    if args.out:
        write_ideal_file(linked, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quintic-atlas",
        description="exact workbench for projective varieties of degree 5")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for all generic choices "
                             "(default: $QUINTIC_ATLAS_SEED or 0)")
    parser.add_argument("--budget", type=int, default=DEFAULT_DEGREE_BUDGET,
                        help="degree budget for Hilbert computations")
    parser.add_argument("--retries", type=int, default=8,
                        help="retries for generic hyperplane choices")
    parser.add_argument("--format", choices=("text", "machine"),
                        default="text", help="report format")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a catalogue ideal")
    c.add_argument("--kind", required=True,
                   choices=("hypersurface", "rnc", "scroll", "grassmannian14",
                            "g14-section", "linked", "linked-example", "cone"))
    c.add_argument("--n", type=int, default=2, help="dimension parameter")
    c.add_argument("--rank", type=int, default=4, help="quadric rank (3 or 4)")
    c.add_argument("--partition", default="", help="scroll partition, e.g. 1,1,3")
    c.add_argument("--cuts", type=int, default=1, help="hyperplane cuts")
    c.add_argument("--s", type=int, default=1, help="cone vertex dimension count")
    c.add_argument("--base", default="rnc",
                   choices=("rnc", "grassmannian14", "hypersurface", "scroll"),
                   help="base construction for cones")
    c.add_argument("--base-n", type=int, default=1, dest="base_n")
    c.add_argument("--base-partition", default="", dest="base_partition")
    c.add_argument("--field", default="gf32003",
                   help="coefficient field: q, gf32003, gf:<p>")
    c.add_argument("--out", default="", help="output path (default: stdout)")
    c.set_defaults(func=cmd_construct)

    for name, func, help_text in (
            ("invariants", cmd_invariants, "numerical invariants of an ideal file"),
            ("classify", cmd_classify, "classify an ideal file"),
            ("smooth", cmd_smooth, "Jacobian smoothness test")):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("path")
        s.add_argument("--saturate", action="store_true",
                       help="re-saturate untrusted input first")
        s.set_defaults(func=func)

    l = sub.add_parser("link", help="liaison: residual of a linear space in a "
                                    "(2,3) complete intersection file")
    l.add_argument("path", help="ideal file holding Q (degree 2) and V3 (degree 3)")
    l.add_argument("--p", default="x0;x1", dest="linear_space",
                   help="generators of the linear space, ';'-separated")
    l.add_argument("--out", default="", help="write the linked ideal here")
    l.set_defaults(func=cmd_link)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("QUINTIC_ATLAS_SEED", "0"))
    try:
        config = RunConfig(seed=seed, max_degree_budget=args.budget,
                           slice_retries=args.retries, output=args.format)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, config)
    except (ParseError, ClassificationInputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExceededError, GenericityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except QuinticAtlasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
