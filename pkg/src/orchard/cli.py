"""Command-line interface: ``orchard <verb> ...``.

Exit codes: 0 success, 1 parse or usage error, 2 genericity or another
mathematical precondition, 3 random generation gave up, 4 an internal
invariant failed (a bug).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .antipodal import AntipodalConfiguration, line_parity, line_structure
from .errors import GenerationError, GenericityError, InputError, InvariantError, TripleConstantError
from .geom import Configuration, flip_relation, geometric_partition, random_configuration, separating_matrix
from .io import configuration_to_json, load_configuration
from .lift import basis_from_name, cgeneric_lift, cgeneric_partition
from .oriented import semi_orientation_sections
from .predicates import format_fraction
from .signfn import binom
from .svg import render_svg
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_GENERATION, EXIT_INTERNAL = 0, 1, 2, 3, 4
SPECIES = ("cherry", "plum")


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    """Machine-readable record of one command run."""

    command: str
    options: dict
    inputs: list
    seed: int
    result: dict
    diagnostics: dict = field(default_factory=dict)
    timing: float | None = None

    def to_json(self) -> dict:
        out = asdict(self)
        if self.timing is None:
            del out["timing"]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "RunReport":
        return cls(**obj)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _input_record(path, raw: bytes) -> dict:
    return {"path": str(path), "sha256": hashlib.sha256(raw).hexdigest()}


def _load_points(path):
    config, raw = load_configuration(path)
    if isinstance(config, AntipodalConfiguration):
        raise UsageError(f"{path}: antipodal input, use the 'oriented' command")
    return config, raw


def _species(c: Configuration):
    return SPECIES if c.dim == 2 else ("class_a", "class_b")


def _partition_json(partition, names) -> dict:
    a, b = partition.classes()
    return {"classes": {names[0]: list(a), names[1]: list(b)}, "alpha": list(partition.alpha)}


def _lines(partition, names) -> list:
    return [f"{name}: {' '.join(str(x) for x in cls)}" for name, cls in zip(names, partition.classes())]


# ---- commands ---------------------------------------------------------


def cmd_color(args):
    c, raw = _load_points(args.input)
    partition = geometric_partition(c, verify=args.verify)
    names = _species(c)
    result = {"partition": _partition_json(partition, names), "n": c.n, "dim": c.dim}
    text = _lines(partition, names)
    if args.show_s:
        m = separating_matrix(c)
        result["separating_counts"] = m
        text.append("s(P,Q):")
        text.extend(" ".join(f"{v:3d}" for v in row) for row in m)
    if args.svg:
        if c.dim != 2:
            raise UsageError("--svg needs a planar configuration")
        Path(args.svg).write_text(render_svg(c, partition, SPECIES), encoding="utf-8")
        result["svg"] = str(args.svg)
    diagnostics = {"target_parity": binom(c.n - 3, c.dim - 1) % 2, "trivial": partition.is_trivial()}
    options = {"input": str(args.input), "show_s": args.show_s, "svg": args.svg, "verify": args.verify}
    return RunReport("color", options, [_input_record(args.input, raw)], args.seed, result, diagnostics), text


def cmd_random(args):
    c = random_configuration(args.n, args.d, seed=args.seed, coord_range=args.range)
    data = configuration_to_json(c)
    body = json.dumps(data, indent=2) + "\n"
    result = {"n": c.n, "dim": c.dim}
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
        result["out"] = str(args.out)
        text = [f"wrote {c.n} points in dimension {c.dim} to {args.out}"]
    else:
        result["configuration"] = data
        text = [body.rstrip("\n")]
    options = {"n": args.n, "d": args.d, "range": args.range, "out": args.out}
    return RunReport("random", options, [], args.seed, result), text


def cmd_verify(args):
    results = run_suite(args.suite, n_max=args.n_max, seed=args.seed, samples=args.samples)
    passed = all(r.passed for r in results)
    text = []
    for r in results:
        if r.passed:
            text.append(f"PASS {r.suite}/{r.name} ({r.cases} cases)")
        else:
            text.append(f"FAIL {r.suite}/{r.name}: {r.message}")
            if r.counterexample is not None:
                text.append("  counterexample: " + json.dumps(r.counterexample, sort_keys=True, default=str))
    text.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    result = {"passed": passed, "checks": [r.to_json() for r in results]}
    options = {"suite": args.suite, "n_max": args.n_max, "samples": args.samples}
    report = RunReport("verify", options, [], args.seed, json.loads(json.dumps(result, default=str)))
    return report, text, (EXIT_OK if passed else EXIT_MATH)


def cmd_flip(args):
    a, raw_a = _load_points(args.a)
    b, raw_b = _load_points(args.b)
    if a.n != b.n or a.dim != b.dim:
        raise UsageError("both configurations need the same number of points and dimension")
    report = flip_relation(a, b)
    names = _species(a)
    inputs = [_input_record(args.a, raw_a), _input_record(args.b, raw_b)]
    options = {"a": str(args.a), "b": str(args.b)}
    if report.flipset is None:
        result = {"flip": False, "differing_tuples": report.differing}
        text = [f"not a flip: {report.differing} orientation(s) differ"]
        return RunReport("flip", options, inputs, args.seed, result), text
    changed = sorted([list(p) for p in report.changed])
    result = {
        "flip": True,
        "flipset": list(report.flipset),
        "before": _partition_json(report.before, names),
        "after": _partition_json(report.after, names),
        "changed_pairs": changed,
        "verified": True,
    }
    text = [
        f"flip of {' '.join(str(x) for x in report.flipset)}",
        "before: " + " | ".join(" ".join(str(x) for x in cls) for cls in report.before.classes()),
        "after:  " + " | ".join(" ".join(str(x) for x in cls) for cls in report.after.classes()),
        f"class changes: exactly the {len(changed)} pairs split by the flipset (verified)",
    ]
    return RunReport("flip", options, inputs, args.seed, result), text


def _vector_text(v) -> str:
    return "(" + ", ".join(format_fraction(x) for x in v) + ")"


def cmd_oriented(args):
    a, raw = load_configuration(args.input)
    if not isinstance(a, AntipodalConfiguration):
        raise UsageError(f"{args.input}: expected an antipodal configuration (\"antipodal\": true)")
    p = line_structure(a)
    labels = a.base.quotient.labels
    result = {"parity": p.parity, "e": a.e, "dim": a.dim}
    if p.parity == 1:
        q = p.quotient_partition()
        result["partition"] = _partition_json(q, ("class_a", "class_b"))
        text = ["parity: even (two-partition of the lines)"] + _lines(q, ("class_a", "class_b"))
    else:
        section, _ = semi_orientation_sections(p)
        vectors = [a.vector(x) for x in section]
        result["semi_orientation"] = {
            "labels": list(labels),
            "signs": list(p.signs),
            "vectors": [[format_fraction(v) for v in vec] for vec in vectors],
        }
        text = ["parity: odd (semi-orientation)"]
        text.extend(f"{label}: {_vector_text(vec)}" for label, vec in zip(labels, vectors))
    diagnostics = {"expected_parity": line_parity(a.e, a.dim)}
    options = {"input": str(args.input)}
    return RunReport("oriented", options, [_input_record(args.input, raw)], args.seed, result, diagnostics), text


def cmd_lift(args):
    c, raw = _load_points(args.input)
    basis = basis_from_name(args.basis, ambient_dim=c.dim)
    if basis.ambient_dim != c.dim:
        raise UsageError(f"basis {basis.name} needs points in dimension {basis.ambient_dim}")
    lifted = cgeneric_lift(c.points, basis, c.labels.labels)
    partition = geometric_partition(lifted)
    direct = cgeneric_partition(c.points, basis, c.labels.labels)
    if direct != partition:
        raise InvariantError("function separation disagrees with the lifted hyperplane partition")
    names = _species(c)
    result = {
        "basis": basis.name,
        "lifted_dim": basis.dim,
        "partition": _partition_json(partition, names),
        "agree": True,
    }
    text = [f"basis {basis.name} (lifted dimension {basis.dim})"] + _lines(partition, names)
    text.append("function separation agrees with the lifted partition")
    diagnostics = {"target_parity": binom(c.n - 3, basis.dim - 1) % 2}
    options = {"input": str(args.input), "basis": args.basis}
    return RunReport("lift", options, [_input_record(args.input, raw)], args.seed, result, diagnostics), text


# ---- parser -----------------------------------------------------------


def _common(parser, suppress: bool):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=_seed, default=default(0), help="random seed (unsigned 64-bit)")
    parser.add_argument("--json", action="store_true", default=default(False), help="print the run report as JSON")
    parser.add_argument("--quiet", action="store_true", default=default(False), help="print nothing on success")
    parser.add_argument("--timing", action="store_true", default=default(False), help="include wall time in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orchard", description="Orchard partitions of point sets and sign functions.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, help_):
        p = sub.add_parser(name, help=help_, description=help_)
        _common(p, suppress=True)
        return p

    p = add("color", "split a generic configuration into its two classes")
    p.add_argument("input", help="configuration JSON file")
    p.add_argument("--show-s", action="store_true", help="print the separating-count matrix")
    p.add_argument("--svg", metavar="PATH", help="write an SVG picture (planar input only)")
    p.add_argument("--verify", action="store_true", help="cross-check against the algebraic construction")

    p = add("random", "generate a random generic configuration")
    p.add_argument("--n", type=_positive, required=True, help="number of points")
    p.add_argument("--d", type=_positive, required=True, help="dimension")
    p.add_argument("--range", type=_positive, default=None, help="coordinates in [-RANGE, RANGE] (default 10*n*d)")
    p.add_argument("--out", metavar="PATH", help="output file (default: standard output)")

    p = add("verify", "run the invariant suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n-max", type=int, default=6, help="largest ground set size (at least 3)")
    p.add_argument("--samples", type=_positive, default=8, help="random samples per parameter point")

    p = add("flip", "decide whether two configurations differ by one flip")
    p.add_argument("--a", required=True, metavar="PATH")
    p.add_argument("--b", required=True, metavar="PATH")

    p = add("oriented", "structure carried by lines through the origin")
    p.add_argument("--input", required=True, metavar="PATH", help="antipodal configuration JSON")

    p = add("lift", "partition for separation by zero sets of a function space")
    p.add_argument("--basis", required=True, help="affine, conic, circle or interp:<d>")
    p.add_argument("--input", required=True, metavar="PATH", help="configuration JSON")
    return parser


COMMANDS = {
    "color": cmd_color,
    "random": cmd_random,
    "verify": cmd_verify,
    "flip": cmd_flip,
    "oriented": cmd_oriented,
    "lift": cmd_lift,
}


def _fail(code: int, message: str) -> int:
    sys.stderr.write(f"orchard: {message}\n")
    return code


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        # already prefixed with the program name
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    if args.command == "verify" and args.n_max < 3:
        return _fail(EXIT_USAGE, "--n-max must be at least 3")
    start = time.perf_counter()
    code = EXIT_OK
    try:
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, str(exc))
    except GenericityError as exc:
        # messages name the degenerate subset
        return _fail(EXIT_MATH, str(exc))
    except TripleConstantError as exc:
        return _fail(EXIT_MATH, str(exc))
    except InvariantError as exc:
        return _fail(EXIT_INTERNAL, f"internal invariant failed: {exc}")
    except GenerationError as exc:
        return _fail(EXIT_GENERATION, str(exc))
    except (InputError, OSError) as exc:
        return _fail(EXIT_USAGE, str(exc))
    if len(out) == 3:
        report, text, code = out
    else:
        report, text = out
    if args.timing:
        report.timing = round(time.perf_counter() - start, 6)
    if args.json:
        sys.stdout.write(report.dumps())
    elif not args.quiet:
        sys.stdout.write("\n".join(text) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
