import argparse
import csv
import dataclasses
import io
import json
import os
import sys
from enum import Enum
from fractions import Fraction

import torch

from nsshift import __version__
from nsshift.bigindex import SparseInt
from nsshift.construction import (
    DEFAULT_DEPTH,
    EpsilonPolicy,
    ScaledExponent,
    build_levels,
    dump_levels,
    verify_levels,
)
from nsshift.construction.export import level_to_dict
from nsshift.construction.levels import LevelParams
from nsshift.dynamics import (
    PowerSpec,
    conservativity_sums,
    mean_rn_check,
    rn_tends_zero_diagnostic,
    sample_paths,
    sqrt_rn_estimator,
    zero_type_profile,
)
from nsshift.exceptions import NsShiftError
from nsshift.helpers import measure_by_name
from nsshift.measure import (
    ProductMeasure,
    Verdict,
    affinity_certificate,
    classify,
    hellinger_affinity,
    kakutani_distance_exact,
    kakutani_distance_truncated,
    load_measure,
    proportionality_check,
)
from nsshift.measure.attribute import measure_to_dict
from nsshift.renewal import (
    aperiodicity_check,
    interarrival_from_renewal,
    log_convexity_check,
    null_recurrence_verdict,
    pwm_criterion,
    renewal_by_name,
    renewal_from_interarrival,
    renewal_sequence,
    simulate_renewal,
)
from nsshift.utils import (
    format_index,
    format_real,
    get_max_cells,
    get_max_precision,
    get_segment_budget,
)


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Everything that determines the output of one run."""

    subcommand: str
    measure: str = None
    precision: int = None
    seed: int = None
    out: str = None
    format: str = "json"
    options: dict = dataclasses.field(default_factory=dict)

    def effective(self):
        doc = dataclasses.asdict(self)
        doc.update(
            max_precision=get_max_precision(),
            segment_budget=get_segment_budget(),
            max_cells=get_max_cells(),
        )
        return doc


def to_jsonable(obj):
    """Plain JSON value: floats with 17 digits, integers as decimal strings."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    elif isinstance(obj, Enum):
        return obj.value
    elif isinstance(obj, float):
        return format_real(obj)
    elif isinstance(obj, (int, SparseInt)):
        return format_index(obj)
    elif isinstance(obj, Fraction):
        return str(obj)
    elif isinstance(obj, torch.Tensor):
        return [to_jsonable(x) for x in obj.tolist()]
    elif isinstance(obj, ProductMeasure):
        return measure_to_dict(obj)
    elif isinstance(obj, LevelParams):
        return level_to_dict(obj)
    elif isinstance(obj, ScaledExponent):
        return {"a": str(obj.a), "b": str(obj.b), "k": str(obj.k)}
    elif dataclasses.is_dataclass(obj):
        doc = {
            f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)
        }
        kind = getattr(obj, "kind", None)
        if isinstance(kind, str):
            doc["kind"] = kind
        return doc
    elif isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise TypeError("Cannot serialise {}.".format(type(obj).__name__))


def parse_window(text):
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError("Window must be lo:hi, got {!r}.".format(text))
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise argparse.ArgumentTypeError("Window lo exceeds hi in {!r}.".format(text))
    return lo, hi


def parse_n_list(text):
    """``a:b`` for the range a..b, or a comma separated list."""
    if ":" in text:
        lo, hi = parse_window(text)
        return list(range(lo, hi + 1))
    return [int(x) for x in text.split(",")]


def parse_times(text):
    return [float(x) for x in text.split(",")]


def resolve_measure(name):
    if os.path.exists(name):
        return load_measure(name)
    return measure_by_name(name)


def cmd_construct(args):
    eps = EpsilonPolicy.parse(args.eps)
    levels = build_levels(args.levels, eps)
    result = dump_levels(levels)
    result["epsilon"] = eps.name
    result["checks"] = [
        {"name": r.name, "passed": r.passed, "levels": r.checks}
        for r in verify_levels(levels, eps)
    ]
    return result, None


def cmd_show_measure(args):
    P = resolve_measure(args.measure)
    result = {"measure": P}
    if args.window is not None:
        lo, hi = args.window
        result["segments"] = [
            {"lo": a, "hi": b, "p0": f.p0} for a, b, f in P.segments(lo, hi)
        ]
    return result, None


def _pair(args):
    P = resolve_measure(args.measure)
    if args.other is not None:
        return P, resolve_measure(args.other)
    return P, P.shift(args.shift)


def cmd_distance(args):
    P, Q = _pair(args)
    result = {"truncated": kakutani_distance_truncated(P, Q, args.N), "N": args.N}
    result["exact"] = kakutani_distance_exact(P, Q)
    return result, None


def cmd_affinity(args):
    P, Q = _pair(args)
    result = {
        "affinity": hellinger_affinity(P, Q, args.N),
        "N": args.N,
        "certificate": affinity_certificate(P, Q),
        "proportionality": proportionality_check(P, Q, args.N),
    }
    return result, None


def cmd_classify(args):
    P = resolve_measure(args.measure)
    verdict = classify(P)
    if args.require_nonsingular and verdict.verdict is Verdict.NOT_NONSINGULAR:
        raise NsShiftError("Measure {} is not non-singular.".format(args.measure))
    return {"classification": verdict, "verdict": str(verdict)}, None


def cmd_rn_sample(args):
    P = resolve_measure(args.measure)
    window = args.window
    result = {
        "mean": mean_rn_check(P, args.n, window, args.seed, args.count),
        "sqrt": sqrt_rn_estimator(P, args.n, window, args.seed, args.count),
    }
    rows = rn_tends_zero_diagnostic(P, [args.n], window, args.seed, args.count)
    result["quantiles"] = {str(q): v for q, v in rows[0].quantiles.items()}
    return result, None


def cmd_zero_type_profile(args):
    P = resolve_measure(args.measure)
    entries = zero_type_profile(P, args.n, args.window)
    rows = [
        (e.n, format_real(e.distance), e.kind, format_real(e.rho_upper))
        for e in entries
    ]
    return {"profile": entries}, (("n", "value", "certificate", "rho_upper"), rows)


def cmd_conservativity(args):
    P = resolve_measure(args.measure)
    spec = PowerSpec(tuple(args.powers))
    paths = [
        sample_paths(P, args.window, args.seed + i, 1)[0] for i in range(spec.k)
    ]
    report = conservativity_sums(P, spec, paths, args.N)
    sums = report.partial_sums.tolist()
    rows = [(n + 1, format_real(s)) for n, s in enumerate(sums)]
    result = {
        "N": args.N,
        "powers": spec.exponents,
        "final_partial_sum": sums[-1],
        "ledger": report.ledger,
    }
    return result, (("n", "partial_sum"), rows)


def cmd_renewal(args):
    p = renewal_by_name(args.p)
    result = {"p": p.name, "tail_class": p.tail_class, "check": args.check}
    rows = None
    if args.check == "null-recurrence":
        report = null_recurrence_verdict(p, args.N)
        result.update(
            verdict=report.verdict,
            partial_sum=report.partial_sums[-1].item(),
            last_term=report.last_term,
            null_recurrent=report.null_recurrent,
        )
    elif args.check == "aperiodicity":
        result["periodicity"] = aperiodicity_check(renewal_sequence(p, args.N), args.N)
    elif args.check == "interarrival":
        f = interarrival_from_renewal(renewal_sequence(p, args.N))
        u = renewal_from_interarrival(f)
        error = u - renewal_sequence(p, args.N)
        result["round_trip_error"] = error.abs().max().item()
        rows = (("n", "f"), [(n, format_real(x)) for n, x in enumerate(f.tolist())])
    elif args.check == "log-convexity":
        result["log_convexity"] = log_convexity_check(renewal_sequence(p, args.N))
    elif args.check == "simulate":
        if args.seed is None:
            raise NsShiftError("--seed is required for --check simulate.")
        u = renewal_sequence(p, args.N)
        f = interarrival_from_renewal(u)
        u_hat = simulate_renewal(f, args.N, args.seed, args.count)
        result["max_abs_error"] = (u_hat - u).abs().max().item()
        pairs = zip(u.tolist(), u_hat.tolist())
        rows = (
            ("n", "u", "u_hat"),
            [(n, format_real(a), format_real(b)) for n, (a, b) in enumerate(pairs)],
        )
    return result, rows


def cmd_pwm(args):
    p = renewal_by_name(args.p)
    report = pwm_criterion(p, args.times, args.N)
    result = {
        "p": p.name,
        "times": report.times,
        "verdict": report.verdict,
        "partial_sum": report.partial_sums[-1].item(),
        "last_term": report.last_term,
    }
    return result, None


def _add_output(parser, csv_ok=False):
    parser.add_argument("--out", help="Output path, stdout when omitted.")
    formats = ["json", "csv"] if csv_ok else ["json"]
    parser.add_argument("--format", choices=formats, default="json")


def _add_measure(parser):
    parser.add_argument(
        "--measure",
        required=True,
        help="Measure file or built-in name (fair, step, perturbed, alternating, "
        "two-point, construction, construction:T).",
    )


def _add_pair(parser):
    _add_measure(parser)
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--other", help="Second measure, file or built-in name.")
    group.add_argument("--shift", type=int, default=1, help="Compare with P o T^shift.")
    parser.add_argument("--N", type=int, default=1000, help="Truncation window -N..N.")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nsshift", description="Non-singular Bernoulli shift diagnostics."
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--precision", type=int, help="Maximum interval precision in bits."
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("construct", help="Build and verify construction levels.")
    p.add_argument("--levels", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--eps", default="dyadic:2^-t")
    _add_output(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("show-measure", help="Print a measure and its segments.")
    _add_measure(p)
    p.add_argument("--window", type=parse_window, help="lo:hi, e.g. -5:5.")
    _add_output(p)
    p.set_defaults(func=cmd_show_measure)

    p = sub.add_parser("distance", help="Kakutani distance d_N and d.")
    _add_pair(p)
    _add_output(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("affinity", help="Hellinger affinity rho_N and certificates.")
    _add_pair(p)
    _add_output(p)
    p.set_defaults(func=cmd_affinity)

    p = sub.add_parser("classify", help="Equivalent invariant measure or zero type.")
    _add_measure(p)
    p.add_argument("--require-nonsingular", action="store_true")
    _add_output(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("rn-sample", help="Monte Carlo checks of (T^n)'.")
    _add_measure(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=parse_window, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=10000)
    _add_output(p)
    p.set_defaults(func=cmd_rn_sample)

    p = sub.add_parser("zero-type-profile", help="d(P, P o T^n) over a range of n.")
    _add_measure(p)
    p.add_argument("--n", type=parse_n_list, default=list(range(1, 65)))
    p.add_argument("--window", type=int, default=10000)
    _add_output(p, csv_ok=True)
    p.set_defaults(func=cmd_zero_type_profile)

    p = sub.add_parser("conservativity", help="Partial sums of S^n'.")
    _add_measure(p)
    p.add_argument("--powers", type=parse_n_list, default=[1])
    p.add_argument("--N", type=int, default=1000)
    p.add_argument("--window", type=parse_window, default=(-1000, 1000))
    p.add_argument("--seed", type=int, required=True)
    _add_output(p, csv_ok=True)
    p.set_defaults(func=cmd_conservativity)

    p = sub.add_parser("renewal", help="Renewal function diagnostics.")
    p.add_argument("--p", default="log", help="log, geom:q or table:path.")
    p.add_argument("--N", type=int, default=100000)
    p.add_argument(
        "--check",
        choices=[
            "null-recurrence",
            "aperiodicity",
            "interarrival",
            "log-convexity",
            "simulate",
        ],
        default="null-recurrence",
    )
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=10000)
    _add_output(p, csv_ok=True)
    p.set_defaults(func=cmd_renewal)

    p = sub.add_parser("pwm", help="Power weak mixing divergence criterion.")
    p.add_argument("--p", default="log")
    p.add_argument("--times", type=parse_times, required=True)
    p.add_argument("--N", type=int, default=100000)
    _add_output(p)
    p.set_defaults(func=cmd_pwm)
    return parser


def config_from_args(args):
    skip = {"func", "subcommand", "measure", "precision", "seed", "out", "format"}
    options = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    return RunConfig(
        subcommand=args.subcommand,
        measure=getattr(args, "measure", None),
        precision=args.precision,
        seed=getattr(args, "seed", None),
        out=args.out,
        format=args.format,
        options=to_jsonable(options),
    )


def render(config, result, table):
    if config.format == "csv":
        if table is None:
            raise NsShiftError(
                "Subcommand {} has no CSV output.".format(config.subcommand)
            )
        buffer = io.StringIO()
        buffer.write("# version {}\n".format(__version__))
        config_text = json.dumps(to_jsonable(config.effective()), sort_keys=True)
        buffer.write("# config {}\n".format(config_text))
        writer = csv.writer(buffer, lineterminator="\n")
        header, rows = table
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()
    doc = {
        "version": __version__,
        "config": to_jsonable(config.effective()),
        "result": to_jsonable(result),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def run(config, args):
    """Dispatch one parsed command. Returns the exit status."""
    previous = os.environ.get("NSSHIFT_MAX_PRECISION")
    if config.precision is not None:
        os.environ["NSSHIFT_MAX_PRECISION"] = str(config.precision)
    try:
        result, table = args.func(args)
        text = render(config, result, table)
    except (NsShiftError, ValueError) as e:
        print("nsshift: error: {}".format(e), file=sys.stderr)
        return 1
    finally:
        if previous is None:
            os.environ.pop("NSSHIFT_MAX_PRECISION", None)
        else:
            os.environ["NSSHIFT_MAX_PRECISION"] = previous
    if config.out is None:
        sys.stdout.write(text)
    else:
        with open(config.out, "w") as f:
            f.write(text)
    return 0


WINDOW_OPTIONS = ("--window",)


def join_negative_windows(argv):
    """
    Rewrite ``--window -400:10`` as ``--window=-400:10``, which argparse
    would otherwise read as an unknown option.
    """
    joined = []
    i = 0
    while i < len(argv):
        token = argv[i]
        following = argv[i + 1] if i + 1 < len(argv) else None
        if token in WINDOW_OPTIONS and following and following.startswith("-"):
            joined.append("{}={}".format(token, following))
            i += 2
        else:
            joined.append(token)
            i += 1
    return joined


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(join_negative_windows(argv))
    return run(config_from_args(args), args)


if __name__ == "__main__":
    sys.exit(main())
