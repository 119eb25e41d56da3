"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 mathematical precondition
violation or verification mismatch, 3 size guard exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import formats
from .errors import BettiError, MalformedInput, MathPreconditionError, NotAdmissible, SizeGuardError
from .fuzz import run_fuzz
from .ideal import (
    BettiTable,
    beta1_closed_form,
    classify,
    closed_form_betti,
    dominates,
    ek_betti,
    hilbert,
    is_stable,
    lex_ideal,
    stable_hilbert,
)
from .macaulay import generator_degrees, is_admissible
from .oracle import DEFAULT_SIZE_GUARD, taylor_betti

EXIT_OK, EXIT_MALFORMED, EXIT_MATH, EXIT_GUARD = 0, 1, 2, 3


class CommandFailed(Exception):
    def __init__(self, code, message, payload=None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _fmt_betas(table: BettiTable) -> str:
    return "(" + ",".join(str(b) for b in table.betas) + ")"


def _table_text(table: BettiTable) -> str:
    lines = [f"betas {_fmt_betas(table)}"]
    for d, row in sorted(table.by_degree.items()):
        lines.append(f"  degree {d}: " + " ".join(str(c) for c in row))
    return "\n".join(lines)


def _emit(args, payload: dict, text: str, table: BettiTable | None = None) -> None:
    if args.format == "json":
        sys.stdout.write(formats.dumps(payload))
    elif args.format == "csv" and table is not None:
        sys.stdout.write(formats.betti_csv(table))
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def cmd_check(args) -> int:
    ideal, minimal = formats.load_ideal(args.input)
    d_max = args.max_degree if args.max_degree is not None else ideal.max_generator_degree + 1
    cls = classify(ideal)
    hf = hilbert(ideal, d_max)
    payload = {
        "ideal": ideal.to_json(),
        "input_minimal": minimal,
        "classification": {"lex": cls.is_lex, "borel": cls.is_borel, "stable": cls.is_stable},
        "hilbert": hf.to_json(),
    }
    if ideal.generators and d_max < ideal.max_generator_degree:
        payload["truncated"] = True
    text = "\n".join([
        f"generators: {ideal}",
        f"lex={str(cls.is_lex).lower()} borel={str(cls.is_borel).lower()} stable={str(cls.is_stable).lower()}",
        f"hilbert (d=0..{d_max}): " + ",".join(map(str, hf.values)),
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_betti(args) -> int:
    ideal, _ = formats.load_ideal(args.input)
    stable = is_stable(ideal)
    if not stable and not args.oracle:
        raise CommandFailed(EXIT_MALFORMED, f"{ideal} is not stable; rerun with --oracle for the Taylor computation")
    payload = {"ideal": ideal.to_json()}
    lines = []
    ek = taylor = None
    if stable:
        ek = ek_betti(ideal)
        payload["eliahou_kervaire"] = ek.to_json()
        lines.append("Eliahou-Kervaire: " + _table_text(ek))
    if args.oracle:
        taylor = taylor_betti(ideal, args.size_guard)
        payload["taylor"] = taylor.to_json()
        lines.append("Taylor: " + _table_text(taylor))
    if ek is not None and taylor is not None:
        agree = ek == taylor
        payload["agree"] = agree
        lines.append("AGREE" if agree else "DISAGREE")
        if not agree:
            raise CommandFailed(EXIT_MATH, "Eliahou-Kervaire and Taylor tables disagree", (payload, "\n".join(lines)))
    _emit(args, payload, "\n".join(lines), ek if ek is not None else taylor)
    return EXIT_OK


def cmd_lexify(args) -> int:
    hf = formats.load_hilbert(args.input)
    rep = is_admissible(hf)
    if not rep.ok:
        raise NotAdmissible(f"not admissible at degree {rep.first_violation}: {rep.reason}", rep.first_violation)
    lex = lex_ideal(hf)
    gd = generator_degrees(hf)
    payload = {
        "ideal": lex.to_json(),
        "generator_degrees": [list(c) for c in gd.counts],
        "stabilized": gd.stabilized,
    }
    text = "\n".join([
        f"lex ideal: {lex}",
        "new generators: " + ", ".join(f"degree {d}: {c}" for d, c in gd.counts),
        f"tail stabilized: {str(gd.stabilized).lower()}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    hf = formats.load_hilbert(args.input)
    bound = closed_form_betti(hf)
    gd = generator_degrees(hf)
    beta1 = beta1_closed_form(hf)
    payload = {
        "hilbert": hf.to_json(),
        "top_degree": gd.top_degree,
        "betti": bound.to_json(),
        "beta1_closed_form": beta1,
    }
    lines = [f"top generator degree: {gd.top_degree}", "bound: " + _table_text(bound), f"beta_1 closed form: {beta1}"]
    if hf.vars > 1 and beta1 != bound.betas[1]:
        raise CommandFailed(EXIT_MATH, f"beta_1 closed form {beta1} != {bound.betas[1]}", (payload, "\n".join(lines)))
    if args.verify:
        ek = ek_betti(lex_ideal(hf))
        payload["verified"] = ek == bound
        lines.append("verify: " + ("OK" if ek == bound else f"MISMATCH (lex ideal gives {_fmt_betas(ek)})"))
        if ek != bound:
            raise CommandFailed(EXIT_MATH, "closed form disagrees with the lex ideal", (payload, "\n".join(lines)))
    _emit(args, payload, "\n".join(lines), bound)
    return EXIT_OK


def cmd_compare(args) -> int:
    ideal, _ = formats.load_ideal(args.input)
    if is_stable(ideal):
        source, table = "eliahou-kervaire", ek_betti(ideal)
    else:
        source, table = "taylor", taylor_betti(ideal, args.size_guard)
    if args.max_degree is not None:
        if ideal.generators and args.max_degree <= ideal.max_generator_degree:
            raise MathPreconditionError(
                f"--max-degree {args.max_degree} must exceed the largest generator degree {ideal.max_generator_degree}"
            )
        hf = hilbert(ideal, args.max_degree)
    else:
        hf = stable_hilbert(ideal)
    lex = lex_ideal(hf)
    lex_table = closed_form_betti(hf)
    dominated = dominates(lex_table, table)
    payload = {
        "ideal": ideal.to_json(),
        "source": source,
        "betti": table.to_json(),
        "hilbert": hf.to_json(),
        "lex_ideal": lex.to_json(),
        "lex_betti": lex_table.to_json(),
        "dominated": dominated,
    }
    text = "\n".join([
        f"ideal: {ideal}",
        f"{source}: " + _table_text(table),
        "hilbert: " + ",".join(map(str, hf.values)),
        f"lex ideal: {lex}",
        "lex: " + _table_text(lex_table),
        "DOMINATED" if dominated else "NOT DOMINATED",
    ])
    if not dominated:
        raise CommandFailed(EXIT_MATH, "lex table does not dominate", (payload, text))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    if args.vars < 2:
        raise MalformedInput("--vars must be >= 2")
    if args.max_degree is None:
        raise MalformedInput("fuzz needs --max-degree")
    if args.max_degree < 1 or args.cases < 0:
        raise MalformedInput("--max-degree must be >= 1 and --cases >= 0")
    summary = run_fuzz(args.vars, args.max_degree, args.cases, args.seed, args.size_guard)
    payload = summary.to_json()
    lines = [f"{summary.passed}/{summary.cases} cases pass (seed {summary.seed})"]
    lines += [f"  {name}: {count}" for name, count in sorted(summary.checks.items())]
    if summary.taylor_skipped:
        lines.append(f"  taylor comparisons skipped by size guard: {summary.taylor_skipped}")
    for f in summary.failures:
        lines.append(f"FAIL case {f['case']} {f['kind']}: {', '.join(f['checks'])}; reproducer {formats.dumps(f['reproducer']).strip()}")
    if not summary.ok:
        raise CommandFailed(EXIT_MATH, f"{len(summary.failures)} failing case(s)", (payload, "\n".join(lines)))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are malformed input, not exit 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_MALFORMED, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--size-guard", type=int, default=DEFAULT_SIZE_GUARD)

    parser = _Parser(prog="bettibound", description="Betti-number bounds for a given Hilbert function")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="minimal generators, classification, Hilbert values")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("betti", parents=[common], help="Betti numbers of a monomial ideal")
    p.add_argument("input")
    p.add_argument("--oracle", action="store_true", help="also compute the Taylor-complex table")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("lexify", parents=[common], help="lex ideal with a given Hilbert function")
    p.add_argument("input")
    p.set_defaults(func=cmd_lexify)

    p = sub.add_parser("bounds", parents=[common], help="sharp Betti bounds from a Hilbert function")
    p.add_argument("input")
    p.add_argument("--verify", action="store_true", help="cross-check against the lex ideal")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("compare", parents=[common], help="ideal's Betti table against its lex bound")
    p.add_argument("input")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("fuzz", parents=[common], help="seeded property checks")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CommandFailed as exc:
        if exc.payload is not None:
            payload, text = exc.payload
            _emit(args, payload, text)
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except MathPreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except BettiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
