"""Command-line entry point.

Subcommands::

    generate    print a prefix of a source word
    transform   apply a k-to-k substitution to stdin or to a source
    complexity  stabilized P, S and Pf table of a (transformed) source
    check-mr    bounded modulo-recurrence check
    verify      closed form vs brute force comparison table

Exit status: 0 on success or full agreement, 2 on a verification mismatch,
1 on usage errors.  Reports go to stdout (or ``--output``); progress goes to
stderr only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from functools import partial

from . import analysis, formulas
from .generators import UnknownSource, parse_source
from .transforms import SubstitutionSpec, TransformedSource, substitute
from .words import FiniteWord, WordSource

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2
COMMANDS = ("generate", "transform", "complexity", "check-mr", "verify")

log = logging.getLogger("motrec")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    source: str | None = None
    length: int | None = None
    substitution: SubstitutionSpec | None = None
    n_max: int = 20
    mod_max: int = 10
    engine: str = "auto"
    prefix_cap: int | None = None
    theorem: str = "sturmian"
    fmt: str = "csv"
    output: str | None = None

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.fmt not in ("csv", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")
        if self.engine not in analysis.ENGINES:
            raise UsageError(f"unknown engine {self.engine!r}")
        if self.n_max < 1 or self.mod_max < 1:
            raise UsageError("--n-max and --mod-max must be positive")
        if self.length is not None and self.length < 0:
            raise UsageError("--length must be nonnegative")
        if self.command in ("complexity", "check-mr", "verify") and self.source is None:
            raise UsageError(f"{self.command} needs --source")
        if self.command in ("transform", "verify") and self.substitution is None:
            raise UsageError(f"{self.command} needs --k, --power and --letter")


def _source(config: RunConfig, transformed: bool = True) -> WordSource:
    try:
        source = parse_source(config.source)
    except UnknownSource as exc:
        raise UsageError(str(exc)) from None
    if transformed and config.substitution is not None:
        try:
            source = TransformedSource(source, config.substitution)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return source


def _cap(config: RunConfig) -> int:
    return config.prefix_cap if config.prefix_cap is not None else analysis.prefix_cap()


def _stabilize(source: WordSource, n_max: int, config: RunConfig) -> analysis.ComplexityProfile:
    try:
        _, profile = analysis.stabilize(source, n_max, cap=_cap(config), engine=config.engine)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not profile.stable:
        log.warning("%s: profile did not stabilize; counts are lower bounds", source.descriptor)
    return profile


def _table(rows: list[dict], columns: list[str], fmt: str, meta: dict) -> str:
    if fmt == "json":
        return json.dumps({**meta, "rows": rows}, ensure_ascii=False, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: "" if row.get(c) is None else row[c] for c in columns})
    return buf.getvalue()


def _generate(config: RunConfig) -> tuple[str, int]:
    if config.source is None or config.length is None:
        raise UsageError("generate needs --source and --length")
    return str(_source(config).prefix(config.length)) + "\n", EXIT_OK


def _transform(config: RunConfig, stdin) -> tuple[str, int]:
    spec = config.substitution
    if config.source is not None:
        if config.length is None:
            raise UsageError("transform --source needs --length (output symbols)")
        return str(_source(config).prefix(config.length)) + "\n", EXIT_OK
    text = stdin.read().strip()
    if not text:
        return "\n", EXIT_OK
    try:
        word = FiniteWord.from_string(text)
        return str(substitute(word, spec)) + "\n", EXIT_OK
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _complexity(config: RunConfig) -> tuple[str, int]:
    source = _source(config)
    # one extra length so that S(n_max) is defined
    profile = _stabilize(source, config.n_max + 1, config)
    rows = profile.rows()[: config.n_max]
    meta = {
        "source": source.descriptor,
        "n_max": config.n_max,
        "prefix_len": profile.prefix_len,
        "stable": profile.stable,
        "engine": profile.engine,
    }
    return _table(rows, ["n", "P", "S", "Pf"], config.fmt, meta), EXIT_OK


def _check_mr(config: RunConfig) -> tuple[str, int]:
    source = _source(config)
    length = config.length if config.length is not None else 100_000
    report = analysis.check_modulo_recurrence(source.prefix(length), config.n_max, config.mod_max)
    rows = [
        {"factor": v.factor, "modulus": v.modulus, "verdict": v.verdict,
         "occurrences": v.occurrences, "witness": v.witness}
        for v in report.verdicts
    ]
    meta = {
        "source": source.descriptor,
        "prefix_len": length,
        "n_max": config.n_max,
        "mod_max": config.mod_max,
        "pass": report.count("pass"),
        "fail": report.count("fail"),
        "inconclusive": report.count("inconclusive"),
    }
    log.info("%s: %d pass, %d fail, %d inconclusive", source.descriptor,
             meta["pass"], meta["fail"], meta["inconclusive"])
    text = _table(rows, ["factor", "modulus", "verdict", "occurrences", "witness"], config.fmt, meta)
    return text, EXIT_MISMATCH if report.failures else EXIT_OK


def _verify(config: RunConfig) -> tuple[str, int]:
    spec = config.substitution
    k, l = spec.k, spec.l
    source = _source(config)
    v_profile = _stabilize(source, config.n_max, config)
    if config.theorem == "sturmian":
        closed = partial(formulas.eval_sturmian, k=k, l=l)
    elif config.theorem == "general":
        base = _source(config, transformed=False)
        need = formulas.source_lengths_needed(config.n_max, k, l)
        u_profile = _stabilize(base, need, config)
        try:
            src = formulas.SourceComplexity.from_profile(u_profile)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        closed = partial(formulas.eval_general, k=k, l=l, src=src)
    else:
        raise UsageError(f"unknown theorem {config.theorem!r}")
    table = formulas.compare(range(1, config.n_max + 1), closed, v_profile)
    rows = [
        {"n": r.n, "branch": r.branch, "closed": r.closed, "empirical": r.empirical,
         "match": str(r.match).lower()}
        for r in table.rows
    ]
    meta = {
        "theorem": config.theorem,
        "source": source.descriptor,
        "prefix_len": v_profile.prefix_len,
        "stable": v_profile.stable,
        "summary": table.summary(),
    }
    text = _table(rows, ["n", "branch", "closed", "empirical", "match"], config.fmt, meta)
    for row in table.mismatches:
        log.warning("mismatch n=%d branch=%s closed=%d empirical=%d",
                    row.n, row.branch, row.closed, row.empirical)
    ok = table.all_match and v_profile.stable
    return text, EXIT_OK if ok else EXIT_MISMATCH


def run(config: RunConfig, stdout=None, stdin=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stdin = sys.stdin if stdin is None else stdin
    try:
        if config.command == "generate":
            text, status = _generate(config)
        elif config.command == "transform":
            text, status = _transform(config, stdin)
        elif config.command == "complexity":
            text, status = _complexity(config)
        elif config.command == "check-mr":
            text, status = _check_mr(config)
        else:
            text, status = _verify(config)
    except UsageError as exc:
        print(f"motrec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if config.output:
        with open(config.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="motrec", description=__doc__.split("\n\n")[0])
    parser.add_argument("-q", "--quiet", action="store_true", help="suppress progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    source_help = (
        "source word: fibonacci | champernowne | sturmian:<d1,d2,...> (last entry repeats) "
        "| periodic:<pattern> | morphic:<a=ab;b=a;seed=a>"
    )

    def add_source(p, required=True):
        p.add_argument("--source", required=required, help=source_help)

    def add_substitution(p, required=False):
        p.add_argument("--k", type=int, required=required, help="step: symbols kept between substitutions")
        p.add_argument("--power", type=int, required=required, help="power l of the substituted letter")
        p.add_argument("--letter", required=required, help="substituted letter (one glyph)")
        p.add_argument("--internal", action="store_true", help="letter belongs to the source alphabet")

    def add_output(p):
        p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
        p.add_argument("--output", help="write the report to this file instead of stdout")

    def add_stability(p):
        p.add_argument("--engine", choices=analysis.ENGINES, default="auto")
        p.add_argument("--prefix-cap", type=int,
                       help="longest prefix tried while stabilizing (default $MOTREC_PREFIX_CAP or 2^24)")

    p = sub.add_parser("generate", help="print a prefix of a source word")
    add_source(p)
    p.add_argument("--length", type=int, required=True)

    p = sub.add_parser("transform", help="substitute into stdin or a source prefix")
    add_source(p, required=False)
    add_substitution(p, required=True)
    p.add_argument("--length", type=int, help="output length when --source is given")

    p = sub.add_parser("complexity", help="stabilized complexity table (n,P,S,Pf)")
    add_source(p)
    add_substitution(p)
    p.add_argument("--n-max", type=int, required=True)
    add_stability(p)
    add_output(p)

    p = sub.add_parser("check-mr", help="bounded modulo-recurrence check")
    add_source(p)
    add_substitution(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--mod-max", type=int, required=True)
    p.add_argument("--length", type=int, help="prefix length examined (default 100000)")
    add_output(p)

    p = sub.add_parser("verify", help="closed form vs brute force (n,branch,closed,empirical,match)")
    p.add_argument("--theorem", choices=("sturmian", "general"), default="sturmian")
    add_source(p)
    add_substitution(p, required=True)
    p.add_argument("--n-max", type=int, required=True)
    add_stability(p)
    add_output(p)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    substitution = None
    if getattr(args, "k", None) is not None or getattr(args, "letter", None) is not None:
        if args.k is None or args.power is None or args.letter is None:
            raise UsageError("--k, --power and --letter must be given together")
        try:
            substitution = SubstitutionSpec(args.k, args.power, args.letter, args.internal)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return RunConfig(
        command=args.command,
        source=args.source,
        length=getattr(args, "length", None),
        substitution=substitution,
        n_max=getattr(args, "n_max", 20),
        mod_max=getattr(args, "mod_max", 10),
        engine=getattr(args, "engine", "auto"),
        prefix_cap=getattr(args, "prefix_cap", None),
        theorem=getattr(args, "theorem", "sturmian"),
        fmt=getattr(args, "fmt", "csv"),
        output=getattr(args, "output", None),
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = config_from_args(args)
    except UsageError as exc:
        print(f"motrec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
