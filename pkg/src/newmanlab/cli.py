"""Command-line interface.

Subcommands:

  scan-newman CORPUS      exhaustive transfer-triple scan over a corpus
  verify CORPUS --suite   run verification suites (comma-separated or "all")
  info CORPUS             per-entry facts: order, solvability, primes
  corpus-validate CORPUS  parse and build every entry, reporting data errors

Exit status: 0 when everything passed, 1 when a suite line failed or a
triple was found, 2 on usage or data errors.  Reports are tab-separated;
--report writes them to a file instead of stdout.  Wall-clock summaries go
to stderr so that report output is byte-identical across runs and --jobs
settings.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import DEFAULT_LIMITS
from .corpus import load_corpus
from .errors import CorpusError, NewmanlabError
from .harness import Report, suite_names, verify_suite


def _add_common(sub: argparse.ArgumentParser, jobs: bool = True) -> None:
    sub.add_argument("corpus", help="path to a corpus file")
    sub.add_argument("--lattice-bound", type=int,
                     default=DEFAULT_LIMITS.lattice_bound, metavar="N",
                     help="skip groups whose subgroup lattice would exceed "
                          "this order (default %(default)s)")
    if jobs:
        sub.add_argument("--jobs", type=int, default=1, metavar="N",
                         help="worker processes (default 1)")
        sub.add_argument("--report", metavar="FILE",
                         help="write the TSV report here instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="newmanlab",
        description="finite-group computations probing maximality transfer "
                    "between isomorphic subgroups of solvable groups")
    subs = parser.add_subparsers(dest="command", required=True)

    scan = subs.add_parser("scan-newman",
                           help="search every corpus group for transfer triples")
    _add_common(scan)

    verify = subs.add_parser("verify", help="run verification suites")
    _add_common(verify)
    verify.add_argument("--suite", required=True, metavar="NAMES",
                        help="comma-separated suite names, or 'all'; known: "
                             + ", ".join(suite_names()))

    info = subs.add_parser("info", help="print facts about one corpus group")
    info.add_argument("group_name", help="entry name inside the corpus")
    _add_common(info, jobs=False)

    validate = subs.add_parser("corpus-validate",
                               help="check a corpus file for data errors")
    validate.add_argument("corpus", help="path to a corpus file")
    return parser


def _emit(report: Report, path: str | None) -> None:
    if path is None:
        sys.stdout.write(report.to_tsv())
    else:
        Path(path).write_text(report.to_tsv(), encoding="utf-8")
    print(report.summary(), file=sys.stderr)


def _run_suites(args, names: list[str]) -> int:
    limits = DEFAULT_LIMITS.with_lattice_bound(args.lattice_bound)
    entries = load_corpus(args.corpus, limits=limits)
    merged = Report(",".join(names))
    for name in names:
        rep = verify_suite(entries, name, limits, jobs=args.jobs)
        merged.lines.extend(rep.lines)
        merged.wall_seconds += rep.wall_seconds
    _emit(merged, args.report)
    return 1 if merged.fails else 0


def _cmd_scan(args) -> int:
    return _run_suites(args, ["newman_scan"])


def _cmd_verify(args) -> int:
    if args.suite.strip() == "all":
        names = suite_names()
    else:
        names = [s.strip() for s in args.suite.split(",") if s.strip()]
        unknown = [n for n in names if n not in suite_names()]
        if unknown or not names:
            print(f"unknown suite(s): {', '.join(unknown) or '(none given)'}; "
                  f"known: {', '.join(suite_names())}", file=sys.stderr)
            return 2
    return _run_suites(args, names)


def _cmd_info(args) -> int:
    from .lattice import maximal_subgroup_classes
    from .structure import fitting_subgroup, o_p

    limits = DEFAULT_LIMITS.with_lattice_bound(args.lattice_bound)
    entries = load_corpus(args.corpus, limits=limits)
    match = [e for e in entries if e.name == args.group_name]
    if not match:
        print(f"no corpus entry named {args.group_name!r} in {args.corpus}",
              file=sys.stderr)
        return 2
    entry = match[0]
    group = entry.build(limits)
    print(f"name:      {entry.name}")
    print(f"degree:    {group.degree}")
    print(f"order:     {group.order}")
    print(f"primes:    {' '.join(str(p) for p in group.primes()) or '-'}")
    print(f"solvable:  {'yes' if group.is_solvable() else 'no'}")
    if entry.tags:
        print(f"tags:      {','.join(entry.tags)}")
    fit = fitting_subgroup(group, limits)
    print(f"fitting:   order {fit.order}")
    for p in group.primes():
        print(f"O_{p}:       order {o_p(group, p, limits).order}")
    if group.order <= limits.lattice_bound:
        nmax = len(maximal_subgroup_classes(group, limits))
        print(f"maximal:   {nmax} conjugacy classes of maximal subgroups")
    else:
        print(f"maximal:   skipped (order above lattice bound {limits.lattice_bound})")
    return 0


def _cmd_validate(args) -> int:
    entries = load_corpus(args.corpus)
    print(f"{args.corpus}: {len(entries)} entries ok")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"scan-newman": _cmd_scan, "verify": _cmd_verify,
               "info": _cmd_info, "corpus-validate": _cmd_validate}[args.command]
    try:
        return handler(args)
    except CorpusError as exc:
        print(f"corpus error: {exc}", file=sys.stderr)
        return 2
    except NewmanlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
