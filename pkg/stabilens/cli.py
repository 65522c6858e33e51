#!/usr/bin/env python3
"""
StabiLens CLI - stabilizer code parameters from Hermitian self-orthogonal codes
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from . import __version__
from .catalog import (
    compare, data_path, family, generate_table, read_baseline, read_catalog, read_seeds,
    records_report, summarize, table_names
)
from .constructor import Certificate, construct, exhaustive_construct_k1, failed_checks
from .core.config import StabiLensConfig
from .core.errors import MalformedCertificate, NoSolution, SearchExhausted, StabiLensError
from .core.types import CatalogReport
from .derive import ClosureEngine, best_extension, derive_from_theorem, extension_candidates, record_to_dict
from .derive.chain import format_chain
from .partition import kmax
from .reporter import CSVReporter, get_reporter
from .utils import RangeUtils

console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True
    )


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith('\n'):
        sys.stdout.write('\n')


def _emit_json(data: Any) -> None:
    _emit(json.dumps(data, indent=2))


def _write_report(report: CatalogReport, args, config: StabiLensConfig, default_format: str) -> None:
    fmt = 'json' if args.json else (args.format or default_format)
    reporter = get_reporter(fmt, config)
    if args.out:
        err_console.print(f"[green]{reporter.generate(report, args.out)}[/green]")
    elif fmt == 'console':
        reporter.generate(report)
    else:
        _emit(reporter.render(report))


# --- commands ----------------------------------------------------------------

def cmd_kmax(args, config: StabiLensConfig) -> int:
    e = args.q ** args.m
    result = kmax(e, args.n)
    data = {
        'q': args.q, 'm': args.m, 'e': e, 'n': args.n,
        'a': result.eadic.a, 'b': result.eadic.b,
        'kmax': result.value,
        'case': result.case_tag.value,
        'witness': list(result.witness.parts),
        'branch': result.witness.branch,
    }
    if args.json:
        _emit_json(data)
        return EXIT_OK
    table = Table(title=f"K_n for e = {e}, n = {args.n}")
    table.add_column("Field", style="cyan")
    table.add_column("Value", style="magenta")
    table.add_row("e-adic form", f"{args.n} = {result.eadic.a} * {e} + {result.eadic.b}")
    table.add_row("case", result.case_tag.value)
    table.add_row("K", str(result.value))
    table.add_row("witness", "{" + ", ".join(str(x) for x in result.witness.parts) + "}")
    if result.witness.branch:
        table.add_row("branch", result.witness.branch)
    console.print(table)
    return EXIT_OK


def cmd_derive(args, config: StabiLensConfig) -> int:
    record = derive_from_theorem(args.q, args.m, args.n, args.k)
    if args.json:
        _emit_json(record_to_dict(record))
    else:
        console.print(Panel.fit(f"[bold]{escape(str(record.params))}[/bold]\n[dim]{format_chain(record)}[/dim]",
                                title=record.rule.value, border_style="blue"))
    return EXIT_OK


def cmd_family(args, config: StabiLensConfig) -> int:
    skip = set(RangeUtils.parse_int_range(args.skip)) if args.skip else set()
    ks = [k for k in RangeUtils.parse_int_range(args.k) if k not in skip]
    records = family(args.q, args.m, args.n, ks, args.lengthen)
    caption = f"[[{args.m}n, {args.m}n - {2 * args.m}k, >= k+1]]_{args.q} with n = {args.n}"
    _write_report(records_report(records, {'caption': caption}), args, config, 'console')
    return EXIT_OK


def cmd_table(args, config: StabiLensConfig) -> int:
    report = generate_table(args.name, config)
    _write_report(report, args, config, config.reporter.default_format)
    return EXIT_OK


def cmd_closure(args, config: StabiLensConfig) -> int:
    seeds = read_seeds(args.seeds)
    result = ClosureEngine(config).run(seeds, args.n_max, args.k_min, args.max_steps)
    report = records_report(result.records, {'caption': f"closure of {len(seeds)} seeds"})
    _write_report(report, args, config, 'csv')
    return EXIT_OK


def cmd_construct(args, config: StabiLensConfig) -> int:
    if args.exhaustive:
        if args.k != 1:
            raise ValueError("--exhaustive only builds k = 1 codes")
        cert = exhaustive_construct_k1(args.q, args.m, args.n, config)
    else:
        cert = construct(args.q, args.m, args.n, args.k, args.seed, config)
    text = cert.to_json()
    if args.out:
        Path(args.out).write_text(text + '\n', encoding='utf-8')
        err_console.print(f"[green]Certificate for [{cert.n}, {cert.k}]_{cert.field.order} saved to {args.out}[/green]")
    else:
        _emit(text)
    return EXIT_OK


def cmd_verify(args, config: StabiLensConfig) -> int:
    try:
        cert = Certificate.from_json(Path(args.cert).read_text(encoding='utf-8'))
        failed = failed_checks(cert, config.enumeration.max_enum)
    except MalformedCertificate as e:
        failed = [f"malformed: {e.reason}"]
    if args.json:
        _emit_json({'verified': not failed, 'failed_checks': failed})
    elif failed:
        err_console.print(f"[red]Verification failed:[/red] {', '.join(failed)}")
    else:
        console.print("[green]Certificate verified[/green]")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_compare(args, config: StabiLensConfig) -> int:
    if args.table:
        ours = generate_table(args.table, config).entries
    elif args.ours:
        ours = read_catalog(args.ours)
    else:
        raise ValueError("compare needs --ours FILE or --table NAME")
    baseline = read_baseline(args.baseline or data_path('literature_baseline.csv'))
    verdicts = compare(ours, baseline)
    if args.json:
        _emit_json({
            'summary': summarize(verdicts),
            'verdicts': [
                {'theirs': str(v.theirs.params), 'ours': str(v.ours.params) if v.ours else None,
                 'verdict': v.verdict.value}
                for v in verdicts
            ]
        })
        return EXIT_OK
    content = CSVReporter(config).render_verdicts(verdicts)
    if args.out:
        Path(args.out).write_text(content, encoding='utf-8')
    else:
        _emit(content)
    return EXIT_OK


def cmd_extend(args, config: StabiLensConfig) -> int:
    candidates = extension_candidates(args.q, args.N, args.d)
    best = best_extension(args.q, args.N, args.d)
    if args.json:
        _emit_json({
            'best': record_to_dict(best),
            'candidates': [{'m': c.m, 'n': c.n, 'kmax': c.kmax, 'K': c.params.K} for c in candidates]
        })
        return EXIT_OK
    table = Table(title=f"Extension degrees for N = {args.N}, d = {args.d} over F_{args.q}")
    table.add_column("m'", justify="right")
    table.add_column("n'", justify="right")
    table.add_column("K_n'", justify="right")
    table.add_column("Code")
    for c in candidates:
        style = "bold green" if c.m == best.inputs.m else "white"
        table.add_row(str(c.m), str(c.n), str(c.kmax), f"[{style}]{escape(str(c.params))}[/{style}]")
    console.print(table)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, StabiLensConfig], int]] = {
    'kmax': cmd_kmax,
    'derive': cmd_derive,
    'family': cmd_family,
    'table': cmd_table,
    'closure': cmd_closure,
    'construct': cmd_construct,
    'verify': cmd_verify,
    'compare': cmd_compare,
    'extend': cmd_extend,
}


def _seed(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"seed must be a non-negative integer, got {value}")
    return value


def _add_output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=['csv', 'json', 'console', 'markdown'], help="Report format.")
    parser.add_argument("--out", help="Output file (stdout if omitted).")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabilens",
        description="StabiLens: stabilizer code parameters from Hermitian self-orthogonal codes."
    )
    parser.add_argument("--json", action="store_true", help="Machine-readable JSON output.")
    parser.add_argument("--max-enum", type=int, help="Enumeration guard for distance computations.")
    parser.add_argument("--budget", type=int, help="Point-set trials for the witness search.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging.")
    parser.add_argument("--version", action="version", version=f"StabiLens {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kmax", help="K_n with its case and witness partition.")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("derive", help="One [[mn, mn-2mk, >=k+1]]_q code.")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("family", help="Codes for a range of k.")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", required=True, help="Range such as 1..7 or 3,5,8..10.")
    p.add_argument("--skip", help="Values of k to leave out.")
    p.add_argument("--lengthen", type=int, default=0, help="Lengthening steps applied to every row.")
    _add_output_options(p)

    p = sub.add_parser("table", help="Regenerate a named table.")
    p.add_argument("--name", required=True, choices=table_names())
    _add_output_options(p)

    p = sub.add_parser("closure", help="Closure of seed codes under lengthening and subcodes.")
    p.add_argument("--seeds", required=True, help="CSV with q,N,K,D (and optionally chain).")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-min", type=int, default=0)
    p.add_argument("--max-steps", type=int)
    _add_output_options(p)

    p = sub.add_parser("construct", help="Build and certify a witness code.")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=_seed, default=0, help="Non-negative RNG seed.")
    p.add_argument("--exhaustive", action="store_true", help="Deterministic scan (k = 1 only).")
    p.add_argument("--out", help="Certificate JSON file (stdout if omitted).")

    p = sub.add_parser("verify", help="Re-check a certificate from its generator matrix.")
    p.add_argument("--cert", required=True)

    p = sub.add_parser("compare", help="Compare a catalog against baseline parameters.")
    p.add_argument("--ours", help="Catalog CSV (q,N,K,D,rule,chain).")
    p.add_argument("--table", choices=table_names(), help="Use a generated table as ours.")
    p.add_argument("--baseline", help="Baseline CSV (q,N,K,D,citation); bundled literature values by default.")
    p.add_argument("--out")

    p = sub.add_parser("extend", help="Best extension degree for a target length and distance.")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    config = StabiLensConfig()
    if args.max_enum is not None:
        config.enumeration.max_enum = args.max_enum
    if args.budget is not None:
        config.constructor.point_sets = args.budget

    try:
        return COMMANDS[args.command](args, config)
    except (SearchExhausted, NoSolution) as e:
        err_console.print(f"[red]no witness:[/red] {escape(str(e))}")
        return EXIT_VERIFY_FAILED
    except (StabiLensError, ValueError, OSError) as e:
        err_console.print(f"[red]error:[/red] {escape(str(e))}")
        logger.debug("command %s failed", args.command, exc_info=True)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
