"""Command line interface.

Subcommands::

    afvp run --config sim.cfg [--output-dir DIR] [--histopolate]
    afvp convergence --config sim.cfg --levels 16,32,64 --reference 256
                     [--output-dir DIR]

Exit codes: 0 ok, 2 config error, 3 CFL violation, 4 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .config import parse_config
from .errors import CFLError, ConfigError
from .runner import convergence, run, write_convergence


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="afvp",
        description="Split-step Active Flux solver for the 1D1V Vlasov-Poisson system",
    )
    parser.add_argument("--output-dir", default=None, help="override the config output directory")
    parser.add_argument(
        "--histopolate", action="store_true",
        help="also write histopolated point-value snapshots",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one simulation")
    p_run.add_argument("--config", required=True, help="path to a key=value config file")

    p_conv = sub.add_parser("convergence", help="run a grid-refinement sweep")
    p_conv.add_argument("--config", required=True)
    p_conv.add_argument("--levels", required=True, help="comma-separated resolutions, e.g. 16,32,64")
    p_conv.add_argument("--reference", required=True, type=int)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = parse_config(args.config)
        out = args.output_dir if args.output_dir is not None else config.output_dir
        if args.command == "run":
            result = run(config, output_dir=out, histopolate=args.histopolate)
            print(f"run complete: t = {result.state.t:g}, {len(result.rows)} diagnostics rows -> {out}")
        else:
            try:
                levels = [int(p) for p in args.levels.split(",") if p]
            except ValueError:
                raise ConfigError(f"cannot parse --levels {args.levels!r}") from None
            rows = convergence(config, levels, args.reference)
            os.makedirs(out, exist_ok=True)
            path = os.path.join(out, "convergence.csv")
            write_convergence(path, rows)
            for row in rows:
                print(f"N={row.n:5d}  eps_vp={row.eps:.6e}  order={row.order:.3f}")
            print(f"table -> {path}")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except CFLError as exc:
        print(f"CFL violation: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
