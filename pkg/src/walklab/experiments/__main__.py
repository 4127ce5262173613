"""Command-line runner: ``python -m walklab.experiments``."""

import argparse
import sys
from pathlib import Path

from walklab.experiments import ExperimentSpec, list_experiments, run


def _parse_pairs(pairs, where):
    params = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            print(f"error: malformed {where} entry {item!r}, "
                  "expected key=value", file=sys.stderr)
            return None
        params[key.strip()] = value.strip()
    return params


def _read_config(path):
    lines = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return _parse_pairs(lines, "config file")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="python -m walklab.experiments",
        description="Run registered walklab experiments.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="print the experiment catalog")
    runner = sub.add_parser("run", help="execute one experiment")
    runner.add_argument("name", help="registered experiment name")
    runner.add_argument("--param", action="append", default=[],
                        metavar="KEY=VALUE", help="set one parameter")
    runner.add_argument("--config", metavar="FILE",
                        help="key=value file; flags override it")
    runner.add_argument("--seed", type=int, default=None,
                        help="random seed for stochastic experiments")
    runner.add_argument("--out", default=".", metavar="DIR",
                        help="output directory (default: current)")
    args = parser.parse_args(argv)

    if args.command == "list":
        list_experiments()
        return 0

    params = {}
    seed = args.seed
    if args.config:
        try:
            from_file = _read_config(args.config)
        except OSError as err:
            print(f"error: cannot read config: {err}", file=sys.stderr)
            return 2
        if from_file is None:
            return 2
        if "seed" in from_file:
            file_seed = from_file.pop("seed")
            try:
                file_seed = int(file_seed)
            except ValueError:
                print(f"error: config seed {file_seed!r} is not an integer",
                      file=sys.stderr)
                return 2
            if seed is None:
                seed = file_seed
        params.update(from_file)
    from_flags = _parse_pairs(args.param, "--param")
    if from_flags is None:
        return 2
    params.update(from_flags)

    outdir = Path(args.out)
    if not outdir.is_dir():
        print(f"error: output directory {args.out!r} does not exist",
              file=sys.stderr)
        return 2
    return run(ExperimentSpec(args.name, params, seed, str(outdir)))


if __name__ == "__main__":
    sys.exit(main())
