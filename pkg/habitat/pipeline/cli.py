"""habitat.pipeline.cli.
~~~~~~~~~~~~~~~~~~~~~~

``habitat`` command line. Exit codes: 0 success, 2 configuration error,
3 upstream data error, 4 numerical failure.
"""

import argparse
import json
import logging
import os
import sys

from habitat import __version__
from habitat.common.errors import HabitatError
from habitat.synth import SyntheticSpec
from habitat.synth import run_benchmark

from .config import PipelineConfig
from .runner import STAGES
from .runner import PipelineRunner

log = logging.getLogger(__name__)

LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def configure_logging(verbosity):
    level = LOG_LEVELS[min(verbosity, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def add_config_arguments(parser):
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--seed", type=int, default=None, help="random seed")
    parser.add_argument(
        "--offline",
        action="store_const",
        const=True,
        default=None,
        help="use cached GBIF responses only",
    )
    parser.add_argument("--cache-dir", dest="cache_dir", default=None)
    parser.add_argument("--species", dest="species_name", default=None, help="scientific name")
    parser.add_argument("--image", dest="image_path", default=None, help="photo to identify")
    parser.add_argument("--climate-dir", dest="climate_dir", default=None)
    parser.add_argument("--land-mask", dest="land_mask_path", default=None)
    parser.add_argument("--max-records", dest="max_records", type=int, default=None)
    parser.add_argument("--k", dest="k_treatments", type=int, default=None)
    parser.add_argument(
        "--no-llm",
        dest="llm_enabled",
        action="store_const",
        const=False,
        default=None,
        help="rule-based explanations only",
    )
    parser.add_argument(
        "--standardize",
        action="store_const",
        const=True,
        default=False,
        help="scale columns to unit variance before structure learning",
    )


CONFIG_OVERRIDES = (
    "seed",
    "offline",
    "cache_dir",
    "species_name",
    "image_path",
    "climate_dir",
    "land_mask_path",
    "max_records",
    "k_treatments",
    "llm_enabled",
)


def create_parser():
    parser = argparse.ArgumentParser(
        prog="habitat",
        description="Species habitat drivers from a photo or a name: "
        "occurrences, climate, causal graph, effects and explanations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for stage in STAGES:
        sub = commands.add_parser(stage, help=f"run the {stage} stage on its own")
        add_config_arguments(sub)
    sub = commands.add_parser("run", help="run every stage and write the report")
    add_config_arguments(sub)

    sub = commands.add_parser("synth", help="benchmark on synthetic ground truth")
    sub.add_argument("--spec", required=True, help="synthetic spec JSON file")
    sub.add_argument("--trials", type=int, default=20)
    sub.add_argument("--bootstrap", type=int, default=100)
    sub.add_argument("--output", default="results.json", help="results JSON file")
    return parser


def load_config(args):
    overrides = {key: getattr(args, key) for key in CONFIG_OVERRIDES}
    config = PipelineConfig.load(args.config, overrides)
    if args.standardize:
        config["notears"] = dict(config.notears, center_only=False)
    return config


def print_json(data):
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


def cmd_run(args):
    config = load_config(args)
    report = PipelineRunner(config).run()
    for exp in report.explanations:
        print(f"{exp.variable:>6} {exp.ate:+.3f}  {exp.rule_text}")
    print(os.path.join(config.run_dir, "report.md"))
    return 0


def cmd_stage(args):
    config = load_config(args)
    runner = PipelineRunner(config)
    runner.run_stage(args.command)
    if args.command == "identify":
        print_json(runner.get_result("identify"))
    print(runner.run_dir)
    return 0


def cmd_synth(args):
    spec = SyntheticSpec.from_file(args.spec)
    result = run_benchmark(spec, trials=args.trials, bootstrap=args.bootstrap)
    print(result.format_table())
    with open(args.output, "w", encoding="utf-8") as f:
        f.write(json.dumps(result.to_dict(), indent=2, sort_keys=True) + "\n")
    print(args.output)
    return 0


def main(argv=None):
    args = create_parser().parse_args(argv)
    configure_logging(args.verbose)
    if args.command == "run":
        handler = cmd_run
    elif args.command == "synth":
        handler = cmd_synth
    else:
        handler = cmd_stage
    try:
        return handler(args)
    except HabitatError as error:
        log.debug("Command %s failed", args.command, exc_info=True)
        sys.stderr.write(f"habitat: {error}\n")
        return error.exit_code
