"""
Command-line entry point for sphere-embed
"""

import argparse
import sys
from typing import List, Optional

from ..errors import InputError, SphereEmbedError
from ..serialization import dumps
from .commands import COMMAND_TABLE, EXIT_INPUT, EXIT_NEGATIVE
from .config import GENERATE_KINDS, GLOBAL_PREFIX, MODES, RunConfig


def _add_global_flags(parser: argparse.ArgumentParser, prefix: str = "") -> None:
    """Flags accepted before and after the subcommand; after wins."""
    parser.add_argument(
        "--seed", dest=f"{prefix}seed", type=int, help="seed for sampled runs"
    )
    parser.add_argument(
        "--output", dest=f"{prefix}output", help="write the JSON result to this file"
    )
    parser.add_argument(
        "--cross-check",
        dest=f"{prefix}cross_check",
        action="store_true",
        default=None,
        help="attach a floating-point cross-check of the certificate",
    )
    parser.add_argument(
        "--trials",
        dest=f"{prefix}trials",
        type=int,
        help="cross-check trials (rescaled placements)",
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common)

    parser = argparse.ArgumentParser(
        prog="sphere-embed",
        description="Embeddability of simplicial complexes on few vertices",
    )
    _add_global_flags(parser, prefix=GLOBAL_PREFIX)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[common], help="decide embeddability")
    analyze.add_argument("complex")
    analyze.add_argument("--dim", type=int, required=True)

    embed = sub.add_parser(
        "embed", parents=[common], help="construct a certified placement"
    )
    embed.add_argument("complex")
    embed.add_argument("--dim", type=int, required=True)
    embed.add_argument(
        "--linear", action="store_true", help="embed into R^d instead of S^d"
    )

    verify = sub.add_parser("verify", parents=[common], help="certify a placement")
    verify.add_argument("complex")
    verify.add_argument("placement")
    verify.add_argument("--mode", choices=MODES, default="geodesic")

    witness = sub.add_parser(
        "witness", parents=[common], help="find disjoint faces whose images meet"
    )
    witness.add_argument("complex")
    witness.add_argument("placement")

    generate = sub.add_parser(
        "generate", parents=[common], help="write a named complex"
    )
    generate.add_argument("kind", choices=GENERATE_KINDS)
    generate.add_argument("params", nargs="*")
    generate.add_argument("--leftover", type=int, default=0)

    enumerate_ = sub.add_parser(
        "enumerate",
        parents=[common],
        help="sweep all (or sampled) complexes on n vertices",
    )
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--dim", type=int, help="sphere dimension (default n-3)")
    enumerate_.add_argument("--sample", type=int, help="number of sampled complexes")
    enumerate_.add_argument("--linear", action="store_true")
    enumerate_.add_argument(
        "--stream", action="store_true", help="write one telemetry record per complex"
    )

    ekr = sub.add_parser(
        "ekr", parents=[common], help="maximum intersecting k-set family"
    )
    ekr.add_argument("--n", type=int, required=True)
    ekr.add_argument("--k", type=int, required=True)
    return parser


def _emit(payload, output: Optional[str]) -> None:
    text = "none\n" if payload is None else dumps(payload)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = RunConfig.from_namespace(args).validate()
        payload, code = COMMAND_TABLE[config.command](config)
        _emit(payload, config.output)
        return code
    except SystemExit as exc:
        # argparse has already printed usage or help
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    except InputError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SphereEmbedError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except OSError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    """Main entry point for the sphere-embed command."""
    sys.exit(run())


if __name__ == "__main__":
    main()
