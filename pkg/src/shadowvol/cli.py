"""Command-line interface.

    shadowvol volume JOB.json [--seed N] [--tol T] [--cross-check] [--json-out FILE]
    shadowvol check JOB.json
    shadowvol examples NAME

Reports are JSON on stdout.  Exit codes: 0 success, 1 validation failure,
2 numerical gate failure.
"""

import argparse
import json
import sys

from .errors import InvalidJob, ShadowVolError
from .fixtures import EXAMPLES, get_example
from .pipeline import parse_job, run_check, run_volume


def cmd_examples(name):
    return get_example(name)


def _load_job(path, args):
    try:
        if path == "-":
            obj = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                obj = json.load(fh)
    except OSError as exc:
        raise InvalidJob(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidJob(f"invalid JSON in {path}: {exc}") from None
    job = parse_job(obj)
    if args.tol is not None:
        job.tolerances["saddle"] = args.tol
    if args.sep_tol is not None:
        job.tolerances["sep"] = args.sep_tol
    if args.agree_tol is not None:
        job.tolerances["agree"] = args.agree_tol
    return job


def cmd_volume(job, seed=None, cross_check=False):
    return run_volume(job, seed=seed, cross=cross_check)


def cmd_check(job, seed=None):
    return run_check(job, seed=seed)


def _emit(obj, json_out):
    text = json.dumps(obj, sort_keys=True, indent=2)
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="shadowvol",
        description="Complex volume of a boundary-parabolic link representation "
        "from a PD code and a quandle shadow-coloring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def job_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("job", help="job JSON file ('-' for stdin)")
        p.add_argument("--seed", type=int, default=None, help="RNG seed for the region-coloring search")
        p.add_argument("--tol", type=float, default=None, help="saddle and integrality tolerance (default 1e-9)")
        p.add_argument("--sep-tol", type=float, default=None, help="genericity separation (default 1e-9)")
        p.add_argument("--agree-tol", type=float, default=None, help="cross-check agreement mod pi^2 (default 1e-6)")
        p.add_argument("--json-out", default=None, help="also write the report to this file")
        return p

    vol = job_command("volume", "compute the complex volume")
    vol.add_argument("--cross-check", action="store_true", help="also evaluate the triangulation sum")
    job_command("check", "validate diagram and coloring only")
    ex = sub.add_parser("examples", help="print a built-in job")
    ex.add_argument("name", help="one of: " + ", ".join(sorted(EXAMPLES)))
    ex.add_argument("--json-out", default=None)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "examples":
            _emit(cmd_examples(args.name), args.json_out)
            return 0
        job = _load_job(args.job, args)
        if args.command == "check":
            report, code = cmd_check(job, args.seed)
        else:
            report, code = cmd_volume(job, args.seed, args.cross_check)
        _emit(report, args.json_out)
        return code
    except ShadowVolError as exc:
        _emit(exc.to_json(), getattr(args, "json_out", None))
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
