# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""``sgcalc <verb> [options]``: parse, dispatch to :mod:`sgcalc.api`, emit canonical JSON.

Exit codes: 0 success, 1 error, 2 verification mismatch.
"""

import argparse
import json
import logging
import sys

from sgcalc import __version__, api
from sgcalc.config import configure_logging, get_settings
from sgcalc.exceptions import SgcalcError, UsageError

log = logging.getLogger(__name__)

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH = 0, 1, 2


class ArgumentParser(argparse.ArgumentParser):
	def error(self, message):
		raise UsageError(message)


def build_parser():
	parser = ArgumentParser(prog="sgcalc", description="Singularity-category invariants of bound quiver algebras.")
	parser.add_argument("verb", help=", ".join(sorted(api.COMMANDS)))
	parser.add_argument("--algebra", help="algebra file or bundled fixture name")
	parser.add_argument("--source", help="module file, fixture, simple:<v> or projective:<v>")
	parser.add_argument("--target", help="module file, fixture, simple:<v> or projective:<v>")
	parser.add_argument("--model", help="adjacency model file overriding the quiver's")
	parser.add_argument("--shift", type=int)
	parser.add_argument("--pmax", type=int)
	parser.add_argument("--window", type=int)
	parser.add_argument("--kmax", type=int)
	parser.add_argument("--seed", type=int)
	parser.add_argument("--power", type=int)
	parser.add_argument("--bound", type=int)
	parser.add_argument("--ext-bound", type=int)
	parser.add_argument("--depth", type=int)
	parser.add_argument("--count", type=int, help="sequences per property suite")
	parser.add_argument("--out", help="write the report here instead of stdout")
	parser.add_argument("--log-level", default=None)
	return parser


def settings_for(args):
	return get_settings().replace(
		p_max=args.pmax,
		window=args.window,
		k_max=args.kmax,
		seed=args.seed,
		proj_dim_bound=args.bound,
		ext_bound=args.ext_bound,
		depth=args.depth,
	)


def canonical_json(report):
	return json.dumps(report, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def emit(report, path=None):
	text = canonical_json(report)
	if path is None:
		sys.stdout.write(text)
		sys.stdout.flush()
		return
	with open(path, "w", encoding="utf-8", newline="\n") as handle:
		handle.write(text)


def run(args):
	"""Returns (report, ok)."""
	settings = settings_for(args)
	options = {key: value for key, value in vars(args).items() if key not in ("verb", "out", "log_level")}
	result, ok, digests = api.run_command(args.verb, options, settings)
	report = {
		"command": {"verb": args.verb, "options": {k: v for k, v in options.items() if v is not None}},
		"inputs": digests,
		"result": result,
		"settings": settings.as_dict(),
		"seed": settings.seed,
		"version": __version__,
	}
	return report, ok


def _fail(error):
	sys.stderr.write(canonical_json({"error": error}))
	return EXIT_ERROR


def main(argv=None):
	try:
		args = build_parser().parse_args(argv)
	except UsageError as exc:
		return _fail(exc.to_dict())
	try:
		configure_logging(args.log_level)
	except ValueError:
		return _fail(UsageError(f"unknown log level {args.log_level!r}", option="log_level").to_dict())
	try:
		report, ok = run(args)
		emit(report, args.out)
	except SgcalcError as exc:
		log.debug("command failed", exc_info=True)
		return _fail(exc.to_dict())
	except json.JSONDecodeError as exc:
		return _fail({"code": "SCHEMA_ERROR", "message": str(exc), "detail": {"pointer": ""}})
	except OSError as exc:
		return _fail({"code": "IO_ERROR", "message": str(exc), "detail": {}})
	if not ok:
		log.warning("%s found mismatches", args.verb)
		return EXIT_MISMATCH
	return EXIT_OK


if __name__ == "__main__":
	sys.exit(main())
