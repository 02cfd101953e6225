# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

import os
import pathlib
from functools import lru_cache

from sgcalc import hooks
from sgcalc.engine.quiver_algebra import parse_algebra, parse_module

FIXTURE_DIR = pathlib.Path(__file__).parent


def fixture_names():
	return list(hooks.fixtures) + list(hooks.module_fixtures) + list(hooks.model_fixtures)


def resolve(path_or_name):
	"""A file path, or the bundled fixture of that name."""
	if os.path.exists(path_or_name):
		return pathlib.Path(path_or_name)
	candidate = FIXTURE_DIR / f"{path_or_name}.json"
	if candidate.exists():
		return candidate
	raise FileNotFoundError(f"no such file or fixture: {path_or_name}")


@lru_cache(maxsize=None)
def load_algebra(name):
	return parse_algebra(resolve(name))


def load_module(algebra_name, module_name):
	return parse_module(load_algebra(algebra_name), resolve(f"{algebra_name}__{module_name}"))
