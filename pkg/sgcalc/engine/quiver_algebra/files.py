# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""Algebra and module files: schema validation, parsing and serialization."""

import json
import pathlib
from functools import lru_cache

import jsonschema

from sgcalc.config import get_settings
from sgcalc.engine.linalg_exact import Field
from sgcalc.engine.quiver_algebra.quiver_algebra import PathExpr, Quiver, build_algebra
from sgcalc.engine.quiver_algebra.representation import Representation
from sgcalc.exceptions import SchemaError

SCHEMA_DIR = pathlib.Path(__file__).parent


@lru_cache(maxsize=None)
def load_schema(name):
	return json.loads((SCHEMA_DIR / name).read_text(encoding="utf-8"))


def json_pointer(parts):
	return "".join("/" + str(part).replace("~", "~0").replace("/", "~1") for part in parts)


def validate(data, schema_name, schema_dir=None):
	"""Raise SchemaError for the first violation, located by JSON pointer."""
	if schema_dir is None:
		schema = load_schema(schema_name)
	else:
		schema = json.loads((pathlib.Path(schema_dir) / schema_name).read_text(encoding="utf-8"))
	validator = jsonschema.Draft7Validator(schema)
	errors = sorted(validator.iter_errors(data), key=lambda e: [str(p) for p in e.absolute_path])
	if errors:
		error = errors[0]
		raise SchemaError(error.message, pointer=json_pointer(error.absolute_path), schema=schema_name)


def read_json(path):
	with open(path, encoding="utf-8") as handle:
		return json.load(handle)


def algebra_from_dict(data, settings=None):
	settings = settings or get_settings()
	validate(data, "algebra.schema.json")
	try:
		field = Field(**data["field"])
	except ValueError as exc:
		raise SchemaError(str(exc), pointer="/field") from exc
	quiver = Quiver.from_edges(
		data["quiver"]["vertices"],
		[(arrow["name"], arrow["from"], arrow["to"]) for arrow in data["quiver"]["arrows"]],
	)
	relations = [
		[PathExpr(tuple(term["path"]), term["coeff"]) for term in relation] for relation in data["relations"]
	]
	return build_algebra(field, quiver, relations, settings.length_cap, settings.path_space_cap)


def algebra_to_dict(algebra):
	return algebra.describe()


def module_from_dict(algebra, data):
	validate(data, "module.schema.json")
	quiver = algebra.quiver
	for v in data["dims"]:
		if v not in quiver.vertex_index:
			raise SchemaError(f"unknown vertex {v!r}", pointer=json_pointer(["dims", v]))
	for name in data["arrows"]:
		if name not in quiver.arrow_index:
			raise SchemaError(f"unknown arrow {name!r}", pointer=json_pointer(["arrows", name]))
	return Representation.build(algebra, data["dims"], data["arrows"])


def module_to_dict(rep):
	return rep.describe()


def parse_algebra(path, settings=None):
	return algebra_from_dict(read_json(path), settings)


def parse_module(algebra, path):
	return module_from_dict(algebra, read_json(path))
