# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""Semisimple adjacency model of the stable category of a radical-square-zero algebra.

Objects are dimension vectors of semisimple modules. The loop functor sends
``x`` to ``T x`` and clears the sink coordinates, whose simples are projective.
A morphism is one matrix per vertex.
"""

import logging
import pathlib
from dataclasses import dataclass
from functools import cached_property

from sgcalc.config import get_settings
from sgcalc.engine.homological_engine import Periodicity
from sgcalc.engine.linalg_exact import ExactMatrix, Field, block_diag
from sgcalc.engine.quiver_algebra import validate
from sgcalc.engine.stabilization import StabObject, Stabilization
from sgcalc.exceptions import AlgebraMismatch, SchemaError

log = logging.getLogger(__name__)

SCHEMA_DIR = pathlib.Path(__file__).parent


@dataclass(frozen=True)
class AdjacencyModel:
	"""``adjacency[j][i]`` counts the arrows i -> j."""

	vertices: tuple
	adjacency: tuple
	field: Field = Field.rational()

	def __post_init__(self):
		object.__setattr__(self, "vertices", tuple(self.vertices))
		object.__setattr__(self, "adjacency", tuple(tuple(int(c) for c in row) for row in self.adjacency))
		n = len(self.vertices)
		if len(self.adjacency) != n or any(len(row) != n for row in self.adjacency):
			raise SchemaError(f"adjacency must be a {n}x{n} matrix", pointer="/adjacency")
		for j, row in enumerate(self.adjacency):
			for i, count in enumerate(row):
				if count < 0:
					raise SchemaError("arrow counts are non-negative", pointer=f"/adjacency/{j}/{i}")

	@classmethod
	def from_quiver(cls, quiver, field=None):
		return cls(quiver.vertices, quiver.adjacency(), field or Field.rational())

	@classmethod
	def from_dict(cls, data, field=None):
		validate(data, "adjacency_model.schema.json", schema_dir=SCHEMA_DIR)
		return cls(data["vertices"], data["adjacency"], field or Field.rational())

	def to_dict(self):
		return {"vertices": list(self.vertices), "adjacency": [list(row) for row in self.adjacency]}

	def check_quiver(self, quiver):
		if self.vertices != quiver.vertices:
			raise AlgebraMismatch("model vertices differ from the quiver's", model=list(self.vertices))

	@cached_property
	def sinks(self):
		return tuple(not any(row[i] for row in self.adjacency) for i in range(len(self.vertices)))

	def normalize(self, dims):
		dims = tuple(dims)
		if not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
			raise SchemaError(f"dimensions must be integers, got {list(dims)}", pointer="/dims")
		if len(dims) != len(self.vertices) or any(d < 0 for d in dims):
			raise SchemaError(f"expected {len(self.vertices)} non-negative dimensions, got {list(dims)}", pointer="/dims")
		return tuple(0 if sink else d for d, sink in zip(dims, self.sinks))

	def unit(self, v):
		return self.normalize(1 if w == v else 0 for w in self.vertices)

	def apply(self, dims):
		return self.normalize(sum(c * d for c, d in zip(row, dims)) for row in self.adjacency)


@dataclass(frozen=True)
class GradedTuple:
	"""A semisimple dimension vector placed in degree ``shift``."""

	dims: tuple
	shift: int = 0

	def stab(self, model):
		return StabObject(model.normalize(self.dims), self.shift)


@dataclass(frozen=True)
class ModelMorphism:
	source: tuple
	target: tuple
	blocks: tuple


class ModelHomSpace:
	"""All per-vertex matrices; the basis runs over vertices, then rows, then columns."""

	def __init__(self, field, source, target):
		self.field = field
		self.source = source
		self.target = target
		self.dim = sum(s * t for s, t in zip(source, target))

	@cached_property
	def basis(self):
		out = []
		for k, (s, t) in enumerate(zip(self.source, self.target)):
			for r in range(t):
				for c in range(s):
					blocks = [ExactMatrix.zeros(self.field, b, a) for a, b in zip(self.source, self.target)]
					blocks[k] = ExactMatrix.from_entries(self.field, {(r, c): 1}, (t, s))
					out.append(ModelMorphism(self.source, self.target, tuple(blocks)))
		return out

	def coordinate_items(self, f):
		position = 0
		for block, s, t in zip(f.blocks, self.source, self.target):
			for (r, c), value in block.items():
				yield position + r * s + c, value
			position += s * t

	def coordinates(self, f):
		values = [0] * self.dim
		for k, value in self.coordinate_items(f):
			values[k] = value
		return values

	def element(self, coeffs):
		coeffs = list(coeffs)
		blocks, position = [], 0
		for s, t in zip(self.source, self.target):
			entries = {(r, c): coeffs[position + r * s + c] for r in range(t) for c in range(s)}
			blocks.append(ExactMatrix.from_entries(self.field, entries, (t, s)))
			position += s * t
		return ModelMorphism(self.source, self.target, tuple(blocks))


class AdjacencyBackend:
	"""Linear looped backend over an :class:`AdjacencyModel`."""

	is_linear = True
	is_strictly_stable = False

	def __init__(self, model, settings=None):
		self.model = model
		self.settings = settings or get_settings()
		self._periods = {}

	@property
	def field(self):
		return self.model.field

	def source(self, f):
		return f.source

	def target(self, f):
		return f.target

	def identity(self, x):
		return ModelMorphism(x, x, tuple(ExactMatrix.identity(self.field, d) for d in x))

	def zero(self, x, y):
		return ModelMorphism(x, y, tuple(ExactMatrix.zeros(self.field, t, s) for s, t in zip(x, y)))

	def compose(self, g, f):
		return ModelMorphism(f.source, g.target, tuple(a @ b for a, b in zip(g.blocks, f.blocks)))

	def add(self, f, g):
		return ModelMorphism(f.source, f.target, tuple(a + b for a, b in zip(f.blocks, g.blocks)))

	def scale(self, f, c):
		return ModelMorphism(f.source, f.target, tuple(b.scale(c) for b in f.blocks))

	def omega(self, x):
		return self.model.apply(x)

	def omega_morphism(self, f):
		# one copy of f_i for every arrow i -> w, ordered by i
		blocks = []
		for row, sink in zip(self.model.adjacency, self.model.sinks):
			if sink:
				blocks.append(ExactMatrix.zeros(self.field, 0, 0))
				continue
			copies = [f.blocks[i] for i, count in enumerate(row) for _ in range(count)]
			blocks.append(block_diag(self.field, copies))
		return ModelMorphism(self.omega(f.source), self.omega(f.target), tuple(blocks))

	def equal(self, f, g):
		return f.blocks == g.blocks

	def hom_space(self, x, y):
		return ModelHomSpace(self.field, x, y)

	def is_zero_object(self, x):
		return not any(x)

	def object_size(self, x):
		return sum(x)

	def within_caps(self, x, y):
		cap = self.settings.max_module_dim
		if sum(x) > cap or sum(y) > cap:
			return False
		return sum(s * t for s, t in zip(x, y)) <= self.settings.max_hom_unknowns

	def describe(self, x):
		return {"dims": dict(zip(self.model.vertices, x))}

	def periodicity(self, x, bound):
		key = (x, bound)
		if key not in self._periods:
			self._periods[key] = self._find_period(x, bound)
		return self._periods[key]

	def _find_period(self, x, bound):
		iterates = [x]
		for b in range(1, bound + 1):
			previous = iterates[-1]
			if sum(previous) > self.settings.max_module_dim or not any(previous):
				return None
			current = self.omega(previous)
			if current in iterates:
				a = iterates.index(current)
				identity = self.identity(current)
				return Periodicity(a, b - a, identity, identity, "dimension vector repeats")
			iterates.append(current)
		return None


def model_hom_report(model, x, y, p_max=None, window=None, settings=None):
	"""Hom colimit between graded tuples, computed in the adjacency model."""
	settings = settings or get_settings()
	stab = Stabilization(AdjacencyBackend(model, settings), settings)
	return stab.hom_dim_report(x.stab(model), y.stab(model), p_max, window)
