# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

import logging
from collections import defaultdict
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import NamedTuple

import networkx as nx

from sgcalc.config import get_settings
from sgcalc.engine.linalg_exact import ExactMatrix, rank, rref, vstack
from sgcalc.exceptions import (
	InadmissibleRelation,
	InfiniteDimensional,
	NotMonomial,
	NotQuadraticMonomial,
	QuiverError,
	RelationNotParallel,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
	name: str
	source: str
	target: str

	@property
	def is_loop(self):
		return self.source == self.target


class Path(NamedTuple):
	"""A path written in application order: ``arrows[0]`` is applied first."""

	start: str
	arrows: tuple = ()

	@property
	def length(self):
		return len(self.arrows)

	def then(self, other):
		"""``other`` applied after ``self``."""
		return Path(self.start, self.arrows + other.arrows)

	def label(self):
		return "e_" + self.start if not self.arrows else "".join(reversed(self.arrows))


@dataclass(frozen=True)
class Quiver:
	vertices: tuple
	arrows: tuple

	def __post_init__(self):
		object.__setattr__(self, "vertices", tuple(self.vertices))
		object.__setattr__(self, "arrows", tuple(self.arrows))
		if len(set(self.vertices)) != len(self.vertices):
			raise QuiverError("vertex names must be unique")
		names = [arrow.name for arrow in self.arrows]
		if len(set(names)) != len(names):
			raise QuiverError("arrow names must be unique")
		known = set(self.vertices)
		for arrow in self.arrows:
			if arrow.source not in known or arrow.target not in known:
				raise QuiverError(f"arrow {arrow.name} has an unknown endpoint", arrow=arrow.name)

	@classmethod
	def from_edges(cls, vertices, edges):
		"""``edges`` is an iterable of (name, source, target)."""
		return cls(tuple(vertices), tuple(Arrow(*edge) for edge in edges))

	@cached_property
	def vertex_index(self):
		return {v: i for i, v in enumerate(self.vertices)}

	@cached_property
	def arrow_index(self):
		return {arrow.name: i for i, arrow in enumerate(self.arrows)}

	def arrow(self, name):
		try:
			return self.arrows[self.arrow_index[name]]
		except KeyError:
			raise QuiverError(f"unknown arrow {name!r}", arrow=name) from None

	@cached_property
	def _outgoing(self):
		out = defaultdict(list)
		for arrow in self.arrows:
			out[arrow.source].append(arrow)
		return {v: tuple(out[v]) for v in self.vertices}

	@cached_property
	def _incoming(self):
		inc = defaultdict(list)
		for arrow in self.arrows:
			inc[arrow.target].append(arrow)
		return {v: tuple(inc[v]) for v in self.vertices}

	def outgoing(self, v):
		return self._outgoing[v]

	def incoming(self, v):
		return self._incoming[v]

	def end(self, path):
		return self.arrow(path.arrows[-1]).target if path.arrows else path.start

	def is_path(self, arrows):
		for first, second in zip(arrows, arrows[1:]):
			if self.arrow(first).target != self.arrow(second).source:
				return False
		return True

	def paths_by_length(self, max_length):
		"""Lists of paths of length 0..max_length in a fixed deterministic order."""
		layers = [[Path(v) for v in self.vertices]]
		for _ in range(max_length):
			layers.append(self.extend(layers[-1]))
		return layers

	def extend(self, layer):
		return [
			Path(path.start, path.arrows + (arrow.name,))
			for path in layer
			for arrow in self.outgoing(self.end(path))
		]

	def graph(self):
		graph = nx.MultiDiGraph()
		graph.add_nodes_from(self.vertices)
		for arrow in self.arrows:
			graph.add_edge(arrow.source, arrow.target, key=arrow.name)
		return graph

	def adjacency(self):
		"""``T[j][i]`` is the number of arrows i -> j."""
		n = len(self.vertices)
		table = [[0] * n for _ in range(n)]
		for arrow in self.arrows:
			table[self.vertex_index[arrow.target]][self.vertex_index[arrow.source]] += 1
		return table

	def describe(self):
		return {
			"vertices": list(self.vertices),
			"arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in self.arrows],
		}


@dataclass(frozen=True)
class PathExpr:
	"""One term ``coeff * path`` of a relation."""

	arrows: tuple
	coeff: object = 1

	@property
	def length(self):
		return len(self.arrows)


@dataclass(frozen=True, eq=False)
class BoundAlgebra:
	"""kQ/I with a normal-form basis of paths.

	``reducer`` sends every reducible path shorter than ``truncation`` to its
	normal form, a tuple of (basis path, coefficient); paths of length
	``truncation`` or more vanish.
	"""

	field: object
	quiver: Quiver
	relations: tuple
	basis: tuple
	nilpotency: int
	truncation: int
	reducer: dict = dataclass_field(repr=False)

	@property
	def identity_key(self):
		return (self.field, self.quiver, self.relations)

	def __eq__(self, other):
		if not isinstance(other, BoundAlgebra):
			return NotImplemented
		return self.identity_key == other.identity_key

	def __hash__(self):
		return hash(self.identity_key)

	@property
	def dimension(self):
		return len(self.basis)

	@cached_property
	def basis_index(self):
		return {path: i for i, path in enumerate(self.basis)}

	@cached_property
	def _basis_from(self):
		grouped = {v: defaultdict(list) for v in self.quiver.vertices}
		for path in self.basis:
			grouped[path.start][self.quiver.end(path)].append(path)
		return {v: {w: tuple(grouped[v][w]) for w in self.quiver.vertices} for v in self.quiver.vertices}

	def basis_from(self, v):
		"""Basis paths starting at ``v``, grouped by end vertex."""
		return self._basis_from[v]

	def normal_form(self, path):
		if path.length >= self.truncation:
			return ()
		if path in self.basis_index:
			return ((path, self.field.normalize(1)),)
		return self.reducer.get(path, ())

	def is_monomial(self):
		return all(len(relation) == 1 for relation in self.relations)

	def is_quadratic_monomial(self):
		return self.is_monomial() and all(relation[0].length == 2 for relation in self.relations)

	def monomial_relations(self):
		if not self.is_monomial():
			raise NotMonomial("algebra has a relation with more than one term")
		return [relation[0].arrows for relation in self.relations]

	def quadratic_relations(self):
		if not self.is_quadratic_monomial():
			raise NotQuadraticMonomial("algebra is not given by paths of length two")
		return [relation[0].arrows for relation in self.relations]

	def is_radical_square_zero(self):
		if not self.is_quadratic_monomial():
			return False
		length_two = {path.arrows for path in self.quiver.paths_by_length(2)[2]}
		return {relation[0].arrows for relation in self.relations} == length_two

	def describe(self):
		return {
			"field": self.field.describe(),
			"quiver": self.quiver.describe(),
			"relations": [
				[{"coeff": self.field.format(term.coeff), "path": list(term.arrows)} for term in relation]
				for relation in self.relations
			],
		}


def _check_relation(field, quiver, terms):
	merged = {}
	order = []
	for term in terms:
		arrows = tuple(term.arrows)
		for name in arrows:
			quiver.arrow(name)
		if len(arrows) < 2:
			raise InadmissibleRelation("relation terms must have length at least two", path=list(arrows))
		if not quiver.is_path(arrows):
			raise RelationNotParallel("relation term is not a path", path=list(arrows))
		if arrows not in merged:
			order.append(arrows)
			merged[arrows] = 0
		merged[arrows] = field.normalize(merged[arrows] + field.normalize(term.coeff))
	kept = tuple(PathExpr(arrows, merged[arrows]) for arrows in order if merged[arrows])
	if not order:
		raise InadmissibleRelation("empty relation")
	ends = {(quiver.arrow(t.arrows[0]).source, quiver.arrow(t.arrows[-1]).target) for t in kept}
	if len(ends) > 1:
		raise RelationNotParallel("relation terms do not share source and target", ends=sorted(ends))
	return kept


def _ideal_rows(field, quiver, relations, layers):
	"""Row vectors spanning the image of the ideal in kQ / J^(len(layers))."""
	max_length = len(layers) - 1
	columns = [path for layer in layers for path in layer]
	index = {path: i for i, path in enumerate(columns)}
	ending = defaultdict(list)
	starting = defaultdict(list)
	for path in columns:
		ending[quiver.end(path)].append(path)
		starting[path.start].append(path)
	entries = {}
	row = 0
	for relation in relations:
		shortest = min(term.length for term in relation)
		first = relation[0]
		source = quiver.arrow(first.arrows[0]).source
		target = quiver.arrow(first.arrows[-1]).target
		for before in ending[source]:
			for after in starting[target]:
				if before.length + after.length + shortest > max_length:
					continue
				written = False
				for term in relation:
					if before.length + term.length + after.length > max_length:
						continue
					path = Path(before.start, before.arrows + term.arrows + after.arrows)
					key = (row, index[path])
					entries[key] = entries.get(key, 0) + term.coeff
					written = True
				if written:
					row += 1
	return ExactMatrix.from_entries(field, entries, (row, len(columns))), columns


def build_algebra(field, quiver, relations, length_cap=None, path_space_cap=None):
	"""Enumerate a normal-form basis of kQ/I.

	The first L with every length-L path in I + J^(L+1) shows J^L lies in I;
	the algebra is then kQ/(I + J^L), reduced with shorter paths as pivots.
	"""
	settings = get_settings()
	length_cap = length_cap or settings.length_cap
	path_space_cap = path_space_cap or settings.path_space_cap
	relations = tuple(
		relation for relation in (_check_relation(field, quiver, terms) for terms in relations) if relation
	)

	layers = [[Path(v) for v in quiver.vertices]]
	total = len(layers[0])
	for length in range(1, length_cap + 1):
		layers.append(quiver.extend(layers[-1]))
		total += len(layers[-1])
		if total > path_space_cap:
			raise InfiniteDimensional(
				"path space exceeded its cap before the ideal absorbed a power of the arrow ideal",
				length=length,
				paths=total,
			)
		if not layers[-1]:
			break
		generators, columns = _ideal_rows(field, quiver, relations, layers)
		top_columns = [j for j, path in enumerate(columns) if path.length == length]
		units = ExactMatrix.from_entries(
			field, {(k, j): 1 for k, j in enumerate(top_columns)}, (len(top_columns), len(columns))
		)
		if rank(vstack(generators, units)) == rank(generators):
			break
		log.debug("paths of length %d survive modulo the relations", length)
	else:
		raise InfiniteDimensional(f"quotient does not vanish below path length {length_cap}", length_cap=length_cap)

	truncation = len(layers) - 1
	generators, columns = _ideal_rows(field, quiver, relations, layers[:-1])
	reduced, pivots = rref(generators)
	pivot_set = set(pivots)
	basis = tuple(path for j, path in enumerate(columns) if j not in pivot_set)
	reducer = {}
	rows = dict(reduced.items())
	by_row = defaultdict(list)
	for (i, j), value in rows.items():
		by_row[i].append((j, value))
	for i, pivot in enumerate(pivots):
		reducer[columns[pivot]] = tuple(
			(columns[j], field.normalize(-value)) for j, value in sorted(by_row[i]) if j != pivot
		)
	nilpotency = max((path.length for path in basis), default=-1) + 1
	log.debug("built algebra of dimension %d, nilpotency %d", len(basis), nilpotency)
	return BoundAlgebra(
		field=field,
		quiver=quiver,
		relations=relations,
		basis=basis,
		nilpotency=nilpotency,
		truncation=truncation,
		reducer=reducer,
	)
