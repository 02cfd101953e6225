# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

import itertools
import logging
import random
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

from sgcalc.config import get_settings
from sgcalc.engine.linalg_exact import ExactMatrix, block_diag, hstack, kernel_basis, rank, rref, solve
from sgcalc.engine.quiver_algebra.quiver_algebra import Path
from sgcalc.exceptions import (
	AlgebraMismatch,
	MatrixShapeMismatch,
	NotAHomomorphism,
	NotMonomial,
	QuiverError,
	RelationNotSatisfied,
	SingularMatrix,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
	"""A finite-dimensional module: one space per vertex, one matrix per arrow.

	``dims`` and ``maps`` follow the quiver's vertex and arrow order; the
	matrix of a: i -> j has shape dim_j x dim_i.
	"""

	algebra: object
	dims: tuple
	maps: tuple

	@classmethod
	def build(cls, algebra, dims, maps=None, check=True):
		quiver = algebra.quiver
		unknown = set(dims) - set(quiver.vertices)
		if unknown:
			raise QuiverError(f"unknown vertices {sorted(unknown)}")
		dim_tuple = tuple(int(dims.get(v, 0)) for v in quiver.vertices)
		maps = dict(maps or {})
		for name in maps:
			quiver.arrow(name)
		matrices = []
		for arrow in quiver.arrows:
			rows = dim_tuple[quiver.vertex_index[arrow.target]]
			cols = dim_tuple[quiver.vertex_index[arrow.source]]
			value = maps.get(arrow.name)
			if value is None:
				value = ExactMatrix.zeros(algebra.field, rows, cols)
			elif not isinstance(value, ExactMatrix):
				value = ExactMatrix.from_rows(algebra.field, value, ncols=cols)
			matrices.append(value)
		rep = cls(algebra, dim_tuple, tuple(matrices))
		if check:
			rep.check()
		return rep

	def __repr__(self):
		return f"Representation(dims={dict(self.dim_vector())})"

	@property
	def field(self):
		return self.algebra.field

	@property
	def quiver(self):
		return self.algebra.quiver

	def dim(self, v):
		return self.dims[self.quiver.vertex_index[v]]

	@property
	def total_dim(self):
		return sum(self.dims)

	def is_zero(self):
		return self.total_dim == 0

	def dim_vector(self):
		return dict(zip(self.quiver.vertices, self.dims))

	def arrow_map(self, name):
		return self.maps[self.quiver.arrow_index[name]]

	@cached_property
	def offsets(self):
		out, total = [], 0
		for d in self.dims:
			out.append(total)
			total += d
		return tuple(out)

	def evaluate(self, start, arrows):
		"""Matrix of the path ``arrows`` (first-applied first) from ``start``."""
		acc = ExactMatrix.identity(self.field, self.dim(start))
		for name in arrows:
			acc = self.arrow_map(name) @ acc
		return acc

	def check(self):
		quiver = self.quiver
		for arrow, matrix in zip(quiver.arrows, self.maps):
			expected = (self.dim(arrow.target), self.dim(arrow.source))
			if matrix.shape != expected:
				raise MatrixShapeMismatch(
					f"arrow {arrow.name} needs a {expected[0]}x{expected[1]} matrix, got {matrix.shape}",
					arrow=arrow.name,
				)
		for index, relation in enumerate(self.algebra.relations):
			start = quiver.arrow(relation[0].arrows[0]).source
			total = None
			for term in relation:
				value = self.evaluate(start, term.arrows).scale(term.coeff)
				total = value if total is None else total + value
			if total is not None and not total.is_zero():
				raise RelationNotSatisfied(f"module violates relation {index}", relation=index)

	def describe(self):
		return {
			"dims": self.dim_vector(),
			"arrows": {arrow.name: m.to_strings() for arrow, m in zip(self.quiver.arrows, self.maps)},
		}


@dataclass(frozen=True)
class RepMorphism:
	"""Per-vertex matrices commuting with every arrow."""

	source: Representation
	target: Representation
	maps: tuple

	def __repr__(self):
		return f"RepMorphism({self.source!r} -> {self.target!r})"

	@classmethod
	def identity(cls, rep):
		return cls(rep, rep, tuple(ExactMatrix.identity(rep.field, d) for d in rep.dims))

	@classmethod
	def zero(cls, source, target):
		field = source.field
		return cls(source, target, tuple(ExactMatrix.zeros(field, t, s) for s, t in zip(source.dims, target.dims)))

	@classmethod
	def from_vector(cls, source, target, values):
		"""Inverse of :meth:`vector`."""
		maps = []
		position = 0
		for s, t in zip(source.dims, target.dims):
			entries = {}
			for r in range(t):
				for c in range(s):
					entries[(r, c)] = values[position]
					position += 1
			maps.append(ExactMatrix.from_entries(source.field, entries, (t, s)))
		return cls(source, target, tuple(maps))

	@property
	def field(self):
		return self.source.field

	def at(self, v):
		return self.maps[self.source.quiver.vertex_index[v]]

	def vector(self):
		"""Row-major entries of each vertex map, vertices in quiver order."""
		values = []
		for matrix in self.maps:
			for row in matrix.to_lists():
				values.extend(row)
		return values

	def check(self):
		_same_algebra(self.source, self.target)
		for m, s, t in zip(self.maps, self.source.dims, self.target.dims):
			if m.shape != (t, s):
				raise MatrixShapeMismatch(f"vertex map has shape {m.shape}, expected {(t, s)}")
		quiver = self.source.quiver
		for arrow, src, tgt in zip(quiver.arrows, self.source.maps, self.target.maps):
			i = quiver.vertex_index[arrow.source]
			j = quiver.vertex_index[arrow.target]
			if tgt @ self.maps[i] != self.maps[j] @ src:
				raise NotAHomomorphism(f"maps do not commute with arrow {arrow.name}", arrow=arrow.name)
		return self

	def __matmul__(self, other):
		"""``self`` after ``other``."""
		if other.target != self.source:
			raise AlgebraMismatch("morphisms are not composable")
		return RepMorphism(other.source, self.target, tuple(a @ b for a, b in zip(self.maps, other.maps)))

	def _parallel(self, other):
		if self.source != other.source or self.target != other.target:
			raise AlgebraMismatch("morphisms are not parallel")

	def __add__(self, other):
		self._parallel(other)
		return RepMorphism(self.source, self.target, tuple(a + b for a, b in zip(self.maps, other.maps)))

	def __sub__(self, other):
		self._parallel(other)
		return RepMorphism(self.source, self.target, tuple(a - b for a, b in zip(self.maps, other.maps)))

	def __neg__(self):
		return self.scale(-1)

	def scale(self, value):
		return RepMorphism(self.source, self.target, tuple(m.scale(value) for m in self.maps))

	def is_zero(self):
		return all(m.is_zero() for m in self.maps)

	def is_injective(self):
		return all(rank(m) == m.cols for m in self.maps)

	def is_surjective(self):
		return all(rank(m) == m.rows for m in self.maps)

	def is_iso(self):
		return all(m.rows == m.cols and rank(m) == m.rows for m in self.maps)

	def inverse(self):
		if not self.is_iso():
			raise SingularMatrix("morphism is not invertible")
		return RepMorphism(self.target, self.source, tuple(m.inverse() for m in self.maps))


def _same_algebra(m, n):
	if m.algebra != n.algebra:
		raise AlgebraMismatch("modules live over different algebras")


def column_basis(matrix):
	"""Pivot columns of ``matrix``: a deterministic basis of its column space."""
	_, pivots = rref(matrix)
	return matrix.select_columns(pivots)


def zero_rep(algebra):
	return Representation.build(algebra, {}, check=False)


def simple_rep(algebra, v):
	return Representation.build(algebra, {v: 1}, check=False)


@lru_cache(maxsize=None)
def projective_rep(algebra, v):
	"""P_v = A e_v; the space at w has the basis paths from v to w."""
	quiver = algebra.quiver
	if v not in quiver.vertex_index:
		raise QuiverError(f"unknown vertex {v!r}")
	paths = algebra.basis_from(v)
	index = {w: {path: k for k, path in enumerate(paths[w])} for w in quiver.vertices}
	maps = {}
	for arrow in quiver.arrows:
		entries = {}
		for k, path in enumerate(paths[arrow.source]):
			extended = path.then(Path(arrow.source, (arrow.name,)))
			for target_path, coeff in algebra.normal_form(extended):
				entries[(index[arrow.target][target_path], k)] = coeff
		maps[arrow.name] = ExactMatrix.from_entries(
			algebra.field, entries, (len(paths[arrow.target]), len(paths[arrow.source]))
		)
	return Representation.build(algebra, {w: len(paths[w]) for w in quiver.vertices}, maps, check=False)


class DirectSum(NamedTuple):
	rep: Representation
	injections: tuple
	projections: tuple


def direct_sum(reps):
	reps = list(reps)
	if not reps:
		raise ValueError("direct sum of nothing")
	algebra = reps[0].algebra
	for rep in reps[1:]:
		_same_algebra(reps[0], rep)
	field = algebra.field
	quiver = algebra.quiver
	dims = {v: sum(rep.dim(v) for rep in reps) for v in quiver.vertices}
	maps = {
		arrow.name: block_diag(field, [rep.arrow_map(arrow.name) for rep in reps]) for arrow in quiver.arrows
	}
	total = Representation.build(algebra, dims, maps, check=False)
	injections, projections = [], []
	offsets = {v: 0 for v in quiver.vertices}
	for rep in reps:
		inj, proj = [], []
		for v in quiver.vertices:
			d, start = rep.dim(v), offsets[v]
			inj.append(ExactMatrix.from_entries(field, {(start + k, k): 1 for k in range(d)}, (dims[v], d)))
			proj.append(ExactMatrix.from_entries(field, {(k, start + k): 1 for k in range(d)}, (d, dims[v])))
			offsets[v] += d
		injections.append(RepMorphism(rep, total, tuple(inj)))
		projections.append(RepMorphism(total, rep, tuple(proj)))
	return DirectSum(total, tuple(injections), tuple(projections))


def regular_rep(algebra):
	return direct_sum([projective_rep(algebra, v) for v in algebra.quiver.vertices]).rep


def subrepresentation(m, bases):
	"""Submodule spanned at each vertex by the columns of ``bases[i]``.

	Returns the submodule and its inclusion into ``m``.
	"""
	quiver = m.quiver
	bases = tuple(bases)
	maps = {}
	for arrow, matrix in zip(quiver.arrows, m.maps):
		i = quiver.vertex_index[arrow.source]
		j = quiver.vertex_index[arrow.target]
		maps[arrow.name] = solve(bases[j], matrix @ bases[i])
	dims = {v: bases[quiver.vertex_index[v]].cols for v in quiver.vertices}
	sub = Representation.build(m.algebra, dims, maps, check=False)
	return sub, RepMorphism(sub, m, bases)


def kernel_rep(f):
	return subrepresentation(f.source, [kernel_basis(matrix) for matrix in f.maps])


def cokernel_rep(f):
	"""Y / im f for f: X -> Y.

	Returns the quotient, the quotient map and, per vertex, the standard
	basis vectors of Y whose classes form the quotient basis.
	"""
	y = f.target
	field = y.field
	quiver = y.quiver
	sections, quotients = [], []
	for matrix, d in zip(f.maps, y.dims):
		image = column_basis(matrix)
		identity = ExactMatrix.identity(field, d)
		_, pivots = rref(hstack(image, identity))
		section = identity.select_columns([p - image.cols for p in pivots if p >= image.cols])
		change = hstack(image, section).inverse()
		sections.append(section)
		quotients.append(change.select_rows(range(image.cols, d)))
	maps = {}
	for arrow, matrix in zip(quiver.arrows, y.maps):
		i = quiver.vertex_index[arrow.source]
		j = quiver.vertex_index[arrow.target]
		maps[arrow.name] = quotients[j] @ matrix @ sections[i]
	dims = {v: section.cols for v, section in zip(quiver.vertices, sections)}
	quotient = Representation.build(y.algebra, dims, maps, check=False)
	return quotient, RepMorphism(y, quotient, tuple(quotients)), tuple(sections)


def _radical_bases(m):
	quiver = m.quiver
	bases = []
	for v in quiver.vertices:
		images = [m.arrow_map(a.name) for a in quiver.incoming(v)]
		if images:
			bases.append(column_basis(hstack(*images)))
		else:
			bases.append(ExactMatrix.zeros(m.field, m.dim(v), 0))
	return bases


def radical(m):
	"""rad M = J M with its inclusion."""
	return subrepresentation(m, _radical_bases(m))


def top_complement(m):
	"""Per vertex, standard basis vectors completing rad M greedily in index order."""
	out = []
	for v, rad in zip(m.quiver.vertices, _radical_bases(m)):
		d = m.dim(v)
		_, pivots = rref(hstack(rad, ExactMatrix.identity(m.field, d)))
		chosen = [p - rad.cols for p in pivots if p >= rad.cols]
		out.append(ExactMatrix.identity(m.field, d).select_columns(chosen))
	return tuple(out)


def top_dims(m):
	return {v: c.cols for v, c in zip(m.quiver.vertices, top_complement(m))}


def radical_series_dims(m):
	series = []
	current = m
	while not current.is_zero():
		series.append(current.dims)
		current, _ = radical(current)
	return tuple(series)


def hom_unknowns(m, n):
	return sum(s * t for s, t in zip(m.dims, n.dims))


@lru_cache(maxsize=4096)
def hom_matrix(m, n):
	"""Columns are the vectorized basis morphisms of Hom(M, N)."""
	_same_algebra(m, n)
	quiver = m.quiver
	offsets = {}
	position = 0
	for v, s, t in zip(quiver.vertices, m.dims, n.dims):
		offsets[v] = position
		position += s * t
	entries = defaultdict(int)
	row = 0
	for arrow, m_arrow, n_arrow in zip(quiver.arrows, m.maps, n.maps):
		i, j = arrow.source, arrow.target
		m_i, m_j, n_j = m.dim(i), m.dim(j), n.dim(j)
		# N_a phi_i - phi_j M_a = 0, entry (r, c)
		for (r, k), value in n_arrow.items():
			for c in range(m_i):
				entries[(row + r * m_i + c, offsets[i] + k * m_i + c)] += value
		for (k, c), value in m_arrow.items():
			for r in range(n_j):
				entries[(row + r * m_i + c, offsets[j] + r * m_j + k)] -= value
		row += n_j * m_i
	system = ExactMatrix.from_entries(m.field, dict(entries), (row, position))
	return kernel_basis(system)


def hom_space(m, n):
	basis = hom_matrix(m, n)
	return [RepMorphism.from_vector(m, n, column) for column in basis.columns()]


def hom_dim(m, n):
	return hom_matrix(m, n).cols


def morphism_column(f):
	return ExactMatrix.from_columns(f.field, len(f.vector()), [f.vector()])


def hom_coordinates(f):
	"""Coordinates of ``f`` in the basis returned by :func:`hom_space`."""
	return solve(hom_matrix(f.source, f.target), morphism_column(f)).column(0)


def left_ideal_rep(algebra, arrow_name):
	"""The left ideal A alpha, spanned by basis paths whose first arrow is alpha."""
	if not algebra.is_monomial():
		raise NotMonomial("left ideals of arrows need monomial relations")
	arrow = algebra.quiver.arrow(arrow_name)
	projective = projective_rep(algebra, arrow.source)
	paths = algebra.basis_from(arrow.source)
	bases = []
	for w in algebra.quiver.vertices:
		chosen = [k for k, path in enumerate(paths[w]) if path.arrows[:1] == (arrow_name,)]
		bases.append(ExactMatrix.identity(algebra.field, len(paths[w])).select_columns(chosen))
	sub, _ = subrepresentation(projective, bases)
	return sub


@dataclass(frozen=True)
class IsoVerdict:
	kind: str
	witness: RepMorphism | None = None
	inverse: RepMorphism | None = None
	reason: str = ""

	def __bool__(self):
		return self.kind == "yes"


def _combinations(field, d, settings, rng):
	"""Coefficient vectors to try, and whether they cover the whole of Hom."""
	values = list(range(field.p)) if field.is_prime else list(range(-2, 3))
	size = len(values) ** d
	for k in range(d):
		yield [1 if i == k else 0 for i in range(d)]
	if size <= settings.iso_exhaustive_cap:
		yield from (list(c) for c in itertools.product(values, repeat=d))
		return
	for _ in range(settings.iso_sample_size):
		yield [field.sample(rng) for _ in range(d)]


def is_isomorphic(m, n, seed=None, settings=None):
	settings = settings or get_settings()
	_same_algebra(m, n)
	if m.dims != n.dims:
		return IsoVerdict("no", reason="dimension vectors differ")
	if m.is_zero():
		zero = RepMorphism.identity(m)
		return IsoVerdict("yes", RepMorphism(m, n, zero.maps), RepMorphism(n, m, zero.maps), "zero modules")
	if m == n:
		identity = RepMorphism.identity(m)
		return IsoVerdict("yes", identity, identity, "identical modules")
	if radical_series_dims(m) != radical_series_dims(n):
		return IsoVerdict("no", reason="radical series dimensions differ")
	d = hom_dim(m, n)
	end = hom_dim(m, m)
	if d != end or hom_dim(n, m) != end or hom_dim(n, n) != end:
		return IsoVerdict("no", reason="Hom dimensions differ from End dimensions")
	basis = hom_matrix(m, n)
	rng = random.Random(settings.seed if seed is None else seed)
	field = m.field
	exhaustive = (field.p if field.is_prime else 5) ** d <= settings.iso_exhaustive_cap
	tried = 0
	for coeffs in _combinations(field, d, settings, rng):
		tried += 1
		column = basis @ ExactMatrix.from_columns(field, d, [coeffs])
		f = RepMorphism.from_vector(m, n, column.column(0))
		if f.is_iso():
			log.debug("isomorphism found after %d candidates", tried)
			return IsoVerdict("yes", f, f.inverse(), "invertible morphism found")
	if exhaustive and field.is_prime:
		return IsoVerdict("no", reason="no invertible morphism in Hom (exhaustive)")
	log.warning("isomorphism search gave up after %d candidates", tried)
	return IsoVerdict("unknown", reason=f"no invertible morphism among {tried} candidates")
