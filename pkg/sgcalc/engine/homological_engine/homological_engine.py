# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sgcalc.engine.linalg_exact import ExactMatrix, hstack, in_span, kernel_basis, rank, rref, solve
from sgcalc.engine.quiver_algebra import (
	RepMorphism,
	direct_sum,
	hom_dim,
	hom_matrix,
	hom_space,
	kernel_rep,
	morphism_column,
	projective_rep,
	simple_rep,
	top_complement,
	zero_rep,
)
from sgcalc.exceptions import AlgebraMismatch, InconsistentSystem, LiftFailure, NotExact

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverData:
	"""P(M) -> M with its kernel Omega(M) -> P(M).

	``generators`` lists (vertex, column vector of M) for each summand P_v
	of the cover, in summand order.
	"""

	cover: object
	projection: RepMorphism
	kernel_embedding: RepMorphism
	generators: tuple

	@property
	def syzygy(self):
		return self.kernel_embedding.source


def _from_generators(generators, cover, target, images):
	"""The map P -> target sending the generator of each summand to ``images[k]``."""
	algebra = target.algebra
	blocks = {w: [] for w in algebra.quiver.vertices}
	for (v, _), image in zip(generators, images):
		paths = algebra.basis_from(v)
		for w in algebra.quiver.vertices:
			blocks[w].extend(target.evaluate(v, path.arrows) @ image for path in paths[w])
	maps = tuple(
		hstack(*blocks[w]) if blocks[w] else ExactMatrix.zeros(target.field, target.dim(w), 0)
		for w in algebra.quiver.vertices
	)
	return RepMorphism(cover, target, maps)


@lru_cache(maxsize=4096)
def projective_cover(m):
	algebra = m.algebra
	generators = []
	for v, complement in zip(algebra.quiver.vertices, top_complement(m)):
		for k in range(complement.cols):
			generators.append((v, complement.select_columns([k])))
	generators = tuple(generators)
	if generators:
		cover = direct_sum([projective_rep(algebra, v) for v, _ in generators]).rep
	else:
		cover = zero_rep(algebra)
	projection = _from_generators(generators, cover, m, [x for _, x in generators])
	_, embedding = kernel_rep(projection)
	log.debug("cover of a %d-dimensional module has dimension %d", m.total_dim, cover.total_dim)
	return CoverData(cover, projection, embedding, generators)


def syzygy(m, k=1):
	for _ in range(k):
		m = projective_cover(m).syzygy
	return m


def is_projective(m):
	return projective_cover(m).syzygy.is_zero()


@dataclass(frozen=True)
class ProjDim:
	kind: str
	value: int

	def to_dict(self):
		return {"kind": self.kind, "value": self.value}


def proj_dim(m, bound):
	current = m
	for d in range(bound + 1):
		if is_projective(current):
			return ProjDim("finite", d)
		if d < bound:
			current = syzygy(current)
	return ProjDim("at_least", bound)


@lru_cache(maxsize=4096)
def factor_matrix(m, n):
	"""Columns span the maps M -> N factoring through P(N), as Hom(M, N) vectors."""
	data = projective_cover(n)
	columns = [(data.projection @ g).vector() for g in hom_space(m, data.cover)]
	size = sum(s * t for s, t in zip(m.dims, n.dims))
	return ExactMatrix.from_columns(m.field, size, columns)


def is_stably_zero(f):
	return in_span(factor_matrix(f.source, f.target), morphism_column(f))


class StableMorphismClass:
	"""A morphism up to maps factoring through projectives.

	Equality is stable equality, so classes are not hashable.
	"""

	__slots__ = ("rep",)

	def __init__(self, rep):
		self.rep = rep

	@property
	def source(self):
		return self.rep.source

	@property
	def target(self):
		return self.rep.target

	def is_zero(self):
		return is_stably_zero(self.rep)

	def __eq__(self, other):
		if not isinstance(other, StableMorphismClass):
			return NotImplemented
		if self.source != other.source or self.target != other.target:
			return False
		return is_stably_zero(self.rep - other.rep)

	__hash__ = None

	def __matmul__(self, other):
		return StableMorphismClass(self.rep @ other.rep)

	def __repr__(self):
		return f"StableMorphismClass({self.rep!r})"


class StableHomSpace:
	"""Hom(M, N) modulo projective factorizations, with a lifted complement basis."""

	def __init__(self, m, n):
		if m.algebra != n.algebra:
			raise AlgebraMismatch("modules live over different algebras")
		self.source = m
		self.target = n
		self.field = m.field
		self.hom_basis = hom_matrix(m, n)
		d = self.hom_basis.cols
		factors = solve(self.hom_basis, factor_matrix(m, n))
		_, pivots = rref(hstack(factors, ExactMatrix.identity(m.field, d)))
		independent = [p for p in pivots if p < factors.cols]
		self.chosen = tuple(p - factors.cols for p in pivots if p >= factors.cols)
		self.dim = len(self.chosen)
		change = hstack(
			factors.select_columns(independent), ExactMatrix.identity(m.field, d).select_columns(self.chosen)
		)
		self._split = len(independent)
		self._change = change

	@cached_property
	def _inverse(self):
		return self._change.inverse()

	@cached_property
	def basis(self):
		columns = self.hom_basis.select_columns(self.chosen).columns()
		return [RepMorphism.from_vector(self.source, self.target, column) for column in columns]

	def coordinates(self, f):
		"""Coordinates of the stable class of ``f`` in :attr:`basis`."""
		if self.dim == 0:
			return []
		coords = solve(self.hom_basis, morphism_column(f))
		return (self._inverse @ coords).column(0)[self._split :]

	def element(self, coeffs):
		total = RepMorphism.zero(self.source, self.target)
		for c, f in zip(coeffs, self.basis):
			total = total + f.scale(c)
		return total


@lru_cache(maxsize=4096)
def stable_hom_space(m, n):
	return StableHomSpace(m, n)


def stable_hom(m, n):
	space = stable_hom_space(m, n)
	return space.dim, [StableMorphismClass(f) for f in space.basis]


def is_semisimple(m):
	return all(matrix.is_zero() for matrix in m.maps)


@lru_cache(maxsize=None)
def stable_vertices(algebra):
	"""Vertices whose simple module is not projective."""
	return tuple(v for v in algebra.quiver.vertices if projective_rep(algebra, v).total_dim > 1)


class SemisimpleHomSpace:
	"""Stable Hom between semisimple modules.

	A map S_v -> P -> S_v vanishes unless S_v = P_v, so the stable classes
	are the vertex matrices away from the projective simples. The basis is
	the matrix units there, by vertex, then row, then column.
	"""

	def __init__(self, m, n):
		if m.algebra != n.algebra:
			raise AlgebraMismatch("modules live over different algebras")
		self.source = m
		self.target = n
		self.field = m.field
		keep = set(stable_vertices(m.algebra))
		blocks, position = [], 0
		for i, (v, s, t) in enumerate(zip(m.quiver.vertices, m.dims, n.dims)):
			if v in keep and s and t:
				blocks.append((i, position, t, s))
				position += s * t
		self._blocks = tuple(blocks)
		self.dim = position

	@cached_property
	def basis(self):
		zero = RepMorphism.zero(self.source, self.target).maps
		out = []
		for i, _, t, s in self._blocks:
			for r in range(t):
				for c in range(s):
					maps = list(zero)
					maps[i] = ExactMatrix.from_entries(self.field, {(r, c): 1}, (t, s))
					out.append(RepMorphism(self.source, self.target, tuple(maps)))
		return out

	def coordinate_items(self, f):
		"""Non-zero (index, value) coordinates of the stable class of ``f``."""
		for i, offset, _, s in self._blocks:
			for (r, c), value in f.maps[i].items():
				yield offset + r * s + c, value

	def coordinates(self, f):
		values = [0] * self.dim
		for k, value in self.coordinate_items(f):
			values[k] = value
		return values

	def element(self, coeffs):
		coeffs = list(coeffs)
		maps = list(RepMorphism.zero(self.source, self.target).maps)
		for i, offset, t, s in self._blocks:
			entries = {(r, c): coeffs[offset + r * s + c] for r in range(t) for c in range(s)}
			maps[i] = ExactMatrix.from_entries(self.field, entries, (t, s))
		return RepMorphism(self.source, self.target, tuple(maps))


@lru_cache(maxsize=4096)
def semisimple_hom_space(m, n):
	return SemisimpleHomSpace(m, n)


def _random_kernel_shift(matrix, rng):
	if rng is None:
		return None
	kernel = kernel_basis(matrix)
	if kernel.cols == 0:
		return None
	coeffs = ExactMatrix.from_columns(matrix.field, kernel.cols, [[matrix.field.sample(rng) for _ in range(kernel.cols)]])
	return kernel @ coeffs


def _preimage(matrix, vector, rng=None):
	"""A solution of matrix @ y == vector, shifted by a random kernel element when ``rng`` is given."""
	try:
		y = solve(matrix, vector)
	except InconsistentSystem as exc:
		raise LiftFailure("vector has no preimage") from exc
	shift = _random_kernel_shift(matrix, rng)
	return y if shift is None else y + shift


def lift_to_covers(f, rng=None):
	"""F: P(M) -> P(N) with pi_N F = f pi_M."""
	source = projective_cover(f.source)
	target = projective_cover(f.target)
	quiver = f.source.quiver
	images = []
	for v, x in source.generators:
		i = quiver.vertex_index[v]
		images.append(_preimage(target.projection.maps[i], f.maps[i] @ x, rng))
	return _from_generators(source.generators, source.cover, target.cover, images)


def restrict_to_kernels(lift, source_embedding, target_embedding):
	maps = tuple(
		solve(t, lift_map @ s)
		for lift_map, s, t in zip(lift.maps, source_embedding.maps, target_embedding.maps)
	)
	return RepMorphism(source_embedding.source, target_embedding.source, maps)


def syzygy_of_morphism(f, rng=None):
	"""A representative of Omega(f); different lifts give the same stable class."""
	lift = lift_to_covers(f, rng)
	return StableMorphismClass(
		restrict_to_kernels(
			lift, projective_cover(f.source).kernel_embedding, projective_cover(f.target).kernel_embedding
		)
	)


def _unit_row(column):
	items = list(column.items())
	if len(items) != 1 or items[0][1] != 1:
		return None
	return items[0][0][0]


@lru_cache(maxsize=4096)
def _generator_units(m):
	"""(vertex index, basis row) of each cover generator, or None unless all are unit vectors."""
	index = m.quiver.vertex_index
	units = []
	for v, x in projective_cover(m).generators:
		row = _unit_row(x)
		if row is None:
			return None
		units.append((index[v], row))
	return tuple(units)


@lru_cache(maxsize=4096)
def _kernel_coordinates(m):
	"""Per vertex, the (summand, path) behind each basis vector of Omega(M).

	None unless every kernel vector is a unit vector on a non-trivial path,
	which is the case for semisimple M.
	"""
	algebra = m.algebra
	data = projective_cover(m)
	out = []
	for w, embedding in zip(algebra.quiver.vertices, data.kernel_embedding.maps):
		owners = []
		for g, (v, _) in enumerate(data.generators):
			owners.extend((g, k, bool(path.arrows)) for k, path in enumerate(algebra.basis_from(v)[w]))
		placed = {}
		for (row, col), value in embedding.items():
			if col in placed or value != 1 or not owners[row][2]:
				return None
			placed[col] = owners[row][:2]
		if len(placed) != embedding.cols:
			return None
		by_summand = {}
		for col in range(embedding.cols):
			g, k = placed[col]
			by_summand.setdefault(g, []).append((k, col))
		out.append(({label: col for col, label in placed.items()}, by_summand))
	return tuple(out)


def semisimple_syzygy_map(f):
	"""Omega(f) for a map between semisimple modules, or None when the covers do not have the expected shape.

	The lift to the covers is f tensored with the identity of each P_v, so
	Omega(f) copies the entries of f_v onto every non-trivial path from v.
	"""
	if not (is_semisimple(f.source) and is_semisimple(f.target)):
		return None
	source_units, target_units = _generator_units(f.source), _generator_units(f.target)
	columns, rows = _kernel_coordinates(f.source), _kernel_coordinates(f.target)
	if None in (source_units, target_units, columns, rows):
		return None
	source_generator = {unit: g for g, unit in enumerate(source_units)}
	target_generator = {unit: g for g, unit in enumerate(target_units)}
	entries = [{} for _ in columns]
	for i, matrix in enumerate(f.maps):
		for (r, c), value in matrix.items():
			g, h = source_generator[(i, c)], target_generator[(i, r)]
			for block, (_, by_summand), (lookup, _) in zip(entries, columns, rows):
				for k, col in by_summand.get(g, ()):
					block[(lookup[(h, k)], col)] = value
	source, target = projective_cover(f.source).syzygy, projective_cover(f.target).syzygy
	maps = tuple(
		ExactMatrix.from_entries(f.field, block, (t, s)) for block, s, t in zip(entries, source.dims, target.dims)
	)
	return RepMorphism(source, target, maps)


@dataclass
class CanonicalTriangle:
	"""Omega(M) -h-> N -g-> E -f-> M together with the lift u: P(M) -> E."""

	h: StableMorphismClass
	g: RepMorphism
	f: RepMorphism
	u: RepMorphism


def check_exact(g, f):
	if g.target != f.source:
		raise NotExact("g and f are not composable")
	if not g.is_injective():
		raise NotExact("g is not injective")
	if not f.is_surjective():
		raise NotExact("f is not surjective")
	if not (f @ g).is_zero():
		raise NotExact("f g is not zero")
	if g.source.total_dim + f.target.total_dim != g.target.total_dim:
		raise NotExact("image of g is smaller than the kernel of f")


def canonical_triangle(g, f, rng=None):
	check_exact(g, f)
	m = f.target
	data = projective_cover(m)
	quiver = m.quiver
	images = []
	for v, x in data.generators:
		images.append(_preimage(f.maps[quiver.vertex_index[v]], x, rng))
	u = _from_generators(data.generators, data.cover, f.source, images)
	restricted = u @ data.kernel_embedding
	h = RepMorphism(data.syzygy, g.source, tuple(solve(gm, rm) for gm, rm in zip(g.maps, restricted.maps)))
	return CanonicalTriangle(StableMorphismClass(h), g, f, u)


def ext_dim(m, n, i):
	if i == 0:
		return hom_dim(m, n)
	previous = syzygy(m, i - 1)
	data = projective_cover(previous)
	omega = data.syzygy
	restricted = [(h @ data.kernel_embedding).vector() for h in hom_space(data.cover, n)]
	size = sum(s * t for s, t in zip(omega.dims, n.dims))
	image = rank(ExactMatrix.from_columns(m.field, size, restricted)) if restricted else 0
	return hom_dim(omega, n) - image


def is_injective(m):
	return all(ext_dim(simple_rep(m.algebra, v), m, 1) == 0 for v in m.quiver.vertices)


def induced_map(test, phi):
	"""Matrix of Hom(T, A) -> Hom(T, B), f -> phi f, on stable Hom bases."""
	source = stable_hom_space(test, phi.source)
	target = stable_hom_space(test, phi.target)
	columns = [target.coordinates(phi @ f) for f in source.basis]
	return ExactMatrix.from_columns(test.field, target.dim, columns)


def exactness_at(test, phi, psi):
	"""(kernel dim of psi_*, image dim of phi_*, psi_* phi_* is zero) on stable Hom from ``test``."""
	phi_star = induced_map(test, phi)
	psi_star = induced_map(test, psi)
	kernel = psi_star.cols - rank(psi_star)
	image = rank(phi_star)
	return kernel, image, (psi_star @ phi_star).is_zero()
