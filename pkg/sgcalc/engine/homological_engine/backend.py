# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""The stable module category as a looped backend for the stabilization calculus."""

import logging
from dataclasses import dataclass

from sgcalc.config import get_settings
from sgcalc.engine.homological_engine.homological_engine import (
	is_projective,
	is_semisimple,
	is_stably_zero,
	projective_cover,
	semisimple_hom_space,
	semisimple_syzygy_map,
	stable_hom_space,
	stable_vertices,
	syzygy_of_morphism,
)
from sgcalc.engine.quiver_algebra import RepMorphism, hom_unknowns, is_isomorphic

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Periodicity:
	"""Omega^(start + period) X is isomorphic to Omega^start X via ``witness``."""

	start: int
	period: int
	witness: object
	inverse: object
	reason: str = ""

	def to_dict(self):
		return {"start": self.start, "period": self.period, "reason": self.reason}


class ModuleBackend:
	"""A-mod modulo projectives, looped by the syzygy functor.

	Objects are :class:`Representation` values and morphisms are
	:class:`RepMorphism` representatives of stable classes.
	"""

	is_linear = True
	is_strictly_stable = False

	def __init__(self, settings=None, seed=None):
		self.settings = settings or get_settings()
		self.seed = self.settings.seed if seed is None else seed
		self._periods = {}

	def source(self, f):
		return f.source

	def target(self, f):
		return f.target

	def identity(self, x):
		return RepMorphism.identity(x)

	def zero(self, x, y):
		return RepMorphism.zero(x, y)

	def compose(self, g, f):
		return g @ f

	def add(self, f, g):
		return f + g

	def scale(self, f, c):
		return f.scale(c)

	def omega(self, x):
		return projective_cover(x).syzygy

	def omega_morphism(self, f):
		fast = semisimple_syzygy_map(f)
		return syzygy_of_morphism(f).rep if fast is None else fast

	def equal(self, f, g):
		if is_semisimple(f.source) and is_semisimple(f.target):
			return next(semisimple_hom_space(f.source, f.target).coordinate_items(f - g), None) is None
		return is_stably_zero(f - g)

	def hom_space(self, x, y):
		if is_semisimple(x) and is_semisimple(y):
			return semisimple_hom_space(x, y)
		return stable_hom_space(x, y)

	def is_zero_object(self, x):
		return is_projective(x)

	def object_size(self, x):
		return x.total_dim

	def within_caps(self, x, y):
		cap = self.settings.max_module_dim
		if is_semisimple(x) and is_semisimple(y):
			# projective simple summands carry no stable maps
			keep = [v in stable_vertices(x.algebra) for v in x.quiver.vertices]
			xs = [d for d, k in zip(x.dims, keep) if k]
			ys = [d for d, k in zip(y.dims, keep) if k]
			if sum(xs) > cap or sum(ys) > cap:
				return False
			return sum(s * t for s, t in zip(xs, ys)) <= self.settings.max_hom_unknowns
		if x.total_dim > cap or y.total_dim > cap:
			return False
		cover = projective_cover(y).cover
		return hom_unknowns(x, cover) <= self.settings.max_hom_unknowns

	def describe(self, x):
		return {"dims": list(x.dims)}

	def periodicity(self, x, bound):
		"""Smallest b <= bound with Omega^b X isomorphic to some earlier Omega^a X, or None."""
		key = (x, bound)
		if key not in self._periods:
			self._periods[key] = self._find_period(x, bound)
		return self._periods[key]

	def _find_period(self, x, bound):
		iterates = [x]
		for b in range(1, bound + 1):
			previous = iterates[-1]
			if previous.total_dim > self.settings.max_module_dim or is_projective(previous):
				return None
			current = self.omega(previous)
			iterates.append(current)
			for a in range(b):
				if iterates[a].dims != current.dims:
					continue
				verdict = is_isomorphic(current, iterates[a], seed=self.seed, settings=self.settings)
				if verdict.kind == "yes":
					log.debug("Omega-periodic with start %d and period %d", a, b - a)
					return Periodicity(a, b - a, verdict.witness, verdict.inverse, verdict.reason)
		return None
