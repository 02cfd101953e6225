# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""Looped functors, their universal extension, and bounded equivalence checks."""

import logging
from dataclasses import dataclass
from typing import Callable

from sgcalc.config import get_settings
from sgcalc.engine.linalg_exact import ExactMatrix, in_span, kernel_basis
from sgcalc.engine.stabilization.stabilization import Stabilization, StabObject
from sgcalc.exceptions import NotStrictlyStable

log = logging.getLogger(__name__)


class StabilizationBackend:
	"""A stabilization viewed as a looped category with Omega = Sigma^-1."""

	is_linear = False
	is_strictly_stable = True

	def __init__(self, stabilization):
		self.stabilization = stabilization

	def source(self, f):
		return f.source

	def target(self, f):
		return f.target

	def identity(self, x):
		return self.stabilization.identity(x)

	def compose(self, g, f):
		return self.stabilization.compose(g, f)

	def omega(self, x):
		return self.stabilization.unsuspend(x)

	def omega_morphism(self, f):
		return self.stabilization.unsuspend(f)

	def omega_inverse(self, x):
		return self.stabilization.suspend(x)

	def omega_inverse_morphism(self, f):
		return self.stabilization.suspend(f)

	def equal(self, f, g):
		return bool(self.stabilization.equal_up_to(f, g))


@dataclass
class LoopedFunctor:
	"""F: source -> target with delta_X: F(Omega X) -> Omega F(X) and its inverse."""

	source: object
	target: object
	on_object: Callable
	on_morphism: Callable
	delta: Callable
	delta_inverse: Callable


def _power(apply, f, k):
	for _ in range(k):
		f = apply(f)
	return f


def _shift_power(target, f, k):
	"""Omega^k f in the target, with Omega^-1 for negative k."""
	if k >= 0:
		return _power(target.omega_morphism, f, k)
	return _power(target.omega_inverse_morphism, f, -k)


def delta_power(functor, x, k):
	"""delta^(k)_X : F(Omega^k X) -> Omega^k F(X) and its inverse; delta^(0) is the identity."""
	target = functor.target
	if k == 0:
		fx = functor.on_object(x)
		return target.identity(fx), target.identity(fx)
	inner, inner_inverse = delta_power(functor, functor.source.omega(x), k - 1)
	outer = _power(target.omega_morphism, functor.delta(x), k - 1)
	outer_inverse = _power(target.omega_morphism, functor.delta_inverse(x), k - 1)
	return target.compose(outer, inner), target.compose(inner_inverse, outer_inverse)


def universal_apply(functor, phi):
	"""Image of a stabilization morphism under the unique extension of a looped functor."""
	target = functor.target
	if not getattr(target, "is_strictly_stable", False):
		raise NotStrictlyStable("the target's loop functor must be invertible")
	x, y, p = phi.source, phi.target, phi.level
	_, to_x = delta_power(functor, x.obj, p - x.shift)
	from_y, _ = delta_power(functor, y.obj, p - y.shift)
	middle = target.compose(from_y, target.compose(functor.on_morphism(phi.rep), to_x))
	return _shift_power(target, middle, -p)


def stabilization_functor(stabilization):
	"""X -> (X, 0) with theta as its loop structure; its extension is the identity."""
	backend = stabilization.backend
	return LoopedFunctor(
		source=backend,
		target=StabilizationBackend(stabilization),
		on_object=lambda x: StabObject(x, 0),
		on_morphism=stabilization.stabilize,
		delta=lambda x: stabilization.theta(x)[0],
		delta_inverse=lambda x: stabilization.theta(x)[1],
	)


@dataclass(frozen=True)
class Criterion:
	status: str
	depth: int | None
	evidence: str

	def to_dict(self):
		return {"status": self.status, "depth": self.depth, "evidence": self.evidence}


@dataclass(frozen=True)
class PreTriangleReport:
	full: Criterion
	faithful: Criterion
	dense: Criterion
	depth: int

	def to_dict(self):
		return {
			"full": self.full.to_dict(),
			"faithful": self.faithful.to_dict(),
			"dense": self.dense.to_dict(),
			"depth": self.depth,
		}


@dataclass
class TriangleFunctor:
	"""A functor H between linear looped backends with sigma_X: H(Omega X) -> Omega H(X).

	``sigma`` may be None when H commutes with Omega on the nose.
	``preimage(z)`` returns some X with H(X) isomorphic to z, or None.
	"""

	source: object
	target: object
	on_object: Callable
	on_morphism: Callable
	preimage: Callable
	sigma: Callable | None = None
	sigma_inverse: Callable | None = None


def sigma_power(functor, x, k):
	target = functor.target
	if functor.sigma is None or k == 0:
		hx = functor.on_object(_power(functor.source.omega, x, k))
		return target.identity(hx), target.identity(hx)
	inner, inner_inverse = sigma_power(functor, x, k - 1)
	step = functor.sigma(_power(functor.source.omega, x, k - 1))
	step_inverse = functor.sigma_inverse(_power(functor.source.omega, x, k - 1))
	return (
		target.compose(target.omega_morphism(inner), step),
		target.compose(step_inverse, target.omega_morphism(inner_inverse)),
	)


def _coordinate_matrix(space, morphisms):
	columns = [space.coordinates(f) for f in morphisms]
	return ExactMatrix.from_columns(space.field, space.dim, columns)


def _full_at(functor, x, y, depth):
	"""Least i such that Omega^i of every f: HX -> HY comes from Hom(Omega^i X, Omega^i Y)."""
	source, target = functor.source, functor.target
	hx, hy = functor.on_object(x), functor.on_object(y)
	wanted = target.hom_space(hx, hy).basis
	for i in range(depth + 1):
		_, to_x = sigma_power(functor, x, i)
		from_y, _ = sigma_power(functor, y, i)
		space = target.hom_space(_power(target.omega, hx, i), _power(target.omega, hy, i))
		images = [
			target.compose(from_y, target.compose(functor.on_morphism(g), to_x))
			for g in source.hom_space(_power(source.omega, x, i), _power(source.omega, y, i)).basis
		]
		required = [_power(target.omega_morphism, f, i) for f in wanted]
		if in_span(_coordinate_matrix(space, images), _coordinate_matrix(space, required)):
			return i
	return None


def _faithful_at(functor, x, y, depth):
	"""Least i killing Omega^i of every g with H(g) = 0, or None."""
	source, target = functor.source, functor.target
	space = source.hom_space(x, y)
	images = _coordinate_matrix(
		target.hom_space(functor.on_object(x), functor.on_object(y)),
		[functor.on_morphism(g) for g in space.basis],
	)
	needed = 0
	for coeffs in kernel_basis(images).columns():
		g = space.element(coeffs)
		for i in range(depth + 1):
			if source.equal(g, source.zero(source.source(g), source.target(g))):
				needed = max(needed, i)
				break
			g = source.omega_morphism(g)
		else:
			return None
	return needed


def _never_vanishes(functor, x, y, settings):
	"""Certificate that nonzero stable maps X -> Y survive every Omega-iterate."""
	report = Stabilization(functor.source, settings).hom_dim_report(StabObject(x, 0), StabObject(y, 0))
	return report.verdict.kind == "CertifiedStable" and report.rank_table[0][-1] == report.dims[0]


def _dense_at(functor, z, depth):
	target = functor.target
	for i in range(depth + 1):
		if functor.preimage(z) is not None:
			return i
		z = target.omega(z)
	return None


def pre_triangle_equiv_check(functor, source_objects, target_objects=None, depth=None, settings=None):
	"""Bounded evidence for fullness, faithfulness and density of the induced functor on stabilizations."""
	settings = settings or get_settings()
	depth = settings.depth if depth is None else depth
	if target_objects is None:
		target_objects = [functor.on_object(x) for x in source_objects]
	pairs = [(x, y) for x in source_objects for y in source_objects]

	full_depths = [_full_at(functor, x, y, depth) for x, y in pairs]
	if all(d is not None for d in full_depths):
		full = Criterion("witnessed", max(full_depths, default=0), f"{len(pairs)} pairs lift")
	else:
		missing = full_depths.index(None)
		full = Criterion("not_witnessed", None, f"pair {missing} has no lift up to depth {depth}")

	faithful = Criterion("witnessed", 0, f"{len(pairs)} pairs checked")
	faithful_depths = []
	for k, (x, y) in enumerate(pairs):
		d = _faithful_at(functor, x, y, depth)
		if d is None:
			if _never_vanishes(functor, x, y, settings):
				faithful = Criterion("fails", None, f"pair {k} has a stably nonzero map sent to zero")
			else:
				faithful = Criterion("not_witnessed", None, f"pair {k} keeps a map in the kernel up to depth {depth}")
			break
		faithful_depths.append(d)
	else:
		faithful = Criterion("witnessed", max(faithful_depths, default=0), f"{len(pairs)} pairs checked")

	dense_depths = [_dense_at(functor, z, depth) for z in target_objects]
	if all(d is not None for d in dense_depths):
		dense = Criterion("witnessed", max(dense_depths, default=0), f"{len(dense_depths)} objects reached")
	else:
		missing = dense_depths.index(None)
		dense = Criterion("not_witnessed", None, f"object {missing} has no preimage up to depth {depth}")

	log.info("pre-triangle check: full %s, faithful %s, dense %s", full.status, faithful.status, dense.status)
	return PreTriangleReport(full, faithful, dense, depth)
