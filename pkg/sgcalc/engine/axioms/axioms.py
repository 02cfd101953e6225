# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""Seeded property suites for the syzygy engine and the stabilization calculus.

Short exact sequences come from two families. Split-cover sequences are
0 -> N -> P(M) + X -> M -> 0 with the second map (pi, phi) for a random
phi: X -> M. Non-split sequences are pushouts of the cover sequence of
X + X along a map Omega(X + X) -> Omega X that does not extend to the cover.
"""

import logging
import random
from dataclasses import dataclass, field

from sgcalc.config import get_settings
from sgcalc.engine.homological_engine import (
	ModuleBackend,
	canonical_triangle,
	exactness_at,
	is_projective,
	projective_cover,
	stable_hom_space,
	syzygy,
	syzygy_of_morphism,
)
from sgcalc.engine.linalg_exact import ExactMatrix, in_span
from sgcalc.engine.quiver_algebra import (
	RepMorphism,
	cokernel_rep,
	direct_sum,
	hom_space,
	kernel_rep,
	morphism_column,
	projective_rep,
	radical,
	simple_rep,
)
from sgcalc.engine.stabilization import StabObject, Stabilization, stabilization_functor, universal_apply
from sgcalc.fixtures import load_algebra

log = logging.getLogger(__name__)

CORPUS = ("kx2", "a2", "cyclic2_rsz", "cyclic3_rsz", "gentle_2cycle", "a3_rel")


@dataclass
class SuiteResult:
	name: str
	cases: int = 0
	nonsplit: int = 0
	failures: list = field(default_factory=list)

	@property
	def passed(self):
		return not self.failures

	def fail(self, **detail):
		self.failures.append(detail)

	def to_dict(self):
		return {
			"name": self.name,
			"cases": self.cases,
			"nonsplit": self.nonsplit,
			"failures": self.failures,
			"passed": self.passed,
		}


def module_pool(algebra):
	"""Small non-projective and projective modules used as sequence ends and test objects."""
	pool = []
	for v in algebra.quiver.vertices:
		simple = simple_rep(algebra, v)
		for m in (simple, projective_rep(algebra, v), radical(projective_rep(algebra, v))[0], syzygy(simple)):
			if not m.is_zero() and m not in pool:
				pool.append(m)
	return pool


def random_combination(m, n, basis, rng):
	f = RepMorphism.zero(m, n)
	for b in basis:
		f = f + b.scale(m.field.sample(rng))
	return f


def random_morphism(m, n, rng):
	return random_combination(m, n, hom_space(m, n), rng)


def _vectors(field, size, morphisms):
	return ExactMatrix.from_columns(field, size, [f.vector() for f in morphisms])


def is_split(f):
	"""True when the epimorphism f: E -> M has a section."""
	m = f.target
	size = sum(d * d for d in m.dims)
	sections = _vectors(m.field, size, [f @ s for s in hom_space(m, f.source)])
	return in_span(sections, morphism_column(RepMorphism.identity(m)))


def pushout_sequence(m, h):
	"""(g, f) for the pushout of 0 -> Omega M -> P(M) -> M -> 0 along h: Omega M -> N."""
	data = projective_cover(m)
	total = direct_sum([data.cover, h.target])
	glue = total.injections[0] @ data.kernel_embedding - total.injections[1] @ h
	e, quotient, sections = cokernel_rep(glue)
	pi = data.projection @ total.projections[0]
	f = RepMorphism(e, m, tuple(p @ s for p, s in zip(pi.maps, sections)))
	return quotient @ total.injections[1], f


def nonsplit_class(m, n, rng):
	"""A random h: Omega M -> N that does not extend to P(M), or None when every map extends."""
	data = projective_cover(m)
	omega = data.syzygy
	size = sum(s * t for s, t in zip(omega.dims, n.dims))
	extending = _vectors(m.field, size, [k @ data.kernel_embedding for k in hom_space(data.cover, n)])
	basis = hom_space(omega, n)
	h = random_combination(omega, n, basis, rng)
	candidates = [h, *basis]
	for candidate in candidates:
		if not in_span(extending, morphism_column(candidate)):
			return candidate
	return None


def nonsplit_sequence(algebra, rng, pool=None):
	"""A non-split 0 -> Omega X -> E -> X + X -> 0 with E not projective, or None when every X in the pool is projective."""
	pool = pool or module_pool(algebra)
	candidates = [x for x in pool if not is_projective(x)]
	if not candidates:
		return None
	x = rng.choice(candidates)
	m = direct_sum([x, x]).rep
	h = nonsplit_class(m, syzygy(x), rng)
	return None if h is None else pushout_sequence(m, h)


def random_sequence(algebra, rng, pool=None):
	"""(g, f) with 0 -> N -g-> E -f-> M -> 0 exact and E = P(M) + X."""
	pool = pool or module_pool(algebra)
	m, x = rng.choice(pool), rng.choice(pool)
	cover = projective_cover(m)
	total = direct_sum([cover.cover, x])
	f = cover.projection @ total.projections[0] + random_morphism(x, m, rng) @ total.projections[1]
	_, g = kernel_rep(f)
	return g, f


def _sequences(count, rng, algebras, result):
	"""Alternates the two families; odd cases are non-split when the algebra allows it."""
	for k in range(count):
		algebra = algebras[k % len(algebras)]
		sequence = nonsplit_sequence(algebra, rng) if k % 2 else None
		if sequence is None:
			sequence = random_sequence(algebra, rng)
		elif not is_projective(sequence[1].source):
			result.nonsplit += 1
		g, f = sequence
		yield k, algebra, g, f


def well_definedness_suite(count, seed, algebras=None):
	"""Independent lifts give the same connecting morphism and the same Omega(f)."""
	algebras = algebras or [load_algebra(name) for name in CORPUS]
	rng = random.Random(seed)
	result = SuiteResult("wellDefinedness")
	for k, _, g, f in _sequences(count, rng, algebras, result):
		first = canonical_triangle(g, f, rng=random.Random(rng.random()))
		second = canonical_triangle(g, f, rng=random.Random(rng.random()))
		if first.h != second.h:
			result.fail(case=k, check="connecting morphism")
		if syzygy_of_morphism(f, rng=random.Random(rng.random())) != syzygy_of_morphism(f, rng=random.Random(rng.random())):
			result.fail(case=k, check="syzygy of morphism")
		result.cases += 1
	return result


def _exact(test, phi, psi):
	kernel, image, composite_zero = exactness_at(test, phi, psi)
	return kernel == image and composite_zero


def hom_exactness_suite(count, seed, tests_per_sequence=3, algebras=None):
	"""Stable Hom(T, -) is exact along Omega(E) -> Omega(M) -> N -> E -> M."""
	algebras = algebras or [load_algebra(name) for name in CORPUS]
	rng = random.Random(seed)
	result = SuiteResult("homExactness")
	for k, algebra, g, f in _sequences(count, rng, algebras, result):
		h = canonical_triangle(g, f).h.rep
		rotated = -syzygy_of_morphism(f).rep
		pool = module_pool(algebra)
		for _ in range(tests_per_sequence):
			test = rng.choice(pool)
			for position, (phi, psi) in (("N", (h, g)), ("E", (g, f)), ("Omega M", (rotated, h))):
				if not _exact(test, phi, psi):
					result.fail(case=k, position=position, test=test.describe()["dims"])
			result.cases += 1
	return result


def _random_stable_map(stab, x, y, rng):
	space = stable_hom_space(x, y)
	coeffs = [x.field.sample(rng) for _ in range(space.dim)]
	rep = space.element(coeffs) if space.dim else stab.backend.zero(x, y)
	return stab.stabilize(rep)


def _random_chain(stab, pool, length, rng):
	"""``length`` composable stabilized maps, suspended and promoted at random."""
	objects = [rng.choice(pool) for _ in range(length + 1)]
	shift = rng.choice((-1, 0, 1))
	chain = []
	for x, y in zip(objects, objects[1:]):
		phi = stab.promote(_random_stable_map(stab, x, y, rng), rng.randint(0, 1))
		chain.append(stab.suspend(phi, shift))
	return chain


def calculus_suite(seed, triples=50, pairs=25, k_max=8, algebras=None, settings=None):
	"""Inverse law, promote invariance, associativity and functoriality of the universal extension."""
	settings = settings or get_settings()
	algebras = algebras or [load_algebra(name) for name in CORPUS]
	rng = random.Random(seed)
	result = SuiteResult("calculus")
	stab = Stabilization(ModuleBackend(settings, seed), settings)

	def check(verdict, **detail):
		result.cases += 1
		if not verdict:
			result.fail(**detail)

	for algebra in algebras:
		for m in module_pool(algebra):
			x = StabObject(m, rng.choice((-1, 0, 1)))
			for s in (1, 2):
				iso, inverse = stab.canonical_iso(x, s)
				check(stab.equal_up_to(stab.compose(inverse, iso), stab.identity(x), k_max), law="inverse", s=s)
				check(stab.equal_up_to(stab.compose(iso, inverse), stab.identity(iso.target), k_max), law="inverse", s=s)
			theta, theta_inverse = stab.theta(m)
			check(stab.equal_up_to(stab.compose(theta_inverse, theta), stab.identity(theta.source), k_max), law="theta")

	for k in range(triples):
		algebra = algebras[k % len(algebras)]
		chi, psi, phi = reversed(_random_chain(stab, module_pool(algebra), 3, rng))
		left = stab.compose(chi, stab.compose(psi, phi))
		right = stab.compose(stab.compose(chi, psi), phi)
		check(stab.equal_up_to(left, right, k_max), law="associativity", case=k)
		check(stab.equal_up_to(phi, stab.promote(phi, rng.randint(1, 3)), k_max), law="promote", case=k)

	functor = stabilization_functor(stab)
	for k in range(pairs):
		algebra = algebras[k % len(algebras)]
		psi, phi = reversed(_random_chain(stab, module_pool(algebra), 2, rng))
		whole = universal_apply(functor, stab.compose(psi, phi))
		parts = stab.compose(universal_apply(functor, psi), universal_apply(functor, phi))
		check(stab.equal_up_to(whole, parts, k_max), law="functoriality", case=k)
	return result


def run_axioms(seed, count=50, settings=None):
	settings = settings or get_settings()
	suites = [
		well_definedness_suite(count, seed),
		hom_exactness_suite(count, seed),
		calculus_suite(seed, triples=count, pairs=max(count // 2, 1), k_max=settings.k_max, settings=settings),
	]
	for suite in suites:
		log.info(
			"%s: %d cases, %d non-split, %d failures", suite.name, suite.cases, suite.nonsplit, len(suite.failures)
		)
	return {"suites": [suite.to_dict() for suite in suites], "allPass": all(suite.passed for suite in suites)}
