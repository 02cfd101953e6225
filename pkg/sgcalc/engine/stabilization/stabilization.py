# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""Formal stabilization of a looped category.

Objects are pairs (X, n). A morphism (X, n) -> (Y, m) is represented at a
level p >= max(n, m) by a backend morphism Omega^(p-n) X -> Omega^(p-m) Y;
raising the level applies Omega to the representative.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Protocol, runtime_checkable

from sgcalc.config import get_settings
from sgcalc.engine.linalg_exact import DirectSystem, ExactMatrix, eventual_rank, rank, rank_table
from sgcalc.exceptions import BackendNotLinear, ShiftOutOfRange, SourceTargetMismatch

log = logging.getLogger(__name__)


@runtime_checkable
class LoopedBackend(Protocol):
	"""A category with a chosen endofunctor Omega.

	Linear backends also provide ``hom_space(x, y)`` returning an object
	with ``dim``, ``basis`` and ``coordinates(f)``, plus ``zero``, ``add``,
	``scale``, ``is_zero_object``, ``periodicity`` and ``within_caps``.
	"""

	def source(self, f): ...

	def target(self, f): ...

	def identity(self, x): ...

	def compose(self, g, f): ...

	def omega(self, x): ...

	def omega_morphism(self, f): ...

	def equal(self, f, g): ...


@dataclass(frozen=True)
class StabObject:
	obj: object
	shift: int


@dataclass(frozen=True)
class StabMorphism:
	source: StabObject
	target: StabObject
	level: int
	rep: object


@dataclass(frozen=True)
class EqualityVerdict:
	kind: str
	k: int

	def __bool__(self):
		return self.kind == "Equal"

	def to_dict(self):
		return {"kind": self.kind, "k": self.k}


@dataclass(frozen=True)
class Verdict:
	kind: str
	value: int | None = None
	reason: str = ""

	@property
	def certified(self):
		return self.kind.startswith("Certified")

	def to_dict(self):
		return {"kind": self.kind, "value": self.value, "reason": self.reason}


@dataclass
class ColimitReport:
	dims: list
	rank_table: list
	verdict: Verdict
	p_start: int
	p_max: int
	p_reached: int
	truncated: bool
	window: int
	limiting_ranks: list = field(default_factory=list)

	@property
	def limiting_rank(self):
		"""Largest limiting rank among rows whose last two entries agree."""
		return settled_rank(self.rank_table)

	@property
	def colimit_dim(self):
		if self.verdict.kind == "CertifiedZero":
			return 0
		if self.verdict.kind in ("CertifiedStable", "CertifiedColimit", "HeuristicStable"):
			return self.verdict.value
		return None

	def maps_are_isos(self):
		return all(map_is_iso(self.rank_table, p) for p in range(len(self.dims) - 1))

	def to_dict(self):
		return {
			"dims": list(self.dims),
			"rankTable": [list(row) for row in self.rank_table],
			"limitingRanks": list(self.limiting_ranks),
			"verdict": self.verdict.to_dict(),
			"pStart": self.p_start,
			"pMax": self.p_max,
			"pReached": self.p_reached,
			"truncated": self.truncated,
			"window": self.window,
		}


def map_is_iso(table, p):
	return table[p][0] == table[p + 1][0] == table[p][1]


def settled_rank(table):
	settled = [row[-1] for row in table if len(row) >= 2 and row[-1] == row[-2]]
	return max(settled, default=0)


def analyze_direct_system(system, window, p_start=0, p_max=None, truncated=False):
	"""Rank table and the uncertified verdict of a finite direct system."""
	table = rank_table(system)
	dims = list(system.spaces)
	limiting = [row[-1] for row in table]
	last = len(dims) - 1
	recent = range(last - window, last)
	if window > 0 and last >= window and all(map_is_iso(table, p) for p in recent):
		verdict = Verdict("HeuristicStable", dims[-1], f"last {window} structure maps are isomorphisms")
	else:
		verdict = Verdict("GrowingLowerBound", settled_rank(table), "no certificate within the table")
	return ColimitReport(
		dims=dims,
		rank_table=table,
		verdict=verdict,
		p_start=p_start,
		p_max=p_start + last if p_max is None else p_max,
		p_reached=p_start + last,
		truncated=truncated,
		window=window,
		limiting_ranks=limiting,
	)


class Stabilization:
	def __init__(self, backend, settings=None):
		self.backend = backend
		self.settings = settings or get_settings()
		self._iterates = {}

	# objects and levels

	def ob(self, obj, shift=0):
		return StabObject(obj, shift)

	def omega_power(self, obj, k):
		iterates = self._iterates.setdefault(obj, [obj])
		while len(iterates) <= k:
			iterates.append(self.backend.omega(iterates[-1]))
		return iterates[k]

	def omega_morphism_power(self, f, k):
		for _ in range(k):
			f = self.backend.omega_morphism(f)
		return f

	def morphism(self, source, target, level, rep):
		"""ι_level(rep) : source -> target, after checking the representative's ends."""
		if level < max(source.shift, target.shift):
			raise ShiftOutOfRange(f"level {level} below the shifts {source.shift}, {target.shift}")
		backend = self.backend
		if backend.source(rep) != self.omega_power(source.obj, level - source.shift):
			raise SourceTargetMismatch("representative has the wrong source")
		if backend.target(rep) != self.omega_power(target.obj, level - target.shift):
			raise SourceTargetMismatch("representative has the wrong target")
		return StabMorphism(source, target, level, rep)

	def identity(self, x):
		return StabMorphism(x, x, x.shift, self.backend.identity(x.obj))

	def zero(self, x, y):
		level = max(x.shift, y.shift)
		rep = self.backend.zero(self.omega_power(x.obj, level - x.shift), self.omega_power(y.obj, level - y.shift))
		return StabMorphism(x, y, level, rep)

	def stabilize(self, f):
		backend = self.backend
		return StabMorphism(StabObject(backend.source(f), 0), StabObject(backend.target(f), 0), 0, f)

	def promote(self, phi, k):
		if k < 0:
			raise ValueError("promote needs k >= 0")
		return StabMorphism(phi.source, phi.target, phi.level + k, self.omega_morphism_power(phi.rep, k))

	def _at_level(self, phi, level):
		return self.promote(phi, level - phi.level)

	def compose(self, psi, phi):
		"""psi after phi."""
		if phi.target != psi.source:
			raise SourceTargetMismatch("target of the first morphism is not the source of the second")
		level = max(phi.level, psi.level)
		phi, psi = self._at_level(phi, level), self._at_level(psi, level)
		return StabMorphism(phi.source, psi.target, level, self.backend.compose(psi.rep, phi.rep))

	def add(self, phi, psi):
		self._parallel(phi, psi)
		level = max(phi.level, psi.level)
		phi, psi = self._at_level(phi, level), self._at_level(psi, level)
		return StabMorphism(phi.source, phi.target, level, self.backend.add(phi.rep, psi.rep))

	def negate(self, phi):
		return StabMorphism(phi.source, phi.target, phi.level, self.backend.scale(phi.rep, -1))

	def _parallel(self, phi, psi):
		if phi.source != psi.source or phi.target != psi.target:
			raise SourceTargetMismatch("morphisms are not parallel")

	# suspension

	def suspend(self, item, times=1):
		if isinstance(item, StabObject):
			return StabObject(item.obj, item.shift + times)
		return StabMorphism(self.suspend(item.source, times), self.suspend(item.target, times), item.level + times, item.rep)

	def unsuspend(self, item, times=1):
		return self.suspend(item, -times)

	def canonical_iso(self, x, s):
		"""(X, n) -> (Omega^s X, n + s) and its inverse, both represented by an identity."""
		if s < 0:
			raise ValueError("canonical_iso needs s >= 0")
		shifted = StabObject(self.omega_power(x.obj, s), x.shift + s)
		identity = self.backend.identity(shifted.obj)
		level = x.shift + s
		return StabMorphism(x, shifted, level, identity), StabMorphism(shifted, x, level, identity)

	def theta(self, obj):
		"""(Omega X, 0) -> (X, -1) and its inverse."""
		omega = self.omega_power(obj, 1)
		identity = self.backend.identity(omega)
		source, target = StabObject(omega, 0), StabObject(obj, -1)
		return StabMorphism(source, target, 0, identity), StabMorphism(target, source, 0, identity)

	# equality

	def equal_up_to(self, phi, psi, k_max=None):
		"""Equal(k) when Omega^k of the common-level representatives agree for some k <= k_max."""
		k_max = self.settings.k_max if k_max is None else k_max
		self._parallel(phi, psi)
		level = max(phi.level, psi.level)
		f, g = self._at_level(phi, level).rep, self._at_level(psi, level).rep
		for k in range(k_max + 1):
			if self.backend.equal(f, g):
				return EqualityVerdict("Equal", k)
			if k < k_max:
				f, g = self.backend.omega_morphism(f), self.backend.omega_morphism(g)
		return EqualityVerdict("NotEqualUpTo", k_max)

	# triangles

	def standard_triangle(self, h, g, f, shift=0):
		"""(X, n) -> (Y, n) -> (Z, n) -> (X, n + 1) from Omega Z -h-> X -g-> Y -f-> Z."""
		backend = self.backend
		x, y, z = (StabObject(backend.source(g), shift), StabObject(backend.target(g), shift), StabObject(backend.target(f), shift))
		third = StabMorphism(z, StabObject(x.obj, shift + 1), shift + 1, h)
		return StabMorphism(x, y, shift, g), StabMorphism(y, z, shift, f), self.negate(third)

	# Hom colimits

	def hom_dim_report(self, x, y, p_max=None, window=None):
		backend = self.backend
		if not getattr(backend, "is_linear", False):
			raise BackendNotLinear("Hom colimits need linear morphism spaces")
		p_max = self.settings.p_max if p_max is None else p_max
		window = self.settings.window if window is None else window
		p0 = max(x.shift, y.shift)
		if p_max < p0:
			raise ShiftOutOfRange(f"p_max {p_max} is below the first level {p0}", p_max=p_max, first_level=p0)

		spaces, maps, levels = [], [], []
		zero_reason = None
		truncated = False
		for p in range(p0, p_max + 1):
			xp = self.omega_power(x.obj, p - x.shift)
			yp = self.omega_power(y.obj, p - y.shift)
			if not backend.within_caps(xp, yp):
				truncated = True
				log.warning("Hom colimit truncated at level %d by size caps", p)
				break
			space = backend.hom_space(xp, yp)
			if spaces:
				maps.append(self._structure_map(spaces[-1], space))
			spaces.append(space)
			levels.append((xp, yp))
			log.debug("level %d: Hom dimension %d", p, space.dim)
			if zero_reason is None:
				if backend.is_zero_object(xp):
					zero_reason = f"source becomes zero after {p - x.shift} loops"
				elif backend.is_zero_object(yp):
					zero_reason = f"target becomes zero after {p - y.shift} loops"

		if not spaces:
			report = ColimitReport([], [], Verdict("GrowingLowerBound", 0, "first level exceeds the size caps"), p0, p_max, p0 - 1, True, window)
			log.info("verdict %s", report.verdict.kind)
			return report

		system = DirectSystem([s.dim for s in spaces], maps)
		report = analyze_direct_system(system, window, p_start=p0, p_max=p_max, truncated=truncated)
		if zero_reason is not None:
			report.verdict = Verdict("CertifiedZero", 0, zero_reason)
		else:
			periodic = self._periodic_verdict(x, y, spaces, report)
			if periodic is not None:
				report.verdict = periodic
		log.info("verdict %s (%s)", report.verdict.kind, report.verdict.reason)
		return report

	def _structure_map(self, previous, space):
		"""Matrix of Omega: Hom at one level -> Hom at the next, in the two bases."""
		sparse = getattr(space, "coordinate_items", None)
		entries = {}
		for c, b in enumerate(previous.basis):
			image = self.backend.omega_morphism(b)
			items = sparse(image) if sparse else enumerate(space.coordinates(image))
			for r, value in items:
				if value:
					entries[(r, c)] = value
		return ExactMatrix.from_entries(space.field, entries, (space.dim, previous.dim))

	def _period_iso(self, obj, shift, level, periodicity, length):
		"""Omega^(k + length) X -> Omega^k X for k = level - shift, with its inverse."""
		backend = self.backend
		j = level - shift - periodicity.start
		phi = self.omega_morphism_power(periodicity.witness, j)
		psi = self.omega_morphism_power(periodicity.inverse, j)
		forward, backward = phi, psi
		for r in range(1, length // periodicity.period):
			forward = backend.compose(forward, self.omega_morphism_power(phi, r * periodicity.period))
			backward = backend.compose(self.omega_morphism_power(psi, r * periodicity.period), backward)
		return forward, backward

	def _periodic_verdict(self, x, y, spaces, report):
		backend = self.backend
		bound = report.p_max - min(x.shift, y.shift)
		px = backend.periodicity(x.obj, bound)
		py = backend.periodicity(y.obj, bound)
		if px is None or py is None:
			return None
		start = max(x.shift + px.start, y.shift + py.start, report.p_start)
		length = math.lcm(px.period, py.period)
		index = start - report.p_start
		if index >= len(spaces):
			return None
		space = spaces[index]
		alpha_y, _ = self._period_iso(y.obj, y.shift, start, py, length)
		_, beta_x = self._period_iso(x.obj, x.shift, start, px, length)
		columns = []
		for b in space.basis:
			moved = self.omega_morphism_power(b, length)
			columns.append(space.coordinates(backend.compose(alpha_y, backend.compose(moved, beta_x))))
		period_map = ExactMatrix.from_columns(space.field, space.dim, columns)
		d = eventual_rank(period_map)
		reason = f"periodic from level {start} with period {length}"
		if d == 0:
			return Verdict("CertifiedZero", 0, reason + ", period map nilpotent")
		# at least a full period and a full window of isomorphisms
		span = max(length, report.window)
		inside = [p for p in range(index, index + span) if p + 1 < len(report.dims)]
		if rank(period_map) == space.dim and len(inside) == span and all(map_is_iso(report.rank_table, p) for p in inside):
			return Verdict("CertifiedStable", d, reason + ", structure maps are isomorphisms")
		return Verdict("CertifiedColimit", d, reason + ", eventual rank of the period map")

