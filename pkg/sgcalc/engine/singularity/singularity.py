# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""Singularity-category invariants computed as stabilized stable Hom."""

import logging
from dataclasses import dataclass
from typing import NamedTuple

from sgcalc.config import get_settings
from sgcalc.engine.homological_engine import (
	ModuleBackend,
	ext_dim,
	is_injective,
	is_projective,
	proj_dim,
	stable_hom_space,
	syzygy,
)
from sgcalc.engine.quiver_algebra import projective_rep, regular_rep
from sgcalc.engine.stabilization import StabObject, Stabilization
from sgcalc.exceptions import AlgebraMismatch, NotSelfInjective, UsageError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SgQuery:
	"""Hom from M to Sigma^shift N in the singularity category."""

	source: object
	target: object
	shift: int = 0
	p_max: int | None = None
	window: int | None = None

	def __post_init__(self):
		if self.source.algebra != self.target.algebra:
			raise AlgebraMismatch("source and target live over different algebras")

	@property
	def algebra(self):
		return self.source.algebra


class LabelledPair(NamedTuple):
	source_label: str
	source: object
	target_label: str
	target: object
	shift: int = 0


def sg_hom_dim(query, settings=None):
	settings = settings or get_settings()
	stab = Stabilization(ModuleBackend(settings), settings)
	return stab.hom_dim_report(StabObject(query.source, 0), StabObject(query.target, query.shift), query.p_max, query.window)


@dataclass(frozen=True)
class SgZeroVerdict:
	kind: str
	value: int | None = None
	reason: str = ""

	def to_dict(self):
		return {"kind": self.kind, "value": self.value, "reason": self.reason}


def is_sg_zero(m, bound, settings=None):
	settings = settings or get_settings()
	pd = proj_dim(m, bound)
	if pd.kind == "finite":
		return SgZeroVerdict("Zero", pd.value, f"projective dimension {pd.value}")
	period = ModuleBackend(settings).periodicity(m, bound)
	if period is not None:
		return SgZeroVerdict("NonzeroCertified", period.period, f"Omega-periodic from {period.start}")
	return SgZeroVerdict("UnknownUpTo", bound, "neither projective nor periodic within the bound")


def is_selfinjective(algebra):
	return all(is_injective(projective_rep(algebra, v)) for v in algebra.quiver.vertices)


@dataclass(frozen=True)
class GpVerdict:
	kind: str
	reason: str = ""
	bound: int | None = None
	witness: dict | None = None

	def to_dict(self):
		return {"kind": self.kind, "reason": self.reason, "bound": self.bound, "witness": self.witness}


def gp_test(m, ext_bound, selfinj_dim=None):
	"""Gorenstein-projectivity evidence from Ext^i(M, A) against the regular module."""
	if ext_bound < 1:
		raise UsageError("ext_bound must be at least 1", option="ext_bound")
	if is_projective(m):
		return GpVerdict("GP_Certified", "projective")
	if is_selfinjective(m.algebra):
		return GpVerdict("GP_Certified", "self-injective algebra")
	regular = regular_rep(m.algebra)
	scanned = max(ext_bound, selfinj_dim or 0)
	for i in range(1, scanned + 1):
		e = ext_dim(m, regular, i)
		if e:
			return GpVerdict("NotGP", f"Ext^{i}(M, A) is nonzero", scanned, {"i": i, "dim": e})
	if selfinj_dim is not None:
		return GpVerdict("GP_Certified", f"Ext vanishes up to self-injective dimension {selfinj_dim}", scanned)
	return GpVerdict("GP_UpToBound", f"Ext^1..{ext_bound}(M, A) vanish", ext_bound)


def stable_side_dim(m, n, t):
	if t >= 0:
		return stable_hom_space(syzygy(m, t), n).dim
	return stable_hom_space(m, syzygy(n, -t)).dim


@dataclass
class BuchweitzReport:
	pairs: list
	all_pass: bool

	def to_dict(self):
		return {"pairs": self.pairs, "allPass": self.all_pass}


def buchweitz_check(algebra, pairs, p_max=None, window=None, settings=None):
	"""Compare singularity-category Hom with stable Hom over a self-injective algebra."""
	settings = settings or get_settings()
	if not is_selfinjective(algebra):
		raise NotSelfInjective("the stable module category is only compared for self-injective algebras")
	rows = []
	for pair in pairs:
		report = sg_hom_dim(SgQuery(pair.source, pair.target, pair.shift, p_max, window), settings)
		stable = stable_side_dim(pair.source, pair.target, pair.shift)
		isos = report.maps_are_isos()
		ok = bool(report.dims) and isos and report.dims[0] == stable and report.colimit_dim == stable
		if not ok:
			log.info("comparison failed for %s -> %s at shift %d", pair.source_label, pair.target_label, pair.shift)
		rows.append(
			{
				"source": pair.source_label,
				"target": pair.target_label,
				"shift": pair.shift,
				"sgDim": report.colimit_dim,
				"stableDim": stable,
				"dims": report.dims,
				"mapsIso": isos,
				"ok": ok,
			}
		)
	return BuchweitzReport(rows, all(row["ok"] for row in rows))


def gorenstein_defect_witness(m, bound, ext_bound, settings=None):
	zero = is_sg_zero(m, bound, settings)
	if zero.kind != "NonzeroCertified":
		return None
	gp = gp_test(m, ext_bound)
	if gp.kind != "NotGP":
		return None
	return {"verdict": "GP-image ≠ D_sg witness found", "period": zero.value, "ext": gp.witness}
