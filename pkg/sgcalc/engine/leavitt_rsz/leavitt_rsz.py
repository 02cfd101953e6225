# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""Radical-square-zero pipeline: relation quivers, sink removal and cross-checks."""

import logging
from dataclasses import dataclass

from sgcalc.config import get_settings
from sgcalc.engine.homological_engine import ModuleBackend
from sgcalc.engine.leavitt_rsz.adjacency_model import AdjacencyBackend, AdjacencyModel, GradedTuple, model_hom_report
from sgcalc.engine.quiver_algebra import Quiver, Representation, RepMorphism, left_ideal_rep, radical, simple_rep
from sgcalc.engine.quiver_algebra.corpus import radical_square_zero
from sgcalc.engine.singularity import SgQuery, sg_hom_dim
from sgcalc.engine.stabilization import TriangleFunctor
from sgcalc.exceptions import NotRadicalSquareZero

log = logging.getLogger(__name__)

SHIFTS = tuple(range(-2, 3))


def relation_quiver(algebra):
	"""Vertices are the arrows of Q; each relation beta alpha gives an arrow [beta alpha]: alpha -> beta."""
	relations = algebra.quadratic_relations()
	edges = [(f"[{beta}{alpha}]", alpha, beta) for alpha, beta in relations]
	return Quiver.from_edges([arrow.name for arrow in algebra.quiver.arrows], edges)


def sink_removal_rounds(quiver):
	"""Vertices removed in each round of deleting every sink."""
	graph = quiver.graph()
	rounds = []
	while True:
		sinks = [v for v in quiver.vertices if v in graph and graph.out_degree(v) == 0]
		if not sinks:
			return rounds
		graph.remove_nodes_from(sinks)
		rounds.append(sinks)


def remove_sinks(quiver):
	removed = {v for round_ in sink_removal_rounds(quiver) for v in round_}
	kept = [v for v in quiver.vertices if v not in removed]
	arrows = [(a.name, a.source, a.target) for a in quiver.arrows if a.source not in removed and a.target not in removed]
	return Quiver.from_edges(kept, arrows)


def leavitt_summary(quiver):
	rounds = sink_removal_rounds(quiver)
	reduced = remove_sinks(quiver)
	return {
		"leavittQuiver": reduced.describe(),
		"empty": not reduced.vertices,
		"rounds": len(rounds),
		"removed": rounds,
	}


def _check_rsz(algebra):
	if not algebra.is_radical_square_zero():
		raise NotRadicalSquareZero("relations must be exactly the paths of length two")


@dataclass
class CrosscheckReport:
	pairs: list
	all_match: bool

	@property
	def truncated(self):
		return sum(row["truncated"] for row in self.pairs)

	def to_dict(self):
		return {"pairs": self.pairs, "allMatch": self.all_match, "truncatedRows": self.truncated}


def compare_rows(left, right):
	"""(dims agree on every level, either side truncated).

	A side that stopped early at its size caps has a shorter list and so
	does not agree.
	"""
	return left.dims == right.dims, left.truncated or right.truncated


def crosscheck_rsz(algebra, pairs=None, shifts=SHIFTS, p_max=None, model=None, settings=None):
	"""Compare Hom colimits of simples from the syzygy engine and from the adjacency model.

	``pairs`` lists (i, j) vertex pairs, all of them by default. Rows match when
	both sides reach the same levels with the same dimensions.
	"""
	settings = settings or get_settings()
	_check_rsz(algebra)
	quiver = algebra.quiver
	if model is None:
		model = AdjacencyModel.from_quiver(quiver, algebra.field)
	else:
		model.check_quiver(quiver)
	if pairs is None:
		pairs = [(i, j) for i in quiver.vertices for j in quiver.vertices]
	rows = []
	for i, j in pairs:
		for t in shifts:
			engine = sg_hom_dim(SgQuery(simple_rep(algebra, i), simple_rep(algebra, j), t, p_max), settings)
			modelled = model_hom_report(model, GradedTuple(model.unit(i)), GradedTuple(model.unit(j), t), p_max, settings=settings)
			match, truncated = compare_rows(engine, modelled)
			rows.append(
				{
					"source": f"S{i}",
					"target": f"S{j}",
					"shift": t,
					"engineDims": engine.dims,
					"modelDims": modelled.dims,
					"engineVerdict": engine.verdict.kind,
					"modelVerdict": modelled.verdict.kind,
					"truncated": truncated,
					"match": match,
				}
			)
	report = CrosscheckReport(rows, all(row["match"] for row in rows))
	mismatches = sum(not row["match"] for row in rows)
	log.info("rsz cross-check: %d rows, %d mismatches, %d truncated", len(rows), mismatches, report.truncated)
	return report


def _colimit_agreement(left, right):
	if left.verdict.certified and right.verdict.certified:
		return left.colimit_dim == right.colimit_dim, True
	return left.limiting_rank == right.limiting_rank, False


def monomial_equiv_check(algebra, p_max=None, shifts=SHIFTS, settings=None):
	"""Compare B alpha over a quadratic monomial B with S_alpha over the radical-square-zero relation-quiver algebra."""
	settings = settings or get_settings()
	partner = radical_square_zero(algebra.field, relation_quiver(algebra))
	arrows = [arrow.name for arrow in algebra.quiver.arrows]
	ideals = {a: left_ideal_rep(algebra, a) for a in arrows}
	simples = {a: simple_rep(partner, a) for a in arrows}
	rows = []
	for alpha in arrows:
		for beta in arrows:
			for t in shifts:
				left = sg_hom_dim(SgQuery(ideals[alpha], ideals[beta], t, p_max), settings)
				right = sg_hom_dim(SgQuery(simples[alpha], simples[beta], t, p_max), settings)
				agree, certified = _colimit_agreement(left, right)
				dims_match, truncated = compare_rows(left, right)
				rows.append(
					{
						"source": alpha,
						"target": beta,
						"shift": t,
						"idealDims": left.dims,
						"simpleDims": right.dims,
						"idealVerdict": left.verdict.to_dict(),
						"simpleVerdict": right.verdict.to_dict(),
						"dimsMatch": dims_match,
						"truncated": truncated,
						"certified": certified,
						"match": agree and dims_match,
					}
				)
	report = CrosscheckReport(rows, all(row["match"] for row in rows))
	log.info("monomial comparison: %d rows, all match %s", len(rows), report.all_match)
	return report


def semisimple_rep(algebra, dims):
	return Representation.build(algebra, dict(zip(algebra.quiver.vertices, dims)), check=False)


def spmod_preimage(algebra, model):
	"""Dimension vector of a semisimple module with no projective simple summand, else None."""

	def preimage(z):
		rad, _ = radical(z)
		if not rad.is_zero() or model.normalize(z.dims) != z.dims:
			return None
		return z.dims

	return preimage


def semisimple_functor(algebra, settings=None):
	"""The inclusion of the adjacency model into the stable module category."""
	_check_rsz(algebra)
	settings = settings or get_settings()
	model = AdjacencyModel.from_quiver(algebra.quiver, algebra.field)

	def on_morphism(f):
		return RepMorphism(semisimple_rep(algebra, f.source), semisimple_rep(algebra, f.target), f.blocks)

	return TriangleFunctor(
		source=AdjacencyBackend(model, settings),
		target=ModuleBackend(settings),
		on_object=lambda dims: semisimple_rep(algebra, dims),
		on_morphism=on_morphism,
		preimage=spmod_preimage(algebra, model),
	)
