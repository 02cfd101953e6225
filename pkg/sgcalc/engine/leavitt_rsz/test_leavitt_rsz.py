# Copyright (c) 2026, sgcalc contributors
# See license.txt

import time
import unittest

from sgcalc.engine.leavitt_rsz import (
	AdjacencyModel,
	GradedTuple,
	compare_rows,
	crosscheck_rsz,
	leavitt_summary,
	model_hom_report,
	monomial_equiv_check,
	relation_quiver,
	remove_sinks,
	semisimple_functor,
	sink_removal_rounds,
)
from sgcalc.config import get_settings
from sgcalc.engine.linalg_exact import Field
from sgcalc.engine.quiver_algebra import Quiver, projective_rep, read_json, simple_rep
from sgcalc.engine.quiver_algebra.corpus import gentle_cycle, random_gentle_algebra, random_rsz_algebra
from sgcalc.engine.singularity import SgQuery, sg_hom_dim
from sgcalc.engine.stabilization import ColimitReport, Verdict, pre_triangle_equiv_check
from sgcalc.exceptions import NotQuadraticMonomial, NotRadicalSquareZero, SchemaError, ShiftOutOfRange
from sgcalc.fixtures import load_algebra, resolve

F7 = Field.prime(7)


def loop_with_exit():
	return Quiver.from_edges(["1", "2"], [("x", "1", "1"), ("a", "1", "2")])


class TestRelationQuiver(unittest.TestCase):
	def test_dual_numbers(self):
		quiver = relation_quiver(load_algebra("kx2"))
		self.assertEqual(quiver.vertices, ("x",))
		self.assertEqual([(a.name, a.source, a.target) for a in quiver.arrows], [("[xx]", "x", "x")])

	def test_two_cycle(self):
		quiver = relation_quiver(load_algebra("gentle_2cycle"))
		self.assertEqual(quiver.vertices, ("a", "b"))
		self.assertEqual(
			sorted((a.name, a.source, a.target) for a in quiver.arrows),
			[("[ab]", "b", "a"), ("[ba]", "a", "b")],
		)

	def test_single_relation(self):
		algebra = load_algebra("a3_rel")
		quiver = relation_quiver(algebra)
		self.assertEqual(len(quiver.vertices), len(algebra.quiver.arrows))
		self.assertEqual(len(quiver.arrows), len(algebra.relations))
		self.assertEqual([(a.source, a.target) for a in quiver.arrows], [("a", "b")])
		self.assertFalse(any(a.is_loop for a in quiver.arrows))

	def test_needs_quadratic_monomial(self):
		with self.assertRaises(NotQuadraticMonomial):
			relation_quiver(load_algebra("commutative_square"))


class TestSinkRemoval(unittest.TestCase):
	def test_cycle_is_kept(self):
		quiver = load_algebra("cyclic3_rsz").quiver
		self.assertEqual(remove_sinks(quiver), quiver)
		self.assertEqual(sink_removal_rounds(quiver), [])

	def test_linear_quiver_vanishes(self):
		quiver = load_algebra("a3_rel").quiver
		self.assertEqual(sink_removal_rounds(quiver), [["3"], ["2"], ["1"]])
		reduced = remove_sinks(quiver)
		self.assertEqual((reduced.vertices, reduced.arrows), ((), ()))
		self.assertTrue(leavitt_summary(quiver)["empty"])

	def test_pendant_arrow(self):
		reduced = remove_sinks(loop_with_exit())
		self.assertEqual(reduced.vertices, ("1",))
		self.assertEqual([a.name for a in reduced.arrows], ["x"])
		self.assertEqual(remove_sinks(reduced), reduced)
		summary = leavitt_summary(loop_with_exit())
		self.assertEqual((summary["empty"], summary["rounds"], summary["removed"]), (False, 1, [["2"]]))

	def test_result_has_no_sinks(self):
		for seed in range(10):
			quiver = random_rsz_algebra(seed).quiver
			reduced = remove_sinks(quiver)
			for v in reduced.vertices:
				self.assertTrue(reduced.outgoing(v))
			looped = {arrow.source for arrow in quiver.arrows if arrow.is_loop}
			self.assertLessEqual(looped, set(reduced.vertices))


class TestAdjacencyModel(unittest.TestCase):
	def test_from_quiver(self):
		model = AdjacencyModel.from_quiver(load_algebra("cyclic3_rsz").quiver)
		self.assertEqual(model.adjacency, ((0, 0, 1), (1, 0, 0), (0, 1, 0)))
		self.assertEqual(model.apply(model.unit("1")), model.unit("2"))
		a2 = AdjacencyModel.from_quiver(load_algebra("a2").quiver)
		self.assertEqual(a2.sinks, (False, True))
		self.assertEqual(a2.unit("2"), (0, 0))

	def test_file_validation(self):
		model = AdjacencyModel.from_dict(read_json(resolve("cyclic3_rsz__corrupted_model")))
		self.assertEqual(model.adjacency[1][0], 2)
		with self.assertRaises(SchemaError) as caught:
			AdjacencyModel.from_dict({"vertices": ["1", "2"], "adjacency": [[0, -1], [0, 0]]})
		self.assertEqual(caught.exception.detail["pointer"], "/adjacency/0/1")
		with self.assertRaises(SchemaError):
			AdjacencyModel.from_dict({"vertices": ["1", "2"], "adjacency": [[0, 1]]})
		for dims in ((1.5, 0), ("1", 0), (1,), (-1, 0)):
			with self.assertRaises(SchemaError):
				model.normalize(dims)

	def test_empty_leavitt_quiver(self):
		model = AdjacencyModel.from_quiver(load_algebra("a2").quiver, F7)
		report = model_hom_report(model, GradedTuple((1, 0)), GradedTuple((1, 0)), p_max=4)
		self.assertEqual(report.verdict.kind, "CertifiedZero")
		self.assertEqual(report.dims, [1, 0, 0, 0, 0])

	def test_permutation(self):
		model = AdjacencyModel.from_quiver(load_algebra("cyclic3_rsz").quiver, F7)
		x = GradedTuple(model.unit("1"))
		report = model_hom_report(model, x, x)
		self.assertEqual(set(report.dims), {1})
		self.assertEqual((report.verdict.kind, report.verdict.value), ("CertifiedStable", 1))

	def test_growth(self):
		model = AdjacencyModel.from_quiver(load_algebra("two_loop_rsz").quiver, F7)
		x = GradedTuple((1,))
		report = model_hom_report(model, x, x, p_max=3)
		self.assertEqual(report.dims, [1, 4, 16, 64])
		self.assertEqual(report.rank_table[0], [1, 1, 1, 1])
		self.assertEqual(report.verdict.kind, "GrowingLowerBound")

	def test_dims_are_dot_products(self):
		model = AdjacencyModel.from_quiver(loop_with_exit(), F7)
		x, y = GradedTuple((2, 0)), GradedTuple((1, 0), 1)
		report = model_hom_report(model, x, y, p_max=4)
		self.assertEqual(report.dims, [2, 2, 2, 2])
		self.assertTrue(report.maps_are_isos())

	def test_shift_out_of_range(self):
		model = AdjacencyModel.from_quiver(load_algebra("kx2").quiver)
		with self.assertRaises(ShiftOutOfRange):
			model_hom_report(model, GradedTuple((1,), 5), GradedTuple((1,)), p_max=3)


class TestCrosscheck(unittest.TestCase):
	def test_corpus_agrees(self):
		for name, p_max in (("cyclic2_rsz", 6), ("cyclic3_rsz", 6), ("two_loop_rsz", 3), ("a2", 4)):
			report = crosscheck_rsz(load_algebra(name), p_max=p_max)
			self.assertTrue(report.all_match, name)
		report = crosscheck_rsz(load_algebra("two_loop_rsz"), shifts=[0], p_max=3)
		self.assertEqual(report.pairs[0]["engineDims"], [1, 4, 16, 64])
		self.assertEqual(report.pairs[0]["modelDims"], [1, 4, 16, 64])

	def test_random_quivers_agree(self):
		started = time.monotonic()
		algebras = [load_algebra(name) for name in ("cyclic2_rsz", "cyclic3_rsz", "two_loop_rsz")]
		algebras.extend(random_rsz_algebra(seed) for seed in range(3))
		for algebra in algebras:
			report = crosscheck_rsz(algebra, p_max=6)
			self.assertTrue(report.all_match, algebra.quiver.describe())
			for row in report.pairs:
				self.assertEqual(row["engineDims"], row["modelDims"])
		self.assertLess(time.monotonic() - started, 30)

	def test_truncation_is_reported(self):
		settings = get_settings().replace(max_hom_unknowns=32)
		report = crosscheck_rsz(load_algebra("two_loop_rsz"), shifts=[0], p_max=6, settings=settings)
		row = report.pairs[0]
		self.assertEqual((row["engineDims"], row["modelDims"]), ([1, 4, 16], [1, 4, 16]))
		self.assertTrue(row["truncated"])
		self.assertTrue(row["match"])
		self.assertEqual(report.to_dict()["truncatedRows"], 1)

	def test_short_side_does_not_match(self):
		full = ColimitReport([1, 1, 1], [], Verdict("HeuristicStable", 1), 0, 2, 2, False, 3)
		short = ColimitReport([1, 1], [], Verdict("GrowingLowerBound", 1), 0, 2, 1, True, 3)
		self.assertEqual(compare_rows(short, full), (False, True))
		self.assertEqual(compare_rows(full, full), (True, False))

	def test_vanishing_for_hereditary_input(self):
		report = crosscheck_rsz(load_algebra("a2"), shifts=[0], p_max=4)
		self.assertEqual({row["engineVerdict"] for row in report.pairs}, {"CertifiedZero"})
		self.assertEqual({row["modelVerdict"] for row in report.pairs}, {"CertifiedZero"})

	def test_corrupted_model_is_caught(self):
		algebra = load_algebra("cyclic3_rsz")
		model = AdjacencyModel.from_dict(read_json(resolve("cyclic3_rsz__corrupted_model")), algebra.field)
		report = crosscheck_rsz(algebra, pairs=[("1", "1")], shifts=[0], p_max=3, model=model)
		self.assertFalse(report.all_match)
		self.assertFalse(report.to_dict()["allMatch"])

	def test_needs_radical_square_zero(self):
		with self.assertRaises(NotRadicalSquareZero):
			crosscheck_rsz(gentle_cycle(F7, 3, [0]))

	def test_stable_tables_are_isomorphisms(self):
		algebra = load_algebra("cyclic3_rsz")
		for i in algebra.quiver.vertices:
			for j in algebra.quiver.vertices:
				report = sg_hom_dim(SgQuery(simple_rep(algebra, i), simple_rep(algebra, j), 1, p_max=6))
				if report.verdict.kind == "CertifiedStable":
					self.assertTrue(report.maps_are_isos())


class TestMonomialEquivalence(unittest.TestCase):
	def test_dual_numbers(self):
		report = monomial_equiv_check(load_algebra("kx2"), p_max=4)
		self.assertTrue(report.all_match)
		for row in report.pairs:
			self.assertEqual(set(row["idealDims"]), {1})
			self.assertEqual(set(row["simpleDims"]), {1})

	def test_two_cycle(self):
		report = monomial_equiv_check(load_algebra("gentle_2cycle"), p_max=6)
		self.assertEqual(len(report.pairs), 4 * 5)
		self.assertTrue(report.all_match)
		self.assertTrue(all(row["dimsMatch"] for row in report.pairs))

	def test_finite_global_dimension(self):
		report = monomial_equiv_check(load_algebra("a3_rel"), p_max=6)
		self.assertTrue(report.all_match)
		for row in report.pairs:
			self.assertEqual(row["idealVerdict"]["kind"], "CertifiedZero")
			self.assertEqual(row["simpleVerdict"]["kind"], "CertifiedZero")

	def test_seeded_gentle(self):
		started = time.monotonic()
		for seed in range(4):
			report = monomial_equiv_check(random_gentle_algebra(seed), p_max=6)
			self.assertTrue(report.all_match, seed)
			for row in report.pairs:
				self.assertTrue(row["dimsMatch"], (seed, row))
				self.assertFalse(row["truncated"])
		self.assertLess(time.monotonic() - started, 30)

	def test_needs_quadratic_monomial(self):
		with self.assertRaises(NotQuadraticMonomial):
			monomial_equiv_check(load_algebra("commutative_square"))


class TestSemisimpleFunctor(unittest.TestCase):
	def test_equivalence_evidence(self):
		algebra = load_algebra("cyclic3_rsz")
		functor = semisimple_functor(algebra)
		model = functor.source.model
		sources = [model.unit(v) for v in algebra.quiver.vertices]
		targets = [simple_rep(algebra, "1"), projective_rep(algebra, "1")]
		report = pre_triangle_equiv_check(functor, sources, targets, depth=2)
		self.assertEqual((report.full.status, report.full.depth), ("witnessed", 0))
		self.assertEqual((report.faithful.status, report.faithful.depth), ("witnessed", 0))
		self.assertEqual((report.dense.status, report.dense.depth), ("witnessed", 1))
