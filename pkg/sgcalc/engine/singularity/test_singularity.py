# Copyright (c) 2026, sgcalc contributors
# See license.txt

import unittest

from sgcalc.engine.homological_engine import ext_dim, syzygy
from sgcalc.engine.linalg_exact import Field
from sgcalc.engine.quiver_algebra import (
	Quiver,
	direct_sum,
	projective_rep,
	regular_rep,
	simple_rep,
)
from sgcalc.engine.quiver_algebra.corpus import radical_square_zero
from sgcalc.engine.singularity import (
	LabelledPair,
	SgQuery,
	buchweitz_check,
	gorenstein_defect_witness,
	gp_test,
	is_selfinjective,
	is_sg_zero,
	sg_hom_dim,
)
from sgcalc.exceptions import AlgebraMismatch, NotSelfInjective, UsageError
from sgcalc.fixtures import load_algebra

F7 = Field.prime(7)


def loop_with_exit():
	"""Loop x at 1 and an arrow a: 1 -> 2, all paths of length two zero."""
	quiver = Quiver.from_edges(["1", "2"], [("x", "1", "1"), ("a", "1", "2")])
	return radical_square_zero(F7, quiver)


def simple_pairs(algebra, shift=0):
	vertices = algebra.quiver.vertices
	return [
		LabelledPair(f"S{i}", simple_rep(algebra, i), f"S{j}", simple_rep(algebra, j), shift)
		for i in vertices
		for j in vertices
	]


class TestSingularity(unittest.TestCase):
	def test_dual_numbers_every_shift(self):
		s = simple_rep(load_algebra("kx2"), "1")
		for t in range(-3, 4):
			report = sg_hom_dim(SgQuery(s, s, t, p_max=8))
			self.assertEqual((report.verdict.kind, report.verdict.value), ("CertifiedStable", 1))

	def test_finite_global_dimension_vanishes(self):
		a2 = load_algebra("a2")
		for pair in simple_pairs(a2):
			for t in range(-2, 3):
				report = sg_hom_dim(SgQuery(pair.source, pair.target, t))
				self.assertEqual(report.verdict.kind, "CertifiedZero")
		for m in (simple_rep(a2, "1"), simple_rep(a2, "2"), projective_rep(a2, "1")):
			verdict = is_sg_zero(m, 10)
			self.assertEqual(verdict.kind, "Zero")
			self.assertLessEqual(verdict.value, 1)

	def test_cyclic_simples(self):
		cyclic3 = load_algebra("cyclic3_rsz")
		s1, s2, s3 = (simple_rep(cyclic3, v) for v in ("1", "2", "3"))
		report = sg_hom_dim(SgQuery(s1, s3, -1))
		self.assertEqual((report.verdict.kind, report.verdict.value), ("CertifiedStable", 1))
		self.assertEqual(sg_hom_dim(SgQuery(s1, s2, 0)).verdict.kind, "CertifiedZero")

	def test_shift_coherence(self):
		cyclic3 = load_algebra("cyclic3_rsz")
		s1, s3 = simple_rep(cyclic3, "1"), simple_rep(cyclic3, "3")
		base = sg_hom_dim(SgQuery(s1, s3, -1, p_max=6))
		moved = sg_hom_dim(SgQuery(syzygy(s1), s3, -2, p_max=6))
		self.assertEqual(moved.dims[:-1], base.dims[1:])
		self.assertEqual(moved.verdict.value, base.verdict.value)

	def test_query_needs_one_algebra(self):
		with self.assertRaises(AlgebraMismatch):
			SgQuery(simple_rep(load_algebra("kx2"), "1"), simple_rep(load_algebra("a2"), "1"))

	def test_sg_zero_verdicts(self):
		kx2 = load_algebra("kx2")
		self.assertEqual(is_sg_zero(projective_rep(kx2, "1"), 4).to_dict()["kind"], "Zero")
		verdict = is_sg_zero(simple_rep(kx2, "1"), 4)
		self.assertEqual((verdict.kind, verdict.value), ("NonzeroCertified", 1))
		two_loop = load_algebra("two_loop_rsz")
		self.assertEqual(is_sg_zero(simple_rep(two_loop, "1"), 3).kind, "UnknownUpTo")

	def test_self_injectivity(self):
		self.assertTrue(is_selfinjective(load_algebra("kx2")))
		self.assertTrue(is_selfinjective(load_algebra("cyclic3_rsz")))
		self.assertFalse(is_selfinjective(load_algebra("a2")))
		self.assertFalse(is_selfinjective(load_algebra("two_loop_rsz")))

	def test_gorenstein_projective_verdicts(self):
		a2 = load_algebra("a2")
		verdict = gp_test(simple_rep(a2, "1"), 4)
		self.assertEqual(verdict.kind, "NotGP")
		self.assertEqual(verdict.witness, {"i": 1, "dim": 1})
		self.assertEqual(ext_dim(simple_rep(a2, "1"), regular_rep(a2), 1), 1)
		self.assertEqual(gp_test(projective_rep(a2, "1"), 4).kind, "GP_Certified")
		for name in ("kx2", "cyclic3_rsz"):
			algebra = load_algebra(name)
			modules = [simple_rep(algebra, v) for v in algebra.quiver.vertices]
			modules.append(direct_sum(modules).rep)
			for m in modules:
				self.assertEqual(gp_test(m, 4).kind, "GP_Certified")
		with self.assertRaises(UsageError):
			gp_test(simple_rep(a2, "1"), 0)

	def test_gp_bound_reports_the_scanned_range(self):
		a2 = load_algebra("a2")
		verdict = gp_test(simple_rep(a2, "1"), 1, selfinj_dim=3)
		self.assertEqual((verdict.kind, verdict.bound), ("NotGP", 3))
		self.assertEqual(gp_test(simple_rep(a2, "1"), 2).bound, 2)

	def test_buchweitz_comparison(self):
		cyclic3 = load_algebra("cyclic3_rsz")
		report = buchweitz_check(cyclic3, simple_pairs(cyclic3))
		self.assertTrue(report.all_pass)
		for row in report.pairs:
			expected = 1 if row["source"] == row["target"] else 0
			self.assertEqual((row["sgDim"], row["stableDim"]), (expected, expected))
		kx2 = load_algebra("kx2")
		s, p = simple_rep(kx2, "1"), projective_rep(kx2, "1")
		pairs = [LabelledPair("S", s, "S", s, 0), LabelledPair("P", p, "S", s, 0), LabelledPair("S", s, "S", s, 2)]
		report = buchweitz_check(kx2, pairs, p_max=6)
		self.assertTrue(report.all_pass)
		self.assertEqual([row["stableDim"] for row in report.pairs], [1, 0, 1])
		with self.assertRaises(NotSelfInjective):
			buchweitz_check(load_algebra("a2"), simple_pairs(load_algebra("a2")))

	def test_gorenstein_defect_witness(self):
		algebra = loop_with_exit()
		s1 = simple_rep(algebra, "1")
		self.assertEqual(is_sg_zero(s1, 6).kind, "NonzeroCertified")
		self.assertEqual(gp_test(s1, 4).witness, {"i": 1, "dim": 2})
		witness = gorenstein_defect_witness(s1, 6, 4)
		self.assertEqual(witness["verdict"], "GP-image ≠ D_sg witness found")
		self.assertIsNone(gorenstein_defect_witness(simple_rep(load_algebra("kx2"), "1"), 6, 4))
