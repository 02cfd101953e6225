# Copyright (c) 2026, sgcalc contributors
# See license.txt

import random
import unittest

from sgcalc.engine.axioms import (
	calculus_suite,
	hom_exactness_suite,
	is_split,
	module_pool,
	nonsplit_sequence,
	random_sequence,
	run_axioms,
	well_definedness_suite,
)
from sgcalc.engine.homological_engine import check_exact, is_projective
from sgcalc.engine.quiver_algebra import direct_sum, projective_rep, simple_rep
from sgcalc.fixtures import load_algebra


class TestAxioms(unittest.TestCase):
	def test_random_sequences_are_exact(self):
		rng = random.Random(0)
		for name in ("kx2", "a2", "cyclic3_rsz", "gentle_2cycle"):
			algebra = load_algebra(name)
			for _ in range(5):
				g, f = random_sequence(algebra, rng)
				check_exact(g, f)

	def test_pushout_sequences_do_not_split(self):
		rng = random.Random(0)
		for name in ("kx2", "a2", "cyclic3_rsz", "gentle_2cycle", "a3_rel"):
			algebra = load_algebra(name)
			for _ in range(3):
				g, f = nonsplit_sequence(algebra, rng)
				check_exact(g, f)
				self.assertFalse(is_split(f), name)

	def test_pushout_middle_term_on_dual_numbers(self):
		algebra = load_algebra("kx2")
		g, f = nonsplit_sequence(algebra, random.Random(1))
		self.assertEqual((g.source.total_dim, f.source.total_dim, f.target.total_dim), (1, 3, 2))
		self.assertFalse(is_projective(f.source))

	def test_split_projection_is_split(self):
		algebra = load_algebra("kx2")
		v = algebra.quiver.vertices[0]
		total = direct_sum([simple_rep(algebra, v), projective_rep(algebra, v)])
		self.assertTrue(is_split(total.projections[0]))
		self.assertTrue(is_split(total.projections[1]))

	def test_pool_has_no_zero_module(self):
		pool = module_pool(load_algebra("a3_rel"))
		self.assertTrue(pool)
		self.assertFalse(any(m.is_zero() for m in pool))
		self.assertEqual(len(pool), len({(m.dims, m.maps) for m in pool}))

	def test_well_definedness(self):
		result = well_definedness_suite(50, seed=0)
		self.assertEqual(result.cases, 50)
		self.assertGreater(result.nonsplit, 0)
		self.assertEqual(result.failures, [])

	def test_hom_exactness(self):
		result = hom_exactness_suite(50, seed=0, tests_per_sequence=3)
		self.assertEqual(result.cases, 150)
		self.assertGreater(result.nonsplit, 0)
		self.assertEqual(result.failures, [])

	def test_calculus_identities(self):
		result = calculus_suite(seed=0, triples=50, pairs=25, k_max=8)
		self.assertTrue(result.passed, result.failures)

	def test_report_is_deterministic(self):
		first = run_axioms(seed=3, count=4)
		self.assertTrue(first["allPass"])
		self.assertEqual([s["name"] for s in first["suites"]], ["wellDefinedness", "homExactness", "calculus"])
		self.assertGreater(first["suites"][0]["nonsplit"], 0)
		self.assertEqual(run_axioms(seed=3, count=4), first)
