# Copyright (c) 2026, sgcalc contributors
# See license.txt

import unittest

from sgcalc.engine.linalg_exact import ExactMatrix, Field
from sgcalc.engine.quiver_algebra import (
	Path,
	PathExpr,
	Quiver,
	RepMorphism,
	Representation,
	algebra_from_dict,
	algebra_to_dict,
	build_algebra,
	cokernel_rep,
	direct_sum,
	hom_coordinates,
	hom_dim,
	hom_space,
	is_isomorphic,
	kernel_rep,
	left_ideal_rep,
	module_from_dict,
	module_to_dict,
	parse_algebra,
	parse_module,
	projective_rep,
	radical,
	radical_series_dims,
	read_json,
	regular_rep,
	simple_rep,
	top_dims,
)
from sgcalc.engine.quiver_algebra.corpus import gentle_cycle, random_rsz_algebra
from sgcalc.exceptions import (
	InadmissibleRelation,
	InfiniteDimensional,
	MatrixShapeMismatch,
	NotMonomial,
	RelationNotParallel,
	RelationNotSatisfied,
	SchemaError,
)
from sgcalc.fixtures import load_algebra, resolve

F7 = Field.prime(7)


def labels(algebra):
	return sorted(path.label() for path in algebra.basis)


class TestQuiverAlgebra(unittest.TestCase):
	def test_dual_numbers_basis(self):
		kx2 = load_algebra("kx2")
		self.assertEqual(labels(kx2), ["e_1", "x"])
		self.assertEqual(kx2.nilpotency, 2)

	def test_a2_basis(self):
		a2 = load_algebra("a2")
		self.assertEqual(labels(a2), ["a", "e_1", "e_2"])
		self.assertEqual(a2.nilpotency, 2)

	def test_free_loop_is_infinite(self):
		loop = Quiver.from_edges(["1"], [("x", "1", "1")])
		with self.assertRaises(InfiniteDimensional):
			build_algebra(F7, loop, [], length_cap=6)

	def test_relation_checks(self):
		a2 = Quiver.from_edges(["1", "2"], [("a", "1", "2")])
		with self.assertRaises(RelationNotParallel):
			build_algebra(F7, a2, [[PathExpr(("a", "a"), 1)]])
		with self.assertRaises(InadmissibleRelation):
			build_algebra(F7, a2, [[PathExpr(("a",), 1)]])
		square = Quiver.from_edges(
			["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "2"), ("d", "2", "2")]
		)
		with self.assertRaises(RelationNotParallel):
			build_algebra(F7, square, [[PathExpr(("a", "b"), 1), PathExpr(("c", "d"), 1)]])

	def test_commutativity_relation(self):
		square = load_algebra("commutative_square")
		self.assertEqual(square.dimension, 9)
		self.assertEqual(square.nilpotency, 3)
		ab = Path("1", ("a", "b"))
		cd = Path("1", ("c", "d"))
		self.assertEqual(square.normal_form(ab), square.normal_form(cd))
		self.assertEqual(len(square.normal_form(ab)), 1)

	def test_monomial_basis_avoids_relations(self):
		a3 = load_algebra("a3_rel")
		self.assertEqual(labels(a3), ["a", "b", "e_1", "e_2", "e_3"])
		for seed in range(3):
			algebra = random_rsz_algebra(seed)
			self.assertTrue(all(path.length <= 1 for path in algebra.basis))
			self.assertEqual(algebra.dimension, len(algebra.quiver.vertices) + len(algebra.quiver.arrows))

	def test_projectives(self):
		cyclic3 = load_algebra("cyclic3_rsz")
		self.assertEqual(projective_rep(cyclic3, "1").dims, (1, 1, 0))
		kx2 = load_algebra("kx2")
		p = projective_rep(kx2, "1")
		self.assertEqual(p.arrow_map("x").to_lists(), [[0, 0], [1, 0]])
		self.assertEqual(projective_rep(load_algebra("a2"), "2").dims, (0, 1))

	def test_hom_examples(self):
		a2 = load_algebra("a2")
		cyclic3 = load_algebra("cyclic3_rsz")
		self.assertEqual(hom_dim(simple_rep(a2, "1"), simple_rep(a2, "1")), 1)
		self.assertEqual(hom_dim(simple_rep(a2, "1"), simple_rep(a2, "2")), 0)
		self.assertEqual(hom_dim(projective_rep(cyclic3, "1"), projective_rep(cyclic3, "1")), 1)

	def test_hom_from_projective_counts_vertex_dimension(self):
		for name in ("cyclic3_rsz", "commutative_square", "kx2", "two_loop_rsz"):
			algebra = load_algebra(name)
			modules = [regular_rep(algebra)] + [simple_rep(algebra, v) for v in algebra.quiver.vertices]
			for m in modules:
				for v in algebra.quiver.vertices:
					self.assertEqual(hom_dim(projective_rep(algebra, v), m), m.dim(v))

	def test_hom_basis_commutes(self):
		algebra = load_algebra("commutative_square")
		regular = regular_rep(algebra)
		basis = hom_space(regular, regular)
		self.assertEqual(len(basis), algebra.dimension)
		for k, f in enumerate(basis):
			f.check()
			coords = hom_coordinates(f)
			self.assertEqual(coords, [1 if i == k else 0 for i in range(len(basis))])

	def test_left_ideals(self):
		gentle = load_algebra("gentle_2cycle")
		ideal = left_ideal_rep(gentle, "a")
		self.assertEqual(ideal.dims, (0, 1))
		self.assertTrue(is_isomorphic(ideal, simple_rep(gentle, "2")))
		self.assertEqual(left_ideal_rep(load_algebra("kx2"), "x").dims, (1,))
		self.assertEqual(left_ideal_rep(load_algebra("a3_rel"), "b").dims, (0, 0, 1))
		with self.assertRaises(NotMonomial):
			left_ideal_rep(load_algebra("commutative_square"), "a")

	def test_isomorphism_verdicts(self):
		kx2 = load_algebra("kx2")
		s = simple_rep(kx2, "1")
		self.assertEqual(is_isomorphic(s, s).kind, "yes")
		self.assertEqual(is_isomorphic(s, projective_rep(kx2, "1")).kind, "no")
		rad, _ = radical(projective_rep(kx2, "1"))
		verdict = is_isomorphic(rad, s)
		self.assertEqual(verdict.kind, "yes")
		self.assertEqual(verdict.inverse @ verdict.witness, RepMorphism.identity(rad))
		self.assertEqual(verdict.witness @ verdict.inverse, RepMorphism.identity(s))

	def test_isomorphism_rejects_twisted_module(self):
		two_loop = load_algebra("two_loop_rsz")
		nil = [[0, 0], [1, 0]]
		m = Representation.build(two_loop, {"1": 2}, {"x": nil})
		n = Representation.build(two_loop, {"1": 2}, {"y": nil})
		verdict = is_isomorphic(m, n)
		self.assertEqual(verdict.kind, "no")
		self.assertEqual(is_isomorphic(n, m).kind, "no")

	def test_isomorphism_with_nontrivial_witness(self):
		cycle = gentle_cycle(F7, 3, [0])
		p = projective_rep(cycle, "2")
		shuffled = direct_sum([simple_rep(cycle, "1"), p]).rep
		other = direct_sum([p, simple_rep(cycle, "1")]).rep
		verdict = is_isomorphic(shuffled, other, seed=5)
		self.assertEqual(verdict.kind, "yes")
		verdict.witness.check()

	def test_radical_series_and_top(self):
		kx2 = load_algebra("kx2")
		self.assertEqual(radical_series_dims(projective_rep(kx2, "1")), ((2,), (1,)))
		cyclic3 = load_algebra("cyclic3_rsz")
		self.assertEqual(top_dims(regular_rep(cyclic3)), {"1": 1, "2": 1, "3": 1})

	def test_direct_sum_maps(self):
		a2 = load_algebra("a2")
		parts = [simple_rep(a2, "1"), projective_rep(a2, "1")]
		total = direct_sum(parts)
		self.assertEqual(total.rep.dims, (2, 1))
		for part, inj, proj in zip(parts, total.injections, total.projections):
			self.assertEqual(proj @ inj, RepMorphism.identity(part))

	def test_kernel_of_cover_projection(self):
		a2 = load_algebra("a2")
		p1 = projective_rep(a2, "1")
		s1 = simple_rep(a2, "1")
		f = RepMorphism(p1, s1, (ExactMatrix.identity(F7, 1), ExactMatrix.zeros(F7, 0, 1))).check()
		kernel, inclusion = kernel_rep(f)
		self.assertEqual(kernel.dims, (0, 1))
		self.assertTrue((f @ inclusion).is_zero())

	def test_cokernel_of_socle_inclusion(self):
		a2 = load_algebra("a2")
		p1, s2 = projective_rep(a2, "1"), simple_rep(a2, "2")
		g = RepMorphism(s2, p1, (ExactMatrix.zeros(F7, 1, 0), ExactMatrix.identity(F7, 1))).check()
		quotient, q, sections = cokernel_rep(g)
		quotient.check()
		self.assertEqual(quotient.dims, (1, 0))
		self.assertTrue(is_isomorphic(quotient, simple_rep(a2, "1")))
		self.assertTrue(q.check().is_surjective())
		self.assertTrue((q @ g).is_zero())
		self.assertEqual([s.shape for s in sections], [(1, 1), (1, 0)])
		kx2 = load_algebra("kx2")
		p = projective_rep(kx2, "1")
		quotient, _, _ = cokernel_rep(RepMorphism.zero(p, p))
		self.assertEqual(quotient, p)


class TestQuiverAlgebraFiles(unittest.TestCase):
	def test_algebra_round_trip(self):
		for name in ("kx2", "a3_rel", "commutative_square", "cyclic3_rsz"):
			data = read_json(resolve(name))
			self.assertEqual(algebra_to_dict(algebra_from_dict(data)), data)

	def test_module_round_trip(self):
		kx2 = load_algebra("kx2")
		data = read_json(resolve("kx2__simple"))
		self.assertEqual(module_to_dict(module_from_dict(kx2, data)), data)

	def test_parse_from_paths(self):
		kx2 = parse_algebra(resolve("kx2"))
		self.assertEqual(labels(kx2), ["e_1", "x"])
		simple = parse_module(kx2, resolve("kx2__simple"))
		self.assertEqual(simple.dim_vector(), {"1": 1})

	def test_module_shape_and_relation_errors(self):
		kx2 = load_algebra("kx2")
		with self.assertRaises(MatrixShapeMismatch):
			module_from_dict(kx2, {"dims": {"1": 1}, "arrows": {"x": [["0", "0"]]}})
		with self.assertRaises(RelationNotSatisfied):
			module_from_dict(kx2, {"dims": {"1": 1}, "arrows": {"x": [["1"]]}})

	def test_schema_errors_carry_pointer(self):
		data = read_json(resolve("kx2"))
		data["quiver"]["arrows"][0].pop("to")
		with self.assertRaises(SchemaError) as caught:
			algebra_from_dict(data)
		self.assertEqual(caught.exception.detail["pointer"], "/quiver/arrows/0")
		with self.assertRaises(SchemaError) as caught:
			module_from_dict(load_algebra("kx2"), {"dims": {"1": 1}, "arrows": {"z": [["0"]]}})
		self.assertEqual(caught.exception.detail["pointer"], "/arrows/z")

	def test_non_composable_relation_in_file(self):
		data = read_json(resolve("a2"))
		data["relations"] = [[{"coeff": "1", "path": ["a", "a"]}]]
		with self.assertRaises(RelationNotParallel):
			algebra_from_dict(data)
