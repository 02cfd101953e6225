# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""Seeded random algebras for property tests and cross-checks."""

import random

from sgcalc.engine.linalg_exact import Field
from sgcalc.engine.quiver_algebra.quiver_algebra import PathExpr, Quiver, build_algebra


def radical_square_zero(field, quiver):
	"""kQ/J^2: every path of length two is a relation."""
	relations = [[PathExpr(path.arrows, 1)] for path in quiver.paths_by_length(2)[2]]
	return build_algebra(field, quiver, relations)


def random_rsz_quiver(seed, max_vertices=4, max_arrows=6):
	rng = random.Random(seed)
	n = rng.randint(1, max_vertices)
	m = rng.randint(1, max_arrows)
	vertices = [str(i + 1) for i in range(n)]
	edges = [(f"a{k}", rng.choice(vertices), rng.choice(vertices)) for k in range(m)]
	return Quiver.from_edges(vertices, edges)


def random_rsz_algebra(seed, field=None, max_vertices=4, max_arrows=6):
	field = field or Field.prime(7)
	return radical_square_zero(field, random_rsz_quiver(seed, max_vertices, max_arrows))


def gentle_cycle(field, n, relation_positions):
	"""Oriented n-cycle 1 -> 2 -> ... -> n -> 1 with zero relations at the given vertices.

	A relation at position i is the path through vertex i + 1, i.e. the arrow
	into it followed by the arrow out of it.
	"""
	vertices = [str(i + 1) for i in range(n)]
	names = [f"c{i + 1}" for i in range(n)]
	edges = [(names[i], vertices[i], vertices[(i + 1) % n]) for i in range(n)]
	relations = [[PathExpr((names[i], names[(i + 1) % n]), 1)] for i in sorted(set(relation_positions))]
	if not relations:
		raise ValueError("a cycle without relations is infinite dimensional")
	return build_algebra(field, Quiver.from_edges(vertices, edges), relations)


def random_gentle_algebra(seed, field=None, max_cycle=4):
	rng = random.Random(seed)
	field = field or Field.prime(7)
	n = rng.randint(2, max_cycle)
	positions = [i for i in range(n) if rng.random() < 0.5] or [rng.randrange(n)]
	return gentle_cycle(field, n, positions)
