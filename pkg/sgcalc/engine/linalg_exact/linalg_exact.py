# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from sgcalc.exceptions import (
	BadIndex,
	BadScalar,
	FieldMismatch,
	InconsistentSystem,
	MatrixShapeMismatch,
	NonSquare,
	SingularMatrix,
)

log = logging.getLogger(__name__)

PRIME_LIMIT = 2**31


@dataclass(frozen=True)
class Field:
	"""Either F_p (kind "prime") or Q (kind "rational")."""

	kind: str
	p: int | None = None

	def __post_init__(self):
		if self.kind == "prime":
			if not isinstance(self.p, int) or not 2 <= self.p < PRIME_LIMIT or not isprime(self.p):
				raise ValueError(f"expected a prime below 2^31, got {self.p!r}")
		elif self.kind == "rational":
			if self.p is not None:
				raise ValueError("the rational field takes no modulus")
		else:
			raise ValueError(f"unknown field kind {self.kind!r}")

	@classmethod
	def prime(cls, p):
		return cls("prime", p)

	@classmethod
	def rational(cls):
		return cls("rational")

	@property
	def is_prime(self):
		return self.kind == "prime"

	@cached_property
	def domain(self):
		return GF(self.p) if self.is_prime else QQ

	def normalize(self, value):
		"""Canonical Python value: a residue in [0, p) or a reduced Fraction."""
		if isinstance(value, ExactScalar):
			if value.field != self:
				raise FieldMismatch("scalar belongs to another field", expected=self.describe(), got=value.field.describe())
			return value.value
		if isinstance(value, str):
			try:
				value = Fraction(value.strip())
			except (ValueError, ZeroDivisionError) as exc:
				raise BadScalar(f"not a rational number: {value!r}", value=value) from exc
		if self.is_prime:
			value = Fraction(value)
			den = value.denominator % self.p
			if den == 0:
				raise BadScalar(f"denominator of {value} vanishes modulo {self.p}", value=str(value))
			return value.numerator * pow(den, -1, self.p) % self.p
		return Fraction(value)

	def element(self, value):
		"""Domain element of ``self.domain`` for a Python value."""
		value = self.normalize(value)
		if self.is_prime:
			return self.domain(value)
		return self.domain(value.numerator, value.denominator)

	def to_python(self, elem):
		if self.is_prime:
			return int(self.domain.to_int(elem)) % self.p
		rational = self.domain.to_sympy(elem)
		return Fraction(int(rational.p), int(rational.q))

	def format(self, value):
		return str(self.normalize(value))

	def scalar(self, value):
		return ExactScalar(self, value)

	def sample(self, rng):
		if self.is_prime:
			return rng.randrange(self.p)
		return rng.randint(-2, 2)

	def describe(self):
		if self.is_prime:
			return {"kind": "prime", "p": self.p}
		return {"kind": "rational"}

	def __str__(self):
		return f"F_{self.p}" if self.is_prime else "Q"


@dataclass(frozen=True)
class ExactScalar:
	field: Field
	value: int | Fraction

	def __post_init__(self):
		object.__setattr__(self, "value", self.field.normalize(self.value))

	def _coerce(self, other):
		return self.field.normalize(other)

	def __add__(self, other):
		return ExactScalar(self.field, self.value + self._coerce(other))

	__radd__ = __add__

	def __sub__(self, other):
		return ExactScalar(self.field, self.value - self._coerce(other))

	def __rsub__(self, other):
		return ExactScalar(self.field, self._coerce(other) - self.value)

	def __mul__(self, other):
		return ExactScalar(self.field, self.value * self._coerce(other))

	__rmul__ = __mul__

	def __neg__(self):
		return ExactScalar(self.field, -self.value)

	def __truediv__(self, other):
		other = self._coerce(other)
		if not other:
			raise ZeroDivisionError("division by zero scalar")
		if self.field.is_prime:
			return ExactScalar(self.field, self.value * pow(other, -1, self.field.p))
		return ExactScalar(self.field, self.value / other)

	def __bool__(self):
		return bool(self.value)

	def __str__(self):
		return str(self.value)


class ExactMatrix:
	"""Immutable matrix over a :class:`Field`, stored as a sparse sympy DomainMatrix.

	Equality and hashing use the canonical Python values of the nonzero
	entries, so matrices can key caches.
	"""

	__slots__ = ("field", "rep", "_key")

	def __init__(self, field, rep):
		if rep.domain != field.domain:
			raise FieldMismatch("matrix domain does not match its field", field=field.describe())
		self.field = field
		self.rep = rep.to_sparse()
		self._key = None

	@classmethod
	def from_entries(cls, field, entries, shape):
		rows, cols = shape
		dod = {}
		for (i, j), value in entries.items():
			if not (0 <= i < rows and 0 <= j < cols):
				raise BadIndex(f"entry ({i}, {j}) outside a {rows}x{cols} matrix")
			value = field.normalize(value)
			if value:
				dod.setdefault(i, {})[j] = field.element(value)
		return cls(field, DomainMatrix(dod, (rows, cols), field.domain))

	@classmethod
	def zeros(cls, field, rows, cols):
		return cls(field, DomainMatrix({}, (rows, cols), field.domain))

	@classmethod
	def identity(cls, field, n):
		return cls.from_entries(field, {(i, i): 1 for i in range(n)}, (n, n))

	@classmethod
	def from_rows(cls, field, rows, ncols=None):
		rows = [list(row) for row in rows]
		if ncols is None:
			ncols = len(rows[0]) if rows else 0
		for index, row in enumerate(rows):
			if len(row) != ncols:
				raise MatrixShapeMismatch(f"row {index} has {len(row)} entries, expected {ncols}")
		entries = {(i, j): value for i, row in enumerate(rows) for j, value in enumerate(row)}
		return cls.from_entries(field, entries, (len(rows), ncols))

	@classmethod
	def from_columns(cls, field, nrows, columns):
		entries = {}
		for j, column in enumerate(columns):
			column = list(column)
			if len(column) != nrows:
				raise MatrixShapeMismatch(f"column {j} has {len(column)} entries, expected {nrows}")
			entries.update({(i, j): value for i, value in enumerate(column)})
		return cls.from_entries(field, entries, (nrows, len(columns)))

	@classmethod
	def random(cls, field, rows, cols, rng):
		entries = {(i, j): field.sample(rng) for i in range(rows) for j in range(cols)}
		return cls.from_entries(field, entries, (rows, cols))

	@property
	def shape(self):
		return tuple(self.rep.shape)

	@property
	def rows(self):
		return self.rep.shape[0]

	@property
	def cols(self):
		return self.rep.shape[1]

	def items(self):
		"""Nonzero entries as ((i, j), python value), row-major."""
		to_python = self.field.to_python
		for i, row in sorted(self.rep.rep.items()):
			for j, elem in sorted(row.items()):
				value = to_python(elem)
				if value:
					yield (i, j), value

	def entry(self, i, j):
		if not (0 <= i < self.rows and 0 <= j < self.cols):
			raise BadIndex(f"entry ({i}, {j}) outside a {self.rows}x{self.cols} matrix")
		elem = self.rep.rep.get(i, {}).get(j)
		return self.field.normalize(0) if elem is None else self.field.to_python(elem)

	def to_lists(self):
		zero = self.field.normalize(0)
		out = [[zero] * self.cols for _ in range(self.rows)]
		for (i, j), value in self.items():
			out[i][j] = value
		return out

	def to_strings(self):
		return [[str(value) for value in row] for row in self.to_lists()]

	def column(self, j):
		return [self.entry(i, j) for i in range(self.rows)]

	def columns(self):
		cols = [[self.field.normalize(0)] * self.rows for _ in range(self.cols)]
		for (i, j), value in self.items():
			cols[j][i] = value
		return cols

	def is_zero(self):
		return next(self.items(), None) is None

	@property
	def key(self):
		if self._key is None:
			self._key = (self.field, self.shape, tuple(self.items()))
		return self._key

	def __eq__(self, other):
		if not isinstance(other, ExactMatrix):
			return NotImplemented
		return self.key == other.key

	def __hash__(self):
		return hash(self.key)

	def __repr__(self):
		return f"ExactMatrix({self.field}, {self.to_strings()})"

	def _same_field(self, other):
		if other.field != self.field:
			raise FieldMismatch("operands live over different fields", left=self.field.describe(), right=other.field.describe())

	def __add__(self, other):
		self._same_field(other)
		if self.shape != other.shape:
			raise MatrixShapeMismatch(f"cannot add {self.shape} and {other.shape}")
		return ExactMatrix(self.field, self.rep + other.rep)

	def __sub__(self, other):
		self._same_field(other)
		if self.shape != other.shape:
			raise MatrixShapeMismatch(f"cannot subtract {other.shape} from {self.shape}")
		return ExactMatrix(self.field, self.rep - other.rep)

	def __neg__(self):
		return self.scale(-1)

	def __matmul__(self, other):
		self._same_field(other)
		if self.cols != other.rows:
			raise MatrixShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
		if self.rows == 0 or other.cols == 0 or self.cols == 0:
			return ExactMatrix.zeros(self.field, self.rows, other.cols)
		return ExactMatrix(self.field, self.rep.matmul(other.rep))

	def scale(self, value):
		value = self.field.normalize(value)
		if not value:
			return ExactMatrix.zeros(self.field, self.rows, self.cols)
		elem = self.field.element(value)
		dod = {i: {j: entry * elem for j, entry in row.items()} for i, row in self.rep.rep.items()}
		return ExactMatrix(self.field, DomainMatrix(dod, self.shape, self.field.domain))

	def transpose(self):
		return ExactMatrix(self.field, self.rep.transpose())

	def power(self, k):
		if self.rows != self.cols:
			raise NonSquare(f"power of a {self.rows}x{self.cols} matrix")
		if k == 0 or self.rows == 0:
			return ExactMatrix.identity(self.field, self.rows)
		return ExactMatrix(self.field, self.rep**k)

	def select_rows(self, indices):
		indices = list(indices)
		entries = {}
		for new, old in enumerate(indices):
			for j, elem in self.rep.rep.get(old, {}).items():
				entries[(new, j)] = self.field.to_python(elem)
		return ExactMatrix.from_entries(self.field, entries, (len(indices), self.cols))

	def select_columns(self, indices):
		return self.transpose().select_rows(indices).transpose()

	def inverse(self):
		if self.rows != self.cols:
			raise NonSquare(f"inverse of a {self.rows}x{self.cols} matrix")
		if rank(self) != self.rows:
			raise SingularMatrix("matrix is not invertible")
		return solve(self, ExactMatrix.identity(self.field, self.rows))


def rank(m):
	if m.rows == 0 or m.cols == 0:
		return 0
	return int(m.rep.rank())


def rref(m):
	"""Reduced row echelon form and the tuple of pivot columns."""
	if m.rows == 0 or m.cols == 0:
		return m, ()
	reduced, pivots = m.rep.rref()
	return ExactMatrix(m.field, reduced), tuple(int(p) for p in pivots)


def kernel_basis(m):
	"""Columns spanning the null space; one column per non-pivot column of ``m``."""
	reduced, pivots = rref(m)
	pivot_set = set(pivots)
	free = [j for j in range(m.cols) if j not in pivot_set]
	rows = reduced.rep.rep
	entries = {}
	for k, f in enumerate(free):
		entries[(f, k)] = 1
		for i, pivot in enumerate(pivots):
			elem = rows.get(i, {}).get(f)
			if elem is not None:
				entries[(pivot, k)] = -m.field.to_python(elem)
	return ExactMatrix.from_entries(m.field, entries, (m.cols, len(free)))


def solve(a, b):
	"""One solution X of ``a @ X == b``; the free variables are set to zero."""
	a._same_field(b)
	if a.rows != b.rows:
		raise MatrixShapeMismatch(f"cannot solve {a.shape} against {b.shape}")
	n = a.cols
	reduced, pivots = rref(hstack(a, b))
	if pivots and pivots[-1] >= n:
		raise InconsistentSystem("linear system has no solution", shape=list(a.shape))
	rows = reduced.rep.rep
	entries = {}
	for i, pivot in enumerate(pivots):
		for j, elem in rows.get(i, {}).items():
			if j >= n:
				entries[(pivot, j - n)] = a.field.to_python(elem)
	return ExactMatrix.from_entries(a.field, entries, (n, b.cols))


def in_span(a, b):
	"""True when every column of ``b`` lies in the column span of ``a``."""
	if b.cols == 0:
		return True
	return rank(hstack(a, b)) == rank(a)


def hstack(*blocks):
	if not blocks:
		raise MatrixShapeMismatch("nothing to stack")
	field = blocks[0].field
	rows = blocks[0].rows
	entries = {}
	offset = 0
	for block in blocks:
		blocks[0]._same_field(block)
		if block.rows != rows:
			raise MatrixShapeMismatch(f"cannot stack {block.rows} rows next to {rows}")
		for (i, j), value in block.items():
			entries[(i, j + offset)] = value
		offset += block.cols
	return ExactMatrix.from_entries(field, entries, (rows, offset))


def vstack(*blocks):
	return hstack(*(block.transpose() for block in blocks)).transpose()


def block_diag(field, blocks):
	rows = sum(block.rows for block in blocks)
	cols = sum(block.cols for block in blocks)
	entries = {}
	r = c = 0
	for block in blocks:
		for (i, j), value in block.items():
			entries[(r + i, c + j)] = value
		r += block.rows
		c += block.cols
	return ExactMatrix.from_entries(field, entries, (rows, cols))


@dataclass(frozen=True)
class DirectSystem:
	"""Spaces d_0, d_1, ... with structure maps d_i -> d_{i+1}."""

	spaces: tuple
	maps: tuple

	def __post_init__(self):
		object.__setattr__(self, "spaces", tuple(self.spaces))
		object.__setattr__(self, "maps", tuple(self.maps))
		if len(self.maps) != max(len(self.spaces) - 1, 0):
			raise MatrixShapeMismatch(f"{len(self.spaces)} spaces need {len(self.spaces) - 1} maps, got {len(self.maps)}")
		for i, t in enumerate(self.maps):
			if t.shape != (self.spaces[i + 1], self.spaces[i]):
				raise MatrixShapeMismatch(
					f"map {i} has shape {t.shape}, expected {(self.spaces[i + 1], self.spaces[i])}"
				)

	@classmethod
	def constant(cls, t, length):
		if t.rows != t.cols:
			raise NonSquare(f"constant system needs a square map, got {t.shape}")
		return cls((t.rows,) * length, (t,) * max(length - 1, 0))

	def composite(self, p, q):
		if not 0 <= p <= q < len(self.spaces):
			raise BadIndex(f"composite {p}->{q} outside a system of length {len(self.spaces)}")
		field = self.maps[0].field if self.maps else None
		acc = None
		for t in self.maps[p:q]:
			acc = t if acc is None else t @ acc
		if acc is None:
			if field is None:
				raise BadIndex("empty system carries no field")
			return ExactMatrix.identity(field, self.spaces[p])
		return acc


def composite_rank(system, p, q):
	if not 0 <= p <= q < len(system.spaces):
		raise BadIndex(f"composite {p}->{q} outside a system of length {len(system.spaces)}")
	if p == q:
		return system.spaces[p]
	return rank(system.composite(p, q))


def rank_table(system):
	"""``table[p][q - p]`` is the rank of the composite H_p -> H_q."""
	table = []
	for p in range(len(system.spaces)):
		row = [system.spaces[p]]
		acc = None
		for t in system.maps[p:]:
			acc = t if acc is None else t @ acc
			row.append(rank(acc))
		table.append(row)
	return table


def eventual_rank(t):
	if t.rows != t.cols:
		raise NonSquare(f"eventual rank of a {t.rows}x{t.cols} matrix")
	if t.rows == 0:
		return 0
	return rank(t.power(t.rows))
