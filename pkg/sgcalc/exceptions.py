# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt


class SgcalcError(Exception):
	"""Base error with a machine-readable code and structured detail."""

	code = "SGCALC_ERROR"

	def __init__(self, message="", **detail):
		super().__init__(message or self.code)
		self.message = message or self.code
		self.detail = detail

	def to_dict(self):
		return {"code": self.code, "message": self.message, "detail": self.detail}


# linalg
class FieldMismatch(SgcalcError):
	code = "FIELD_MISMATCH"


class BadIndex(SgcalcError):
	code = "BAD_INDEX"


class NonSquare(SgcalcError):
	code = "NON_SQUARE"


class SingularMatrix(SgcalcError):
	code = "SINGULAR_MATRIX"


class InconsistentSystem(SgcalcError):
	code = "INCONSISTENT_SYSTEM"


# quivers and algebras
class QuiverError(SgcalcError):
	code = "QUIVER_ERROR"


class InadmissibleRelation(SgcalcError):
	code = "INADMISSIBLE_RELATION"


class RelationNotParallel(InadmissibleRelation):
	code = "RELATION_NOT_PARALLEL"


class InfiniteDimensional(SgcalcError):
	code = "INFINITE_DIMENSIONAL"


class AlgebraMismatch(SgcalcError):
	code = "ALGEBRA_MISMATCH"


class MatrixShapeMismatch(SgcalcError):
	code = "MATRIX_SHAPE_MISMATCH"


class RelationNotSatisfied(SgcalcError):
	code = "RELATION_NOT_SATISFIED"


class NotAHomomorphism(SgcalcError):
	code = "NOT_A_HOMOMORPHISM"


class NotMonomial(SgcalcError):
	code = "NOT_MONOMIAL"


class NotQuadraticMonomial(NotMonomial):
	code = "NOT_QUADRATIC_MONOMIAL"


class NotRadicalSquareZero(SgcalcError):
	code = "NOT_RADICAL_SQUARE_ZERO"


# homological engine
class NotExact(SgcalcError):
	code = "NOT_EXACT"


class LiftFailure(SgcalcError):
	code = "LIFT_FAILURE"


# stabilization
class SourceTargetMismatch(SgcalcError):
	code = "SOURCE_TARGET_MISMATCH"


class BackendNotLinear(SgcalcError):
	code = "BACKEND_NOT_LINEAR"


class NotStrictlyStable(SgcalcError):
	code = "NOT_STRICTLY_STABLE"


# singularity / leavitt
class NotSelfInjective(SgcalcError):
	code = "NOT_SELF_INJECTIVE"


class ShiftOutOfRange(SgcalcError):
	code = "SHIFT_OUT_OF_RANGE"


# files and commands
class SchemaError(SgcalcError):
	code = "SCHEMA_ERROR"


class BadScalar(SchemaError):
	code = "BAD_SCALAR"


class UnknownCommand(SgcalcError):
	code = "UNKNOWN_COMMAND"


class MissingOption(SgcalcError):
	code = "MISSING_OPTION"


class UsageError(SgcalcError):
	code = "USAGE_ERROR"


class InputNotFound(SgcalcError):
	code = "INPUT_NOT_FOUND"
