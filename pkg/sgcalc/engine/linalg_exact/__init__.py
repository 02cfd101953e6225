from sgcalc.engine.linalg_exact.linalg_exact import (
	DirectSystem,
	ExactMatrix,
	ExactScalar,
	Field,
	block_diag,
	composite_rank,
	eventual_rank,
	hstack,
	in_span,
	kernel_basis,
	rank,
	rank_table,
	rref,
	solve,
	vstack,
)

__all__ = [
	"DirectSystem",
	"ExactMatrix",
	"ExactScalar",
	"Field",
	"block_diag",
	"composite_rank",
	"eventual_rank",
	"hstack",
	"in_span",
	"kernel_basis",
	"rank",
	"rank_table",
	"rref",
	"solve",
	"vstack",
]
