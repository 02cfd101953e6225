from sgcalc.engine.quiver_algebra.files import (
	algebra_from_dict,
	algebra_to_dict,
	module_from_dict,
	module_to_dict,
	parse_algebra,
	parse_module,
	read_json,
	validate,
)
from sgcalc.engine.quiver_algebra.quiver_algebra import (
	Arrow,
	BoundAlgebra,
	Path,
	PathExpr,
	Quiver,
	build_algebra,
)
from sgcalc.engine.quiver_algebra.representation import (
	DirectSum,
	IsoVerdict,
	Representation,
	RepMorphism,
	cokernel_rep,
	column_basis,
	direct_sum,
	hom_coordinates,
	hom_dim,
	hom_matrix,
	hom_space,
	hom_unknowns,
	is_isomorphic,
	kernel_rep,
	left_ideal_rep,
	morphism_column,
	projective_rep,
	radical,
	radical_series_dims,
	regular_rep,
	simple_rep,
	subrepresentation,
	top_complement,
	top_dims,
	zero_rep,
)
