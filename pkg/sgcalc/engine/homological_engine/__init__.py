from sgcalc.engine.homological_engine.backend import ModuleBackend, Periodicity
from sgcalc.engine.homological_engine.homological_engine import (
	CanonicalTriangle,
	CoverData,
	ProjDim,
	SemisimpleHomSpace,
	StableHomSpace,
	StableMorphismClass,
	canonical_triangle,
	check_exact,
	exactness_at,
	ext_dim,
	factor_matrix,
	induced_map,
	is_injective,
	is_projective,
	is_semisimple,
	is_stably_zero,
	lift_to_covers,
	proj_dim,
	projective_cover,
	semisimple_hom_space,
	semisimple_syzygy_map,
	stable_hom,
	stable_hom_space,
	stable_vertices,
	syzygy,
	syzygy_of_morphism,
)
