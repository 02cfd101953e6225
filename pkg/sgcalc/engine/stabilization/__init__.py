from sgcalc.engine.stabilization.functors import (
	Criterion,
	LoopedFunctor,
	PreTriangleReport,
	StabilizationBackend,
	TriangleFunctor,
	delta_power,
	pre_triangle_equiv_check,
	stabilization_functor,
	universal_apply,
)
from sgcalc.engine.stabilization.stabilization import (
	ColimitReport,
	EqualityVerdict,
	LoopedBackend,
	StabMorphism,
	StabObject,
	Stabilization,
	Verdict,
	analyze_direct_system,
	map_is_iso,
	settled_rank,
)
