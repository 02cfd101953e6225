from sgcalc.engine.leavitt_rsz.adjacency_model import (
	AdjacencyBackend,
	AdjacencyModel,
	GradedTuple,
	ModelHomSpace,
	ModelMorphism,
	model_hom_report,
)
from sgcalc.engine.leavitt_rsz.leavitt_rsz import (
	CrosscheckReport,
	compare_rows,
	crosscheck_rsz,
	leavitt_summary,
	monomial_equiv_check,
	relation_quiver,
	remove_sinks,
	semisimple_functor,
	semisimple_rep,
	sink_removal_rounds,
	spmod_preimage,
)
