from sgcalc.engine.singularity.singularity import (
	BuchweitzReport,
	GpVerdict,
	LabelledPair,
	SgQuery,
	SgZeroVerdict,
	buchweitz_check,
	gorenstein_defect_witness,
	gp_test,
	is_selfinjective,
	is_sg_zero,
	sg_hom_dim,
	stable_side_dim,
)
