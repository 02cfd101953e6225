from sgcalc.engine.axioms.axioms import (
	CORPUS,
	SuiteResult,
	calculus_suite,
	hom_exactness_suite,
	is_split,
	module_pool,
	nonsplit_class,
	nonsplit_sequence,
	pushout_sequence,
	random_morphism,
	random_sequence,
	run_axioms,
	well_definedness_suite,
)
