app_name = "sgcalc"
app_title = "Sgcalc"
app_publisher = "sgcalc contributors"
app_description = "Singularity-category invariants of bound quiver algebras"
app_license = "mit"

# Fixtures
# ------------------

# Bundled corpus, shipped as sgcalc/fixtures/<name>.json
fixtures = [
	"kx2",
	"a2",
	"a3_rel",
	"cyclic2_rsz",
	"cyclic3_rsz",
	"two_loop_rsz",
	"gentle_2cycle",
	"commutative_square",
]

# Module files shipped next to the algebras, as <algebra>__<module>.json
module_fixtures = [
	"kx2__simple",
	"a2__s1",
	"a2__s2",
	"cyclic3_rsz__s1",
	"cyclic3_rsz__s2",
	"cyclic3_rsz__s3",
	"two_loop_rsz__simple",
]

# Adjacency models used by verify-rsz --model
model_fixtures = [
	"cyclic3_rsz__corrupted_model",
]

# Defaults
# ------------------

# Every entry can be overridden with SGCALC_<NAME> in the environment
# or with the matching command-line flag.
defaults = {
	"p_max": 12,
	"window": 3,
	"k_max": 8,
	"seed": 0,
	"length_cap": 32,
	"path_space_cap": 4096,
	"iso_exhaustive_cap": 4096,
	"iso_sample_size": 256,
	"max_module_dim": 96,
	"max_hom_unknowns": 2048,
	"ext_bound": 6,
	"proj_dim_bound": 10,
	"depth": 3,
}
