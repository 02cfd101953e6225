import dataclasses
import logging
import os
from dataclasses import dataclass

from sgcalc import hooks
from sgcalc.exceptions import UsageError

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

NON_NEGATIVE = ("p_max", "window", "k_max", "proj_dim_bound", "depth")
POSITIVE = (
	"ext_bound",
	"length_cap",
	"path_space_cap",
	"iso_exhaustive_cap",
	"iso_sample_size",
	"max_module_dim",
	"max_hom_unknowns",
)


@dataclass(frozen=True)
class Settings:
	"""Tolerances and caps shared by every computation.

	Values come from ``hooks.defaults``, then ``SGCALC_<NAME>`` environment
	variables, then explicit overrides (command-line flags).
	"""

	p_max: int
	window: int
	k_max: int
	seed: int
	length_cap: int
	path_space_cap: int
	iso_exhaustive_cap: int
	iso_sample_size: int
	max_module_dim: int
	max_hom_unknowns: int
	ext_bound: int
	proj_dim_bound: int
	depth: int

	def __post_init__(self):
		for name in NON_NEGATIVE:
			if getattr(self, name) < 0:
				raise UsageError(f"{name} must be non-negative", option=name)
		for name in POSITIVE:
			if getattr(self, name) < 1:
				raise UsageError(f"{name} must be positive", option=name)

	@classmethod
	def from_env(cls, environ=None):
		environ = os.environ if environ is None else environ
		values = dict(hooks.defaults)
		for name in values:
			raw = environ.get(f"SGCALC_{name.upper()}")
			if raw is not None:
				try:
					values[name] = int(raw)
				except ValueError as exc:
					raise UsageError(f"SGCALC_{name.upper()} is not an integer", option=name) from exc
		return cls(**values)

	def replace(self, **overrides):
		overrides = {key: value for key, value in overrides.items() if value is not None}
		return dataclasses.replace(self, **overrides)

	def as_dict(self):
		return dataclasses.asdict(self)


_settings = None


def get_settings():
	global _settings
	if _settings is None:
		_settings = Settings.from_env()
	return _settings


def configure_logging(level=None):
	level = level or os.environ.get("SGCALC_LOG_LEVEL", "WARNING")
	logger = logging.getLogger("sgcalc")
	logger.setLevel(level.upper() if isinstance(level, str) else level)
	if not any(getattr(handler, "_sgcalc", False) for handler in logger.handlers):
		handler = logging.StreamHandler()
		handler.setFormatter(logging.Formatter(LOG_FORMAT))
		handler._sgcalc = True
		logger.addHandler(handler)
	return logger
