# Copyright (c) 2026, sgcalc contributors
# For license information, please see license.txt

"""Command handlers. Each verb is registered with :func:`command` and returns
``(result, ok)``; ``ok`` is False only when a verification found a mismatch."""

import hashlib
import logging
from dataclasses import dataclass
from typing import Callable

from sgcalc.engine.axioms import run_axioms
from sgcalc.engine.homological_engine import proj_dim, stable_hom_space, syzygy
from sgcalc.engine.leavitt_rsz import (
    AdjacencyModel,
    crosscheck_rsz,
    leavitt_summary,
    monomial_equiv_check,
    relation_quiver,
)
from sgcalc.engine.quiver_algebra import (
    algebra_from_dict,
    hom_dim,
    module_from_dict,
    module_to_dict,
    projective_rep,
    read_json,
    simple_rep,
)
from sgcalc.engine.singularity import (
    LabelledPair,
    SgQuery,
    buchweitz_check,
    gorenstein_defect_witness,
    gp_test,
    sg_hom_dim,
)
from sgcalc.exceptions import InputNotFound, MissingOption, UnknownCommand
from sgcalc.fixtures import resolve

log = logging.getLogger(__name__)

COMMANDS = {}


@dataclass(frozen=True)
class Command:
    verb: str
    handler: Callable
    required: tuple


def command(verb, required=()):
    def register(handler):
        COMMANDS[verb] = Command(verb, handler, tuple(required))
        return handler

    return register


class Inputs:
    """Resolves file or fixture arguments and records the sha256 of every input read."""

    def __init__(self, options, settings):
        self.options = options
        self.settings = settings
        self.digests = {}
        self._algebra = None

    def _read(self, key, value):
        try:
            path = resolve(value)
        except FileNotFoundError as exc:
            raise InputNotFound(str(exc), option=key) from None
        self.digests[key] = hashlib.sha256(path.read_bytes()).hexdigest()
        return read_json(path)

    def algebra(self):
        if self._algebra is None:
            self._algebra = algebra_from_dict(self._read("algebra", self.options["algebra"]), self.settings)
        return self._algebra

    def module(self, key):
        """A module file or fixture, or ``simple:<v>`` / ``projective:<v>``."""
        value = self.options[key]
        kind, _, vertex = value.partition(":")
        if kind in ("simple", "projective") and vertex:
            self.digests[key] = hashlib.sha256(value.encode("utf-8")).hexdigest()
            build = simple_rep if kind == "simple" else projective_rep
            return build(self.algebra(), vertex)
        return module_from_dict(self.algebra(), self._read(key, value))

    def model(self):
        if self.options.get("model") is None:
            return None
        return AdjacencyModel.from_dict(self._read("model", self.options["model"]), self.algebra().field)


def run_command(verb, options, settings):
    """Returns (result, ok, input digests)."""
    try:
        spec = COMMANDS[verb]
    except KeyError:
        raise UnknownCommand(f"unknown command {verb!r}", known=sorted(COMMANDS)) from None
    for name in spec.required:
        if options.get(name) is None:
            raise MissingOption(f"{verb} needs --{name.replace('_', '-')}", option=name)
    inputs = Inputs(options, settings)
    result, ok = spec.handler(inputs, options, settings)
    log.info("%s finished, ok=%s", verb, ok)
    return result, ok, inputs.digests


@command("sgdim", required=("algebra", "source", "target"))
def sgdim(inputs, options, settings):
    query = SgQuery(inputs.module("source"), inputs.module("target"), options.get("shift") or 0, settings.p_max, settings.window)
    return sg_hom_dim(query, settings).to_dict(), True


@command("syzygy", required=("algebra", "source"))
def syzygies(inputs, options, settings):
    m = inputs.module("source")
    power = 1 if options.get("power") is None else options["power"]
    series = [m]
    for _ in range(power):
        series.append(syzygy(series[-1]))
    return {
        "power": power,
        "dims": [s.dim_vector() for s in series],
        "module": module_to_dict(series[-1]),
    }, True


@command("stablehom", required=("algebra", "source", "target"))
def stablehom(inputs, options, settings):
    m, n = inputs.module("source"), inputs.module("target")
    return {"homDim": hom_dim(m, n), "stableDim": stable_hom_space(m, n).dim}, True


@command("projdim", required=("algebra", "source"))
def projdim(inputs, options, settings):
    return proj_dim(inputs.module("source"), settings.proj_dim_bound).to_dict(), True


@command("gptest", required=("algebra", "source"))
def gptest(inputs, options, settings):
    m = inputs.module("source")
    verdict = gp_test(m, settings.ext_bound)
    witness = gorenstein_defect_witness(m, settings.p_max, settings.ext_bound, settings)
    return {"verdict": verdict.to_dict(), "defectWitness": witness}, True


@command("relquiver", required=("algebra",))
def relquiver(inputs, options, settings):
    return relation_quiver(inputs.algebra()).describe(), True


@command("rsz-model", required=("algebra",))
def rsz_model(inputs, options, settings):
    quiver = inputs.algebra().quiver
    model = inputs.model()
    if model is None:
        model = AdjacencyModel.from_quiver(quiver)
    else:
        model.check_quiver(quiver)
    return {
        "model": model.to_dict(),
        "sinks": [v for v, sink in zip(model.vertices, model.sinks) if sink],
        "leavitt": leavitt_summary(quiver),
    }, True


def _shifts(options):
    return list(range(-2, 3)) if options.get("shift") is None else [options["shift"]]


@command("verify-rsz", required=("algebra",))
def verify_rsz(inputs, options, settings):
    report = crosscheck_rsz(inputs.algebra(), shifts=_shifts(options), p_max=settings.p_max, model=inputs.model(), settings=settings)
    return report.to_dict(), report.all_match


@command("verify-monomial", required=("algebra",))
def verify_monomial(inputs, options, settings):
    report = monomial_equiv_check(inputs.algebra(), p_max=settings.p_max, shifts=_shifts(options), settings=settings)
    return report.to_dict(), report.all_match


@command("verify-buchweitz", required=("algebra",))
def verify_buchweitz(inputs, options, settings):
    algebra = inputs.algebra()
    vertices = algebra.quiver.vertices
    pairs = [
        LabelledPair(f"S{i}", simple_rep(algebra, i), f"S{j}", simple_rep(algebra, j), options.get("shift") or 0)
        for i in vertices
        for j in vertices
    ]
    report = buchweitz_check(algebra, pairs, settings.p_max, settings.window, settings)
    return report.to_dict(), report.all_pass


@command("axioms")
def axioms(inputs, options, settings):
    count = 50 if options.get("count") is None else options["count"]
    result = run_axioms(settings.seed, count, settings)
    return result, result["allPass"]
