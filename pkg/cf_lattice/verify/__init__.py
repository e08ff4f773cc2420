"""
Verify Package
Exports para oráculos de fuerza bruta, muestreadores y suites
"""

from .oracles import (
    IntMatrix,
    gl_order,
    enumerate_gl,
    enumerate_sl,
    ambient_generators,
    generated_subgroup,
    brute_force_closure,
    is_normal_subgroup,
    conjugacy_classes,
)
from .samplers import ElementSampler, CONJUGATOR_CLASSES, realizable_nodes
from .suites import SUITES, Suite, SuiteParams, get_suite, run_suite, run_trial

__all__ = [
    # Oracles
    "IntMatrix",
    "gl_order",
    "enumerate_gl",
    "enumerate_sl",
    "ambient_generators",
    "generated_subgroup",
    "brute_force_closure",
    "is_normal_subgroup",
    "conjugacy_classes",
    # Samplers
    "ElementSampler",
    "CONJUGATOR_CLASSES",
    "realizable_nodes",
    # Suites
    "SUITES",
    "Suite",
    "SuiteParams",
    "get_suite",
    "run_suite",
    "run_trial",
]
