"""Involutive Jamesian functions, Salzmann's loop and the transfer construction."""

from .functions import (
    JamesianFunction,
    adams,
    adams_function,
    check_axioms,
    distinctness_witness,
    eval_extended,
    from_loop_transfer,
    from_representable,
    induced_loop,
    transitivity_defect,
)
from .homeo import logit, piecewise_identity, scaled_logit
from .loops import RealLoop, find_associativity_witness, power
from .regions import ExplicitRegionSpec, classify, cross_validate, explicit_eval
from .salzmann import salzmann_loop, salzmann_mul, salzmann_mul_exact

__all__ = [
    "ExplicitRegionSpec",
    "JamesianFunction",
    "RealLoop",
    "adams",
    "adams_function",
    "check_axioms",
    "classify",
    "cross_validate",
    "distinctness_witness",
    "eval_extended",
    "explicit_eval",
    "find_associativity_witness",
    "from_loop_transfer",
    "from_representable",
    "induced_loop",
    "logit",
    "piecewise_identity",
    "power",
    "salzmann_loop",
    "salzmann_mul",
    "salzmann_mul_exact",
    "scaled_logit",
    "transitivity_defect",
]
