"""Exact three-gap structure of Kronecker sequences.

Three independent routes to the same object:

* ``gaps``      -- closed formulas from continued-fraction data,
* ``iet``       -- two-interval exchange induction (elementary and accelerated),
* ``oracle``    -- brute-force point placement and arc measurement,

all over exact rational arithmetic, plus a CLI tying them together.
"""

from .errors import (
    CollisionError,
    DepthError,
    DomainError,
    InsufficientDepth,
    KeaneViolation,
    RepresentationError,
    ThreeGapError,
    TilingError,
)
from .gaps import GapStructure, KSequence, Side, gap_evolution, k_sequence, predict
from .iet import (
    IntervalExchange,
    PartitionReport,
    RauzyStep,
    ZorichRun,
    apply,
    iet_type,
    make_rotation,
    rauzy_step,
    reconstruct_cf,
    verify_partition,
    zorich_quotients,
    zorich_step,
)
from .numtheory import (
    CFKind,
    ContinuedFraction,
    ConvergentTable,
    OstrowskiRep,
    Rational,
    cf_from_rational,
    convergents,
    format_cf,
    format_rational,
    ostrowski,
    parse_cf_text,
    parse_rational,
)
from .oracle import (
    GapMultiset,
    VerificationReport,
    circular_gaps,
    kronecker_points,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "CFKind",
    "CollisionError",
    "ContinuedFraction",
    "ConvergentTable",
    "DepthError",
    "DomainError",
    "GapMultiset",
    "GapStructure",
    "InsufficientDepth",
    "IntervalExchange",
    "KSequence",
    "KeaneViolation",
    "OstrowskiRep",
    "PartitionReport",
    "Rational",
    "RauzyStep",
    "RepresentationError",
    "Side",
    "ThreeGapError",
    "TilingError",
    "VerificationReport",
    "ZorichRun",
    "apply",
    "cf_from_rational",
    "circular_gaps",
    "convergents",
    "format_cf",
    "format_rational",
    "gap_evolution",
    "iet_type",
    "k_sequence",
    "kronecker_points",
    "make_rotation",
    "ostrowski",
    "parse_cf_text",
    "parse_rational",
    "predict",
    "rauzy_step",
    "reconstruct_cf",
    "verify",
    "verify_partition",
    "zorich_quotients",
    "zorich_step",
]
