"""Certificate-producing matroid algorithms over independence oracles.

The library builds matroids from concrete families (graphic, uniform,
partition, binary, explicit, sums, duals, minors), maximizes unions via
exchange chains, certifies intersections with covering partitions, and
solves vertex-disjoint path instances through a graph-to-matroid
reduction.  Brute-force reference oracles live in matroidkit.oracles and
are never called by the algorithms they check.
"""

from .axioms import AxiomReport, ExplicitSystem, check_axioms, materialize
from .core import CheckResult, GroundSet, Matroid, check_orthogonality, default_labels
from .errors import (
    CapacityError,
    ConsistencyError,
    InputError,
    InternalInvariantError,
    MatroidError,
    NoFundamentalCircuit,
)
from .graphs import Multigraph, graphic_components, identify_vertices
from .intersection import (
    IntersectionCertificate,
    IntersectionState,
    certify,
    min_rank_value,
    verify_certificate,
    violation_chain,
)
from .menger import MengerCertificate, MengerInstance, solve
from .union import ExchangeChain, PairState, apply_chain, find_chain, maximize_union
from .zoo import (
    Binary,
    Dual,
    Explicit,
    FamilySpec,
    Graphic,
    Minor,
    Partition,
    Sum,
    Uniform,
    build,
)

__all__ = [
    "AxiomReport",
    "Binary",
    "CapacityError",
    "CheckResult",
    "ConsistencyError",
    "Dual",
    "ExchangeChain",
    "Explicit",
    "ExplicitSystem",
    "FamilySpec",
    "Graphic",
    "GroundSet",
    "InputError",
    "InternalInvariantError",
    "IntersectionCertificate",
    "IntersectionState",
    "Matroid",
    "MatroidError",
    "MengerCertificate",
    "MengerInstance",
    "Minor",
    "Multigraph",
    "NoFundamentalCircuit",
    "PairState",
    "Partition",
    "Sum",
    "Uniform",
    "apply_chain",
    "build",
    "certify",
    "check_axioms",
    "check_orthogonality",
    "default_labels",
    "find_chain",
    "graphic_components",
    "identify_vertices",
    "materialize",
    "maximize_union",
    "min_rank_value",
    "solve",
    "verify_certificate",
    "violation_chain",
]
