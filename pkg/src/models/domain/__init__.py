"""Domain models for the semantic communication toolkit."""

from .channel import SemanticChannel
from .enums import Envelope, PriorChoice, Refinement, TieBreakKind
from .gridworld import GridWorldParams
from .language import SemanticLanguage
from .measures import CostFunction, DistortionMeasure
from .oracle import (
    DecodingPoint,
    EncodingPoint,
    EnumerationBudget,
    SimulationConfig,
    SimulationResult,
)
from .points import DistortionCostPoint, MixtureTerm
from .rational import (
    DomainModel,
    IndexVector,
    Matrix,
    Rational,
    Vector,
    format_rational,
    parse_rational,
)
from .region import (
    CsedMixture,
    CsedRegion,
    DecodingRegion,
    FrontierStep,
    FrontierVertex,
    PsiTable,
    RegionFrontier,
    SimplexPoint,
    SixSubsets,
)
from .reports import (
    CriticalPoints,
    HammingOptimalityReport,
    MessageArgmax,
    SelfConsistencyReport,
    StrategyComparison,
    Theorem4Report,
    ValidationIssue,
    ValidationReport,
)
from .schemes import DecodingScheme, EncodingScheme
from .system import SemanticSystem
from .tie_break import TieBreakPolicy

__all__ = [
    "DomainModel",
    "Rational",
    "Vector",
    "Matrix",
    "IndexVector",
    "parse_rational",
    "format_rational",
    "PriorChoice",
    "Envelope",
    "TieBreakKind",
    "Refinement",
    "SemanticLanguage",
    "SemanticChannel",
    "CostFunction",
    "DistortionMeasure",
    "SemanticSystem",
    "EncodingScheme",
    "DecodingScheme",
    "DistortionCostPoint",
    "MixtureTerm",
    "TieBreakPolicy",
    "SixSubsets",
    "FrontierStep",
    "FrontierVertex",
    "RegionFrontier",
    "PsiTable",
    "SimplexPoint",
    "DecodingRegion",
    "CsedMixture",
    "CsedRegion",
    "ValidationIssue",
    "ValidationReport",
    "SelfConsistencyReport",
    "MessageArgmax",
    "HammingOptimalityReport",
    "Theorem4Report",
    "StrategyComparison",
    "CriticalPoints",
    "EnumerationBudget",
    "EncodingPoint",
    "DecodingPoint",
    "SimulationConfig",
    "SimulationResult",
    "GridWorldParams",
]
