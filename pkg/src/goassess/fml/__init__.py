from .model import (
    DomainError,
    FmlError,
    FmlParseError,
    FmlValidationError,
    FuzzyRule,
    FuzzySystem,
    FuzzyTerm,
    FuzzyVariable,
    MissingInputError,
    RuleBase,
    RuleClause,
    TrapezoidMF,
)
from .inference import COG_SAMPLES, InferenceResult, defuzzify_cog, infer, pick_label, rule_strengths
from .parser import parse_fml, serialize_fml

__all__ = [
    "COG_SAMPLES",
    "DomainError",
    "FmlError",
    "FmlParseError",
    "FmlValidationError",
    "FuzzyRule",
    "FuzzySystem",
    "FuzzyTerm",
    "FuzzyVariable",
    "InferenceResult",
    "MissingInputError",
    "RuleBase",
    "RuleClause",
    "TrapezoidMF",
    "defuzzify_cog",
    "infer",
    "parse_fml",
    "pick_label",
    "rule_strengths",
    "serialize_fml",
]
