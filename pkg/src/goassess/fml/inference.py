"""Mamdani inference: MIN activation, MIN/MAX connectives, MAX accumulation, COG."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .model import (
    DomainError,
    FmlValidationError,
    FuzzySystem,
    FuzzyVariable,
    MissingInputError,
)

# Evenly spaced samples (inclusive endpoints) used to discretize the output
# domain for the center-of-gravity computation.
COG_SAMPLES = 1001


@dataclass(frozen=True)
class InferenceResult:
    crisp: float
    label: str
    term_memberships: dict[str, float]
    fired_rules: dict[str, float]


def defuzzify_cog(
    aggregate: Callable[[float], float],
    variable: FuzzyVariable,
    samples: int = COG_SAMPLES,
) -> float:
    """Center of gravity of ``aggregate`` over the variable's domain.

    Uses a uniform grid of ``samples`` points. Zero total mass falls back to
    the variable's default value.
    """
    left, right = variable.domain_left, variable.domain_right
    step = (right - left) / (samples - 1)
    moment = 0.0
    mass = 0.0
    for i in range(samples):
        x = left + i * step
        mu = aggregate(x)
        moment += x * mu
        mass += mu
    if mass == 0.0:
        return variable.default_value
    return moment / mass


def pick_label(variable: FuzzyVariable, crisp: float) -> tuple[str, dict[str, float]]:
    """Output term with maximum membership at ``crisp``, plus all degrees.

    Ties prefer UncertainSituation when present, then the term whose
    trapezoid centroid lies nearest the crisp value, then the
    lexicographically smallest name, so the result is deterministic.
    """
    degrees = {term.name: term.membership(crisp) for term in variable.terms}
    if not degrees:
        return "", degrees
    best = max(degrees.values())
    tied = [name for name, deg in degrees.items() if deg == best]
    if len(tied) == 1:
        return tied[0], degrees
    if "UncertainSituation" in tied:
        return "UncertainSituation", degrees
    tied.sort(key=lambda name: (abs(variable.term(name).mf.centroid() - crisp), name))
    return tied[0], degrees


def rule_strengths(system: FuzzySystem, inputs: Mapping[str, float]) -> dict[str, float]:
    """Firing strength of every rule (weight applied), keyed by rule name."""
    known = {v.name for v in system.knowledge_base}
    for name in inputs:
        if name not in known:
            raise FmlValidationError(f"input for undeclared variable {name!r}")
    strengths: dict[str, float] = {}
    for rule in system.rule_base.rules:
        degrees = []
        for clause in rule.antecedent:
            var = system.variable(clause.variable)
            if clause.variable not in inputs:
                raise MissingInputError(
                    f"rule {rule.name!r} needs a value for {clause.variable!r}"
                )
            x = inputs[clause.variable]
            if x < var.domain_left or x > var.domain_right:
                raise DomainError(
                    f"{clause.variable}={x} outside domain "
                    f"[{var.domain_left}, {var.domain_right}]"
                )
            degrees.append(var.term(clause.term).membership(x))
        combined = min(degrees) if rule.connector == "AND" else max(degrees)
        strengths[rule.name] = combined * rule.weight
    return strengths


def infer(system: FuzzySystem, inputs: Mapping[str, float]) -> InferenceResult:
    """Run Mamdani inference for a single-output system.

    Each rule clips its consequent term at the rule's firing strength;
    clipped shapes accumulate by MAX; the crisp value is the center of
    gravity of the accumulated shape. When nothing fires, the output
    variable's default value is returned.
    """
    outputs = system.output_variables
    if len(outputs) != 1:
        raise FmlValidationError(
            f"inference needs exactly one output variable, found {len(outputs)}"
        )
    out = outputs[0]

    strengths = rule_strengths(system, inputs)
    clips: list[tuple[float, Callable[[float], float]]] = []
    for rule in system.rule_base.rules:
        strength = strengths[rule.name]
        if strength <= 0.0:
            continue
        for clause in rule.consequent:
            if clause.variable == out.name:
                clips.append((strength, out.term(clause.term).membership))

    if not clips:
        crisp = out.default_value
    else:
        def aggregate(x: float) -> float:
            return max(min(strength, mf(x)) for strength, mf in clips)

        crisp = defuzzify_cog(aggregate, out)

    label, degrees = pick_label(out, crisp)
    fired = {name: s for name, s in strengths.items() if s > 0.0}
    return InferenceResult(crisp=crisp, label=label, term_memberships=degrees, fired_rules=fired)
