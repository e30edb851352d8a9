"""Knowledge-base construction for the assessment system.

The six input variables (BSN/WSN, BWR/WWR, BTMR/WTMR) and the CGS output
variable carry fixed trapezoid families derived once from game statistics
collected over a reference corpus; each family is a partition of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..fml import FuzzySystem, FuzzyTerm, FuzzyVariable, RuleBase, TrapezoidMF

CGS_LABELS = (
    "WhiteObviousAdvantage",
    "WhitePossibleAdvantage",
    "UncertainSituation",
    "BlackPossibleAdvantage",
    "BlackObviousAdvantage",
)

FML_1 = "FML-1"  # four inputs: BSN, WSN, BWR, WWR
FML_2 = "FML-2"  # six inputs: + BTMR, WTMR

INPUT_NAMES = {
    FML_1: ("BSN", "WSN", "BWR", "WWR"),
    FML_2: ("BSN", "WSN", "BWR", "WWR", "BTMR", "WTMR"),
}


@dataclass(frozen=True)
class VariableStats:
    """Summary statistics of one observed quantity.

    std_low / std_high are the spreads below and above the mean;
    std_all is the overall spread with outliers removed.
    """

    minimum: float
    mean: float
    maximum: float
    std_low: float
    std_high: float
    std_all: float

    def validate(self, name: str) -> None:
        if self.minimum == self.maximum:
            raise ValueError(f"{name}: degenerate statistics (min == max)")
        if not self.minimum <= self.mean <= self.maximum:
            raise ValueError(f"{name}: mean outside [min, max]")


# Reference-corpus statistics the shipped fuzzy sets were derived from.
DEFAULT_STATS: dict[str, VariableStats] = {
    "SN": VariableStats(3420, 9883, 14999, 2762, 1421.56, 1450.62),
    "WR": VariableStats(0.2, 0.49, 0.6, 0.09, 0.07, 0.05),
    "TMR": VariableStats(0.0, 0.382, 0.5, 0.11, 0.09, 0.03),
}

# Frozen trapezoid knots per variable family. Three-term families share
# ramp endpoints, so memberships sum to 1 everywhere in the domain.
SN_DOMAIN = (0.0, 20000.0)
SN_TERMS = (
    ("Low", (0.0, 0.0, 2556.0, 7122.0)),
    ("Medium", (2556.0, 7122.0, 12637.0, 17203.0)),
    ("High", (12637.0, 17203.0, 20000.0, 20000.0)),
)
WR_DOMAIN = (0.0, 1.0)
WR_TERMS = (
    ("Low", (0.0, 0.0, 0.40, 0.44)),
    ("Medium", (0.40, 0.44, 0.54, 0.58)),
    ("High", (0.54, 0.58, 1.0, 1.0)),
)
TMR_DOMAIN = (0.0, 100.0)
TMR_TERMS = (
    ("Low", (0.0, 0.0, 30.0, 45.0)),
    ("High", (30.0, 45.0, 100.0, 100.0)),
)
CGS_DOMAIN = (0.0, 100.0)
CGS_DEFAULT = 50.0
CGS_TERMS = (
    ("WhiteObviousAdvantage", (0.0, 0.0, 15.0, 25.0)),
    ("WhitePossibleAdvantage", (15.0, 25.0, 37.5, 47.5)),
    ("UncertainSituation", (37.5, 47.5, 52.5, 62.5)),
    ("BlackPossibleAdvantage", (52.5, 62.5, 75.0, 85.0)),
    ("BlackObviousAdvantage", (75.0, 85.0, 100.0, 100.0)),
)

_FAMILY_BY_VARIABLE = {
    "BSN": "SN", "WSN": "SN",
    "BWR": "WR", "WWR": "WR",
    "BTMR": "TMR", "WTMR": "TMR",
}
_FAMILY_TABLES = {
    "SN": (SN_DOMAIN, SN_TERMS),
    "WR": (WR_DOMAIN, WR_TERMS),
    "TMR": (TMR_DOMAIN, TMR_TERMS),
}


def _make_variable(name: str, domain, terms, var_type: str, default: float) -> FuzzyVariable:
    return FuzzyVariable(
        name=name,
        domain_left=domain[0],
        domain_right=domain[1],
        var_type=var_type,
        terms=tuple(FuzzyTerm(t, TrapezoidMF(*knots)) for t, knots in terms),
        default_value=default,
        scale="",
        network_address="127.0.0.1",
    )


def build_default_kb(
    stats: Mapping[str, VariableStats] = DEFAULT_STATS,
    variant: str = FML_2,
) -> tuple[FuzzyVariable, ...]:
    """Input variables plus the CGS output variable for the given variant."""
    if variant not in INPUT_NAMES:
        raise ValueError(f"unknown variant {variant!r}")
    for family in ("SN", "WR", "TMR"):
        if family in stats:
            stats[family].validate(family)
    variables = []
    for name in INPUT_NAMES[variant]:
        domain, terms = _FAMILY_TABLES[_FAMILY_BY_VARIABLE[name]]
        variables.append(_make_variable(name, domain, terms, "input", domain[0]))
    variables.append(_make_variable("CGS", CGS_DOMAIN, CGS_TERMS, "output", CGS_DEFAULT))
    return tuple(variables)


def build_system(variant: str = FML_2, rules: RuleBase | None = None) -> FuzzySystem:
    """Assemble a full system; rules default to the generated base."""
    if rules is None:
        from .rulegen import default_scheme, generate_rulebase

        count = len(INPUT_NAMES[variant])
        rules = RuleBase(
            name="ruleBase1",
            rules=generate_rulebase(default_scheme(), variables=count),
            network_address="127.0.0.1",
        )
    return FuzzySystem(
        name="GameSystem",
        knowledge_base=build_default_kb(variant=variant),
        rule_base=rules,
        network_address="127.0.0.1",
    )
