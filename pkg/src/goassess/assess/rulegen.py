"""Rule-base generation for the assessment system.

Every combination of input terms becomes one rule (324 rules for six
variables, 81 for four). A rule's verdict comes from a weighted score:
each side's score sums relation_weight x term_weight over its variables,
and the black-minus-white difference is thresholded into the five labels.

The published term-weight table can be read in several orientations, so
the orientation and the thresholds are fitted by exhaustive search against
a fixed 20-rule conformance sample (rules 1-10 and 315-324 of the 324-rule
base) and then frozen into a configuration file shipped with the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import product
from pathlib import Path

from ..fml import FuzzyRule, RuleClause
from .knowledge import CGS_LABELS, FML_1, FML_2, INPUT_NAMES


class RuleGenError(ValueError):
    pass


# Enumeration order: BSN slowest, WTMR fastest; term order as declared.
VARIABLE_TERMS: dict[str, tuple[str, ...]] = {
    "BSN": ("Low", "Medium", "High"),
    "WSN": ("Low", "Medium", "High"),
    "BWR": ("Low", "Medium", "High"),
    "WWR": ("Low", "Medium", "High"),
    "BTMR": ("Low", "High"),
    "WTMR": ("Low", "High"),
}

BLACK_VARIABLES = ("BSN", "BWR", "BTMR")
WHITE_VARIABLES = ("WSN", "WWR", "WTMR")
_MIRROR = {"BSN": "WSN", "WSN": "BSN", "BWR": "WWR", "WWR": "BWR",
           "BTMR": "WTMR", "WTMR": "BTMR"}
_MIRROR_LABEL = {
    "BlackObviousAdvantage": "WhiteObviousAdvantage",
    "BlackPossibleAdvantage": "WhitePossibleAdvantage",
    "UncertainSituation": "UncertainSituation",
    "WhitePossibleAdvantage": "BlackPossibleAdvantage",
    "WhiteObviousAdvantage": "BlackObviousAdvantage",
}

# Published relation weights: simulation number outweighs win rate
# outweighs top-move rate. Same weight for both colors of a pair.
RELATION_WEIGHTS = {
    "BSN": 2.5, "WSN": 2.5,
    "BWR": 2.0, "WWR": 2.0,
    "BTMR": 1.0, "WTMR": 1.0,
}

# Published term-weight magnitudes per family; the fitted orientation
# decides whether they attach ascending or descending over the terms.
TERM_WEIGHT_SETS = {
    "BSN": (1.0, 2.0, 3.0), "WSN": (1.0, 2.0, 3.0),
    "BWR": (1.0, 2.0, 3.0), "WWR": (1.0, 2.0, 3.0),
    "BTMR": (1.0, 2.0), "WTMR": (1.0, 2.0),
}

# Conformance sample the generated base must reproduce exactly:
# (rule number, antecedent terms in BSN..WTMR order, verdict label).
REFERENCE_ROWS: tuple[tuple[int, tuple[str, ...], str], ...] = (
    (1, ("Low", "Low", "Low", "Low", "Low", "Low"), "UncertainSituation"),
    (2, ("Low", "Low", "Low", "Low", "Low", "High"), "UncertainSituation"),
    (3, ("Low", "Low", "Low", "Low", "High", "Low"), "UncertainSituation"),
    (4, ("Low", "Low", "Low", "Low", "High", "High"), "UncertainSituation"),
    (5, ("Low", "Low", "Low", "Medium", "Low", "Low"), "UncertainSituation"),
    (6, ("Low", "Low", "Low", "Medium", "Low", "High"), "WhitePossibleAdvantage"),
    (7, ("Low", "Low", "Low", "Medium", "High", "Low"), "UncertainSituation"),
    (8, ("Low", "Low", "Low", "Medium", "High", "High"), "UncertainSituation"),
    (9, ("Low", "Low", "Low", "High", "Low", "Low"), "WhitePossibleAdvantage"),
    (10, ("Low", "Low", "Low", "High", "Low", "High"), "WhitePossibleAdvantage"),
    (315, ("High", "High", "High", "Low", "High", "Low"), "BlackPossibleAdvantage"),
    (316, ("High", "High", "High", "Low", "High", "High"), "BlackPossibleAdvantage"),
    (317, ("High", "High", "High", "Medium", "Low", "Low"), "BlackPossibleAdvantage"),
    (318, ("High", "High", "High", "Medium", "Low", "High"), "UncertainSituation"),
    (319, ("High", "High", "High", "Medium", "High", "Low"), "BlackPossibleAdvantage"),
    (320, ("High", "High", "High", "Medium", "High", "High"), "BlackPossibleAdvantage"),
    (321, ("High", "High", "High", "High", "Low", "Low"), "UncertainSituation"),
    (322, ("High", "High", "High", "High", "Low", "High"), "UncertainSituation"),
    (323, ("High", "High", "High", "High", "High", "Low"), "UncertainSituation"),
    (324, ("High", "High", "High", "High", "High", "High"), "UncertainSituation"),
)


@dataclass(frozen=True)
class RuleGenScheme:
    """Frozen scoring configuration: per-variable relation weights,
    per-(variable, term) weights, and four ascending label breakpoints."""

    relation_weights: dict[str, float]
    term_weights: dict[str, dict[str, float]]
    thresholds: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        if list(self.thresholds) != sorted(self.thresholds) or len(set(self.thresholds)) != 4:
            raise RuleGenError(f"thresholds must be strictly increasing: {self.thresholds}")

    def side_score(self, variables: tuple[str, ...], terms: dict[str, str]) -> float:
        return sum(
            self.relation_weights[v] * self.term_weights[v][terms[v]] for v in variables
        )

    def label_for(self, terms: dict[str, str]) -> str:
        black = self.side_score(tuple(v for v in BLACK_VARIABLES if v in terms), terms)
        white = self.side_score(tuple(v for v in WHITE_VARIABLES if v in terms), terms)
        return self.label_for_score(black - white)

    def label_for_score(self, diff: float) -> str:
        t1, t2, t3, t4 = self.thresholds
        if diff < t1:
            return "WhiteObviousAdvantage"
        if diff < t2:
            return "WhitePossibleAdvantage"
        if diff < t3:
            return "UncertainSituation"
        if diff < t4:
            return "BlackPossibleAdvantage"
        return "BlackObviousAdvantage"

    def to_json(self) -> str:
        return json.dumps(
            {
                "version": 1,
                "relation_weights": self.relation_weights,
                "term_weights": self.term_weights,
                "thresholds": list(self.thresholds),
            },
            indent=2,
            sort_keys=True,
        ) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RuleGenScheme":
        data = json.loads(text)
        return cls(
            relation_weights={k: float(v) for k, v in data["relation_weights"].items()},
            term_weights={
                var: {t: float(w) for t, w in terms.items()}
                for var, terms in data["term_weights"].items()
            },
            thresholds=tuple(float(t) for t in data["thresholds"]),
        )


def _antecedent_combinations(variables: tuple[str, ...]):
    term_lists = [VARIABLE_TERMS[v] for v in variables]
    for combo in product(*term_lists):
        yield dict(zip(variables, combo))


def fit_scheme(reference=REFERENCE_ROWS) -> RuleGenScheme:
    """Exhaustively search term-weight orientations and derive thresholds
    so the generated base reproduces every reference row.

    Orientations are tried in lexicographic order over the variables in
    declaration order (ascending before descending), and the first
    consistent assignment wins, which makes the fit deterministic.
    """
    variables = tuple(VARIABLE_TERMS)
    label_order = {label: i for i, label in enumerate(CGS_LABELS)}

    for flags in product((False, True), repeat=len(variables)):
        term_weights: dict[str, dict[str, float]] = {}
        for variable, descending in zip(variables, flags):
            terms = VARIABLE_TERMS[variable]
            weights = TERM_WEIGHT_SETS[variable]
            ordered = tuple(reversed(weights)) if descending else weights
            term_weights[variable] = dict(zip(terms, ordered))
        candidate = RuleGenScheme(
            relation_weights=dict(RELATION_WEIGHTS),
            term_weights=term_weights,
            thresholds=(-1.0, -0.5, 0.5, 1.0),  # placeholder, replaced below
        )

        # Scores per observed label must form disjoint, correctly ordered bands.
        bands: dict[str, list[float]] = {}
        for _, terms_tuple, label in reference:
            terms = dict(zip(variables, terms_tuple))
            black = candidate.side_score(BLACK_VARIABLES, terms)
            white = candidate.side_score(WHITE_VARIABLES, terms)
            bands.setdefault(label, []).append(black - white)
        ordered_labels = sorted(bands, key=label_order.__getitem__)
        ok = all(
            max(bands[a]) < min(bands[b])
            for a, b in zip(ordered_labels, ordered_labels[1:])
        )
        if not ok:
            continue

        # Thresholds sit midway between adjacent observed bands; a boundary
        # with only one observed side sits midway between that band's edge
        # and the next achievable score beyond it.
        achievable = sorted({
            candidate.side_score(BLACK_VARIABLES, terms)
            - candidate.side_score(WHITE_VARIABLES, terms)
            for terms in _antecedent_combinations(variables)
        })

        def _cut_between(lo_label: str, hi_label: str) -> float:
            if lo_label in bands and hi_label in bands:
                return (max(bands[lo_label]) + min(bands[hi_label])) / 2.0
            if hi_label in bands:
                anchor = min(bands[hi_label])
                below = [s for s in achievable if s < anchor]
                return (below[-1] + anchor) / 2.0 if below else anchor - 0.5
            if lo_label in bands:
                anchor = max(bands[lo_label])
                above = [s for s in achievable if s > anchor]
                return (anchor + above[0]) / 2.0 if above else anchor + 0.5
            raise RuleGenError(
                f"no reference rows anchor the {lo_label}/{hi_label} boundary"
            )

        thresholds = tuple(_cut_between(a, b) for a, b in zip(CGS_LABELS, CGS_LABELS[1:]))
        scheme = RuleGenScheme(
            relation_weights=dict(RELATION_WEIGHTS),
            term_weights=term_weights,
            thresholds=thresholds,  # type: ignore[arg-type]
        )
        if verify_scheme(scheme, reference):
            continue
        return scheme
    raise RuleGenError("no term-weight orientation reproduces the reference rules")


def verify_scheme(scheme: RuleGenScheme, reference=REFERENCE_ROWS) -> list:
    """Reference rows the scheme gets wrong (empty means conformant)."""
    variables = tuple(VARIABLE_TERMS)
    violations = []
    for number, terms_tuple, expected in reference:
        terms = dict(zip(variables, terms_tuple))
        got = scheme.label_for(terms)
        if got != expected:
            violations.append((number, terms_tuple, expected, got))
    return violations


def generate_rulebase(scheme: RuleGenScheme, variables: int = 6) -> tuple[FuzzyRule, ...]:
    """The full Cartesian rule base for 4 or 6 input variables.

    The six-variable base is checked against the reference rows; a scheme
    that cannot reproduce them is rejected with the violated rows listed.
    """
    if variables == 6:
        names = INPUT_NAMES[FML_2]
        bad = verify_scheme(scheme)
        if bad:
            rows = ", ".join(str(v[0]) for v in bad)
            raise RuleGenError(f"scheme fails reference rules: {rows}")
    elif variables == 4:
        names = INPUT_NAMES[FML_1]
    else:
        raise RuleGenError(f"rule base takes 4 or 6 variables, got {variables}")

    rules = []
    for i, terms in enumerate(_antecedent_combinations(names), start=1):
        rules.append(
            FuzzyRule(
                name=f"rule-{i}",
                antecedent=tuple(RuleClause(v, terms[v]) for v in names),
                consequent=(RuleClause("CGS", scheme.label_for(terms)),),
                network_address="127.0.0.1",
            )
        )
    return tuple(rules)


@dataclass(frozen=True)
class MirrorReport:
    """Diagnostic: how color-symmetric the generated base is."""

    total: int
    symmetric: int
    violations: tuple[tuple[str, str, str], ...]  # (rule, label, mirrored rule's label)

    @property
    def fraction(self) -> float:
        return self.symmetric / self.total if self.total else 1.0


def mirror_report(rules: tuple[FuzzyRule, ...]) -> MirrorReport:
    """Measure, per rule, whether swapping the black/white variables yields
    the color-mirrored verdict. Reported, not asserted: the published
    weights do not promise exact symmetry."""
    by_antecedent = {
        tuple(sorted((c.variable, c.term) for c in rule.antecedent)): rule
        for rule in rules
    }
    violations = []
    symmetric = 0
    for rule in rules:
        mirrored_key = tuple(sorted((_MIRROR[c.variable], c.term) for c in rule.antecedent))
        mirrored = by_antecedent[mirrored_key]
        want = _MIRROR_LABEL[rule.consequent[0].term]
        if mirrored.consequent[0].term == want:
            symmetric += 1
        else:
            violations.append((rule.name, rule.consequent[0].term, mirrored.consequent[0].term))
    return MirrorReport(total=len(rules), symmetric=symmetric, violations=tuple(violations))


_SCHEME_RESOURCE = "rule_scheme.json"


def default_scheme() -> RuleGenScheme:
    """The fitted scheme shipped with the package."""
    text = resources.files("goassess.data").joinpath(_SCHEME_RESOURCE).read_text()
    return RuleGenScheme.from_json(text)


def save_scheme(scheme: RuleGenScheme, path: Path) -> None:
    path.write_text(scheme.to_json())
