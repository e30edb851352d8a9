"""Document model for the FML (fuzzy markup language) subset this package runs.

Only what the runtime needs: trapezoidal terms, input/output variables,
and a Mamdani rule base with MIN/MAX connectives. Everything is immutable
after construction, so a parsed system can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class FmlError(Exception):
    """Base class for all FML document and inference errors."""


class FmlParseError(FmlError):
    """Malformed or unsupported FML markup."""


class FmlValidationError(FmlError):
    """Structurally well-formed document that violates a model invariant."""


class DomainError(FmlError):
    """A crisp value falls outside its variable's declared domain."""


class MissingInputError(FmlError):
    """Inference was asked to run without a value for a referenced input."""


@dataclass(frozen=True)
class TrapezoidMF:
    """Trapezoidal membership function with knots a <= b <= c <= d.

    Membership is 0 outside [a, d], 1 on [b, c], and linear on the ramps.
    Degenerate ramps (a == b or c == d) give vertical edges.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        if not (self.a <= self.b <= self.c <= self.d):
            raise FmlValidationError(
                f"trapezoid knots must be ordered: ({self.a}, {self.b}, {self.c}, {self.d})"
            )

    def __call__(self, x: float) -> float:
        if x < self.a or x > self.d:
            return 0.0
        if self.b <= x <= self.c:
            return 1.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        return (self.d - x) / (self.d - self.c)

    def centroid(self) -> float:
        """Analytic x-centroid of the unclipped trapezoid."""
        left = (self.b - self.a) / 2.0
        mid = self.c - self.b
        right = (self.d - self.c) / 2.0
        area = left + mid + right
        if area == 0.0:
            return (self.a + self.d) / 2.0
        moment = (
            left * (self.a + 2.0 * self.b) / 3.0
            + mid * (self.b + self.c) / 2.0
            + right * (2.0 * self.c + self.d) / 3.0
        )
        return moment / area


@dataclass(frozen=True)
class FuzzyTerm:
    """A named linguistic term over one variable."""

    name: str
    mf: TrapezoidMF
    complement: bool = False

    def membership(self, x: float) -> float:
        value = self.mf(x)
        return 1.0 - value if self.complement else value


@dataclass(frozen=True)
class FuzzyVariable:
    name: str
    domain_left: float
    domain_right: float
    var_type: str  # "input" | "output"
    terms: tuple[FuzzyTerm, ...]
    default_value: float = 0.0
    accumulation: str = "MAX"
    defuzzifier: str = "COG"
    scale: str | None = None
    network_address: str | None = None

    def __post_init__(self) -> None:
        if self.var_type not in ("input", "output"):
            raise FmlValidationError(f"variable {self.name}: bad type {self.var_type!r}")
        if not self.domain_left < self.domain_right:
            raise FmlValidationError(
                f"variable {self.name}: empty domain [{self.domain_left}, {self.domain_right}]"
            )
        if not self.domain_left <= self.default_value <= self.domain_right:
            raise FmlValidationError(
                f"variable {self.name}: defaultValue {self.default_value} outside domain"
            )
        seen: set[str] = set()
        for term in self.terms:
            if term.name in seen:
                raise FmlValidationError(f"variable {self.name}: duplicate term {term.name!r}")
            seen.add(term.name)
            if term.mf.a < self.domain_left or term.mf.d > self.domain_right:
                raise FmlValidationError(
                    f"variable {self.name}: term {term.name!r} trapezoid outside domain"
                )

    def term(self, name: str) -> FuzzyTerm:
        for term in self.terms:
            if term.name == name:
                return term
        raise FmlValidationError(f"variable {self.name}: no term {name!r}")

    def membership(self, term_name: str, x: float) -> float:
        """Degree of ``x`` in the named term; raises DomainError off-domain."""
        if x < self.domain_left or x > self.domain_right:
            raise DomainError(
                f"{self.name}={x} outside domain [{self.domain_left}, {self.domain_right}]"
            )
        return self.term(term_name).membership(x)


@dataclass(frozen=True)
class RuleClause:
    variable: str
    term: str


@dataclass(frozen=True)
class FuzzyRule:
    name: str
    antecedent: tuple[RuleClause, ...]
    consequent: tuple[RuleClause, ...]
    connector: str = "AND"  # "AND" | "OR"
    and_method: str = "MIN"
    or_method: str = "MAX"
    weight: float = 1.0
    network_address: str | None = None

    def __post_init__(self) -> None:
        if not self.antecedent:
            raise FmlValidationError(f"rule {self.name}: empty antecedent")
        if not self.consequent:
            raise FmlValidationError(f"rule {self.name}: empty consequent")
        if self.connector not in ("AND", "OR"):
            raise FmlValidationError(f"rule {self.name}: bad connector {self.connector!r}")
        if not 0.0 <= self.weight <= 1.0:
            raise FmlValidationError(f"rule {self.name}: weight {self.weight} outside [0,1]")


@dataclass(frozen=True)
class RuleBase:
    name: str
    rules: tuple[FuzzyRule, ...] = ()
    activation_method: str = "MIN"
    and_method: str = "MIN"
    or_method: str = "MAX"
    network_address: str | None = None


@dataclass(frozen=True)
class FuzzySystem:
    """A validated fuzzy system: every clause resolves, names are unique."""

    name: str
    knowledge_base: tuple[FuzzyVariable, ...]
    rule_base: RuleBase
    network_address: str | None = None
    _by_name: dict[str, FuzzyVariable] = field(
        init=False, repr=False, compare=False, hash=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        by_name: dict[str, FuzzyVariable] = {}
        for var in self.knowledge_base:
            if var.name in by_name:
                raise FmlValidationError(f"duplicate variable {var.name!r}")
            by_name[var.name] = var
        object.__setattr__(self, "_by_name", by_name)
        for rule in self.rule_base.rules:
            for clause in rule.antecedent + rule.consequent:
                var = by_name.get(clause.variable)
                if var is None:
                    raise FmlValidationError(
                        f"rule {rule.name!r}: clause references undeclared variable "
                        f"{clause.variable!r}"
                    )
                if all(t.name != clause.term for t in var.terms):
                    raise FmlValidationError(
                        f"rule {rule.name!r}: clause {clause.variable!r} references "
                        f"undeclared term {clause.term!r}"
                    )
            for clause in rule.consequent:
                if by_name[clause.variable].var_type != "output":
                    raise FmlValidationError(
                        f"rule {rule.name!r}: consequent targets non-output variable "
                        f"{clause.variable!r}"
                    )

    def variable(self, name: str) -> FuzzyVariable:
        try:
            return self._by_name[name]
        except KeyError:
            raise FmlValidationError(f"no variable {name!r}") from None

    @property
    def input_variables(self) -> tuple[FuzzyVariable, ...]:
        return tuple(v for v in self.knowledge_base if v.var_type == "input")

    @property
    def output_variables(self) -> tuple[FuzzyVariable, ...]:
        return tuple(v for v in self.knowledge_base if v.var_type == "output")
