"""Parse and serialize the FML dialect used by the shipped knowledge bases.

The dialect covers fuzzySystem / knowledgeBase / fuzzyVariable / fuzzyTerm /
trapezoidShape / mamdaniRuleBase / rule / antecedent / consequent / clause.
trapezoidShape is the only supported shape element; anything else is a parse
error. Attributes the runtime has no semantics for (scale, networkAddress)
are retained verbatim so a parse/serialize round trip is lossless.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape, quoteattr

from .model import (
    FmlParseError,
    FmlValidationError,
    FuzzyRule,
    FuzzySystem,
    FuzzyTerm,
    FuzzyVariable,
    RuleBase,
    RuleClause,
    TrapezoidMF,
)

FML_NAMESPACE = "http://www.ieee1855.org"


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _children(elem: ET.Element, name: str) -> list[ET.Element]:
    return [child for child in elem if _local(child.tag) == name]


def _float_attr(elem: ET.Element, name: str, default: float | None = None) -> float:
    raw = elem.get(name)
    if raw is None:
        if default is None:
            raise FmlParseError(f"<{_local(elem.tag)}> missing attribute {name!r}")
        return default
    try:
        return float(raw)
    except ValueError:
        raise FmlParseError(f"<{_local(elem.tag)}> attribute {name}={raw!r} is not a number")


def _parse_term(elem: ET.Element, variable_name: str) -> FuzzyTerm:
    name = elem.get("name")
    if not name:
        raise FmlParseError(f"fuzzyTerm in variable {variable_name!r} missing name")
    complement = (elem.get("complement", "false").lower() == "true")
    shapes = list(elem)
    if len(shapes) != 1:
        raise FmlParseError(f"term {name!r} must contain exactly one shape element")
    shape = shapes[0]
    if _local(shape.tag) != "trapezoidShape":
        raise FmlParseError(
            f"term {name!r}: shape <{_local(shape.tag)}> is not supported "
            "(only trapezoidShape)"
        )
    mf = TrapezoidMF(
        _float_attr(shape, "param1"),
        _float_attr(shape, "param2"),
        _float_attr(shape, "param3"),
        _float_attr(shape, "param4"),
    )
    return FuzzyTerm(name=name, mf=mf, complement=complement)


def _parse_variable(elem: ET.Element) -> FuzzyVariable:
    name = elem.get("name")
    if not name:
        raise FmlParseError("fuzzyVariable missing name")
    var_type = elem.get("type", "input").lower()
    accumulation = elem.get("accumulation", "MAX").upper()
    if accumulation != "MAX":
        raise FmlParseError(f"variable {name!r}: accumulation {accumulation!r} not supported")
    defuzzifier = elem.get("defuzzifier", "COG").upper()
    if defuzzifier != "COG":
        raise FmlParseError(f"variable {name!r}: defuzzifier {defuzzifier!r} not supported")
    terms = tuple(_parse_term(child, name) for child in _children(elem, "fuzzyTerm"))
    try:
        return FuzzyVariable(
            name=name,
            domain_left=_float_attr(elem, "domainleft"),
            domain_right=_float_attr(elem, "domainright"),
            var_type=var_type,
            terms=terms,
            default_value=_float_attr(elem, "defaultValue", 0.0),
            accumulation=accumulation,
            defuzzifier=defuzzifier,
            scale=elem.get("scale"),
            network_address=elem.get("networkAddress"),
        )
    except FmlValidationError as exc:
        raise FmlParseError(str(exc)) from exc


def _parse_clauses(elem: ET.Element, rule_name: str, part: str) -> tuple[RuleClause, ...]:
    # Table-style documents wrap consequent clauses in a <then> element;
    # accept clauses both directly and inside the wrapper.
    holders = [elem] + _children(elem, "then")
    clauses: list[RuleClause] = []
    for holder in holders:
        for clause in _children(holder, "clause"):
            var_elems = _children(clause, "variable")
            term_elems = _children(clause, "term")
            if len(var_elems) != 1 or len(term_elems) != 1:
                raise FmlParseError(
                    f"rule {rule_name!r}: {part} clause needs one <variable> and one <term>"
                )
            variable = (var_elems[0].text or "").strip()
            term = (term_elems[0].text or "").strip()
            if not variable or not term:
                raise FmlParseError(f"rule {rule_name!r}: empty {part} clause")
            clauses.append(RuleClause(variable=variable, term=term))
    return tuple(clauses)


def _parse_rule(elem: ET.Element) -> FuzzyRule:
    name = elem.get("name")
    if not name:
        raise FmlParseError("rule missing name")
    antecedents = _children(elem, "antecedent")
    consequents = _children(elem, "consequent")
    if len(antecedents) != 1 or len(consequents) != 1:
        raise FmlParseError(f"rule {name!r} needs one antecedent and one consequent")
    try:
        return FuzzyRule(
            name=name,
            antecedent=_parse_clauses(antecedents[0], name, "antecedent"),
            consequent=_parse_clauses(consequents[0], name, "consequent"),
            connector=elem.get("connector", "AND").upper(),
            and_method=elem.get("andMethod", "MIN").upper(),
            or_method=elem.get("orMethod", "MAX").upper(),
            weight=_float_attr(elem, "weight", 1.0),
            network_address=elem.get("networkAddress"),
        )
    except FmlValidationError as exc:
        raise FmlParseError(str(exc)) from exc


def parse_fml(document: str) -> FuzzySystem:
    """Parse an FML document into a validated FuzzySystem."""
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        raise FmlParseError(f"malformed markup: {exc}") from exc
    if _local(root.tag) != "fuzzySystem":
        raise FmlParseError(f"root element is <{_local(root.tag)}>, expected <fuzzySystem>")

    kb_elems = _children(root, "knowledgeBase")
    if len(kb_elems) != 1:
        raise FmlParseError("document needs exactly one knowledgeBase")
    variables = tuple(_parse_variable(v) for v in _children(kb_elems[0], "fuzzyVariable"))

    rb_elems = _children(root, "mamdaniRuleBase")
    if len(rb_elems) > 1:
        raise FmlParseError("more than one mamdaniRuleBase")
    if rb_elems:
        rb = rb_elems[0]
        activation = rb.get("activationMethod", "MIN").upper()
        if activation != "MIN":
            raise FmlParseError(f"activationMethod {activation!r} not supported")
        rule_base = RuleBase(
            name=rb.get("name", "ruleBase"),
            rules=tuple(_parse_rule(r) for r in _children(rb, "rule")),
            activation_method=activation,
            and_method=rb.get("andMethod", "MIN").upper(),
            or_method=rb.get("orMethod", "MAX").upper(),
            network_address=rb.get("networkAddress"),
        )
    else:
        rule_base = RuleBase(name="ruleBase")

    try:
        return FuzzySystem(
            name=root.get("name", "fuzzySystem"),
            knowledge_base=variables,
            rule_base=rule_base,
            network_address=root.get("networkAddress"),
        )
    except FmlValidationError as exc:
        raise FmlParseError(str(exc)) from exc


def _fmt(value: float) -> str:
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


class _Writer:
    def __init__(self) -> None:
        self.lines: list[str] = []

    def open(self, depth: int, tag: str, attrs: list[tuple[str, str]], close: bool = False) -> None:
        rendered = "".join(f" {k}={quoteattr(v)}" for k, v in attrs)
        slash = "/" if close else ""
        self.lines.append(f"{'  ' * depth}<{tag}{rendered}{slash}>")

    def close(self, depth: int, tag: str) -> None:
        self.lines.append(f"{'  ' * depth}</{tag}>")

    def text(self, depth: int, tag: str, value: str) -> None:
        self.lines.append(f"{'  ' * depth}<{tag}>{escape(value)}</{tag}>")


def _clause_block(writer: _Writer, depth: int, clauses: tuple[RuleClause, ...]) -> None:
    for clause in clauses:
        writer.open(depth, "clause", [])
        writer.text(depth + 1, "variable", clause.variable)
        writer.text(depth + 1, "term", clause.term)
        writer.close(depth, "clause")


def serialize_fml(system: FuzzySystem) -> str:
    """Emit ``system`` as an FML document; parse(serialize(s)) equals s."""
    w = _Writer()
    w.lines.append('<?xml version="1.0" encoding="UTF-8"?>')
    sys_attrs = [("xmlns", FML_NAMESPACE), ("name", system.name)]
    if system.network_address is not None:
        sys_attrs.append(("networkAddress", system.network_address))
    w.open(0, "fuzzySystem", sys_attrs)

    w.open(1, "knowledgeBase", [])
    for var in system.knowledge_base:
        attrs = [("name", var.name)]
        if var.scale is not None:
            attrs.append(("scale", var.scale))
        attrs += [
            ("domainleft", _fmt(var.domain_left)),
            ("domainright", _fmt(var.domain_right)),
            ("type", var.var_type.capitalize()),
            ("accumulation", var.accumulation),
            ("defuzzifier", var.defuzzifier),
            ("defaultValue", _fmt(var.default_value)),
        ]
        if var.network_address is not None:
            attrs.append(("networkAddress", var.network_address))
        w.open(2, "fuzzyVariable", attrs)
        for term in var.terms:
            w.open(3, "fuzzyTerm", [("name", term.name), ("complement", str(term.complement).lower())])
            w.open(
                4,
                "trapezoidShape",
                [
                    ("param1", _fmt(term.mf.a)),
                    ("param2", _fmt(term.mf.b)),
                    ("param3", _fmt(term.mf.c)),
                    ("param4", _fmt(term.mf.d)),
                ],
                close=True,
            )
            w.close(3, "fuzzyTerm")
        w.close(2, "fuzzyVariable")
    w.close(1, "knowledgeBase")

    rb = system.rule_base
    rb_attrs = [
        ("name", rb.name),
        ("activationMethod", rb.activation_method),
        ("andMethod", rb.and_method),
        ("orMethod", rb.or_method),
    ]
    if rb.network_address is not None:
        rb_attrs.append(("networkAddress", rb.network_address))
    w.open(1, "mamdaniRuleBase", rb_attrs)
    for rule in rb.rules:
        rule_attrs = [
            ("name", rule.name),
            ("andMethod", rule.and_method),
            ("orMethod", rule.or_method),
            ("connector", rule.connector),
            ("weight", _fmt(rule.weight)),
        ]
        if rule.network_address is not None:
            rule_attrs.append(("networkAddress", rule.network_address))
        w.open(2, "rule", rule_attrs)
        w.open(3, "antecedent", [])
        _clause_block(w, 4, rule.antecedent)
        w.close(3, "antecedent")
        w.open(3, "consequent", [])
        w.open(4, "then", [])
        _clause_block(w, 5, rule.consequent)
        w.close(4, "then")
        w.close(3, "consequent")
        w.close(2, "rule")
    w.close(1, "mamdaniRuleBase")
    w.close(0, "fuzzySystem")
    return "\n".join(w.lines) + "\n"
