"""FML document parsing and serialization round trips."""

import pytest

from goassess.fml import FmlParseError, parse_fml, serialize_fml

DOCUMENT = """<?xml version="1.0" encoding="UTF-8"?>
<fuzzySystem xmlns="http://www.ieee1855.org" name="GameSystem" networkAddress="127.0.0.1">
  <knowledgeBase networkAddress="127.0.0.1">
    <fuzzyVariable name="BSN" scale="" domainleft="0" domainright="20000" type="Input"
        accumulation="MAX" defuzzifier="COG" defaultValue="0.0" networkAddress="127.0.0.1">
      <fuzzyTerm name="Low" complement="false">
        <trapezoidShape param1="0" param2="0" param3="2556" param4="7122"/>
      </fuzzyTerm>
      <fuzzyTerm name="Medium" complement="false">
        <trapezoidShape param1="2556" param2="7122" param3="12637" param4="17203"/>
      </fuzzyTerm>
      <fuzzyTerm name="High" complement="false">
        <trapezoidShape param1="12637" param2="17203" param3="20000" param4="20000"/>
      </fuzzyTerm>
    </fuzzyVariable>
    <fuzzyVariable name="CGS" scale="" domainleft="0" domainright="100" type="Output"
        accumulation="MAX" defuzzifier="COG" defaultValue="50" networkAddress="127.0.0.1">
      <fuzzyTerm name="UncertainSituation" complement="false">
        <trapezoidShape param1="37.5" param2="47.5" param3="52.5" param4="62.5"/>
      </fuzzyTerm>
    </fuzzyVariable>
  </knowledgeBase>
  <mamdaniRuleBase name="ruleBase1" activationMethod="MIN" andMethod="MIN" orMethod="MAX"
      networkAddress="127.0.0.1">
    <rule name="rule-1" andMethod="MIN" orMethod="MAX" connector="AND" weight="1.0"
        networkAddress="127.0.0.1">
      <antecedent>
        <clause><variable>BSN</variable><term>Low</term></clause>
      </antecedent>
      <consequent>
        <then>
          <clause><variable>CGS</variable><term>UncertainSituation</term></clause>
        </then>
      </consequent>
    </rule>
  </mamdaniRuleBase>
</fuzzySystem>
"""


class TestParse:
    def test_variables_and_trapezoids(self):
        system = parse_fml(DOCUMENT)
        assert system.name == "GameSystem"
        bsn = system.variable("BSN")
        assert (bsn.domain_left, bsn.domain_right) == (0.0, 20000.0)
        knots = [(t.mf.a, t.mf.b, t.mf.c, t.mf.d) for t in bsn.terms]
        assert knots == [
            (0.0, 0.0, 2556.0, 7122.0),
            (2556.0, 7122.0, 12637.0, 17203.0),
            (12637.0, 17203.0, 20000.0, 20000.0),
        ]
        assert bsn.var_type == "input"
        assert system.variable("CGS").var_type == "output"

    def test_rule_structure(self):
        system = parse_fml(DOCUMENT)
        rb = system.rule_base
        assert (rb.activation_method, rb.and_method, rb.or_method) == ("MIN", "MIN", "MAX")
        rule = rb.rules[0]
        assert rule.name == "rule-1"
        assert rule.connector == "AND" and rule.weight == 1.0
        assert rule.antecedent[0].variable == "BSN"
        assert rule.consequent[0].term == "UncertainSituation"

    def test_opaque_attributes_retained(self):
        system = parse_fml(DOCUMENT)
        assert system.network_address == "127.0.0.1"
        assert system.variable("BSN").scale == ""

    def test_consequent_without_then_wrapper(self):
        text = DOCUMENT.replace("<then>", "").replace("</then>", "")
        system = parse_fml(text)
        assert system.rule_base.rules[0].consequent[0].variable == "CGS"

    def test_degenerate_document_valid(self):
        text = """<fuzzySystem name="tiny">
          <knowledgeBase>
            <fuzzyVariable name="X" domainleft="0" domainright="1" type="Input">
              <fuzzyTerm name="T"><trapezoidShape param1="0" param2="0" param3="1" param4="1"/></fuzzyTerm>
            </fuzzyVariable>
            <fuzzyVariable name="OUT" domainleft="0" domainright="1" type="Output" defaultValue="0.5"/>
          </knowledgeBase>
          <mamdaniRuleBase name="rb"/>
        </fuzzySystem>"""
        system = parse_fml(text)
        assert len(system.rule_base.rules) == 0
        from goassess.fml import infer

        assert infer(system, {"X": 0.3}).crisp == 0.5

    def test_malformed_markup(self):
        with pytest.raises(FmlParseError):
            parse_fml("<fuzzySystem><knowledgeBase></fuzzySystem>")

    def test_unknown_shape_rejected(self):
        text = DOCUMENT.replace("trapezoidShape", "triangularShape", 2)
        with pytest.raises(FmlParseError, match="triangularShape"):
            parse_fml(text)

    def test_unresolved_clause_names_rule_and_clause(self):
        text = DOCUMENT.replace(
            "<variable>BSN</variable>", "<variable>XSN</variable>"
        )
        with pytest.raises(FmlParseError, match="rule-1.*XSN"):
            parse_fml(text)

    def test_unresolved_term_rejected(self):
        text = DOCUMENT.replace("<term>Low</term>", "<term>Huge</term>")
        with pytest.raises(FmlParseError, match="Huge"):
            parse_fml(text)

    def test_term_outside_domain_rejected(self):
        text = DOCUMENT.replace('param4="7122"', 'param4="70000"')
        with pytest.raises(FmlParseError, match="outside domain"):
            parse_fml(text)

    def test_document_without_namespace(self):
        text = DOCUMENT.replace(' xmlns="http://www.ieee1855.org"', "")
        assert parse_fml(text).name == "GameSystem"


class TestRoundTrip:
    def test_parse_serialize_parse_identity(self):
        first = parse_fml(DOCUMENT)
        text = serialize_fml(first)
        second = parse_fml(text)
        assert first == second

    def test_double_serialize_stable(self):
        system = parse_fml(DOCUMENT)
        once = serialize_fml(system)
        twice = serialize_fml(parse_fml(once))
        assert once == twice

    def test_empty_rulebase_round_trip(self):
        text = DOCUMENT[: DOCUMENT.index("<mamdaniRuleBase")] + (
            '<mamdaniRuleBase name="ruleBase1"/></fuzzySystem>'
        )
        system = parse_fml(text)
        assert parse_fml(serialize_fml(system)) == system

    def test_complement_attribute_round_trips(self):
        text = DOCUMENT.replace(
            '<fuzzyTerm name="High" complement="false">',
            '<fuzzyTerm name="High" complement="true">',
        )
        system = parse_fml(text)
        assert system.variable("BSN").term("High").complement is True
        emitted = serialize_fml(system)
        assert 'name="High" complement="true"' in emitted
        assert parse_fml(emitted) == system
