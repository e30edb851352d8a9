#!/usr/bin/env python3
"""Regenerate the packaged knowledge bases and rule-scheme configuration.

Run after changing the fuzzy-set tables or the rule generator:
    python3 tools/regenerate_data.py
"""

from pathlib import Path

from goassess.assess.knowledge import FML_1, FML_2, build_system
from goassess.assess.rulegen import fit_scheme, generate_rulebase, mirror_report, save_scheme
from goassess.fml import RuleBase, serialize_fml

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "goassess" / "data"


def main() -> None:
    scheme = fit_scheme()
    save_scheme(scheme, DATA_DIR / "rule_scheme.json")
    print(f"scheme: thresholds={scheme.thresholds}")

    for variant, count, filename in ((FML_1, 4, "fml-1.xml"), (FML_2, 6, "fml-2.xml")):
        rules = generate_rulebase(scheme, variables=count)
        system = build_system(
            variant,
            rules=RuleBase(name="ruleBase1", rules=rules, network_address="127.0.0.1"),
        )
        (DATA_DIR / filename).write_text(serialize_fml(system))
        print(f"{filename}: {len(rules)} rules")

    report = mirror_report(generate_rulebase(scheme, variables=6))
    print(f"mirror symmetry: {report.symmetric}/{report.total} = {report.fraction:.4f}")


if __name__ == "__main__":
    main()
