#!/usr/bin/env python3
"""Run the property harness at demo scale.

Each suite samples one law of the toolkit on seeded random terms and
accounts for every trial: pass, fuel exhaustion (inconclusive), or
counterexample.  The strict single-step suite is expected to report
counterexamples: value-crossing steps need a fixed three-step chain after
CPS, so the zero-or-one-step claim it checks is refutable; every other
suite is expected to be clean.
"""

import json

from ldot.props import SUITES, GenConfig

cfg = GenConfig(max_size=8, seed=2024)

for name, suite in SUITES.items():
    report = suite(cfg, trials=40)
    print(report.summary())
    if report.counterexamples:
        print(json.dumps(report.to_json()["counterexamples"][:2], indent=2))
