"""
Running the verification suites
===============================

Every suite is seeded, so the report below is the same on every run.
Equivalent to ``sareg verify all --seed 7 --trials 4``.
"""

from sareg.harness import SuiteConfig, run_suite

result = run_suite(SuiteConfig(suite="all", trials=4, seed=7, check_saturation=True))
print(result.render())
print("exit status:", result.exit_status)
