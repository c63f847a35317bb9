"""Run the randomized self-verification suite and print its report.

Samples parameter draws and cross-checks three independent routes through
the model: closed-form thresholds against bisection on raw payoffs,
threshold-based equilibrium labels against direct best-response search, and
exact probability conservation across every strategy profile.
"""

import sys

from raceworlds import run_verification

report = run_verification(seed=0, samples=10_000)
for line in report.lines():
    print(line)
sys.exit(0 if report.ok else 1)
