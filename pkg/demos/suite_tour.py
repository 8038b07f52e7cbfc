"""
A small verification suite
==========================

Catalog germs are paired with seeded random finite maps.  Each case records
both Milnor numbers and a verdict.  The same seed always produces the same
cases.
"""

from germlab import SuiteConfig, run_suite

report = run_suite(SuiteConfig(seed=7, num_cases=24, n=2))
print(report.counters)

# a few individual cases
for name, case in list(zip(report.case_names, report.cases))[:6]:
    print(f"{name:16s} F = ({case.F})")
    print(f"{'':16s} mu(V) = {case.mu_V}, mu(W) = {case.mu_W}, {case.inequality_verdict}")

# in this run every equality case comes from a map of multiplicity 1
eq = [c for c in report.cases if c.equality]
print(len(eq), "equality cases, multiplicities:", sorted({c.multiplicity for c in eq}))

# three variables work the same way
report3 = run_suite(SuiteConfig(seed=7, num_cases=10, n=3))
print(report3.counters)
