"""Seeded property suites and what a failure looks like.

The suites are deterministic for a given seed.  Breaking the closed form of
C_f(a, z) makes the conjugation suite report a reproducible counterexample.
"""

from latmac import lm
from latmac.selfcheck import run_selfcheck

for r in run_selfcheck(seed=42, cases=25):
    print(f"{r.name:16s} {r.ring:10s} {r.passed}/{r.total}")

real = lm.cf_matrix


def broken(form, ctx):
    C = real(form, ctx)
    C[-1][-1] = C[-1][-1] + ctx.ring.one
    return C


lm.cf_matrix = broken
try:
    failed = [r for r in run_selfcheck(seed=42, cases=5, rings=("Z",)) if not r.ok]
    print("with a broken C_f:", failed[0].name, failed[0].counterexample)
finally:
    lm.cf_matrix = real
