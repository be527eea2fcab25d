"""Class tables of bounded ideal corpora.

Products of degree-one primes are sorted into classes by a bounded search
for gamma with gamma*b1 = b2.  Every class is then checked to contain a
product of degree-one primes over distinct unramified base primes.
"""

import time

from latmac import OrderCtx
from latmac.classgroup import classify, enumerate_products, verify_lenstra
from latmac.presets import EXAMPLES

for key, preset in EXAMPLES.items():
    ctx = OrderCtx(preset.ring, preset.f)
    start = time.perf_counter()
    items = enumerate_products(ctx, preset.prime_bound, preset.exp_bound, preset.max_factors)
    table = classify([b for b, _ in items], preset.box, dict(items))
    elapsed = time.perf_counter() - start
    print(f"Example {key}: {ctx}  corpus {len(items)}  classes {len(table.classes)}  "
          f"unresolved {len(table.unresolved)}  ({elapsed:.1f}s)")
    for report, cls in zip(verify_lenstra(table), table.classes):
        print(f"  class {report.index}: {len(cls.members)} members, "
              f"degree-one member {report.factorization.label()}")
