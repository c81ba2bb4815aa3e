# Scanning random automata against the bounds
#
# Each row is one automaton and one observable alphabet. The scan stops with
# the offending automaton if a bound or the oracle check ever fails.

import collections
import io

from permproj.explorer import scan, write_csv

reports = scan("random", kind="permutation", n_min=2, n_max=7, letters=3, samples=200, seed=7)
buf = io.StringIO()
write_csv(reports[:5], buf)
print(buf.getvalue())


# How close do random automata come to the bound? Mostly not at all.

slack = collections.Counter(r.perm_bound - r.proj_min for r in reports if r.m >= 2)
for gap in sorted(slack)[:10]:
    print(f"slack {gap:>4}: {slack[gap]}")


# General automata with undefined transitions, against the weaker bound.

general = scan("random", kind="general", n_min=2, n_max=6, letters=3, samples=200, seed=7)
worst = max(general, key=lambda r: r.proj_min / r.general_bound)
print(worst)
