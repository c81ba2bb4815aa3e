# The bound is reached
#
# The witness family has n states and 2m states incident to erased letters.
# Projecting onto b..g needs exactly 2^(n-m) - 1 states.

from permproj.automata import minimize
from permproj.cycles import format_cycles
from permproj.explorer import perm_bound, witness_size
from permproj.projection import project, unobservability_stats
from permproj.witness import WITNESS_GAMMA, make_witness

w = make_witness(8, 3)
for s in w.symbols:
    print(s, format_cycles(w.table[w.symbol_index(s)], w.label))


# Projected sizes next to the general permutation bound, for a few sizes.

print(f"{'n':>3} {'m':>3} {'2m':>3} {'size':>6} {'bound':>6}")
for n, m in [(4, 1), (5, 1), (6, 2), (7, 2), (8, 3), (9, 3), (10, 4)]:
    w = make_witness(n, m)
    size = minimize(project(w, WITNESS_GAMMA).dfa).state_count
    assert size == witness_size(n, m)
    m2 = unobservability_stats(w, WITNESS_GAMMA).m
    print(f"{n:>3} {m:>3} {m2:>3} {size:>6} {perm_bound(n, m2):>6}")
