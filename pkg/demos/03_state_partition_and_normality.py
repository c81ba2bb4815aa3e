# When the projection stays small
#
# A normal subgroup of unobservable letters makes the letters permute the
# orbits, which makes the automaton a state-partition automaton, which keeps
# the projection within n states. The converse steps can fail.

import numpy as np

from permproj.algebra import is_normal_subgroup, orbits_are_permuted
from permproj.automata import canonical, minimize
from permproj.explorer import random_permutation_dfa
from permproj.projection import check_state_partition, project
from permproj.witness import example_group, remark_state_partition

g = example_group()
print("<a> normal:", is_normal_subgroup(g, ["a"]).name)
print("<b> normal:", is_normal_subgroup(g, ["b"]).name)


# Eight states where erasing `a` gives a state partition although `a`-orbits
# are not permuted.

r = remark_state_partition()
print("state partition:", check_state_partition(r, ["b"]).is_state_partition)
print("orbits permuted:", orbits_are_permuted(r, ["a"]))


# Tally the three properties over random two-letter automata.

rng = np.random.default_rng(0)
tally = np.zeros((2, 2, 2), dtype=int)
for _ in range(500):
    d = canonical(random_permutation_dfa(rng, int(rng.integers(2, 7)), 2))
    normal = is_normal_subgroup(d, ["a"]).name == "NORMAL"
    permuted = orbits_are_permuted(d, ["a"])
    partition = check_state_partition(d, ["b"]).is_state_partition
    assert minimize(project(d, ["b"]).dfa).state_count <= d.state_count or not partition
    tally[int(normal), int(permuted), int(partition)] += 1

for idx in zip(*np.nonzero(tally)):
    print(dict(zip(("normal", "permuted", "partition"), map(bool, idx))), tally[idx])
