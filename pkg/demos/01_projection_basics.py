# Projecting a permutation automaton
#
# Erasing letters from the words of a regular language gives another regular
# language. Here we erase `a` from a three-state group automaton and look at
# the subset automaton that recognizes what is left.

from permproj.automata import is_permutation_dfa, minimize
from permproj.io import serialize
from permproj.projection import project, project_oracle, unobservability_stats
from permproj.witness import example_group

d = example_group()
print(serialize(d, ["b"]))


# Only `a` is unobservable. It swaps states 0 and 1, so m counts two states.

stats = unobservability_stats(d, ["b"])
print("m =", stats.m, "incident states:", sorted(stats.incident_states))


# Every state of the projection is a union of `a`-orbits.

proj = project(d, ["b"])
for q in proj.dfa.states:
    print(q, proj.dfa.label(q), "final" if q in proj.dfa.finals else "")


# The minimal automaton has two states and accepts b b*. It is partial, so it
# is not a permutation automaton even though the input was one.

small = minimize(proj.dfa)
print(small.state_count, "states, permutation:", is_permutation_dfa(small))


# The epsilon-NFA subset construction agrees.

print(minimize(project_oracle(d, ["b"])) == small)
