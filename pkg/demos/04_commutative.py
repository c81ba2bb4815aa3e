# Commuting letters
#
# If every erased letter commutes with every kept letter, dropping the erased
# transitions and widening the final states is enough: no subsets needed.

from permproj.automata import equivalent, minimize
from permproj.commutative import project_commutative_language, project_commuting, split_commutes
from permproj.projection import check_state_partition, project
from permproj.witness import example_commutative

e = example_commutative()
print(split_commutes(e, ["a"]))

b = project_commuting(e, ["a"])
print("same states:", b.state_count == e.state_count)
print("finals:", sorted(e.label(q) for q in b.finals))
print("matches subset projection:", equivalent(b, project(e, ["a"]).dfa).equal)


# The subset construction for the same projection has overlapping states.

print(check_state_partition(e, ["a"]))


# Both one-letter projections accept every word.

for letter in "ab":
    print(letter, minimize(project_commutative_language(e, [letter])).state_count)
