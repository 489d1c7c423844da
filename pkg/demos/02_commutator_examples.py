"""Transitive involution pairs and commutator witnesses.

Two families of involution pairs drive the covering constructions: on an odd
number of points the commutator is one full cycle, on an even number it
splits into two equal cycles.  For arbitrary even permutations the package
finds commutator witnesses by exhaustive search.
"""

from satgenus import (
    commutator,
    cycle_type,
    cycles_str,
    example1_pair,
    example2_pair,
    is_transitive,
    ore_commutator_search,
    parse_cycles,
)

print("pairs with a full-cycle commutator (2m+1 points)")
for m in range(1, 5):
    s1, s2 = example1_pair(m)
    c = commutator(s1, s2)
    print(f"  m={m}: s1={cycles_str(s1)}  s2={cycles_str(s2)}")
    print(f"        [s1,s2]={cycles_str(c)}  transitive={is_transitive([s1, s2])}")

print()
print("pairs whose commutator is two equal cycles (2m points)")
for m in range(2, 6):
    s1, s2 = example2_pair(m)
    c = commutator(s1, s2)
    print(f"  m={m}: cycle type {cycle_type(c)}, transitive={is_transitive([s1, s2])}")

print()
print("witnesses for arbitrary even targets")
targets = ["(1 2 3)", "(1 2 3 4 5)", "(1 2)(3 4)", "(1 2 3)(4 5 6)"]
for text in targets:
    degree = max(int(tok) for tok in text.replace("(", " ").replace(")", " ").split())
    target = parse_cycles(text, degree)
    witness = ore_commutator_search(target)
    a, b = witness
    assert commutator(a, b) == target
    print(f"  {text:16} = [{cycles_str(a)}, {cycles_str(b)}]")

# Odd permutations are never commutators; the search reports that instead of
# spinning through the whole group.
print()
print("odd targets have no witness:")
print("  (1 2) ->", ore_commutator_search(parse_cycles("(1 2)", 3)))
