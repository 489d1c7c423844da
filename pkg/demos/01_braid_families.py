"""Tour of the braid-word toolbox.

Builds the positive half twist, the quasipositive knot family, and its
2-cabled relative, then prints the invariants the rest of the package
consumes: exponent sums, strand permutations, and closure component counts.
"""

from satgenus import (
    braid_text,
    closure_component_count,
    concat,
    cycles_str,
    exponent_sum,
    half_twist,
    orevkov_k1,
    orevkov_k2,
    permutation_of,
    suggested_twist_count,
)


def show(label, word):
    text = braid_text(word) or "(empty)"
    if len(text) > 60:
        text = text[:57] + "..."
    print(f"{label}")
    print(f"  strands {word.strands}, length {len(word)}, exponent sum {exponent_sum(word)}")
    print(f"  word: {text}")
    print(f"  strand permutation: {cycles_str(permutation_of(word))}")
    print(f"  closure components: {closure_component_count(word)}")
    print()


print("= half twists =")
for n in (3, 4, 5):
    show(f"half twist on {n} strands", half_twist(n))

# The square of the half twist generates the center of the braid group.  Its
# strand permutation is trivial, so the closure has one circle per strand.
full = concat(half_twist(4), half_twist(4))
show("full twist on 4 strands", full)

print("= the quasipositive knot family =")
for n in (2, 3, 4, 5):
    w = orevkov_k1(n)
    show(f"K1({n})", w)
    assert exponent_sum(w) == n * n - 1

print("= the 2-cabled relative =")
# The cable of K1(n) lives on 2n strands.  An odd number of negative kinks
# keeps the closure a knot; the suggested count lands the 4-genus in the
# window that matters for the gap demonstration (see 04_genus_gap.py).
for n in (2, 3):
    twists = suggested_twist_count(n)
    w = orevkov_k2(n, twists)
    show(f"K2({n}) with {twists} kinks", w)
