"""Covering-surface bookkeeping, from monodromy data to genus.

A cover of the one-holed torus (or a higher-genus base) is described by one
permutation per free generator.  Components come from orbits, boundary
circles from the cycles of the commutator product, and the genus from the
Euler count.  Simple branch points then trade Euler characteristic for
boundary topology one unit at a time.
"""

from satgenus import (
    HomomorphismCover,
    add_branch_point,
    boundary_permutation,
    cover_from_homomorphism,
    cycles_str,
    cyclic_cover,
    euler_characteristic,
    example1_pair,
    example2_pair,
)


def describe(tag, data):
    c = data.cover
    print(
        f"  {tag}: components={c.components} genus={c.genus_total} "
        f"boundary={c.boundary_components} chi={euler_characteristic(c)} "
        f"branch={data.branch_total}"
    )


print("cyclic covers of a genus-g one-holed surface")
print("(the unbranched genus floor n*g - (n-1), met with n boundary circles)")
for g in (1, 2, 3):
    for n in (2, 3, 5):
        describe(f"g={g} n={n}", cyclic_cover(g, n))

print()
print("a degree-7 cover with connected boundary")
s1, s2 = example1_pair(3)
hom = HomomorphismCover(1, 7, (s1, s2))
print(f"  boundary image: {cycles_str(boundary_permutation(hom))}")
cover7 = cover_from_homomorphism(hom)
describe("7-sheeted", cover7)
# genus 4 = 7*1 - 3: the floor for odd-degree covers with one boundary circle

print()
print("even degree needs one branch point to reach connected boundary")
s1, s2 = example2_pair(4)
cover8 = cover_from_homomorphism(HomomorphismCover(1, 8, (s1, s2)))
describe("8-sheeted, unbranched", cover8)
merged = add_branch_point(cover8, merge=(0, 1))
describe("after merging the two circles", merged)
# genus 5 = 8*1 - 3: one above the odd pattern, and provably the best
# an even-degree cover with connected boundary can do

print()
print("splitting instead of merging keeps the genus")
split = add_branch_point(cover7)
describe("7-sheeted, one branch point", split)
