"""Small independent reimplementations used as test oracles.

Everything here favors directness over speed and deliberately takes a
different route than the package: orbits by breadth-first search instead of
union-find, boundary permutations by pointwise application instead of table
products, braid permutations by composing transposition maps.
"""

from collections import deque


def naive_compose(a, b):
    """Image tuple of 'apply a, then b' for 0-indexed image tuples."""
    return tuple(b[a[x]] for x in range(len(a)))


def naive_inverse(a):
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


def naive_commutator(a, b):
    ai, bi = naive_inverse(a), naive_inverse(b)
    return tuple(bi[ai[b[a[x]]]] for x in range(len(a)))


def naive_cycles(p):
    n = len(p)
    seen = set()
    out = []
    for start in range(n):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = p[x]
        out.append(tuple(cyc))
    return out


def naive_orbits(images, degree):
    """Orbits of 0..degree-1 under a list of image tuples, by BFS."""
    remaining = set(range(degree))
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in images:
                for y in (g[x], naive_inverse(g)[x]):
                    if y not in orbit:
                        orbit.add(y)
                        queue.append(y)
        orbits.append(frozenset(orbit))
        remaining -= orbit
    return orbits


def naive_boundary_map(genus, images):
    """Boundary image of x computed by walking the commutator word of every
    handle pair, one application at a time."""
    n = len(images[0])
    inverses = [naive_inverse(g) for g in images]

    def boundary(x):
        for i in range(genus):
            s, t = images[2 * i], images[2 * i + 1]
            si, ti = inverses[2 * i], inverses[2 * i + 1]
            x = ti[si[t[s[x]]]]
        return x

    return tuple(boundary(x) for x in range(n))


def naive_cover_shape(genus, images):
    """(components, boundary circles, total genus) of the unbranched cover
    with the given monodromy images, from first principles."""
    n = len(images[0])
    m = len(naive_orbits(list(images), n))
    k = len(naive_cycles(naive_boundary_map(genus, images)))
    chi = n * (1 - 2 * genus)
    two_genus = 2 * m - k - chi
    assert two_genus % 2 == 0
    return m, k, two_genus // 2


def naive_word_permutation(letters, strands):
    """Strand permutation of a braid word, by composing transposition maps."""
    current = tuple(range(strands))
    for letter in letters:
        i = abs(letter) - 1
        swap = list(range(strands))
        swap[i], swap[i + 1] = i + 1, i
        current = tuple(swap[x] for x in current)
    return current
