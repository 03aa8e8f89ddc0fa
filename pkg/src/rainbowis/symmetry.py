"""Automorphisms of degree-two graphs and canonical keys of collections.

A collection over ``I_n(G)`` is stored as a sorted tuple of indices into the
canonical enumeration of ``I_n(G)``. Its canonical key is the least such tuple
over the images under the automorphism group (for ``C_t`` the dihedral group of
order ``2t``). Any subset of the group that contains the identity still yields
sound keys, only with less reduction, which is what ``limit`` relies on.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import islice, permutations, product
from typing import Iterator, Sequence

from .graph import Degree2Graph, iter_bits

CanonicalKey = tuple[int, ...]

GROUP_LIMIT = 20000


def _component_maps(kind: str, length: int) -> list[tuple[int, ...]]:
    if kind == "C":
        maps = [tuple((r + i) % length for i in range(length)) for r in range(length)]
        maps += [tuple((r - i) % length for i in range(length)) for r in range(length)]
        return maps
    ident = tuple(range(length))
    return [ident] if length == 1 else [ident, ident[::-1]]


def automorphisms(g: Degree2Graph, limit: int = GROUP_LIMIT) -> list[tuple[int, ...]]:
    """Vertex permutations (as index images), identity first, at most ``limit`` of them."""
    comps = g.components
    local = [_component_maps(c.kind, c.length) for c in comps]
    classes: dict[tuple[str, int], list[int]] = defaultdict(list)
    for k, c in enumerate(comps):
        classes[(c.kind, c.length)].append(k)
    class_perms = [list(permutations(members)) for members in classes.values()]
    class_members = list(classes.values())

    def gen() -> Iterator[tuple[int, ...]]:
        for swaps in product(*class_perms):
            target = list(range(len(comps)))
            for members, perm in zip(class_members, swaps):
                for src, dst in zip(members, perm):
                    target[src] = dst
            for maps in product(*local):
                image = [0] * g.vertex_count
                for k, (c, mp) in enumerate(zip(comps, maps)):
                    o, o2 = g.offsets[k], g.offsets[target[k]]
                    for i in range(c.length):
                        image[o + i] = o2 + mp[i]
                yield tuple(image)

    return list(islice(gen(), limit))


def set_permutations(sets: Sequence[int], autos: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """For each automorphism, the induced permutation of the indices of ``sets``."""
    index = {s: k for k, s in enumerate(sets)}
    out = []
    for img in autos:
        perm = []
        for s in sets:
            t = 0
            for i in iter_bits(s):
                t |= 1 << img[i]
            perm.append(index[t])
        out.append(tuple(perm))
    return out


def canonical_key(key: Sequence[int], perms: Sequence[Sequence[int]]) -> CanonicalKey:
    """Least sorted image of the multiset ``key`` under ``perms``."""
    best = tuple(sorted(key))
    for p in perms:
        cand = tuple(sorted([p[i] for i in key]))
        if cand < best:
            best = cand
    return best
