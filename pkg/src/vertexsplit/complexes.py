"""Simplicial complexes, deletion/link, Stanley-Reisner correspondence,
Alexander duality, purity and big height.

A complex on ground set {0, ..., n-1} is stored by its facets (maximal
faces) as vertex bitmasks.  The complex whose only face is the empty set is
allowed and counts as a simplex; the void complex with no faces at all is
not representable, and operations that would produce it raise ValueError.
Ground sets are fixed per object; deletion and link return complexes on the
smaller ground set with vertices above the removed one shifted down.
A complex may have ghost vertices: ground-set elements lying in no face.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .monomials import (MonomialIdeal, mono_from_mask, support_mask,
                        is_squarefree, minimalize)

MAX_VERTICES = 63  # faces are stored in machine-word bitmasks


def _mask_of(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        v = int(v)
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for ground set of size {n}")
        mask |= 1 << v
    return mask


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _max_antichain(masks: Iterable[int]) -> frozenset[int]:
    """Keep only the masks that are maximal under inclusion."""
    pool = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    maximal: list[int] = []
    for m in pool:
        if not any(m & big == m for big in maximal):
            maximal.append(m)
    return frozenset(maximal)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facet bitmasks."""

    ground_size: int
    facets: frozenset[int]

    def __post_init__(self):
        if not self.facets:
            raise ValueError("the void complex is not representable")
        if self.ground_size > MAX_VERTICES:
            raise ValueError(f"ground sets are limited to {MAX_VERTICES} vertices")

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def vertex_mask(self) -> int:
        """Mask of the actual vertices (ground-set elements in some face)."""
        mask = 0
        for f in self.facets:
            mask |= f
        return mask

    def sorted_facets(self) -> list[int]:
        return sorted(self.facets)

    def facet_sets(self) -> list[frozenset[int]]:
        return [mask_to_set(f) for f in self.sorted_facets()]

    def has_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def is_vertex(self, v: int) -> bool:
        return bool(self.vertex_mask >> v & 1)

    def __repr__(self) -> str:
        facets = ", ".join("{" + ",".join(map(str, sorted(s))) + "}"
                           for s in self.facet_sets())
        return f"SimplicialComplex({self.ground_size}, <{facets}>)"


def from_facets(subsets: Iterable[Iterable[int]], n: int) -> SimplicialComplex:
    """Complex generated by the given faces, reduced to the facet antichain."""
    masks = [_mask_of(s, n) for s in subsets]
    if not masks:
        raise ValueError("a complex needs at least one face; got none")
    return SimplicialComplex(n, _max_antichain(masks))


def from_facet_masks(masks: Iterable[int], n: int) -> SimplicialComplex:
    return SimplicialComplex(n, _max_antichain(masks))


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on {0, ..., n-1}."""
    return SimplicialComplex(n, frozenset({(1 << n) - 1}))


def empty_complex(n: int) -> SimplicialComplex:
    """The complex whose only face is the empty set."""
    return SimplicialComplex(n, frozenset({0}))


def is_simplex(delta: SimplicialComplex) -> bool:
    return len(delta.facets) == 1


def _drop_vertex(mask: int, x: int) -> int:
    """Reindex a mask on ground set n to ground set n-1 by removing slot x."""
    low = mask & ((1 << x) - 1)
    high = mask >> (x + 1)
    return low | high << x


def deletion(delta: SimplicialComplex, x: int) -> SimplicialComplex:
    """Faces of delta avoiding x, as a complex on the ground set minus x."""
    if not 0 <= x < delta.ground_size:
        raise ValueError(f"vertex {x} out of range")
    bit = 1 << x
    kept = [_drop_vertex(f & ~bit, x) for f in delta.facets]
    return SimplicialComplex(delta.ground_size - 1, _max_antichain(kept))


def link(delta: SimplicialComplex, x: int) -> SimplicialComplex:
    """Link of x: faces adjoinable to x, with x removed; x must be a vertex."""
    if not 0 <= x < delta.ground_size:
        raise ValueError(f"vertex {x} out of range")
    if not delta.is_vertex(x):
        raise ValueError(f"link undefined: {x} is not a vertex of the complex")
    bit = 1 << x
    kept = [_drop_vertex(f & ~bit, x) for f in delta.facets if f & bit]
    return SimplicialComplex(delta.ground_size - 1, _max_antichain(kept))


def restrict_masks(facets: Iterable[int], w_mask: int) -> frozenset[int]:
    """Facet masks of the restriction to W, still in ambient coordinates."""
    return _max_antichain(f & w_mask for f in facets)


def induced_subcomplex(delta: SimplicialComplex, w_mask: int) -> SimplicialComplex:
    """Faces of delta contained in W, relabeled as a complex on W."""
    if w_mask >> delta.ground_size:
        raise ValueError("restriction set is not contained in the ground set")
    verts = [v for v in range(delta.ground_size) if w_mask >> v & 1]
    place = {v: i for i, v in enumerate(verts)}
    relabeled = []
    for f in restrict_masks(delta.facets, w_mask):
        mask = 0
        for v in range(delta.ground_size):
            if f >> v & 1:
                mask |= 1 << place[v]
        relabeled.append(mask)
    return SimplicialComplex(len(verts), frozenset(relabeled))


def is_pure(delta: SimplicialComplex) -> bool:
    sizes = {f.bit_count() for f in delta.facets}
    return len(sizes) == 1


def bight(delta: SimplicialComplex) -> int:
    """Maximum facet-complement size, relative to the declared ground set."""
    return max(delta.ground_size - f.bit_count() for f in delta.facets)


def minimal_nonfaces(delta: SimplicialComplex) -> list[int]:
    """Masks of the minimal non-faces, in increasing (cardinality, mask) order."""
    n = delta.ground_size
    out = []
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if delta.has_face(mask):
                continue
            if any(mask & small == small for small in out):
                continue
            out.append(mask)
    return out


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """The square-free ideal generated by the minimal non-faces."""
    n = delta.ground_size
    return MonomialIdeal(
        n, frozenset(mono_from_mask(m, n) for m in minimal_nonfaces(delta)))


def complex_of_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """Inverse Stanley-Reisner correspondence for a square-free ideal.

    Faces are the subsets supporting no generator; the zero ideal gives the
    full simplex.  The unit ideal corresponds to no complex and is rejected.
    """
    if not is_squarefree(I):
        raise ValueError("Stanley-Reisner complexes need a square-free ideal")
    if I.is_unit:
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    n = I.num_vars
    gen_masks = [support_mask(g) for g in I.gens]
    nonface = bytearray(1 << n)
    for g in gen_masks:
        # every superset of a generator support is a non-face
        rest = ((1 << n) - 1) & ~g
        sub = rest
        while True:
            nonface[g | sub] = 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
    facets = []
    for mask in range(1 << n):
        if nonface[mask]:
            continue
        # maximal iff adding any absent vertex makes a non-face
        if all(nonface[mask | 1 << v] for v in range(n) if not mask >> v & 1):
            facets.append(mask)
    return SimplicialComplex(n, frozenset(facets))


def alexander_dual_complex(delta: SimplicialComplex) -> SimplicialComplex:
    """Complex of complements of non-faces; undefined for the full simplex."""
    n = delta.ground_size
    full = (1 << n) - 1
    if full in delta.facets:
        raise ValueError("the Alexander dual of the full simplex is void")
    nonfaces = minimal_nonfaces(delta)
    return SimplicialComplex(n, _max_antichain(full & ~m for m in nonfaces))


def dual_facet_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the facet complements x^(F^c)."""
    n = delta.ground_size
    full = (1 << n) - 1
    return minimalize(
        (mono_from_mask(full & ~f, n) for f in delta.facets), n)
