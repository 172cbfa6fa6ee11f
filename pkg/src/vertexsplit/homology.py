"""The independent homological oracle.

Reduced simplicial homology over an exact field feeds two routes to graded
Betti numbers: the subset-restriction formula for square-free ideals
(through the Stanley-Reisner complex) and the upper-Koszul route for
arbitrary monomial ideals.  Everything downstream (linear resolutions,
Cohen-Macaulayness, regularity, projective dimension) reads off these
tables.  All ranks are exact: fraction-free integer elimination over the
rationals, modular elimination over prime fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernel
from .betti import BettiTable, make_table
from .complexes import (SimplicialComplex, complex_of_ideal, dual_facet_ideal,
                        restrict_masks)
from .monomials import MonomialIdeal, degree, is_squarefree


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldChoice:
    """The coefficient field: the rationals (char 0) or a prime field."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"{self.char} is not prime")

    @classmethod
    def rationals(cls) -> "FieldChoice":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldChoice":
        return cls(p)

    @property
    def label(self) -> str:
        return "QQ" if self.char == 0 else f"GF({self.char})"


QQ = FieldChoice.rationals()


def parse_field(spec) -> FieldChoice:
    """Accept 'q', 'p=7', a prime integer, or a FieldChoice."""
    if spec is None:
        return QQ
    if isinstance(spec, FieldChoice):
        return spec
    if isinstance(spec, int):
        return QQ if spec == 0 else FieldChoice.prime(spec)
    text = str(spec).strip().lower()
    if text in ("q", "qq", "0", "rationals"):
        return QQ
    if text.startswith("p="):
        return FieldChoice.prime(int(text[2:]))
    return FieldChoice.prime(int(text))


def reduced_homology_dims(delta: SimplicialComplex,
                          field: FieldChoice = QQ) -> dict[int, int]:
    """Dimensions of the reduced homology of delta, indexed -1 .. dim."""
    dims = kernel.homology_dims(delta.sorted_facets(), field.char)
    return {t - 1: dims[t] for t in range(len(dims))}


def _iter_subsets_by_cardinality(n: int):
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield size, mask


def hochster_betti(delta: SimplicialComplex,
                   field: FieldChoice = QQ) -> BettiTable:
    """Betti table of the Stanley-Reisner ideal of delta.

    beta_{i,j} is the sum over the cardinality-j vertex subsets W of the
    reduced homology of the restriction to W in degree j - i - 2.
    Restrictions that are cones are skipped (they are acyclic).
    """
    n = delta.ground_size
    full = (1 << n) - 1
    if full in delta.facets:
        raise ValueError("the full simplex has zero Stanley-Reisner ideal")
    p = field.char
    entries: dict[tuple[int, int], int] = {}
    for j, w in _iter_subsets_by_cardinality(n):
        facets = restrict_masks(delta.facets, w)
        common = ~0
        for f in facets:
            common &= f
        if common:
            continue
        dims = kernel.homology_dims(sorted(facets), p)
        for t, d in enumerate(dims):
            i = j - t - 1
            if d and i >= 0:
                key = (i, j)
                entries[key] = entries.get(key, 0) + d
    return make_table(entries, "ideal")


def koszul_betti(I: MonomialIdeal, field: FieldChoice = QQ) -> BettiTable:
    """Betti table of a nonzero monomial ideal via its upper Koszul complexes."""
    if I.is_zero:
        raise ValueError("the zero ideal has an empty resolution; no table")
    entries = kernel.koszul_table(I.sorted_gens(), field.char)
    return make_table(entries, "ideal")


_table_cache: dict[tuple, BettiTable] = {}


def clear_table_cache() -> None:
    """Drop memoized Betti tables but keep the homology caches warm."""
    _table_cache.clear()


def clear_caches() -> None:
    _table_cache.clear()
    kernel.clear_caches()


def betti_table(I: MonomialIdeal, field: FieldChoice = QQ) -> BettiTable:
    """Canonical oracle table of an ideal (memoized).

    Square-free ideals go through the subset-restriction formula, general
    monomial ideals through the upper Koszul route; the two agree on the
    overlap and tests enforce that.  The zero ideal has the empty table.
    """
    if I.is_zero:
        return make_table({}, "ideal")
    key = (I.num_vars, tuple(I.sorted_gens()), field.char)
    hit = _table_cache.get(key)
    if hit is None:
        if I.is_unit:
            hit = make_table({(0, 0): 1}, "ideal")
        elif is_squarefree(I):
            hit = hochster_betti(complex_of_ideal(I), field)
        else:
            hit = koszul_betti(I, field)
        _table_cache[key] = hit
    return hit


def has_linear_resolution(I: MonomialIdeal, field: FieldChoice = QQ) -> bool:
    """True iff I is generated in one degree d and beta_{i,j} = 0 off j = i+d."""
    if I.is_zero:
        raise ValueError("linear resolution is undefined for the zero ideal")
    degrees = {degree(g) for g in I.gens}
    if len(degrees) > 1:
        return False
    d = degrees.pop()
    table = betti_table(I, field)
    return all(j == i + d for (i, j) in table.entries)


def is_cohen_macaulay(delta: SimplicialComplex,
                      field: FieldChoice = QQ) -> bool:
    """Cohen-Macaulayness via linearity of the facet-complement ideal."""
    full = (1 << delta.ground_size) - 1
    if full in delta.facets:
        return True
    return has_linear_resolution(dual_facet_ideal(delta), field)
