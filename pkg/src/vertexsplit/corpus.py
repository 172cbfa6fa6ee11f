"""Corpus builders: exhaustive enumeration of small complexes, ideals and
graphs, and seeded random generators.  Random splittable ideals are built
by sampling certificate trees, so their labels are true by construction;
every sample is replayed through the validator before being returned.
"""

from __future__ import annotations

from itertools import combinations
from random import Random
from typing import Iterator

from .complexes import SimplicialComplex, empty_complex, from_facet_masks
from .graphs import Graph
from .monomials import (Monomial, MonomialIdeal, colon, intersect,
                        mono_from_mask, mono_mul)
from .splitting import (SplitLeaf, SplitNode, SplitTree, _rebuild,
                        validate_split_tree)


def _antichain_families(n: int) -> Iterator[tuple[int, ...]]:
    """Nonempty antichains of nonempty subsets of {0..n-1}, as mask tuples."""
    masks = list(range(1, 1 << n))

    def extend(start: int, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for idx in range(start, len(masks)):
            m = masks[idx]
            if any(m & c == m or m & c == c for c in chosen):
                continue
            fresh = chosen + (m,)
            yield fresh
            yield from extend(idx + 1, fresh)

    yield from extend(0, ())


def all_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on ground set {0..n-1} (the empty-face
    complex first, then all facet antichains of nonempty faces)."""
    yield empty_complex(n)
    for facets in _antichain_families(n):
        yield SimplicialComplex(n, frozenset(facets))


def all_squarefree_ideals(n: int) -> Iterator[MonomialIdeal]:
    """Every nonzero, non-unit square-free monomial ideal in n variables."""
    for supports in _antichain_families(n):
        yield MonomialIdeal(
            n, frozenset(mono_from_mask(m, n) for m in supports))


def all_graphs(n: int) -> Iterator[Graph]:
    slots = list(combinations(range(n), 2))
    for bits in range(1 << len(slots)):
        edges = frozenset(e for k, e in enumerate(slots) if bits >> k & 1)
        yield Graph(n, edges)


def random_graph(n: int, p: float, rng: Random) -> Graph:
    edges = frozenset(e for e in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, edges)


def random_complex(n: int, max_facets: int, rng: Random) -> SimplicialComplex:
    count = rng.randint(1, max_facets)
    masks = [rng.randint(1, (1 << n) - 1) for _ in range(count)]
    return from_facet_masks(masks, n)


def _random_monomial(variables: tuple[int, ...], n: int, rng: Random,
                     allow_unit: bool = True) -> Monomial:
    exps = [0] * n
    for v in variables:
        if rng.random() < 0.45:
            exps[v] = 2 if rng.random() < 0.15 else 1
    if not allow_unit and not any(exps):
        if variables:
            exps[rng.choice(variables)] = 1
    return tuple(exps)


def _avoiding(I: MonomialIdeal, y: int) -> MonomialIdeal:
    """Subideal spanned by the generators of I not involving x_y."""
    return MonomialIdeal(I.num_vars, frozenset(g for g in I.gens if g[y] == 0))


def _sample_contained(variables: tuple[int, ...], target: MonomialIdeal,
                      rng: Random, depth: int) -> SplitTree:
    """Certificate for a random splittable ideal contained in target."""
    if target.is_zero or rng.random() < 0.12:
        return SplitLeaf(None)
    if depth <= 0 or not variables or rng.random() < 0.33:
        if not variables:
            return SplitLeaf(None)
        # a unit multiplier would duplicate a generator of the enclosing
        # factor ideal, so insist on a proper multiple
        base = rng.choice(sorted(target.gens))
        extra = _random_monomial(variables, target.num_vars, rng,
                                 allow_unit=False)
        return SplitLeaf(mono_mul(base, extra))
    y = rng.choice(variables)
    rest = tuple(v for v in variables if v != y)
    # anything inside (target : y) and free of y can be multiplied by y and
    # stay inside target
    quotient = _avoiding(
        colon(target, tuple(1 if k == y else 0
                            for k in range(target.num_vars))), y)
    left = _sample_contained(rest, quotient, rng, depth - 1)
    left_gens = _rebuild(left, target.num_vars)
    if not left_gens:
        return SplitLeaf(None)
    left_ideal = MonomialIdeal(target.num_vars, left_gens)
    right = _sample_contained(
        rest, _avoiding(intersect(left_ideal, target), y), rng, depth - 1)
    return SplitNode(y, left, right)


def _sample_split(variables: tuple[int, ...], n: int, rng: Random,
                  depth: int) -> SplitTree:
    """Certificate for a random nonzero splittable ideal."""
    if depth <= 0 or not variables or rng.random() < 0.1:
        return SplitLeaf(_random_monomial(variables, n, rng))
    x = rng.choice(variables)
    rest = tuple(v for v in variables if v != x)
    left = _sample_split(rest, n, rng, depth - 1)
    left_ideal = MonomialIdeal(n, _rebuild(left, n))
    right = _sample_contained(rest, left_ideal, rng, depth - 1)
    return SplitNode(x, left, right)


def random_splittable_ideal(
        n: int, rng: Random, max_gens: int = 12,
        max_tries: int = 200) -> tuple[MonomialIdeal, SplitTree]:
    """A random vertex splittable ideal with its certificate.

    Certificate trees are sampled directly; samples whose rebuilt
    generators fail minimality (or exceed max_gens) are rejected and
    redrawn, so the returned pair always validates.
    """
    variables = tuple(range(n))
    for _ in range(max_tries):
        try:
            tree = _sample_split(variables, n, rng, depth=n)
            gens = _rebuild(tree, n)
        except ValueError:
            continue
        if not gens or len(gens) > max_gens:
            continue
        ideal = MonomialIdeal(n, gens)
        if validate_split_tree(tree, ideal):
            return ideal, tree
    raise RuntimeError("random splittable sampling failed to converge")
