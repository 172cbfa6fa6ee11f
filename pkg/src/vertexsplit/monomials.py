"""Monomials and monomial ideals with exact ideal arithmetic.

A monomial is a tuple of non-negative integer exponents of fixed length n
(the number of variables); the unit monomial is the all-zero tuple.  A
monomial ideal is stored by its unique minimal generating set, which is an
antichain under divisibility.  The zero ideal has no generators and the unit
ideal is generated by the unit monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Monomial = tuple[int, ...]

# exponents above this are rejected; the algorithms here only ever meet
# small exponents and the compiled kernel works in 64-bit integers
MAX_EXPONENT = 2**20


def unit_monomial(n: int) -> Monomial:
    return (0,) * n


def degree(m: Monomial) -> int:
    return sum(m)


def is_squarefree_monomial(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def support_mask(m: Monomial) -> int:
    """Bitmask of the variables occurring in m."""
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b, i.e. every exponent of a is at most b's."""
    if len(a) != len(b):
        raise ValueError(f"exponent length mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient a/b; requires b | a."""
    if not divides(b, a):
        raise ValueError("inexact monomial division")
    return tuple(x - y for x, y in zip(a, b))


def variable(n: int, i: int) -> Monomial:
    """The monomial x_i in n variables."""
    if not 0 <= i < n:
        raise ValueError(f"variable index {i} out of range for {n} variables")
    return tuple(1 if k == i else 0 for k in range(n))


def mono_from_mask(mask: int, n: int) -> Monomial:
    """Square-free monomial with support given by a bitmask."""
    return tuple(1 if mask >> i & 1 else 0 for i in range(n))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, canonically stored by its minimal generators.

    Build instances through :func:`minimalize` (or the convenience
    constructors below) so the antichain invariant holds.
    """

    num_vars: int
    gens: frozenset[Monomial]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return unit_monomial(self.num_vars) in self.gens

    @property
    def is_principal(self) -> bool:
        return len(self.gens) <= 1

    def sorted_gens(self) -> list[Monomial]:
        return sorted(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.sorted_gens())
        return f"MonomialIdeal({self.num_vars}, [{gens}])"


def minimalize(gens: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Ideal generated by gens, reduced to the divisibility antichain."""
    pool = set()
    for g in gens:
        g = tuple(g)
        if len(g) != n:
            raise ValueError(f"expected {n} exponents, got {len(g)}")
        if any(e < 0 or e > MAX_EXPONENT for e in g):
            raise ValueError(f"exponent out of range in {g}")
        pool.add(g)
    minimal = []
    for g in sorted(pool, key=lambda m: (degree(m), m)):
        if not any(divides(h, g) for h in minimal):
            minimal.append(g)
    return MonomialIdeal(n, frozenset(minimal))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, frozenset())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, frozenset({unit_monomial(n)}))


def principal_ideal(m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(len(m), frozenset({tuple(m)}))


def variable_ideal(n: int, indices: Iterable[int]) -> MonomialIdeal:
    """Ideal generated by the listed variables."""
    return minimalize((variable(n, i) for i in indices), n)


def _check_same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.num_vars != b.num_vars:
        raise ValueError(f"ideals live in different rings: "
                         f"{a.num_vars} vs {b.num_vars} variables")


def colon(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The colon ideal (I : m)."""
    if len(m) != I.num_vars:
        raise ValueError("monomial length does not match the ideal's ring")
    return minimalize((mono_div(g, mono_gcd(g, m)) for g in I.gens), I.num_vars)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The intersection ideal, generated by pairwise lcms."""
    _check_same_ring(I, J)
    return minimalize(
        (mono_lcm(g, h) for g in I.gens for h in J.gens), I.num_vars)


def is_subideal(A: MonomialIdeal, B: MonomialIdeal) -> bool:
    """True iff A is contained in B (every generator of A lies in B)."""
    _check_same_ring(A, B)
    return all(any(divides(h, g) for h in B.gens) for g in A.gens)


def x_partition(I: MonomialIdeal, x: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Split the generators of I into (divisible by x_x, the rest)."""
    if I.is_zero:
        raise ValueError("cannot partition the zero ideal")
    if not 0 <= x < I.num_vars:
        raise ValueError(f"variable index {x} out of range")
    div = frozenset(g for g in I.gens if g[x] > 0)
    rest = I.gens - div
    return MonomialIdeal(I.num_vars, div), MonomialIdeal(I.num_vars, rest)


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(is_squarefree_monomial(g) for g in I.gens)


def multiply(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The ideal m*I.

    Multiplication by a fixed monomial preserves the divisibility
    antichain, so no re-minimalization is needed.
    """
    if len(m) != I.num_vars:
        raise ValueError("monomial length does not match the ideal's ring")
    return MonomialIdeal(I.num_vars, frozenset(mono_mul(m, g) for g in I.gens))


def alexander_dual_ideal(I: MonomialIdeal) -> MonomialIdeal:
    """Alexander dual of a square-free ideal: the intersection of the
    variable primes of its generator supports."""
    if not is_squarefree(I):
        raise ValueError("Alexander dual is only defined for square-free ideals")
    n = I.num_vars
    if I.is_unit:
        return zero_ideal(n)
    dual = unit_ideal(n)
    for g in I.sorted_gens():
        prime = variable_ideal(n, (i for i, e in enumerate(g) if e))
        dual = intersect(dual, prime)
    return dual
