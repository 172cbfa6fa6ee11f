"""Pure Python kernel: exact matrix ranks, reduced simplicial homology and
the fine-graded Betti table of a monomial ideal from its upper Koszul
complexes.

This is the fallback twin of the compiled kernel in `_kernel_c`; both
expose the same four entry points and must produce identical results.
Matrix work is fraction-free over the integers (characteristic zero) or
modular (prime fields), so every rank is exact.
"""

from __future__ import annotations

BACKEND_NAME = "python"

_hom_cache: dict[tuple, tuple[int, ...]] = {}
_CACHE_LIMIT = 1 << 21


def clear_caches() -> None:
    _hom_cache.clear()


def rank_int(rows) -> int:
    """Rank over the rationals via Bareiss fraction-free elimination."""
    a = [list(map(int, row)) for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    prev = 1
    while r < m and r < n:
        pi = pj = -1
        for i in range(r, m):
            row = a[i]
            for j in range(r, n):
                if row[j]:
                    pi, pj = i, j
                    break
            if pi >= 0:
                break
        if pi < 0:
            break
        if pi != r:
            a[pi], a[r] = a[r], a[pi]
        if pj != r:
            for row in a:
                row[r], row[pj] = row[pj], row[r]
        piv = a[r][r]
        rowr = a[r]
        for i in range(r + 1, m):
            rowi = a[i]
            lead = rowi[r]
            # Sylvester identity: the division by the previous pivot is exact
            for j in range(r + 1, n):
                rowi[j] = (rowi[j] * piv - lead * rowr[j]) // prev
            rowi[r] = 0
        prev = piv
        r += 1
    return r


def rank_mod(rows, p: int) -> int:
    """Rank over the prime field GF(p)."""
    a = [[int(x) % p for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    r = 0
    for c in range(n):
        pivot = -1
        for i in range(r, m):
            if a[i][c]:
                pivot = i
                break
        if pivot < 0:
            continue
        a[pivot], a[r] = a[r], a[pivot]
        inv = pow(a[r][c], p - 2, p)
        rowr = a[r]
        for i in range(r + 1, m):
            rowi = a[i]
            if rowi[c]:
                factor = rowi[c] * inv % p
                for j in range(c, n):
                    rowi[j] = (rowi[j] - factor * rowr[j]) % p
        r += 1
        if r == m:
            break
    return r


def _canonical_key(facets, p: int) -> tuple:
    """Cache key: facet masks with the vertex support compressed."""
    support = 0
    for f in facets:
        support |= f
    place = {}
    k = 0
    v = 0
    s = support
    while s:
        if s & 1:
            place[v] = k
            k += 1
        s >>= 1
        v += 1
    remapped = []
    for f in facets:
        mask = 0
        v = 0
        while f:
            if f & 1:
                mask |= 1 << place[v]
            f >>= 1
            v += 1
        remapped.append(mask)
    return (bytes(), p) if not remapped else (
        b"".join(m.to_bytes(8, "little") for m in sorted(set(remapped))), p)


def _rank(rows, p: int) -> int:
    return rank_int(rows) if p == 0 else rank_mod(rows, p)


def _homology_from_masks(facets: list[int], p: int) -> tuple[int, ...]:
    """Reduced homology dimensions; entry t is dim of degree t-1 homology."""
    faces = set()
    stack = list(facets)
    while stack:
        f = stack.pop()
        if f in faces:
            continue
        faces.add(f)
        g = f
        while g:
            bit = g & -g
            stack.append(f & ~bit)
            g &= g - 1
    top = max(f.bit_count() for f in facets)
    levels = [[] for _ in range(top + 1)]
    for f in faces:
        levels[f.bit_count()].append(f)
    for level in levels:
        level.sort()
    ranks = [0] * (top + 2)
    for t in range(1, top + 1):
        below = {mask: idx for idx, mask in enumerate(levels[t - 1])}
        matrix = []
        for f in levels[t]:
            col = [0] * len(below)
            sign = 1
            g = f
            while g:
                bit = g & -g
                col[below[f & ~bit]] = sign
                sign = -sign
                g &= g - 1
            matrix.append(col)
        # columns were built as rows; rank is transpose-invariant
        ranks[t] = _rank(matrix, p)
    return tuple(len(levels[t]) - ranks[t] - ranks[t + 1]
                 for t in range(top + 1))


def homology_dims(facets, p: int) -> tuple[int, ...]:
    """Reduced homology over QQ (p=0) or GF(p) of the complex generated by
    the given facet bitmasks.  Entry t is the dimension in degree t-1."""
    facets = list(facets)
    if not facets:
        raise ValueError("the void complex has no homology")
    key = _canonical_key(facets, p)
    hit = _hom_cache.get(key)
    if hit is None:
        if len(_hom_cache) > _CACHE_LIMIT:
            _hom_cache.clear()
        hit = _homology_from_masks(facets, p)
        _hom_cache[key] = hit
    return hit


def _lcm_lattice(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    lattice = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for b in frontier:
            for g in gens:
                join = tuple(x if x >= y else y for x, y in zip(b, g))
                if join not in lattice:
                    lattice.add(join)
                    fresh.append(join)
        frontier = fresh
    return sorted(lattice)


def koszul_table(exponents, p: int) -> dict[tuple[int, int], int]:
    """Graded Betti numbers of the ideal with the given minimal generators.

    For each multidegree b in the lcm lattice of the generators, the degree
    b strand is the reduced homology of the complex whose faces are the
    square-free t with x^b / x^t in the ideal; that complex is the union of
    the simplexes on {i : b_i > g_i} over the generators g dividing x^b.
    """
    gens = [tuple(map(int, g)) for g in exponents]
    if not gens:
        return {}
    table: dict[tuple[int, int], int] = {}
    for b in _lcm_lattice(gens):
        masks = set()
        for g in gens:
            if all(ge <= be for ge, be in zip(g, b)):
                mask = 0
                for i, (ge, be) in enumerate(zip(g, b)):
                    if be > ge:
                        mask |= 1 << i
                masks.add(mask)
        facets = [mk for mk in masks
                  if not any(mk != other and mk & other == mk for other in masks)]
        common = ~0
        for mk in facets:
            common &= mk
        if common:
            continue  # the complex is a cone, hence acyclic
        dims = homology_dims(facets, p)
        j = sum(b)
        for t, d in enumerate(dims):
            if d:
                key = (t, j)
                table[key] = table.get(key, 0) + d
    return table
