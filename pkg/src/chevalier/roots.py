"""Finite root systems generated from a Cartan matrix.

Roots are integer coefficient vectors over the simple roots.  They are
indexed 1..2N: positives first in increasing height (descending
lexicographic order inside one height), then ``root[N+k] = -root[k]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .cartan import CartanMatrix, NotFiniteType, components, require_finite, validate


class NotARoot(ValueError):
    pass


RootRef = Union[int, Sequence[int]]

MAX_COEFFICIENT = 6  # largest coefficient of any highest root


def _refl(a: CartanMatrix, i: int, r: Sequence[int]) -> tuple[int, ...]:
    """``s_i(r) = r - (sum_j a_ij r_j) alpha_i`` with 0-based ``i``."""
    row = a.entries[i]
    c = sum(row[j] * r[j] for j in range(len(r)))
    out = list(r)
    out[i] -= c
    return tuple(out)


def positive_roots_by_orbit(a: CartanMatrix) -> list[tuple[int, ...]]:
    """Orbit closure of the simple roots, sorted by height then reverse-lex."""
    n = a.rank
    blocks = len(components(a))
    limit = 240 * blocks + n * n
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = list(simple)
    seen = set(found)
    k = 0
    while k < len(found):
        r = found[k]
        for i in range(n):
            if r == simple[i]:
                continue
            s = _refl(a, i, r)
            if s not in seen:
                if max(s) > MAX_COEFFICIENT or len(found) >= limit:
                    raise NotFiniteType("root generation does not terminate")
                seen.add(s)
                found.append(s)
        k += 1
    found.sort(reverse=True)
    found.sort(key=sum)
    return found


@dataclass(frozen=True)
class RootSystem:
    """Roots of a finite-type Cartan matrix with all derived tables."""

    cartan: CartanMatrix
    roots: tuple[tuple[int, ...], ...]
    N: int
    heights: tuple[int, ...]
    sums: tuple[tuple[int, ...], ...]        # sums[j-1][k-1] = index of root j + root k, or 0
    pstring: tuple[tuple[int, ...], ...]     # pstring[i-1][k-1] = p_{i, root k}
    qstring: tuple[tuple[int, ...], ...]
    long: tuple[bool, ...]
    block_of: tuple[int, ...]                # 0-based block number of each root
    blocks: tuple[tuple[int, ...], ...]      # 1-based vertices of each block
    block_e: tuple[int, ...]
    e: int
    highest: tuple[int, ...]                 # per block
    highest_short: tuple[int | None, ...]
    _index: dict

    # -- lookup -----------------------------------------------------------
    @property
    def rank(self) -> int:
        return self.cartan.rank

    def __len__(self) -> int:
        return 2 * self.N

    def index(self, ref: RootRef) -> int:
        """1-based index of a root given by index or coefficient tuple."""
        if isinstance(ref, int):
            if not 1 <= ref <= 2 * self.N:
                raise NotARoot(f"root index {ref} out of range")
            return ref
        k = self._index.get(tuple(ref))
        if k is None:
            raise NotARoot(f"{list(ref)} is not a root")
        return k

    def find(self, coeffs: Sequence[int]) -> int:
        """Index of ``coeffs`` or 0 when it is not a root."""
        return self._index.get(tuple(coeffs), 0)

    def coeffs(self, ref: RootRef) -> tuple[int, ...]:
        return self.roots[self.index(ref) - 1]

    def height(self, ref: RootRef) -> int:
        return self.heights[self.index(ref) - 1]

    def is_positive(self, ref: RootRef) -> bool:
        return self.index(ref) <= self.N

    def negative(self, ref: RootRef) -> int:
        k = self.index(ref)
        return k + self.N if k <= self.N else k - self.N

    def simple(self, i: int) -> int:
        return i

    def root_sum(self, a: RootRef, b: RootRef) -> int:
        return self.sums[self.index(a) - 1][self.index(b) - 1]

    def is_long(self, ref: RootRef) -> bool:
        return self.long[self.index(ref) - 1]

    def short_indices(self) -> list[int]:
        return [k + 1 for k, lg in enumerate(self.long) if not lg]

    # -- root operations ----------------------------------------------------
    def refl(self, i: int, r: RootRef) -> tuple[int, ...]:
        return _refl(self.cartan, i - 1, self.coeffs(r))

    def refl_index(self, i: int, r: RootRef) -> int:
        return self._index[self.refl(i, r)]

    def string_pq(self, i: int, r: RootRef) -> tuple[int, int]:
        k = self.index(r) - 1
        return self.pstring[i - 1][k], self.qstring[i - 1][k]

    def coroot_coeffs(self, r: RootRef) -> tuple[int, ...]:
        """``h_alpha = sum n_i^vee h_i``."""
        k = self.index(r) - 1
        lengths = self._length_weights()
        la = lengths[k]
        out = []
        for i, c in enumerate(self.roots[k]):
            v = Fraction(lengths[i] * c, la)
            if v.denominator != 1:
                raise ArithmeticError("non-integral coroot coefficient")  # pragma: no cover
            out.append(int(v))
        return tuple(out)

    def _length_weights(self) -> list[int]:
        return [self.block_e[self.block_of[k]] if self.long[k] else 1 for k in range(2 * self.N)]

    def simple_pairing(self, i: int, r: RootRef) -> int:
        """``<alpha_i^vee, r> = sum_j a_ij r_j``."""
        row = self.cartan.entries[i - 1]
        return sum(x * y for x, y in zip(row, self.coeffs(r)))

    def pairing(self, alpha: RootRef, beta: RootRef) -> int:
        """``beta(h_alpha)``."""
        cv = self.coroot_coeffs(alpha)
        return sum(c * self.simple_pairing(i + 1, beta) for i, c in enumerate(cv) if c)

    def weight_of_root(self, r: RootRef) -> tuple[int, ...]:
        """Fundamental-weight coordinates ``m_i = <alpha_i^vee, r>``."""
        return tuple(self.simple_pairing(i, r) for i in range(1, self.rank + 1))

    def highest_root(self, block: int = 0) -> int:
        return self.highest[block]

    def highest_short_root(self, block: int = 0) -> int | None:
        return self.highest_short[block]

    def to_json(self) -> dict:
        return {"N": self.N, "roots": [list(r) for r in self.roots[: self.N]],
                "short": self.short_indices(),
                "highest": self.highest[0] if len(self.highest) == 1 else list(self.highest)}


def generate(a) -> RootSystem:
    """Build the root system of a finite-type (possibly decomposable) matrix."""
    a = validate(a)
    require_finite(a)
    n = a.rank
    pos = positive_roots_by_orbit(a)
    N = len(pos)
    roots = tuple(pos) + tuple(tuple(-x for x in r) for r in pos)
    index = {r: k + 1 for k, r in enumerate(roots)}
    heights = tuple(sum(r) for r in roots)

    sums = []
    for r in roots:
        row = []
        for s in roots:
            row.append(index.get(tuple(x + y for x, y in zip(r, s)), 0))
        sums.append(tuple(row))

    pstring, qstring = [], []
    for i in range(n):
        ps, qs = [], []
        for r in roots:
            p = 0
            while tuple(x + (p + 1) * (j == i) for j, x in enumerate(r)) in index:
                p += 1
            q = 0
            while tuple(x - (q + 1) * (j == i) for j, x in enumerate(r)) in index:
                q += 1
            # extended convention: q_{i,alpha_i} = p_{i,-alpha_i} = 2
            if r[i] in (1, -1) and sum(map(abs, r)) == 1:
                if r[i] == 1:
                    q = 2
                else:
                    p = 2
            ps.append(p)
            qs.append(q)
        pstring.append(tuple(ps))
        qstring.append(tuple(qs))

    blocks = [tuple(c) for c in components(a)]
    vblock = {}
    for b, comp in enumerate(blocks):
        for v in comp:
            vblock[v - 1] = b
    block_of = tuple(vblock[next(i for i, x in enumerate(r) if x)] for r in roots)

    # Length classes: W-orbits of the simple roots.
    orbit_of = {}
    for i in range(n):
        start = roots[i]
        if start in orbit_of:
            continue
        orbit_of[start] = i
        queue = [start]
        while queue:
            r = queue.pop()
            for j in range(n):
                s = _refl(a, j, r)
                if s not in orbit_of:
                    orbit_of[s] = i
                    queue.append(s)
    long_simple = [True] * n
    block_e = []
    for comp in blocks:
        e = 1
        for i in comp:
            for j in comp:
                if i != j:
                    aij, aji = a.a(i, j), a.a(j, i)
                    e = max(e, aij * aji)
                    if aij * aji > 1 and abs(aji) < abs(aij):
                        long_simple[i - 1] = False
        block_e.append(e)
    # every simple root in the orbit of a short simple root is short
    short_orbits = {orbit_of[roots[i]] for i in range(n) if not long_simple[i]}
    long = tuple(orbit_of[r] not in short_orbits for r in roots)

    highest, highest_short = [], []
    for b in range(len(blocks)):
        ks = [k for k in range(N) if block_of[k] == b]
        top = max(ks, key=lambda k: heights[k])
        highest.append(top + 1)
        shorts = [k for k in ks if not long[k]]
        highest_short.append(max(shorts, key=lambda k: heights[k]) + 1 if shorts else None)

    return RootSystem(
        cartan=a, roots=roots, N=N, heights=heights, sums=tuple(sums),
        pstring=tuple(pstring), qstring=tuple(qstring), long=long,
        block_of=block_of, blocks=tuple(blocks), block_e=tuple(block_e),
        e=max(block_e), highest=tuple(highest), highest_short=tuple(highest_short),
        _index=index,
    )
