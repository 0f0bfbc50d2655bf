"""The Weyl group as permutations of the 2N roots.

An element ``w`` is a tuple ``(j_1, ..., j_2N)`` of 1-based root indices with
``w(root[j_l]) = root[l]``.  Under this convention the product ``u*v`` is
the tuple ``(v[u_1], ..., v[u_2N])``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .roots import RootSystem


class BadGeneratorIndex(ValueError):
    pass


Word = list  # list of 1-based generator indices

_BRAID = {0: 2, 1: 3, 2: 4, 3: 6}


def _compose(p: tuple, q: tuple) -> tuple:
    """0-based permutations as maps: apply ``p`` first, then ``q``."""
    return tuple(q[x] for x in p)


def _invert(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


@dataclass(frozen=True)
class WeylGroup:
    """Weyl group of a root system, with its simple reflections precomputed."""

    rs: RootSystem
    generators: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rs: RootSystem) -> "WeylGroup":
        gens = tuple(tuple(rs.refl_index(i, k) for k in range(1, 2 * rs.N + 1))
                     for i in range(1, rs.rank + 1))
        return cls(rs, gens)

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def N(self) -> int:
        return self.rs.N

    def identity(self) -> tuple[int, ...]:
        return tuple(range(1, 2 * self.N + 1))

    def gens(self) -> list[tuple[int, ...]]:
        return list(self.generators)

    def gen(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.rank:
            raise BadGeneratorIndex(f"generator {i} outside 1..{self.rank}")
        return self.generators[i - 1]

    @staticmethod
    def mul(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        return tuple(v[i - 1] for i in u)

    @staticmethod
    def inverse(w: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(w)
        for l, j in enumerate(w, start=1):
            out[j - 1] = l
        return tuple(out)

    def apply(self, w: Sequence[int], k: int) -> int:
        """Index of ``w(root[k])``."""
        return w.index(k) + 1

    def length(self, w: Sequence[int]) -> int:
        N = self.N
        return sum(1 for j in w[:N] if j > N)

    def wordperm(self, word: Iterable[int]) -> tuple[int, ...]:
        w = self.identity()
        for i in word:
            w = self.mul(w, self.gen(i))
        return w

    def permword(self, w: Sequence[int]) -> list[int]:
        """Reduced word: peel off the smallest simple root sent negative."""
        N = self.N
        w = tuple(w)
        word = []
        while True:
            i = next((i for i in range(1, self.rank + 1) if w[i - 1] > N), None)
            if i is None:
                return word
            word.append(i)
            w = self.mul(self.gen(i), w)

    def allwords(self, maxlen: int | None = None) -> list[list[list[int]]]:
        """One reduced word per element, grouped by length.

        Breadth-first: words are extended on the right by each generator in
        turn, keeping only extensions that raise the length.
        """
        ident = self.identity()
        levels = [[[]]]
        seen = {ident}
        frontier = [(ident, [])]
        depth = 0
        while frontier and (maxlen is None or depth < maxlen):
            nxt_front, nxt_words = [], []
            for w, word in frontier:
                lw = len(word)
                for i in range(1, self.rank + 1):
                    v = self.mul(w, self.generators[i - 1])
                    if v in seen or self.length(v) != lw + 1:
                        continue
                    seen.add(v)
                    nxt_front.append((v, word + [i]))
                    nxt_words.append(word + [i])
            if not nxt_words:
                break
            levels.append(nxt_words)
            frontier = nxt_front
            depth += 1
        return levels

    def longest_element(self) -> tuple[int, ...]:
        w = self.identity()
        lw = 0
        while True:
            for g in self.generators:
                v = self.mul(g, w)
                lv = self.length(v)
                if lv > lw:
                    w, lw = v, lv
                    break
            else:
                return w

    def element_order(self, w: Sequence[int]) -> int:
        ident = self.identity()
        v, k = tuple(w), 1
        while v != ident:
            v = self.mul(v, w)
            k += 1
        return k

    def braid_order(self, i: int, j: int) -> int:
        if i == j:
            raise BadGeneratorIndex("braid order needs two distinct generators")
        a = self.rs.cartan
        m = _BRAID.get(a.a(i, j) * a.a(j, i))
        if m is None:
            raise ValueError("product a_ij a_ji outside 0..3")  # pragma: no cover
        actual = self.element_order(self.mul(self.gen(i), self.gen(j)))
        if actual != m:
            raise AssertionError(f"order of s{i}s{j} is {actual}, expected {m}")  # pragma: no cover
        return m

    def order(self) -> int:
        """Group order via a deterministic Schreier-Sims stabilizer chain."""
        gens = [tuple(j - 1 for j in g) for g in self.generators]
        base = list(range(self.rank))  # the simple roots: only the identity fixes them all
        return stabilizer_chain_order(gens, base)


def _orbit(point: int, gens: list[tuple]) -> dict[int, tuple]:
    n = len(gens[0]) if gens else 0
    ident = tuple(range(n))
    trans = {point: ident}
    queue = [point]
    for pt in queue:
        u = trans[pt]
        for s in gens:
            q = s[pt]
            if q not in trans:
                trans[q] = _compose(u, s)
                queue.append(q)
    return trans


def stabilizer_chain_order(gens: list[tuple], base: list[int]) -> int:
    """Order of the permutation group generated by ``gens`` (0-based tuples).

    ``base`` is an initial base; it is extended when a sifted residue fixes
    it pointwise.  Follows the incremental Schreier-Sims scheme: check the
    Schreier generators of each level from the bottom of the chain upward
    and restart at the level where a new strong generator was found.
    """
    gens = [g for g in gens if any(i != x for i, x in enumerate(g))]
    if not gens:
        return 1
    n = len(gens[0])
    ident = tuple(range(n))
    base = list(base)
    strong = list(gens)

    def gens_at(level: int) -> list[tuple]:
        pts = base[:level]
        return [g for g in strong if all(g[b] == b for b in pts)]

    def sift(g: tuple, level: int):
        for l in range(level, len(base)):
            b = g[base[l]]
            u = trans[l].get(b)
            if u is None:
                return g, l
            g = _compose(g, _invert(u))
        return g, len(base)

    trans = [_orbit(base[l], gens_at(l) or [ident]) for l in range(len(base))]
    i = len(base) - 1
    while i >= 0:
        restart = None
        level_gens = gens_at(i)
        for b, u in list(trans[i].items()):
            for s in level_gens:
                target = s[b]
                g = _compose(_compose(u, s), _invert(trans[i][target]))
                if g == ident:
                    continue
                h, j = sift(g, i + 1)
                if h == ident:
                    continue
                if j == len(base):
                    base.append(next(x for x in range(n) if h[x] != x))
                    trans.append({})
                strong.append(h)
                for l in range(i + 1, j + 1):
                    trans[l] = _orbit(base[l], gens_at(l) or [ident])
                restart = j
                break
            if restart is not None:
                break
        if restart is None:
            i -= 1
        else:
            i = restart
    order = 1
    for t in trans:
        order *= len(t)
    return order
