"""Chevalley group elements and the relation verifier.

Given an admissible module, ``x_alpha(z) = sum_m z^m rhoE(alpha)^m / m!``
makes sense over any commutative ring.  :class:`ChevalleyGroup` converts
the divided powers of a module into one coefficient ring once and then
produces root elements, monomial elements ``n_i``/``n_alpha``, diagonal
elements ``h_i``/``h_alpha`` and canonical Weyl representatives ``n_w``.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .canbasis import LieAlgebraData, basis_position
from .exactnum import (GF, ZT, IntPoly, PrimeField, Ring, SparseMat, field_determinant,
                       field_inverse, ring_from_name)
from .weights import RepModule
from .weyl import WeylGroup

DEFAULT_SEED = 1729


class ZeroParameter(ValueError):
    pass


class PolynomialRing(ValueError):
    pass


class NonReducedWordRejected(ValueError):
    pass


@dataclass(frozen=True)
class GroupElement:
    """A matrix over ``ring`` acting on the basis of ``module``."""

    module: RepModule = field(repr=False, compare=False)
    ring: Ring
    matrix: SparseMat

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.module, self.ring, self.matrix @ other.matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.ring == other.ring and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.module, self.ring, field_inverse(self.matrix))

    def det(self):
        return field_determinant(self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == SparseMat.identity(self.matrix.nrows, self.ring)

    def specialize(self, ring: Ring, value) -> "GroupElement":
        return GroupElement(self.module, ring, self.matrix.specialize(ring, value))


def parse_value(ring: Ring, v):
    """Ring element from an int, Fraction, ``"a/b"`` string or ``"T"``."""
    if isinstance(v, str):
        if v.strip().upper() == "T":
            if ring != ZT:
                raise ValueError("T is only available over ZT")
            return IntPoly.T()
        v = Fraction(v)
    return ring.coerce(v)


def coerce_ring(spec) -> Ring:
    """Accept a :class:`Ring`, a prime, ``"q"``/``"QQ"``, ``"ZT"`` or ``"GF(p)"``."""
    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, int):
        return GF(spec)
    return ring_from_name(spec)


class ChevalleyGroup:
    """Generator matrices of the Chevalley group of ``module`` over ``ring``.

    All ring-converted divided powers are computed in the constructor; the
    object is not mutated afterwards.
    """

    def __init__(self, module: RepModule, ring):
        self.module = module
        self.ring = coerce_ring(ring)
        self.rs = module.rs
        self.dim = module.dim
        self.eps = module.eps
        self._ident = SparseMat.identity(self.dim, self.ring)
        self._dp = tuple(tuple(m.change_ring(self.ring) for m in powers) for powers in module.dp)

    # -- helpers ----------------------------------------------------------
    def value(self, v):
        return parse_value(self.ring, v)

    def _need_field(self):
        if not self.ring.is_field:
            raise PolynomialRing("n and h elements need a field")

    def _nonzero(self, xi):
        xi = self.value(xi)
        if not xi:
            raise ZeroParameter("parameter must be invertible")
        return xi

    def wrap(self, m: SparseMat) -> GroupElement:
        return GroupElement(self.module, self.ring, m)

    def identity(self) -> SparseMat:
        return self._ident

    # -- root elements ----------------------------------------------------
    def x_mat(self, alpha, zeta) -> SparseMat:
        k = self.rs.index(alpha)
        z = self.value(zeta)
        out = self._ident
        if not z:
            return out
        norm = self.ring.normalize
        zp = z
        for dp in self._dp[k - 1]:
            out = out + dp.scale(zp)
            zp = norm(zp * z)
        return out

    def x(self, alpha, zeta) -> GroupElement:
        return self.wrap(self.x_mat(alpha, zeta))

    def xi(self, i: int, zeta) -> GroupElement:
        return self.wrap(self.xi_mat(i, zeta))

    def yi(self, i: int, zeta) -> GroupElement:
        return self.wrap(self.yi_mat(i, zeta))

    def xi_mat(self, i: int, zeta) -> SparseMat:
        return self.x_mat(i, self.ring.normalize(self.eps[i - 1] * self.value(zeta)))

    def yi_mat(self, i: int, zeta) -> SparseMat:
        return self.x_mat(self.rs.negative(i), self.ring.normalize(-self.eps[i - 1] * self.value(zeta)))

    # -- monomial and diagonal elements -----------------------------------
    def n_mat(self, i: int, xi) -> SparseMat:
        self._need_field()
        xi = self._nonzero(xi)
        x = self.xi_mat(i, xi)
        return x @ self.yi_mat(i, self.ring.normalize(-self.ring.inv(xi))) @ x

    def h_mat(self, i: int, xi) -> SparseMat:
        return self.n_mat(i, xi) @ self.n_mat(i, -1)

    def n(self, i: int, xi) -> GroupElement:
        return self.wrap(self.n_mat(i, xi))

    def h(self, i: int, xi) -> GroupElement:
        return self.wrap(self.h_mat(i, xi))

    def n_alpha_mat(self, alpha, xi) -> SparseMat:
        self._need_field()
        xi = self._nonzero(xi)
        k = self.rs.index(alpha)
        sign = -1 if self.rs.heights[k - 1] % 2 else 1
        x = self.x_mat(k, xi)
        y = self.x_mat(self.rs.negative(k), self.ring.normalize(-sign * self.ring.inv(xi)))
        return x @ y @ x

    def h_alpha_mat(self, alpha, xi) -> SparseMat:
        return self.n_alpha_mat(alpha, xi) @ self.n_alpha_mat(alpha, -1)

    def n_alpha(self, alpha, xi) -> GroupElement:
        return self.wrap(self.n_alpha_mat(alpha, xi))

    def h_alpha(self, alpha, xi) -> GroupElement:
        return self.wrap(self.h_alpha_mat(alpha, xi))

    def n_w(self, w) -> GroupElement:
        """Canonical representative: product of ``n_i(1)`` along a reduced word.

        ``w`` is a permutation tuple or a reduced word given as a list.
        """
        self._need_field()
        W = WeylGroup.of(self.rs)
        if isinstance(w, tuple):
            word = W.permword(w)
        else:
            word = list(w)
            if W.length(W.wordperm(word)) != len(word):
                raise NonReducedWordRejected(f"{word} is not reduced")
        out = self._ident
        for i in word:
            out = out @ self.n_mat(i, 1)
        return self.wrap(out)


# ---------------------------------------------------------------------------
# functional interface


def x_gen(module: RepModule, alpha, ring, value) -> GroupElement:
    return ChevalleyGroup(module, ring).x(alpha, value)


def xi_gen(module: RepModule, i: int, ring, value) -> GroupElement:
    return ChevalleyGroup(module, ring).xi(i, value)


def yi_gen(module: RepModule, i: int, ring, value) -> GroupElement:
    return ChevalleyGroup(module, ring).yi(i, value)


def n_gen(module: RepModule, i: int, field_, xi) -> GroupElement:
    return ChevalleyGroup(module, field_).n(i, xi)


def h_gen(module: RepModule, i: int, field_, xi) -> GroupElement:
    return ChevalleyGroup(module, field_).h(i, xi)


def n_alpha_gen(module: RepModule, alpha, field_, xi) -> GroupElement:
    return ChevalleyGroup(module, field_).n_alpha(alpha, xi)


def n_w(module: RepModule, field_, w) -> GroupElement:
    return ChevalleyGroup(module, field_).n_w(w)


def adjoint_closed_form(d: LieAlgebraData, i: int, ring, value, kind: str = "x") -> SparseMat:
    """``x_i(t)`` or ``y_i(t)`` on the adjoint model basis from closed formulas.

    On ``v_alpha`` (alpha != -alpha_i) the element ``x_i(t)`` gives
    ``sum_r binom(q_{i,alpha}+r, r) t^r v_{alpha + r alpha_i}``; on ``u_j`` it
    adds ``|a_ji| t v_{alpha_i}``; on ``v_{-alpha_i}`` it gives
    ``v_{-alpha_i} + t u_i + t^2 v_{alpha_i}``.  ``y_i`` mirrors this with
    ``p`` strings and ``-alpha_i``.
    """
    ring = coerce_ring(ring)
    rs = d.rs
    N, l = rs.N, rs.rank
    t = parse_value(ring, value)
    norm = ring.normalize
    up = kind == "x"
    a_i = i if up else rs.negative(i)          # root we move towards
    a_opp = rs.negative(a_i)
    step = [int(j == i - 1) * (1 if up else -1) for j in range(l)]
    strings = rs.qstring if up else rs.pstring
    ents = []
    for k in range(1, 2 * N + 1):
        col = basis_position(rs, k)
        if k == a_opp:
            ents.append((col, col, 1))
            ents.append((N + i - 1, col, t))
            ents.append((basis_position(rs, a_i), col, norm(t * t)))
            continue
        s = strings[i - 1][k - 1]
        r, coeffs = 0, list(rs.roots[k - 1])
        while True:
            kk = rs.find(coeffs)
            if not kk:
                break
            ents.append((basis_position(rs, kk), col, norm(comb(s + r, r) * ring.pow(t, r))))
            r += 1
            coeffs = [c + e for c, e in zip(coeffs, step)]
    for j in range(1, l + 1):
        col = N + j - 1
        ents.append((col, col, 1))
        c = abs(rs.cartan.a(j, i))
        if c:
            ents.append((basis_position(rs, a_i), col, norm(c * t)))
    return SparseMat(d.dim, d.dim, ents, ring)


# ---------------------------------------------------------------------------
# relation verifier


@dataclass
class IdentityResult:
    name: str
    checked: int = 0
    failed: int = 0
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, good: bool, witness) -> None:
        self.checked += 1
        if not good:
            self.failed += 1
            if self.witness is None:
                self.witness = witness() if callable(witness) else str(witness)


@dataclass
class SuiteReport:
    module: str
    ring: str
    seed: int
    exhaustive: bool
    results: list[IdentityResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> list[str]:
        out = [f"{self.module} over {self.ring} "
               f"({'exhaustive' if self.exhaustive else f'sampled, seed {self.seed}'})"]
        for r in self.results:
            status = "PASS" if r.ok else "FAIL"
            extra = "" if r.ok else f"  first failure: {r.witness}"
            out.append(f"  {status} {r.name:<18} {r.checked - r.failed}/{r.checked}{extra}")
        return out


def suite_seed() -> int:
    raw = os.environ.get("CHEVALIER_SEED")
    return int(raw) if raw not in (None, "") else DEFAULT_SEED


def _parameters(ring: Ring, rng: random.Random, samples: int):
    """(all values, non-zero values, exhaustive?)"""
    if isinstance(ring, PrimeField) and ring.p <= 7:
        vals = list(range(ring.p))
        return vals, vals[1:], True
    if isinstance(ring, PrimeField):
        nz = sorted({rng.randrange(1, ring.p) for _ in range(samples)} | {1, ring.p - 1})
        return [0] + nz, nz, False
    nz = [1, -1]
    while len(nz) < samples + 2:
        v = ring.coerce(Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5)))
        if v not in nz:
            nz.append(v)
    return [0] + nz, nz, False


def relation_suite(module: RepModule, ring, seed: int | None = None,
                   samples: int = 3, corrupt: bool = False) -> SuiteReport:
    """Check the group identities on all roots with exhaustive or seeded
    parameters.  ``corrupt`` perturbs one divided power (negative control)."""
    G = ChevalleyGroup(module, ring)
    if corrupt:
        G = _corrupted(G)
    K = G.ring
    seed = suite_seed() if seed is None else seed
    rng = random.Random(seed)
    Z, Zs, exhaustive = _parameters(K, rng, samples)
    rs, a = G.rs, module.cartan
    l, N = rs.rank, rs.N
    norm = K.normalize
    ident = G.identity()
    roots = range(1, 2 * N + 1)

    X = {(k, z): G.x_mat(k, z) for k in roots for z in Z}
    nmat = {(i, x): G.n_mat(i, x) for i in range(1, l + 1) for x in Zs + [norm(-1)]}
    hmat = {(i, x): G.h_mat(i, x) for i in range(1, l + 1) for x in Zs + [norm(-1)]}

    def xget(k, z):
        z = norm(z)
        m = X.get((k, z))
        return m if m is not None else G.x_mat(k, z)

    res = {name: IdentityResult(name) for name in (
        "additivity", "x inverse", "n inverse", "n_alpha inverse", "commuting pairs",
        "n conjugation", "h conjugation", "h diagonal", "n^2 = h(-1)", "n^4 = 1",
        "h braid", "braid relations", "uniqueH kernel")}

    for k in roots:
        for z1 in Z:
            res["x inverse"].record(X[k, z1] @ xget(k, -z1) == ident, lambda: f"root {k}, z={z1}")
            for z2 in Z:
                res["additivity"].record(X[k, z1] @ X[k, z2] == xget(k, z1 + z2),
                                         lambda: f"root {k}, z1={z1}, z2={z2}")

    for ka in roots:
        for kb in roots:
            if kb <= ka or kb == rs.negative(ka) or rs.sums[ka - 1][kb - 1]:
                continue
            for z1 in Zs:
                for z2 in Zs:
                    A, B = X[ka, z1], X[kb, z2]
                    res["commuting pairs"].record(A @ B == B @ A,
                                                  lambda: f"roots {ka},{kb}, z1={z1}, z2={z2}")

    for i in range(1, l + 1):
        for xi in Zs:
            n = nmat[i, xi]
            res["n inverse"].record(n @ G.n_mat(i, norm(-xi)) == ident, lambda: f"i={i}, xi={xi}")
            for k in range(1, N + 1):
                na = G.n_alpha_mat(k, xi)
                res["n_alpha inverse"].record(na @ G.n_alpha_mat(k, norm(-xi)) == ident,
                                              lambda: f"root {k}, xi={xi}")
            n2 = n @ n
            res["n^2 = h(-1)"].record(n2 == hmat[i, norm(-1)], lambda: f"i={i}, xi={xi}")
            res["n^4 = 1"].record(n2 @ n2 == ident, lambda: f"i={i}, xi={xi}")
            h = hmat[i, xi]
            diag = SparseMat.diagonal_matrix([K.pow(xi, w[i - 1]) for w in module.weights], K)
            res["h diagonal"].record(h == diag, lambda: f"i={i}, xi={xi}")
            for k in roots:
                pair = rs.simple_pairing(i, k)
                target = rs.refl_index(i, k)
                sign = -1 if rs.qstring[i - 1][k - 1] % 2 else 1
                for z in Z:
                    lhs = n @ X[k, z]
                    rhs = xget(target, norm(sign * z * K.pow(xi, -pair))) @ n
                    res["n conjugation"].record(lhs == rhs, lambda: f"i={i}, root {k}, xi={xi}, z={z}")
                    lhs = h @ X[k, z]
                    rhs = xget(k, norm(z * K.pow(xi, pair))) @ h
                    res["h conjugation"].record(lhs == rhs, lambda: f"i={i}, root {k}, xi={xi}, z={z}")

    for j in range(1, l + 1):
        for xi in Zs:
            nj = nmat[j, xi]
            nj_inv = field_inverse(nj)
            for i in range(1, l + 1):
                for zeta in Zs:
                    lhs = nj @ hmat[i, zeta] @ nj_inv
                    rhs = hmat[i, zeta] @ G.h_mat(j, K.pow(zeta, -a.a(i, j)))
                    res["h braid"].record(lhs == rhs, lambda: f"j={j}, i={i}, xi={xi}, zeta={zeta}")

    W = WeylGroup.of(rs)
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            m = W.braid_order(i, j)
            ni, nj = nmat[i, K.one()], nmat[j, K.one()]
            lhs, rhs = ident, ident
            for t in range(m):
                lhs = lhs @ (ni if t % 2 == 0 else nj)
                rhs = rhs @ (nj if t % 2 == 0 else ni)
            res["braid relations"].record(lhs == rhs, lambda: f"i={i}, j={j}")

    _check_unique_h(G, module, Zs, hmat, res["uniqueH kernel"])

    return SuiteReport(module.name, K.name, seed, exhaustive, list(res.values()))


def _check_unique_h(G: ChevalleyGroup, module: RepModule, Zs, hmat, result: IdentityResult):
    """prod h_i(xi_i) = 1  iff  prod xi_i^{m_i(mu)} = 1 for every basis weight mu.

    The left side uses the diagonals of the computed matrices (each was
    checked to be diagonal); the right side is evaluated from the weights.
    """
    K = G.ring
    norm = K.normalize
    l, n = G.rs.rank, module.dim
    one = K.one()
    diags = {}
    for i in range(1, l + 1):
        for x in Zs:
            m = hmat[i, x]
            if not m.is_diagonal():
                result.record(False, f"h_{i}({x}) is not diagonal")
                return
            diags[i, x] = m.diagonal()

    def walk(i, partial_matrix, partial_formula, params):
        if i > l:
            lhs = all(v == one for v in partial_matrix)
            rhs = all(v == one for v in partial_formula)
            result.record(lhs == rhs, lambda: f"parameters {params}")
            return
        for x in Zs:
            dm = diags[i, x]
            pm = [norm(u * v) for u, v in zip(partial_matrix, dm)]
            pf = [norm(u * K.pow(x, w[i - 1])) for u, w in zip(partial_formula, module.weights)]
            walk(i + 1, pm, pf, params + [x])

    walk(1, [one] * n, [one] * n, [])


def _corrupted(G: ChevalleyGroup) -> ChevalleyGroup:
    """Copy of ``G`` whose first non-trivial divided power has a perturbed entry."""
    bad = ChevalleyGroup.__new__(ChevalleyGroup)
    bad.__dict__.update(G.__dict__)
    dps = [list(p) for p in G._dp]
    for powers in dps:
        if len(powers) >= 1:
            m = powers[0]
            r, c, v = next(m.items())
            powers[0] = m + SparseMat(m.nrows, m.ncols, [(r, c, 1)], m.ring)
            break
    bad._dp = tuple(tuple(p) for p in dps)
    return bad
