"""Weights and representation modules.

Weights are integer vectors in fundamental-weight coordinates
(``m_i = lambda(h_i)``).  A :class:`RepModule` is a weighted basis with
integer matrices for the Chevalley generators, the canonical root elements
``rhoE(alpha)`` and their divided powers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .canbasis import InexactDivision, LieAlgebraData, canonical_matrices
from .canbasis import chevalley_relations
from .cartan import CartanMatrix, epsilon, validate
from .exactnum import (QQ, ZZ, SparseMat, block_diagonal, commutator, inverse_rational,
                       smith_normal_form)
from .roots import RootRef, RootSystem, generate


class NotAdmissible(ValueError):
    pass


class WeightMismatch(NotAdmissible):
    pass


class NotMinuscule(ValueError):
    pass


Weight = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# weight combinatorics


def s_i_on_weight(a: CartanMatrix, i: int, lam: Sequence[int]) -> Weight:
    """``m_k -> m_k - m_i a_ki`` (``i`` is 1-based)."""
    mi = lam[i - 1]
    if not mi:
        return tuple(lam)
    return tuple(m - mi * a.entries[k][i - 1] for k, m in enumerate(lam))


def dominant_rep(a: CartanMatrix, lam: Sequence[int]) -> tuple[Weight, list[int]]:
    """Dominant weight in the orbit of ``lam`` and the word that reaches it."""
    lam = tuple(lam)
    word = []
    while True:
        i = next((k + 1 for k, m in enumerate(lam) if m < 0), None)
        if i is None:
            return lam, word
        lam = s_i_on_weight(a, i, lam)
        word.append(i)


def weightorbit(a: CartanMatrix, lam: Sequence[int]) -> list[Weight]:
    """Breadth-first W-orbit, scanning in order and applying ``s_1..s_l``."""
    orbit = [tuple(lam)]
    seen = {orbit[0]}
    for mu in orbit:
        for i in range(1, a.rank + 1):
            nu = s_i_on_weight(a, i, mu)
            if nu not in seen:
                seen.add(nu)
                orbit.append(nu)
    return orbit


def alpha_coordinates(a: CartanMatrix, lam: Sequence[int]) -> tuple[Fraction, ...]:
    """Rational coordinates over the simple roots (``A^-1 m``)."""
    inv = inverse_rational(a.rows())
    return tuple(sum((row[j] * lam[j] for j in range(a.rank)), Fraction(0)) for row in inv)


def weight_height(a: CartanMatrix, lam: Sequence[int]) -> Fraction:
    return sum(alpha_coordinates(a, lam), Fraction(0))


def pairing_weight_coroot(rs: RootSystem, lam: Sequence[int], alpha: RootRef) -> int:
    """``lambda(h_alpha) = sum_i n_i^vee(alpha) m_i``."""
    return sum(c * m for c, m in zip(rs.coroot_coeffs(alpha), lam))


def is_minuscule_weight(rs: RootSystem, lam: Sequence[int]) -> bool:
    return all(abs(pairing_weight_coroot(rs, lam, k)) <= 1 for k in range(1, rs.N + 1))


def minuscule_weights(a) -> list[int]:
    """Indices ``i`` whose fundamental weight is minuscule."""
    rs = generate(a)
    out = []
    for i in range(rs.rank):
        if all(abs(rs.coroot_coeffs(k)[i]) <= 1 for k in range(1, rs.N + 1)):
            out.append(i + 1)
    return out


def fundamental_weight(rank: int, i: int) -> Weight:
    return tuple(int(k == i - 1) for k in range(rank))


def lattice_index(a: CartanMatrix, weights: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Elementary divisors of the lattice spanned by ``weights`` inside the
    weight lattice, and its index (0 when it has lower rank)."""
    rows = [list(w) for w in weights if any(w)]
    if not rows:
        return (), 0
    d = smith_normal_form(rows)
    if len([x for x in d if x]) < a.rank:
        return tuple(d), 0
    idx = 1
    for x in d:
        idx *= x
    return tuple(d), idx


# ---------------------------------------------------------------------------
# modules


@dataclass(frozen=True)
class RepModule:
    """An admissible module with its integer divided-power tables.

    ``dp[k-1][m-1]`` is ``rhoE(root k)^m / m!``; the list for each root stops
    at the last non-zero power.
    """

    name: str
    cartan: CartanMatrix
    rs: RootSystem
    eps: tuple[int, ...]
    weights: tuple[Weight, ...]
    labels: tuple[str, ...]
    E: tuple[SparseMat, ...]
    F: tuple[SparseMat, ...]
    rhoE_list: tuple[SparseMat, ...]
    dp: tuple[tuple[SparseMat, ...], ...]
    order: tuple[int, ...] = field(default=())  # original position of each sorted basis vector

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def rank(self) -> int:
        return self.rs.rank

    def rhoE(self, r: RootRef) -> SparseMat:
        return self.rhoE_list[self.rs.index(r) - 1]

    def divided_power(self, r: RootRef, m: int) -> SparseMat:
        if m == 0:
            return SparseMat.identity(self.dim)
        powers = self.dp[self.rs.index(r) - 1]
        return powers[m - 1] if m <= len(powers) else SparseMat.zero(self.dim)

    def H(self, i: int) -> SparseMat:
        return commutator(self.E[i - 1], self.F[i - 1])

    def nilpotency(self, r: RootRef) -> int:
        """Smallest ``m`` with ``rhoE(r)^m = 0``."""
        return len(self.dp[self.rs.index(r) - 1]) + 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cartan": self.cartan.rows(),
            "weights": [list(w) for w in self.weights],
            "labels": list(self.labels),
            "e": [m.to_json() for m in self.E],
            "f": [m.to_json() for m in self.F],
        }


def _sort_basis(a: CartanMatrix, weights: Sequence[Weight]) -> list[int]:
    inv = inverse_rational(a.rows())
    heights = [sum((inv[i][j] * w[j] for i in range(a.rank) for j in range(a.rank)), Fraction(0))
               for w in weights]
    return sorted(range(len(weights)), key=lambda k: -heights[k])


def _permute(m: SparseMat, new_of_old: list[int]) -> SparseMat:
    return SparseMat(m.nrows, m.ncols,
                     [(new_of_old[r], new_of_old[c], v) for r, c, v in m.items()], m.ring)


def _divided_powers(m: SparseMat) -> tuple[SparseMat, ...]:
    out = []
    power = m
    k = 1
    while not power.is_zero():
        try:
            out.append(power.exact_div(factorial(k)))
        except ValueError as exc:
            raise NotAdmissible(f"divided power of order {k} is not integral") from exc
        k += 1
        power = power @ m
    return tuple(out)


def module_from_generators(a, weights: Sequence[Sequence[int]], E: Sequence[SparseMat],
                           F: Sequence[SparseMat], name: str = "module",
                           labels: Sequence[str] | None = None, sort: bool = True,
                           rs: RootSystem | None = None) -> RepModule:
    """Assemble a module from simple-generator matrices.

    The basis is stably sorted by decreasing height of its weights; the
    permutation applied is kept in ``order``.
    """
    a = validate(a)
    rs = rs or generate(a)
    eps = epsilon(a)
    weights = [tuple(int(x) for x in w) for w in weights]
    n = len(weights)
    if any(len(w) != a.rank for w in weights):
        raise WeightMismatch("weight vectors must have one entry per simple root")
    if len(E) != a.rank or len(F) != a.rank:
        raise NotAdmissible("need one e and one f matrix per simple root")
    for m in list(E) + list(F):
        if m.shape != (n, n):
            raise NotAdmissible(f"generator of shape {m.shape}, expected {n}x{n}")
        if m.ring != ZZ:
            raise NotAdmissible("generator matrices must be integral")
    labels = list(labels) if labels is not None else [f"z{k + 1}" for k in range(n)]
    order = _sort_basis(a, weights) if sort else list(range(n))
    if order != list(range(n)):
        new_of_old = [0] * n
        for new, old in enumerate(order):
            new_of_old[old] = new
        E = [_permute(m, new_of_old) for m in E]
        F = [_permute(m, new_of_old) for m in F]
        weights = [weights[k] for k in order]
        labels = [labels[k] for k in order]
    try:
        rho = canonical_matrices(rs, list(E), list(F), eps)
    except InexactDivision as exc:
        raise NotAdmissible(f"root element not integral: {exc}") from exc
    dps = tuple(_divided_powers(m) for m in rho)
    return RepModule(name, a, rs, eps, tuple(weights), tuple(labels), tuple(E), tuple(F),
                     tuple(rho), dps, tuple(order))


def adjoint_module(d: LieAlgebraData) -> RepModule:
    """The adjoint module on the model basis of g(A)."""
    return module_from_generators(d.cartan, d.basis_weights(), list(d.E), list(d.F),
                                  name="adjoint", labels=d.labels(), sort=False, rs=d.rs)


def rep_minuscule(a, weights_or_indices) -> RepModule:
    """Module on a union of W-orbits of non-zero minuscule dominant weights.

    ``weights_or_indices`` is a list of fundamental-weight indices or of
    dominant weight vectors; each contributes its orbit.
    """
    a = validate(a)
    rs = generate(a)
    psi: list[Weight] = []
    for item in weights_or_indices:
        lam = fundamental_weight(a.rank, item) if isinstance(item, int) else tuple(item)
        if not any(lam) or not is_minuscule_weight(rs, lam):
            raise NotMinuscule(f"{list(lam)} is not a non-zero minuscule weight")
        for mu in weightorbit(a, lam):
            if mu not in psi:
                psi.append(mu)
    pos = {mu: k for k, mu in enumerate(psi)}
    n = len(psi)
    E, F = [], []
    for i in range(1, a.rank + 1):
        col = [a.entries[k][i - 1] for k in range(a.rank)]  # alpha_i in weight coordinates
        e_ents, f_ents = [], []
        for mu, c in pos.items():
            if mu[i - 1] == -1:
                e_ents.append((pos[tuple(x + y for x, y in zip(mu, col))], c, 1))
            elif mu[i - 1] == 1:
                f_ents.append((pos[tuple(x - y for x, y in zip(mu, col))], c, 1))
        E.append(SparseMat(n, n, e_ents, ZZ))
        F.append(SparseMat(n, n, f_ents, ZZ))
    labels = ["z(" + ",".join(map(str, mu)) + ")" for mu in psi]
    name = "minuscule:" + ",".join(str(x) for x in weights_or_indices)
    return module_from_generators(a, psi, E, F, name=name, labels=labels, rs=rs)


def sl2_irrep(m: int) -> RepModule:
    """The (m+1)-dimensional irreducible module of type A1."""
    if m < 0:
        raise ValueError("highest weight must be non-negative")
    n = m + 1
    e = SparseMat(n, n, [(i - 1, i, m - i + 1) for i in range(1, n)], ZZ)
    f = SparseMat(n, n, [(i + 1, i, i + 1) for i in range(n - 1)], ZZ)
    weights = [(m - 2 * i,) for i in range(n)]
    return module_from_generators([[2]], weights, [e], [f], name=f"sl2irrep:{m}",
                                  labels=[f"v{i}" for i in range(n)])


def direct_sum(modules: Sequence[RepModule]) -> RepModule:
    if not modules:
        raise ValueError("direct_sum of nothing")
    a = modules[0].cartan
    if any(m.cartan != a for m in modules):
        raise WeightMismatch("summands belong to different Cartan matrices")
    E = [block_diagonal([m.E[i] for m in modules]) for i in range(a.rank)]
    F = [block_diagonal([m.F[i] for m in modules]) for i in range(a.rank)]
    weights = [w for m in modules for w in m.weights]
    labels = [f"{k}:{lab}" for k, m in enumerate(modules) for lab in m.labels]
    return module_from_generators(a, weights, E, F, name="+".join(m.name for m in modules),
                                  labels=labels, rs=modules[0].rs)


def _matrix_from_json(obj, n: int) -> SparseMat:
    if isinstance(obj, dict):
        return SparseMat.from_json(obj, ZZ)
    m = SparseMat.from_dense(obj, ZZ)
    if m.shape != (n, n):
        raise NotAdmissible(f"matrix of shape {m.shape}, expected {n}x{n}")
    return m


def load_module(source) -> RepModule:
    """Read ``{"cartan", "weights", "e", "f"}`` from a dict, JSON text or path."""
    if isinstance(source, (str, bytes)) and not str(source).lstrip().startswith("{"):
        with open(source, encoding="utf-8") as fh:
            obj = json.load(fh)
    elif isinstance(source, (str, bytes)):
        obj = json.loads(source)
    else:
        obj = source
    weights = obj["weights"]
    n = len(weights)
    E = [_matrix_from_json(m, n) for m in obj["e"]]
    F = [_matrix_from_json(m, n) for m in obj["f"]]
    return module_from_generators(obj["cartan"], weights, E, F, name=obj.get("name", "loaded"),
                                  labels=obj.get("labels"))


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class AdmissibilityReport:
    ok: bool
    problems: tuple[str, ...]
    max_nilpotency: int

    def __str__(self) -> str:
        if self.ok:
            return f"admissible (root elements nilpotent of order <= {self.max_nilpotency})"
        return "not admissible: " + "; ".join(self.problems)


def check_admissible(mod: RepModule) -> AdmissibilityReport:
    """Re-derive every admissibility condition from the generator matrices."""
    problems = []
    rs, a = mod.rs, mod.cartan
    H = [commutator(e, f) for e, f in zip(mod.E, mod.F)]
    for i, h in enumerate(H):
        expected = SparseMat.diagonal_matrix([w[i] for w in mod.weights], ZZ)
        if h != expected:
            problems.append(f"h{i + 1} is not diagonal with the stated weights")
    rel = chevalley_relations(a, list(mod.E), list(mod.F), H)
    if not rel.ok:
        problems.append(f"Chevalley relation fails: {rel.failure}")
    max_nil = 0
    for k in range(1, 2 * rs.N + 1):
        m = mod.rhoE_list[k - 1]
        shift = rs.weight_of_root(k)
        for r, c, _ in m.items():
            if mod.weights[r] != tuple(x + y for x, y in zip(mod.weights[c], shift)):
                problems.append(f"root {k} does not shift weight {list(mod.weights[c])} correctly")
                break
        if not m.is_zero() and m.entry_gcd() != 1:
            problems.append(f"entries of rhoE({k}) have gcd {m.entry_gcd()}")
        # divided powers over the rationals
        mq = m.change_ring(QQ)
        power, j = mq, 1
        while not power.is_zero():
            dpq = power.scale(Fraction(1, factorial(j)))
            if any(Fraction(v).denominator != 1 for _, _, v in dpq.items()):
                problems.append(f"divided power {j} of root {k} is not integral")
                break
            j += 1
            power = power @ mq
        max_nil = max(max_nil, j)
    return AdmissibilityReport(not problems, tuple(problems), max_nil)
