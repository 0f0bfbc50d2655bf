"""The Lie algebra g(A) in its matrix model, its canonical Chevalley system
and the structure constants.

The model space has basis ``v_{beta_N}, ..., v_{beta_1}, u_1, ..., u_l,
v_{-beta_1}, ..., v_{-beta_N}``; with this order every ``E_i`` is strictly
upper triangular and every ``F_i`` strictly lower triangular.  Matrices act
on column vectors: column ``c`` holds the image of basis vector ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanMatrix, epsilon, validate
from .exactnum import ZZ, SparseMat, commutator
from .roots import RootRef, RootSystem, generate


class InexactDivision(ArithmeticError):
    pass


class OppositeRoots(ValueError):
    pass


@dataclass(frozen=True)
class StructConst:
    alpha: int
    beta: int
    value: int
    target: int  # index of alpha + beta, or 0 when it is not a root

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.alpha, self.beta, self.value, self.target


@dataclass(frozen=True)
class RelationReport:
    ok: bool
    checked: int
    failure: str | None = None

    def __str__(self) -> str:
        return "Relations OK" if self.ok else f"Relation failed: {self.failure}"


def basis_position(rs: RootSystem, k: int) -> int:
    """0-based position of ``v_{root k}`` in the model basis."""
    N, l = rs.N, rs.rank
    return N - k if k <= N else N + l + (k - N) - 1


def basis_labels(rs: RootSystem) -> list[str]:
    labels = []
    for k in range(rs.N, 0, -1):
        labels.append("v" + "".join(map(str, rs.roots[k - 1])))
    labels += [f"u{j}" for j in range(1, rs.rank + 1)]
    for k in range(1, rs.N + 1):
        labels.append("v-" + "".join(map(str, rs.roots[k - 1])))
    return labels


def generator_matrices(rs: RootSystem) -> tuple[list[SparseMat], list[SparseMat]]:
    """The model matrices ``E_i``, ``F_i`` over the integers."""
    a = rs.cartan
    N, l = rs.N, rs.rank
    dim = 2 * N + l
    pos = [None] + [basis_position(rs, k) for k in range(1, 2 * N + 1)]
    E, F = [], []
    for i in range(1, l + 1):
        ai, mi = i, rs.negative(i)  # indices of alpha_i and -alpha_i
        e_ents, f_ents = [], []
        for j in range(1, l + 1):
            c = abs(a.a(j, i))
            if c:
                e_ents.append((pos[ai], N + j - 1, c))
                f_ents.append((pos[mi], N + j - 1, c))
        for k in range(1, 2 * N + 1):
            up = rs.sums[k - 1][ai - 1]
            if up:
                e_ents.append((pos[up], pos[k], rs.qstring[i - 1][k - 1] + 1))
            down = rs.sums[k - 1][mi - 1]
            if down:
                f_ents.append((pos[down], pos[k], rs.pstring[i - 1][k - 1] + 1))
        e_ents.append((N + i - 1, pos[mi], 1))
        f_ents.append((N + i - 1, pos[ai], 1))
        E.append(SparseMat(dim, dim, e_ents, ZZ))
        F.append(SparseMat(dim, dim, f_ents, ZZ))
    return E, F


def _divide(m: SparseMat, d: int) -> SparseMat:
    if d == 1:
        return m
    try:
        return m.exact_div(d)
    except ArithmeticError as exc:
        raise InexactDivision(str(exc)) from exc
    except ValueError as exc:
        raise InexactDivision(str(exc)) from exc


def canonical_matrices(rs: RootSystem, E, F, eps, choice: str = "smallest") -> list[SparseMat]:
    """``adE`` for every root, in root-index order (list position k-1).

    ``choice`` picks which simple root drives the recursion step; any
    valid choice gives the same matrices, which the tests exercise.
    """
    N, l = rs.N, rs.rank
    out: list[SparseMat | None] = [None] * (2 * N)
    order = range(1, l + 1) if choice == "smallest" else range(l, 0, -1)
    for i in range(1, l + 1):
        out[i - 1] = E[i - 1].scale(eps[i - 1])
        out[N + i - 1] = F[i - 1].scale(-eps[i - 1])
    for k in range(l + 1, N + 1):
        alpha = rs.roots[k - 1]
        for i in order:
            beta = rs.find(tuple(x - (j == i - 1) for j, x in enumerate(alpha)))
            if beta and beta <= N:
                q = rs.qstring[i - 1][beta - 1]
                out[k - 1] = _divide(commutator(E[i - 1], out[beta - 1]), q + 1)
                break
        else:  # pragma: no cover
            raise AssertionError(f"no descent for root {alpha}")
    for k in range(N + l + 1, 2 * N + 1):
        gamma = rs.roots[k - 1]
        for i in order:
            beta = rs.find(tuple(x + (j == i - 1) for j, x in enumerate(gamma)))
            if beta and beta > N:
                p = rs.pstring[i - 1][beta - 1]
                out[k - 1] = _divide(commutator(F[i - 1], out[beta - 1]), p + 1)
                break
        else:  # pragma: no cover
            raise AssertionError(f"no ascent for root {gamma}")
    return out


@dataclass(frozen=True)
class LieAlgebraData:
    cartan: CartanMatrix
    rs: RootSystem
    eps: tuple[int, ...]
    dim: int
    E: tuple[SparseMat, ...]
    F: tuple[SparseMat, ...]
    H: tuple[SparseMat, ...]
    adE_list: tuple[SparseMat, ...]
    adH_list: tuple[SparseMat, ...]

    @property
    def rank(self) -> int:
        return self.rs.rank

    def adE(self, r: RootRef) -> SparseMat:
        return self.adE_list[self.rs.index(r) - 1]

    def adH(self, j: int) -> SparseMat:
        return self.adH_list[j - 1]

    def position(self, r: RootRef) -> int:
        return basis_position(self.rs, self.rs.index(r))

    def labels(self) -> list[str]:
        return basis_labels(self.rs)

    def basis_weights(self) -> list[tuple[int, ...]]:
        """Weight of each model basis vector in fundamental-weight coordinates."""
        rs = self.rs
        zero = (0,) * rs.rank
        out = [zero] * self.dim
        for k in range(1, 2 * rs.N + 1):
            out[basis_position(rs, k)] = rs.weight_of_root(k)
        return out

    def to_json(self) -> dict:
        return {
            "cartan": self.cartan.rows(),
            "epsilon": list(self.eps),
            "dim": self.dim,
            "labels": self.labels(),
            "e": [m.to_json() for m in self.E],
            "f": [m.to_json() for m in self.F],
            "h": [m.to_json() for m in self.H],
        }


def build(a, choice: str = "smallest") -> LieAlgebraData:
    """Construct g(A) for a finite-type Cartan matrix."""
    a = validate(a)
    rs = generate(a)
    eps = epsilon(a)
    E, F = generator_matrices(rs)
    H = [commutator(e, f) for e, f in zip(E, F)]
    adE = canonical_matrices(rs, E, F, eps, choice)
    adH = [h.scale(-eps[j]) for j, h in enumerate(H)]
    return LieAlgebraData(a, rs, eps, 2 * rs.N + rs.rank, tuple(E), tuple(F), tuple(H),
                          tuple(adE), tuple(adH))


def checkrels(d: LieAlgebraData, E=None, F=None, H=None) -> RelationReport:
    """Chevalley relations for the generator matrices (optionally replaced)."""
    E = list(d.E if E is None else E)
    F = list(d.F if F is None else F)
    H = list(d.H if H is None else H)
    return chevalley_relations(d.cartan, E, F, H)


def chevalley_relations(a: CartanMatrix, E, F, H) -> RelationReport:
    l = a.rank
    checked = 0
    for i in range(l):
        if commutator(E[i], F[i]) != H[i]:
            return RelationReport(False, checked, f"[e{i+1},f{i+1}] != h{i+1}")
        checked += 1
        for j in range(l):
            if i != j and not commutator(E[i], F[j]).is_zero():
                return RelationReport(False, checked, f"[e{i+1},f{j+1}] != 0")
            if not commutator(H[i], H[j]).is_zero():
                return RelationReport(False, checked, f"[h{i+1},h{j+1}] != 0")
            aij = a.entries[i][j]
            if commutator(H[i], E[j]) != E[j].scale(aij):
                return RelationReport(False, checked, f"[h{i+1},e{j+1}] != {aij} e{j+1}")
            if commutator(H[i], F[j]) != F[j].scale(-aij):
                return RelationReport(False, checked, f"[h{i+1},f{j+1}] != {-aij} f{j+1}")
            checked += 4
    return RelationReport(True, checked)


def structconst(d: LieAlgebraData, alpha: RootRef, beta: RootRef) -> StructConst:
    """``[e_alpha, e_beta] = N e_{alpha+beta}`` read off one matrix entry."""
    rs = d.rs
    ka, kb = rs.index(alpha), rs.index(beta)
    if kb == rs.negative(ka):
        raise OppositeRoots("alpha + beta = 0; use coroot_coeffs")
    kt = rs.sums[ka - 1][kb - 1]
    if not kt:
        return StructConst(ka, kb, 0, 0)
    target = d.adE_list[kt - 1]
    r, c, ref = next(target.items())
    prod = commutator(d.adE_list[ka - 1], d.adE_list[kb - 1])
    num = prod[r, c]
    if num % ref:
        raise InexactDivision("structure constant is not an integer")  # pragma: no cover
    return StructConst(ka, kb, num // ref, kt)


def structconst_full_check(d: LieAlgebraData, alpha: RootRef, beta: RootRef) -> bool:
    """Whole-matrix confirmation of :func:`structconst` (slower)."""
    s = structconst(d, alpha, beta)
    prod = commutator(d.adE(s.alpha), d.adE(s.beta))
    if not s.target:
        return prod.is_zero()
    return prod == d.adE(s.target).scale(s.value)


def structconst_table(d: LieAlgebraData) -> dict[tuple[int, int], int]:
    """All ``N_{alpha,beta}`` with ``alpha + beta`` a root."""
    rs = d.rs
    out = {}
    for ka in range(1, 2 * rs.N + 1):
        for kb in range(1, 2 * rs.N + 1):
            if rs.sums[ka - 1][kb - 1]:
                out[(ka, kb)] = structconst(d, ka, kb).value
    return out


def string_length_q(rs: RootSystem, alpha: RootRef, beta: RootRef) -> int:
    """Largest ``q`` with ``beta - q*alpha`` a root."""
    a, b = rs.coeffs(alpha), rs.coeffs(beta)
    q = 0
    while rs.find(tuple(y - (q + 1) * x for x, y in zip(a, b))):
        q += 1
    return q


@dataclass
class PropertyReport:
    checked: int = 0
    failures: list = None

    def __post_init__(self):
        if self.failures is None:
            self.failures = []

    @property
    def ok(self) -> bool:
        return not self.failures


def structconst_properties(d: LieAlgebraData, pairs=None) -> PropertyReport:
    """``|N| = q+1``, antisymmetry and ``N_{a,b} N_{-a,-b} = -(q+1)^2``.

    ``pairs`` defaults to every pair of roots whose sum is a root.
    """
    rs = d.rs
    if pairs is None:
        pairs = [(ka, kb) for ka in range(1, 2 * rs.N + 1) for kb in range(1, 2 * rs.N + 1)
                 if rs.sums[ka - 1][kb - 1]]
    rep = PropertyReport()
    for ka, kb in pairs:
        n = structconst(d, ka, kb).value
        q = string_length_q(rs, ka, kb)
        checks = (
            ("|N| = q+1", abs(n) == q + 1),
            ("antisymmetry", structconst(d, kb, ka).value == -n),
            ("N N_- = -(q+1)^2",
             n * structconst(d, rs.negative(ka), rs.negative(kb)).value == -(q + 1) ** 2),
        )
        for name, good in checks:
            rep.checked += 1
            if not good:
                rep.failures.append((name, ka, kb))
    return rep


def table_sign(rs: RootSystem, k: int) -> int:
    """Sign relating the printed structure-constant table to ``e^+``.

    The printed table uses ``(-1)^ht(alpha) e^+_alpha`` for negative roots.
    """
    return 1 if k <= rs.N else (-1) ** (rs.heights[k - 1] % 2)


def nrs_table(d: LieAlgebraData) -> list[list[str]]:
    """Layout of the printed table: rows/cols are positive then negative roots.

    Entries: the constant, ``.`` for zero, ``*`` on the diagonal of opposite
    roots (an element of the Cartan subalgebra).
    """
    rs = d.rs
    order = list(range(1, rs.N + 1)) + list(range(rs.N + 1, 2 * rs.N + 1))
    rows = []
    for ka in order:
        row = []
        for kb in order:
            if kb == rs.negative(ka):
                row.append("*")
                continue
            kt = rs.sums[ka - 1][kb - 1]
            if not kt:
                row.append(".")
                continue
            v = structconst(d, ka, kb).value
            v *= table_sign(rs, ka) * table_sign(rs, kb) * table_sign(rs, kt)
            row.append(str(v))
        rows.append(row)
    return rows


def chevalley_involution(d: LieAlgebraData) -> SparseMat:
    """Signed permutation ``u_j -> -u_j``, ``v_alpha -> -v_{-alpha}``."""
    rs = d.rs
    ents = [(rs.N + j, rs.N + j, -1) for j in range(rs.rank)]
    for k in range(1, 2 * rs.N + 1):
        ents.append((basis_position(rs, rs.negative(k)), basis_position(rs, k), -1))
    return SparseMat(d.dim, d.dim, ents, ZZ)
