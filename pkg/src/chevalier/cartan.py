"""Generalized Cartan matrices.

Validation, splitting into indecomposable blocks, the exact finite / affine /
indefinite classification, the standard finite-type matrices with Dynkin
recognition, the sign function ``epsilon`` and the fundamental group.

Vertices are numbered from 1 in everything returned to callers; the raw
``entries`` tuple is of course 0-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactnum import (determinant, inverse_rational, nullspace,
                       primitive_integer_vector, smith_normal_form, solve_rational)


class CartanError(ValueError):
    """Base class for problems with a Cartan matrix."""


class NotSquare(CartanError):
    pass


class DiagonalNotTwo(CartanError):
    def __init__(self, i: int, value: int):
        super().__init__(f"diagonal entry a[{i},{i}] = {value}, expected 2")
        self.i = i


class PositiveOffDiagonal(CartanError):
    def __init__(self, i: int, j: int, value: int):
        super().__init__(f"off-diagonal entry a[{i},{j}] = {value} is positive")
        self.i, self.j = i, j


class AsymmetricZero(CartanError):
    def __init__(self, i: int, j: int):
        super().__init__(f"a[{i},{j}] = 0 but a[{j},{i}] != 0")
        self.i, self.j = i, j


class DecomposableInput(CartanError):
    pass


class IllegalRank(CartanError):
    pass


class NotFiniteType(CartanError):
    pass


class OddCycle(CartanError):
    pass


@dataclass(frozen=True)
class CartanMatrix:
    """A validated generalized Cartan matrix ``a_ij = alpha_j(h_i)``."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def a(self, i: int, j: int) -> int:
        """Entry ``a_ij`` with 1-based indices."""
        return self.entries[i - 1][j - 1]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "CartanMatrix":
        return CartanMatrix(tuple(zip(*self.entries)))

    def submatrix(self, vertices: Sequence[int]) -> "CartanMatrix":
        """Principal submatrix on the given 1-based vertices, in that order."""
        return CartanMatrix(tuple(tuple(self.a(i, j) for j in vertices) for i in vertices))

    def to_json(self) -> dict:
        return {"cartan": self.rows()}

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.entries for x in row)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.entries)


def validate(raw) -> CartanMatrix:
    """Check the generalized Cartan axioms and freeze the matrix."""
    if isinstance(raw, CartanMatrix):
        return raw
    try:
        rows = [list(r) for r in raw]
    except TypeError as exc:
        raise NotSquare("matrix must be a list of rows") from exc
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"matrix is not square ({n} rows)")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, float) and x.is_integer():
                    continue
                raise CartanError(f"entry {x!r} is not an integer")
    rows = [[int(x) for x in r] for r in rows]
    for i in range(n):
        if rows[i][i] != 2:
            raise DiagonalNotTwo(i + 1, rows[i][i])
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] > 0:
                raise PositiveOffDiagonal(i + 1, j + 1, rows[i][j])
    for i in range(n):
        for j in range(n):
            if i != j and (rows[i][j] == 0) != (rows[j][i] == 0):
                raise AsymmetricZero(i + 1, j + 1) if rows[i][j] == 0 else AsymmetricZero(j + 1, i + 1)
    return CartanMatrix(tuple(tuple(r) for r in rows))


def components(a: CartanMatrix) -> list[list[int]]:
    """Vertex sets (1-based, sorted) of the connected components of the diagram."""
    n = a.rank
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        comp, stack = [], [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v + 1)
            for w in range(n):
                if w != v and a.entries[v][w] != 0 and not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_indecomposable(a: CartanMatrix) -> bool:
    return len(components(a)) == 1


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    """``kind`` is ``"FIN"``, ``"AFF"`` or ``"IND"``; affine blocks carry a null vector."""

    kind: str
    null_vector: tuple[int, ...] | None = None

    def __str__(self) -> str:
        if self.kind == "AFF":
            return f"AFF (null vector {list(self.null_vector)})"
        return self.kind


def classify(block) -> Classification:
    """Exact finite / affine / indefinite test for an indecomposable block.

    Finite: ``det != 0`` and ``A^-1 (1, ..., 1)`` strictly positive.
    Affine: ``det == 0``, one-dimensional kernel with a sign-definite
    generator (returned as a primitive positive integer vector).
    """
    a = validate(block)
    if not is_indecomposable(a):
        raise DecomposableInput("classify expects an indecomposable matrix")
    rows = a.rows()
    if determinant(rows) != 0:
        u = solve_rational(rows, [1] * a.rank)
        return Classification("FIN" if all(x > 0 for x in u) else "IND")
    kernel = nullspace(rows)
    if len(kernel) == 1:
        v = kernel[0]
        if all(x > 0 for x in v) or all(x < 0 for x in v):
            vec = primitive_integer_vector(v)
            if vec[0] < 0:
                vec = tuple(-x for x in vec)
            return Classification("AFF", vec)
    return Classification("IND")


def classify_all(a: CartanMatrix) -> list[tuple[list[int], Classification]]:
    return [(comp, classify(a.submatrix(comp))) for comp in components(a)]


def is_finite_type(a: CartanMatrix) -> bool:
    return all(c.kind == "FIN" for _, c in classify_all(a))


def require_finite(a: CartanMatrix) -> None:
    for comp, c in classify_all(a):
        if c.kind != "FIN":
            raise NotFiniteType(f"block {comp} is of type {c.kind}")


# ---------------------------------------------------------------------------
# standard matrices

FAMILIES = "ABCDEFG"


def _legal(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        # D3 is accepted (it is A3 with another labelling) so that the
        # fundamental-group table can be checked from n = 3.
        "D": rank >= 3,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


def standard_matrix(family: str, rank: int) -> CartanMatrix:
    """Finite-type matrix under the usual labelling of the Dynkin diagram."""
    family = family.upper()
    if not _legal(family, rank):
        raise IllegalRank(f"no finite type {family}{rank}")
    n = rank
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def edge(i, j, aij=-1, aji=-1):
        m[i - 1][j - 1] = aij
        m[j - 1][i - 1] = aji

    if family in "ABC":
        for i in range(1, n):
            edge(i, i + 1)
        if family == "B":
            edge(1, 2, -2, -1)
        elif family == "C":
            edge(1, 2, -1, -2)
    elif family == "D":
        edge(1, 3)
        edge(2, 3)
        for i in range(3, n):
            edge(i, i + 1)
    elif family == "E":
        edge(1, 3)
        edge(2, 4)
        for i in range(3, n):
            edge(i, i + 1)
    elif family == "F":
        edge(1, 2)
        edge(2, 3, -1, -2)
        edge(3, 4)
    else:
        edge(1, 2, -1, -3)
    return validate(m)


_TYPE_RE = re.compile(r"^([a-gA-G])(\d+)$")


def parse_type(text: str) -> list[tuple[str, int]]:
    """``"e8"`` -> ``[("E", 8)]``; products like ``"a2xg2"`` give several factors."""
    parts = [p for p in re.split(r"[x*+ ]+", text.strip()) if p]
    out = []
    for p in parts:
        mt = _TYPE_RE.match(p)
        if not mt:
            raise IllegalRank(f"cannot parse type {p!r}")
        fam, rank = mt.group(1).upper(), int(mt.group(2))
        if not _legal(fam, rank):
            raise IllegalRank(f"no finite type {fam}{rank}")
        out.append((fam, rank))
    if not out:
        raise IllegalRank("empty type string")
    return out


def block_diagonal(blocks: Sequence[CartanMatrix]) -> CartanMatrix:
    n = sum(b.rank for b in blocks)
    m = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.rank):
            for j in range(b.rank):
                m[off + i][off + j] = b.entries[i][j]
        off += b.rank
    return validate(m)


def cartan_from_type(text: str) -> CartanMatrix:
    return block_diagonal([standard_matrix(f, r) for f, r in parse_type(text)])


# ---------------------------------------------------------------------------
# recognition


@dataclass(frozen=True)
class DynkinType:
    """Result of :func:`recognize`.

    ``relabelling[i-1]`` is the standard label of input vertex ``i``, so
    ``standard.a(relabelling[i-1], relabelling[j-1]) == block.a(i, j)``.
    """

    family: str
    rank: int
    relabelling: tuple[int, ...]
    note: str | None = field(default=None, compare=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


def _find_relabellings(block: CartanMatrix, target: CartanMatrix):
    """Yield bijections p (0-based lists) with target[p[i]][p[j]] == block[i][j]."""
    n = block.rank
    if target.rank != n:
        return
    b, t = block.entries, target.entries

    def signature(rows, v):
        return tuple(sorted((rows[v][w], rows[w][v]) for w in range(n) if w != v and rows[v][w]))

    sig_b = [signature(b, v) for v in range(n)]
    sig_t = [signature(t, v) for v in range(n)]
    cand = [[w for w in range(n) if sig_t[w] == sig_b[v]] for v in range(n)]
    if any(not c for c in cand):
        return
    # prefer the identity assignment first
    cand = [sorted(c, key=lambda w, v=v: (w != v, w)) for v, c in enumerate(cand)]
    assign = [-1] * n
    used = [False] * n

    def place(v):
        if v == n:
            yield list(assign)
            return
        for w in cand[v]:
            if used[w]:
                continue
            if all(t[w][assign[u]] == b[v][u] and t[assign[u]][w] == b[u][v] for u in range(v)):
                assign[v] = w
                used[w] = True
                yield from place(v + 1)
                used[w] = False
        assign[v] = -1

    yield from place(0)


def recognize(block) -> DynkinType:
    """Identify an indecomposable finite-type block with a standard diagram.

    An identity relabelling wins over any other match, so ``[[2,-1],[-2,2]]``
    is reported as C2 (its transpose, or the swapped labelling, is B2).
    """
    a = validate(block)
    if classify(a).kind != "FIN":
        raise NotFiniteType("recognize expects a finite-type indecomposable matrix")
    n = a.rank
    matches = []
    for fam in FAMILIES:
        if not _legal(fam, n) or (fam == "D" and n == 3):
            continue
        for p in _find_relabellings(a, standard_matrix(fam, n)):
            matches.append((fam, tuple(x + 1 for x in p)))
            break
    if not matches:
        raise NotFiniteType("no standard diagram matches")  # pragma: no cover
    ident = tuple(range(1, n + 1))
    fam, relab = next(((f, r) for f, r in matches if r == ident), matches[0])
    note = None
    if fam in "BC":
        other = "C" if fam == "B" else "B"
        if n == 2:
            note = f"{other}2 under the swapped labelling (transpose matrix)"
        else:
            note = f"transpose matrix has type {other}{n}"
    return DynkinType(fam, n, relab, note)


def dynkin_types(a: CartanMatrix) -> list[tuple[list[int], DynkinType]]:
    return [(comp, recognize(a.submatrix(comp))) for comp in components(a)]


# ---------------------------------------------------------------------------
# epsilon and the fundamental group


def epsilon(a: CartanMatrix) -> tuple[int, ...]:
    """Two-colouring by signs; the smallest vertex of each component gets +1."""
    n = a.rank
    sign = [0] * n
    for comp in components(a):
        start = comp[0] - 1
        sign[start] = 1
        queue = [start]
        while queue:
            v = queue.pop(0)
            for w in range(n):
                if w == v or a.entries[v][w] == 0:
                    continue
                if sign[w] == 0:
                    sign[w] = -sign[v]
                    queue.append(w)
                elif sign[w] == sign[v]:
                    raise OddCycle(f"vertices {v + 1} and {w + 1} close an odd cycle")
    return tuple(sign)


def fundamental_group(a: CartanMatrix) -> tuple[int, ...]:
    """Invariant factors (> 1) of the weight lattice modulo the root lattice."""
    require_finite(a)
    return tuple(d for d in smith_normal_form(a.rows()) if d > 1)


def inverse_positive(a: CartanMatrix) -> bool:
    """True when every entry of ``A^-1`` is strictly positive."""
    inv = inverse_rational(a.rows())
    return inv is not None and all(x > Fraction(0) for row in inv for x in row)
