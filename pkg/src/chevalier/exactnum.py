"""Exact coefficient rings and sparse exact linear algebra.

Every matrix in the package is a :class:`SparseMat` over one of four rings:
the integers ``ZZ``, the rationals ``QQ``, a prime field ``GF(p)`` or the
polynomial ring ``ZT`` in one indeterminate ``T`` over the integers.

Ring elements are stored in their native Python form so that ``+``, ``-``
and ``*`` work directly on them: ``int`` for ``ZZ`` and ``GF(p)`` (reduced
into ``[0, p)``), :class:`fractions.Fraction` for ``QQ`` and :class:`IntPoly`
for ``ZT``.  Matrix indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Iterator, Mapping, Sequence


class ExactError(ValueError):
    """Dimension, ring or arithmetic misuse."""


class DimensionMismatch(ExactError):
    pass


class RingMismatch(ExactError):
    pass


# ---------------------------------------------------------------------------
# Polynomials over the integers


class IntPoly:
    """Polynomial in ``T`` with integer coefficients, lowest degree first.

    The zero polynomial has no coefficients; otherwise the last coefficient
    is non-zero, so ``degree == len(coeffs) - 1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def const(cls, n: int) -> "IntPoly":
        return cls((n,))

    @classmethod
    def T(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    @staticmethod
    def _coerce(x) -> "IntPoly":
        if isinstance(x, IntPoly):
            return x
        if isinstance(x, int):
            return IntPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ExactError("negative power of a polynomial")
        out, base = IntPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


# ---------------------------------------------------------------------------
# Rings


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


class Ring:
    """Operations on the native representation of one coefficient ring."""

    name = "?"
    is_field = False

    def normalize(self, v):
        return v

    def from_int(self, n: int):
        raise NotImplementedError

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def inv(self, v):
        raise ExactError(f"{self.name} is not a field")

    def pow(self, v, n: int):
        if n < 0:
            return self.pow(self.inv(v), -n)
        out = self.one()
        base = v
        while n:
            if n & 1:
                out = self.normalize(out * base)
            base = self.normalize(base * base)
            n >>= 1
        return out

    def coerce(self, v):
        """Bring an int (or a value already in this ring) into native form."""
        if isinstance(v, bool):
            v = int(v)
        if isinstance(v, int):
            return self.from_int(v)
        return self.normalize(v)

    def encode(self, v):
        return v

    def decode(self, v):
        return self.coerce(v)

    def __repr__(self) -> str:
        return self.name


class IntegerRing(Ring):
    name = "ZZ"

    def from_int(self, n):
        return int(n)

    def coerce(self, v):
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise ExactError(f"{v} is not an integer")
            return int(v.numerator)
        if isinstance(v, IntPoly):
            if v.degree > 0:
                raise ExactError(f"{v} is not an integer")
            return v.coeffs[0] if v.coeffs else 0
        return int(v)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


class RationalField(Ring):
    """Rationals; integral values are kept as ``int`` for speed."""

    name = "QQ"
    is_field = True

    def normalize(self, v):
        if type(v) is Fraction and v.denominator == 1:
            return v.numerator
        return v

    def from_int(self, n):
        return int(n)

    def coerce(self, v):
        if isinstance(v, int):
            return int(v)
        return self.normalize(Fraction(v))

    def inv(self, v):
        if v == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.normalize(1 / Fraction(v))

    def encode(self, v):
        v = Fraction(v)
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Ring):
    """GF(p) for a prime ``p < 2**31``; elements are ints in ``[0, p)``."""

    is_field = True

    def __init__(self, p: int):
        p = int(p)
        if p >= 2**31 or not is_prime(p):
            raise ExactError(f"{p} is not a word-size prime")
        self.p = p
        self.name = f"GF({p})"

    def normalize(self, v):
        return v % self.p

    def from_int(self, n):
        return int(n) % self.p

    def coerce(self, v):
        if isinstance(v, PrimeFieldElt):
            if v.p != self.p:
                raise RingMismatch(f"element of GF({v.p}) used in GF({self.p})")
            return v.value
        if isinstance(v, Fraction):
            return (v.numerator * pow(v.denominator, -1, self.p)) % self.p
        return int(v) % self.p

    def inv(self, v):
        v %= self.p
        if v == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(v, self.p - 2, self.p)

    def element(self, v) -> "PrimeFieldElt":
        return PrimeFieldElt(self.p, self.coerce(v))

    def elements(self) -> list[int]:
        return list(range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


class PolyRing(Ring):
    name = "ZT"

    def from_int(self, n):
        return IntPoly.const(n)

    def coerce(self, v):
        if isinstance(v, IntPoly):
            return v
        if isinstance(v, (list, tuple)):
            return IntPoly(v)
        return IntPoly.const(int(v))

    def encode(self, v):
        return list(v.coeffs)

    def __eq__(self, other):
        return isinstance(other, PolyRing)

    def __hash__(self):
        return hash("ZT")


ZZ = IntegerRing()
QQ = RationalField()
ZT = PolyRing()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def ring_from_name(name: str) -> Ring:
    """Parse ``ZZ``, ``QQ``/``q``, ``ZT`` or ``GF(p)``/a bare prime."""
    key = str(name).strip()
    low = key.lower()
    if low in ("zz", "z", "int"):
        return ZZ
    if low in ("qq", "q", "rat"):
        return QQ
    if low in ("zt", "z[t]", "poly"):
        return ZT
    if low.startswith("gf(") and low.endswith(")"):
        return PrimeField(int(low[3:-1]))
    if low.isdigit():
        return PrimeField(int(low))
    raise ExactError(f"unknown ring {name!r}")


@dataclass(frozen=True)
class PrimeFieldElt:
    """A scalar of GF(p) with operator overloading, for user-level code."""

    p: int
    value: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ExactError(f"{self.p} is not prime")
        object.__setattr__(self, "value", self.value % self.p)

    def _other(self, o) -> int:
        if isinstance(o, PrimeFieldElt):
            if o.p != self.p:
                raise RingMismatch("elements of different prime fields")
            return o.value
        return int(o)

    def __add__(self, o):
        return PrimeFieldElt(self.p, self.value + self._other(o))

    __radd__ = __add__

    def __sub__(self, o):
        return PrimeFieldElt(self.p, self.value - self._other(o))

    def __rsub__(self, o):
        return PrimeFieldElt(self.p, self._other(o) - self.value)

    def __mul__(self, o):
        return PrimeFieldElt(self.p, self.value * self._other(o))

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElt(self.p, -self.value)

    def inverse(self) -> "PrimeFieldElt":
        return PrimeFieldElt(self.p, PrimeField(self.p).inv(self.value))

    def __truediv__(self, o):
        return self * PrimeFieldElt(self.p, self._other(o)).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElt(self.p, pow(self.value, n, self.p))

    def __int__(self):
        return self.value

    def __eq__(self, o):
        if isinstance(o, PrimeFieldElt):
            return o.p == self.p and o.value == self.value
        if isinstance(o, int):
            return (o - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.value))


def specialize(poly: IntPoly, ring: Ring, value):
    """Image of ``poly`` under the ring map ``ZZ[T] -> ring`` sending T to value."""
    v = ring.coerce(value)
    out = ring.zero()
    for c in reversed(poly.coeffs):
        out = ring.normalize(out * v + ring.from_int(c))
    if isinstance(ring, PrimeField) and isinstance(value, PrimeFieldElt):
        return ring.element(out)
    return out


# ---------------------------------------------------------------------------
# Sparse matrices


class SparseMat:
    """Immutable sparse matrix over a :class:`Ring`.

    Internally a dict ``row -> {col: value}`` with no stored zeros.
    """

    __slots__ = ("nrows", "ncols", "ring", "_rows")

    def __init__(self, nrows: int, ncols: int, entries=None, ring: Ring = ZZ, *,
                 _trusted_rows: dict | None = None):
        object.__setattr__(self, "nrows", int(nrows))
        object.__setattr__(self, "ncols", int(ncols))
        object.__setattr__(self, "ring", ring)
        if _trusted_rows is not None:
            object.__setattr__(self, "_rows", _trusted_rows)
            return
        rows: dict[int, dict[int, object]] = {}
        if isinstance(entries, Mapping):
            triples = ((r, c, v) for (r, c), v in entries.items())
        else:
            triples = entries or ()
        for r, c, val in triples:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise DimensionMismatch(f"entry ({r},{c}) outside {nrows}x{ncols}")
            val = ring.coerce(val)
            if val:
                row = rows.setdefault(r, {})
                if c in row:
                    s = ring.normalize(row[c] + val)
                    if s:
                        row[c] = s
                    else:
                        del row[c]
                        if not row:
                            del rows[r]
                else:
                    row[c] = val
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SparseMat is immutable")

    # construction helpers
    @classmethod
    def _make(cls, nrows, ncols, ring, rows) -> "SparseMat":
        return cls(nrows, ncols, ring=ring, _trusted_rows=rows)

    @classmethod
    def zero(cls, nrows: int, ncols: int | None = None, ring: Ring = ZZ) -> "SparseMat":
        return cls._make(nrows, nrows if ncols is None else ncols, ring, {})

    @classmethod
    def identity(cls, n: int, ring: Ring = ZZ) -> "SparseMat":
        one = ring.one()
        return cls._make(n, n, ring, {i: {i: one} for i in range(n)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence], ring: Ring = ZZ) -> "SparseMat":
        n = len(rows)
        m = len(rows[0]) if n else 0
        ents = []
        for r, row in enumerate(rows):
            if len(row) != m:
                raise DimensionMismatch("ragged dense matrix")
            for c, v in enumerate(row):
                ents.append((r, c, v))
        return cls(n, m, ents, ring)

    @classmethod
    def diagonal_matrix(cls, diag: Sequence, ring: Ring = ZZ) -> "SparseMat":
        return cls(len(diag), len(diag), [(i, i, v) for i, v in enumerate(diag)], ring)

    # access
    def __getitem__(self, rc):
        r, c = rc
        return self._rows.get(r, {}).get(c, self.ring.zero())

    def items(self) -> Iterator[tuple[int, int, object]]:
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield r, c, row[c]

    def entries(self) -> dict[tuple[int, int], object]:
        return {(r, c): v for r, c, v in self.items()}

    def row(self, r: int) -> dict[int, object]:
        return dict(self._rows.get(r, {}))

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def to_dense(self) -> list[list]:
        z = self.ring.zero()
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for r, c, v in self.items():
            out[r][c] = v
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMat):
            return NotImplemented
        return (self.shape == other.shape and self.ring == other.ring
                and self._rows == other._rows)

    def __hash__(self) -> int:
        return hash((self.shape, self.ring, tuple(self.items())))

    def __repr__(self) -> str:
        return f"SparseMat({self.nrows}x{self.ncols}, {self.ring}, nnz={self.nnz})"

    # arithmetic
    def _check_same(self, other: "SparseMat"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "SparseMat") -> "SparseMat":
        self._check_same(other)
        norm = self.ring.normalize
        rows = {r: dict(row) for r, row in self._rows.items()}
        for r, orow in other._rows.items():
            row = rows.setdefault(r, {})
            for c, v in orow.items():
                s = norm(row[c] + v) if c in row else v
                if s:
                    row[c] = s
                else:
                    del row[c]
            if not row:
                del rows[r]
        return SparseMat._make(self.nrows, self.ncols, self.ring, rows)

    def __neg__(self) -> "SparseMat":
        norm = self.ring.normalize
        rows = {r: {c: norm(-v) for c, v in row.items()} for r, row in self._rows.items()}
        return SparseMat._make(self.nrows, self.ncols, self.ring, rows)

    def __sub__(self, other: "SparseMat") -> "SparseMat":
        return self + (-other)

    def scale(self, s) -> "SparseMat":
        s = self.ring.coerce(s)
        if not s:
            return SparseMat.zero(self.nrows, self.ncols, self.ring)
        norm = self.ring.normalize
        rows = {}
        for r, row in self._rows.items():
            new = {}
            for c, v in row.items():
                x = norm(v * s)
                if x:
                    new[c] = x
            if new:
                rows[r] = new
        return SparseMat._make(self.nrows, self.ncols, self.ring, rows)

    def __matmul__(self, other: "SparseMat") -> "SparseMat":
        return mat_mul(self, other)

    def __pow__(self, n: int) -> "SparseMat":
        if self.nrows != self.ncols:
            raise DimensionMismatch("power of a non-square matrix")
        out = SparseMat.identity(self.nrows, self.ring)
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def transpose(self) -> "SparseMat":
        rows: dict[int, dict[int, object]] = {}
        for r, row in self._rows.items():
            for c, v in row.items():
                rows.setdefault(c, {})[r] = v
        return SparseMat._make(self.ncols, self.nrows, self.ring, rows)

    def map(self, fn, ring: Ring) -> "SparseMat":
        """Apply ``fn`` entrywise, landing in ``ring`` (zeros dropped)."""
        return SparseMat(self.nrows, self.ncols, [(r, c, fn(v)) for r, c, v in self.items()], ring)

    def change_ring(self, ring: Ring) -> "SparseMat":
        return self.map(ring.coerce, ring)

    def specialize(self, ring: Ring, value) -> "SparseMat":
        """Entrywise ring map ``ZZ[T] -> ring`` with ``T -> value``."""
        if self.ring != ZT:
            raise RingMismatch("specialize expects a matrix over ZT")
        v = ring.coerce(value)
        return self.map(lambda p: _spec_native(p, ring, v), ring)

    def exact_div(self, d: int) -> "SparseMat":
        """Divide an integer matrix by ``d``; raises if any entry is not divisible."""
        if self.ring != ZZ:
            raise RingMismatch("exact_div expects an integer matrix")
        rows = {}
        for r, row in self._rows.items():
            new = {}
            for c, v in row.items():
                q, rem = divmod(v, d)
                if rem:
                    raise ExactError(f"entry {v} at ({r},{c}) not divisible by {d}")
                new[c] = q
            rows[r] = new
        return SparseMat._make(self.nrows, self.ncols, self.ring, rows)

    def entry_gcd(self) -> int:
        g = 0
        for _, _, v in self.items():
            g = gcd(g, int(v))
        return g

    def is_diagonal(self) -> bool:
        return all(set(row) == {r} for r, row in self._rows.items())

    def diagonal(self) -> list:
        return [self[i, i] for i in range(min(self.nrows, self.ncols))]

    def is_unitriangular(self, upper: bool = True) -> bool:
        one = self.ring.one()
        if self.nrows != self.ncols:
            return False
        for i in range(self.nrows):
            if self[i, i] != one:
                return False
        for r, c, _ in self.items():
            if (upper and c < r) or (not upper and c > r):
                return False
        return True

    def to_json(self) -> dict:
        enc = self.ring.encode
        return {"nrows": self.nrows, "ncols": self.ncols, "ring": self.ring.name,
                "entries": [[r, c, enc(v)] for r, c, v in self.items()]}

    @classmethod
    def from_json(cls, obj: Mapping, ring: Ring | None = None) -> "SparseMat":
        if ring is None:
            ring = ring_from_name(obj.get("ring", "ZZ"))
        return cls(obj["nrows"], obj["ncols"],
                   [(r, c, ring.decode(v)) for r, c, v in obj["entries"]], ring)


def _spec_native(p: IntPoly, ring: Ring, v):
    out = ring.zero()
    for c in reversed(p.coeffs):
        out = ring.normalize(out * v + ring.from_int(c))
    return out


def mat_mul(a: SparseMat, b: SparseMat) -> SparseMat:
    """Exact product ``a @ b``."""
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"{a.shape} @ {b.shape}")
    norm = a.ring.normalize
    brows = b._rows
    rows = {}
    for r, arow in a._rows.items():
        acc: dict[int, object] = {}
        for k, av in arow.items():
            brow = brows.get(k)
            if brow is None:
                continue
            for c, bv in brow.items():
                if c in acc:
                    acc[c] = acc[c] + av * bv
                else:
                    acc[c] = av * bv
        new = {}
        for c, v in acc.items():
            v = norm(v)
            if v:
                new[c] = v
        if new:
            rows[r] = new
    return SparseMat._make(a.nrows, b.ncols, a.ring, rows)


def commutator(a: SparseMat, b: SparseMat) -> SparseMat:
    return a @ b - b @ a


def block_diagonal(mats: Sequence[SparseMat]) -> SparseMat:
    if not mats:
        return SparseMat.zero(0, 0)
    ring = mats[0].ring
    ents = []
    r0 = c0 = 0
    for m in mats:
        if m.ring != ring:
            raise RingMismatch("block_diagonal over mixed rings")
        ents.extend((r0 + r, c0 + c, v) for r, c, v in m.items())
        r0 += m.nrows
        c0 += m.ncols
    return SparseMat(r0, c0, ents, ring)


# ---------------------------------------------------------------------------
# Dense exact linear algebra on small integer matrices


def _as_int_rows(m) -> list[list[int]]:
    if isinstance(m, SparseMat):
        return [[int(x) for x in row] for row in m.to_dense()]
    return [[int(x) for x in row] for row in m]


def determinant(m) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    a = _as_int_rows(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m) -> tuple[int, ...]:
    """Invariant factors ``d_1 | d_2 | ...`` (length ``min(rows, cols)``, zeros last)."""
    a = _as_int_rows(m)
    nr = len(a)
    nc = len(a[0]) if nr else 0
    t = 0
    while t < min(nr, nc):
        # pivot on the entry of least absolute value in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, nr):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, nc):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if not done:
                # a smaller remainder appeared in row/column t; move it to the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, nr) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, nc) if a[t][j]]
                _, i, j = min(cand)
                if j == t:
                    a[t], a[i] = a[i], a[t]
                else:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue
            # enforce divisibility of the rest by the pivot
            bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                        if a[i][j] % p), None)
            if bad is not None:
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                done = False
        t += 1
    diag = [abs(a[k][k]) for k in range(min(nr, nc))]
    nonzero = sorted(d for d in diag if d)
    return tuple(nonzero + [0] * (len(diag) - len(nonzero)))


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    a = [list(r) for r in rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def solve_rational(m, rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Exact solution of ``m x = rhs`` for square ``m``; ``None`` when singular."""
    a = _as_int_rows(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatch("solve_rational needs a square matrix")
    if len(rhs) != n:
        raise DimensionMismatch("right-hand side has the wrong length")
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(a, rhs)]
    red, pivots = _rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return tuple(red[i][n] for i in range(n))


def nullspace(m) -> list[tuple[Fraction, ...]]:
    """A basis of the rational right kernel of ``m``."""
    a = [[Fraction(x) for x in row] for row in _as_int_rows(m)]
    nc = len(a[0]) if a else 0
    red, pivots = _rref(a)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(tuple(v))
    return basis


def inverse_rational(m) -> list[list[Fraction]] | None:
    a = _as_int_rows(m)
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red]


def primitive_integer_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers (sign preserved)."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def _field_echelon(m: SparseMat, augment: bool):
    ring = m.ring
    if not ring.is_field:
        raise RingMismatch(f"{ring} is not a field")
    n = m.nrows
    if m.ncols != n:
        raise DimensionMismatch("square matrix required")
    norm = ring.normalize
    zero, one = ring.zero(), ring.one()
    rows = m.to_dense()
    if augment:
        for i, row in enumerate(rows):
            row.extend(one if j == i else zero for j in range(n))
    det = one
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c]), None)
        if piv is None:
            return zero, None
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = norm(-det)
        p = rows[c][c]
        det = norm(det * p)
        inv = ring.inv(p)
        rows[c] = [norm(x * inv) for x in rows[c]]
        for r in range(n):
            if r != c and rows[r][c]:
                f = rows[r][c]
                rows[r] = [norm(x - f * y) for x, y in zip(rows[r], rows[c])]
    return det, rows


def field_determinant(m: SparseMat):
    """Determinant of a square matrix over QQ or GF(p)."""
    return _field_echelon(m, augment=False)[0]


def field_inverse(m: SparseMat) -> SparseMat:
    """Inverse over QQ or GF(p); raises ``ZeroDivisionError`` when singular."""
    _, rows = _field_echelon(m, augment=True)
    if rows is None:
        raise ZeroDivisionError("matrix is singular")
    n = m.nrows
    return SparseMat(n, n, [(r, c, rows[r][n + c]) for r in range(n) for c in range(n)
                            if rows[r][n + c]], m.ring)
