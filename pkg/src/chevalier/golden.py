"""Reference data transcribed from the source text, used by the acceptance
checks and the tests.

Everything here is literal data plus small parsers; nothing is computed
from the library itself.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial

from .exactnum import IntPoly

G2_CARTAN = [[2, -1], [-3, 2]]
G2_POSITIVE_ROOTS = [(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)]

# positive roots in the printed order, one digit per simple root
ROOT_TABLES = {
    "f4": """
        1000 0100 0010 0001 1100 0110 0011 1110 0120 0111 1120 1111 0121 1220
        1121 0122 1221 1122 1231 1222 1232 1242 1342 2342
    """,
    "e6": """
        100000 010000 001000 000100 000010 000001 101000 010100 001100 000110
        000011 101100 011100 010110 001110 000111 111100 101110 011110 010111
        001111 111110 101111 011210 011111 111210 111111 011211 112210 111211
        011221 112211 111221 112221 112321 122321
    """,
    "e7": """
        1000000 0100000 0010000 0001000 0000100 0000010 0000001 1010000 0101000
        0011000 0001100 0000110 0000011 1011000 0111000 0101100 0011100 0001110
        0000111 1111000 1011100 0111100 0101110 0011110 0001111 1111100 1011110
        0112100 0111110 0101111 0011111 1112100 1111110 1011111 0112110 0111111
        1122100 1112110 1111111 0112210 0112111 1122110 1112210 1112111 0112211
        1122210 1122111 1112211 0112221 1123210 1122211 1112221 1223210 1123211
        1122221 1223211 1123221 1223221 1123321 1223321 1224321 1234321 2234321
    """,
    "e8": """
        10000000 01000000 00100000 00010000 00001000 00000100 00000010 00000001
        10100000 01010000 00110000 00011000 00001100 00000110 00000011 10110000
        01110000 01011000 00111000 00011100 00001110 00000111 11110000 10111000
        01111000 01011100 00111100 00011110 00001111 11111000 10111100 01121000
        01111100 01011110 00111110 00011111 11121000 11111100 10111110 01121100
        01111110 01011111 00111111 11221000 11121100 11111110 10111111 01122100
        01121110 01111111 11221100 11122100 11121110 11111111 01122110 01121111
        11222100 11221110 11122110 11121111 01122210 01122111 11232100 11222110
        11221111 11122210 11122111 01122211 12232100 11232110 11222210 11222111
        11122211 01122221 12232110 11232210 11232111 11222211 11122221 12232210
        12232111 11233210 11232211 11222221 12233210 12232211 11233211 11232221
        12243210 12233211 12232221 11233221 12343210 12243211 12233221 11233321
        22343210 12343211 12243221 12233321 22343211 12343221 12243321 22343221
        12343321 12244321 22343321 12344321 22344321 12354321 22354321 13354321
        23354321 22454321 23454321 23464321 23465321 23465421 23465431 23465432
    """,
}

# rows of e1, e2, f1, f2 side by side
G2_GENERATORS = """
    01000000000000 00000000000000 00000000000000 00000000000000
    00000000000000 00300000000000 10000000000000 00000000000000
    00000000000000 00020000000000 00000000000000 01000000000000
    00001000000000 00000100000000 00000000000000 00200000000000
    00000000000000 00000012000000 00010000000000 00000000000000
    00000023000000 00000000000000 00000000000000 00030000000000
    00000000100000 00000000000000 00000100000000 00000000000000
    00000000000000 00000000010000 00000000000000 00001000000000
    00000000000000 00000000003000 00000023000000 00000000000000
    00000000001000 00000000000000 00000000000000 00000012000000
    00000000000000 00000000000200 00000000010000 00000000100000
    00000000000000 00000000000010 00000000000000 00000000002000
    00000000000001 00000000000000 00000000000000 00000000000300
    00000000000000 00000000000000 00000000000010 00000000000000
"""

STRUCTURE_TABLE_G2 = """
     10   .   1   .   .   1   .   *   .   1   .   .  -1
     01  -1   .  -2  -3   .   .   .   *  -3   2  -1   .
     11   .   2   .  -3   .   .  -1   3   *   2   .  -1
     12   .   3   3   .   .   .   .   2  -2   *   1  -1
     13  -1   .   .   .   .   .   .   1   .  -1   *  -1
     23   .   .   .   .   .   .  -1   .   1  -1   1   *
    -10   *   .   1   .   .   1   .  -1   .   .  -1   .
    -01   .   *  -3  -2  -1   .   1   .   2   3   .   .
    -11  -1   3   *   2   .  -1   .  -2   .   3   .   .
    -12   .  -2  -2   *   1   1   .  -3  -3   .   .   .
    -13   .   1   .  -1   *  -1   1   .   .   .   .   .
    -23   1   .   1   1   1   *   .   .   .   .   .   .
"""


def positive_roots(name: str) -> list[tuple[int, ...]]:
    return [tuple(int(ch) for ch in tok) for tok in ROOT_TABLES[name].split()]


def g2_generator_matrices() -> list[list[list[int]]]:
    """Dense 14x14 matrices ``[e1, e2, f1, f2]``."""
    rows = [line.split() for line in G2_GENERATORS.strip().splitlines()]
    return [[[int(ch) for ch in row[k]] for row in rows] for k in range(4)]


def g2_structure_table() -> tuple[list[str], list[list[str]]]:
    """Row labels and the 12 cells of each row (``.``, ``*`` or an integer)."""
    lines = [line.split() for line in STRUCTURE_TABLE_G2.strip().splitlines()]
    return [line[0] for line in lines], [line[1:] for line in lines]


# coroot of a positive root, in terms of the simple coroots
G2_COROOTS = {(1, 1): (3, 1), (1, 2): (3, 2), (1, 3): (1, 1), (2, 3): (2, 1)}

EXCEPTIONAL_WEYL_ORDERS = {"g2": 12, "f4": 1152, "e6": 51840, "e7": 2903040, "e8": 696729600}


def classical_weyl_order(family: str, n: int) -> int:
    if family == "a":
        return factorial(n + 1)
    if family in "bc":
        return 2 ** n * factorial(n)
    if family == "d":
        return 2 ** (n - 1) * factorial(n)
    raise KeyError(family)


EXCEPTIONAL_HIGHEST_ROOTS = {
    "g2": (2, 3), "f4": (2, 3, 4, 2), "e6": (1, 2, 2, 3, 2, 1),
    "e7": (2, 2, 3, 4, 3, 2, 1), "e8": (2, 3, 4, 6, 5, 4, 3, 2),
}


def fundamental_group_factors(family: str, n: int) -> tuple[int, ...]:
    """Invariant factors (> 1) of the weight lattice modulo the root lattice."""
    if family == "a":
        return (n + 1,)
    if family in "bc":
        return (2,)
    if family == "d":
        return (2, 2) if n % 2 == 0 else (4,)
    return {("e", 6): (3,), ("e", 7): (2,)}.get((family, n), ())


def minuscule_indices(family: str, n: int) -> list[int]:
    if family == "a":
        return list(range(1, n + 1))
    if family == "b":
        return [1]
    if family == "c":
        return [n]
    if family == "d":
        return [1, 2, n]
    return {("e", 6): [1, 6], ("e", 7): [7]}.get((family, n), [])


def minuscule_orbit_size(family: str, n: int, i: int) -> int:
    if family == "a":
        return factorial(n + 1) // (factorial(i) * factorial(n + 1 - i))
    if family == "b":
        return 2 ** n
    if family == "c":
        return 2 * n
    if family == "d":
        return 2 ** (n - 1) if i in (1, 2) else 2 * n
    return {"e6": 27, "e7": 56}[f"{family}{n}"]


E6_ORBIT_OMEGA1 = [
    (1, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0), (0, 0, -1, 1, 0, 0),
    (0, 1, 0, -1, 1, 0), (0, -1, 0, 0, 1, 0), (0, 1, 0, 0, -1, 1),
    (0, -1, 0, 1, -1, 1), (0, 1, 0, 0, 0, -1), (0, 0, 1, -1, 0, 1),
    (0, -1, 0, 1, 0, -1), (1, 0, -1, 0, 0, 1), (0, 0, 1, -1, 1, -1),
    (-1, 0, 0, 0, 0, 1), (1, 0, -1, 0, 1, -1), (0, 0, 1, 0, -1, 0),
    (-1, 0, 0, 0, 1, -1), (1, 0, -1, 1, -1, 0), (-1, 0, 0, 1, -1, 0),
    (1, 1, 0, -1, 0, 0), (-1, 1, 1, -1, 0, 0), (1, -1, 0, 0, 0, 0),
    (-1, -1, 1, 0, 0, 0), (0, 1, -1, 0, 0, 0), (0, -1, -1, 1, 0, 0),
    (0, 0, 0, -1, 1, 0), (0, 0, 0, 0, -1, 1), (0, 0, 0, 0, 0, -1),
]


def _path(labels_of_edges: list[tuple[int, int, int, int]], n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in labels_of_edges:
        a[i][j], a[j][i] = aij, aji
    return a


# affine diagrams: (name, matrix, vertex labels); vertex 0 is the extra node
AFFINE_DIAGRAMS = [
    ("A1~", [[2, -2], [-2, 2]], (1, 1)),
    ("A2~", _path([(0, 1, -1, -1), (1, 2, -1, -1), (0, 2, -1, -1)], 3), (1, 1, 1)),
    ("A2(2)", [[2, -4], [-1, 2]], (2, 1)),
    ("D4(3)", [[2, -1, 0], [-1, 2, -3], [0, -1, 2]], (1, 2, 1)),
    ("G2~", [[2, -1, 0], [-1, 2, -1], [0, -3, 2]], (1, 2, 3)),
    ("C2~", _path([(0, 1, -1, -2), (1, 2, -2, -1)], 3), (1, 2, 1)),
    ("A4(2)", _path([(0, 1, -2, -1), (1, 2, -2, -1)], 3), (2, 2, 1)),
    ("D4~", _path([(0, 2, -1, -1), (1, 2, -1, -1), (3, 2, -1, -1), (4, 2, -1, -1)], 5),
     (1, 1, 2, 1, 1)),
    ("F4~", _path([(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)], 5),
     (1, 2, 3, 4, 2)),
    ("E6(2)", _path([(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)], 5),
     (1, 2, 3, 2, 1)),
    ("E6~", _path([(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -1), (3, 4, -1, -1),
                   (2, 5, -1, -1), (5, 6, -1, -1)], 7), (1, 2, 3, 2, 1, 2, 1)),
    ("E7~", _path([(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -1), (3, 4, -1, -1),
                   (4, 5, -1, -1), (5, 6, -1, -1), (3, 7, -1, -1)], 8),
     (1, 2, 3, 4, 3, 2, 1, 2)),
    ("E8~", _path([(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -1), (3, 4, -1, -1),
                   (4, 5, -1, -1), (5, 6, -1, -1), (6, 7, -1, -1), (5, 8, -1, -1)], 9),
     (1, 2, 3, 4, 5, 6, 4, 2, 3)),
]

INDEFINITE_EXAMPLE = [[2, -1, 0], [-2, 2, -1], [0, -3, 2]]


_TERM = re.compile(r"^([+-]?\d*)(T(?:\^(\d+))?)?$")


def poly(text: str) -> IntPoly:
    """Parse a monomial such as ``-2T``, ``T^2`` or ``6``."""
    m = _TERM.match(text.strip())
    if not m or text.strip() in ("", "+", "-"):
        raise ValueError(f"cannot read {text!r}")
    coef_txt, t_part, power = m.groups()
    if coef_txt in ("", "+"):
        coef = 1
    elif coef_txt == "-":
        coef = -1
    else:
        coef = int(coef_txt)
    if not t_part:
        return IntPoly((coef,))
    deg = int(power) if power else 1
    return IntPoly((0,) * deg + (coef,))


def poly_matrix(text: str) -> list[list[IntPoly]]:
    """Rows separated by ``/``, entries by spaces; ``.`` is zero."""
    return [[IntPoly(()) if tok == "." else poly(tok) for tok in row.split()]
            for row in text.split("/")]


# 4-dim minuscule module of type C2: x1(T), x2(T), y1(T), y2(T)
C2_MINUSCULE = {
    "x1": poly_matrix("1 . . . / . 1 T . / . . 1 . / . . . 1"),
    "x2": poly_matrix("1 T . . / . 1 . . / . . 1 T / . . . 1"),
    "y1": poly_matrix("1 . . . / . 1 . . / . T 1 . / . . . 1"),
    "y2": poly_matrix("1 . . . / T 1 . . / . . 1 . / . . T 1"),
}

A1_ADJOINT = {
    "x1": poly_matrix("1 2T T^2 / . 1 T / . . 1"),
    "y1": poly_matrix("1 . . / T 1 . / T^2 2T 1"),
}


def a1_adjoint_n(xi: Fraction) -> list[list[Fraction]]:
    return [[0, 0, xi ** 2], [0, -1, 0], [xi ** -2, 0, 0]]


def a1_adjoint_h(xi: Fraction) -> list[list[Fraction]]:
    return [[xi ** 2, 0, 0], [0, 1, 0], [0, 0, xi ** -2]]


SL2_IRREP4 = {
    "x": poly_matrix("1 4T 6T^2 4T^3 T^4 / . 1 3T 3T^2 T^3 / . . 1 2T T^2 / . . . 1 T"
                     " / . . . . 1"),
    "y": poly_matrix("1 . . . . / T 1 . . . / T^2 2T 1 . . / T^3 3T^2 3T 1 . "
                     "/ T^4 4T^3 6T^2 4T 1"),
}


def sl2_irrep4_n(t: Fraction) -> list[list[Fraction]]:
    z = [[Fraction(0)] * 5 for _ in range(5)]
    z[0][4], z[1][3], z[2][2], z[3][1], z[4][0] = t ** 4, -t ** 2, 1, -t ** -2, t ** -4
    return z


def sl2_irrep4_h(t: Fraction) -> list[list[Fraction]]:
    return [[t ** (4 - 2 * i) if i == j else Fraction(0) for j in range(5)] for i in range(5)]


# 7-dim module of type G2: 1-based (row, col, value) entries of e1, e2, f1, f2
G2_SEVEN = {
    "cartan": G2_CARTAN,
    "weights": [(0, 1), (1, -1), (-1, 2), (0, 0), (1, -2), (-1, 1), (0, -1)],
    "e": [[(2, 3, 1), (5, 6, 1)], [(1, 2, 1), (3, 4, 2), (4, 5, 1), (6, 7, 1)]],
    "f": [[(3, 2, 1), (6, 5, 1)], [(2, 1, 1), (4, 3, 1), (5, 4, 2), (7, 6, 1)]],
}


def g2_seven_json() -> dict:
    def dense(ents):
        m = [[0] * 7 for _ in range(7)]
        for r, c, v in ents:
            m[r - 1][c - 1] = v
        return m
    return {"name": "g2-dim7", "cartan": G2_CARTAN,
            "weights": [list(w) for w in G2_SEVEN["weights"]],
            "e": [dense(x) for x in G2_SEVEN["e"]], "f": [dense(x) for x in G2_SEVEN["f"]]}


def _seven(entries: str) -> list[list[IntPoly]]:
    m = [[IntPoly((1,)) if i == j else IntPoly(()) for j in range(7)] for i in range(7)]
    for item in entries.split():
        pos, val = item.split("=")
        r, c = (int(x) for x in pos.split(","))
        m[r - 1][c - 1] = poly(val)
    return m


# x_i(T) and y_i(T) on the 7-dim module
G2_SEVEN_SIMPLE = {
    "x1": _seven("2,3=T 5,6=T"),
    "x2": _seven("1,2=T 3,4=2T 3,5=T^2 4,5=T 6,7=T"),
    "y1": _seven("3,2=T 6,5=T"),
    "y2": _seven("2,1=T 4,3=T 5,3=T^2 5,4=2T 7,6=T"),
}

# x_alpha(T) on the 7-dim module for every positive root
G2_SEVEN_ROOT_ELEMENTS = {
    (1, 0): _seven("2,3=T 5,6=T"),
    (0, 1): _seven("1,2=-T 3,4=-2T 3,5=T^2 4,5=-T 6,7=-T"),
    (1, 1): _seven("1,3=T 2,4=-2T 2,6=-T^2 4,6=T 5,7=-T"),
    (1, 2): _seven("1,4=-2T 1,7=T^2 2,5=T 3,6=T 4,7=-T"),
    (1, 3): _seven("1,5=T 3,7=-T"),
    (2, 3): _seven("1,6=-T 2,7=-T"),
}
