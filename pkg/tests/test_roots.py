import pytest

from chevalier import golden
from chevalier.cartan import cartan_from_type
from chevalier.roots import NotARoot, generate

TYPES = [f"a{n}" for n in range(1, 7)] + [f"b{n}" for n in range(2, 7)] + \
        [f"c{n}" for n in range(2, 7)] + [f"d{n}" for n in range(4, 7)] + \
        ["e6", "e7", "e8", "f4", "g2"]


def reference_roots(A):
    """Straight transcription of the orbit procedure on lists."""
    n = len(A)

    def refl(r, i):
        nr = r[:]
        nr[i] -= sum(A[i][j] * nr[j] for j in range(n))
        return nr

    R = [[int(i == j) for j in range(n)] for i in range(n)]
    for r in R:
        for i in range(n):
            if R[i] != r:
                nr = refl(r, i)
                if nr not in R:
                    R.append(nr)
    R.sort(reverse=True)
    R.sort(key=sum)
    return [tuple(r) for r in R]


def expected_count(name):
    fam, n = name[0], int(name[1:])
    return {"a": n * (n + 1) // 2, "b": n * n, "c": n * n, "d": n * (n - 1)}.get(
        fam, {"e6": 36, "e7": 63, "e8": 120, "f4": 24, "g2": 6}.get(name))


@pytest.mark.parametrize("name", TYPES)
def test_roots_match_orbit_procedure(name):
    a = cartan_from_type(name)
    rs = generate(a)
    assert list(rs.roots[: rs.N]) == reference_roots(a.rows())
    assert rs.N == expected_count(name)
    assert rs.roots[rs.N:] == tuple(tuple(-x for x in r) for r in rs.roots[: rs.N])


@pytest.mark.parametrize("name", TYPES)
def test_string_numbers(name):
    rs = generate(cartan_from_type(name))
    for i in range(1, rs.rank + 1):
        for k in range(1, 2 * rs.N + 1):
            if k in (i, rs.negative(i)):
                continue
            p, q = rs.string_pq(i, k)
            assert q - p == rs.simple_pairing(i, k)
            beta = rs.roots[k - 1]
            up = tuple(x + (j == i - 1) * (p + 1) for j, x in enumerate(beta))
            assert not rs.find(up)
            for m in range(-q, p + 1):
                assert rs.find(tuple(x + (j == i - 1) * m for j, x in enumerate(beta)))


def test_extended_string_convention_on_simple_roots():
    rs = generate(golden.G2_CARTAN)
    assert rs.string_pq(1, 1) == (0, 2)
    assert rs.string_pq(1, rs.negative(1)) == (2, 0)


@pytest.mark.parametrize("name, root", sorted(golden.EXCEPTIONAL_HIGHEST_ROOTS.items()))
def test_highest_roots(name, root):
    rs = generate(cartan_from_type(name))
    assert rs.roots[rs.highest_root() - 1] == root


@pytest.mark.parametrize("name, short, coroot", [
    ("g2", (1, 2), (3, 2)),
    ("f4", (1, 2, 3, 2), (2, 4, 3, 2)),
    ("b4", (1, 1, 1, 1), (1, 2, 2, 2)),
    ("c4", (1, 2, 2, 1), (2, 2, 2, 1)),
])
def test_highest_short_root_and_its_coroot(name, short, coroot):
    rs = generate(cartan_from_type(name))
    k = rs.highest_short_root()
    assert rs.roots[k - 1] == short
    assert rs.coroot_coeffs(k) == coroot


def test_g2_short_roots_and_coroots():
    rs = generate(golden.G2_CARTAN)
    assert rs.short_indices() == [2, 3, 4, 8, 9, 10]
    for root, coroot in golden.G2_COROOTS.items():
        assert rs.coroot_coeffs(root) == coroot


@pytest.mark.parametrize("name", ["g2", "f4", "b3", "c3", "e6"])
def test_pairing_is_an_integer_cartan_number(name):
    rs = generate(cartan_from_type(name))
    for a in range(1, rs.N + 1):
        assert rs.pairing(a, a) == 2
        for b in range(1, 2 * rs.N + 1):
            assert rs.pairing(a, b) in (-3, -2, -1, 0, 1, 2, 3)


def test_unknown_root_raises():
    rs = generate(golden.G2_CARTAN)
    with pytest.raises(NotARoot):
        rs.index((5, 5))
    with pytest.raises(NotARoot):
        rs.index(13)


def test_json_shape():
    doc = generate(golden.G2_CARTAN).to_json()
    assert doc["N"] == 6 and doc["roots"][5] == [2, 3] and doc["highest"] == 6
