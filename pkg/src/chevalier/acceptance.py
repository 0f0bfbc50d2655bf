"""The ten acceptance criteria as runnable checks.

Each check returns a :class:`CriterionResult`; failures carry a short
description of what disagreed.  Reference values live in :mod:`golden`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import golden
from .canbasis import (build, checkrels, nrs_table, structconst, structconst_properties)
from .cartan import cartan_from_type, classify, fundamental_group
from .chevgroup import ChevalleyGroup, relation_suite
from .exactnum import QQ, ZT
from .roots import generate
from .weights import (adjoint_module, check_admissible, load_module, minuscule_weights,
                      rep_minuscule, sl2_irrep, weightorbit, fundamental_weight)
from .weyl import WeylGroup


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = True
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def expect(self, good: bool, message: str) -> bool:
        if not good:
            self.passed = False
            self.notes.append(message)
        return good

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"[{status}] {self.number:>2}. {self.title} ({self.seconds:.2f}s)"
        return head if self.passed else head + ": " + "; ".join(self.notes[:4])


def _types(families: str, lo: int, hi: int) -> list[str]:
    out = []
    for fam in families:
        start = {"a": 1, "b": 2, "c": 2, "d": 3}.get(fam, lo)
        out += [f"{fam}{n}" for n in range(max(lo, start), hi + 1)]
    return out


ALL_FINITE = _types("abcd", 1, 8) + ["e6", "e7", "e8", "f4", "g2"]


def _split(name: str) -> tuple[str, int]:
    return name[0], int(name[1:])


# ---------------------------------------------------------------------------


def root_systems(res: CriterionResult) -> None:
    rs = generate(golden.G2_CARTAN)
    res.expect(list(rs.roots[: rs.N]) == golden.G2_POSITIVE_ROOTS, "g2 roots differ")
    for name, size in (("f4", 24), ("e6", 36), ("e7", 63), ("e8", 120)):
        t0 = time.perf_counter()
        rs = generate(cartan_from_type(name))
        elapsed = time.perf_counter() - t0
        ref = golden.positive_roots(name)
        res.expect(rs.N == size == len(ref), f"{name}: N = {rs.N}")
        bad = [k + 1 for k, (x, y) in enumerate(zip(rs.roots, ref)) if x != y]
        res.expect(not bad, f"{name}: first differing position {bad[:1]}")
        res.expect(elapsed < 1.0, f"{name}: generation took {elapsed:.2f}s")


def weyl_orders(res: CriterionResult) -> None:
    for name, order in golden.EXCEPTIONAL_WEYL_ORDERS.items():
        t0 = time.perf_counter()
        got = WeylGroup.of(generate(cartan_from_type(name))).order()
        res.expect(got == order, f"{name}: order {got} != {order}")
        res.expect(time.perf_counter() - t0 < 30, f"{name}: order too slow")
    for name in _types("abcd", 1, 6):
        fam, n = _split(name)
        got = WeylGroup.of(generate(cartan_from_type(name))).order()
        res.expect(got == golden.classical_weyl_order(fam, n), f"{name}: order {got}")
    for name in ("g2", "b3", "a4", "d4", "f4"):
        W = WeylGroup.of(generate(cartan_from_type(name)))
        levels = W.allwords()
        count = sum(len(level) for level in levels)
        res.expect(count == W.order(), f"{name}: allwords found {count} elements")
        perms = {W.wordperm(w) for level in levels for w in level}
        res.expect(len(perms) == count, f"{name}: allwords repeats an element")


def classification(res: CriterionResult) -> None:
    for name in ALL_FINITE:
        c = classify(cartan_from_type(name))
        res.expect(c.kind == "FIN", f"{name} classified {c.kind}")
    for name, matrix, labels in golden.AFFINE_DIAGRAMS:
        c = classify(matrix)
        if not res.expect(c.kind == "AFF", f"{name} classified {c.kind}"):
            continue
        u = list(c.null_vector)
        proportional = all(u[i] * labels[0] == labels[i] * u[0] for i in range(len(u)))
        res.expect(proportional, f"{name}: null vector {u} vs labels {list(labels)}")
    c = classify(golden.INDEFINITE_EXAMPLE)
    res.expect(c.kind == "IND", f"indefinite example classified {c.kind}")


def fundamental_groups(res: CriterionResult) -> None:
    names = (_types("a", 1, 6) + _types("bc", 2, 4) + _types("d", 3, 6)
             + ["e6", "e7", "e8", "f4", "g2"])
    for name in names:
        fam, n = _split(name)
        got = tuple(fundamental_group(cartan_from_type(name)))
        want = golden.fundamental_group_factors(fam, n)
        res.expect(got == want, f"{name}: factors {got} != {want}")


def lie_algebra_build(res: CriterionResult) -> None:
    d = build(golden.G2_CARTAN)
    ref = golden.g2_generator_matrices()
    mats = [d.E[0], d.E[1], d.F[0], d.F[1]]
    for label, m, r in zip(("e1", "e2", "f1", "f2"), mats, ref):
        res.expect(m.to_dense() == r, f"g2 {label} differs from the printed matrix")
    for name in ALL_FINITE:
        t0 = time.perf_counter()
        d = build(cartan_from_type(name))
        rep = checkrels(d)
        elapsed = time.perf_counter() - t0
        res.expect(rep.ok, f"{name}: {rep}")
        res.expect(d.dim == d.rank + 2 * d.rs.N, f"{name}: dim {d.dim}")
        if name == "e8":
            res.expect(elapsed < 5.0, f"e8 build and checkrels took {elapsed:.2f}s")


def structure_constants(res: CriterionResult) -> None:
    d = build(golden.G2_CARTAN)
    _, printed = golden.g2_structure_table()
    ours = nrs_table(d)
    diffs = [(r, c) for r in range(12) for c in range(12) if ours[r][c] != printed[r][c]]
    if diffs:
        labels = golden.g2_structure_table()[0]
        r, c = diffs[0]
        res.expect(False, f"printed G2 table differs in {len(diffs)} entries, first "
                          f"N({labels[r]},{labels[c]}) printed {printed[r][c]}, computed {ours[r][c]}")
    s = structconst(d, 2, 4)
    res.expect(s.as_tuple() == (2, 4, -3, 5), f"structconst(2,4) = {s.as_tuple()}")
    for root, coroot in golden.G2_COROOTS.items():
        got = d.rs.coroot_coeffs(root)
        res.expect(got == coroot, f"coroot of {root} is {got}, expected {coroot}")
    for name in ("f4", "e7"):
        rep = structconst_properties(build(cartan_from_type(name)))
        res.expect(rep.ok, f"{name}: {len(rep.failures)} property failures, first {rep.failures[:1]}")


def minuscule_data(res: CriterionResult) -> None:
    for name in ALL_FINITE:
        fam, n = _split(name)
        a = cartan_from_type(name)
        got = minuscule_weights(a)
        want = golden.minuscule_indices(fam, n)
        res.expect(got == want, f"{name}: minuscule {got} != {want}")
        for i in got:
            size = len(weightorbit(a, fundamental_weight(n, i)))
            expected = golden.minuscule_orbit_size(fam, n, i)
            res.expect(size == expected, f"{name}: orbit of weight {i} has {size}, want {expected}")
    orbit = weightorbit(cartan_from_type("e6"), fundamental_weight(6, 1))
    res.expect(orbit == golden.E6_ORBIT_OMEGA1, "e6 orbit of the first fundamental weight differs")


def _same(res: CriterionResult, label: str, got, want) -> None:
    res.expect(got == want, f"{label} differs")


def representation_matrices(res: CriterionResult) -> None:
    G = ChevalleyGroup(rep_minuscule(cartan_from_type("c2"), [2]), ZT)
    for i in (1, 2):
        _same(res, f"c2 minuscule x{i}(T)", G.xi_mat(i, "T").to_dense(), golden.C2_MINUSCULE[f"x{i}"])
        _same(res, f"c2 minuscule y{i}(T)", G.yi_mat(i, "T").to_dense(), golden.C2_MINUSCULE[f"y{i}"])

    adj = adjoint_module(build([[2]]))
    G = ChevalleyGroup(adj, ZT)
    _same(res, "a1 adjoint X1(T)", G.xi_mat(1, "T").to_dense(), golden.A1_ADJOINT["x1"])
    _same(res, "a1 adjoint Y1(T)", G.yi_mat(1, "T").to_dense(), golden.A1_ADJOINT["y1"])
    G = ChevalleyGroup(adj, QQ)
    for xi in (Fraction(3), Fraction(-2), Fraction(1, 5)):
        _same(res, f"a1 adjoint N1({xi})", G.n_mat(1, xi).to_dense(), golden.a1_adjoint_n(xi))
        _same(res, f"a1 adjoint H1({xi})", G.h_mat(1, xi).to_dense(), golden.a1_adjoint_h(xi))

    mod = sl2_irrep(4)
    G = ChevalleyGroup(mod, ZT)
    _same(res, "sl2 irrep(4) x", G.xi_mat(1, "T").to_dense(), golden.SL2_IRREP4["x"])
    _same(res, "sl2 irrep(4) y", G.yi_mat(1, "T").to_dense(), golden.SL2_IRREP4["y"])
    G = ChevalleyGroup(mod, QQ)
    for t in (Fraction(2), Fraction(-3), Fraction(2, 7)):
        _same(res, f"sl2 irrep(4) n({t})", G.n_mat(1, t).to_dense(), golden.sl2_irrep4_n(t))
        _same(res, f"sl2 irrep(4) h({t})", G.h_mat(1, t).to_dense(), golden.sl2_irrep4_h(t))

    mod = load_module(golden.g2_seven_json())
    report = check_admissible(mod)
    res.expect(report.ok, f"g2 7-dim module: {report}")
    G = ChevalleyGroup(mod, ZT)
    for i in (1, 2):
        _same(res, f"g2 7-dim x{i}", G.xi_mat(i, "T").to_dense(), golden.G2_SEVEN_SIMPLE[f"x{i}"])
        _same(res, f"g2 7-dim y{i}", G.yi_mat(i, "T").to_dense(), golden.G2_SEVEN_SIMPLE[f"y{i}"])
    for root, want in golden.G2_SEVEN_ROOT_ELEMENTS.items():
        _same(res, f"g2 7-dim x_{root}", G.x_mat(root, "T").to_dense(), want)


SUITE_MODULES = (
    ("a2 adjoint", lambda: adjoint_module(build(cartan_from_type("a2")))),
    ("g2 adjoint", lambda: adjoint_module(build(cartan_from_type("g2")))),
    ("c2 minuscule", lambda: rep_minuscule(cartan_from_type("c2"), [2])),
    ("e6 minuscule", lambda: rep_minuscule(cartan_from_type("e6"), [1])),
    ("a1 sl2irrep(4)", lambda: sl2_irrep(4)),
)
SUITE_RINGS = ("GF(2)", "GF(3)", "GF(5)", "GF(7)", "QQ")


def relation_suites(res: CriterionResult, report: Callable[[str], None] | None = None) -> None:
    for label, make in SUITE_MODULES:
        mod = make()
        for ring in SUITE_RINGS:
            rep = relation_suite(mod, ring)
            if report:
                for line in rep.lines():
                    report(line)
            bad = [r.name for r in rep.results if not r.ok]
            res.expect(not bad, f"{label} over {ring}: {', '.join(bad)}")


def admissibility(res: CriterionResult) -> None:
    for name in ALL_FINITE:
        a = cartan_from_type(name)
        mod = adjoint_module(build(a))
        rep = check_admissible(mod)
        res.expect(rep.ok, f"{name} adjoint: {rep}")
        worst = max(mod.nilpotency(k) for k in range(1, 2 * mod.rs.N + 1))
        res.expect(worst <= 4, f"{name} adjoint: ad(e)^{worst - 1} != 0")
        for i in minuscule_weights(a):
            mod = rep_minuscule(a, [i])
            rep = check_admissible(mod)
            res.expect(rep.ok, f"{name} minuscule {i}: {rep}")
            res.expect(all((e @ e).is_zero() for e in mod.E), f"{name} minuscule {i}: e^2 != 0")


CRITERIA = (
    (1, "root systems match the printed lists", root_systems),
    (2, "Weyl group orders and word enumeration", weyl_orders),
    (3, "finite, affine and indefinite classification", classification),
    (4, "fundamental groups", fundamental_groups),
    (5, "Lie algebra generators and Chevalley relations", lie_algebra_build),
    (6, "structure constants and coroots", structure_constants),
    (7, "minuscule weights and orbits", minuscule_data),
    (8, "representation matrices", representation_matrices),
    (9, "group relation suite over small fields and Q", relation_suites),
    (10, "admissibility of adjoint and minuscule modules", admissibility),
)

TIME_LIMITS = {9: 60.0}


def run_criterion(number: int) -> CriterionResult:
    _, title, fn = CRITERIA[number - 1]
    res = CriterionResult(number, title)
    t0 = time.perf_counter()
    try:
        fn(res)
    except Exception as exc:  # a crash is a failure of that criterion, not of the runner
        res.expect(False, f"raised {type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - t0
    limit = TIME_LIMITS.get(number)
    if limit is not None:
        res.expect(res.seconds < limit, f"took {res.seconds:.1f}s, limit {limit:.0f}s")
    return res


def run_all(numbers=None) -> list[CriterionResult]:
    return [run_criterion(n) for n in (numbers or range(1, len(CRITERIA) + 1))]
