"""Command-line front end: ``chevalier <subcommand> ...``.

Exit status is 0 on success, 1 when a requested check fails and 2 on a
usage or input error.  ``--json`` makes every subcommand print exactly one
JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import acceptance
from .canbasis import build, checkrels, nrs_table, structconst, structconst_properties
from .cartan import (CartanError, CartanMatrix, cartan_from_type, classify_all, dynkin_types,
                     epsilon, fundamental_group, is_finite_type, validate)
from .chevgroup import ChevalleyGroup, relation_suite, suite_seed
from .exactnum import ExactError, SparseMat, ring_from_name
from .roots import NotARoot, generate
from .weights import (NotAdmissible, NotMinuscule, adjoint_module, check_admissible,
                      load_module, minuscule_weights, rep_minuscule, sl2_irrep, weightorbit)
from .weyl import BadGeneratorIndex, WeylGroup


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").strip("[]()").split(",") if x]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _cartan(args, required: bool = True) -> CartanMatrix | None:
    if args.type and args.matrix:
        raise UsageError("give either --type or --matrix, not both")
    if args.type:
        return cartan_from_type(args.type)
    if args.matrix:
        obj = _read_json(args.matrix)
        rows = obj.get("cartan") if isinstance(obj, dict) else obj
        if rows is None:
            raise UsageError(f'{args.matrix} has no "cartan" entry')
        return validate(rows)
    if required:
        raise UsageError("one of --type or --matrix is required")
    return None


def _cell(v) -> str:
    if isinstance(v, Fraction) and v.denominator == 1:
        return str(v.numerator)
    return str(v)


def _print_matrix(m: SparseMat, out) -> None:
    """Row by row, so large matrices never sit in one string."""
    cells = {(r, c): _cell(v) for r, c, v in m.items()}
    width = max((len(s) for s in cells.values()), default=1)
    for r in range(m.nrows):
        row = (cells.get((r, c), ".") for c in range(m.ncols))
        out.write(" ".join(s.rjust(width) for s in row) + "\n")


def _emit(args, doc, text_lines) -> None:
    if args.json:
        json.dump(doc, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def _module(spec: str, a: CartanMatrix | None):
    if spec.endswith(".json"):
        return load_module(spec)
    kind, _, arg = spec.partition(":")
    if kind == "sl2irrep":
        if not arg.isdigit():
            raise UsageError("sl2irrep needs a highest weight, e.g. sl2irrep:4")
        return sl2_irrep(int(arg))
    if a is None:
        raise UsageError(f"--rep {spec} needs --type or --matrix")
    if kind == "adjoint":
        return adjoint_module(build(a))
    if kind == "minuscule":
        idx = _ints(arg) if arg else minuscule_weights(a)[:1]
        if not idx:
            raise UsageError("this type has no non-zero minuscule weight")
        return rep_minuscule(a, idx)
    raise UsageError(f"unknown representation {spec!r}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_cartan(args) -> int:
    a = _cartan(args)
    blocks = classify_all(a)
    doc = {"cartan": a.rows(),
           "components": [{"vertices": comp, "class": c.kind,
                           "null_vector": list(c.null_vector) if c.null_vector else None}
                          for comp, c in blocks]}
    lines = [str(a)]
    lines += [f"component {comp}: {c}" for comp, c in blocks]
    if is_finite_type(a):
        types = dynkin_types(a)
        doc["types"] = [{"vertices": comp, "type": t.name, "relabelling": list(t.relabelling),
                         "note": t.note} for comp, t in types]
        doc["epsilon"] = list(epsilon(a))
        doc["fundamental_group"] = list(fundamental_group(a))
        for comp, t in types:
            extra = f" ({t.note})" if t.note else ""
            lines.append(f"type {t.name} on {comp}, relabelling {list(t.relabelling)}{extra}")
        lines.append(f"epsilon {list(epsilon(a))}")
        fg = fundamental_group(a)
        lines.append("fundamental group " + (" x ".join(f"Z/{d}" for d in fg) if fg else "trivial"))
    _emit(args, doc, lines)
    return 0


def cmd_roots(args) -> int:
    rs = generate(_cartan(args))
    doc = rs.to_json()
    lines = [f"N = {rs.N}"] + [f"{k:>4}  {list(rs.roots[k - 1])}" for k in range(1, rs.N + 1)]
    lines.append(f"highest root {list(rs.roots[rs.highest_root() - 1])}")
    _emit(args, doc, lines)
    return 0


def cmd_weyl(args) -> int:
    W = WeylGroup.of(generate(_cartan(args)))
    doc, lines = {}, []
    if args.order:
        doc["order"] = W.order()
        lines.append(f"order {doc['order']}")
    if args.allwords is not None:
        levels = W.allwords(args.allwords)
        doc["allwords"] = levels
        lines += [f"length {k}: {level}" for k, level in enumerate(levels)]
    if args.permword:
        perm = tuple(_ints(args.permword))
        if sorted(perm) != list(range(1, 2 * W.N + 1)):
            raise UsageError(f"--permword needs a permutation of 1..{2 * W.N}")
        doc["permword"] = W.permword(perm)
        lines.append(f"reduced word {doc['permword']}")
    if args.wordperm:
        doc["wordperm"] = list(W.wordperm(_ints(args.wordperm)))
        lines.append(f"permutation {doc['wordperm']}")
    if not doc:
        raise UsageError("weyl needs --order, --allwords, --permword or --wordperm")
    _emit(args, doc, lines)
    return 0


def cmd_lie(args) -> int:
    d = build(_cartan(args))
    doc, lines, status = {"dim": d.dim}, [f"dimension {d.dim}"], 0
    if args.checkrels:
        rep = checkrels(d)
        doc["checkrels"] = rep.ok
        lines.append(str(rep))
        status = status or (0 if rep.ok else 1)
    if args.structconst:
        s = structconst(d, *args.structconst)
        doc["structconst"] = list(s.as_tuple())
        lines.append(f"structconst {list(s.as_tuple())}")
    if args.nrs_table:
        table = nrs_table(d)
        labels = ["".join(map(str, r)) for r in d.rs.roots[: d.rs.N]]
        labels += ["-" + x for x in labels]
        doc["nrs_table"] = {"labels": labels, "rows": table}
        lines.append("     " + " ".join(f"{x:>4}" for x in labels))
        lines += [f"{lab:>4} " + " ".join(f"{x:>4}" for x in row) for lab, row in zip(labels, table)]
    if args.export:
        doc.update(d.to_json())
        if not args.json:
            lines.append(json.dumps(d.to_json(), sort_keys=True))
    _emit(args, doc, lines)
    return status


def cmd_weights(args) -> int:
    a = _cartan(args)
    doc, lines = {}, []
    if args.minuscule:
        doc["minuscule"] = minuscule_weights(a)
        lines.append("minuscule " + " ".join(map(str, doc["minuscule"])))
    if args.orbit:
        lam = _ints(args.orbit)
        if len(lam) != a.rank:
            raise UsageError(f"--orbit needs {a.rank} coordinates")
        orbit = weightorbit(a, lam)
        doc["orbit"] = [list(w) for w in orbit]
        lines.append(f"orbit of size {len(orbit)}")
        lines += [str(list(w)) for w in orbit]
    if not doc:
        raise UsageError("weights needs --minuscule or --orbit")
    _emit(args, doc, lines)
    return 0


def cmd_module(args) -> int:
    if args.load:
        mod = load_module(args.load)
    elif args.rep:
        mod = _module(args.rep, _cartan(args, required=False))
    else:
        raise UsageError("module needs --load FILE or --rep SPEC")
    doc = mod.to_json()
    lines = [f"{mod.name}: dimension {mod.dim}, rank {mod.rank}",
             "weights " + " ".join(str(list(w)) for w in mod.weights)]
    status = 0
    if args.check:
        rep = check_admissible(mod)
        doc["admissible"] = rep.ok
        doc["problems"] = list(rep.problems)
        lines.append(str(rep))
        status = 0 if rep.ok else 1
    _emit(args, doc, lines)
    return status


def cmd_group(args) -> int:
    mod = _module(args.rep, _cartan(args, required=False))
    ring_name = args.field or args.ring or "ZT"
    G = ChevalleyGroup(mod, ring_from_name(ring_name))
    if args.check_all:
        rep = relation_suite(mod, G.ring, seed=args.seed)
        doc = {"module": rep.module, "ring": rep.ring, "seed": rep.seed,
               "exhaustive": rep.exhaustive, "ok": rep.ok,
               "results": [{"name": r.name, "checked": r.checked, "failed": r.failed,
                            "witness": r.witness} for r in rep.results]}
        _emit(args, doc, rep.lines())
        return 0 if rep.ok else 1
    if not args.gen:
        raise UsageError("group needs --gen or --check-all")
    param = args.param if args.param is not None else ("T" if G.ring.name == "ZT" else "1")
    root = args.root if args.root is not None else 1
    makers = {"x": G.x_mat, "xi": G.xi_mat, "y": G.yi_mat, "n": G.n_mat, "h": G.h_mat,
              "nalpha": G.n_alpha_mat, "halpha": G.h_alpha_mat}
    m = makers[args.gen](root, param)
    if args.json:
        _emit(args, m.to_json(), [])
    else:
        print(f"{args.gen}({param}) for root {root} on {mod.name} over {G.ring.name}")
        _print_matrix(m, sys.stdout)
    return 0


_SUITES = ("chevrels", "structconst", "admissible", "relations")


def cmd_check(args) -> int:
    if args.all or args.criterion:
        numbers = args.criterion or None
        results = []
        for res in acceptance.run_all(numbers):
            results.append(res)
            if not args.json:
                print(res.line(), flush=True)
        if args.json:
            json.dump([{"criterion": r.number, "title": r.title, "passed": r.passed,
                        "notes": r.notes, "seconds": round(r.seconds, 3)} for r in results],
                      sys.stdout)
            sys.stdout.write("\n")
        else:
            print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
        return 0 if all(r.passed for r in results) else 1
    if not args.suite:
        raise UsageError("check needs --all, --criterion N or --suite NAME")
    a = _cartan(args)
    if args.suite == "chevrels":
        rep = checkrels(build(a))
        ok, lines = rep.ok, [str(rep)]
    elif args.suite == "structconst":
        rep = structconst_properties(build(a))
        ok = rep.ok
        lines = [f"{rep.checked - len(rep.failures)}/{rep.checked} structure-constant checks pass"]
    elif args.suite == "admissible":
        rep = check_admissible(adjoint_module(build(a)))
        ok, lines = rep.ok, [str(rep)]
    else:
        rep = relation_suite(adjoint_module(build(a)), ring_from_name(args.field or "GF(2)"),
                             seed=args.seed)
        ok, lines = rep.ok, rep.lines()
    _emit(args, {"suite": args.suite, "ok": ok, "lines": lines}, lines)
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chevalier", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, needs_type=True):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=fn)
        sp.add_argument("--type", help='type string such as "e8" or "a2xg2"')
        sp.add_argument("--matrix", help='JSON file {"cartan": [[...]]}')
        sp.add_argument("--json", action="store_true", help="print one JSON document")
        return sp

    add("cartan", cmd_cartan, "matrix, classification, Dynkin type, epsilon, fundamental group")
    add("roots", cmd_roots, "ordered positive roots")

    sp = add("weyl", cmd_weyl, "Weyl group order, reduced words and permutations")
    sp.add_argument("--order", action="store_true")
    sp.add_argument("--allwords", type=int, metavar="MAXLEN")
    sp.add_argument("--permword", metavar="PERM", help="comma-separated permutation of the roots")
    sp.add_argument("--wordperm", metavar="WORD", help="comma-separated generator indices")

    sp = add("lie", cmd_lie, "Lie algebra matrices and structure constants")
    sp.add_argument("--checkrels", action="store_true")
    sp.add_argument("--structconst", nargs=2, type=int, metavar=("A", "B"))
    sp.add_argument("--nrs-table", action="store_true")
    sp.add_argument("--export", action="store_true", help="include all generator matrices")

    sp = add("weights", cmd_weights, "minuscule weights and Weyl orbits")
    sp.add_argument("--minuscule", action="store_true")
    sp.add_argument("--orbit", metavar="LAMBDA")

    sp = add("module", cmd_module, "load or build a module and validate it")
    sp.add_argument("--load", metavar="FILE")
    sp.add_argument("--rep", metavar="SPEC")
    sp.add_argument("--check", action="store_true")

    sp = add("group", cmd_group, "Chevalley group generator matrices and relation checks")
    sp.add_argument("--rep", default="adjoint",
                    help="adjoint, minuscule:I[,J], sl2irrep:M or a module JSON file")
    sp.add_argument("--gen", choices=("x", "xi", "y", "n", "h", "nalpha", "halpha"))
    sp.add_argument("--root", type=int, help="root index for x/nalpha/halpha, simple index otherwise")
    sp.add_argument("--ring", help="ZT, ZZ, QQ or GF(p)")
    sp.add_argument("--field", help="prime p, GF(p) or q for the rationals")
    sp.add_argument("--param", help="parameter value (integer, a/b or T)")
    sp.add_argument("--check-all", action="store_true", help="run the relation suite")
    sp.add_argument("--seed", type=int, default=None, help=f"sampling seed (default {suite_seed()})")

    sp = add("check", cmd_check, "acceptance criteria and per-type suites")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--criterion", type=int, action="append", choices=range(1, 11))
    sp.add_argument("--suite", choices=_SUITES)
    sp.add_argument("--field", help="field for --suite relations")
    sp.add_argument("--seed", type=int, default=None)
    return p


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CartanError, ExactError, NotARoot, NotAdmissible, NotMinuscule,
            BadGeneratorIndex, KeyError, ValueError) as exc:
        print(f"chevalier {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
