"""Command line front end.

Exit status: 0 when the property holds, 1 when it fails, 2 for usage
errors and malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import corpus, io
from .adjunction import (
    adjunction_failures,
    cc,
    check_idempotent,
    is_functor,
    is_geometric,
    teetotal_report,
)
from .errors import ConvexDualError, GroundTooLarge, NotT0, OutOfRange, SearchSpaceTooLarge
from .examples import (
    FiniteMetric,
    MeasureSpace,
    cyclic_group_table,
    lattice_ideal_space,
    measure_algebra_space,
    metric_betweenness_space,
    subalgebra_space,
)
from .lattice import FiniteLattice, PointedLattice
from .spaces import (
    DEFAULT_LIMIT,
    PreconvexSpace,
    TopConvexSpace,
    enumerate_homs,
    validate_preconvex,
    validate_topconvex,
)
from .stone import stone_roundtrip_lattice, stone_roundtrip_space
from .suplat import (
    PartialSupLattice,
    hom_equivalence_check,
    is_tcg,
    j_from_s,
    s_from_j,
    validate_partial_sup,
)
from .symmetric import classify_perm_homs, perm_ground, perm_space

USAGE_ERRORS = (io.MalformedInput, SearchSpaceTooLarge, OutOfRange, GroundTooLarge)
MAX_WITNESSES = 20


class UsageError(Exception):
    pass


def _expect(obj, *types, what: str):
    if not isinstance(obj, types):
        raise UsageError(f"{what} must be a {' or '.join(t.__name__ for t in types)} document")
    return obj


def _load_all(paths, arity: int):
    if len(paths) != arity:
        raise UsageError(f"expected {arity} input file(s), got {len(paths)}")
    return [io.load(p) for p in paths]


def _require(report):
    if not report:
        raise ConvexDualError("; ".join(report.violations))


# individual checks: each returns (passed, witnesses, details)


def _check_adjunction(args):
    if not args.inputs:
        xs = corpus.tc_corpus(seed=args.seed)
        ps = corpus.preconvex_corpus()
        bad = []
        for x in xs:
            for p in ps:
                if len(p.ground) ** len(x.ground) <= args.limit and adjunction_failures(x, p, args.limit):
                    bad.append(f"{io.to_dict(x)} / {io.to_dict(p)}")
        return not bad, bad, {"pairs": len(xs) * len(ps)}
    x, p = _load_all(args.inputs, 2)
    _expect(x, TopConvexSpace, what="first input")
    _expect(p, PreconvexSpace, what="second input")
    fails = adjunction_failures(x, p, args.limit)
    return not fails, [str(f.as_labels()) for f in fails], {"functions": len(p.ground) ** len(x.ground)}


def _idempotent_both(obj) -> bool:
    if isinstance(obj, TopConvexSpace):
        return check_idempotent(obj)
    once = is_functor(obj)
    return is_functor(cc(once)) == once


def _check_idempotent(args):
    if not args.inputs:
        items = corpus.tc_corpus(seed=args.seed) + corpus.preconvex_corpus()
        bad = [io.dumps(o) for o in items if not _idempotent_both(o)]
        return not bad, bad, {"instances": len(items)}
    (obj,) = _load_all(args.inputs, 1)
    _expect(obj, TopConvexSpace, PreconvexSpace, what="input")
    return _idempotent_both(obj), [], {}


def _check_teetotal(args):
    if not args.inputs:
        xs = corpus.tc_corpus(seed=args.seed)
        bad = [io.dumps(x) for x in xs if bool(teetotal_report(x)) != (is_functor(cc(x)) == x)]
        return not bad, bad, {"instances": len(xs), "teetotal": sum(bool(teetotal_report(x)) for x in xs)}
    (x,) = _load_all(args.inputs, 1)
    _expect(x, TopConvexSpace, what="input")
    rep = teetotal_report(x)
    w = []
    if rep.convex_witness is not None:
        w.append(f"convex set {x.ground.fmt(rep.convex_witness)} is not closed")
    if rep.closed_witness is not None:
        v, pt = rep.closed_witness
        w.append(f"closed set {x.ground.fmt(v)} cannot be separated from {x.ground.labels[pt]}")
    return bool(rep), w, {"convex_ok": rep.convex_ok, "closed_ok": rep.closed_ok}


def _check_geometric(args):
    if not args.inputs:
        ps = corpus.preconvex_corpus() + corpus.preconvex_samples(seed=args.seed)
        bad = [io.dumps(p) for p in ps if not is_geometric(p)]
        return not bad, bad, {"instances": len(ps)}
    (p,) = _load_all(args.inputs, 1)
    _expect(p, PreconvexSpace, what="input")
    _require(validate_preconvex(p))
    return is_geometric(p), [], {}


def _check_stone(args):
    (obj,) = _load_all(args.inputs, 1)
    _expect(obj, TopConvexSpace, PointedLattice, what="input")
    if isinstance(obj, TopConvexSpace):
        try:
            return stone_roundtrip_space(obj), [], {}
        except NotT0 as e:
            return False, [f"not T0: {e}"], {}
    return stone_roundtrip_lattice(obj), [], {}


def _check_psl(args):
    (obj,) = _load_all(args.inputs, 1)
    _expect(obj, PointedLattice, PartialSupLattice, what="input")
    if isinstance(obj, PointedLattice):
        if not obj.is_generating():
            return False, ["chosen set does not generate"], {}
        psl = j_from_s(obj)
        rep = validate_partial_sup(psl)
        back = s_from_j(psl)
        w = [f"{k}: {v[:MAX_WITNESSES]}" for k, v in rep.failures().items()]
        if back != obj.chosen:
            w.append(f"totally compact elements {obj.lattice.ground.names(back)}")
        return not w, w, {"j": psl.j.to_labels()}
    rep = validate_partial_sup(obj)
    w = [f"{k}: {v[:MAX_WITNESSES]}" for k, v in rep.failures().items()]
    if not is_tcg(obj):
        w.append("not totally compactly generated")
    s = s_from_j(obj)
    again = j_from_s(PointedLattice(obj.lattice, s))
    if again.j != obj.j:
        w.append(f"rebuilt J differs: {again.j.to_labels()}")
    return not w, w, {"totally_compact": obj.lattice.ground.names(s)}


def _as_psl(obj) -> PartialSupLattice:
    if isinstance(obj, PointedLattice):
        return j_from_s(obj)
    return _expect(obj, PartialSupLattice, what="input")


def _check_hom_equivalence(args):
    src, dst = (_as_psl(o) for o in _load_all(args.inputs, 2))
    return hom_equivalence_check(src, dst, args.limit), [], {}


def _check_perm(args):
    if args.inputs:
        raise UsageError("perm-classify takes --n and --m, not files")
    if args.n is None or args.m is None:
        raise UsageError("perm-classify needs --n and --m")
    res = classify_perm_homs(args.n, args.m, args.limit)
    dom, cod = perm_ground(args.n), perm_ground(args.m)
    listed = [
        {dom.labels[i]: cod.labels[j] for i, j in enumerate(a)} for a in sorted(res.maps)
    ]
    missing = len(res.expected - res.maps)
    extra = len(res.maps - res.expected)
    w = [] if res.ok else [f"{missing} expected maps missing, {extra} unexpected maps found"]
    kind = "automorphisms" if args.n == args.m else "surjective_homs"
    return res.ok, w, {"method": res.method, "count": res.count, kind: listed}


def _check_measure(args):
    (ms,) = _load_all(args.inputs, 1)
    _expect(ms, MeasureSpace, what="input")
    alg = measure_algebra_space(ms)
    g = alg.space.ground
    w = [f"betweenness at {g.labels[a]}, {g.labels[b]}, {g.labels[c]}" for a, b, c in alg.betweenness_failures()]
    w += [f"μ({g.labels[b]}) != d(∅, {g.labels[b]})" for b in alg.recovery_failures()]
    return not w, w, {"points": len(g)}


CHECKS = {
    "adjunction": _check_adjunction,
    "idempotent": _check_idempotent,
    "teetotal": _check_teetotal,
    "geometric": _check_geometric,
    "stone-roundtrip": _check_stone,
    "psl-roundtrip": _check_psl,
    "hom-equivalence": _check_hom_equivalence,
    "perm-classify": _check_perm,
    "measure-metric": _check_measure,
}


def _emit(args, block: dict):
    if args.json:
        print(json.dumps(block, sort_keys=True, indent=2, ensure_ascii=False))
        return
    status = {True: "PASS", False: "FAIL"}.get(block.get("pass"), "")
    head = f"{block['name']}: {status}".rstrip(": ")
    if "seconds" in block:
        head += f" ({block['seconds']:.3f}s)"
    print(head)
    for k, v in block.get("details", {}).items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            print(f"  {k}:")
            for item in v:
                print("    " + ", ".join(f"{a}->{b}" for a, b in item.items()))
        else:
            print(f"  {k}: {v}")
    for w in block.get("witnesses", [])[:MAX_WITNESSES]:
        print(f"  witness: {w}")


def cmd_check(args) -> int:
    start = time.perf_counter()
    passed, witnesses, details = CHECKS[args.name](args)
    block = {"name": args.name, "pass": bool(passed), "witnesses": witnesses, "details": details}
    if args.timing:
        block["seconds"] = round(time.perf_counter() - start, 6)
    _emit(args, block)
    return 0 if passed else 1


def cmd_validate(args) -> int:
    try:
        obj = io.load(args.path)
    except ConvexDualError as e:
        if isinstance(e, USAGE_ERRORS):
            raise
        # the document parsed but the object it describes is not valid
        _emit(args, {"name": "validate", "pass": False, "witnesses": [str(e)], "details": {}})
        return 1
    if isinstance(obj, TopConvexSpace):
        violations = validate_topconvex(obj).violations
    elif isinstance(obj, PreconvexSpace):
        violations = validate_preconvex(obj).violations
    elif isinstance(obj, PointedLattice):
        violations = [f"not generated at {obj.lattice.elements[a]}" for a in obj.generation_failures()]
    elif isinstance(obj, PartialSupLattice):
        violations = [f"{k}: {v[:MAX_WITNESSES]}" for k, v in validate_partial_sup(obj).failures().items()]
    else:
        violations = []
    kind = io.to_dict(obj)["kind"]
    _emit(args, {"name": "validate", "pass": not violations, "witnesses": violations, "details": {"kind": kind}})
    return 0 if not violations else 1


def _gen(args):
    k = args.kind
    if k == "sn":
        n = _need(args.n, "--n")
        if not 2 <= n <= 3:
            # the discrete closed family is written out in full
            raise OutOfRange("--n must be 2 or 3 for a written document")
        return perm_space(n)
    if k == "chain":
        h = _need(args.height, "--height")
        if h < 1:
            raise OutOfRange("--height must be at least 1")
        return FiniteLattice.chain(h)
    if k == "boolean":
        a = _need(args.atoms, "--atoms")
        if not 0 <= a <= 6:
            raise OutOfRange("--atoms must be between 0 and 6")
        return FiniteLattice.boolean(a)
    if k == "subgroup":
        c = _need(args.cyclic, "--cyclic")
        if not 1 <= c <= 64:
            raise OutOfRange("--cyclic must be between 1 and 64")
        return subalgebra_space(cyclic_group_table(c))
    src = io.load(_need(args.input, "--input"))
    if k == "lattice-ideal":
        if isinstance(src, (PointedLattice, PartialSupLattice)):
            src = src.lattice
        return lattice_ideal_space(_expect(src, FiniteLattice, what="--input"))
    if k == "metric-betweenness":
        return metric_betweenness_space(_expect(src, FiniteMetric, what="--input"))
    return measure_algebra_space(_expect(src, MeasureSpace, what="--input")).space


def _need(value, flag):
    if value is None:
        raise UsageError(f"this generator needs {flag}")
    return value


def _write(args, text: str):
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    _write(args, io.dumps(_gen(args)))
    return 0


def cmd_homs(args) -> int:
    src, dst = io.load(args.src), io.load(args.dst)
    if isinstance(src, TopConvexSpace) and isinstance(dst, TopConvexSpace):
        category = "tc"
    elif isinstance(src, PreconvexSpace) and isinstance(dst, PreconvexSpace):
        category = "pre"
    else:
        raise UsageError("homs needs two topconvex or two preconvex documents")
    maps = enumerate_homs(src, dst, category, args.limit)
    if args.json:
        print(json.dumps([io.to_dict(f) for f in maps], sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(f"{len(maps)} homomorphisms")
        for f in maps:
            print("  " + ", ".join(f"{a}->{b}" for a, b in f.as_labels().items()))
    return 0


def cmd_export_dot(args) -> int:
    obj = io.load(args.path)
    try:
        text = io.to_dot(obj)
    except TypeError as e:
        raise UsageError(str(e)) from e
    _write(args, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="cap on enumerated functions")
    common.add_argument("--seed", type=int, default=corpus.DEFAULT_SEED, help="seed for sampled corpora")

    parser = argparse.ArgumentParser(prog="convexdual", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a document's closure conditions")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check", parents=[common], help="run a named property check")
    p.add_argument("name", choices=sorted(CHECKS))
    p.add_argument("inputs", nargs="*")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--timing", action="store_true", help="report elapsed seconds")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", parents=[common], help="write an example document")
    p.add_argument("kind", choices=["sn", "lattice-ideal", "boolean", "chain", "metric-betweenness",
                                    "measure-algebra", "subgroup"])
    p.add_argument("--n", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--atoms", type=int)
    p.add_argument("--cyclic", type=int)
    p.add_argument("--input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("homs", parents=[common], help="list homomorphisms between two spaces")
    p.add_argument("src")
    p.add_argument("dst")
    p.set_defaults(func=cmd_homs)

    p = sub.add_parser("export-dot", parents=[common], help="Hasse diagram in DOT")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, *USAGE_ERRORS) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ConvexDualError as e:
        print(f"fail: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
