"""Command-line surface for the pretzel dimer toolkit.

Four subcommands tie the pipeline together:

* ``jones``    - Jones polynomial in t (or the raw Kauffman bracket in A),
* ``matrix``   - the activity matrix, plain or signed/enhanced, plus dot
  exports of the checkerboard graphs,
* ``verify``   - cross-checks every route against the oracles,
* ``khovanov`` - the bigraded Poincare polynomial with its generator table
  and differential-stencil report.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
error, 3 domain refusal (a link where a knot is required).

``--extend`` grows the object before evaluation and may be repeated; moves
apply left to right.  Worker count for big expansions comes from the
``PRETZELDIMER_WORKERS`` environment variable.
"""
import argparse
import json
import sys

from .activities import tree_words
from .diagram import build_diagram, parse_spec, trace
from .evaluate import (JONES_TABLE, bracket, invariant_bundle, jones_in_A,
                       khovanov_poincare, pipeline_matrix, scan_differentials,
                       stencil_word_pairs)
from .extend import (MOVES, apply_moves, initial_state, state_bracket,
                     state_jones_raw)
from .laurent import Laurent
from .matrix import (build_block_matrix, build_graph_matrix, det_value,
                     dump_json, enhance, expand, perm_value, pretty,
                     sign_matrix, word_multiset)
from .oracle import state_sum_bracket, tree_expansion_bracket
from .taitgraphs import (build_overlay, build_tait, dual_graph,
                         overlay_to_dot, solve_kasteleyn, tait_to_dot,
                         verify_kasteleyn)


def _spec_label(spec):
    return "P(%s)" % ",".join(str(v) for v in spec)


def _grown(spec, moves):
    """Initial state with extension moves applied; ValueError on bad chains."""
    return apply_moves(initial_state(spec), moves)


# ---------------------------------------------------------------------------
# jones

def cmd_jones(spec, args):
    try:
        st = _grown(spec, args.extend)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2

    if args.bracket:
        val = state_bracket(st)
        if args.json:
            print(json.dumps(val.to_pairs(), separators=(",", ":")))
        else:
            print(val.format("A"))
        return 0

    try:
        raw, flipped = state_jones_raw(st)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    val = (-raw if flipped else raw).reexpress(-4)
    sign = -1 if flipped else 1
    if args.json:
        if args.raw_sign:
            blob = {"jones": val.to_pairs(), "raw_sign": sign}
            print(json.dumps(blob, separators=(",", ":"), sort_keys=True))
        else:
            print(json.dumps(val.to_pairs(), separators=(",", ":")))
    else:
        print(val.format("t"))
        if args.raw_sign:
            print("raw determinant sign: %+d" % sign)
    return 0


# ---------------------------------------------------------------------------
# matrix

def cmd_matrix(spec, args):
    if args.dot:
        if args.extend:
            print("error: --dot renders the standard diagram; drop --extend",
                  file=sys.stderr)
            return 2
        if args.dot == "tait":
            print(tait_to_dot(build_tait(spec)))
        elif args.dot == "dual":
            print(tait_to_dot(dual_graph(build_tait(spec)), name="dual"))
        else:
            ov = build_overlay(spec)
            signs = solve_kasteleyn(ov) if args.signed else None
            print(overlay_to_dot(ov, signs))
        return 0

    if args.extend:
        try:
            st = _grown(spec, args.extend)
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
        m, diagram = st.matrix, st.diagram
        if not args.signed:
            m = m.copy()
            m.signed = False
    else:
        diagram = build_diagram(spec)
        m = build_block_matrix(spec)
        if args.signed:
            m = sign_matrix(m, solve_kasteleyn(build_overlay(spec)))
    if args.enhanced:
        try:
            m = enhance(m, diagram)
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 3
    if args.json:
        print(dump_json(m))
    else:
        print(pretty(m, ascii_bars=args.ascii))
    return 0


# ---------------------------------------------------------------------------
# verify

def cmd_verify(spec, args):
    diagram = build_diagram(spec)
    components = trace(diagram).components
    g = build_tait(spec)
    ov = build_overlay(spec)
    signs = solve_kasteleyn(ov)
    plain = build_block_matrix(spec)
    signed = sign_matrix(plain, signs)
    words = word_multiset(plain)

    checks = []
    checks.append(("block and graph constructors agree",
                   plain.by_region() == build_graph_matrix(ov).by_region()))
    checks.append(("expansion words = spanning-tree words",
                   words == sorted(w for _, w in tree_words(g))))
    checks.append(("kasteleyn signing verified",
                   verify_kasteleyn(ov.faces, signs)))
    expect = sum(_product(abs(v) for j, v in enumerate(spec) if j != i)
                 for i in range(len(spec)))
    checks.append(("term count law (%d terms)" % len(words),
                   len(words) == expect))
    det = det_value(signed, JONES_TABLE)
    per = perm_value(plain, JONES_TABLE)
    checks.append(("|determinant| = |permanent|", det in (per, -per)))
    checks.append(("sign split is a global constant",
                   len({t.parity * t.ksign for t in expand(signed)}) == 1))

    notice = None
    if components == 1:
        ref = jones_in_A(spec)
        w = trace(diagram).writhe
        tree_route = tree_expansion_bracket(g) * _kink(w)
        sum_route = state_sum_bracket(diagram) * _kink(w)
        checks.append(("jones: matrix = trees = state sum",
                       tree_route in (ref, -ref) and sum_route in (ref, -ref)))
    else:
        notice = ("%d-component link; jones checks skipped, "
                  "bracket checked instead" % components)
        checks.append(("bracket: matrix = trees = state sum",
                       per == tree_expansion_bracket(g)
                       and per == state_sum_bracket(diagram)))

    failed = [name for name, ok in checks if not ok]
    if args.json:
        blob = {
            "spec": list(spec),
            "crossings": len(diagram.crossings),
            "components": components,
            "terms": len(words),
            "checks": {name: ok for name, ok in checks},
            "ok": not failed,
            "invariants": invariant_bundle(spec),
        }
        print(json.dumps(blob, indent=2, sort_keys=True))
    else:
        print("%s: %d crossings, %d expansion terms"
              % (_spec_label(spec), len(diagram.crossings), len(words)))
        if notice:
            print(notice)
        width = max(len(name) for name, _ in checks)
        for name, ok in checks:
            print("  %-*s  %s" % (width, name, "ok" if ok else "FAIL"))
        print("all checks passed" if not failed
              else "%d check(s) failed" % len(failed))
    return 0 if not failed else 1


def _product(values):
    out = 1
    for v in values:
        out *= v
    return out


def _kink(w):
    return Laurent.term(-1, -3) ** w


# ---------------------------------------------------------------------------
# khovanov

def cmd_khovanov(spec, args):
    try:
        val = khovanov_poincare(spec)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    m = pipeline_matrix(spec, signed=False, enhanced=False)
    reports = scan_differentials(m)
    pairs = val.to_pairs()
    total = sum(c for _, c in pairs)

    if args.json:
        blob = {
            "spec": list(spec),
            "poincare": pairs,
            "generators": total,
            "differentials": [r.to_json(names=True) for r in reports],
        }
        print(json.dumps(blob, indent=2, sort_keys=True))
        return 0

    print("%s: %s" % (_spec_label(spec), val.format()))
    print("generators by (u, v) bidegree:")
    for (u, v), c in pairs:
        print("  (%+d, %+d)  %d" % (u, v, c))
    print("total %d generators" % total)
    if not reports:
        print("no differential stencils found")
    for r in reports:
        blob = r.to_json(names=True)
        npairs = len(stencil_word_pairs(m, r))
        print("differential: rows (%d, %d)  columns (%s, %s)  stencil %s  "
              "(%d word pair%s)"
              % (blob["rows"][0], blob["rows"][1], blob["cols"][0],
                 blob["cols"][1], blob["stencil"], npairs,
                 "" if npairs == 1 else "s"))
    return 0


# ---------------------------------------------------------------------------
# wiring

def _build_parser():
    p = argparse.ArgumentParser(
        prog="pretzeldimer",
        description="Exact knot invariants of pretzel links via spanning "
                    "trees, dimers and one determinant.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_spec(sp):
        sp.add_argument("spec", help="pretzel spec, e.g. \"P(-2,3,7)\" "
                                     "or \"-2,3,7\"")

    def add_extend(sp):
        sp.add_argument("--extend", action="append", default=[],
                        choices=sorted(MOVES), metavar="MOVE",
                        help="grow before evaluating; repeatable, applied "
                             "left to right (%s)" % ", ".join(sorted(MOVES)))

    j = sub.add_parser("jones", help="Jones polynomial in t")
    add_spec(j)
    j.add_argument("--json", action="store_true",
                   help="machine form: ascending [exponent, coefficient] "
                        "pairs")
    j.add_argument("--bracket", action="store_true",
                   help="print the Kauffman bracket in A instead "
                        "(links allowed)")
    j.add_argument("--bracket-only", dest="bracket", action="store_true",
                   help=argparse.SUPPRESS)
    j.add_argument("--raw-sign", action="store_true",
                   help="also report the determinant sign before "
                        "normalization")
    add_extend(j)
    j.set_defaults(func=cmd_jones)

    m = sub.add_parser("matrix", help="activity matrix and graph exports")
    add_spec(m)
    m.add_argument("--signed", action="store_true",
                   help="apply the Kasteleyn signing")
    m.add_argument("--enhanced", action="store_true",
                   help="annotate rows with traced crossing signs "
                        "(knots only)")
    m.add_argument("--json", action="store_true", help="machine form")
    m.add_argument("--ascii", action="store_true",
                   help="ASCII bars: L~ instead of L̄")
    m.add_argument("--dot", choices=("tait", "dual", "overlay"),
                   help="emit graphviz for G, G* or the balanced overlay")
    add_extend(m)
    m.set_defaults(func=cmd_matrix)

    v = sub.add_parser("verify", help="cross-check every route")
    add_spec(v)
    v.add_argument("--json", action="store_true",
                   help="machine form, including the invariant bundle")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("khovanov", help="bigraded Poincare polynomial")
    add_spec(k)
    k.add_argument("--json", action="store_true", help="machine form")
    k.set_defaults(func=cmd_khovanov)
    return p


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        spec = parse_spec(args.spec)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return args.func(spec, args)


if __name__ == "__main__":
    sys.exit(main())
