"""Command-line entry point.

Exit codes: 0 success, 1 usage or input-parse errors, 2 verification
failures (a progression found in a claimed cap, a census
counterexample), 3 exhausted resample budgets. All outputs are
deterministic for fixed inputs and seeds; JSON objects are printed with
sorted keys.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .bounds import (
    CAP_BOUND_BASELINE,
    asymptotic_exponent,
    cap_bound_base,
    concrete_exponent,
    gowers_long_constant,
    improves_cap_bound,
    selection_report,
)
from .census import (
    iter_classified,
    minimal_free_example,
    run_census,
)
from .coloring import color_edges, colors_needed
from .construction import (
    build_eisenstein,
    build_f3,
    build_modular,
    build_wickets,
    wicket_dependency_degree,
)
from .eisenstein import EisensteinPoint, region_points
from .eqfree import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    TRIANGLE_EXHAUSTIVE_LIMIT,
    equilateral_equation,
    load_eisenstein_set_file,
    load_int_set_file,
    max_free_exhaustive,
    max_free_heuristic,
    max_triangle_free,
    modular_equation,
    ruzsa_equation,
)
from .errors import (
    CapFileError,
    CapVerificationError,
    ColoringBudgetError,
    DomainTooLargeError,
    HypergraphFileError,
    SetFileError,
    WicketlabError,
)
from .gf3 import (
    lift_cap,
    load_cap_file,
    max_cap_exact,
    product_cap,
    vec_to_string,
    write_cap_file,
)
from .hypergraph import write_hypergraph_file


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this CLI promises 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _cap_json(cap) -> dict:
    return {
        "dimension": cap.dimension,
        "size": len(cap),
        "elements": [vec_to_string(v) for v in cap.sorted_elements],
    }


def cmd_cap(args) -> int:
    if args.action == "verify":
        try:
            cap = load_cap_file(args.file)
        except CapVerificationError as exc:
            print("ap3-free: false")
            print(
                "witness: "
                + " ".join(vec_to_string(v) for v in exc.witness)
            )
            return 2
        print("ap3-free: true")
        print(f"dimension: {cap.dimension}")
        print(f"size: {len(cap)}")
        return 0
    if args.action == "max":
        cap = max_cap_exact(args.n)
        _emit(_cap_json(cap))
        return 0
    if args.action == "product":
        cap = product_cap(load_cap_file(args.left), load_cap_file(args.right))
    else:  # lift
        cap = lift_cap(load_cap_file(args.cap), args.dimension)
    if args.out:
        write_cap_file(cap, args.out)
    _emit({"dimension": cap.dimension, "size": len(cap)})
    return 0


def _make_build(args):
    """Shared between `build` and `color`: returns (build, n, set_size)."""
    if args.family == "f3":
        cap = load_cap_file(args.cap)
        return build_f3(cap), cap.dimension, len(cap)
    if args.family == "modular":
        n = args.k * args.k - args.k + 1
        elems = load_int_set_file(args.set, modulus=n)
        return build_modular(elems, args.k), n, len(elems)
    if args.set is not None:
        elems = load_eisenstein_set_file(args.set)
    else:
        region = region_points(args.bound, norm=args.norm)
        if len(region) > TRIANGLE_EXHAUSTIVE_LIMIT:
            raise DomainTooLargeError(
                f"--auto needs a region of at most "
                f"{TRIANGLE_EXHAUSTIVE_LIMIT} points (this one has "
                f"{len(region)}); pass --set instead"
            )
        elems = max_triangle_free(args.bound, norm=args.norm).elements
    build = build_eisenstein(elems, args.bound, norm=args.norm)
    return build, args.bound, len(elems)


def cmd_build(args) -> int:
    build, n, set_size = _make_build(args)
    h = build.hypergraph
    wickets = build_wickets(build)
    k = colors_needed(set_size)
    report = selection_report(h.vertex_count, h.edge_count, k)
    payload = {
        "n": n,
        "set_size": set_size,
        "vertices": h.vertex_count,
        "edges": h.edge_count,
        "wickets": len(wickets),
        "max_dependency_degree": wicket_dependency_degree(wickets),
        "k": k,
        "selected_edges": report.edges_selected,
        "exponent": round(report.exponent, 4),
    }
    if args.out:
        write_hypergraph_file(h, args.out)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
            fh.write("\n")
    _emit(payload)
    return 0


def cmd_color(args) -> int:
    build, _n, set_size = _make_build(args)
    h = build.hypergraph
    wickets = build_wickets(build)
    selection = color_edges(
        build, seed=args.seed, attempts=args.attempts, wickets=wickets
    )
    k = selection.coloring.color_count
    payload = {
        "k": k,
        "seed": args.seed,
        "attempt": selection.coloring.attempt,
        "resamples": selection.coloring.resamples,
        "color": selection.color,
        "selected_edges": len(selection.edge_ids),
        "total_edges": h.edge_count,
        "lower_bound": -(-h.edge_count // k),
        "wickets": len(wickets),
    }
    if args.out:
        write_hypergraph_file(selection.hypergraph, args.out)
    _emit(payload)
    return 0


def _set_json(elements) -> list:
    out = []
    for e in elements:
        if isinstance(e, EisensteinPoint):
            out.append(f"{e.a},{e.b}")
        else:
            out.append(e)
    return out


def cmd_search(args) -> int:
    if args.problem == "ruzsa":
        spec = ruzsa_equation()
        domain = tuple(range(1, args.n + 1))
        label = f"1..{args.n}"
        limit = DEFAULT_EXHAUSTIVE_LIMIT
    elif args.problem == "modular":
        spec = modular_equation(args.k)
        n = args.k * args.k - args.k + 1
        domain = tuple(range(n))
        label = f"Z/{n}"
        limit = DEFAULT_EXHAUSTIVE_LIMIT
    else:
        spec = equilateral_equation()
        domain = region_points(args.bound, norm=args.norm)
        label = f"{args.norm}<={args.bound}"
        limit = TRIANGLE_EXHAUSTIVE_LIMIT

    mode = args.mode
    if mode == "auto":
        mode = "exhaustive" if len(domain) <= limit else "local"
    if mode == "exhaustive":
        result = max_free_exhaustive(domain, spec, max_domain=limit)
    else:
        result = max_free_heuristic(
            domain, spec, seed=args.seed, budget=args.budget, method=mode
        )
    _emit(
        {
            "problem": spec.name,
            "domain": label,
            "method": result.method,
            "size": result.size,
            "set": _set_json(result.elements),
            "verified": result.verified,
            "optimal": result.optimal,
        }
    )
    return 0 if result.verified else 2


def cmd_census(args) -> int:
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("WICKETLAB_JOBS", "1"))
    if jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 1
    report = run_census(jobs=jobs, use_detectors=args.detectors)
    payload = {
        "total_candidates": report.total_candidates,
        "linear": report.linear,
        "wicket": report.wicket,
        "six_three": report.six_three,
        "both": report.both,
        "full_coverage": report.full_coverage,
        "counterexamples": [list(ids) for ids in report.counterexamples],
        "verified": report.verified,
    }
    if args.minimality:
        witness = minimal_free_example()
        payload["minimality_witness"] = list(witness) if witness else None
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write("e1,e2,e3,e4,e5,wicket,six_three\n")
            for ids, has_w, has_63 in iter_classified(args.detectors):
                row = ",".join(str(i) for i in ids)
                fh.write(f"{row},{int(has_w)},{int(has_63)}\n")
    _emit(payload)
    return 0 if report.verified else 2


def cmd_bounds(args) -> int:
    if args.calc == "exponent":
        if args.base is not None:
            value = asymptotic_exponent(args.base)
        elif args.selected is not None and args.n is not None:
            value = concrete_exponent(args.selected, 3 ** (args.n + 1))
        else:
            print(
                "error: provide --base or both --selected and --n",
                file=sys.stderr,
            )
            return 1
        print(f"{value:.4f}")
        return 0
    if args.calc == "corollary":
        value = cap_bound_base(args.c)
        _emit(
            {
                "baseline": CAP_BOUND_BASELINE,
                "improves": improves_cap_bound(value),
                "value": round(value, 4),
            }
        )
        return 0
    print(f"{gowers_long_constant(args.exponent):.4f}")
    return 0


def _add_build_family_args(sub) -> None:
    f3 = sub.add_parser("f3", help="lines over GF(3) vectors from a cap file")
    f3.add_argument("--cap", required=True, help="cap file (base-3 lines)")
    f3.set_defaults(family="f3")

    mod = sub.add_parser("modular", help="residue construction mod k^2-k+1")
    mod.add_argument("--k", type=int, required=True)
    mod.add_argument("--set", required=True, help="set file, one residue per line")
    mod.set_defaults(family="modular")

    eis = sub.add_parser("eisenstein", help="triangular-lattice construction")
    eis.add_argument("--bound", type=int, required=True)
    eis.add_argument(
        "--norm", choices=("coordinate", "ring"), default="coordinate"
    )
    group = eis.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", help="set file, one 'a,b' pair per line")
    group.add_argument(
        "--auto",
        action="store_true",
        help="use the exact largest triangle-free subset of the region",
    )
    eis.set_defaults(family="eisenstein", set=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="wicketlab",
        description=(
            "Construct, color, and verify wicket-free linear tripartite "
            "hypergraphs from progression-free sets."
        ),
    )
    top = parser.add_subparsers(dest="command", required=True)

    cap = top.add_parser("cap", help="progression-free set utilities")
    cap_sub = cap.add_subparsers(dest="action", required=True)
    cap_verify = cap_sub.add_parser("verify", help="check a cap file")
    cap_verify.add_argument("file")
    cap_max = cap_sub.add_parser("max", help="exact maximum cap (n <= 3)")
    cap_max.add_argument("--n", type=int, required=True)
    cap_prod = cap_sub.add_parser("product", help="coordinate-wise product")
    cap_prod.add_argument("--left", required=True)
    cap_prod.add_argument("--right", required=True)
    cap_prod.add_argument("--out")
    cap_lift = cap_sub.add_parser("lift", help="zero-pad to a larger dimension")
    cap_lift.add_argument("--cap", required=True)
    cap_lift.add_argument("--dimension", type=int, required=True)
    cap_lift.add_argument("--out")
    cap.set_defaults(func=cmd_cap)

    build = top.add_parser("build", help="construct a hypergraph")
    build_sub = build.add_subparsers(dest="family", required=True)
    _add_build_family_args(build_sub)
    for name in ("f3", "modular", "eisenstein"):
        sub = build_sub.choices[name]
        sub.add_argument("--out", help="write the hypergraph file here")
        sub.add_argument("--report", help="also write the JSON report here")
        sub.set_defaults(func=cmd_build)

    color = top.add_parser("color", help="build, then color away all wickets")
    color_sub = color.add_subparsers(dest="family", required=True)
    _add_build_family_args(color_sub)
    for name in ("f3", "modular", "eisenstein"):
        sub = color_sub.choices[name]
        sub.add_argument("--seed", type=int, default=0)
        sub.add_argument("--attempts", type=int, default=8)
        sub.add_argument("--out", help="write the selected class here")
        sub.set_defaults(func=cmd_color)

    search = top.add_parser("search", help="largest solution-free sets")
    search_sub = search.add_subparsers(dest="problem", required=True)
    ruzsa = search_sub.add_parser("ruzsa", help="3x+y=2z+2w over 1..n")
    ruzsa.add_argument("--n", type=int, required=True)
    modular = search_sub.add_parser(
        "modular", help="kx-(k-1)y=z over the residues mod k^2-k+1"
    )
    modular.add_argument("--k", type=int, required=True)
    triangle = search_sub.add_parser(
        "triangle", help="equilateral-free subsets of a lattice disc"
    )
    triangle.add_argument("--bound", type=int, required=True)
    triangle.add_argument(
        "--norm", choices=("coordinate", "ring"), default="coordinate"
    )
    for sub in (ruzsa, modular, triangle):
        sub.add_argument(
            "--mode",
            choices=("auto", "exhaustive", "greedy", "local"),
            default="auto",
        )
        sub.add_argument("--seed", type=int, default=0)
        sub.add_argument("--budget", type=int, default=2000)
        sub.set_defaults(func=cmd_search)

    census = top.add_parser(
        "census", help="classify all linear 5-edge grid systems"
    )
    census.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes (default: WICKETLAB_JOBS or 1)",
    )
    census.add_argument(
        "--detectors",
        action="store_true",
        help="classify with the generic detectors instead of share tables",
    )
    census.add_argument("--csv", help="write per-system classifications here")
    census.add_argument(
        "--minimality",
        action="store_true",
        help="include a 4-edge linear system with neither pattern",
    )
    census.set_defaults(func=cmd_census)

    bounds = top.add_parser("bounds", help="exponent and bound formulas")
    bounds_sub = bounds.add_subparsers(dest="calc", required=True)
    exponent = bounds_sub.add_parser("exponent")
    exponent.add_argument("--base", type=float)
    exponent.add_argument("--selected", type=int)
    exponent.add_argument("--n", type=int)
    corollary = bounds_sub.add_parser("corollary")
    corollary.add_argument("--c", type=float, required=True)
    gl = bounds_sub.add_parser("gl")
    gl.add_argument("--exponent", type=float, required=True)
    bounds.set_defaults(func=cmd_bounds)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0
    try:
        return args.func(args)
    except (
        CapFileError,
        HypergraphFileError,
        SetFileError,
        DomainTooLargeError,
        FileNotFoundError,
        IsADirectoryError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ColoringBudgetError as exc:
        _emit({"error": "budget-exhausted", **exc.diagnostics})
        return 3
    except CapVerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WicketlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
