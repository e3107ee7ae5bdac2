"""Command-line surface: every operation as a subcommand.

Exit codes: 0 success, 2 invalid arguments or precondition violations (one
diagnostic line on stderr), 1 internal invariant failure (never expected).
Output is deterministic for a fixed argv + seed, in markdown (default), CSV,
or JSON.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import atiyah, gfp, incidence, splittings, strata, subvariety
from .render import FORMATS, Row, render

VERIFY_INSTANCES = 20


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="md",
                        help="output format (default md)")
    common.add_argument("--seed", type=int, default=0,
                        help="RNG seed for randomized subcommands (default 0)")
    common.add_argument("--prime", type=int, default=10007,
                        help="prime modulus for finite-field subcommands")
    common.add_argument("--trials", type=int, default=200,
                        help="sample count for invertibility checks")

    parser = argparse.ArgumentParser(
        prog="ellstrata",
        description="exact subbundle calculus and strata tables for vector"
                    " bundles on curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("strata", parents=[common],
                       help="Segre-invariant stratification table")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--nprime", type=int, required=True)

    p = sub.add_parser("hom", parents=[common],
                       help="hom dimensions between indecomposables")
    p.add_argument("--source", type=int, nargs=2, metavar=("RANK", "DEG"),
                   required=True)
    p.add_argument("--target", type=int, nargs=2, metavar=("RANK", "DEG"),
                   required=True)

    for name, help_text in (
        ("splittings", "enumerate subbundle splitting types with metrics"),
        ("regimes", "evaluation-map regime flags"),
        ("quotient", "quotient profile of a generic subbundle"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--nprime", type=int, required=True)
        p.add_argument("--dprime", type=int, required=True)

    p = sub.add_parser("ext-dim", parents=[common],
                       help="extension-space rank and moduli-count identity")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--nprime", type=int, required=True)
    p.add_argument("--dprime", type=int, required=True)

    p = sub.add_parser("ledger", parents=[common],
                       help="degeneration gluing ledger for one degree split")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--nprime", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--split", type=int, nargs=2, metavar=("DG", "D1"),
                   required=True)

    p = sub.add_parser("verify-gluing", parents=[common],
                       help="certify the incidence dimension over GF(p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nprime", type=int, required=True)

    p = sub.add_parser("graph-count", parents=[common],
                       help="exhaustive subspace-graph count vs Gaussian binomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nprime", type=int, required=True)

    return parser


def _cmd_strata(args) -> tuple[Row, list[Row]]:
    rows = [
        {
            "s": r.s,
            "dprime": r.dprime,
            "status": r.status,
            "expected_dim": r.expected_dim,
            "expected_dim_raw": r.expected_dim_raw,
            "dim_A": r.dim_A_generic,
            "note": r.regime_note,
        }
        for r in strata.strata_table(args.g, args.n, args.d, args.nprime)
    ]
    params: Row = {"g": args.g, "n": args.n, "d": args.d, "nprime": args.nprime}
    return params, rows


def _cmd_hom(args) -> tuple[Row, list[Row]]:
    (nj, dj), (n, d) = args.source, args.target
    src = atiyah.IndecomposableBundle(nj, dj, atiyah.TwistClass.generic("a"))
    tgt = atiyah.IndecomposableBundle(n, d, atiyah.TwistClass.generic("b"))
    src_same = atiyah.IndecomposableBundle(nj, dj)
    tgt_same = atiyah.IndecomposableBundle(n, d)
    row: Row = {
        "source": f"E({nj},{dj})",
        "target": f"E({n},{d})",
        "delta": nj * d - n * dj,
        "hom_dim_generic_twists": atiyah.hom_dim(src, tgt),
        "hom_dim_same_twist": atiyah.hom_dim(src_same, tgt_same),
        "hom_slope": atiyah.hom_slope(src, tgt),
    }
    params: Row = {"source": f"E({nj},{dj})", "target": f"E({n},{d})"}
    return params, [row]


def _parts_text(parts) -> str:
    return " + ".join(f"({n},{d})" for n, d in parts)


def _cmd_splittings(args) -> tuple[Row, list[Row]]:
    types = splittings.enumerate_types(args.n, args.d, args.nprime, args.dprime)
    rows: list[Row] = []
    for t in types:
        lhs, rhs, equal = splittings.type_bound_check(
            t, args.n, args.d, args.nprime, args.dprime
        )
        rows.append({
            "parts": _parts_text(t.parts),
            "k": t.k,
            "dim_X": t.dim_X,
            "rk_Hom": t.rk_Hom,
            "h0_end": t.h0_end,
            "bound_lhs": lhs,
            "bound_rhs": rhs,
            "equality": equal,
            "balanced": t.balanced,
        })
    params: Row = {"n": args.n, "d": args.d, "nprime": args.nprime,
                   "dprime": args.dprime}
    return params, rows


def _cmd_regimes(args) -> tuple[Row, list[Row]]:
    r = subvariety.regime(args.n, args.d, args.nprime, args.dprime)
    row: Row = {
        "s1": r.s1,
        "c": r.c,
        "finite_fibers_piP": r.finite_fibers_piP,
        "surjective_piP": r.surjective_piP,
        "finite_fibers_piPQ": r.finite_fibers_piPQ,
        "surjective_piPQ": r.surjective_piPQ,
        "fiber_dim_piP": r.fiber_dim_piP,
        "image_dim_piP": r.image_dim_piP,
    }
    params: Row = {"n": args.n, "d": args.d, "nprime": args.nprime,
                   "dprime": args.dprime}
    return params, [row]


def _cmd_quotient(args) -> tuple[Row, list[Row]]:
    q = subvariety.quotient_profile(args.n, args.d, args.nprime, args.dprime)
    dim = subvariety.dim_A(args.n, args.d, args.nprime, args.dprime)
    count = subvariety.equal_slope_subbundle_count(
        args.n, args.d, args.nprime, args.dprime
    )
    row: Row = {
        "rank": q.rank,
        "degree": q.degree,
        "slope": q.slope,
        "equal_slope_sum": q.equal_slope_sum,
        "dim_A": dim,
        "equal_slope_count": count,
    }
    params: Row = {"n": args.n, "d": args.d, "nprime": args.nprime,
                   "dprime": args.dprime}
    return params, [row]


def _cmd_ext_dim(args) -> tuple[Row, list[Row]]:
    rank = strata.ext_space_rank(args.g, args.n, args.d, args.nprime, args.dprime)
    s1 = args.nprime * args.d - args.n * args.dprime
    if args.g >= 2:
        lhs, rhs = strata.extension_count_identity(args.g, args.n, s1, args.nprime)
    else:
        lhs = rhs = None
    row: Row = {
        "ext_rank": rank,
        "s": s1,
        "identity_lhs": lhs,
        "identity_rhs": rhs,
    }
    params: Row = {"g": args.g, "n": args.n, "d": args.d,
                   "nprime": args.nprime, "dprime": args.dprime}
    return params, [row]


def _cmd_ledger(args) -> tuple[Row, list[Row]]:
    rec = strata.degeneration_ledger(args.g, args.n, args.d, args.nprime,
                                     args.s, tuple(args.split))
    row: Row = {
        "d_g": rec.d_g,
        "d_1": rec.d_1,
        "s_g": rec.s_g,
        "s_1": rec.s_1,
        "a_g": rec.a_g,
        "a_1": rec.a_1,
        "dim_X": rec.dim_X,
        "dim_Is": rec.dim_Is,
        "verdict": rec.verdict,
    }
    params: Row = {"g": args.g, "n": args.n, "d": args.d,
                   "nprime": args.nprime, "s": args.s,
                   "d_g": args.split[0], "d_1": args.split[1]}
    return params, [row]


def _cmd_verify_gluing(args) -> tuple[Row, list[Row]]:
    p, n, nprime = args.prime, args.n, args.nprime
    expected = n * n - nprime * (n - nprime)
    dims = []
    degenerate = 0
    for i in range(VERIFY_INSTANCES):
        offset = 0
        while True:
            inst = incidence.random_instance(p, n, nprime,
                                             args.seed + i + offset)
            try:
                dims.append(incidence.incidence_dim(inst))
                break
            except incidence.DegenerateInstanceError:
                degenerate += 1
                offset += 1 << 20
    rate = incidence.invertibility_rate(p, n, nprime, args.trials, args.seed)
    ok = all(dim == expected for dim in dims)
    row: Row = {
        "n": n,
        "nprime": nprime,
        "prime": p,
        "instances": VERIFY_INSTANCES,
        "incidence_dim": dims[0] if ok else min(dims),
        "expected": expected,
        "degenerate_resamples": degenerate,
        "invertibility_rate": rate,
        "trials": args.trials,
        "status": "PASS" if ok else "FAIL",
    }
    params: Row = {"n": n, "nprime": nprime, "prime": p, "seed": args.seed,
                   "trials": args.trials}
    return params, [row]


def _cmd_graph_count(args) -> tuple[Row, list[Row]]:
    p, n, nprime = args.prime, args.n, args.nprime
    phi = incidence.random_invertible(p, n, args.seed)
    count = incidence.graph_count(p, n, nprime, phi)
    expected = incidence.gaussian_binomial(n, nprime, p)
    row: Row = {
        "prime": p,
        "n": n,
        "nprime": nprime,
        "graph_pairs": count,
        "gaussian_binomial": expected,
        "status": "PASS" if count == expected else "FAIL",
    }
    params: Row = {"prime": p, "n": n, "nprime": nprime, "seed": args.seed}
    return params, [row]


_HANDLERS = {
    "strata": _cmd_strata,
    "hom": _cmd_hom,
    "splittings": _cmd_splittings,
    "regimes": _cmd_regimes,
    "quotient": _cmd_quotient,
    "ext-dim": _cmd_ext_dim,
    "ledger": _cmd_ledger,
    "verify-gluing": _cmd_verify_gluing,
    "graph-count": _cmd_graph_count,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if not gfp.is_prime(args.prime):
            raise ValueError(f"--prime {args.prime} is not prime")
        if args.trials < 1:
            raise ValueError("--trials must be >= 1")
        if args.seed < 0:
            raise ValueError("--seed must be a nonnegative integer")
        params, rows = _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal invariant failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(args.format, args.command, params, rows))
    if any(r.get("status") == "FAIL" for r in rows):
        print("internal error: verification failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
