"""Command line front end.

    nashblowup lambda --t 3 --n 2
    nashblowup eta list --n 3
    nashblowup eta build --n 6 --seq 1,0,1,1,1,1,2 [--format svg --out t.svg]
    nashblowup etak --n 6 --k 3
    nashblowup fan --n 3 [--exhaustive] [--format svg --out fan.svg]
    nashblowup verify --n 4
    nashblowup oracle --n 3
    nashblowup identities [--n 5] [--seed 0]

JSON goes to stdout, or to ``--out`` when the format is json.  With
``--format svg`` the figure is written to ``--out`` and the JSON still goes
to stdout.  Exit status: 0 all checks pass, 1 a check failed, 2 usage
error, 3 exhaustive run refused on cost.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from itertools import combinations
from pathlib import Path

from . import __version__
from .eta import EtaSequence, enumerate_omega, j_of_eta, staircase, translated_staircase
from .etak import (
    check_lower_bounds,
    check_last_vector,
    check_eta_k_monotone,
    eta_k_trace,
    verify_main,
)
from .identities import (
    check_diagonal_span,
    check_riordan,
    check_translation_span,
    check_vandermonde_matrix,
    check_vanishing_sum,
)
from .multiindex import enumerate_lambda, lambda_size, m_of
from .nashfan import (
    family_points,
    fan_rays_contain,
    minimal_resolution_fan,
    newton_fan,
    refines,
)
from .oracle import CostRefused, cross_check, fan_of, run_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_COST = 0, 1, 2, 3
DEFAULT_SEED = 20240611

log = logging.getLogger("nashblowup")


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for '{args.command}'")
    return val


def _emit(args, payload: dict, figure=None) -> None:
    text = dumps(payload)
    if args.format == "svg":
        if not args.out:
            raise UsageError("--format svg needs --out PATH for the figure")
        if figure is None:
            raise UsageError(f"'{args.command}' has no figure to render")
        figure(args.out)
        sys.stdout.write(text)
    elif args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------


def cmd_lambda(args) -> int:
    t = args.t if args.t is not None else 2
    n = _need(args, "n")
    lam = enumerate_lambda(t, n)
    _emit(args, {"t": t, "n": n, "size": len(lam), "expected_size": lambda_size(t, n), "elements": [list(b) for b in lam]})
    return EXIT_OK


def cmd_eta(args) -> int:
    n = _need(args, "n")
    if args.action == "list":
        _emit(args, {"n": n, "count": 2 ** n, "omega": [list(e.as_tuple()) for e in enumerate_omega(n)]})
        return EXIT_OK
    eta = EtaSequence.parse(_need(args, "seq"))
    if eta.n != n:
        raise UsageError(f"sequence {eta} sums to {eta.n}, not --n {n}")
    st = staircase(n, eta)
    tp = translated_staircase(n, eta)
    J = j_of_eta(n, eta)
    payload = {
        "n": n,
        "eta": list(eta.as_tuple()),
        "staircase": st.to_json(),
        "translated": tp.to_json(),
        "J": [list(b) for b in J],
        "m_J": list(m_of(n, J)),
    }

    def figure(path):
        from .plotting import plot_staircase

        out = Path(path)
        plot_staircase(st.to_json(), out, title=f"T for eta={eta}")
        plot_staircase(tp.to_json(), out.with_name(out.stem + "_translated" + out.suffix), title=f"T' for eta={eta}")

    _emit(args, payload, figure)
    return EXIT_OK


def cmd_etak(args) -> int:
    n = _need(args, "n")
    ks = [args.k] if args.k is not None else range(1, n + 1)
    traces = [eta_k_trace(n, k).to_json() for k in ks]
    _emit(args, traces[0] if args.k is not None else {"n": n, "traces": traces})
    return EXIT_OK


def _fan_payload(args):
    n = _need(args, "n")
    if args.exhaustive:
        fan = fan_of(run_oracle(n, override=args.override_cost, jobs=args.jobs, cache_dir=args.cache_dir))
        source = "exhaustive"
    else:
        fan = newton_fan(family_points(n))
        source = "family"
    minres = minimal_resolution_fan(n)
    ok = refines(fan, minres)
    payload = fan.to_json()
    payload["source"] = source
    payload["refines_minimal_resolution"] = ok
    return fan, minres, payload, ok


def cmd_fan(args) -> int:
    fan, minres, payload, ok = _fan_payload(args)

    def figure(path):
        from .plotting import plot_fan

        plot_fan(fan.to_json(), path, highlight=minres.to_json())

    _emit(args, payload, figure)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    n = _need(args, "n")
    ks = [args.k] if args.k is not None else list(range(1, n + 1))
    reports = []
    ok = True
    for k in ks:
        rep = verify_main(n, k, fast=args.fast)
        entry = rep.to_json()
        extra = {
            "monotonicity": check_eta_k_monotone(n, k),
            "last_vector": check_last_vector(n, k),
            "lower_bounds": check_lower_bounds(n, k),
        }
        entry["structure_checks"] = extra
        entry["passed"] = rep.passed and all(extra.values())
        ok = ok and entry["passed"]
        reports.append(entry)
    fan = newton_fan(family_points(n))
    minres = minimal_resolution_fan(n)
    fan_ok = fan_rays_contain(fan, [(k, 1 - k) for k in ks]) and refines(fan, minres)
    payload = {
        "n": n,
        "reports": reports,
        "family_fan": fan.to_json(),
        "family_fan_refines_minimal_resolution": fan_ok,
        "passed": ok and fan_ok,
    }
    _emit(args, payload)
    return EXIT_OK if payload["passed"] else EXIT_FAIL


def cmd_oracle(args) -> int:
    n = _need(args, "n")
    report = cross_check(n, override=args.override_cost, jobs=args.jobs, cache_dir=args.cache_dir)

    def figure(path):
        from .plotting import plot_fan

        plot_fan(report["oracle_fan"], path, highlight=minimal_resolution_fan(n).to_json())

    _emit(args, report, figure)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def identity_sweeps(n_max: int = 5, seed: int = DEFAULT_SEED, riordan_max: int = 12, shift_n_max: int = 4) -> dict:
    """Run every identity sweep and collect counts and failures."""
    rng = random.Random(seed)
    out = {}

    def record(name, params, cases):
        fails = [c for c in cases if not c[1]]
        out[name] = {"params": params, "count": len(cases), "failures": [c[0] for c in fails]}

    r = riordan_max
    record(
        "riordan",
        {"max": r},
        [([a, b, c], check_riordan(a, b, c)) for a in range(r + 1) for b in range(r + 1) for c in range(r + 1)],
    )
    record(
        "binomial_matrix",
        {"values": "1..10", "max_len": 5},
        [(list(c), check_vandermonde_matrix(c)) for L in range(1, 6) for c in combinations(range(1, 11), L)],
    )
    record(
        "diagonal_span",
        {"n_max": n_max, "m_max": "3n"},
        [([n, m], check_diagonal_span(n, m)) for n in range(1, n_max + 1) for m in range(3 * n + 1)],
    )
    record(
        "vanishing_sum",
        {"n_max": n_max, "a_max": 4, "r_max": 4, "orientations": [0, 1]},
        [
            ([n, a, rr, l, tr], check_vanishing_sum(n, a, rr, l, bool(tr)))
            for n in range(1, n_max + 1)
            for l in range(1, n + 1)
            for a in range(5)
            for rr in range(5)
            for tr in (0, 1)
        ],
    )
    cases = []
    for n in range(1, shift_n_max + 1):
        for eta in enumerate_omega(n):
            for l in range(1, n + 1):
                shifts = [rng.randint(0, 3 * n) for _ in range(l)]
                cases.append(([n, list(eta.as_tuple()), l, shifts], check_translation_span(n, eta, l, shifts)))
    record("translation_span", {"n_max": shift_n_max, "shift_max": "3n", "seed": seed}, cases)
    return out


def cmd_identities(args) -> int:
    n_max = args.n if args.n is not None else 5
    sweeps = identity_sweeps(n_max=n_max, seed=args.seed, shift_n_max=min(n_max, 4) if args.n is None else n_max)
    passed = all(not s["failures"] for s in sweeps.values())
    _emit(args, {"sweeps": sweeps, "passed": passed})
    return EXIT_OK if passed else EXIT_FAIL


COMMANDS = {
    "lambda": cmd_lambda,
    "eta": cmd_eta,
    "etak": cmd_etak,
    "fan": cmd_fan,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "identities": cmd_identities,
}


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--seq", help="z,d0,d1,...,dr (d0 may be omitted)")
    p.add_argument("--exhaustive", action="store_true", help="use the brute-force oracle")
    p.add_argument("--override-cost", action="store_true", help="allow exhaustive runs beyond n=3")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "svg"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir", help="directory for cached oracle results")
    p.add_argument("--fast", action="store_true", help="screen determinants modulo primes first")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nashblowup", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "eta":
            p.add_argument("action", choices=("list", "build"))
        _common(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CostRefused as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_COST
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
