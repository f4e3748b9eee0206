"""Command line frontend.

Subcommands expose the derivation pipelines (slice, g2, f4, dualpair),
the orbit classifier, and an aggregate `check` that reruns every
verification suite.  Output is deterministic for fixed flags and seed;
exit code 0 means every check passed, 1 flags an identity violation,
2 flags invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from random import Random
from typing import Dict, List, Optional, Sequence

from . import classify as cls
from . import dualpair as dp
from . import f4 as f4mod
from . import g2 as g2mod
from .liealg import standard_form
from .mpoly import MPoly
from .polymat import (
    PolyMatrix,
    charpoly_coefficients,
    det_cofactor,
    determinant,
    pfaffian,
)
from .scalar import Scalar
from .slicegeom import (
    HOOK_VARS,
    derived_hook_f,
    expected_hook_f,
    hook_factorization,
    hook_pipeline,
    normalize_to_hook_form,
)

SCHEMA_VERSION = 1


def _jsonable(value):
    if isinstance(value, (MPoly,)):
        return value.to_text()
    if isinstance(value, (Scalar, Fraction)):
        return str(value)
    if isinstance(value, PolyMatrix):
        return [[_jsonable(e) for e in row] for row in value.rows]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _check(name: str, passed: bool, detail: str = "") -> Dict[str, str]:
    return {"name": name, "status": "pass" if passed else "fail", "detail": detail}


def _run_check(name: str, fn) -> Dict[str, str]:
    """Turn an exception-raising verifier into a pass/fail record."""
    try:
        detail = fn()
    except (AssertionError, ValueError) as exc:
        return _check(name, False, str(exc))
    return _check(name, True, "" if detail is None else str(detail))


def _report(command: str, inputs: Dict, results: Dict, checks: List[Dict]) -> Dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": _jsonable(inputs),
        "results": _jsonable(results),
        "checks": checks,
        "exit_code": 0 if all(c["status"] == "pass" for c in checks) else 1,
    }


def _emit(report: Dict, emit: str) -> int:
    if emit == "json":
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))
    else:
        print(f"command: {report['command']}")
        for key in sorted(report["inputs"]):
            print(f"input {key}: {report['inputs'][key]}")
        for key in sorted(report["results"]):
            value = report["results"][key]
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True, separators=(",", ":"))
            print(f"result {key}: {value}")
        for check in report["checks"]:
            suffix = f" ({check['detail']})" if check["detail"] else ""
            print(f"check {check['name']}: {check['status']}{suffix}")
        print(f"exit: {report['exit_code']}")
    return report["exit_code"]


def _fail_input(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _parse_partition(text: str) -> List[int]:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"orbit {text!r} is not a comma-separated integer list")
    if not parts or any(p <= 0 for p in parts):
        raise ValueError("orbit parts must be positive")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise ValueError("orbit parts must be weakly decreasing")
    return parts


# ---------------------------------------------------------------------------
# slice
# ---------------------------------------------------------------------------


def cmd_slice(args) -> int:
    if args.algebra != "sp":
        return _fail_input("only the symplectic hook family is implemented")
    try:
        orbit = _parse_partition(args.orbit)
    except ValueError as exc:
        return _fail_input(str(exc))
    n = args.rank
    if n < 2 or orbit != [2 * n - 2, 1, 1]:
        return _fail_input(
            f"expected the hook orbit {[2 * n - 2, 1, 1]} for sp_{2 * n}, got {orbit}"
        )
    hyp = hook_pipeline(n)
    reference = expected_hook_f(n)
    difference = hyp.f - reference
    checks = [
        _check("derived-form", hyp.f == derived_hook_f(n)),
        _check(
            "printed-reference-match",
            difference.is_zero(),
            "" if difference.is_zero() else f"difference {difference.to_text()}",
        ),
        _run_check(
            "factorization",
            lambda: hook_factorization(n) and f"degree split checked at n={n}",
        ),
        _run_check(
            "normal-form",
            lambda: f"unit {normalize_to_hook_form(hyp.f, n).unit}",
        ),
    ]
    results = {
        "f": hyp.f,
        "eliminations": {k: v for k, v in hyp.eliminations.items()},
        "vars": list(HOOK_VARS),
        "charpoly": hyp.invariants.charpoly,
    }
    return _emit(
        _report("slice", {"algebra": "sp", "rank": n, "orbit": orbit}, results, checks),
        args.emit,
    )


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def _parse_orbit_label(family: str, rank: int, text: str) -> cls.OrbitLabel:
    if family in ("A", "B", "C", "D"):
        return cls.OrbitLabel(family, rank, partition=tuple(_parse_partition(text)))
    return cls.OrbitLabel(family, rank, descriptor=text)


def cmd_classify(args) -> int:
    family, rank = args.algebra, args.rank
    if args.enumerate:
        try:
            table = cls.enumerate_orbits(family, rank)
        except ValueError as exc:
            return _fail_input(str(exc))
        checks = [
            _check(
                "star-iff-b2-equals-rank",
                all(row["star"] == (row["b2"] == rank) for row in table),
            )
        ]
        if family in ("B", "C"):
            checks.append(
                _check(
                    "exception-set-closed-form", cls.exception_set_matches(family, rank)
                )
            )
        return _emit(
            _report(
                "classify",
                {"algebra": family, "rank": rank, "enumerate": True},
                {"table": table},
                checks,
            ),
            args.emit,
        )
    if not args.orbit:
        return _fail_input("need --orbit or --enumerate")
    try:
        label = _parse_orbit_label(family, rank, args.orbit)
        verdict = cls.classify(label)
    except ValueError as exc:
        return _fail_input(str(exc))
    results = {
        "b2": verdict.b2,
        "star": verdict.star,
        "subregular_singularity": verdict.subregular_singularity,
        "notes": list(verdict.notes),
    }
    checks = [_check("star-iff-b2-equals-rank", verdict.star == (verdict.b2 == rank))]
    return _emit(
        _report(
            "classify",
            {"algebra": family, "rank": rank, "orbit": args.orbit},
            results,
            checks,
        ),
        args.emit,
    )


# ---------------------------------------------------------------------------
# g2
# ---------------------------------------------------------------------------


def cmd_g2(args) -> int:
    if args.action != "verify":
        return _fail_input(f"unknown g2 action {args.action!r}")
    bound = args.degree_bound or 8
    checks = [
        _run_check("jacobi-identity", lambda: f"{g2mod.jacobi_full()} triples"),
        _run_check(
            "embedding-homomorphism",
            lambda: f"{g2mod.embedding_homomorphism_full()} pairs",
        ),
        _run_check("invariant-form-line", lambda: "1-dimensional"
                   if g2mod.invariant_form() is not None else ""),
        _run_check(
            "slice-structure",
            lambda: json.dumps(g2mod.slice_structure_check(), sort_keys=True),
        ),
        _run_check(
            "chi2-closed-form",
            lambda: g2mod.slice_invariants() and "chi2 = -2(u - 3/4(ac - b^2))",
        ),
        _run_check(
            "chi6-identity-reading",
            lambda: "reading (t4, t5) -> ({}, {})".format(*g2mod.chi6_identity_scan()),
        ),
        _run_check(
            "invariant-crosscheck", lambda: f"{g2mod.chi_crosscheck(200, args.seed)} samples"
        ),
    ]
    f = g2mod.g2_hypersurface()
    expected = g2mod.example_f()
    checks.append(_check("hypersurface-equals-printed-f", f == expected))
    weights = {v: g2mod.SLICE_DEGREES[v] for v in g2mod.VARS7}
    checks.append(
        _check("quasi-homogeneous-degree-12", f.quasi_homogeneous_degree(weights) == 12)
    )
    certs = None

    def run_certs():
        nonlocal certs
        certs = g2mod.singular_locus_certificates(bound=bound)
        return f"bound {max(c.bound for c in certs.values())} for 7 partials"

    checks.append(_run_check("singular-locus-certificates", run_certs))
    checks.append(
        _run_check(
            "s3-invariant-model",
            lambda: ", ".join(
                f"{k}={v}" for k, v in sorted(g2mod.s3_invariant_model().items())
            ),
        )
    )
    results = {
        "f": f,
        "relations": g2mod.slice_relations(g2mod.VARS7),
        "chi6_reading": list(g2mod.CHI6_READING),
        "s3_model": g2mod.s3_invariant_model(),
    }
    return _emit(
        _report("g2", {"action": "verify", "degree_bound": bound}, results, checks),
        args.emit,
    )


# ---------------------------------------------------------------------------
# f4
# ---------------------------------------------------------------------------


def cmd_f4(args) -> int:
    if args.action == "betti":
        report = f4mod.f4_betti_subsubregular()
        checks = [
            _check("two-invariant-hyperplanes", len(report["components"]) == 2),
            _check("b2-is-4", report["b2"] == 4),
        ]
        results = {"b2": report["b2"], "decomposition": report["decomposition"]}
        return _emit(_report("f4", {"action": "betti"}, results, checks), args.emit)
    if args.action != "verify":
        return _fail_input(f"unknown f4 action {args.action!r}")
    system = f4mod.f4_roots()
    graded = f4mod.f4_grading(system)
    checks = [
        _check("48-roots", len(system.roots) == 48),
        _check("24-positive", len(system.positives()) == 24),
        _check("highest-root", f4mod.highest_root(system) == (2, 3, 4, 2)),
        _run_check(
            "reflection-closure",
            lambda: f"{f4mod.reflection_closure_check(system)} pairs",
        ),
        _check("grade-0-dim-8", graded.dims[0] == 8),
        _check("grade-2-dim-8", graded.dims[2] == 8),
        _run_check("grade-2-arrows", lambda: f4mod.grade2_arrows(system) and "5+3"),
        _check("biweights-match-module", f4mod.biweight_multisets_match()),
        _run_check(
            "invariant-hyperplanes",
            lambda: ", ".join(
                str(h["bidegree"]) for h in f4mod.f4_invariant_hyperplanes()
            ),
        ),
        _run_check(
            "orbit-dimension",
            lambda: json.dumps(f4mod.orbit_dimension_check(), sort_keys=True),
        ),
    ]
    results = {
        "dims": {str(k): v for k, v in sorted(graded.dims.items())},
        "betti": f4mod.f4_betti_subsubregular()["b2"],
    }
    return _emit(_report("f4", {"action": "verify"}, results, checks), args.emit)


# ---------------------------------------------------------------------------
# dualpair
# ---------------------------------------------------------------------------


def cmd_dualpair(args) -> int:
    n, i = args.n, args.i
    if n < 2:
        return _fail_input("need n >= 2")
    if not (1 <= i <= n) or (i % 2 == 0 and i != n):
        return _fail_input("need 1 <= i <= n with i odd or i = n")
    cfg = dp.default_config(n)
    try:
        element = dp.kp_find_element(n, i)
    except AssertionError as exc:
        return _emit(
            _report(
                "dualpair",
                {"n": n, "i": i, "seed": args.seed},
                {},
                [_check("witness-element", False, str(exc))],
            ),
            args.emit,
        )
    want_pi = (2 * n - i - 1,) if i == 1 else (2 * n - i - 1, i - 1)
    checks = [
        _check(
            "witness-jordan-types",
            element.rho_type == (2 * n - i, i) and element.pi_type == want_pi,
            f"rho {list(element.rho_type)}, pi {list(element.pi_type)}",
        ),
        _run_check(
            "pfaffian-locus",
            lambda: f"{_pf_locus_samples(cfg, 25, args.seed)} samples",
        ),
        _run_check(
            "equivariance",
            lambda: f"{dp.equivariance_check(cfg, samples=5, seed=args.seed)} identities",
        ),
        _run_check(
            "rank-chains",
            lambda: f"{dp.rank_chain_check(cfg, samples=10, seed=args.seed)} samples",
        ),
    ]
    if n <= 4:
        checks.append(
            _run_check(
                "poisson-commutant",
                lambda: f"{dp.commutant_check(cfg)['pairs']} bracket pairs",
            )
        )
    if n <= 3:
        checks.append(
            _run_check(
                "moment-identity",
                lambda: f"constant {dp.moment_identity_check(cfg)}",
            )
        )
    results = {
        "X0": element.X,
        "rho_type": list(element.rho_type),
        "pi_type": list(element.pi_type),
        "moment_constant": dp.MOMENT_CONSTANT,
    }
    return _emit(
        _report("dualpair", {"n": n, "i": i, "seed": args.seed}, results, checks),
        args.emit,
    )


def _pf_locus_samples(cfg, samples: int, seed: int) -> int:
    rng = Random(seed)
    for _ in range(samples):
        X = PolyMatrix(
            [
                [rng.randint(-4, 4) for _ in range(2 * cfg.n)]
                for _ in range(2 * cfg.n - 2)
            ]
        )
        if not dp.pfaffian_locus_check(cfg, X):
            raise AssertionError("pfaffian locus violated")
    return samples


# ---------------------------------------------------------------------------
# check (all suites)
# ---------------------------------------------------------------------------


def _suite_hook(seed: int, bound: Optional[int]) -> List[Dict]:
    checks = []
    for n in (2, 3, 4, 5):
        hyp = hook_pipeline(n)
        difference = hyp.f - expected_hook_f(n)
        checks.append(
            _check(
                f"hook-n{n}-printed-form",
                difference.is_zero(),
                "" if difference.is_zero() else f"difference {difference.to_text()}",
            )
        )
        checks.append(
            _run_check(f"hook-n{n}-factorization", lambda n=n: hook_factorization(n) and "ok")
        )
        checks.append(
            _run_check(
                f"hook-n{n}-normal-form",
                lambda n=n, f=hyp.f: f"unit {normalize_to_hook_form(f, n).unit}",
            )
        )
    return checks


def _suite_g2(seed: int, bound: Optional[int]) -> List[Dict]:
    bound = bound or 8
    f = g2mod.g2_hypersurface()
    weights = {v: g2mod.SLICE_DEGREES[v] for v in g2mod.VARS7}
    return [
        _run_check("g2-jacobi", lambda: f"{g2mod.jacobi_full()} triples"),
        _run_check(
            "g2-embedding", lambda: f"{g2mod.embedding_homomorphism_full()} pairs"
        ),
        _run_check(
            "g2-slice-structure",
            lambda: json.dumps(g2mod.slice_structure_check(), sort_keys=True),
        ),
        _run_check(
            "g2-chi6-reading",
            lambda: "({}, {})".format(*g2mod.chi6_identity_scan()),
        ),
        _check("g2-hypersurface", f == g2mod.example_f()),
        _check("g2-quasi-homogeneous-12", f.quasi_homogeneous_degree(weights) == 12),
        _run_check(
            "g2-singular-locus",
            lambda: "7 certificates"
            if g2mod.singular_locus_certificates(bound=bound)
            else "",
        ),
        _run_check(
            "g2-s3-model",
            lambda: ", ".join(
                f"{k}={v}" for k, v in sorted(g2mod.s3_invariant_model().items())
            ),
        ),
    ]


def _suite_classify(seed: int, bound: Optional[int]) -> List[Dict]:
    checks = []
    ok = all(
        cls.exception_set_matches(fam, n) for fam in ("B", "C") for n in range(2, 9)
    )
    checks.append(_check("classify-exception-sets-n-le-8", ok))
    star_ok = True
    for fam, lo in (("B", 2), ("C", 2), ("D", 3)):
        for n in range(lo, 7):
            for row in cls.enumerate_orbits(fam, n):
                star_ok = star_ok and row["star"] == (row["b2"] == n)
    checks.append(_check("classify-star-iff-b2-rank", star_ok))
    mono = all(
        cls.monotonicity_check(fam, n) >= 0 for fam in ("B", "C") for n in range(2, 7)
    )
    checks.append(
        _check("classify-monotonicity", mono and cls.monotonicity_check("G", 2) == 3)
    )
    checks.append(
        _run_check(
            "classify-dominance-axioms",
            lambda: f"{sum(cls.dominance_axioms_check(m)['partitions'] for m in range(1, 17))} partitions",
        )
    )
    return checks


def _suite_f4(seed: int, bound: Optional[int]) -> List[Dict]:
    system = f4mod.f4_roots()
    graded = f4mod.f4_grading(system)
    betti = f4mod.f4_betti_subsubregular()
    return [
        _check("f4-48-roots", len(system.roots) == 48),
        _check("f4-grading-dims", graded.dims[0] == 8 and graded.dims[2] == 8),
        _run_check(
            "f4-hyperplanes",
            lambda: ", ".join(
                str(h["bidegree"]) for h in f4mod.f4_invariant_hyperplanes()
            ),
        ),
        _check("f4-betti-2+1+1", betti["b2"] == 4 and betti["decomposition"] == "2+1+1"),
    ]


def _suite_dualpair(seed: int, bound: Optional[int]) -> List[Dict]:
    checks = []
    for n, i in ((3, 3), (4, 3), (4, 1), (5, 5)):
        checks.append(
            _run_check(
                f"dualpair-witness-{n}-{i}",
                lambda n=n, i=i: "rho {} pi {}".format(
                    *(
                        lambda e: (list(e.rho_type), list(e.pi_type))
                    )(dp.kp_find_element(n, i))
                ),
            )
        )
    for n in (3, 4):
        checks.append(
            _run_check(
                f"dualpair-pf-locus-n{n}",
                lambda n=n: f"{_pf_locus_samples(dp.default_config(n), 100, seed)} samples",
            )
        )
    for n in (2, 3, 4):
        checks.append(
            _run_check(
                f"dualpair-commutant-n{n}",
                lambda n=n: f"{dp.commutant_check(dp.default_config(n))['pairs']} pairs",
            )
        )
    checks.append(
        _run_check(
            "dualpair-moment-identity",
            lambda: f"constant {dp.moment_identity_check(dp.default_config(3))}",
        )
    )
    return checks


def _suite_kernel(seed: int, bound: Optional[int]) -> List[Dict]:
    rng = Random(seed)

    def pf_squares():
        for dim in (2, 4, 6, 8):
            for _ in range(5):
                rows = [[0] * dim for _ in range(dim)]
                for r in range(dim):
                    for c in range(r + 1, dim):
                        v = rng.randint(-5, 5)
                        rows[r][c] = v
                        rows[c][r] = -v
                m = PolyMatrix(rows)
                if pfaffian(m) * pfaffian(m) != determinant(m):
                    raise AssertionError(f"pf^2 != det at dim {dim}")
        return "dims 2..8, 5 samples each"

    def charpoly_vs_cofactor():
        vars = ("t",)
        t = MPoly.variable("t", vars)
        for dim in (1, 2, 3, 4):
            for _ in range(5):
                m = PolyMatrix(
                    [[rng.randint(-4, 4) for _ in range(dim)] for _ in range(dim)]
                )
                coeffs = charpoly_coefficients(m)
                poly = MPoly.zero(vars)
                for k, c in enumerate(coeffs):
                    poly = poly + c * t ** (dim - k)
                shifted = PolyMatrix(
                    [
                        [
                            t * (1 if r == c else 0) - m.entry(r, c)
                            for c in range(dim)
                        ]
                        for r in range(dim)
                    ]
                )
                if poly != det_cofactor(shifted):
                    raise AssertionError(f"charpoly mismatch at dim {dim}")
        return "dims 1..4, 5 samples each"

    def roundtrip():
        vars = ("x", "y", "z")
        for k in range(1000):
            terms = {}
            for _ in range(rng.randint(0, 6)):
                exps = tuple(rng.randint(0, 4) for _ in vars)
                terms[exps] = Scalar(
                    Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                    Fraction(rng.randint(-3, 3)),
                )
            p = MPoly(vars, terms)
            if MPoly.from_text(p.to_text(), vars) != p:
                raise AssertionError(f"text roundtrip fails at sample {k}")
            if MPoly.from_json(p.to_json()) != p:
                raise AssertionError(f"json roundtrip fails at sample {k}")
        return "1000 polynomials"

    return [
        _run_check("kernel-pfaffian-squares-to-det", pf_squares),
        _run_check("kernel-charpoly-vs-cofactor", charpoly_vs_cofactor),
        _run_check("kernel-serialization-roundtrip", roundtrip),
    ]


SUITES = {
    "classify": _suite_classify,
    "dualpair": _suite_dualpair,
    "f4": _suite_f4,
    "g2": _suite_g2,
    "hook": _suite_hook,
    "kernel": _suite_kernel,
}


def cmd_check(args) -> int:
    checks: List[Dict] = []
    for name in sorted(SUITES):
        checks.extend(SUITES[name](args.seed, args.degree_bound))
    failures = [c for c in checks if c["status"] == "fail"]
    results = {
        "suites": sorted(SUITES),
        "total": len(checks),
        "failures": len(failures),
        "first_failure": failures[0]["name"] if failures else None,
    }
    return _emit(
        _report(
            "check",
            {"seed": args.seed, "degree_bound": args.degree_bound},
            results,
            checks,
        ),
        args.emit,
    )


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # The same three options live on the main parser (with real defaults)
    # and on every subparser (defaulting to SUPPRESS so they refine rather
    # than clobber); both `--emit json slice ...` and `slice ... --emit
    # json` work.
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument(
        "--emit", choices=("text", "json"), **(kw or {"default": "text"})
    )
    parser.add_argument("--seed", type=int, **(kw or {"default": 0}))
    parser.add_argument("--degree-bound", type=int, **(kw or {"default": None}))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactlie",
        description="exact computations around nilpotent slices",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slice", help="hook slice hypersurface derivation")
    _add_common(p, suppress=True)
    p.add_argument("--algebra", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--orbit", required=True)
    p.set_defaults(fn=cmd_slice)

    p = sub.add_parser("classify", help="second Betti numbers by orbit")
    _add_common(p, suppress=True)
    p.add_argument("--algebra", required=True, choices=tuple("ABCDEFG"))
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--orbit")
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("g2", help="rank-2 exceptional algebra suite")
    _add_common(p, suppress=True)
    p.add_argument("action", choices=("verify",))
    p.set_defaults(fn=cmd_g2)

    p = sub.add_parser("f4", help="rank-4 exceptional algebra suite")
    _add_common(p, suppress=True)
    p.add_argument("action", choices=("betti", "verify"))
    p.set_defaults(fn=cmd_f4)

    p = sub.add_parser("dualpair", help="orthogonal-symplectic moment maps")
    _add_common(p, suppress=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(fn=cmd_dualpair)

    p = sub.add_parser("check", help="run every verification suite")
    _add_common(p, suppress=True)
    p.set_defaults(fn=cmd_check)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
