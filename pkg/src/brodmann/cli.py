"""Command-line surface for the toolkit.

Subcommands cover ideal profiles of associated primes, single-power runs,
Ratliff-Rush closures, the torsion-degree scan, stabilization thresholds,
cone generators, ED constraint-system construction, bounded feasibility
search, and a self-checking examples runner.

Exit codes: 0 success, 2 malformed input or arguments, 3 enumeration budget
exceeded, 4 internal inconsistency (both conflicting answers are dumped).
"""

from __future__ import annotations

import argparse
import json
import sys

from .assprimes import METHODS, AssProfile, ass_power, ass_profile
from .bounds import bound_report, ideal_parameters
from .cohomology import DEFAULT_M_CAP, a0_observed, ratliff_rush
from .errors import BudgetError, InconsistencyError, InputError, ParseError
from .ioformats import (
    load_ideal,
    load_system,
    monomial_str,
    prime_str,
    system_to_json,
    system_to_text,
)
from .monomials import MonomialIdeal
from .polyhedra import (
    ED_MODES,
    bound_a1,
    bound_a2,
    build_system,
    designated_generator,
    extreme_rays,
    hilbert_generators,
    module_generators,
    solve_feasible,
    staircase_system,
)

INDEX_NOTE = (
    "row n lists Ass(I^n/I^(n+1)); in the shifted numbering Ass(I^(m-1)/I^m) "
    "this is m = n+1"
)


def _primes_cell(primes: frozenset[tuple[int, ...]]) -> str:
    if not primes:
        return "-"
    return ",".join(prime_str(p) for p in sorted(primes))


def _primes_json(primes: frozenset[tuple[int, ...]]) -> list[list[int]]:
    return [list(p) for p in sorted(primes)]


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _profile_payload(profile: AssProfile) -> dict:
    stable = profile.observed_stable_at
    return {
        "r": profile.ideal.r,
        "n_max": profile.n_max,
        "method": profile.method,
        "index_note": INDEX_NOTE,
        "entries": [
            {"n": n, "shifted_n": n + 1, "primes": _primes_json(e)}
            for n, e in enumerate(profile.entries)
        ],
        "observed_stable_at": stable,
        "observed_stable_at_shifted": None if stable is None else stable + 1,
        "non_monotone_at": list(profile.non_monotone_at),
    }


def _cmd_ass_profile(args: argparse.Namespace) -> int:
    I = load_ideal(args.ideal)
    profile = ass_profile(
        I, args.n_max, method=args.method, jobs=args.jobs, budget=args.budget
    )
    if args.format == "json":
        _emit(json.dumps(_profile_payload(profile), indent=2))
        return 0
    lines = [f"# {INDEX_NOTE}", "# n\tprimes"]
    for n, entry in enumerate(profile.entries):
        lines.append(f"{n}\t{_primes_cell(entry)}")
    stable = profile.observed_stable_at
    if stable is None:
        lines.append(f"# observed_stable_at: none up to n_max={profile.n_max}")
    else:
        lines.append(f"# observed_stable_at: {stable} (shifted index {stable + 1})")
    if profile.non_monotone_at:
        lines.append(
            "# non_monotone_at: " + ",".join(str(n) for n in profile.non_monotone_at)
        )
    _emit("\n".join(lines))
    return 0


def _cmd_ass(args: argparse.Namespace) -> int:
    I = load_ideal(args.ideal)
    primes = ass_power(I, args.n, method=args.method, budget=args.budget)
    if args.format == "json":
        payload = {
            "n": args.n,
            "shifted_n": args.n + 1,
            "method": args.method,
            "index_note": INDEX_NOTE,
            "primes": _primes_json(primes),
        }
        _emit(json.dumps(payload, indent=2))
        return 0
    _emit(f"# {INDEX_NOTE}\n{args.n}\t{_primes_cell(primes)}")
    return 0


def _cmd_rr(args: argparse.Namespace) -> int:
    I = load_ideal(args.ideal)
    res = ratliff_rush(I, args.n, m_cap=args.m_cap)
    if args.format == "tsv":
        lines = [
            f"# Ratliff-Rush closure of I^{res.n}",
            f"# stabilized_at_m: {res.stabilized_at_m}",
            f"# certified: {res.certified}",
        ]
        lines += [monomial_str(g) for g in res.closure.generators]
        _emit("\n".join(lines))
        return 0
    payload = {
        "n": res.n,
        "closure_generators": [list(g) for g in res.closure.generators],
        "closure_monomials": [monomial_str(g) for g in res.closure.generators],
        "stabilized_at_m": res.stabilized_at_m,
        "certified": res.certified,
        "chain_monotone": res.chain_monotone,
    }
    _emit(json.dumps(payload, indent=2))
    return 0


def _cmd_a0(args: argparse.Namespace) -> int:
    I = load_ideal(args.ideal)
    res = a0_observed(I, args.n_max, m_cap=args.m_cap)
    payload = {
        "a0": res.value,
        "per_degree_flags": list(res.flags),
        "certified": res.certified,
        "warnings": list(res.warnings),
        "note": "per_degree_flags[k] reports nonzero Rees-irrelevant torsion in degree k",
    }
    if args.format == "tsv":
        lines = [f"# a0: {res.value}", f"# certified: {res.certified}"]
        lines += [f"{k}\t{flag}" for k, flag in enumerate(res.flags)]
        lines += [f"# warning: {w}" for w in res.warnings]
        _emit("\n".join(lines))
        return 0
    _emit(json.dumps(payload, indent=2))
    return 0


def _cmd_bound(args: argparse.Namespace) -> int:
    explicit = [v for v in (args.r, args.s, args.d) if v is not None]
    if args.ideal is not None:
        if explicit:
            raise InputError("--ideal conflicts with explicit --r/--s/--d")
        r, s, d = ideal_parameters(load_ideal(args.ideal))
    else:
        if len(explicit) != 3:
            raise InputError("provide either --ideal or all of --r, --s, --d")
        r, s, d = args.r, args.s, args.d
    rep = bound_report(r, s, d)
    if args.format == "json":
        payload = {
            "r": r,
            "s": s,
            "d": d,
            "b1": str(rep.b1),
            "b1_ceil": rep.b1_ceil,
            "b2": rep.b2,
            "b3": str(rep.b3),
            "b3_ceil": rep.b3_ceil,
            "b3_floor_reading": rep.b3_floor_reading,
            "b4": rep.b4,
            "b": str(rep.b_exact),
            "b_ceil": rep.b_ceil,
            "digits": {"b1": rep.digits_b1, "b2": rep.digits_b2, "b": rep.digits_b},
        }
        _emit(json.dumps(payload, indent=2))
        return 0
    lines = [
        f"# stabilization thresholds for r={r} s={s} d={d}",
        f"b1\t{rep.b1}\tceil={rep.b1_ceil}",
        f"b2\t{rep.b2}",
        f"b3\t{rep.b3}\tceil={rep.b3_ceil}\tfloor_reading={rep.b3_floor_reading}",
        f"b4\t{rep.b4}",
        f"b\t{rep.b_exact}\tceil={rep.b_ceil}",
        f"# B = max(B1, B2) = {rep.b_exact}",
        f"# digits: b1={rep.digits_b1} b2={rep.digits_b2} b={rep.digits_b}",
    ]
    _emit("\n".join(lines))
    return 0


def _vector_cell(v: tuple[int, ...]) -> str:
    return " ".join(str(c) for c in v)


def _cmd_cone(args: argparse.Namespace) -> int:
    system = load_system(args.system)
    want_rays = args.rays or not (args.hilbert or args.module or args.bound)
    tsv = args.format == "tsv"
    lines: list[str] = []
    payload: dict = {"e": system.e, "homogeneous": system.is_homogeneous()}
    if want_rays:
        rays = extreme_rays(system, budget=args.budget)
        if tsv:
            lines.append("# extreme rays")
            lines += [f"ray\t{_vector_cell(v)}" for v in rays]
        payload["rays"] = [list(v) for v in rays]
    if args.bound:
        if system.is_homogeneous():
            a1 = bound_a1(system)
            if tsv:
                lines.append(f"bound_a1\t{a1}\tceil={a1.ceil()}")
            payload["bound_a1"] = str(a1)
            payload["bound_a1_ceil"] = a1.ceil()
        else:
            a2 = bound_a2(system)
            a1h = bound_a1(system.homogenized())
            if tsv:
                lines.append(f"bound_a1\t{a1h}\tceil={a1h.ceil()}")
                lines.append(f"bound_a2\t{a2}\tceil={a2.ceil()}")
            payload["bound_a1"] = str(a1h)
            payload["bound_a1_ceil"] = a1h.ceil()
            payload["bound_a2"] = str(a2)
            payload["bound_a2_ceil"] = a2.ceil()
    if args.hilbert:
        if args.cap is None:
            raise InputError("--hilbert requires --cap")
        gens = hilbert_generators(system, args.cap, budget=args.budget)
        if tsv:
            lines.append("# semigroup generators")
            lines += [f"hilbert\t{_vector_cell(v)}" for v in gens]
        payload["hilbert"] = [list(v) for v in gens]
    if args.module:
        if system.is_homogeneous():
            mgens = [(0,) * system.e]
        else:
            if args.cap is None:
                raise InputError("--module requires --cap")
            mgens = module_generators(system, args.cap, budget=args.budget)
        if tsv:
            lines.append("# module generators")
            lines += [f"module\t{_vector_cell(v)}" for v in mgens]
        payload["module"] = [list(v) for v in mgens]
    _emit("\n".join(lines) if tsv else json.dumps(payload, indent=2))
    return 0


def _cmd_build_system(args: argparse.Namespace) -> int:
    I = load_ideal(args.ideal)
    system = build_system(I, args.mode)
    gen = I.generators[designated_generator(I)]
    if args.format == "json":
        obj = json.loads(system_to_json(system))
        obj["mode"] = args.mode
        obj["designated_generator"] = list(gen)
        text = json.dumps(obj, indent=2)
    else:
        text = (
            f"# mode: {args.mode}\n"
            f"# designated generator: {monomial_str(gen)}\n" + system_to_text(system)
        )
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        _emit(text)
    return 0


def _parse_fix(pairs: list[str]) -> dict[str | int, int]:
    fixed: dict[str | int, int] = {}
    for pair in pairs:
        if "=" not in pair:
            raise InputError(f"--fix expects label=value, got {pair!r}")
        key, _, raw = pair.partition("=")
        key = key.strip()
        try:
            value = int(raw)
        except ValueError:
            raise InputError(f"--fix value must be an integer, got {raw!r}")
        fixed[int(key) if key.isdigit() else key] = value
    return fixed


def _cmd_feasible(args: argparse.Namespace) -> int:
    system = load_system(args.system)
    fixed = _parse_fix(args.fix or [])
    witness = solve_feasible(system, fixed, args.box, budget=args.budget)
    labels = system.labels or tuple(f"v{i}" for i in range(system.e))
    if args.format == "json":
        payload = {
            "feasible": witness is not None,
            "box": args.box,
            "witness": None if witness is None else dict(zip(labels, witness)),
        }
        _emit(json.dumps(payload, indent=2))
        return 0
    if witness is None:
        _emit("infeasible")
        return 0
    lines = ["feasible"]
    lines += [f"{name}\t{value}" for name, value in zip(labels, witness)]
    _emit("\n".join(lines))
    return 0


def example_ideal(d: int) -> MonomialIdeal:
    """The five-generator family in three variables used by the examples
    runner: x^d, x^(d-1)y, xy^(d-1), y^d, x^2 y^(d-2) z for d >= 4."""
    if d < 4:
        raise InputError(f"the example family needs d >= 4, got {d}")
    gens = [(d, 0, 0), (d - 1, 1, 0), (1, d - 1, 0), (0, d, 0), (2, d - 2, 1)]
    return MonomialIdeal(3, tuple(sorted(gens, reverse=True)))


def _check_example_family(d: int, jobs: int) -> tuple[bool, str]:
    I = example_ideal(d)
    profile = ass_profile(I, d, method="both", jobs=jobs)
    small = frozenset({(1, 2), (1, 2, 3)})
    large = frozenset({(1, 2)})
    ok = True
    for n, entry in enumerate(profile.entries):
        expected = small if n <= d - 4 else large
        if entry != expected:
            ok = False
            break
    if profile.observed_stable_at != d - 3:
        ok = False
    detail = (
        f"entries over n=0..{d}, both methods, stable_at="
        f"{profile.observed_stable_at} (want {d - 3})"
    )
    return ok, detail


def _check_staircase(e: int, d: int) -> tuple[bool, str]:
    system = staircase_system(e, d)
    ray = tuple(d**k for k in range(e))
    rays = extreme_rays(system)
    gens = hilbert_generators(system, cap=d ** (e - 1))
    ok = ray in rays and ray in gens
    return ok, f"ray {ray} among {len(rays)} rays and {len(gens)} generators"


def _check_bounds() -> tuple[bool, str]:
    rep = bound_report(2, 2, 2)
    ok = (
        rep.b1 == 1024
        and rep.b2 == 16777216
        and rep.b_exact == 16777216
        and rep.b4 == 5791
    )
    return ok, f"b1={rep.b1_ceil} b2={rep.b2} b4={rep.b4} b={rep.b_ceil}"


def _cmd_paper_examples(args: argparse.Namespace) -> int:
    checks: list[tuple[str, bool, str]] = []
    for d in (5,) if args.quick else (5, 6, 7):
        ok, detail = _check_example_family(d, args.jobs)
        checks.append((f"family_d{d}_profile", ok, detail))
    for e in (2, 3):
        for d in (2, 3):
            ok, detail = _check_staircase(e, d)
            checks.append((f"staircase_e{e}_d{d}", ok, detail))
    ok, detail = _check_bounds()
    checks.append(("bound_report_2_2_2", ok, detail))
    failures = 0
    for name, passed, detail in checks:
        status = "PASS" if passed else "FAIL"
        failures += not passed
        _emit(f"{status}\t{name}\t{detail}")
    _emit(f"# {len(checks)} checks, {len(checks) - failures} passed, {failures} failed")
    return 0 if failures == 0 else 4


def _add_format(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument(
        "--format", choices=("tsv", "json"), default=default, help="output format"
    )


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--budget",
        type=int,
        default=None,
        help="lattice-point enumeration budget (default: BRODMANN_BUDGET or built-in)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brodmann",
        description="Associated primes of monomial ideal powers, Ratliff-Rush "
        "closures, polyhedral generator enumeration, and stabilization bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ass-profile", help="primes of I^n/I^(n+1) for n = 0..n_max")
    p.add_argument("--ideal", required=True, help="ideal file (text or .json)")
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--method", choices=METHODS, default="quotient")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers per power")
    _add_budget(p)
    _add_format(p, "tsv")
    p.set_defaults(func=_cmd_ass_profile)

    p = sub.add_parser("ass", help="primes of I^n/I^(n+1) for a single n")
    p.add_argument("--ideal", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="quotient")
    _add_budget(p)
    _add_format(p, "tsv")
    p.set_defaults(func=_cmd_ass)

    p = sub.add_parser("rr", help="Ratliff-Rush closure of I^n")
    p.add_argument("--ideal", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-cap", type=int, default=DEFAULT_M_CAP, dest="m_cap")
    _add_format(p, "json")
    p.set_defaults(func=_cmd_rr)

    p = sub.add_parser("a0", help="top degree with nonzero Rees-irrelevant torsion")
    p.add_argument("--ideal", required=True)
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--m-cap", type=int, default=DEFAULT_M_CAP, dest="m_cap")
    _add_format(p, "json")
    p.set_defaults(func=_cmd_a0)

    p = sub.add_parser("bound", help="stabilization thresholds from (r, s, d)")
    p.add_argument("--r", type=int, default=None, help="number of variables")
    p.add_argument("--s", type=int, default=None, help="number of generators")
    p.add_argument("--d", type=int, default=None, help="largest generator degree")
    p.add_argument("--ideal", default=None, help="derive (r, s, d) from this ideal")
    _add_format(p, "tsv")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("cone", help="extreme rays and generator enumeration")
    p.add_argument("--system", required=True, help="constraint-system file")
    p.add_argument("--rays", action="store_true", help="list extreme rays (default)")
    p.add_argument("--hilbert", action="store_true", help="semigroup generators")
    p.add_argument("--module", action="store_true", help="module generators")
    p.add_argument("--bound", action="store_true", help="print norm bounds")
    p.add_argument("--cap", type=int, default=None, help="enumeration box cap")
    _add_budget(p)
    _add_format(p, "tsv")
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("build-system", help="construct an ED constraint system")
    p.add_argument("--ideal", required=True)
    p.add_argument("--mode", type=str.upper, choices=ED_MODES, required=True)
    p.add_argument("--out", default=None, help="write to this file instead of stdout")
    _add_format(p, "tsv")
    p.set_defaults(func=_cmd_build_system)

    p = sub.add_parser("feasible", help="bounded search for an integer solution")
    p.add_argument("--system", required=True)
    p.add_argument(
        "--fix",
        action="append",
        default=[],
        metavar="VAR=VALUE",
        help="fix a variable by label or 0-based index (repeatable)",
    )
    p.add_argument("--box", type=int, required=True, help="range 0..box per free variable")
    _add_budget(p)
    _add_format(p, "tsv")
    p.set_defaults(func=_cmd_feasible)

    p = sub.add_parser(
        "paper-examples",
        help="run the built-in example expectations and print a pass/fail table",
    )
    p.add_argument("--quick", action="store_true", help="smallest family member only")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_paper_examples)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        if exc.payload:
            print(json.dumps(exc.payload, indent=2, default=str), file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
