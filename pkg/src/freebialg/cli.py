"""Command-line front end.

Subcommands evaluate the coproduct machinery on parsed elements, run the
named verification suites, and run the claim probes.  Output is JSON by
default (byte-identical across identical invocations, including the seed)
or ``--format text`` for reading; timings appear only in text output so the
JSON stays deterministic.

Exit codes: 0 all asserted checks verified (or probe completed), 1 an
asserted invariant failed, 2 usage error.  Probe disagreements are findings,
not failures, and do not affect the exit code.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import bialgebra, morphisms, reps, words
from .algebra import AlgebraElement, varphi_alg
from .bialgebra import (
    DirectSumElement,
    coassoc_check,
    counit,
    counit_axiom_check,
    counit_check,
    delta_phi,
    verify_cancellation,
    wcs_check,
)
from .corpus import random_direct_sum, random_reduced_word
from .text import ParseError, parse_element, parse_word
from .words import Rank, enumerate_ball, gen, kernel_witness, unit

SUITE_NAMES = ("words", "bialgebra", "reps", "morphisms", "all")


def _add_common(parser, suppress: bool) -> None:
    # registered on the root with real defaults and on every subcommand with
    # SUPPRESS defaults, so the flags are accepted in either position and a
    # post-subcommand value wins
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--format",
        choices=("json", "text"),
        default=default if suppress else "json",
    )
    parser.add_argument("--seed", type=int, default=default if suppress else 0)
    parser.add_argument("--tol", type=float, default=default if suppress else 1e-9)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="freebialg",
        description="exact computations in the graded free-group bialgebra",
    )
    _add_common(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, help):
        child = sub.add_parser(name, help=help)
        _add_common(child, suppress=True)
        return child

    d = command("delta", "print the coproduct of an element")
    d.add_argument("element")

    c = command("counit", "print the counit of an element")
    c.add_argument("element")

    ph = command("phi", "split a word of composite rank")
    ph.add_argument("n", type=int)
    ph.add_argument("m", type=int)
    ph.add_argument("word")

    tp = command("tensor-pd", "probe the indicator tensor formula")
    tp.add_argument("n", type=int)
    tp.add_argument("m", type=int)
    tp.add_argument("i", type=int)
    tp.add_argument("j", type=int)
    tp.add_argument("--radius", type=int, default=4)

    ob = command("orbit", "enumerate the pair orbit of (1,1)")
    ob.add_argument("n", type=int)
    ob.add_argument("m", type=int)
    ob.add_argument("--radius", type=int, default=4)
    ob.add_argument("--find", default=None, metavar="PAIR")

    v = command("verify", "run a verification suite")
    v.add_argument("suite_pos", nargs="?", default=None, metavar="SUITE")
    v.add_argument("--suite", default=None, choices=SUITE_NAMES)

    pr = command("probe", "run the claim probes")
    pr.add_argument("what", nargs="?", default="claims")
    pr.add_argument("--radius", type=int, default=4)

    return p


# -- suite machinery ---------------------------------------------------------


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("FREEBIALG_THREADS", "1")))
    except ValueError:
        return 1


def _run_checks(checks) -> list[dict]:
    """Evaluate (claim, callable) pairs, possibly across worker threads, and
    return results sorted by claim id so report bytes stay deterministic."""

    def run_one(item):
        claim, fn = item
        ok, witness = fn()
        return {
            "claim": claim,
            "status": "verified" if ok else "failed",
            "witness": witness,
        }

    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_one, checks))
    else:
        results = [run_one(item) for item in checks]
    return sorted(results, key=lambda r: r["claim"])


def _counted(pred_iter) -> tuple[bool, dict]:
    """Exhaust an iterable of (ok, payload); report the count or the first
    failing payload."""
    count = 0
    for ok, payload in pred_iter:
        if not ok:
            return False, {"counterexample": payload}
        count += 1
    return True, {"checked": count}


def _suite_words(seed: int, tol: float) -> list:
    rng = random.Random(seed)

    def reduction_laws():
        def run():
            for _ in range(300):
                n = rng.randint(1, 4)
                w = random_reduced_word(rng, n, 6)
                v = random_reduced_word(rng, n, 6)
                u = random_reduced_word(rng, n, 6)
                assoc = (w * v) * u == w * (v * u)
                inv = (w * w.inverse()).is_unit
                idem = words.reduce(w.ambient, w.syllables) == w
                yield assoc and inv and idem, str(w)

        return _counted(run())

    def phi_hom():
        def run():
            for _ in range(300):
                n, m = rng.randint(1, 3), rng.randint(1, 3)
                z1 = random_reduced_word(rng, n * m, 6)
                z2 = random_reduced_word(rng, n * m, 6)
                p, q = words.phi(n, m, z1 * z2)
                p1, q1 = words.phi(n, m, z1)
                p2, q2 = words.phi(n, m, z2)
                yield (p == p1 * p2 and q == q1 * q2), f"{z1} , {z2}"

        return _counted(run())

    def kernel():
        def run():
            for n in (2, 3):
                for m in (2, 3):
                    for i in range(1, n + 1):
                        for l in range(1, n + 1):
                            for j in range(1, m + 1):
                                for k in range(1, m + 1):
                                    w = kernel_witness(n, m, i, l, j, k)
                                    p, q = words.phi(n, m, w)
                                    ok = p.is_unit and q.is_unit
                                    if i != l and j != k:
                                        ok = ok and not w.is_unit
                                    else:
                                        ok = ok and w.is_unit
                                    yield ok, f"x({i},{l};{j},{k}) n={n} m={m}"

        return _counted(run())

    def lifts():
        def run():
            for _ in range(300):
                n, m = rng.randint(1, 3), rng.randint(1, 3)
                x = random_reduced_word(rng, n, 5)
                y, z = words.lift_first(x, m)
                p, q = words.phi(n, m, z)
                in_b1 = all(s.gen == 1 for s in y.syllables)
                yield (p == x and q == y and in_b1), f"lift_first {x}"
                yb = random_reduced_word(rng, m, 5)
                xb, zb = words.lift_second(yb, n)
                pb, qb = words.phi(n, m, zb)
                yield (pb == xb and qb == yb), f"lift_second {yb}"

        return _counted(run())

    def cancellation():
        def run():
            for n in (1, 2):
                for m in (1, 2):
                    for x in enumerate_ball(n, 3):
                        for y in enumerate_ball(m, 3):
                            yield verify_cancellation(x, y), f"({x},{y})"
            for _ in range(100):
                n, m = rng.randint(1, 4), rng.randint(1, 4)
                x = random_reduced_word(rng, n, 5)
                y = random_reduced_word(rng, m, 5)
                yield verify_cancellation(x, y), f"({x},{y})"

        return _counted(run())

    return [
        ("words.cancellation-witnesses", cancellation),
        ("words.kernel-witnesses", kernel),
        ("words.lift-constructions", lifts),
        ("words.phi-homomorphism", phi_hom),
        ("words.reduction-laws", reduction_laws),
    ]


def _suite_bialgebra(seed: int, tol: float) -> list:
    rng = random.Random(seed)

    def coassoc():
        def run():
            for n in range(1, 25):
                for k in range(1, n + 1):
                    x = DirectSumElement.from_word(gen(n, k))
                    yield coassoc_check(x)[2], f"g{k} in F{n}"
            for _ in range(200):
                x = random_direct_sum(rng, max_rank=12, max_len=5)
                yield coassoc_check(x)[2], str(x)

        return _counted(run())

    def counit_law():
        def run():
            for n in range(1, 25):
                for k in range(1, n + 1):
                    yield counit_check(DirectSumElement.from_word(gen(n, k))), f"g{k} in F{n}"
            for _ in range(200):
                x = random_direct_sum(rng, max_rank=12, max_len=5)
                yield counit_check(x), str(x)

        return _counted(run())

    def wcs():
        def run():
            for n in range(1, 5):
                for m in range(1, 5):
                    for l in range(1, 5):
                        for k in range(1, n * m * l + 1):
                            yield wcs_check(n, m, l, gen(n * m * l, k)), f"({n},{m},{l}) g{k}"
            for n in range(1, 13):
                for k in range(1, n + 1):
                    yield counit_axiom_check(n, gen(n, k)), f"counit axiom g{k} F{n}"

        return _counted(run())

    def kernel_identity():
        def run():
            for n in (2, 3):
                for m in (2, 3):
                    for i in range(1, n + 1):
                        for l in range(1, n + 1):
                            for j in range(1, m + 1):
                                for k in range(1, m + 1):
                                    w = kernel_witness(n, m, i, l, j, k)
                                    el = AlgebraElement.from_word(w) - AlgebraElement.unit(n * m)
                                    yield varphi_alg(n, m, el).is_zero, f"x({i},{l};{j},{k})"

        return _counted(run())

    def noncocommutative():
        x = DirectSumElement.from_word(gen(6, 2))
        t = delta_phi(x)
        ok = t.flip() != t and t.term_count() == 4
        return ok, {"summands": t.term_count()}

    def comodule():
        def run():
            for k in range(1, 25):
                for n in range(1, 4):
                    for m in range(1, 4):
                        w = gen(words.INFINITE, k)
                        yield bialgebra.comodule_check(n, m, w), f"g{k} n={n} m={m}"

        return _counted(run())

    def unitization():
        def run():
            for _ in range(100):
                a = bialgebra.UnitizedElement(
                    random_direct_sum(rng, max_rank=6, max_len=3),
                    rng.randint(-2, 2),
                )
                b = bialgebra.UnitizedElement(
                    random_direct_sum(rng, max_rank=6, max_len=3),
                    rng.randint(-2, 2),
                )
                lhs = bialgebra.unitized_delta(a * b)
                rhs = bialgebra.unitized_tensor_mul(
                    bialgebra.unitized_delta(a), bialgebra.unitized_delta(b)
                )
                mult_ok = lhs[0] == rhs[0] and lhs[1] == rhs[1]
                eps_ok = bialgebra.unitized_counit(a * b) == bialgebra.unitized_counit(
                    a
                ) * bialgebra.unitized_counit(b)
                yield mult_ok and eps_ok, str(a)

        return _counted(run())

    def delta_compat():
        from .algebra import standard_delta_compat_check

        def run():
            for n in range(1, 5):
                for m in range(1, 5):
                    for k in range(1, n * m + 1):
                        a = AlgebraElement.from_word(gen(n * m, k))
                        yield standard_delta_compat_check(n, m, a), f"g{k} ({n},{m})"

        return _counted(run())

    return [
        ("bialgebra.coassociativity", coassoc),
        ("bialgebra.comodule", comodule),
        ("bialgebra.counit-law", counit_law),
        ("bialgebra.kernel-identity", kernel_identity),
        ("bialgebra.noncocommutativity", noncocommutative),
        ("bialgebra.standard-delta-compat", delta_compat),
        ("bialgebra.unitization", unitization),
        ("bialgebra.wcs-axioms", wcs),
    ]


def _suite_reps(seed: int, tol: float) -> list:
    rng = random.Random(seed)

    def gns():
        def run():
            for n in (2, 3):
                ball = enumerate_ball(n, 4)
                for i in range(1, n + 1):
                    for w in ball:
                        yield reps.gns_coeff_check(n, i, w), f"F{n} i={i} {w}"

        return _counted(run())

    def fixed_dims():
        def run():
            for n in (2, 3):
                for i in range(1, n + 1):
                    for j in range(1, n + 1):
                        want = 1 if i == j else 0
                        got = reps.fixed_vector_dim(n, i, j, 3)
                        yield got == want, f"F{n} i={i} j={j} got={got}"

        return _counted(run())

    def cyclicity():
        def run():
            ball = enumerate_ball(2, 3)
            for i in (1, 2):
                for j in (1, 2):
                    for x in ball:
                        for y in ball:
                            yield reps.cyclicity_check(2, 2, i, j, x, y), f"i={i} j={j} ({x},{y})"

        return _counted(run())

    def intertwiner():
        def run():
            for _ in range(200):
                x = random_reduced_word(rng, 2, 4)
                h = random_reduced_word(rng, 4, 4)
                g = random_reduced_word(rng, 4, 4)
                yield reps.intertwine_check(2, 2, x, h, g), f"({x},{h},{g})"

        return _counted(run())

    def gram():
        def run():
            for n in (2, 3):
                ball = enumerate_ball(n, 2)
                for i in range(1, n + 1):
                    mn, ok = reps.gram_psd(reps.PDFunction(n, i), ball, tol)
                    yield ok, f"f{i} F{n} min={mn}"
            ball4 = enumerate_ball(4, 2)
            for i in (1, 2):
                for j in (1, 2):
                    ev = lambda z, i=i, j=j: reps.f_pullback_eval(2, i, 2, j, z)
                    mn, ok = reps.gram_psd(ev, ball4, tol)
                    yield ok, f"pullback i={i} j={j} min={mn}"

        return _counted(run())

    def action_laws():
        def run():
            for _ in range(200):
                n = rng.randint(2, 3)
                i = rng.randint(1, n)
                x = random_reduced_word(rng, n, 4)
                y = random_reduced_word(rng, n, 4)
                basis = reps.CosetBasis(n, i)
                v = reps.SuppVector.basis_vector(
                    basis, reps.coset_normal_form(n, i, random_reduced_word(rng, n, 3))
                )
                composed = reps.L_action(n, i, x, reps.L_action(n, i, y, v))
                direct = reps.L_action(n, i, x * y, v)
                yield composed == direct, f"L F{n}/<g{i}> {x},{y}"
                gb = reps.GroupBasis(n)
                u = reps.SuppVector.basis_vector(gb, random_reduced_word(rng, n, 3))
                lam_ok = reps.lambda_action(n, x, reps.lambda_action(n, y, u)) == reps.lambda_action(n, x * y, u)
                yield lam_ok, f"lambda F{n} {x},{y}"

        return _counted(run())

    return [
        ("reps.action-laws", action_laws),
        ("reps.cyclicity", cyclicity),
        ("reps.fixed-vectors", fixed_dims),
        ("reps.gns-coefficients", gns),
        ("reps.gram-psd", gram),
        ("reps.intertwiner", intertwiner),
    ]


def _suite_morphisms(seed: int, tol: float) -> list:
    rng = random.Random(seed)

    def beta_morphism():
        def run():
            endo = morphisms.beta_endo()
            for n in range(1, 25):
                for k in range(1, n + 1):
                    x = DirectSumElement.from_word(gen(n, k))
                    yield morphisms.bialgebra_morphism_check(endo, x, tol), f"g{k} F{n}"

        return _counted(run())

    def beta_involution():
        def run():
            for _ in range(100):
                x = random_direct_sum(rng, max_rank=12, max_len=5)
                yield morphisms.beta(morphisms.beta(x)) == x, str(x)

        return _counted(run())

    def alpha_morphism():
        def run():
            for t in (0.3, 1.0, 2.5):
                endo = morphisms.alpha_endo(t)
                for n in range(1, 13):
                    for k in range(1, n + 1):
                        x = DirectSumElement.from_word(gen(n, k))
                        yield morphisms.bialgebra_morphism_check(endo, x, tol), f"t={t} g{k} F{n}"

        return _counted(run())

    def group_laws():
        report = morphisms.group_law_checks(tol=tol)
        return report["status"] == "verified", report

    return [
        ("morphisms.alpha-morphism", alpha_morphism),
        ("morphisms.beta-involution", beta_involution),
        ("morphisms.beta-morphism", beta_morphism),
        ("morphisms.group-laws", group_laws),
    ]


def _build_suite(name: str, seed: int, tol: float) -> list:
    builders = {
        "words": _suite_words,
        "bialgebra": _suite_bialgebra,
        "reps": _suite_reps,
        "morphisms": _suite_morphisms,
    }
    if name == "all":
        checks = []
        for key in ("words", "bialgebra", "reps", "morphisms"):
            checks.extend(builders[key](seed, tol))
        return checks
    return builders[name](seed, tol)


# -- probes -------------------------------------------------------------------


def _probe_reports(radius: int) -> list[dict]:
    reports = []
    for n, m in ((2, 2), (2, 3)):
        for i in range(1, n + 1):
            for j in range(1, m + 1):
                found = reps.claim_probe_pd(n, m, i, j, radius)
                reports.append(
                    {
                        "claim": "prop-indicator-tensor",
                        "params": {"n": n, "m": m, "i": i, "j": j},
                        "radius": radius,
                        "disagreements": [
                            {"z": z.to_json(), "pullback": pb, "direct": dv}
                            for z, pb, dv in found
                        ],
                    }
                )
    start = (unit(2), unit(2))
    orbit = reps.orbit_bfs(2, 2, start, radius)
    collision = parse_word("g1*g2*g1^-1*g2^-1", 2)
    found_pair = (collision, unit(2)) in orbit
    reports.append(
        {
            "claim": "prop-orbit-separation",
            "params": {"n": 2, "m": 2},
            "radius": radius,
            "disagreements": (
                [{"pair": [collision.to_json(), []], "note": "nontrivial first slot reaches (1,1) orbit"}]
                if found_pair
                else []
            ),
            "orbit_size": len(orbit),
        }
    )
    kw = kernel_witness(2, 2, 1, 2, 1, 2)
    same = reps.U_map(2, 2, unit(2), kw) == reps.U_map(2, 2, unit(2), unit(4))
    reports.append(
        {
            "claim": "prop-intertwiner-injectivity",
            "params": {"n": 2, "m": 2},
            "radius": radius,
            "disagreements": (
                [{"z": kw.to_json(), "note": "distinct basis words share an image"}]
                if same
                else []
            ),
        }
    )
    return sorted(reports, key=lambda r: (r["claim"], json.dumps(r["params"], sort_keys=True)))


# -- command handlers ----------------------------------------------------------


def _scalar_json(c) -> dict:
    if hasattr(c, "to_json"):
        return c.to_json()
    return {"re": c.real, "im": c.imag}


def run(argv: list[str]) -> tuple[dict, int]:
    """Execute one invocation; return the report dict and the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return {"error": "usage", "_format": "json"}, 2

    def done(report, code):
        report["_format"] = args.format
        return report, code

    try:
        if args.command == "delta":
            el = parse_element(args.element)
            t = delta_phi(DirectSumElement.from_algebra(el))
            return done(
                {
                    "command": "delta",
                    "input": str(el),
                    "canonical": str(t),
                    "result": t.to_json(),
                },
                0,
            )

        if args.command == "counit":
            el = parse_element(args.element)
            value = counit(DirectSumElement.from_algebra(el))
            return done(
                {
                    "command": "counit",
                    "input": str(el),
                    "canonical": str(value),
                    "result": _scalar_json(value),
                },
                0,
            )

        if args.command == "phi":
            w = parse_word(args.word, Rank(args.n * args.m))
            p, q = words.phi(args.n, args.m, w)
            return done(
                {
                    "command": "phi",
                    "canonical": f"({p}, {q})",
                    "result": {"first": p.to_json(), "second": q.to_json()},
                },
                0,
            )

        if args.command == "tensor-pd":
            found = reps.claim_probe_pd(args.n, args.m, args.i, args.j, args.radius)
            return done(
                {
                    "claim": "prop-indicator-tensor",
                    "params": {"n": args.n, "m": args.m, "i": args.i, "j": args.j},
                    "radius": args.radius,
                    "disagreements": [
                        {"z": z.to_json(), "pullback": pb, "direct": dv}
                        for z, pb, dv in found
                    ],
                },
                0,
            )

        if args.command == "orbit":
            start = (unit(args.n), unit(args.m))
            orbit = reps.orbit_bfs(args.n, args.m, start, args.radius)
            report = {
                "command": "orbit",
                "params": {"n": args.n, "m": args.m},
                "radius": args.radius,
                "count": len(orbit),
            }
            if args.find is not None:
                left, _, right = args.find.partition(",")
                pair = (
                    parse_word(left.strip(), Rank(args.n)),
                    parse_word(right.strip(), Rank(args.m)),
                )
                report["found"] = pair in orbit
            return done(report, 0)

        if args.command == "verify":
            name = args.suite_pos or args.suite or "all"
            if name not in SUITE_NAMES:
                return {"error": f"unknown suite {name!r}"}, 2
            started = time.monotonic()
            results = _run_checks(_build_suite(name, args.seed, args.tol))
            elapsed = time.monotonic() - started
            ok = all(r["status"] == "verified" for r in results)
            report = {
                "command": "verify",
                "suite": name,
                "seed": args.seed,
                "results": results,
                "status": "verified" if ok else "failed",
            }
            report["_elapsed_text_only"] = elapsed
            return done(report, 0 if ok else 1)

        if args.command == "probe":
            if args.what != "claims":
                return {"error": f"unknown probe target {args.what!r}"}, 2
            return done(
                {
                    "command": "probe",
                    "radius": args.radius,
                    "reports": _probe_reports(args.radius),
                },
                0,
            )
    except (ParseError, ValueError) as exc:
        return done({"error": str(exc)}, 2)

    return done({"error": "usage"}, 2)


def _render_text(report: dict) -> str:
    lines = []
    if "error" in report:
        return f"error: {report['error']}"
    cmd = report.get("command")
    if cmd in ("delta", "counit", "phi"):
        return report["canonical"]
    if cmd == "verify":
        for r in report["results"]:
            mark = "ok" if r["status"] == "verified" else "FAILED"
            lines.append(f"[{mark}] {r['claim']}  {json.dumps(r['witness'], default=str)}")
        lines.append(f"suite {report['suite']}: {report['status']}")
        if "_elapsed_text_only" in report:
            lines.append(f"elapsed: {report['_elapsed_text_only']:.2f}s")
        return "\n".join(lines)
    if cmd == "probe":
        for r in report["reports"]:
            lines.append(
                f"{r['claim']} {json.dumps(r['params'], sort_keys=True)}: "
                f"{len(r['disagreements'])} disagreement(s)"
            )
        return "\n".join(lines)
    if cmd == "orbit":
        base = f"orbit size {report['count']} at radius {report['radius']}"
        if "found" in report:
            base += f", found={report['found']}"
        return base
    if "claim" in report:  # single probe report (tensor-pd)
        lines.append(
            f"{report['claim']} {json.dumps(report['params'], sort_keys=True)}: "
            f"{len(report['disagreements'])} disagreement(s) at radius {report['radius']}"
        )
        for d in report["disagreements"]:
            lines.append(f"  z={d['z']} pullback={d['pullback']} direct={d['direct']}")
        return "\n".join(lines)
    public = {k: v for k, v in report.items() if not k.startswith("_")}
    return json.dumps(public, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    report, code = run(sys.argv[1:] if argv is None else argv)
    fmt = report.get("_format", "json")
    if fmt == "text":
        print(_render_text(report))
    else:
        report = {k: v for k, v in report.items() if not k.startswith("_")}
        print(json.dumps(report, sort_keys=True))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
