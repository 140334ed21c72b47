"""Command-line driver: parameter sweeps, theorem verification, reports.

Subcommands:

* ``cat build|hilbert|minors|compare`` -- catalecticant matrices and their
  minor ideals.
* ``generic compare|multiplicity|flatten`` -- the symmetric-group side.
* ``verify pucci|thm-main|rel2x2|secant|examples|one-flattening`` -- canned
  verification suites with expected verdicts.

Reports are deterministic functions of the job parameters, the seed, and the
scalar mode; modular runs record the primes they used.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field

from . import cat, linalg, symgrp
from .combinat import enumerate_multisets
from .errors import CatminorsError, ResourceLimitError

FEASIBLE_AMBIENT = 500_000
FEASIBLE_N = 12


@dataclass
class JobSpec:
    task: str
    params: dict
    mode: str = "modular"
    num_primes: int = 3
    seed: int = 0
    threads: int = 1
    out: str | None = None
    fmt: str = "json"
    expect: list[str] | None = None
    force: bool = False

    def to_dict(self) -> dict:
        return {
            "task": self.task,
            "params": self.params,
            "mode": self.mode,
            "num_primes": self.num_primes,
            "seed": self.seed,
            "threads": self.threads,
        }


@dataclass
class Report:
    job: JobSpec
    ranks: dict = field(default_factory=dict)
    comparisons: list = field(default_factory=list)  # dicts with t1,t2,rank1,rank2,rank_join,verdict
    primes: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    ok: bool = True

    @property
    def certification(self) -> str:
        return "exact" if self.job.mode == "exact" else "modular"

    def to_dict(self) -> dict:
        return {
            "job": self.job.to_dict(),
            "certification": self.certification,
            "primes": self.primes,
            "ranks": {str(k): v for k, v in self.ranks.items()},
            "comparisons": self.comparisons,
            "details": self.details,
            "timings": {k: round(v, 3) for k, v in self.timings.items()},
            "ok": self.ok,
        }


def emit(report: Report, fmt: str = "json") -> str:
    """Serialize a report; CSV has one row per comparison."""
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, default=str)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["k", "n", "d", "r", "t1", "t2", "rank1", "rank2", "rank_join", "verdict"])
        p = report.job.params
        for comp in report.comparisons:
            writer.writerow(
                [
                    p.get("k", ""),
                    p.get("n", ""),
                    p.get("d", ""),
                    p.get("r", ""),
                    comp.get("t1", ""),
                    comp.get("t2", ""),
                    comp.get("rank1", ""),
                    comp.get("rank2", ""),
                    comp.get("rank_join", ""),
                    comp.get("verdict", ""),
                ]
            )
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def _comparisons_from_ideal_report(rep: dict) -> list[dict]:
    out = []
    for (t1, t2), verdict in rep["verdicts"].items():
        out.append(
            {
                "t1": t1,
                "t2": t2,
                "rank1": rep["ranks"][t1],
                "rank2": rep["ranks"][t2],
                "rank_join": rep.get("join_ranks", {}).get((t1, t2)),
                "verdict": verdict,
            }
        )
    return out


def _guard_cat_size(k: int, n: int, d: int, r: int, t_list, force: bool) -> None:
    if force:
        return
    biggest = max(cat.count_ideal_generators(k, t, d - t, n, r) for t in t_list)
    ambient = len(cat.degree_basis(n, d, r))
    if biggest > FEASIBLE_AMBIENT or ambient > 10_000:
        raise ResourceLimitError(
            f"{biggest} generators in ambient dimension {ambient} exceed the default envelope; "
            "rerun with --force if you really mean it"
        )


def run(job: JobSpec) -> Report:
    """Dispatch a job to the compute modules; deterministic given seed and mode."""
    report = Report(job=job)
    t0 = time.perf_counter()
    handler = _HANDLERS.get(job.task)
    if handler is None:
        raise ValueError(f"unknown task {job.task!r}")
    handler(job, report)
    report.timings["total"] = time.perf_counter() - t0
    if job.expect is not None:
        verdicts = [c["verdict"] for c in report.comparisons]
        expected = job.expect
        if len(expected) == 1:
            expected = expected * len(verdicts)
        report.details["expected"] = expected
        report.ok = report.ok and verdicts == expected
    return report


# -- cat tasks -----------------------------------------------------------------


def _task_cat_build(job: JobSpec, report: Report) -> None:
    p = job.params
    c = cat.build_generic(p["a"], p["b"], p["n"])
    rows = []
    for i in range(len(c.rows)):
        rows.append(["z_" + "".join(map(str, c.entry(i, j))) for j in range(len(c.cols))])
    report.details["shape"] = list(c.shape)
    report.details["matrix"] = rows


def _task_cat_hilbert(job: JobSpec, report: Report) -> None:
    p = job.params
    n, d = p["n"], p["d"]
    if p.get("powersum"):
        forms = [[int(x) for x in vec.split(",")] for vec in p["powersum"].split(";")]
        f = cat.power_sum_form(forms, d)
    elif p.get("random"):
        rng = random.Random(job.seed)
        coeffs = {g: rng.randrange(-9, 10) for g in enumerate_multisets(n, d)}
        f = cat.FormCoefficients(n, d, coeffs)
    else:
        raise ValueError("hilbert needs --powersum or --random")
    h = cat.hilbert_function(f)
    report.details["hilbert"] = list(h)


def _task_cat_minors(job: JobSpec, report: Report) -> None:
    p = job.params
    piece = cat.ideal_graded_piece(p["k"], p["a"], p["b"], p["n"], p["r"])
    report.ranks[f"({p['a']},{p['b']})"] = piece.space.rank
    report.details["ambient"] = len(piece.basis)


def _task_cat_compare(job: JobSpec, report: Report) -> None:
    p = job.params
    k, n, d, r = p["k"], p["n"], p["d"], p["r"]
    t_list = p["t_list"]
    _guard_cat_size(k, n, d, r, t_list, job.force)
    rep = cat.compare_ideals(k, n, d, t_list, r, mode=job.mode, seed=job.seed, num_primes=job.num_primes)
    report.ranks = dict(rep["ranks"])
    report.primes = rep["primes"]
    report.comparisons = _comparisons_from_ideal_report(rep)
    report.details["ambient"] = rep["ambient"]


# -- generic tasks ---------------------------------------------------------------


def _guard_generic(d: int, r: int, force: bool) -> None:
    if d * r > FEASIBLE_N and not force:
        raise ResourceLimitError(
            f"N = d*r = {d * r} > {FEASIBLE_N} exceeds the generic envelope; use --force"
        )


def _task_generic_compare(job: JobSpec, report: Report) -> None:
    p = job.params
    k, d, r = p["k"], p["d"], p["r"]
    _guard_generic(d, r, job.force)
    pairs = p["pairs"]
    rep = symgrp.compare_generic(k, d, r, pairs, seed=job.seed)
    report.details["hwt"] = {
        str(lam): {"dims": {str(pp): v for pp, v in info["dims"].items()}, "bound": info["bound"]}
        for lam, info in rep["hwt"].items()
    }
    if rep["full"]:
        report.ranks = {str(pp): v for pp, v in rep["full"]["ranks"].items()}
        for (p1, p2), verdict in rep["full"]["verdicts"].items():
            report.comparisons.append(
                {
                    "t1": str(p1),
                    "t2": str(p2),
                    "rank1": rep["full"]["ranks"][p1],
                    "rank2": rep["full"]["ranks"][p2],
                    "rank_join": None,
                    "verdict": verdict,
                }
            )


def _task_generic_multiplicity(job: JobSpec, report: Report) -> None:
    p = job.params
    lam = tuple(p["lam"])
    _guard_generic(p["d"], p["r"], job.force)
    method = p.get("method", "character")
    report.details["multiplicity"] = symgrp.multiplicity(lam, p["d"], p["r"], method=method)
    report.details["lambda"] = list(lam)
    report.details["method"] = method


def _task_generic_flatten(job: JobSpec, report: Report) -> None:
    p = job.params
    F = symgrp.GenericFlattening(p["alphas"], p["betas"], p.get("gammas", ()))
    w = symgrp.generic_flattening(F)
    report.details["terms"] = {
        " | ".join(",".join(map(str, b)) for b in m): str(c) for m, c in sorted(w.terms.items())
    }
    if p.get("lam"):
        lam = tuple(p["lam"])
        image, entries = symgrp.circled_expand(lam, F)
        report.details["expansion"] = [
            {
                "sign": sign,
                "monomial": [list(b) for b in m],
                "tag": "zero" if tag is None else f"{tag[0]:+d} {tag[1]!s}".replace("\n", " / "),
            }
            for sign, m, tag in entries
        ]
        report.details["image_terms"] = len(image.terms)


# -- verify tasks -----------------------------------------------------------------


def _task_verify_pucci(job: JobSpec, report: Report) -> None:
    p = job.params
    n, d = p["n"], p["d"]
    t_list = list(range(1, d))
    rep = cat.compare_ideals(2, n, d, t_list, 2, mode=job.mode, seed=job.seed, num_primes=job.num_primes)
    report.ranks = dict(rep["ranks"])
    report.primes = rep["primes"]
    report.comparisons = _comparisons_from_ideal_report(rep)
    report.ok = all(c["verdict"] == linalg.EQUAL for c in report.comparisons)


def _task_verify_thm_main(job: JobSpec, report: Report) -> None:
    p = job.params
    n, d = p["n"], p["d"]
    if d < 4:
        raise ValueError("the main theorem needs d >= 4")
    middle = list(range(2, d - 1))
    rep = cat.compare_ideals(3, n, d, middle, 3, mode=job.mode, seed=job.seed, num_primes=job.num_primes)
    report.ranks = dict(rep["ranks"])
    report.primes = rep["primes"]
    report.comparisons = _comparisons_from_ideal_report(rep)
    equal_ok = all(c["verdict"] == linalg.EQUAL for c in report.comparisons)
    strict = cat.compare_ideals(3, n, d, [1, 2], 3, mode=job.mode, seed=job.seed + 1, num_primes=job.num_primes)
    report.comparisons.extend(_comparisons_from_ideal_report(strict))
    strict_ok = strict["verdicts"][(1, 2)] == linalg.SUBSET
    cert = cat.strict_inclusion_certificate(3, n, d, 1, 2, 3)
    report.details["strict_certificate"] = (
        None
        if cert is None
        else {
            "rows": list(cert[0]),
            "cols": list(cert[1]),
            "residual_support": len(cert[2].entries),
        }
    )
    report.ok = equal_ok and strict_ok and cert is not None


def _task_verify_rel2x2(job: JobSpec, report: Report) -> None:
    p = job.params
    n, d, trials = p["n"], p["d"], p.get("trials", 100)
    rng = random.Random(job.seed)
    held = 0
    for _ in range(trials):
        a = rng.randrange(1, d - 1)
        b = d - a
        m1 = _random_multiset(rng, n, a)
        m2 = _random_multiset(rng, n, a)
        n1 = _random_multiset(rng, n, b)
        n2 = _random_multiset(rng, n, b)
        if cat.rewrite_identity_holds(m1, m2, n1, n2):
            held += 1
    report.details["trials"] = trials
    report.details["held"] = held
    report.ok = held == trials


def _random_multiset(rng: random.Random, n: int, deg: int):
    exps = [0] * n
    for _ in range(deg):
        exps[rng.randrange(n)] += 1
    return tuple(exps)


def _task_verify_secant(job: JobSpec, report: Report) -> None:
    p = job.params
    n, d, k, trials = p["n"], p["d"], p["k"], p.get("trials", 20)
    rng = random.Random(job.seed)
    all_ok = True
    for _ in range(trials):
        forms = [[rng.randrange(-5, 6) or 1 for _ in range(n)] for _ in range(k)]
        rep = cat.secant_vanishing_check(k, cat.power_sum_form(forms, d))
        all_ok = all_ok and rep["all_vanish"]
    # negative control: k+1 generic summands should break some (k+1)-minor
    forms = [[rng.randrange(1, 7) + i for i in range(n)] for _ in range(k + 1)]
    neg = cat.secant_vanishing_check(k, cat.power_sum_form(forms, d))
    report.details["trials"] = trials
    report.details["negative_control_vanish"] = neg["all_vanish"]
    report.ok = all_ok and not neg["all_vanish"]


def _task_verify_examples(job: JobSpec, report: Report) -> None:
    from .worked import worked_examples_report

    details = worked_examples_report()
    report.details.update(details)
    report.ok = details["all_ok"]


def _task_verify_one_flattening(job: JobSpec, report: Report) -> None:
    p = job.params
    ok = symgrp.check_1flattening(p["k"], p["d"], p["r"])
    report.details["identity_holds"] = ok
    report.ok = ok


_HANDLERS = {
    "cat.build": _task_cat_build,
    "cat.hilbert": _task_cat_hilbert,
    "cat.minors": _task_cat_minors,
    "cat.compare": _task_cat_compare,
    "generic.compare": _task_generic_compare,
    "generic.multiplicity": _task_generic_multiplicity,
    "generic.flatten": _task_generic_flatten,
    "verify.pucci": _task_verify_pucci,
    "verify.thm-main": _task_verify_thm_main,
    "verify.rel2x2": _task_verify_rel2x2,
    "verify.secant": _task_verify_secant,
    "verify.examples": _task_verify_examples,
    "verify.one-flattening": _task_verify_one_flattening,
}


# -- argument parsing --------------------------------------------------------------


def _int_list(s: str) -> list[int]:
    return [int(x) for x in s.replace(";", ",").split(",") if x != ""]


def _pair_list(s: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in s.split(";"):
        a, b = chunk.split(",")
        pairs.append((int(a), int(b)))
    return pairs


def _blocks(s: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in chunk.split(",")) for chunk in s.split(";") if chunk)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catminors", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["exact", "modular"], default="modular")
    common.add_argument("--exact", action="store_true", help="shorthand for --mode exact")
    common.add_argument("--primes", type=int, default=3, help="number of independent primes in modular mode")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=int(os.environ.get("CATMINORS_THREADS", "1")))
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--expect", default=None, help="comma-separated expected verdicts; sets the exit code")
    common.add_argument("--force", action="store_true", help="ignore the feasibility envelope")

    sub = parser.add_subparsers(dest="group", required=True)

    p_cat = sub.add_parser("cat", help="catalecticant matrices and minor ideals")
    cat_sub = p_cat.add_subparsers(dest="action", required=True)
    p = cat_sub.add_parser("build", parents=[common])
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p = cat_sub.add_parser("hilbert", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--powersum", default=None, help="semicolon-separated coefficient vectors")
    p.add_argument("--random", action="store_true", help="random integer form from --seed")
    p = cat_sub.add_parser("minors", parents=[common])
    for flag in ("--k", "--a", "--b", "--n", "--r"):
        p.add_argument(flag, type=int, required=True)
    p = cat_sub.add_parser("compare", parents=[common])
    for flag in ("--k", "--n", "--d", "--r"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--t", type=_int_list, required=True, help="comma-separated t values")

    p_gen = sub.add_parser("generic", help="the symmetric-group (generic) side")
    gen_sub = p_gen.add_subparsers(dest="action", required=True)
    p = gen_sub.add_parser("compare", parents=[common])
    for flag in ("--k", "--d", "--r"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--pairs", type=_pair_list, required=True, help='e.g. "1,3;2,2"')
    p = gen_sub.add_parser("multiplicity", parents=[common])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lam", type=_int_list, required=True)
    p.add_argument("--method", choices=["character", "rank", "both"], default="character")
    p = gen_sub.add_parser("flatten", parents=[common])
    p.add_argument("--alphas", type=_blocks, required=True, help='e.g. "1,2;4,6;5,8"')
    p.add_argument("--betas", type=_blocks, required=True)
    p.add_argument("--gammas", type=_blocks, default=())
    p.add_argument("--lam", type=_int_list, default=None)

    p_ver = sub.add_parser("verify", help="canned verification suites")
    ver_sub = p_ver.add_subparsers(dest="action", required=True)
    p = ver_sub.add_parser("pucci", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = ver_sub.add_parser("thm-main", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = ver_sub.add_parser("rel2x2", parents=[common])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--d", type=int, default=5)
    p.add_argument("--trials", type=int, default=100)
    p = ver_sub.add_parser("secant", parents=[common])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--trials", type=int, default=20)
    ver_sub.add_parser("examples", parents=[common])
    p = ver_sub.add_parser("one-flattening", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    task = f"{args.group}.{args.action}"
    mode = "exact" if args.exact else args.mode
    params: dict = {}
    for key in ("k", "n", "d", "r", "a", "b", "trials", "powersum", "lam", "method",
                "alphas", "betas", "gammas", "pairs", "random"):
        if hasattr(args, key) and getattr(args, key) not in (None, False):
            params[key] = getattr(args, key)
    if hasattr(args, "t"):
        params["t_list"] = args.t
    expect = args.expect.split(",") if args.expect else None
    return JobSpec(
        task=task,
        params=params,
        mode=mode,
        num_primes=args.primes,
        seed=args.seed,
        threads=args.threads,
        out=args.out,
        fmt=args.format,
        expect=expect,
        force=args.force,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    job = job_from_args(args)
    try:
        report = run(job)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except CatminorsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = emit(report, job.fmt)
    if job.out:
        with open(job.out, "w") as fh:
            fh.write(text)
    else:
        print(text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
