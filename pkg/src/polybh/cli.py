"""Command-line front end: verification campaigns, tables, and reports.

Subcommands cover the whole library surface (verify-bh, check-blei,
sidon-mn, bohr-radius, lift, ...); run ``polybh --help`` for the list.

Conventions:

* Exit code 0 means every check passed; 2 means some run produced a
  numerical-violation verdict, which by the library's verdict discipline
  indicates a bug in the implementation, not new mathematics; 1 is a usage
  or runtime error.
* Every report embeds the full configuration (JSON under a "config" key,
  CSV as leading "#" comment lines), and files are written atomically.
* The master seed (default 123456789) expands to one child seed per case via
  ``numpy.random.SeedSequence(seed, spawn_key=(index,))``; cases are
  computed independently and collected in case order, so reports are
  byte-identical for a fixed seed regardless of the thread count
  (``--threads`` or the POLYBH_THREADS environment variable).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

import numpy as np

from . import __version__
from .bhverify import (
    VIOLATED,
    bh_constant_hyper,
    bh_constant_polarization,
    bh_constant_queffelec,
    bh_exponent,
    check_bayart,
    check_blei,
    check_proof_step,
    davie_kaijser_constant,
    verify_bh,
    verify_bh_multilinear,
)
from .dirichlet import (
    asymptotic_formula,
    bcq_partial_sum,
    bohr_lift,
    from_json_dict as dirichlet_from_json,
    sidon_N_bounds,
    to_json_dict as dirichlet_to_json,
)
from .polarization import check_harris
from .polyalgebra import (
    GeneralPolynomial,
    HomogeneousPolynomial,
    from_json_dict as poly_from_json,
    random_homogeneous,
    scale,
    to_json_dict as poly_to_json,
)
from .sidonbohr import (
    bohr_estimate_small,
    bohr_lower,
    check_wiener,
    sidon_lower_search,
)
from .torusnorm import certified_upper

DEFAULT_SEED = 123456789
ENV_THREADS = "POLYBH_THREADS"
DISTRIBUTIONS = ("complex-gaussian", "uniform-disc", "random-signs")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit 1
        raise UsageError(message)


# ----------------------------------------------------------------------
# Report plumbing
# ----------------------------------------------------------------------

def case_seed(master: int, index: int) -> int:
    """Deterministic 64-bit child seed for case ``index``."""
    state = np.random.SeedSequence(master, spawn_key=(index,)).generate_state(2)
    return int(state[0]) << 32 | int(state[1]) >> 32 & 0xFFFFFFFF


def _run_cases(worker: Callable, indices: Sequence[int], threads: int) -> list:
    if threads <= 1:
        return [worker(i) for i in indices]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, indices))


def _fmt(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".polybh-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(config: dict, header: Sequence[str], rows: Iterable[Sequence], args) -> None:
    fmt = getattr(args, "format", "json")
    out = getattr(args, "out", None)
    rows = list(rows)
    if fmt == "csv":
        buf = io.StringIO()
        for key in sorted(config):
            buf.write(f"# {key}={config[key]}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
    else:
        payload = {
            "config": config,
            "rows": [dict(zip(header, row)) for row in rows],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        _atomic_write(out, text)
    else:
        sys.stdout.write(text)


def _config(args, command: str) -> dict:
    # threads is an execution knob: results are aggregated in case order, so
    # the report must be byte-identical whatever the parallelism, and the
    # thread count is deliberately left out of the embedded config.
    skip = {"func", "out", "threads"}
    cfg = {"command": command, "version": __version__}
    for key, value in sorted(vars(args).items()):
        if key in skip or callable(value):
            continue
        cfg[key] = value if not isinstance(value, list) else list(value)
    return cfg


def _threads_default() -> int:
    try:
        return max(1, int(os.environ.get(ENV_THREADS, "1")))
    except ValueError:
        return 1


# ----------------------------------------------------------------------
# Subcommand handlers (each returns (exit_code))
# ----------------------------------------------------------------------

def _cmd_verify_bh(args) -> int:
    dists = DISTRIBUTIONS if args.dist == "mix" else (args.dist,)
    mode = "certified" if args.certified else "ascent"

    def worker(i: int):
        seed = case_seed(args.seed, i)
        dist = dists[i % len(dists)]
        P = random_homogeneous(args.m, args.n, dist, seed=seed)
        rep = verify_bh(P, supnorm_mode=mode, starts=args.starts, iterations=args.iters,
                        seed=seed, grid_step=args.grid_step)
        upper = rep.supnorm.upper if rep.supnorm.upper is not None else ""
        return (i, args.m, args.n, dist, seed, rep.lhs, rep.supnorm.lower, upper,
                rep.ratio, rep.rhs_constant, rep.slack, rep.verdict)

    rows = _run_cases(worker, range(args.count), args.threads)
    header = ("case", "m", "n", "distribution", "case_seed", "lhs", "sup_lower",
              "sup_upper", "ratio", "constant", "slack", "verdict")
    _emit(_config(args, "verify-bh"), header, rows, args)
    bad = sum(1 for r in rows if r[-1] == VIOLATED)
    print(f"verify-bh: {len(rows)} cases, {bad} violations", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def _cmd_verify_bh_multilinear(args) -> int:
    def worker(i: int):
        seed = case_seed(args.seed, i)
        rng = np.random.default_rng(np.random.SeedSequence(seed))
        shape = (args.n,) * args.m
        T = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2)
        rep = verify_bh_multilinear(T, starts=args.starts, iterations=args.iters, seed=seed)
        return (i, args.m, args.n, seed, rep.lhs, rep.supnorm.lower, rep.ratio,
                rep.rhs_constant, rep.verdict)

    rows = _run_cases(worker, range(args.count), args.threads)
    header = ("case", "m", "n", "case_seed", "lhs", "sup_lower", "ratio", "constant", "verdict")
    _emit(_config(args, "verify-bh-multilinear"), header, rows, args)
    bad = sum(1 for r in rows if r[-1] == VIOLATED)
    print(f"verify-bh-multilinear: {len(rows)} cases, {bad} violations", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def _cmd_check_blei(args) -> int:
    def worker(i: int):
        seed = case_seed(args.seed, i)
        rng = np.random.default_rng(np.random.SeedSequence(seed))
        shape = (args.n,) * args.m
        T = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2)
        rep = check_blei(T)
        return (i, args.m, args.n, seed, rep.lhs, rep.rhs, rep.passed)

    rows = _run_cases(worker, range(args.count), args.threads)
    header = ("case", "m", "n", "case_seed", "lhs", "rhs", "passed")
    _emit(_config(args, "check-blei"), header, rows, args)
    bad = sum(1 for r in rows if not r[-1])
    print(f"check-blei: {len(rows)} cases, {bad} failures", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def _cmd_check_bayart(args) -> int:
    def worker(i: int):
        seed = case_seed(args.seed, i)
        P = random_homogeneous(args.m, args.n, DISTRIBUTIONS[i % 3], seed=seed)
        rep = check_bayart(P, mc_samples=args.samples, seed=seed)
        return (i, args.m, args.n, seed, rep.l2, rep.l1_estimate, rep.stderr,
                rep.bound, rep.passed)

    rows = _run_cases(worker, range(args.count), args.threads)
    header = ("case", "m", "n", "case_seed", "l2", "l1_estimate", "stderr", "bound", "passed")
    _emit(_config(args, "check-bayart"), header, rows, args)
    flags = sum(1 for r in rows if not r[-1])
    rate = flags / max(len(rows), 1)
    print(f"check-bayart: {len(rows)} cases, {flags} statistical flags at 3 sigma "
          f"({100 * rate:.2f}%)", file=sys.stderr)
    # 3-sigma misses are expected at a sub-percent rate; a large rate means a bug.
    return EXIT_VIOLATION if rate > 0.02 else EXIT_OK


def _cmd_check_proof_step(args) -> int:
    def worker(i: int):
        seed = case_seed(args.seed, i)
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(1,)))
        P = random_homogeneous(args.m, args.n, DISTRIBUTIONS[i % 3], seed=seed)
        k = int(rng.integers(1, args.m + 1))
        upper = certified_upper(P)
        rep = check_proof_step(P, k, upper)
        return (i, args.m, args.n, seed, k, rep.lhs, rep.bound, rep.parseval_max_rel_err,
                rep.passed)

    rows = _run_cases(worker, range(args.count), args.threads)
    header = ("case", "m", "n", "case_seed", "slot", "lhs", "bound", "parseval_rel_err", "passed")
    _emit(_config(args, "check-proof-step"), header, rows, args)
    bad = sum(1 for r in rows if not r[-1])
    print(f"check-proof-step: {len(rows)} cases, {bad} failures", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def _cmd_check_harris(args) -> int:
    def worker(i: int):
        seed = case_seed(args.seed, i)
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(1,)))
        P = random_homogeneous(args.m, args.n, DISTRIBUTIONS[i % 3], seed=seed)
        blocks = int(rng.integers(1, args.m + 1))
        partition = rng.multinomial(args.m, [1.0 / blocks] * blocks).tolist()
        points = [np.exp(2j * math.pi * rng.random(args.n)).tolist() for _ in partition]
        upper = certified_upper(P)
        rep = check_harris(P, partition, points, upper)
        return (i, args.m, args.n, seed, "+".join(map(str, partition)), rep.value,
                rep.bound, rep.passed)

    rows = _run_cases(worker, range(args.count), args.threads)
    header = ("case", "m", "n", "case_seed", "partition", "form_value", "bound", "passed")
    _emit(_config(args, "check-harris"), header, rows, args)
    bad = sum(1 for r in rows if not r[-1])
    print(f"check-harris: {len(rows)} cases, {bad} failures", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def _random_general(n: int, degree_max: int, seed: int) -> GeneralPolynomial:
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    parts = {}
    for m in range(1, degree_max + 1):
        parts[m] = random_homogeneous(m, n, "complex-gaussian",
                                      seed=case_seed(seed, m))
    a0 = complex(rng.standard_normal() + 1j * rng.standard_normal()) / math.sqrt(2)
    return GeneralPolynomial(n, parts, a0)


def _cmd_check_wiener(args) -> int:
    def worker(i: int):
        seed = case_seed(args.seed, i)
        P = _random_general(args.n, args.degree_max, seed)
        s = certified_upper(P) * (1.0 + 1e-9)
        P1 = scale(P, 1.0 / s)
        upper1 = min(1.0, certified_upper(P1))
        rep = check_wiener(P1, upper1)
        worst = min((p.bound - p.sup_estimate for p in rep.parts), default=math.inf)
        return (i, args.n, seed, rep.a0_modulus, rep.bound, worst, rep.passed)

    rows = _run_cases(worker, range(args.count), args.threads)
    header = ("case", "n", "case_seed", "a0_modulus", "bound", "worst_slack", "passed")
    _emit(_config(args, "check-wiener"), header, rows, args)
    bad = sum(1 for r in rows if not r[-1])
    print(f"check-wiener: {len(rows)} cases, {bad} failures", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


def _cmd_sidon_mn(args) -> int:
    bounds = sidon_lower_search(args.m, args.n, budget=args.budget, seed=args.seed,
                                strategy=args.strategy, certified=args.certified)
    witness_file = ""
    if args.witness_out:
        _atomic_write(args.witness_out,
                      json.dumps(poly_to_json(bounds.witness), indent=2, sort_keys=True) + "\n")
        witness_file = args.witness_out
    rows = [(args.m, args.n, bounds.upper_hyper, bounds.upper_trivial,
             bounds.lower_search, witness_file)]
    header = ("m", "n", "upper_hyper", "upper_trivial", "lower_search", "witness_file")
    _emit(_config(args, "sidon-mn"), header, rows, args)
    label = "certified" if bounds.certified else "heuristic"
    print(f"sidon-mn: S({args.m},{args.n}) in [{bounds.lower_search:.6g} ({label}), "
          f"{bounds.upper_best:.6g}]", file=sys.stderr)
    ok = bounds.lower_search <= bounds.upper_best * (1 + 1e-9)
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_bohr_radius(args) -> int:
    rows = []
    ok = True
    for n in args.n:
        rep = bohr_lower(n)
        ok = ok and rep.certificate_value <= 0.5 + 1e-12 and rep.lower <= rep.upper
        rows.append((n, rep.lower, rep.upper, rep.b_lower, rep.M_used, rep.certificate_value))
    header = ("n", "K_lower", "K_upper", "b_lower", "M_used", "certificate_value")
    _emit(_config(args, "bohr-radius"), header, rows, args)
    print(f"bohr-radius: {len(rows)} dimensions, certificates "
          f"{'ok' if ok else 'VIOLATED'}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_bohr_small(args) -> int:
    bracket = bohr_estimate_small(a_step=args.a_step, r_step=args.r_step, degree=args.degree)
    rows = [(bracket.r_pass, bracket.r_fail, bracket.a_step, bracket.r_step, bracket.degree)]
    header = ("r_pass", "r_fail", "a_step", "r_step", "degree")
    _emit(_config(args, "bohr-small"), header, rows, args)
    contains = bracket.r_pass <= 1.0 / 3.0 <= bracket.r_fail
    print(f"bohr-small: K_1 in [{bracket.r_pass}, {bracket.r_fail}] "
          f"({'contains' if contains else 'MISSES'} 1/3)", file=sys.stderr)
    return EXIT_OK if contains else EXIT_VIOLATION


def _cmd_lift(args) -> int:
    with open(args.input) as handle:
        Q = dirichlet_from_json(json.load(handle))
    lift = bohr_lift(Q)
    payload = poly_to_json(lift.poly)
    payload["primes"] = list(lift.primes)
    payload["config"] = _config(args, "lift")
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    print(f"lift: {len(Q.coeffs)} terms -> {lift.poly.n} variables", file=sys.stderr)
    return EXIT_OK


def _cmd_sidon_N(args) -> int:
    bounds = sidon_N_bounds(args.N, budget=args.budget, seed=args.seed,
                            mag_points=args.mag_points, phase_points=args.phase_points)
    formula = bounds.asymptotic_sharp if bounds.asymptotic_sharp is not None else ""
    rows = [(args.N, bounds.lower, bounds.method["kind"], -1.0 / math.sqrt(2.0), formula)]
    header = ("N", "lower", "method", "asymptotic_c", "formula_value")
    _emit(_config(args, "sidon-N"), header, rows, args)
    print(f"sidon-N: S({args.N}) >= {bounds.lower:.6g} ({bounds.method['kind']})",
          file=sys.stderr)
    return EXIT_OK


def _cmd_bcq_sum(args) -> int:
    with open(args.input) as handle:
        Q = dirichlet_from_json(json.load(handle))
    value = bcq_partial_sum(Q, args.c, n_start=args.n_start)
    rows = [(Q.N, args.c, args.n_start, value)]
    _emit(_config(args, "bcq-sum"), ("N", "c", "n_start", "value"), rows, args)
    print(f"bcq-sum: {value!r}", file=sys.stderr)
    return EXIT_OK


def _cmd_constants_table(args) -> int:
    rows = []
    for m in range(2, args.m_max + 1):
        rows.append((m, float(bh_exponent(m)), bh_constant_hyper(m),
                     bh_constant_queffelec(m), bh_constant_polarization(m),
                     davie_kaijser_constant(m)))
    header = ("m", "exponent", "hyper", "queffelec", "polarization", "davie_kaijser")
    _emit(_config(args, "constants-table"), header, rows, args)
    print(f"constants-table: m up to {args.m_max}", file=sys.stderr)
    return EXIT_OK


def _cmd_random_campaign(args) -> int:
    cases = []
    for m in args.m_set:
        for n in args.n_set:
            for _ in range(args.count):
                cases.append((m, n))

    def worker(i: int):
        m, n = cases[i]
        seed = case_seed(args.seed, i)
        dist = DISTRIBUTIONS[i % 3]
        P = random_homogeneous(m, n, dist, seed=seed)
        rep = verify_bh(P, starts=args.starts, iterations=args.iters, seed=seed)
        return (i, m, n, dist, seed, rep.lhs, rep.supnorm.lower, rep.ratio,
                rep.rhs_constant, rep.verdict)

    rows = _run_cases(worker, range(len(cases)), args.threads)
    header = ("case", "m", "n", "distribution", "case_seed", "lhs", "sup_lower",
              "ratio", "constant", "verdict")
    _emit(_config(args, "random-campaign"), header, rows, args)
    bad = sum(1 for r in rows if r[-1] == VIOLATED)
    print(f"random-campaign: {len(rows)} cases, {bad} violations", file=sys.stderr)
    return EXIT_VIOLATION if bad else EXIT_OK


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def _add_common(p: _Parser, *, campaign: bool = False) -> None:
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", type=str, default=None, help="report file (stdout if omitted)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    if campaign:
        p.add_argument("--threads", type=int, default=_threads_default())


def build_parser() -> _Parser:
    parser = _Parser(prog="polybh", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-bh", help="campaign of hypercontractive coefficient checks")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--dist", choices=DISTRIBUTIONS + ("mix",), default="mix")
    p.add_argument("--starts", type=int, default=None)
    p.add_argument("--iters", type=int, default=200)
    p.add_argument("--certified", action="store_true",
                   help="bracket the sup norm on a Bernstein grid (small n only)")
    p.add_argument("--grid-step", type=float, default=None)
    _add_common(p, campaign=True)
    p.set_defaults(func=_cmd_verify_bh)

    p = sub.add_parser("verify-bh-multilinear", help="multilinear inequality campaign")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--starts", type=int, default=8)
    p.add_argument("--iters", type=int, default=100)
    _add_common(p, campaign=True)
    p.set_defaults(func=_cmd_verify_bh_multilinear)

    p = sub.add_parser("check-blei", help="Blei interpolation bound on random tables")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1000)
    _add_common(p, campaign=True)
    p.set_defaults(func=_cmd_check_blei)

    p = sub.add_parser("check-bayart", help="L1-L2 hypercontractive comparison (Monte Carlo)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--samples", type=int, default=10**5)
    _add_common(p, campaign=True)
    p.set_defaults(func=_cmd_check_bayart)

    p = sub.add_parser("check-proof-step", help="slotwise polarization estimate")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    _add_common(p, campaign=True)
    p.set_defaults(func=_cmd_check_proof_step)

    p = sub.add_parser("check-harris", help="polarization bound at repeated arguments")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=100)
    _add_common(p, campaign=True)
    p.set_defaults(func=_cmd_check_harris)

    p = sub.add_parser("check-wiener", help="homogeneous-part bound for sup-norm-1 polynomials")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--degree-max", type=int, default=5)
    _add_common(p, campaign=True)
    p.set_defaults(func=_cmd_check_wiener)

    p = sub.add_parser("sidon-mn", help="Sidon constant bracket for degree-m monomials")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--strategy", choices=("random-sign", "gaussian", "coordinate-ascent"),
                   default="random-sign")
    p.add_argument("--certified", action="store_true")
    p.add_argument("--witness-out", type=str, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_sidon_mn)

    p = sub.add_parser("bohr-radius", help="certified Bohr-radius lower bounds")
    p.add_argument("--n", type=int, nargs="+", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_bohr_radius)

    p = sub.add_parser("bohr-small", help="one-variable Bohr radius bracket")
    p.add_argument("--a-step", type=float, default=1e-3)
    p.add_argument("--r-step", type=float, default=1e-3)
    p.add_argument("--degree", type=int, default=50)
    _add_common(p)
    p.set_defaults(func=_cmd_bohr_small)

    p = sub.add_parser("lift", help="Bohr lift of a Dirichlet polynomial JSON file")
    p.add_argument("--input", type=str, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("sidon-N", help="Sidon constant of {log n : n <= N}")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--mag-points", type=int, default=5)
    p.add_argument("--phase-points", type=int, default=8)
    _add_common(p)
    p.set_defaults(func=_cmd_sidon_N)

    p = sub.add_parser("bcq-sum", help="weighted coefficient sum of a Dirichlet polynomial")
    p.add_argument("--input", type=str, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--n-start", type=int, default=3)
    _add_common(p)
    p.set_defaults(func=_cmd_bcq_sum)

    p = sub.add_parser("constants-table", help="tabulate the inequality constants")
    p.add_argument("--m-max", type=int, default=20)
    _add_common(p)
    p.set_defaults(func=_cmd_constants_table)

    p = sub.add_parser("random-campaign", help="verify-bh sweep over (m, n) grids")
    p.add_argument("--m-set", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--n-set", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    p.add_argument("--count", type=int, default=10, help="cases per (m, n) pair")
    p.add_argument("--starts", type=int, default=4)
    p.add_argument("--iters", type=int, default=80)
    _add_common(p, campaign=True)
    p.set_defaults(func=_cmd_random_campaign)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError, RuntimeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
