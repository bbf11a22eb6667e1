"""Command-line front end: tables, verification suites, brute-force sweeps.

Exit codes: 0 ok, 1 invariant failure, 2 usage error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import fforacle, formulas, hessenberg, partitions, symfunc
from .fforacle import BudgetError
from .qpoly import Laurent, eval_rational, q_factorial

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SUITES = ("routes", "modular", "bruteforce", "macdonald", "hermite", "cosets", "all")


@dataclass
class RunConfig:
    command: str
    h: tuple | None = None
    h1: tuple | None = None
    h2: tuple | None = None
    lam: tuple | None = None
    mu: tuple | None = None
    n: int | None = None
    primes: tuple = (2, 3)
    p: int = 2
    suite: str = "all"
    fmt: str = "md"
    out: str | None = None
    max_free: int | None = None
    max_group: int = 10**6
    threads: int = 1
    cosets: bool = False
    extra: dict = field(default_factory=dict)


def _parse_int_tuple(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc


def _check_primes(values) -> tuple:
    for p in values:
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise argparse.ArgumentTypeError(f"{p} is not prime")
    return tuple(values)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilcount",
        description="Exact counts of matrices of fixed Jordan type in ad-nilpotent ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="emit the full type-indexed table for an ideal or composition")
    sel = t.add_mutually_exclusive_group(required=True)
    sel.add_argument("--h", type=_parse_int_tuple, help="Hessenberg function, e.g. 1,3,5,6,7,7,7")
    sel.add_argument("--lambda", dest="lam", type=_parse_int_tuple, help="composition, e.g. 2,2,2,2")
    t.add_argument("--mu", type=_parse_int_tuple, default=None, help="restrict to one Jordan type")
    t.add_argument("--format", dest="fmt", choices=("md", "json", "csv"), default="md")
    t.add_argument("--out", default=None)
    t.add_argument("--threads", type=int, default=1)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--n", type=int, default=None)
    v.add_argument("--primes", type=_parse_int_tuple, default=(2, 3))
    v.add_argument("--lambda", dest="lam", type=_parse_int_tuple, default=None)
    v.add_argument("--max-free", type=int, default=None)
    v.add_argument("--threads", type=int, default=1)

    b = sub.add_parser("brute", help="exhaustive finite-field tallies")
    b.add_argument("--h", type=_parse_int_tuple, default=None)
    b.add_argument("--p", type=int, default=2)
    b.add_argument("--max-free", type=int, default=None)
    b.add_argument("--cosets", action="store_true", help="count double cosets instead")
    b.add_argument("--n", type=int, default=None)
    b.add_argument("--h1", type=_parse_int_tuple, default=None)
    b.add_argument("--h2", type=_parse_int_tuple, default=None)
    b.add_argument("--format", dest="fmt", choices=("json",), default="json")
    b.add_argument("--out", default=None)

    return parser


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _report_row(mu, selector, rep: formulas.CountReport) -> dict:
    return {
        "mu": list(mu),
        "lambda_or_h": list(selector),
        "route": rep.route,
        "poly": {str(e): c for e, c in sorted(rep.value.coeffs.items())},
        "factors": {
            "q_pow": rep.q_pow,
            "qm1_pow": rep.qm1_pow,
            "residual": rep.residual.to_string(),
        },
    }


def cmd_table(config: RunConfig) -> int:
    rows = []
    if config.h is not None:
        h = hessenberg.check_hessenberg(config.h)
        selector = ("h", list(h))
        for mu in partitions.partitions_of(len(h)):
            rows.append((mu, formulas.jordan_count_tableaux(mu, h)))
    else:
        lam_sorted = partitions.sort_composition(config.lam)
        selector = ("lambda", list(config.lam))
        for mu in partitions.partitions_of(sum(lam_sorted)):
            rep = formulas.jordan_count(mu, config.lam)
            if not rep.value.is_zero():
                rows.append((mu, rep))
    if config.mu is not None:
        wanted = partitions.check_partition(config.mu)
        rows = [(mu, rep) for mu, rep in rows if mu == wanted]
    if config.fmt == "md":
        lines = ["| mu | count |", "|---|---|"]
        for mu, rep in rows:
            body = rep.factor_string() if not rep.value.is_zero() else "0"
            lines.append(f"| {tuple(mu)} | {body} |")
        text = "\n".join(lines) + "\n"
    elif config.fmt == "csv":
        lines = ["mu,expanded,q_pow,qm1_pow,residual"]
        for mu, rep in rows:
            lines.append(
                f"\"{tuple(mu)}\",\"{rep.value.to_string()}\",{rep.q_pow},{rep.qm1_pow},\"{rep.residual.to_string()}\""
            )
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            selector[0]: selector[1],
            "rows": [_report_row(mu, selector[1], rep) for mu, rep in rows],
        }
        text = json.dumps(payload, indent=2) + "\n"
    _emit(text, config.out)
    return EXIT_OK


def cmd_brute(config: RunConfig) -> int:
    start = time.monotonic()
    if config.cosets:
        if config.h1 is None or config.h2 is None:
            raise UsageError("brute --cosets needs --h1 and --h2")
        count = fforacle.double_coset_count_brute(config.h1, config.h2, config.p, config.max_group)
        payload = {
            "h1": list(config.h1),
            "h2": list(config.h2),
            "p": config.p,
            "double_cosets": count,
            "elapsed_ms": int((time.monotonic() - start) * 1000),
        }
    else:
        if config.h is None:
            raise UsageError("brute needs --h (or --cosets with --h1/--h2)")
        tallies = fforacle.tally_ideal(config.h, config.p, config.max_free)
        payload = {
            "h": list(config.h),
            "p": config.p,
            "tallies": [
                {"mu": list(mu), "count": c} for mu, c in sorted(tallies.items(), reverse=True)
            ],
            "elapsed_ms": int((time.monotonic() - start) * 1000),
        }
    _emit(json.dumps(payload, indent=2), config.out)
    return EXIT_OK


class UsageError(ValueError):
    pass


class VerifyFailure(AssertionError):
    pass


def _suite_routes(n: int, _config: RunConfig, log) -> None:
    for size in range(1, n + 1):
        for mu in partitions.partitions_of(size):
            for lam in partitions.partitions_of(size):
                a = formulas.jordan_count(mu, lam).value
                b = formulas.jordan_count_recursive(mu, lam).value
                if a != b:
                    raise VerifyFailure(f"routes disagree at mu={mu}, lam={lam}: {a} vs {b}")
        log(f"routes: closed form == recursion for all pairs at n={size}")
    chrom_limit = min(n, 5)
    for size in range(1, chrom_limit + 1):
        for lam in partitions.partitions_of(size):
            h = hessenberg.from_composition(lam)
            for mu in partitions.partitions_of(size):
                a = formulas.jordan_count(mu, lam).value
                c = formulas.jordan_count_chromatic(mu, h).value
                if a != c:
                    raise VerifyFailure(f"chromatic route disagrees at mu={mu}, lam={lam}")
        log(f"routes: chromatic route matches on block ideals at n={size}")


def _suite_modular(n: int, _config: RunConfig, log) -> None:
    q_plus_1 = Laurent({1: 1, 0: 1})
    for size in range(2, n + 1):
        triples = hessenberg.enumerate_compatible_triples(size)
        for trip in triples:
            for mu in partitions.partitions_of(size):
                f0 = formulas.jordan_count_tableaux(mu, trip.h0).value
                f1 = formulas.jordan_count_tableaux(mu, trip.h1).value
                f2 = formulas.jordan_count_tableaux(mu, trip.h2).value
                if q_plus_1 * f1 != f0 + Laurent.q() * f2:
                    raise VerifyFailure(
                        f"modular law fails at mu={mu}, triple={trip.h0},{trip.h1},{trip.h2}"
                    )
        log(f"modular: {len(triples)} compatible triples pass at n={size}")


def _suite_bruteforce(n: int, config: RunConfig, log) -> None:
    for size in range(1, n + 1):
        mus = partitions.partitions_of(size)
        for h in hessenberg.enumerate_hessenberg(size):
            for p in config.primes:
                tallies = fforacle.tally_ideal(h, p, config.max_free)
                for mu in mus:
                    expected = tallies.get(mu, 0)
                    got = eval_rational(formulas.jordan_count_tableaux(mu, h).value, p)
                    if got != expected:
                        raise VerifyFailure(
                            f"brute mismatch at h={h}, mu={mu}, p={p}: {got} != {expected}"
                        )
        log(f"bruteforce: ideal tallies match at n={size}, primes {config.primes}")


def _suite_macdonald(n: int, _config: RunConfig, log) -> None:
    for size in range(1, n + 1):
        for k in range(size // 2 + 1):
            jj = symfunc.jing_jozefiak_q(size, k)
            direct = symfunc.macdonald_q0((size - k, k) if k else (size,))
            if jj.coeffs != direct.coeffs:
                raise VerifyFailure(f"one-row assembly disagrees at (n,k)=({size},{k})")
            two = symfunc.two_var_p(size, k)
            restricted = symfunc.restrict_two_vars(
                symfunc.macdonald_p0((size - k, k) if k else (size,), inverse=True)
            )
            if two != restricted:
                raise VerifyFailure(f"two-variable form disagrees at (n,k)=({size},{k})")
        log(f"macdonald: two-row assembly and two-variable forms agree at n={size}")
    for size in range(1, min(n, 7) + 1):
        for mu in partitions.partitions_of(size):
            for lam in partitions.partitions_of(size):
                b = partitions.coeff_b(mu, lam)
                a = partitions.coeff_a(mu, lam)
                factor_num = Laurent.one()
                for i in range(1, len(lam) + 1):
                    factor_num = factor_num * q_factorial(partitions.part(lam, i))
                factor_den = Laurent.one()
                for i in range(1, len(mu) + 1):
                    factor_den = factor_den * q_factorial(
                        partitions.part(mu, i) - partitions.part(mu, i + 1)
                    )
                if b * factor_den != a * factor_num:
                    raise VerifyFailure(f"b/a relation fails at mu={mu}, lam={lam}")
        log(f"macdonald: b/a normalization relation holds at n={size}")


def _suite_hermite(n: int, config: RunConfig, log) -> None:
    lams = [tuple(config.lam)] if config.lam else None
    for size in range(1, n + 1):
        targets = lams or partitions.partitions_of(size)
        for lam in targets:
            if sum(lam) != size:
                continue
            if not formulas.hermite_identity_check(lam):
                raise VerifyFailure(f"orthogonal-polynomial identity fails at lam={lam}")
        log(f"hermite: identity holds at n={size}")


def _suite_cosets(n: int, config: RunConfig, log) -> None:
    for size in range(2, n + 1):
        hs = hessenberg.enumerate_hessenberg(size)
        for p in config.primes:
            if len(fforacle.gl_elements(size, p)) > config.max_group:
                continue
            for h1 in hs:
                for h2 in hs:
                    brute = fforacle.double_coset_count_brute(h1, h2, p, config.max_group)
                    formula = eval_rational(formulas.double_coset_count(h1, h2), p)
                    if brute != formula:
                        raise VerifyFailure(
                            f"double cosets disagree at h1={h1}, h2={h2}, p={p}"
                        )
            log(f"cosets: formula matches brute force at n={size}, p={p}")


def cmd_verify(config: RunConfig) -> int:
    n = config.n or 4
    def log(msg):
        print(f"[verify] {msg}")

    suites = {
        "routes": lambda: _suite_routes(n, config, log),
        "modular": lambda: _suite_modular(n, config, log),
        "bruteforce": lambda: _suite_bruteforce(n, config, log),
        "macdonald": lambda: _suite_macdonald(n, config, log),
        "hermite": lambda: _suite_hermite(n, config, log),
        "cosets": lambda: _suite_cosets(min(n, 3), config, log),
    }
    chosen = list(suites) if config.suite == "all" else [config.suite]
    for name in chosen:
        suites[name]()
    print(f"[verify] suite '{config.suite}' passed")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    config = RunConfig(
        command=ns.command,
        h=getattr(ns, "h", None),
        h1=getattr(ns, "h1", None),
        h2=getattr(ns, "h2", None),
        lam=getattr(ns, "lam", None),
        mu=getattr(ns, "mu", None),
        n=getattr(ns, "n", None),
        primes=tuple(getattr(ns, "primes", (2, 3))),
        p=getattr(ns, "p", 2),
        suite=getattr(ns, "suite", "all"),
        fmt=getattr(ns, "fmt", "md"),
        out=getattr(ns, "out", None),
        max_free=getattr(ns, "max_free", None),
        threads=getattr(ns, "threads", 1),
        cosets=getattr(ns, "cosets", False),
    )
    try:
        if config.command == "table":
            return cmd_table(config)
        if config.command == "verify":
            try:
                _check_primes(config.primes)
            except argparse.ArgumentTypeError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_USAGE
            return cmd_verify(config)
        if config.command == "brute":
            return cmd_brute(config)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"budget refusal: {exc} (required {exc.required})", file=sys.stderr)
        return EXIT_BUDGET
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerifyFailure as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (AssertionError, ArithmeticError) as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
