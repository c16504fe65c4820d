"""Command-line interface: ``cyclotomy <subcommand> ...``.

Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import analytic, closedform, cyclofield, kronecker, polyring, resultant
from .cyclofield import CycloElement, RootOfUnity
from .errors import CyclotomyError, PoleError
from .numtheory import chebyshev_phi1_sum, euler_phi, factor

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --- argument parsing helpers ----------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _root(text: str) -> RootOfUnity:
    parts = text.split("/")
    try:
        nums = [int(p, 10) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"root must look like m/j, got {text!r}") from None
    if len(nums) == 1:
        nums.append(1)
    if len(nums) != 2 or nums[0] < 1:
        raise argparse.ArgumentTypeError(f"root must look like m/j with m >= 1, got {text!r}")
    m, j = nums
    if m == 1:
        return RootOfUnity(1, 0)
    if math.gcd(j, m) != 1:
        raise argparse.ArgumentTypeError(f"gcd({j}, {m}) != 1: not a primitive root")
    return RootOfUnity(m, j)


def _orders(text: str) -> tuple[int, ...]:
    try:
        out = tuple(int(t, 10) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"orders must be a comma list of integers, got {text!r}") from None
    bad = [m for m in out if m not in closedform.CLOSED_FORM_ORDERS]
    if bad or not out:
        raise argparse.ArgumentTypeError(f"orders must be drawn from {closedform.CLOSED_FORM_ORDERS}")
    return out


# --- rendering ---------------------------------------------------------------------


def _q(x) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _element_json(a: CycloElement) -> dict:
    z = a.to_complex()
    return {
        "modulus": a.modulus,
        "text": cyclofield.to_text(a),
        "coords": [_q(c) for c in a.coords],
        "float": [z.real, z.imag],
    }


def _fmt_complex(z: complex) -> str:
    return f"{z.real!r}{'+' if z.imag >= 0 else '-'}{abs(z.imag)!r}i"


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


# --- subcommands ---------------------------------------------------------------------


def cmd_coeffs(args) -> int:
    f = polyring.cyclotomic(args.n)
    text = polyring.to_text(f)
    _emit(
        args,
        {"n": args.n, "degree": f.degree, "coeffs": list(f.coeffs), "text": text, "height": polyring.height(f)},
        [text],
    )
    return EXIT_OK


def cmd_eval(args) -> int:
    root = args.root
    v = cyclofield.eval_phi_exact(args.n, root)
    payload = {"n": args.n, "root": str(root), "value": _element_json(v)}
    lines = []
    code = EXIT_OK
    if args.closed_form:
        if root.order not in closedform.CLOSED_FORM_ORDERS:
            raise UsageError(f"closed forms cover orders {closedform.CLOSED_FORM_ORDERS}, not {root.order}")
        cf = closedform.closed_form_value(args.n, root)
        ok = cf == v
        payload["closed_form"] = cyclofield.to_text(cf)
        payload["matches_oracle"] = ok
        lines += [cyclofield.to_text(cf), "MATCHES ORACLE" if ok else "MISMATCH"]
        code = EXIT_OK if ok else EXIT_MISMATCH
    elif args.float:
        lines.append(_fmt_complex(v.to_complex()))
    else:
        lines.append(cyclofield.to_text(v))
    _emit(args, payload, lines)
    return code


def cmd_logderiv(args) -> int:
    root = args.root
    if args.n == root.order:
        raise UsageError(f"f_{args.n} has a pole at the primitive roots of order {args.n}")
    v = cyclofield.logderiv_exact(args.n, root)
    payload = {"n": args.n, "root": str(root), "value": _element_json(v)}
    lines = [cyclofield.to_text(v)]
    code = EXIT_OK
    m = root.order
    if m in (3, 4, 6) and args.n > 1 and math.gcd(args.n, m) == 1:
        f = factor(args.n)
        minus = [p for p in f.primes if p % m == m - 1]
        n_minus = math.prod(p**e for p, e in f.factors if p % m == m - 1)
        omega = sum(e for p, e in f.factors if p % m == m - 1)
        ratio = math.prod((Fraction(p + 1, p - 1) for p in minus), start=Fraction(1))
        closed = analytic.logderiv_closed_346(args.n, root)
        ok = closed == v
        payload["decomposition"] = {
            "phi_n": euler_phi(f),
            "n_minus": n_minus,
            "Omega_n_minus": omega,
            "ratio": _q(ratio),
            "matches_oracle": ok,
        }
        lines.append(
            f"phi(n)={euler_phi(f)} n_minus={n_minus} Omega(n_minus)={omega} ratio={_q(ratio)}"
        )
        lines.append("MATCHES ORACLE" if ok else "MISMATCH")
        code = EXIT_OK if ok else EXIT_MISMATCH
    _emit(args, payload, lines)
    return code


def cmd_resultant(args) -> int:
    n, m = args.n, args.m
    if n == m:
        raise UsageError("resultant of Phi_n with itself is 0; give distinct indices")
    val = resultant.cyclotomic_resultant(n, m)
    payload = {"n": n, "m": m, "resultant": val}
    lines = [str(val)]
    code = EXIT_OK
    if args.brute:
        b = resultant.resultant_bruteforce(n, m)
        ok = b == val
        payload["brute"] = b
        payload["matches"] = ok
        lines += [f"brute: {b}", "MATCHES" if ok else "MISMATCH"]
        code = EXIT_OK if ok else EXIT_MISMATCH
    _emit(args, payload, lines)
    return code


def cmd_kronecker(args) -> int:
    try:
        f = polyring.from_text(args.coeffs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if f.is_zero() or not f.is_monic():
        raise UsageError("polynomial must be nonzero and monic")
    res = kronecker.factor_kronecker(f)
    payload: dict = {"input": polyring.to_text(f)}
    if isinstance(res, kronecker.NotKronecker):
        payload.update(kronecker=False, residual=polyring.to_text(res.residual))
        _emit(args, payload, [f"NotKronecker residual={polyring.to_text(res.residual)}"])
        return EXIT_OK
    payload.update(
        kronecker=True,
        monomial_exponent=res.monomial_exponent,
        factors=[[d, e] for d, e in res.factors],
    )
    lines = [str(res)]
    if res.monomial_exponent == 0:
        sf = kronecker.sign_facts(res)
        rc = kronecker.reciprocity_class(res)
        payload["reciprocity"] = rc.value
        payload["sign_facts"] = {
            "f_at_1": sf.f_at_1,
            "f_at_minus1": sf.f_at_minus1,
            "f1_nonneg": sf.f1_nonneg,
            "fm1_nonneg": sf.fm1_nonneg,
            "strictly_positive": sf.strictly_positive,
        }
        lines += [
            f"reciprocity: {rc.value}",
            f"f(1)={sf.f_at_1} f(-1)={sf.f_at_minus1} strictly_positive={sf.strictly_positive}",
        ]
    if args.abs_at is not None:
        try:
            a = kronecker.abs_at_low_m(res, args.abs_at)
        except (ValueError, CyclotomyError) as exc:
            raise UsageError(str(exc)) from None
        payload["abs_at"] = {"m": args.abs_at, "value": a}
        lines.append(f"|f(zeta_{args.abs_at})| = {a}")
    _emit(args, payload, lines)
    return EXIT_OK


def _oracle_log_abs(row: analytic.VaughanRow) -> float:
    v = cyclofield.eval_phi_exact(row.n.value, row.best_root)
    z = v.to_complex(analytic.HIGH_PRECISION)
    with mpmath.workprec(analytic.HIGH_PRECISION):
        return float(mpmath.log(abs(z)))


def cmd_vaughan(args) -> int:
    xs = args.x or list(analytic.VAUGHAN_XS)
    rows = []
    lines = ["x n omega bound bound-log(n)" + (" oracle_log_abs" if args.verify_oracle else "")]
    code = EXIT_OK
    for x in xs:
        r = analytic.vaughan_construct(x)
        item = {
            "x": x,
            "n": r.n.value,
            "omega": r.omega,
            "best_root": str(r.best_root),
            "bound": r.bound,
            "chain": r.chain,
        }
        line = f"{x} {r.n.value} {r.omega} {r.bound:.12f} {r.chain:.12f}"
        if args.verify_oracle:
            if euler_phi(r.n) <= args.phi_cap:
                ol = _oracle_log_abs(r)
                ok = abs(ol - r.bound) < 1e-6
                item["oracle_log_abs"] = ol
                item["matches_oracle"] = ok
                line += f" {ol:.12f}" + ("" if ok else " MISMATCH")
                if not ok:
                    code = EXIT_MISMATCH
            else:
                item["oracle_log_abs"] = None
                line += " skipped"
        rows.append(item)
        lines.append(line)
    _emit(args, {"rows": rows}, lines)
    return code


# --- verify ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    min_n: int
    max_n: int
    orders: tuple[int, ...]
    checked: int = 0
    failures: list[tuple[int, str]] = field(default_factory=list)
    seconds: float | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {
            "min_n": self.min_n,
            "max_n": self.max_n,
            "orders": list(self.orders),
            "checked": self.checked,
            "failures": [{"n": n, "root": r} for n, r in self.failures],
            "first_counterexample": (
                {"n": self.failures[0][0], "root": self.failures[0][1]} if self.failures else None
            ),
            "ok": self.ok,
        }
        if self.seconds is not None:
            out["seconds"] = self.seconds
        return out

    def lines(self) -> list[str]:
        out = [
            f"range {self.min_n}..{self.max_n}",
            f"orders {','.join(map(str, self.orders))}",
            f"checked {self.checked}",
            f"failures {len(self.failures)}",
        ]
        if self.failures:
            n, r = self.failures[0]
            out.append(f"first counterexample n={n} root={r}")
        if self.seconds is not None:
            out.append(f"seconds {self.seconds:.3f}")
        out.append("OK" if self.ok else "MISMATCH")
        return out


def _roots_of_orders(orders) -> list[RootOfUnity]:
    out = []
    for m in orders:
        if m == 1:
            out.append(RootOfUnity(1, 0))
        else:
            out += [RootOfUnity(m, j) for j in range(1, m) if math.gcd(j, m) == 1]
    return out


def _verify_chunk(task) -> tuple[int, list[tuple[int, str]]]:
    lo, hi, orders, use_cache = task
    if not use_cache:
        polyring.set_cache_enabled(False)
    roots = _roots_of_orders(orders)
    checked, bad = 0, []
    for n in range(lo, hi + 1):
        for r in roots:
            checked += 1
            if closedform.closed_form_value(n, r) != cyclofield.eval_phi_exact(n, r):
                bad.append((n, str(r)))
    return checked, bad


def run_verify(max_n: int, orders=closedform.CLOSED_FORM_ORDERS, jobs: int = 1, min_n: int = 1,
               use_cache: bool = True, timing: bool = False) -> VerifyReport:
    """Compare the closed forms with the oracle for ``min_n <= n <= max_n``."""
    t0 = time.perf_counter()
    rep = VerifyReport(min_n, max_n, tuple(orders))
    if jobs <= 1:
        chunks = [(min_n, max_n, tuple(orders), use_cache)]
    else:
        step = max(1, (max_n - min_n + 1 + 4 * jobs - 1) // (4 * jobs))
        chunks = [(lo, min(lo + step - 1, max_n), tuple(orders), use_cache) for lo in range(min_n, max_n + 1, step)]
    if jobs <= 1:
        results = [_verify_chunk(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves chunk order, so the merge is in n order
            results = list(pool.map(_verify_chunk, chunks))
    for checked, bad in results:
        rep.checked += checked
        rep.failures.extend(bad)
    if timing:
        rep.seconds = time.perf_counter() - t0
    return rep


def cmd_verify(args) -> int:
    if args.min_n > args.max_n:
        raise UsageError("--min-n exceeds --max-n")
    rep = run_verify(args.max_n, args.orders, args.jobs, args.min_n, not args.no_cache, args.timing)
    _emit(args, rep.to_json(), rep.lines())
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_pnt(args) -> int:
    if args.x < 3:
        raise UsageError("--x must be at least 3")
    s = chebyshev_phi1_sum(args.x)
    ratio = s / args.x
    _emit(args, {"x": args.x, "sum": s, "ratio": ratio}, [f"sum {s!r}", f"ratio {ratio!r}"])
    return EXIT_OK


# --- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--no-cache", action="store_true", help="disable the cyclotomic polynomial memo cache")

    p = argparse.ArgumentParser(prog="cyclotomy", description="Cyclotomic polynomials at roots of unity.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("coeffs", parents=[common], help="coefficients of Phi_n")
    s.add_argument("n", type=_positive)
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser("eval", parents=[common], help="Phi_n at a root of unity")
    s.add_argument("n", type=_positive)
    s.add_argument("--root", type=_root, required=True, metavar="m/j")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="exact field element (default)")
    g.add_argument("--float", action="store_true", help="floating-point value")
    g.add_argument("--closed-form", action="store_true", help="closed-form table, checked against the oracle")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("logderiv", parents=[common], help="Phi_n'/Phi_n at a root of unity")
    s.add_argument("n", type=_positive)
    s.add_argument("--root", type=_root, required=True, metavar="m/j")
    s.set_defaults(func=cmd_logderiv)

    s = sub.add_parser("resultant", parents=[common], help="resultant of Phi_m and Phi_n")
    s.add_argument("n", type=_positive)
    s.add_argument("m", type=_positive)
    s.add_argument("--brute", action="store_true", help="cross-check by the field product")
    s.set_defaults(func=cmd_resultant)

    s = sub.add_parser("kronecker", parents=[common], help="factor a Kronecker polynomial")
    s.add_argument("coeffs", help="ascending coefficients, e.g. -1,1,-1,1")
    s.add_argument("--abs-at", type=int, choices=kronecker.LOW_ORDERS, metavar="m")
    s.set_defaults(func=cmd_kronecker)

    s = sub.add_parser("vaughan", parents=[common], help="height lower-bound table")
    s.add_argument("--x", type=_positive, action="append", help="repeatable; default 3,7,13,23,43")
    s.add_argument("--verify-oracle", action="store_true")
    s.add_argument("--phi-cap", type=_positive, default=200_000, help="largest phi(n) for --verify-oracle")
    s.set_defaults(func=cmd_vaughan)

    s = sub.add_parser("verify", parents=[common], help="closed forms versus the oracle")
    s.add_argument("--max-n", type=_positive, required=True)
    s.add_argument("--min-n", type=_positive, default=1)
    s.add_argument("--orders", type=_orders, default=closedform.CLOSED_FORM_ORDERS)
    s.add_argument("--jobs", type=_positive, default=1)
    s.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("pnt", parents=[common], help="sum of log Phi_n(1) for 2 < n <= x")
    s.add_argument("--x", type=_positive, required=True)
    s.set_defaults(func=cmd_pnt)
    return p


_COEFF_LIST = re.compile(r"^[-−]\d+(,\s*[-−]?\d+)*$")


def _shield_negative_lists(argv: list[str]) -> list[str]:
    # argparse reads "-1,0,1" as an option; a leading space hides it and int() ignores it
    return [" " + a if _COEFF_LIST.match(a) else a for a in argv]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_shield_negative_lists(argv))
    if args.no_cache:
        polyring.set_cache_enabled(False)
    try:
        return args.func(args)
    except (UsageError, PoleError, ValueError, CyclotomyError) as exc:
        print(f"cyclotomy {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
