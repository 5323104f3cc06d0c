"""Command-line front end.

    cuntz-cyclic apply OP EXPR [--n N] [--i I] [--spec NAME]
    cuntz-cyclic verify NAME|all [--n N] [--seed S] [--trials T] [--format text|json] ...
    cuntz-cyclic demo cobound [--n N] [--c C] [--seed S] [--samples K]

Exit codes: 0 success, 1 a check failed, 2 usage, parse or degree error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Callable, List, Optional

from .algebra import LinComb, element_to_chain, pi_multiply
from .chains import boundary, cyclic_norm, cyclic_shift, degree, face_map
from .cochains import cobound_normalized, coboundary, one_normalize
from .homotopy import SPECS, P_apply, phi_apply, r_apply, rho_long_cuntz, rho_long_free, rho_simple, s_apply
from .notation import ParseError, format_lincomb, format_scalar, parse_chain
from .semigroup import CuntzMonomial, FreeWord
from .testkit import REGISTRY, GenParams, rand_chain, rand_cocycle, resolve, run_check, trial_rng
from .testkit.checks import MUTATIONS

OPERATORS = ("d", "d_i", "t", "N", "s", "r", "P", "phi", "pi", "rho-simple", "rho-long", "rho-free")


class UsageError(Exception):
    pass


def _is_free(x: LinComb) -> bool:
    return any(isinstance(t[0], FreeWord) for t in x)


def _default_spec(x: LinComb, name: Optional[str]):
    if name is not None:
        return SPECS[name].unweighted()
    return SPECS["long-free" if _is_free(x) else "simple-cuntz"].unweighted()


def _split_each(rho: Callable, kind: type) -> Callable[[LinComb], LinComb]:
    def apply(x: LinComb) -> LinComb:
        if x and degree(x) != 0:
            raise UsageError("splitting maps take an algebra element (degree 0)")
        out = LinComb()
        for (a,), c in x.items():
            if not isinstance(a, kind):
                raise UsageError(f"this splitting map needs {kind.__name__} input")
            out = out + rho(a).scale(c)
        return out

    return apply


def apply_operator(op: str, x: LinComb, i: Optional[int] = None, spec: Optional[str] = None) -> LinComb:
    n = degree(x)
    if op in ("d", "d_i", "P", "phi", "pi") and n == 0:
        raise UsageError(f"operator {op} needs a chain of degree >= 1")
    if op == "d":
        return boundary(x)
    if op == "d_i":
        if i is None:
            raise UsageError("operator d_i needs --i")
        if n is not None and not 0 <= i <= n:
            raise UsageError(f"face index {i} out of range 0..{n}")
        return face_map(i, x)
    if op == "t":
        return cyclic_shift(x)
    if op == "N":
        return cyclic_norm(x)
    if op == "s":
        return s_apply(_default_spec(x, spec), x)
    if op == "r":
        return r_apply(x)
    if op == "P":
        return P_apply(_default_spec(x, spec), x)
    if op == "phi":
        if _is_free(x):
            raise UsageError("phi is defined for Cuntz chains")
        return phi_apply(x)
    if op == "pi":
        if n is not None and n != 1:
            raise UsageError("pi multiplies a degree-1 chain")
        return element_to_chain(pi_multiply(x))
    if op == "rho-simple":
        return _split_each(rho_simple, CuntzMonomial)(x)
    if op == "rho-long":
        return _split_each(rho_long_cuntz, CuntzMonomial)(x)
    if op == "rho-free":
        return _split_each(rho_long_free, FreeWord)(x)
    raise UsageError(f"unknown operator {op!r}")


def cmd_apply(args) -> int:
    x = parse_chain(args.expr)
    n = degree(x)
    if args.n is not None and n is not None and n != args.n:
        raise UsageError(f"expression has degree {n}, but --n {args.n} was given")
    print(format_lincomb(apply_operator(args.op, x, args.i, args.spec)))
    return 0


def _params(args) -> GenParams:
    return GenParams(
        seed=args.seed,
        degree=args.n,
        max_len=args.max_len,
        index_bound=args.index_bound,
        trials=args.trials,
        no_transition=args.no_transition,
        unit_free=args.unit_free,
    )


def _render_text(report, limit: int = 3) -> str:
    lines = [f"{report.check}: {report.status.upper()} ({report.trials} trials, {len(report.failures)} failures)"]
    for f in report.failures[:limit]:
        lines.append(f"  degree {f['degree']} trial {f['trial']}: {f['identity']}")
        lines.append(f"    input:    {f['input']}")
        lines.append(f"    expected: {f['expected']}")
        lines.append(f"    actual:   {f['actual']}")
    if len(report.failures) > limit:
        lines.append(f"  ... {len(report.failures) - limit} more")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if args.name == "all":
        names = list(REGISTRY)
    else:
        try:
            resolve(args.name)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        names = [args.name]
    params = _params(args)
    ok = True
    for name in names:
        report = run_check(name, params, mutate=args.mutate)
        ok = ok and report.status == "pass"
        print(report.to_json() if args.format == "json" else _render_text(report))
    return 0 if ok else 1


def cmd_demo(args) -> int:
    n, c = args.n, args.c
    if n < 1:
        raise UsageError("--n must be >= 1")
    if n % 2 and c:
        raise UsageError("odd degree admits no trace part: use --c 0")
    p = GenParams(seed=args.seed, degree=n)
    phi = rand_cocycle(p, n, c)
    trace_part = f" + {format_scalar(c)} * tau_1^({n})" if n % 2 == 0 else ""
    print(f"phi = delta chi{trace_part} in degree {n} (seed {args.seed})")
    if n % 2 == 0:
        lam, phi0 = one_normalize(phi)
        print(f"recovered lambda = {format_scalar(lam)}")
    else:
        lam, phi0 = 0, phi
        print("odd degree: cyclic cocycles vanish on 1 (x) ... (x) 1, no trace removal")
        print("recovered lambda = 0")
    rng = trial_rng(args.seed, "demo", n)
    checks = [rand_chain(p, rng, n, terms=2) for _ in range(3)]
    psi = cobound_normalized(phi0, samples=checks)
    dpsi = coboundary(psi)
    residual = 0
    for _ in range(args.samples):
        x = rand_chain(p, rng, n, terms=2)
        residual = max(residual, abs(Fraction(phi0(x) - dpsi(x))))
    print(f"max residual |phi - lambda tau - delta psi| over {args.samples} fresh samples = {format_scalar(residual)}")
    return 0 if residual == 0 and lam == c else 1


def _scalar(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cuntz-cyclic", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    ap = sub.add_parser("apply", help="apply an operator to a chain expression")
    ap.add_argument("op", choices=OPERATORS)
    ap.add_argument("expr")
    ap.add_argument("--n", type=int, help="expected degree of the input chain")
    ap.add_argument("--i", type=int, help="face index for d_i")
    ap.add_argument("--spec", choices=sorted(SPECS), help="splitting map for s and P")
    ap.set_defaults(func=cmd_apply)

    vp = sub.add_parser("verify", help="run a registered check (or all)")
    vp.add_argument("name")
    vp.add_argument("--n", type=_positive)
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--trials", type=_positive)
    vp.add_argument("--max-len", type=_positive, default=3)
    vp.add_argument("--index-bound", type=_positive, default=3)
    vp.add_argument("--no-transition", action="store_true")
    vp.add_argument("--unit-free", action="store_true")
    vp.add_argument("--format", choices=("text", "json"), default="text")
    vp.add_argument("--mutate", choices=sorted(MUTATIONS))
    vp.set_defaults(func=cmd_verify)

    dp = sub.add_parser("demo", help="constructive demonstrations")
    dp.add_argument("name", choices=("cobound",))
    dp.add_argument("--n", type=int, default=2)
    dp.add_argument("--c", type=_scalar, default=Fraction(0))
    dp.add_argument("--seed", type=int, default=0)
    dp.add_argument("--samples", type=_positive, default=100)
    dp.set_defaults(func=cmd_demo)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
