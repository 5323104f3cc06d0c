"""Registry of executable identity checks.

Each check runs a number of seeded trials per degree and compares both sides
of an identity exactly.  A failure records the input and both sides as
canonical text.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .. import chains
from ..algebra import LinComb, left_act, pi_multiply, right_act
from ..chains import (
    boundary,
    chain_length,
    cyclic_norm,
    cyclic_shift,
    face_map,
    transition_profile,
    units,
)
from ..cochains import (
    TracePair,
    class_functional,
    cobound_normalized,
    coboundary,
    invariant_project,
    one_normalize,
    symmetrize_cochain,
    trace_cuntz,
    trace_from_pair,
    trace_power,
    trace_value,
)
from ..homotopy import (
    LONG_CUNTZ,
    LONG_FREE,
    SIMPLE_CUNTZ,
    P_apply,
    P_terms,
    SplitSpec,
    phi_apply,
    phi_homotopy,
    s_apply,
    s_slot,
    term_labels,
)
from ..notation import format_lincomb
from ..semigroup import CUNTZ_UNIT, CuntzMonomial, FreeWord
from .generators import (
    GenParams,
    hashed_table_cochain,
    rand_chain,
    rand_cocycle,
    rand_free_tensor,
    rand_free_word,
    rand_monomial,
    rand_tensor,
    rand_word,
    trial_rng,
)

MUTATIONS = {"flip-face-sign": 1}


def _single(t) -> LinComb:
    return LinComb.from_acc({t: 1})


def _fmt(x) -> str:
    if isinstance(x, LinComb):
        return format_lincomb(x)
    if isinstance(x, tuple) and x and isinstance(x[0], (CuntzMonomial, FreeWord)):
        return format_lincomb(_single(x))
    return str(x)


def _fail(what: str, given, expected, actual) -> dict:
    return {"identity": what, "input": _fmt(given), "expected": _fmt(expected), "actual": _fmt(actual)}


@dataclass
class CheckReport:
    check: str
    params: dict
    trials: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "trials": self.trials,
            "failures": self.failures,
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable  # (rng, n, params, trial, ctx) -> list of failures
    degrees: Tuple[int, ...] = (1, 2, 3)
    trials: int = 100
    summary: str = ""


REGISTRY: Dict[str, Check] = {}
ALIASES: Dict[str, str] = {}


def register(name: str, degrees=(1, 2, 3), trials=100, aliases: Sequence[str] = ()):
    def deco(fn):
        REGISTRY[name] = Check(name, fn, tuple(degrees), trials, (fn.__doc__ or "").strip().splitlines()[0])
        for alias in aliases:
            ALIASES[alias] = name
        return fn

    return deco


def resolve(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in REGISTRY:
        raise KeyError(f"unknown check {name!r}")
    return name


def run_check(name: str, params: GenParams = GenParams(), mutate: Optional[str] = None) -> CheckReport:
    """Execute one registered check; exact comparisons, counterexamples collected."""
    requested = name
    check = REGISTRY[resolve(name)]
    if mutate is not None and mutate not in MUTATIONS:
        raise KeyError(f"unknown mutation {mutate!r}")
    degrees = (params.degree,) if params.degree is not None else check.degrees
    trials = params.trials if params.trials is not None else check.trials
    report = CheckReport(requested, params.as_dict())
    ctx: dict = {}

    def body():
        for n in degrees:
            for trial in range(trials):
                rng = trial_rng(params.seed, check.name, n, trial)
                try:
                    found = check.run(rng, n, params, trial, ctx)
                except (ValueError, ArithmeticError) as exc:
                    # a violated precondition inside a pipeline counts as a counterexample
                    found = [{"identity": "raised", "input": "", "expected": "no error", "actual": repr(exc)}]
                for failure in found:
                    report.failures.append({"degree": n, "trial": trial, **failure})
                report.trials += 1

    if mutate is None:
        body()
    else:
        with chains.flipped_face_sign(MUTATIONS[mutate]):
            body()
    return report


def run_all(params: GenParams = GenParams(), mutate: Optional[str] = None) -> List[CheckReport]:
    return [run_check(name, params, mutate) for name in REGISTRY]


# ---------------------------------------------------------------- semigroup


@register("semigroup-associativity", degrees=(1,))
def _check_assoc(rng, n, p, trial, ctx):
    """Associativity of the Cuntz product (zero absorbs)."""
    out = []
    if trial == 0:
        small = _all_monomials(2, 2)
        for a, b, c in itertools.product(small, repeat=3):
            if _mul3(a, b, c, True) != _mul3(a, b, c, False):
                out.append(_fail("(ab)c = a(bc)", (a, b, c), _mul3(a, b, c, True), _mul3(a, b, c, False)))
    a, b, c = (rand_monomial(rng, 4, p.index_bound) for _ in range(3))
    if _mul3(a, b, c, True) != _mul3(a, b, c, False):
        out.append(_fail("(ab)c = a(bc)", (a, b, c), _mul3(a, b, c, True), _mul3(a, b, c, False)))
    return out


def _mul3(a, b, c, left_first):
    if left_first:
        ab = a.mul(b)
        return None if ab is None else ab.mul(c)
    bc = b.mul(c)
    return None if bc is None else a.mul(bc)


def _all_words(max_len: int, m: int):
    for length in range(max_len + 1):
        yield from itertools.product(range(1, m + 1), repeat=length)


def _all_monomials(max_len: int, m: int):
    out = []
    for total in range(max_len + 1):
        for la in range(total + 1):
            for alpha in itertools.product(range(1, m + 1), repeat=la):
                for beta in itertools.product(range(1, m + 1), repeat=total - la):
                    out.append(CuntzMonomial(alpha, beta))
    return out


# ---------------------------------------------------------- chain complex


def _family(trial: int) -> str:
    return "free" if trial % 4 == 3 else "cuntz"


@register("d-squared-zero")
def _check_dd(rng, n, p, trial, ctx):
    """d o d = 0 on random chains of degree n+1."""
    x = rand_chain(p, rng, n + 1, family=_family(trial))
    dd = boundary(boundary(x))
    return [] if not dd else [_fail("d d x = 0", x, LinComb(), dd)]


@register("shift-order")
def _check_t_order(rng, n, p, trial, ctx):
    """t^(n+1) = I."""
    x = rand_chain(p, rng, n, family=_family(trial))
    y = x
    for _ in range(n + 1):
        y = cyclic_shift(y)
    return [] if y == x else [_fail("t^(n+1) x = x", x, x, y)]


@register("norm-annihilates")
def _check_norm(rng, n, p, trial, ctx):
    """N(I - t) = 0 and (I - t)N = 0."""
    x = rand_chain(p, rng, n, family=_family(trial))
    out = []
    a = cyclic_norm(x - cyclic_shift(x))
    if a:
        out.append(_fail("N(I - t)x = 0", x, LinComb(), a))
    nx = cyclic_norm(x)
    b = nx - cyclic_shift(nx)
    if b:
        out.append(_fail("(I - t)N x = 0", x, LinComb(), b))
    return out


def _in_image_of_I_minus_t(z: LinComb) -> bool:
    """Linear-solve oracle: is ``z = (I - t)u`` for some ``u`` on the orbit span?"""
    if not z:
        return True
    basis = []
    index = {}
    for t in z:
        for j in range(len(t)):
            r = chains._rotate(t, j)
            if r not in index:
                index[r] = len(basis)
                basis.append(r)
    size = len(basis)
    rows = [[QQ(0)] * size for _ in range(size)]
    for col, b in enumerate(basis):
        rows[col][col] += QQ(1)
        for key, c in cyclic_shift(_single(b)).items():
            c = Fraction(c)
            rows[index[key]][col] -= QQ(c.numerator, c.denominator)
    rhs = []
    for b in basis:
        c = Fraction(z.coeff(b))
        rhs.append(QQ(c.numerator, c.denominator))
    A = DomainMatrix(rows, (size, size), QQ)
    Ab = DomainMatrix([row + [v] for row, v in zip(rows, rhs)], (size, size + 1), QQ)
    return A.rank() == Ab.rank()


@register("cyclic-equiv-oracle")
def _check_equiv_oracle(rng, n, p, trial, ctx):
    """Kernel-of-N test agrees with a linear-solve membership oracle."""
    x = rand_chain(p, rng, n)
    if trial % 2 == 0:
        u = rand_chain(p, rng, n, terms=2)
        y = x - (u - cyclic_shift(u))
    elif trial % 4 == 1:
        y = x + rand_chain(p, rng, n, terms=1)
    else:
        y = rand_chain(p, rng, n)
    fast = chains.cyclic_equiv(x, y)
    slow = _in_image_of_I_minus_t(x - y)
    if fast != slow:
        return [_fail("kernel-of-N test = linear solve", x - y, slow, fast)]
    if trial % 2 == 0 and not fast:
        return [_fail("x ~ x - (I - t)u", x - y, True, fast)]
    return []


# ---------------------------------------------------------------- homotopy


def _spec_cases(rng, n, p, trial, length_preserving: bool = False):
    """(spec, tensor) pairs covering every splitting map and weight mode."""
    cuntz = rand_tensor(p, rng, n)
    cases = [
        (SIMPLE_CUNTZ, cuntz),
        (LONG_CUNTZ.unweighted(), cuntz),
        (LONG_FREE.unweighted(), rand_free_tensor(p, rng, n)),
        (LONG_FREE, rand_free_tensor(p, rng, n)),
    ]
    if length_preserving:
        flat = GenParams(p.seed, n, p.max_len, p.index_bound, no_transition=True)
        cases.append((LONG_CUNTZ, rand_tensor(flat, rng, n)))
    else:
        cases.append((LONG_CUNTZ, cuntz))
    return cases


@register("shift-homotopy", aliases=("lemma-3.3",))
def _check_shift_homotopy(rng, n, p, trial, ctx):
    """s_1(t x) = t^2 s_(n+1)(x); s_k(t x) = t s_(k-1)(x); T(s t x) = T(s x) for cyclic T."""
    out = []
    for spec, t in _spec_cases(rng, n, p, trial):
        x = _single(t)
        tx = cyclic_shift(x)
        lhs = s_slot(spec, 1, tx)
        rhs = cyclic_shift(s_slot(spec, n + 1, x), 2)
        if lhs != rhs:
            out.append(_fail(f"{spec.name}: s_1(t x) = t^2 s_(n+1)(x)", x, rhs, lhs))
        for k in range(2, n + 2):
            lhs = s_slot(spec, k, tx)
            rhs = cyclic_shift(s_slot(spec, k - 1, x))
            if lhs != rhs:
                out.append(_fail(f"{spec.name}: s_{k}(t x) = t s_{k - 1}(x)", x, rhs, lhs))
        T = symmetrize_cochain(hashed_table_cochain(n + 1, (p.seed, trial, spec.name), p.max_len + 2, p.index_bound))
        a, b = T(s_apply(spec, tx)), T(s_apply(spec, x))
        if a != b:
            out.append(_fail(f"{spec.name}: T(s t x) = T(s x)", x, b, a))
    return out


def _composition(spec: SplitSpec, label: str, x: LinComb) -> LinComb:
    """Evaluate a ledger label such as ``"s2d1"`` or ``"d0s3"`` by composing operators."""
    first, second = label[0], label[1:]
    split = second.index("s" if first == "d" else "d")
    a, b = int(second[:split]), int(second[split + 1 :])
    if first == "s":
        return s_slot(spec, a, face_map(b, x))
    return face_map(a, s_slot(spec, b, x))


@register("homotopy-cancellation", aliases=("lemma-3.4-cancellation", "lemma-3.4"))
def _check_cancellation(rng, n, p, trial, ctx):
    """Pairwise cancellations in s d + d s; the 4n+4 surviving terms sum to s d + d s."""
    out = []
    for spec, t in _spec_cases(rng, n, p, trial, length_preserving=True):
        x = _single(t)
        pairs = [(f"s{k}d0", f"d0s{k + 1}") for k in range(1, n)]
        pairs += [(f"s{k}d{j}", f"d{j}s{k + 1}") for j in range(1, n + 1) for k in range(j + 1, n + 1)]
        pairs += [(f"s{k}d{j}", f"d{j + 1}s{k}") for k in range(1, n + 1) for j in range(k + 1, n + 1)]
        for left, right in pairs:
            a, b = _composition(spec, left, x), _composition(spec, right, x)
            if a + b:
                out.append(_fail(f"{spec.name}: {left} = -{right}", x, -b, a))
        ledger = P_terms(spec, n, x)
        if len(ledger) != 4 * n + 4:
            out.append(_fail(f"{spec.name}: ledger has 4n+4 terms", x, 4 * n + 4, len(ledger)))
        for label in term_labels(n)[: 4 * n]:
            direct = _composition(spec, label, x)
            if ledger[label] != direct:
                out.append(_fail(f"{spec.name}: closed form of {label}", x, direct, ledger[label]))
        total = LinComb()
        for term in ledger.values():
            total = total + term
        P = P_apply(spec, x)
        if total != P:
            out.append(_fail(f"{spec.name}: sum of ledger = s d + d s", x, P, total))
        if spec is SIMPLE_CUNTZ:
            for i in range(1, n + 2):
                diag = _composition(spec, f"d{i}s{i}", x)
                if diag != x:
                    out.append(_fail(f"d{i}s{i}(x) = x for pi rho = id", x, x, diag))
    return out


@register("wrap-terms", aliases=("lemma-3.5",))
def _check_wrap(rng, n, p, trial, ctx):
    """The four wrap-around terms of s d + d s match their closed forms."""
    out = []
    for spec, t in _spec_cases(rng, n, p, trial, length_preserving=True):
        x = _single(t)
        ledger = P_terms(spec, n, x)
        for label in term_labels(n)[4 * n :]:
            direct = _composition(spec, label, x)
            if ledger[label] != direct:
                out.append(_fail(f"{spec.name}: closed form of {label}", x, direct, ledger[label]))
    return out


def _derivation_fail(rho, a, b):
    ab = a.mul(b)
    lhs = LinComb() if ab is None else rho(ab)
    rhs = left_act(a, rho(b)) + right_act(rho(a), b)
    if lhs != rhs:
        return _fail("rho(ab) = a rho(b) + rho(a) b", (a, b), rhs, lhs)
    return None


def _no_transition(a: CuntzMonomial, b: CuntzMonomial) -> bool:
    return not (a.beta and b.alpha)


@register("split-derivation", degrees=(1,), aliases=("lemma-5.8",))
def _check_split_derivation(rng, n, p, trial, ctx):
    """Long splits are derivations across no-transition products (always, for free words)."""
    rho_c = LONG_CUNTZ.apply
    rho_f = LONG_FREE.apply
    out = []
    if trial == 0:
        monos = _all_monomials(4, 2)
        for a, b in itertools.product(monos, repeat=2):
            if _no_transition(a, b):
                f = _derivation_fail(rho_c, a, b)
                if f:
                    out.append(f)
        words = [FreeWord(wd) for wd in _all_words(4, 2)]
        for a, b in itertools.product(words, repeat=2):
            f = _derivation_fail(rho_f, a, b)
            if f:
                out.append(f)
    a = rand_monomial(rng, p.max_len + 1, p.index_bound)
    b = rand_monomial(rng, p.max_len + 1, p.index_bound)
    if a.beta and b.alpha:
        b = CuntzMonomial((), b.beta) if rng.random() < 0.5 else b
        a = CuntzMonomial(a.alpha, ()) if b.alpha else a
    f = _derivation_fail(rho_c, a, b)
    if f:
        out.append(f)
    u = rand_free_word(rng, p.max_len + 1, p.index_bound)
    v = rand_free_word(rng, p.max_len + 1, p.index_bound)
    f = _derivation_fail(rho_f, u, v)
    if f:
        out.append(f)
    return out


@register("split-sections", degrees=(1,))
def _check_sections(rng, n, p, trial, ctx):
    """pi rho = id for the simple split; pi rho = l(a) a for the long splits."""
    out = []
    a = rand_monomial(rng, p.max_len + 1, p.index_bound)
    v = rand_free_word(rng, p.max_len + 1, p.index_bound)
    for spec, m in ((SIMPLE_CUNTZ, a), (LONG_CUNTZ, a), (LONG_FREE, v)):
        got = pi_multiply(spec.apply(m))
        want = LinComb({m: 1 if spec is SIMPLE_CUNTZ else m.length()})
        if got != want:
            out.append(_fail(f"{spec.name}: pi rho(a)", LinComb({(m,): 1}), want, got))
    return out


def _support_transitions_ok(z: LinComb, bound: int) -> Optional[tuple]:
    for t in z:
        if transition_profile(t).k > bound:
            return t
    return None


@register("transition-reduction")
def _check_k_transitions(rng, n, p, trial, ctx):
    """N(P x - k x) lives on tensors with at most k-1 transitions."""
    out = []
    for k in range(n + 2):
        t = rand_tensor(p, rng, n, transitions=k)
        prof = transition_profile(t)
        if prof.k != k:
            out.append(_fail("generator honours transition count", t, k, prof.k))
            continue
        for j in range(1, n + 1):
            if transition_profile(chains._rotate(t, j)) != prof:
                out.append(_fail("profile is rotation invariant", t, prof, transition_profile(chains._rotate(t, j))))
        x = _single(t)
        z = cyclic_norm(P_apply(SIMPLE_CUNTZ, x) - x.scale(k))
        bad = _support_transitions_ok(z, k - 1)
        if bad is not None:
            out.append(_fail(f"N(P x - {k} x) has <= {k - 1} transitions", x, f"<= {k - 1}", _single(bad)))
    return out


@register("phi-no-transitions", degrees=(1, 2), trials=50)
def _check_phi(rng, n, p, trial, ctx):
    """N(Phi x) lives on tensors with no transitions."""
    t = rand_tensor(p, rng, n)
    z = cyclic_norm(phi_apply(_single(t)))
    bad = _support_transitions_ok(z, 0)
    if bad is not None:
        return [_fail("N(Phi x) has no transitions", t, 0, _single(bad))]
    return []


@register("second-reduction")
def _check_second_reduction(rng, n, p, trial, ctx):
    """(r d + d r) x is cyclically equivalent to x (no-transition Cuntz tensors, all free-word tensors)."""
    out = []
    flat = GenParams(p.seed, n, p.max_len, p.index_bound, no_transition=True)
    t = rand_tensor(flat, rng, n)
    while chain_length(t) == 0:
        t = rand_tensor(flat, rng, n)
    fw = rand_free_tensor(p, rng, n)
    while chain_length(fw) == 0:
        fw = rand_free_tensor(p, rng, n)
    for spec, tt in ((LONG_CUNTZ, t), (LONG_FREE, fw)):
        x = _single(tt)
        z = cyclic_norm(P_apply(spec, x) - x)
        if z:
            out.append(_fail(f"{spec.name}: N((r d + d r) x - x) = 0", x, LinComb(), z))
        for i in range(n + 1):
            for face in face_map(i, x):
                if chain_length(face) != chain_length(tt):
                    out.append(_fail("faces preserve length", x, chain_length(tt), chain_length(face)))
    return out


@register("phi-homotopy", degrees=(1, 2))
def _check_phi_homotopy(rng, n, p, trial, ctx):
    """Phi = I - (s~ d + d s~)."""
    x = rand_chain(p, rng, n, terms=2)
    h = phi_homotopy(n)
    rhs = x - (h(boundary(x)) + boundary(h(x)))
    lhs = phi_apply(x)
    return [] if lhs == rhs else [_fail("Phi x = x - (s~ d + d s~) x", x, rhs, lhs)]


# ------------------------------------------------------------------ traces


def _random_pair(rng, p) -> TracePair:
    lam = rng.randint(-2, 2)
    vals_p = {rand_word(rng, rng.randint(1, 3), p.index_bound): rng.randint(-3, 3) for _ in range(6)}
    vals_q = {rand_word(rng, rng.randint(1, 3), p.index_bound): rng.randint(-3, 3) for _ in range(6)}
    return TracePair(class_functional(vals_p, lam), class_functional(vals_q, lam), lam)


@register("traces")
def _check_traces(rng, n, p, trial, ctx):
    """Traces commute products; trace powers are cyclic cocycles; d kills the all-units tensor."""
    out = []
    lam = rng.randint(-3, 3) or 1
    pair = _random_pair(rng, p)
    for tau in (trace_cuntz(lam), trace_from_pair(pair)):
        a = rand_monomial(rng, p.max_len + 1, p.index_bound)
        b = rand_monomial(rng, p.max_len + 1, p.index_bound)
        if rng.random() < 0.5 and b.alpha:
            # bias towards nonzero products
            a = CuntzMonomial(a.alpha, b.alpha[: rng.randint(0, len(b.alpha))])
        ab, ba = trace_value(tau, a.mul(b)), trace_value(tau, b.mul(a))
        if ab != ba:
            out.append(_fail("tau(ab) = tau(ba)", (a, b), ab, ba))
    tp = trace_from_pair(pair)
    word = rand_word(rng, rng.randint(0, 3), p.index_bound)
    if tp.at((CuntzMonomial(word, ()),)) != pair.tau_p(word) or tp.at((CuntzMonomial((), word),)) != pair.tau_q(word):
        out.append(_fail("restrictions recover tau_p, tau_q", LinComb({(CuntzMonomial(word, ()),): 1}), "tau_p/tau_q", "mismatch"))
    even = 2 * n
    tau_n = trace_power(trace_cuntz(lam), even)
    x = rand_chain(p, rng, even, terms=2)
    if tau_n(cyclic_shift(x)) != tau_n(x):
        out.append(_fail(f"tau^({even}) is cyclic", x, tau_n(x), tau_n(cyclic_shift(x))))
    y = rand_chain(p, rng, even + 1, terms=2)
    if tau_n(boundary(y)) != 0:
        out.append(_fail(f"tau^({even}) kills boundaries", y, 0, tau_n(boundary(y))))
    du = boundary(_single(units(even + 1, CUNTZ_UNIT)))
    if du:
        out.append(_fail("d(1 (x) ... (x) 1) = 0 in even target degree", units(even + 1, CUNTZ_UNIT), LinComb(), du))
    return out


@register("cobound-pipeline", degrees=(1, 2))
def _check_pipeline(rng, n, p, trial, ctx):
    """phi = delta chi + c tau^(n): recover c, cobound the rest with zero residual."""
    block = trial // 10
    key = (n, block)
    out = []
    if key not in ctx:
        brng = trial_rng(p.seed, "cobound-pipeline", n, "block", block)
        c = brng.randint(-3, 3) if n % 2 == 0 else 0
        phi = rand_cocycle(p, n, c, seed=(p.seed, "chi", n, block))
        samples = [rand_chain(p, brng, n, terms=2) for _ in range(3)]
        if n % 2 == 0:
            lam, phi0 = one_normalize(phi)
            if lam != c:
                out.append(_fail("one_normalize recovers c", samples[0], c, lam))
        else:
            phi0 = phi
            val = phi(_single(units(n, CUNTZ_UNIT)))
            if val != 0:
                out.append(_fail("odd cyclic cocycle vanishes on units", units(n, CUNTZ_UNIT), 0, val))
        psi = cobound_normalized(phi0, samples=samples)
        ctx[key] = (phi0, psi, coboundary(psi))
    phi0, psi, dpsi = ctx[key]
    x = rand_chain(p, rng, n, terms=2)
    a, b = phi0(x), dpsi(x)
    if a != b:
        out.append(_fail("(phi0 - delta psi)(x) = 0", x, a, b))
    return out


# -------------------------------------------------------------- invariants


@register("invariants-projector", degrees=(1, 2, 3, 4), trials=25)
def _check_invariants(rng, n, p, trial, ctx):
    """Rotation average is idempotent; a layer functional is a trace iff it is rotation invariant."""
    k = n
    out = []
    x = LinComb({FreeWord(rand_word(rng, k, p.index_bound)): rng.randint(-3, 3) for _ in range(3)})
    px = invariant_project(x)
    if invariant_project(px) != px:
        out.append(_fail("project o project = project", element_chain(x), element_chain(px), element_chain(invariant_project(px))))
    words = list(itertools.product(range(1, p.index_bound + 1), repeat=k))
    table = {wd: rng.randint(-2, 2) for wd in words}
    if trial % 2:
        # force invariance by averaging over rotations
        table = {wd: Fraction(sum(table[wd[i:] + wd[:i]] for i in range(k)), k) for wd in words}

    def f(v: LinComb):
        return sum(c * table[m.word] for m, c in v.items())

    invariant = all(f(invariant_project(LinComb({FreeWord(wd): 1}))) == table[wd] for wd in words)
    trace_like = all(table[wd[i:] + wd[:i]] == table[wd] for wd in words for i in range(k))
    if invariant != trace_like:
        out.append(_fail("f = f o project iff f(uv) = f(vu)", element_chain(x), trace_like, invariant))
    if trial % 2 and not invariant:
        out.append(_fail("averaged functional is invariant", element_chain(x), True, invariant))
    return out


def element_chain(x: LinComb) -> LinComb:
    return LinComb.from_acc({(m,): c for m, c in x.items()})
