"""Cochains as evaluation rules, traces, and the cobounding pipeline.

A cochain is a linear functional on chains given by its value on basis
tensors.  Tables are not enough: the coboundary of a finitely supported
table has infinite support (every product collapsing to the unit
contributes), so cochains here are lazy rules, memoized per tensor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

from .algebra import LinComb, Scalar, as_scalar
from .chains import boundary, cyclic_norm, cyclic_shift, degree, units
from .homotopy import LONG_CUNTZ, SIMPLE_CUNTZ, phi_homotopy, s_apply
from .semigroup import CUNTZ_UNIT, CuntzMonomial, FreeWord, Word


class Cochain:
    """A degree-``n`` functional; ``T(x)`` evaluates it on a chain."""

    __slots__ = ("degree", "kind", "_rule", "_cache")

    def __init__(self, degree: int, rule: Callable[[tuple], Scalar], kind: str = "rule"):
        self.degree = degree
        self.kind = kind
        self._rule = rule
        self._cache: Dict = {}

    def at(self, t: tuple) -> Scalar:
        """Value on one basis tensor."""
        try:
            return self._cache[t]
        except KeyError:
            pass
        value = self._rule(t)
        self._cache[t] = value
        return value

    def __call__(self, x: LinComb) -> Scalar:
        return eval_cochain(self, x)

    def __add__(self, other: "Cochain") -> "Cochain":
        return combine([(1, self), (1, other)])

    def __sub__(self, other: "Cochain") -> "Cochain":
        return combine([(1, self), (-1, other)])

    def __neg__(self) -> "Cochain":
        return combine([(-1, self)])

    def __rmul__(self, c) -> "Cochain":
        return combine([(c, self)])

    def __repr__(self) -> str:
        return f"Cochain(degree={self.degree}, kind={self.kind!r})"


def eval_cochain(T: Cochain, x: LinComb) -> Scalar:
    if not x:
        return 0
    n = degree(x)
    if n != T.degree:
        raise ValueError(f"cochain of degree {T.degree} applied to a chain of degree {n}")
    total = 0
    for t, c in x.items():
        v = T.at(t)
        if v:
            total += c * v
    if isinstance(total, Fraction) and total.denominator == 1:
        return total.numerator
    return total


def zero_cochain(n: int) -> Cochain:
    return Cochain(n, lambda t: 0, "table")


def table_cochain(n: int, table: Mapping[tuple, Scalar]) -> Cochain:
    values = {t: as_scalar(v) for t, v in table.items()}
    for t in values:
        if len(t) != n + 1:
            raise ValueError(f"table key {t!r} is not a degree-{n} tensor")
    return Cochain(n, lambda t: values.get(t, 0), "table")


def combine(terms: Iterable[Tuple[Scalar, Cochain]]) -> Cochain:
    terms = [(as_scalar(c), T) for c, T in terms]
    degrees = {T.degree for _, T in terms}
    if len(degrees) != 1:
        raise ValueError(f"cannot combine cochains of degrees {sorted(degrees)}")
    n = degrees.pop()

    def rule(t):
        return sum(c * T.at(t) for c, T in terms if c)

    return Cochain(n, rule, "combination")


def pullback(T: Cochain, op: Callable[[LinComb], LinComb], n: int) -> Cochain:
    """``T o op`` as a degree-``n`` cochain."""
    return Cochain(n, lambda t: eval_cochain(T, op(LinComb.from_acc({t: 1}))), "pullback")


def coboundary(T: Cochain) -> Cochain:
    """``(delta T)(x) = T(d x)``."""
    return pullback(T, boundary, T.degree + 1)


def symmetrize_cochain(T: Cochain) -> Cochain:
    """Projection ``(1/(n+1)) sum_j T o t^j`` onto cyclic cochains."""
    n = T.degree
    return Cochain(
        n,
        lambda t: Fraction(eval_cochain(T, cyclic_norm(LinComb.from_acc({t: 1})))) / (n + 1),
        "combination",
    )


def is_cyclic_on(T: Cochain, samples: Iterable[LinComb]) -> bool:
    return all(T(cyclic_shift(x)) == T(x) for x in samples)


# Traces.


def trace_cuntz(lam: Scalar = 1) -> Cochain:
    """Diagonal trace: ``tau(p_b q_b) = lam`` for every word ``b``, zero elsewhere."""
    lam = as_scalar(lam)

    def rule(t):
        (a,) = t
        return lam if a.alpha == a.beta else 0

    return Cochain(0, rule, "trace")


def trace_free(lam: Scalar = 1) -> Cochain:
    """The trace on the tensor algebra that only sees the unit."""
    lam = as_scalar(lam)
    return Cochain(0, lambda t: lam if not t[0].word else 0, "trace")


def trace_value(tau: Cochain, a) -> Scalar:
    """``tau`` on a single monomial (``None`` is the zero product)."""
    if a is None:
        return 0
    return tau.at((a,))


def trace_power(tau: Cochain, n: int) -> Cochain:
    """``tau^(n)(a1 (x) ... (x) a_{n+1}) = tau(a1 a2 ... a_{n+1})`` for even ``n``."""
    if tau.degree != 0:
        raise ValueError("trace_power needs a degree-0 cochain")
    if n % 2:
        raise ValueError(f"trace powers exist in even degree only, got {n}")

    def rule(t):
        prod = t[0]
        for a in t[1:]:
            prod = prod.mul(a)
            if prod is None:
                return 0
        return tau.at((prod,))

    return Cochain(n, rule, "trace-power")


def _units_chain(n: int, unit=CUNTZ_UNIT) -> LinComb:
    return LinComb.from_acc({units(n, unit): 1})


def one_normalize(phi: Cochain, unit=CUNTZ_UNIT) -> Tuple[Scalar, Cochain]:
    """Split off the trace part: ``phi = lam * tau_1^(2n) + phi0``.

    ``lam = phi(1 (x) ... (x) 1)`` and ``phi0`` vanishes on the all-units
    tensor.
    """
    n = phi.degree
    if n % 2:
        raise ValueError(f"one_normalize needs even degree, got {n}")
    lam = phi(_units_chain(n, unit))
    tau = trace_cuntz(1) if isinstance(unit, CuntzMonomial) else trace_free(1)
    if not lam:
        return 0, phi
    return lam, combine([(1, phi), (-lam, trace_power(tau, n))])


def cobound_normalized(
    phi: Cochain,
    samples: Sequence[LinComb] = (),
    cocycle_samples: Sequence[LinComb] = (),
) -> Cochain:
    """Cochain ``psi`` of degree ``n - 1`` with ``phi = delta psi``.

    ``phi`` must be a 1-normalized cyclic cocycle on the reduced Cuntz
    algebra.  Cyclicity and the cocycle condition are checked only on the
    given samples (degree ``n`` and ``n + 1`` chains respectively).

    ``psi = psi1 + psi2`` with ``psi1 = phi o r`` (second reduction) and
    ``psi2 = (phi - delta psi1) o s~`` where ``Phi = I - (s~ d + d s~)``.
    """
    n = phi.degree
    if n < 1:
        raise ValueError("cobounding needs degree >= 1")
    if phi(_units_chain(n)) != 0:
        raise ValueError("phi is not 1-normalized")
    for x in samples:
        if phi(cyclic_shift(x)) != phi(x):
            raise ValueError("phi is not cyclic on the sample set")
    for y in cocycle_samples:
        if phi(boundary(y)) != 0:
            raise ValueError("phi is not a cocycle on the sample set")
    psi1 = pullback(phi, lambda x: s_apply(LONG_CUNTZ, x), n - 1)
    phi1 = combine([(1, phi), (-1, coboundary(psi1))])
    psi2 = pullback(phi1, phi_homotopy(n, SIMPLE_CUNTZ), n - 1)
    return combine([(1, psi1), (1, psi2)])


@dataclass(frozen=True)
class TracePair:
    """Traces on the p- and q-copies of the free semigroup, agreeing at the unit.

    ``tau_p`` and ``tau_q`` take index words; they should be constant on
    rotation classes.
    """

    tau_p: Callable[[Word], Scalar]
    tau_q: Callable[[Word], Scalar]
    unit_value: Scalar = 0

    def __post_init__(self):
        lam = as_scalar(self.unit_value)
        if as_scalar(self.tau_p(())) != lam or as_scalar(self.tau_q(())) != lam:
            raise ValueError("tau_p and tau_q must agree with unit_value on the unit")


def trace_from_pair(pair: TracePair) -> Cochain:
    """Trace on the reduced Cuntz algebra with the given restrictions.

    ``tau(p_a q_b) = tau(q_b p_a)`` and ``q_b p_a`` is ``p_a'``, ``q_b'``,
    the unit, or zero.
    """
    lam = as_scalar(pair.unit_value)

    def rule(t):
        (m,) = t
        alpha, beta = m.alpha, m.beta
        na, nb = len(alpha), len(beta)
        if na >= nb:
            if alpha[:nb] != beta:
                return 0
            rest = alpha[nb:]
            return as_scalar(pair.tau_p(rest)) if rest else lam
        if beta[:na] != alpha:
            return 0
        return as_scalar(pair.tau_q(beta[na:]))

    return Cochain(0, rule, "trace")


def canonical_rotation(word: Word) -> Word:
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def class_functional(values: Mapping[Word, Scalar], unit_value: Scalar = 0) -> Callable[[Word], Scalar]:
    """Rotation-invariant functional on words from values on class representatives."""
    table = {canonical_rotation(tuple(k)): as_scalar(v) for k, v in values.items()}
    lam = as_scalar(unit_value)

    def f(word: Word) -> Scalar:
        if not word:
            return lam
        return table.get(canonical_rotation(tuple(word)), 0)

    return f


# Invariants of the rotation on a word layer.


def rotate_word(word: Word) -> Word:
    """``v1 ... vk -> vk v1 ... v_{k-1}``."""
    return word[-1:] + word[:-1] if word else word


def invariant_project(x: LinComb) -> LinComb:
    """Average of a homogeneous word-layer element over its ``k`` rotations."""
    lengths = {len(v.word) for v in x}
    if len(lengths) > 1:
        raise ValueError(f"mixed word lengths {sorted(lengths)}")
    if not lengths:
        return LinComb()
    k = lengths.pop()
    if k == 0:
        return x
    acc: Dict = {}
    for v, c in x.items():
        word = v.word
        for _ in range(k):
            key = FreeWord(word)
            acc[key] = acc.get(key, 0) + Fraction(c, 1) / k
            word = rotate_word(word)
    return LinComb.from_acc(acc)
