"""Splitting maps and the homotopy operators built from them.

A splitting map sends a basis monomial to a degree-1 chain.  Every map
used here has unit coefficients, so it is stored as a tuple of ``(u, v)``
pairs.  From a splitting map ``rho`` the operator ``s`` inserts
``(-1)^k rho(a_k)`` at every slot ``k``; in length-weighted mode the whole
sum is divided by the total length of the tensor, which is the second
reduction operator ``r`` (and its tensor-algebra twin).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, Tuple

from .algebra import LinComb
from .chains import _rotate, boundary, chain_length, degree
from .semigroup import CuntzMonomial, FreeWord

Split = Tuple[Tuple[object, object], ...]


@lru_cache(maxsize=None)
def split_simple(a: CuntzMonomial) -> Split:
    return ((CuntzMonomial(a.alpha, ()), CuntzMonomial((), a.beta)),)


@lru_cache(maxsize=None)
def split_long_cuntz(a: CuntzMonomial) -> Split:
    alpha, beta = a.alpha, a.beta
    out = []
    for k in range(len(alpha)):
        out.append((CuntzMonomial(alpha[:k], ()), CuntzMonomial(alpha[k:], beta)))
    for l in range(1, len(beta) + 1):
        out.append((CuntzMonomial(alpha, beta[l:]), CuntzMonomial((), beta[:l])))
    return tuple(out)


@lru_cache(maxsize=None)
def split_long_free(v: FreeWord) -> Split:
    word = v.word
    return tuple((FreeWord(word[:k]), FreeWord(word[k:])) for k in range(len(word)))


def _as_chain(split: Split) -> LinComb:
    acc: Dict = {}
    for pair in split:
        acc[pair] = acc.get(pair, 0) + 1
    return LinComb.from_acc(acc)


def rho_simple(a: CuntzMonomial) -> LinComb:
    """``p_alpha q_beta -> p_alpha (x) q_beta``."""
    return _as_chain(split_simple(a))


def rho_long_cuntz(a: CuntzMonomial) -> LinComb:
    """All splits of ``p_alpha q_beta`` at p-cuts and q-cuts (unnormalized).

    ``pi`` of the result is ``l(a) * a`` and ``rho(1) = 0``.
    """
    return _as_chain(split_long_cuntz(a))


def rho_long_free(v: FreeWord) -> LinComb:
    """All proper prefix splits ``v[:k] (x) v[k:]``, ``0 <= k < o(v)``."""
    return _as_chain(split_long_free(v))


@dataclass(frozen=True)
class SplitSpec:
    name: str
    splits: Callable[[object], Split]
    weighted: bool = False

    def apply(self, a) -> LinComb:
        return _as_chain(self.splits(a))

    def unweighted(self) -> "SplitSpec":
        return replace(self, weighted=False)

    def __repr__(self) -> str:
        mode = "length-weighted" if self.weighted else "none"
        return f"SplitSpec({self.name!r}, weight={mode})"


SIMPLE_CUNTZ = SplitSpec("simple-cuntz", split_simple, weighted=False)
LONG_CUNTZ = SplitSpec("long-cuntz", split_long_cuntz, weighted=True)
LONG_FREE = SplitSpec("long-free", split_long_free, weighted=True)

SPECS = {s.name: s for s in (SIMPLE_CUNTZ, LONG_CUNTZ, LONG_FREE)}


def _weight(spec: SplitSpec, t, c):
    """Per-tensor coefficient after length weighting; ``None`` means skip."""
    if not spec.weighted:
        return c
    length = chain_length(t)
    if length == 0:
        return None
    return Fraction(c) / length


def s_slot(spec: SplitSpec, k: int, x: LinComb) -> LinComb:
    """The single-slot operator ``s_k`` (slots are 1-based)."""
    acc: Dict = {}
    for t, c in x.items():
        if not 1 <= k <= len(t):
            raise ValueError(f"slot {k} out of range 1..{len(t)}")
        c = _weight(spec, t, c)
        if c is None:
            continue
        if k % 2:
            c = -c
        head, tail = t[: k - 1], t[k:]
        for u, v in spec.splits(t[k - 1]):
            key = head + (u, v) + tail
            acc[key] = acc.get(key, 0) + c
    return LinComb.from_acc(acc)


def s_apply(spec: SplitSpec, x: LinComb) -> LinComb:
    """``s = sum_k s_k`` (or ``r`` when the spec is length-weighted)."""
    acc: Dict = {}
    splits = spec.splits
    for t, c in x.items():
        c = _weight(spec, t, c)
        if c is None:
            continue
        for k in range(len(t)):
            ck = -c if k % 2 == 0 else c
            head, tail = t[:k], t[k + 1 :]
            for u, v in splits(t[k]):
                key = head + (u, v) + tail
                acc[key] = acc.get(key, 0) + ck
    return LinComb.from_acc(acc)


def _sd_ds(spec: SplitSpec, x: LinComb) -> LinComb:
    """``s d + d s``; in degree 0 only ``d s`` (there is nothing below degree 0)."""
    if not x:
        return LinComb()
    n = degree(x)
    up = boundary(s_apply(spec, x))
    if n == 0:
        return up
    return s_apply(spec, boundary(x)) + up


def P_apply(spec: SplitSpec, x: LinComb) -> LinComb:
    """``P = s^{n-1} d^{n-1} + d^n s^n`` on a chain of degree ``n >= 1``."""
    if x and degree(x) == 0:
        raise ValueError("P is defined on chains of degree >= 1")
    return _sd_ds(spec, x)


# The ledger of surviving terms of s d + d s.


def _rho(spec: SplitSpec, a) -> Split:
    return spec.splits(a)


def _place(acc: Dict, head, pairs, tail, c) -> None:
    for u, v in pairs:
        if u is None or v is None:
            continue
        key = head + (u, v) + tail
        acc[key] = acc.get(key, 0) + c


def _place_single(acc: Dict, key, c) -> None:
    acc[key] = acc.get(key, 0) + c


def _shift_into(acc: Dict, key, c) -> None:
    """Add ``c * t(key)``."""
    m = len(key)
    if (m - 1) % 2:
        c = -c
    rk = _rotate(key, 1)
    acc[rk] = acc.get(rk, 0) + c


def term_labels(n: int):
    """The ``4n + 4`` labels, in ledger order."""
    labels = []
    for i in range(1, n + 1):
        labels += [f"s{i}d{i}", f"d{i}s{i}", f"d{i}s{i + 1}", f"d{i + 1}s{i}"]
    labels += [f"s{n}d0", f"d{n + 1}s{n + 1}", "d0s1", f"d0s{n + 1}"]
    return labels


def P_terms(spec: SplitSpec, n: int, x: LinComb) -> Dict[str, LinComb]:
    """The ``4n + 4`` terms of ``s d + d s`` left after pairwise cancellation.

    Each term is built from its closed form, not by composing operators:

    * ``s_i d_i``:       ``... (x) rho(a_i a_{i+1}) (x) ...``
    * ``d_i s_i``:       ``... (x) pi rho(a_i) (x) a_{i+1} ...``
    * ``d_i s_{i+1}``:   ``- ... (x) a_i rho(a_{i+1}) (x) ...``
    * ``d_{i+1} s_i``:   ``- ... (x) rho(a_i) a_{i+1} (x) ...``

    and the four wrap-around terms, two of them written through ``t``.
    Labels read as compositions, e.g. ``"d0s1"`` is ``d_0 s_1``.

    In length-weighted mode every term carries ``1/l(x)``; the sum then
    equals ``r d + d r`` only where face maps preserve length (tensors with
    no transitions, or any tensor of free words).
    """
    if n < 1:
        raise ValueError("the term ledger is defined for n >= 1")
    labels = term_labels(n)
    accs: Dict[str, Dict] = {lab: {} for lab in labels}
    for t, c in x.items():
        if len(t) != n + 1:
            raise ValueError(f"expected degree {n}, got a tensor with {len(t)} factors")
        c = _weight(spec, t, c)
        if c is None:
            continue
        a = t
        for i in range(1, n + 1):
            head, tail = a[: i - 1], a[i + 1 :]
            ai, aj = a[i - 1], a[i]
            prod = ai.mul(aj)
            if prod is not None:
                _place(accs[f"s{i}d{i}"], head, _rho(spec, prod), tail, c)
            for u, v in _rho(spec, ai):
                uv = u.mul(v)
                if uv is not None:
                    _place_single(accs[f"d{i}s{i}"], head + (uv, aj) + tail, c)
            _place(accs[f"d{i}s{i + 1}"], head, ((ai.mul(u), v) for u, v in _rho(spec, aj)), tail, -c)
            _place(accs[f"d{i + 1}s{i}"], head, ((u, v.mul(aj)) for u, v in _rho(spec, ai)), tail, -c)
        mid = a[1:n]
        first, last = a[0], a[n]
        sgn = c if n % 2 == 0 else -c
        prod = last.mul(first)
        if prod is not None:
            _place(accs[f"s{n}d0"], mid, _rho(spec, prod), (), sgn)
        for u, v in _rho(spec, last):
            uv = u.mul(v)
            if uv is not None:
                _shift_into(accs[f"d{n + 1}s{n + 1}"], mid + (uv, first), sgn)
        tmp: Dict = {}
        _place(tmp, mid, ((last.mul(u), v) for u, v in _rho(spec, first)), (), -sgn)
        for key, cc in tmp.items():
            _shift_into(accs["d0s1"], key, cc)
        _place(accs[f"d0s{n + 1}"], mid, ((u, v.mul(first)) for u, v in _rho(spec, last)), (), -sgn)
    return {lab: LinComb.from_acc(acc) for lab, acc in accs.items()}


# Phi and its homotopy.


def _F_scaled(spec: SplitSpec, j: int, x: LinComb) -> LinComb:
    """``(j I - P) x``."""
    return x.scale(j) - _sd_ds(spec, x)


def phi_apply(x: LinComb, factors: int = None, spec: SplitSpec = SIMPLE_CUNTZ) -> LinComb:
    """``Phi = prod_{j=1}^{n+1} (I - P/j)`` evaluated exactly.

    ``factors`` defaults to ``n + 1`` for a chain of degree ``n``.  The
    product is computed as ``(1/(n+1)!) prod (jI - P)`` so that the whole
    expansion stays in integers until the last step.
    """
    if not x:
        return LinComb()
    n = degree(x)
    if factors is None:
        if n < 1:
            raise ValueError("Phi is defined on chains of degree >= 1")
        factors = n + 1
    y = x
    for j in range(1, factors + 1):
        y = _F_scaled(spec, j, y)
    return y / factorial(factors)


class PhiHomotopy:
    """The operator ``s~`` with ``Phi = I - (s~ d + d s~)``.

    With ``F_j = I - P/j`` (homotopy ``s/j``) and the rule
    ``homotopy(FG) = homotopy(G) + homotopy(F) o G``, which is valid since
    ``P`` commutes with ``d``::

        s~ = sum_{j=1}^{n+1} (1/j) s o prod_{i>j} F_i

    The number of factors is fixed at construction, so the same ``s~`` acts
    consistently on degrees ``n - 1`` and ``n``.
    """

    def __init__(self, n: int, spec: SplitSpec = SIMPLE_CUNTZ):
        if n < 1:
            raise ValueError("Phi homotopy needs n >= 1")
        self.n = n
        self.spec = spec

    def __call__(self, x: LinComb) -> LinComb:
        if not x:
            return LinComb()
        top = self.n + 1
        total = LinComb()
        h = x  # prod_{i>j} (iI - P) x, starting from j = n + 1
        for j in range(top, 0, -1):
            total = total + s_apply(self.spec, h).scale(factorial(j - 1))
            if j > 1:
                h = _F_scaled(self.spec, j, h)
        return total / factorial(top)

    def __repr__(self) -> str:
        return f"PhiHomotopy(n={self.n})"


def phi_homotopy(n: int, spec: SplitSpec = SIMPLE_CUNTZ) -> PhiHomotopy:
    return PhiHomotopy(n, spec)


def r_apply(x: LinComb) -> LinComb:
    """Second-reduction operator ``r`` for Cuntz or free-word chains."""
    fam = _family_spec(x)
    return s_apply(fam, x)


def _family_spec(x: LinComb) -> SplitSpec:
    for t in x:
        return LONG_FREE if isinstance(t[0], FreeWord) else LONG_CUNTZ
    return LONG_CUNTZ
