"""Independent reference models used to validate the library.

Nothing here imports the operator modules: monomials are modelled as
partial maps on index words, chains as plain dicts, and every operator is
written straight from its defining formula with Fraction arithmetic.
"""

from fractions import Fraction
from itertools import product

import sympy

from cuntz_cyclic.semigroup import CuntzMonomial, FreeWord


# Cuntz monomials as partial maps: p_a q_b sends b + w to a + w.


def as_partial_map(a: CuntzMonomial, m: int, depth: int) -> dict:
    table = {}
    for k in range(depth + 1):
        for word in product(range(1, m + 1), repeat=k):
            if word[: len(a.beta)] == a.beta:
                table[word] = a.alpha + word[len(a.beta) :]
    return table


def monomial_action(a: CuntzMonomial):
    def act(word):
        if word[: len(a.beta)] != a.beta:
            return None
        return a.alpha + word[len(a.beta) :]

    return act


def product_by_action(a: CuntzMonomial, b: CuntzMonomial, m: int, depth: int) -> dict:
    """The partial map ``w -> a(b(w))`` restricted to words of length <= depth."""
    act = monomial_action(a)
    out = {}
    for word, mid in as_partial_map(b, m, depth).items():
        image = act(mid)
        if image is not None:
            out[word] = image
    return out


# Chains as {tuple: Fraction} dicts.


def _add(acc, key, c):
    acc[key] = acc.get(key, 0) + c
    if acc[key] == 0:
        del acc[key]


def mul_or_none(a, b):
    if isinstance(a, FreeWord):
        return FreeWord(a.word + b.word)
    # the middle q_{a.beta} p_{b.alpha} cancels a common prefix or vanishes
    if b.alpha[: len(a.beta)] == a.beta:
        return CuntzMonomial(a.alpha + b.alpha[len(a.beta) :], b.beta)
    if a.beta[: len(b.alpha)] == b.alpha:
        return CuntzMonomial(a.alpha, b.beta + a.beta[len(b.alpha) :])
    return None


def naive_boundary(x: dict) -> dict:
    """d(a1..a_{m}) = a2..a_{m-1} (a_m a1) + sum_{i=1}^{m-1} (-1)^i a1..(a_i a_{i+1})..a_m."""
    out = {}
    for t, c in x.items():
        m = len(t)
        prod = mul_or_none(t[m - 1], t[0])
        if prod is not None:
            _add(out, tuple(t[1 : m - 1]) + (prod,), Fraction(c))
        for i in range(1, m):
            prod = mul_or_none(t[i - 1], t[i])
            if prod is not None:
                _add(out, tuple(t[: i - 1]) + (prod,) + tuple(t[i + 1 :]), Fraction((-1) ** i * c))
    return out


def naive_shift(x: dict) -> dict:
    out = {}
    for t, c in x.items():
        n = len(t) - 1
        _add(out, (t[-1],) + tuple(t[:-1]), Fraction((-1) ** n * c))
    return out


def naive_norm(x: dict) -> dict:
    out, y = {}, dict(x)
    n = len(next(iter(x))) - 1 if x else 0
    for _ in range(n + 1):
        for k, c in y.items():
            _add(out, k, c)
        y = naive_shift(y)
    return out


def naive_rho_simple(a):
    return {(CuntzMonomial(a.alpha, ()), CuntzMonomial((), a.beta)): 1}


def naive_rho_long(a):
    out = {}
    if isinstance(a, FreeWord):
        for k in range(len(a.word)):
            _add(out, (FreeWord(a.word[:k]), FreeWord(a.word[k:])), 1)
        return out
    for k in range(len(a.alpha)):
        _add(out, (CuntzMonomial(a.alpha[:k], ()), CuntzMonomial(a.alpha[k:], a.beta)), 1)
    for l in range(1, len(a.beta) + 1):
        _add(out, (CuntzMonomial(a.alpha, a.beta[l:]), CuntzMonomial((), a.beta[:l])), 1)
    return out


def naive_s(x: dict, rho, weighted=False) -> dict:
    """s(a1..a_m) = sum_k (-1)^k a1..rho(a_k)..a_m, optionally divided by the total length."""
    out = {}
    for t, c in x.items():
        c = Fraction(c)
        if weighted:
            length = sum(len(a.word) if isinstance(a, FreeWord) else len(a.alpha) + len(a.beta) for a in t)
            if length == 0:
                continue
            c /= length
        for k in range(1, len(t) + 1):
            for (u, v), r in rho(t[k - 1]).items():
                _add(out, tuple(t[: k - 1]) + (u, v) + tuple(t[k:]), (-1) ** k * c * r)
    return out


def naive_P(x: dict, rho=naive_rho_simple, weighted=False) -> dict:
    out = {}
    n = len(next(iter(x))) - 1 if x else 0
    if n >= 1:
        for k, c in naive_s(naive_boundary(x), rho, weighted).items():
            _add(out, k, c)
    for k, c in naive_boundary(naive_s(x, rho, weighted)).items():
        _add(out, k, c)
    return out


def naive_phi(x: dict) -> dict:
    """prod_{j=1}^{n+1} (I - P/j) with plain Fraction arithmetic."""
    n = len(next(iter(x))) - 1 if x else 0
    y = dict(x)
    for j in range(1, n + 2):
        py = naive_P(y)
        z = dict(y)
        for k, c in py.items():
            _add(z, k, -Fraction(c) / j)
        y = z
    return y


# Linear algebra membership with a dense sympy Matrix.


def in_image_I_minus_t(z: dict) -> bool:
    if not z:
        return True
    basis = []
    for t in z:
        for j in range(len(t)):
            r = tuple(t[j:]) + tuple(t[:j])
            if r not in basis:
                basis.append(r)
    pos = {b: i for i, b in enumerate(basis)}
    A = sympy.zeros(len(basis), len(basis))
    for col, b in enumerate(basis):
        A[col, col] += 1
        for key, c in naive_shift({b: 1}).items():
            A[pos[key], col] -= sympy.Rational(c.numerator, c.denominator)
    rhs = sympy.Matrix([sympy.Rational(Fraction(z.get(b, 0)).numerator, Fraction(z.get(b, 0)).denominator) for b in basis])
    return A.rank() == A.row_join(rhs).rank()


def as_dict(x) -> dict:
    return {k: Fraction(c) for k, c in x.items()}
