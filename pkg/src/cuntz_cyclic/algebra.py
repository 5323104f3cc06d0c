"""Exact sparse linear combinations and the bilinear products on them.

``LinComb`` is the single value type used for algebra elements (keys are
monomials), chains (keys are tuples of monomials) and anything else with a
hashable basis.  Coefficients are exact rationals: plain ``int`` where
possible, ``fractions.Fraction`` otherwise.  No zero coefficient is ever
stored.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Hashable, Iterable, Iterator, Mapping, Tuple, Union

Scalar = Union[int, Fraction]


def as_scalar(value) -> Scalar:
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        value = Fraction(value)
    elif isinstance(value, str):
        value = Fraction(value)
    else:
        raise TypeError(f"not an exact rational: {value!r}")
    return int(value) if value.denominator == 1 else value


def _tidy(c: Scalar) -> Scalar:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LinComb:
    """Finitely supported map ``basis -> Scalar``.

    Construct from a mapping or an iterable of ``(basis, coefficient)``
    pairs; repeated keys are summed and zeros dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable[Tuple[Hashable, Scalar]], None] = None):
        acc: Dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                c = as_scalar(c)
                if c:
                    acc[key] = acc.get(key, 0) + c
        self._terms = {k: _tidy(c) for k, c in acc.items() if c}

    @classmethod
    def from_acc(cls, acc: Dict) -> "LinComb":
        """Adopt an accumulator dict (already exact scalars), dropping zeros."""
        new = cls.__new__(cls)
        new._terms = {k: _tidy(c) for k, c in acc.items() if c}
        return new

    @classmethod
    def basis(cls, key, coeff: Scalar = 1) -> "LinComb":
        return cls({key: coeff})

    # container protocol

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def coeff(self, key) -> Scalar:
        return self._terms.get(key, 0)

    def support(self):
        return set(self._terms)

    # vector space structure

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return LinComb.from_acc(acc)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) - c
        return LinComb.from_acc(acc)

    def __neg__(self) -> "LinComb":
        return LinComb.from_acc({k: -c for k, c in self._terms.items()})

    def scale(self, s) -> "LinComb":
        s = as_scalar(s)
        if not s:
            return LinComb()
        return LinComb.from_acc({k: c * s for k, c in self._terms.items()})

    def __mul__(self, s) -> "LinComb":
        if isinstance(s, LinComb):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def __truediv__(self, s) -> "LinComb":
        return self.scale(Fraction(1) / as_scalar(s))

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def map(self, f: Callable[[Hashable], "LinComb"]) -> "LinComb":
        """Linear extension of ``f`` defined on basis elements."""
        acc: Dict = {}
        for k, c in self._terms.items():
            for k2, c2 in f(k).items():
                acc[k2] = acc.get(k2, 0) + c * c2
        return LinComb.from_acc(acc)

    def __repr__(self) -> str:
        from .notation import format_lincomb

        return f"LinComb({format_lincomb(self)!r})"


def zero() -> LinComb:
    return LinComb()


def lin_mul(x: LinComb, y: LinComb) -> LinComb:
    """Bilinear extension of the monomial product; zero products are dropped."""
    acc: Dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            ab = a.mul(b)
            if ab is not None:
                acc[ab] = acc.get(ab, 0) + ca * cb
    return LinComb.from_acc(acc)


def pi_multiply(c: LinComb) -> LinComb:
    """The multiplication map ``a (x) b -> ab`` on degree-1 chains."""
    acc: Dict = {}
    for t, coeff in c.items():
        if len(t) != 2:
            raise ValueError(f"pi expects a degree-1 chain, got a tensor with {len(t)} factors")
        ab = t[0].mul(t[1])
        if ab is not None:
            acc[ab] = acc.get(ab, 0) + coeff
    return LinComb.from_acc(acc)


def left_act(a, c: LinComb) -> LinComb:
    """``a . (u (x) v) = au (x) v`` extended linearly over a degree-1 chain."""
    acc: Dict = {}
    for (u, v), coeff in c.items():
        au = a.mul(u)
        if au is not None:
            key = (au, v)
            acc[key] = acc.get(key, 0) + coeff
    return LinComb.from_acc(acc)


def right_act(c: LinComb, b) -> LinComb:
    """``(u (x) v) . b = u (x) vb`` extended linearly over a degree-1 chain."""
    acc: Dict = {}
    for (u, v), coeff in c.items():
        vb = v.mul(b)
        if vb is not None:
            key = (u, vb)
            acc[key] = acc.get(key, 0) + coeff
    return LinComb.from_acc(acc)


def element_to_chain(x: LinComb) -> LinComb:
    """View an algebra element as a degree-0 chain."""
    return LinComb.from_acc({(a,): c for a, c in x.items()})


def chain_to_element(x: LinComb) -> LinComb:
    acc = {}
    for t, c in x.items():
        if len(t) != 1:
            raise ValueError("not a degree-0 chain")
        acc[t[0]] = c
    return LinComb.from_acc(acc)
