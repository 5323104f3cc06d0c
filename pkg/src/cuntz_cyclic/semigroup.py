"""Word arithmetic for the Cuntz semigroup and the free semigroup.

A Cuntz monomial ``p_alpha q_beta`` is stored as the pair of index words
``(alpha, beta)``.  The semigroup zero is never stored: a vanishing product
is returned as ``None`` and becomes the empty linear combination one level
up, which is exactly the reduced algebra ``l1(O_m) / C z0``.

Generator indices are arbitrary positive integers, so every ``m``
(including ``m = infinity``) is covered without configuration.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence, Tuple

Word = Tuple[int, ...]


def _word(indices: Sequence[int]) -> Word:
    word = tuple(int(i) for i in indices)
    for i in word:
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
    return word


class CuntzMonomial(NamedTuple):
    """The basis element ``p_alpha q_beta``; ``alpha = beta = ()`` is the unit."""

    alpha: Word = ()
    beta: Word = ()

    @classmethod
    def of(cls, alpha: Sequence[int] = (), beta: Sequence[int] = ()) -> "CuntzMonomial":
        return cls(_word(alpha), _word(beta))

    def mul(self, other: "CuntzMonomial") -> Optional["CuntzMonomial"]:
        return cuntz_mul(self, other)

    def length(self) -> int:
        return len(self.alpha) + len(self.beta)

    def is_unit(self) -> bool:
        return not self.alpha and not self.beta

    def __repr__(self) -> str:
        if self.is_unit():
            return "1"
        out = ""
        if self.alpha:
            out += "p[" + ",".join(map(str, self.alpha)) + "]"
        if self.beta:
            out += "q[" + ",".join(map(str, self.beta)) + "]"
        return out


class FreeWord(NamedTuple):
    """A basis word of the free semigroup algebra (tensor algebra on l1_m)."""

    word: Word = ()

    @classmethod
    def of(cls, indices: Sequence[int] = ()) -> "FreeWord":
        return cls(_word(indices))

    def mul(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.word + other.word)

    def length(self) -> int:
        return len(self.word)

    def is_unit(self) -> bool:
        return not self.word

    def __repr__(self) -> str:
        return "w[" + ",".join(map(str, self.word)) + "]"


CUNTZ_UNIT = CuntzMonomial((), ())
FREE_UNIT = FreeWord(())


def cuntz_mul(a: CuntzMonomial, b: CuntzMonomial) -> Optional[CuntzMonomial]:
    """Product in the Cuntz semigroup; ``None`` stands for the zero ``z0``.

    ``(p_a q_b)(p_c q_d)`` is decided by the middle factor ``q_b p_c``: it
    reduces to ``p_tau`` when ``c = b.tau``, to ``q_tau`` when ``b = c.tau``,
    and vanishes otherwise.
    """
    left, right = a.beta, b.alpha
    nl, nr = len(left), len(right)
    if nl <= nr:
        if right[:nl] != left:
            return None
        return CuntzMonomial(a.alpha + right[nl:], b.beta)
    if left[:nr] != right:
        return None
    return CuntzMonomial(a.alpha, b.beta + left[nr:])


def free_mul(u: FreeWord, v: FreeWord) -> FreeWord:
    return FreeWord(u.word + v.word)


def length_monomial(a) -> int:
    """``l(p_alpha q_beta) = l(alpha) + l(beta)``; the order of a free word."""
    return a.length()


def p(*indices: int) -> CuntzMonomial:
    return CuntzMonomial.of(indices, ())


def q(*indices: int) -> CuntzMonomial:
    return CuntzMonomial.of((), indices)


def pq(alpha: Sequence[int], beta: Sequence[int]) -> CuntzMonomial:
    return CuntzMonomial.of(alpha, beta)


def w(*indices: int) -> FreeWord:
    return FreeWord.of(indices)
