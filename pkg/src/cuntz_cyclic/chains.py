"""Chain spaces, face maps, the Hochschild boundary and the cyclic shift.

An elementary tensor ``a1 (x) ... (x) a_{n+1}`` is a plain tuple of
monomials; a chain of degree ``n`` is a ``LinComb`` whose keys are tuples of
length ``n + 1``.  Face-map terms whose merged product vanishes are dropped.
"""

from __future__ import annotations

import contextlib
from typing import Dict, Iterator, NamedTuple, Optional, Tuple

from .algebra import LinComb

Tensor = Tuple

# Index of a face map whose sign is deliberately flipped (mutation testing).
_flipped_face: Optional[int] = None


@contextlib.contextmanager
def flipped_face_sign(index: int = 1) -> Iterator[None]:
    """Flip the sign of face map ``index`` in every degree while active.

    Only meant for checking that the verification suites are not vacuous.
    """
    global _flipped_face
    previous = _flipped_face
    _flipped_face = index
    try:
        yield
    finally:
        _flipped_face = previous


def _face_sign(i: int) -> int:
    sign = -1 if i % 2 else 1
    return -sign if i == _flipped_face else sign


def tensor(*factors) -> Tensor:
    return tuple(factors)


def chain(*factors, coeff=1) -> LinComb:
    """The chain ``coeff * (a1 (x) ... (x) ak)``."""
    return LinComb({tuple(factors): coeff})


def degree(x: LinComb) -> Optional[int]:
    """Degree of a homogeneous chain, ``None`` for the zero chain."""
    degrees = {len(t) - 1 for t in x}
    if len(degrees) > 1:
        raise ValueError(f"chain is not homogeneous: degrees {sorted(degrees)}")
    return degrees.pop() if degrees else None


def require_degree(x: LinComb, n: int) -> None:
    d = degree(x)
    if d is not None and d != n:
        raise ValueError(f"expected a chain of degree {n}, got degree {d}")


def _face_into(acc: Dict, i: int, t: Tensor, c) -> None:
    last = len(t) - 1
    if i == 0:
        prod = t[last].mul(t[0])
        if prod is not None:
            key = t[1:last] + (prod,)
            acc[key] = acc.get(key, 0) + (c if _face_sign(0) > 0 else -c)
        return
    prod = t[i - 1].mul(t[i])
    if prod is not None:
        key = t[: i - 1] + (prod,) + t[i + 1 :]
        acc[key] = acc.get(key, 0) + (c if _face_sign(i) > 0 else -c)


def face_map(i: int, x: LinComb) -> LinComb:
    """The face ``d_i`` from degree ``n+1`` to degree ``n``.

    ``d_0`` moves the first factor to the back and merges it into the last;
    ``d_i`` (``i >= 1``) merges ``a_i a_{i+1}`` with sign ``(-1)^i``.
    """
    acc: Dict = {}
    for t, c in x.items():
        if len(t) < 2:
            raise ValueError("face maps need a chain of degree >= 1")
        if not 0 <= i <= len(t) - 1:
            raise ValueError(f"face index {i} out of range 0..{len(t) - 1}")
        _face_into(acc, i, t, c)
    return LinComb.from_acc(acc)


def boundary(x: LinComb) -> LinComb:
    """The Hochschild boundary ``d = sum_i d_i`` (degree n+1 -> n)."""
    acc: Dict = {}
    for t, c in x.items():
        m = len(t)
        if m < 2:
            raise ValueError("boundary needs a chain of degree >= 1")
        for i in range(m):
            _face_into(acc, i, t, c)
    return LinComb.from_acc(acc)


def _rotate(t: Tensor, j: int) -> Tensor:
    """Move the last ``j`` factors to the front (unsigned)."""
    j %= len(t)
    return t[len(t) - j :] + t[: len(t) - j] if j else t


def cyclic_shift(x: LinComb, power: int = 1) -> LinComb:
    """``t(a1 ... a_{n+1}) = (-1)^n a_{n+1} (x) a1 ... a_n``, applied ``power`` times."""
    acc: Dict = {}
    for t, c in x.items():
        m = len(t)
        j = power % m
        # (n even) -> sign +1; (n odd) -> sign (-1)^j
        if (m - 1) % 2 and j % 2:
            c = -c
        key = _rotate(t, j)
        acc[key] = acc.get(key, 0) + c
    return LinComb.from_acc(acc)


def cyclic_norm(x: LinComb) -> LinComb:
    """``N = sum_{j=0}^{n} t^j``."""
    acc: Dict = {}
    for t, c in x.items():
        m = len(t)
        odd = (m - 1) % 2
        for j in range(m):
            key = _rotate(t, j)
            cj = -c if odd and j % 2 else c
            acc[key] = acc.get(key, 0) + cj
    return LinComb.from_acc(acc)


def cyclic_equiv(x: LinComb, y: LinComb) -> bool:
    """Whether ``x - y`` lies in ``(I - t)C_n``.

    On the span of a finite union of cyclic orbits ``t`` has finite order and
    the scalars have characteristic zero, so ``im(I - t) = ker N``.
    """
    dx, dy = degree(x), degree(y)
    if dx is not None and dy is not None and dx != dy:
        raise ValueError(f"degree mismatch: {dx} vs {dy}")
    return not cyclic_norm(x - y)


class TransitionProfile(NamedTuple):
    k: int
    l: int


def transition_profile(t: Tensor) -> TransitionProfile:
    """Count cyclic positions where a nonempty q-tail meets a nonempty p-head.

    ``l`` counts the orthogonal ones (the two factors multiply to zero).
    Position ``n+1`` pairs the last factor with the first.
    """
    k = l = 0
    m = len(t)
    for i in range(m):
        a, b = t[i], t[(i + 1) % m]
        if a.beta and b.alpha:
            k += 1
            if a.mul(b) is None:
                l += 1
    return TransitionProfile(k, l)


def chain_length(t: Tensor) -> int:
    return sum(a.length() for a in t)


def units(n: int, unit) -> Tensor:
    """The all-units tensor of degree ``n``."""
    return (unit,) * (n + 1)
