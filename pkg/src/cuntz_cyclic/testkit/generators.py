"""Deterministic random inputs for the verification checks.

Every trial gets its own ``random.Random`` seeded from a string built out
of the master seed, the check name, the degree and the trial index, so the
stream of a trial never depends on which trials ran before it.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import List, Optional

from ..algebra import LinComb
from ..chains import chain_length
from ..cochains import Cochain, combine, symmetrize_cochain, trace_cuntz, trace_power
from ..semigroup import CuntzMonomial, FreeWord


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    degree: Optional[int] = None
    max_len: int = 3
    index_bound: int = 3
    trials: Optional[int] = None
    no_transition: bool = False
    unit_free: bool = False

    def as_dict(self) -> dict:
        return asdict(self)


def trial_rng(seed: int, *labels) -> random.Random:
    key = "/".join(str(x) for x in (seed,) + labels)
    return random.Random(key)


def rand_word(rng: random.Random, length: int, m: int):
    return tuple(rng.randint(1, m) for _ in range(length))


def rand_monomial(rng: random.Random, max_len: int, m: int, unit_free: bool = False) -> CuntzMonomial:
    total = rng.randint(1 if unit_free else 0, max_len)
    la = rng.randint(0, total)
    return CuntzMonomial(rand_word(rng, la, m), rand_word(rng, total - la, m))


def rand_free_word(rng: random.Random, max_len: int, m: int, unit_free: bool = False) -> FreeWord:
    return FreeWord(rand_word(rng, rng.randint(1 if unit_free else 0, max_len), m))


def _pick_len(rng, lo, hi):
    return rng.randint(lo, hi) if hi >= lo else lo


def rand_tensor(p: GenParams, rng: random.Random, n: int, transitions: Optional[int] = None) -> tuple:
    """Random elementary tensor of degree ``n`` with factor lengths ``<= max_len``.

    ``transitions`` fixes the number of transitions exactly (drawn uniformly
    from ``0..n+1`` when omitted); the ``no_transition`` flag forces zero.
    Roughly half of the transitions are made non-orthogonal by letting one
    side be a prefix of the other.
    """
    size = n + 1
    L, m = p.max_len, p.index_bound
    if p.no_transition:
        transitions = 0
    if transitions is None:
        transitions = rng.randint(0, size)
    if not 0 <= transitions <= size:
        raise ValueError(f"cannot place {transitions} transitions in {size} factors")
    if transitions and L < (2 if transitions > 1 else 1):
        raise ValueError("max_len too small for the requested transitions")
    marked = set(rng.sample(range(size), transitions))
    need_a: List[Optional[bool]] = [None] * size
    need_b: List[Optional[bool]] = [None] * size
    for i in marked:
        need_b[i] = True
        need_a[(i + 1) % size] = True
    # an unmarked position i blanks beta_i ("b") or alpha_{i+1} ("a")
    choice = {i: rng.choice("ab") for i in range(size) if i not in marked}
    if p.unit_free:
        # factor f is forced to be the unit iff choice[f-1] == "a" and choice[f] == "b";
        # switching choice[f] to "a" only ever moves the problem forward and stops at
        # a marked position, or once every choice is "a"
        changed = True
        while changed:
            changed = False
            for f in range(size):
                if choice.get((f - 1) % size) == "a" and choice.get(f) == "b":
                    choice[f] = "a"
                    changed = True
    for i, side in choice.items():
        if side == "b":
            need_b[i] = False
        else:
            need_a[(i + 1) % size] = False
    factors = []
    for i in range(size):
        lo_a, hi_a = (1 if need_a[i] else 0), (0 if need_a[i] is False else L)
        lo_b, hi_b = (1 if need_b[i] else 0), (0 if need_b[i] is False else L)
        if rng.random() < 0.5:
            la = _pick_len(rng, lo_a, min(hi_a, L - lo_b))
            lb = _pick_len(rng, lo_b, min(hi_b, L - la))
        else:
            lb = _pick_len(rng, lo_b, min(hi_b, L - lo_a))
            la = _pick_len(rng, lo_a, min(hi_a, L - lb))
        if p.unit_free and la + lb == 0:
            if hi_a > 0:
                la = 1
            elif hi_b > 0:
                lb = 1
        factors.append([rand_word(rng, la, m), rand_word(rng, lb, m)])
    for i in marked:
        j = (i + 1) % size
        if rng.random() < 0.5:
            a, b = factors[j][0], factors[i][1]
            if len(a) <= len(b):
                factors[j][0] = b[: len(a)]
            else:
                factors[i][1] = a[: len(b)]
    return tuple(CuntzMonomial(a, b) for a, b in factors)


def rand_free_tensor(p: GenParams, rng: random.Random, n: int) -> tuple:
    return tuple(rand_free_word(rng, p.max_len, p.index_bound, p.unit_free) for _ in range(n + 1))


def rand_coeff(rng: random.Random):
    c = rng.choice([-3, -2, -1, 1, 1, 2, 3])
    if rng.random() < 0.2:
        c = Fraction(c, rng.choice([2, 3]))
    return c


def rand_chain(p: GenParams, rng: random.Random, n: int, terms: int = 3, family: str = "cuntz") -> LinComb:
    acc = {}
    for _ in range(terms):
        t = rand_tensor(p, rng, n) if family == "cuntz" else rand_free_tensor(p, rng, n)
        acc[t] = acc.get(t, 0) + rand_coeff(rng)
    return LinComb.from_acc(acc)


def hashed_table_cochain(n: int, seed, max_total_len: int = 4, index_bound: int = 3, spread: int = 3) -> Cochain:
    """Pseudo-random table cochain of degree ``n``.

    Values lie in ``-spread..spread`` on tensors of total length at most
    ``max_total_len`` with indices at most ``index_bound`` and vanish on
    every other tensor, so the support is finite.
    """

    def in_support(t):
        if chain_length(t) > max_total_len:
            return False
        for a in t:
            for word in (a.alpha, a.beta) if isinstance(a, CuntzMonomial) else (a.word,):
                if any(i > index_bound for i in word):
                    return False
        return True

    def rule(t):
        if not in_support(t):
            return 0
        digest = hashlib.blake2b(f"{seed}|{t!r}".encode(), digest_size=4).digest()
        return int.from_bytes(digest, "big") % (2 * spread + 1) - spread

    return Cochain(n, rule, "table")


def rand_cocycle(p: GenParams, n: int, c=0, seed=None) -> Cochain:
    """``delta chi + c * tau_1^(n)`` with ``chi`` a symmetrized random table.

    A cyclic cocycle by construction; ``c`` must be 0 in odd degree.
    """
    from ..cochains import coboundary

    if n < 1:
        raise ValueError("cocycles are built in degree >= 1")
    if n % 2 and c:
        raise ValueError("odd degree admits no trace part (c must be 0)")
    chi = symmetrize_cochain(
        hashed_table_cochain(n - 1, (p.seed, "chi", n) if seed is None else seed, p.max_len + 1, p.index_bound)
    )
    phi = coboundary(chi)
    if c:
        phi = combine([(1, phi), (c, trace_power(trace_cuntz(1), n))])
    return phi
