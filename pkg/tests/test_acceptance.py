"""Acceptance suite: one line per criterion, exact (zero-tolerance) comparisons.

Run under pytest (lines are printed even without ``-s``) or directly with
``python tests/test_acceptance.py``.
"""

import contextlib
import io
import sys
from typing import Callable, List, NamedTuple, Tuple

import pytest

from cuntz_cyclic.cli import main
from cuntz_cyclic.testkit import GenParams, run_check


class Criterion(NamedTuple):
    number: int
    title: str
    run: Callable[[], Tuple[bool, str]]


def _checks(*runs) -> Tuple[bool, str]:
    """Each run is ``(name, params)``; pass iff every report passes."""
    parts = []
    ok = True
    for name, params in runs:
        report = run_check(name, params)
        ok = ok and report.status == "pass"
        parts.append(f"{name}[{report.trials} trials, {len(report.failures)} failures]")
    return ok, ", ".join(parts)


DEFAULT = GenParams()


def chain_complex():
    return _checks(("d-squared-zero", DEFAULT), ("shift-order", DEFAULT), ("norm-annihilates", DEFAULT))


def equivalence_oracle():
    return _checks(("cyclic-equiv-oracle", DEFAULT))


def shift_homotopy():
    return _checks(("lemma-3.3", DEFAULT))


def cancellation():
    return _checks(("lemma-3.4-cancellation", DEFAULT))


def wrap_terms():
    return _checks(("lemma-3.5", DEFAULT))


def split_derivation():
    return _checks(("lemma-5.8", DEFAULT))


def transition_reduction():
    return _checks(("transition-reduction", DEFAULT))


def phi_no_transitions():
    return _checks(("phi-no-transitions", DEFAULT))


def second_reduction():
    return _checks(("second-reduction", DEFAULT))


def traces():
    return _checks(("traces", DEFAULT))


def pipeline():
    # default degrees 1 and 2, plus degree 3 (odd branch) and 4 (trace power of degree 4)
    return _checks(
        ("cobound-pipeline", DEFAULT),
        ("cobound-pipeline", GenParams(degree=3, trials=100)),
        ("cobound-pipeline", GenParams(degree=4, trials=100)),
    )


def phi_homotopy():
    return _checks(("phi-homotopy", DEFAULT))


def invariants():
    return _checks(("invariants-projector", DEFAULT))


def mutation():
    parts = []
    ok = True
    for name in ("d-squared-zero", "lemma-3.4-cancellation", "second-reduction"):
        report = run_check(name, GenParams(trials=25), mutate="flip-face-sign")
        first = min((f["trial"] for f in report.failures), default=None)
        ok = ok and report.status == "fail"
        parts.append(f"{name} fails={len(report.failures)} first-trial={first}")
    return ok, ", ".join(parts)


def _cli(*argv) -> Tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def cli_contract():
    expected = {"d": "1 - p[1]q[1]\n", "t": "-1 * (q[1] (x) p[1])\n", "phi": "1 (x) 1\n"}
    ok = True
    for op, want in expected.items():
        code, out = _cli("apply", op, "--n", "1", "p[1] (x) q[1]")
        ok = ok and code == 0 and out == want
    code, _ = _cli("verify", "all", "--seed", "1")
    ok = ok and code == 0
    return ok, f"apply examples bit-exact, verify all --seed 1 exit {code}"


CRITERIA: List[Criterion] = [
    Criterion(1, "chain-complex sanity: dd = 0, t^(n+1) = I, N(I - t) = 0", chain_complex),
    Criterion(2, "kernel-of-N test agrees with linear-solve membership", equivalence_oracle),
    Criterion(3, "shift/homotopy commutation, all splitting maps", shift_homotopy),
    Criterion(4, "pairwise cancellations, 4n+4 labelled terms summing to sd + ds", cancellation),
    Criterion(5, "four wrap-around term identities", wrap_terms),
    Criterion(6, "long splits are derivations (exhaustive + random, free analogue)", split_derivation),
    Criterion(7, "N(Px - kx) has at most k-1 transitions", transition_reduction),
    Criterion(8, "N(Phi x) has no transitions", phi_no_transitions),
    Criterion(9, "N((rd + dr)x - x) = 0 on transition-free and free-word tensors", second_reduction),
    Criterion(10, "traces, trace powers, d of the all-units tensor", traces),
    Criterion(11, "constructive cobounding pipeline: recovered c, residual 0", pipeline),
    Criterion(12, "Phi = I - (s~ d + d s~)", phi_homotopy),
    Criterion(13, "rotation-invariant projector on word layers k <= 4", invariants),
    Criterion(14, "mutation sensitivity: flipped face sign is detected", mutation),
    Criterion(15, "CLI contract", cli_contract),
]


def _line(c: Criterion, ok: bool, detail: str) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] criterion {c.number:2d}: {c.title} -- {detail}"


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion-{c.number:02d}" for c in CRITERIA])
def test_criterion(criterion, capsys):
    ok, detail = criterion.run()
    with capsys.disabled():
        print("\n" + _line(criterion, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for c in CRITERIA:
        ok, detail = c.run()
        failed += not ok
        print(_line(c, ok, detail))
    sys.exit(1 if failed else 0)
