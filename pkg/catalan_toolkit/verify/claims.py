"""Finite-range verification of the divisibility, integrality and identity claims about the Catalan triangle sums.

Each claim is a grid of parameter assignments plus a check that yields a :class:`Mismatch` for every failed
assertion at one assignment. Mismatches and exceptions raised while checking are collected into a
:class:`VerificationReport` instead of being raised, so a sweep always runs to the end. A passing report means the
claim was verified on the swept range, nothing more.
"""

import math
import time
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from fractions import Fraction
from functools import cache, partial
from typing import Any

from catalan_toolkit.common import DomainError, ToolkitError
from catalan_toolkit.core.combinatorics import (
    binomial,
    central_binomial,
    exact_div,
    fuss_catalan3,
    t_number,
    t_number_alt,
)
from catalan_toolkit.core.msum import (
    S,
    S1,
    S2,
    SIGN,
    Kernel,
    MSumQuery,
    closed_form_MQ0,
    closed_form_MQ1,
    closed_form_MS0,
    closed_form_S1,
    closed_form_S1_central,
    direct_sum,
    direct_sum_Q,
    direct_sum_S,
    lift_identity_rhs,
    msum,
    q_kernel,
    recurrence_bound,
    recurrence_rhs,
)
from catalan_toolkit.core.paths import count_schroeder, count_schroeder_total, schr_closed_form, schr_total

Params = Mapping[str, int | str]


class ClaimId(str, Enum):
    """The identifiers of every verified claim, in reporting order."""

    THM1 = "THM1"
    THM2 = "THM2"
    THM3 = "THM3"
    THM4 = "THM4"
    THM5 = "THM5"
    PROP1 = "PROP1"
    PROP2 = "PROP2"
    PROP3 = "PROP3"
    PROP4 = "PROP4"
    PROP5 = "PROP5"
    REMARK1 = "REMARK1"
    Q_LCM = "Q_LCM"
    LEMMA1 = "LEMMA1"
    EQ7 = "EQ7"
    EQ8 = "EQ8"
    EQ9 = "EQ9"
    EQ16 = "EQ16"
    EQ20 = "EQ20"
    EQ80 = "EQ80"
    N_INTEGRALITY = "N_INTEGRALITY"


class Verdict(str, Enum):
    """The outcome of a sweep."""

    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class Mismatch:
    """A single failed assertion at one parameter assignment."""

    check: str
    expected: str
    actual: str


@dataclass(frozen=True)
class Counterexample:
    """A failed assertion together with the parameter assignment that produced it."""

    params: Params
    check: str
    expected: str
    actual: str


@dataclass
class VerificationReport:
    """The result of sweeping one claim over a range of parameters."""

    claim: ClaimId
    ranges: dict[str, tuple[int, int]]
    instances: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def verdict(self) -> Verdict:
        return Verdict.FAIL if self.counterexamples else Verdict.PASS

    def as_payload(self) -> dict[str, Any]:
        """Get the report as plain data, with every integer written as a decimal string."""
        return {
            "claim": self.claim.value,
            "ranges": {name: [str(lo), str(hi)] for name, (lo, hi) in self.ranges.items()},
            "instances": str(self.instances),
            "verdict": self.verdict.value,
            "counterexamples": [
                {
                    "params": {k: str(v) for k, v in c.params.items()},
                    "check": c.check,
                    "expected": c.expected,
                    "actual": c.actual,
                }
                for c in self.counterexamples
            ],
            "elapsed": f"{self.elapsed:.3f}",
        }


@dataclass(frozen=True)
class SweepConfig:
    """The named parameter ranges of a verification run.

    The defaults keep a full run of every claim well under a minute.
    """

    theorem1_n_max: int = 30
    divisibility_n_max: int = 20
    divisibility_m_max: int = 5
    lemma1_n_max: int = 12
    prop1_n_max: int = 40
    prop_n_max: int = 200
    prop_t_max: int = 200
    q_lcm_n_max: int = 10
    q_lcm_m_max: int = 4
    q_lcm_a_max: int = 6
    eq7_n_max: int = 12
    eq7_m_max: int = 4
    eq8_n_max: int = 10
    eq8_t_max: int = 2
    eq9_n_max: int = 10
    eq16_n_max: int = 10
    eq20_n_max: int = 8
    eq20_m_max: int = 3
    n_decomposition_n_max: int = 10
    schroeder_n_max: int = 6
    schroeder_m_extra: int = 6
    schroeder_slopes: tuple[int, ...] = (1, 2, 3)

    def with_overrides(
        self,
        *,
        n_max: int | None = None,
        m_max: int | None = None,
        t_max: int | None = None,
        a_max: int | None = None,
        slopes: Sequence[int] | None = None,
    ) -> "SweepConfig":
        """Return a copy where every range of the given kind is replaced.

        :param n_max: The new upper bound of every `n` range.
        :param m_max: The new upper bound of every `m` range.
        :param t_max: The new upper bound of every `t` range.
        :param a_max: The new upper bound of every `a` range.
        :param slopes: The new set of boundary slopes for the Schröder path claims.
        :return: The updated configuration.
        """
        changes: dict[str, Any] = {}
        for suffix, value in (("_n_max", n_max), ("_m_max", m_max), ("_t_max", t_max), ("_a_max", a_max)):
            if value is not None:
                changes.update((f.name, value) for f in fields(self) if f.name.endswith(suffix))
        if slopes is not None:
            changes["schroeder_slopes"] = tuple(sorted(set(slopes)))
        return replace(self, **changes)


def _equal(check: str, expected: int, actual: int) -> Iterator[Mismatch]:
    if expected != actual:
        yield Mismatch(check, str(expected), str(actual))


def _divides(check: str, divisor: int, value: int) -> Iterator[Mismatch]:
    remainder = value % divisor
    if remainder:
        yield Mismatch(check, f"multiple of {divisor}", f"{value} (remainder {remainder})")


def _sweep(
    claim: ClaimId,
    ranges: dict[str, tuple[int, int]],
    grid: Iterable[Params],
    check: Callable[..., Iterator[Mismatch]],
) -> VerificationReport:
    """Run a check over every parameter assignment of a grid and collect the failures."""
    start = time.perf_counter()
    report = VerificationReport(claim, ranges)
    for params in grid:
        report.instances += 1
        try:
            mismatches = list(check(**params))
        except ToolkitError as e:
            mismatches = [Mismatch("evaluation", "no error", f"{type(e).__name__}: {e}")]
        report.counterexamples.extend(Counterexample(dict(params), m.check, m.expected, m.actual) for m in mismatches)
    report.elapsed = time.perf_counter() - start
    return report


@cache
def _s_sum(n: int, m: int) -> int:
    return direct_sum_S(n, m)


# Main sum and its closed forms.

def check_theorem1(n: int, *, closed_form: Callable[[int], int] = closed_form_S1) -> Iterator[Mismatch]:
    """Check `S(2n, 1) == (-1)^n C3_n C_n (2n^2 + n + 1)`."""
    yield from _equal("S(2n,1) closed form", closed_form(n), _s_sum(n, 1))


def verify_theorem1(n_max: int, *, closed_form: Callable[[int], int] = closed_form_S1) -> VerificationReport:
    """Compare the literal sum `S(2n, 1)` with its closed form for every `n <= n_max`."""
    return _sweep(
        ClaimId.THM1,
        {"n": (0, n_max)},
        ({"n": n} for n in range(n_max + 1)),
        partial(check_theorem1, closed_form=closed_form),
    )


def _s_msums(n: int, m: int) -> Iterator[tuple[int, int]]:
    return ((j, msum(MSumQuery(S, 2 * n, j, m - 1))) for j in range(n + 1))


def check_theorem2(n: int, m: int) -> Iterator[Mismatch]:
    """Check that `C3_n` divides `S(2n, m)` and every `M_S(2n, j, m - 1)` with `j <= n`."""
    divisor = fuss_catalan3(n)
    yield from _divides("C3_n | S(2n,m)", divisor, _s_sum(n, m))
    for j, value in _s_msums(n, m):
        yield from _divides(f"C3_n | M_S(2n,{j},m-1)", divisor, value)


def check_theorem3(n: int, m: int) -> Iterator[Mismatch]:
    """Check that `binom(2n, n)` divides `S(2n, m)` and every `M_S(2n, j, m - 1)` with `j <= n`.

    For `m = 1` the factorisation of `S(2n, 1)` through the central binomial is checked as well.
    """
    divisor = central_binomial(n)
    yield from _divides("binom(2n,n) | S(2n,m)", divisor, _s_sum(n, m))
    for j, value in _s_msums(n, m):
        yield from _divides(f"binom(2n,n) | M_S(2n,{j},m-1)", divisor, value)
    if m == 1:
        yield from _equal(
            "S(2n,1) == binom(2n,n) * quotient",
            closed_form_S1_central(n) * central_binomial(n),
            _s_sum(n, 1),
        )


def _divisibility_grid(n_max: int, m_max: int) -> Iterator[Params]:
    return ({"n": n, "m": m} for n in range(n_max + 1) for m in range(1, m_max + 1))


def verify_theorem2(n_max: int, m_max: int) -> VerificationReport:
    """Check that `C3_n` divides `S(2n, m)` for `n <= n_max` and `1 <= m <= m_max`."""
    ranges = {"n": (0, n_max), "m": (1, m_max)}
    return _sweep(ClaimId.THM2, ranges, _divisibility_grid(n_max, m_max), check_theorem2)


def verify_theorem3(n_max: int, m_max: int) -> VerificationReport:
    """Check that `binom(2n, n)` divides `S(2n, m)` for `n <= n_max` and `1 <= m <= m_max`."""
    ranges = {"n": (0, n_max), "m": (1, m_max)}
    return _sweep(ClaimId.THM3, ranges, _divisibility_grid(n_max, m_max), check_theorem3)


def verify_divisibility_thms(n_max: int, m_max: int) -> tuple[VerificationReport, VerificationReport]:
    """Run both divisibility sweeps of `S(2n, m)`, one report per divisor."""
    return verify_theorem2(n_max, m_max), verify_theorem3(n_max, m_max)


def check_lemma1(n: int, j: int, *, closed_form: Callable[[int, int], int] = closed_form_MS0) -> Iterator[Mismatch]:
    """Check the closed form of `M_S(2n, j, 0)` against direct summation."""
    yield from _equal("M_S(2n,j,0) closed form", closed_form(n, j), msum(MSumQuery(S, 2 * n, j, 0)))


def verify_lemma1(n_max: int) -> VerificationReport:
    """Compare `M_S(2n, j, 0)` with its closed form for every `0 <= j <= n <= n_max`."""
    return _sweep(
        ClaimId.LEMMA1,
        {"n": (0, n_max), "j": (0, n_max)},
        ({"n": n, "j": j} for n in range(n_max + 1) for j in range(n + 1)),
        check_lemma1,
    )


# Integrality of T(n, j) and the divisibility propositions behind the central binomial factor.

def check_prop1(n: int, j: int) -> Iterator[Mismatch]:
    """Check that both forms of `T(n, j)` are exact and agree, with their cross-multiplied identity."""
    t = t_number(n, j)
    if n == 0:
        yield from _equal("T(0,0)", 1, t)
        return
    yield from _equal("T(n,j) second form", t, t_number_alt(n, j))
    left = n * binomial(2 * n + j, j) * binomial(2 * n + 1, n + j + 1)
    right = (2 * n + 1) * binomial(2 * n + j, n - 1) * binomial(n, j)
    yield from _equal("cross-multiplied forms", left, right)
    yield from _equal("(2n+1) n T(n,j)", left, (2 * n + 1) * n * t)


def verify_prop1(n_max: int) -> VerificationReport:
    """Check the integrality and both forms of `T(n, j)` for every `0 <= j <= n <= n_max`."""
    return _sweep(
        ClaimId.PROP1,
        {"n": (0, n_max), "j": (0, n_max)},
        ({"n": n, "j": j} for n in range(n_max + 1) for j in range(n + 1)),
        check_prop1,
    )


def check_prop2(n: int) -> Iterator[Mismatch]:
    """Check that `(n + 1)(2n + 1)` divides `2 binom(3n, n)`."""
    yield from _divides("(n+1)(2n+1) | 2 binom(3n,n)", (n + 1) * (2 * n + 1), 2 * binomial(3 * n, n))


def check_prop3(n: int, t: int) -> Iterator[Mismatch]:
    """Check that `2n + 1` divides `t binom(2n + t, t)`."""
    yield from _divides("2n+1 | t binom(2n+t,t)", 2 * n + 1, t * binomial(2 * n + t, t))


def check_prop4(n: int, t: int) -> Iterator[Mismatch]:
    """Check that `2n + 1` divides `binom(3n, n + t) binom(2n + t, 2n)`."""
    value = binomial(3 * n, n + t) * binomial(2 * n + t, 2 * n)
    yield from _divides("2n+1 | binom(3n,n+t) binom(2n+t,2n)", 2 * n + 1, value)


def check_prop5(n: int, t: int) -> Iterator[Mismatch]:
    """Check that `2n + 1` divides `binom(3n + 1, n + t + 1) binom(2n + t, 2n)`."""
    value = binomial(3 * n + 1, n + t + 1) * binomial(2 * n + t, 2 * n)
    yield from _divides("2n+1 | binom(3n+1,n+t+1) binom(2n+t,2n)", 2 * n + 1, value)


def check_remark1(n: int, t: int) -> Iterator[Mismatch]:
    """Check that `2n + 1` divides `binom(3n, n + t + 1) binom(2n + t, 2n)`, and the Pascal step connecting it."""
    value = binomial(3 * n, n + t + 1) * binomial(2 * n + t, 2 * n)
    yield from _divides("2n+1 | binom(3n,n+t+1) binom(2n+t,2n)", 2 * n + 1, value)
    yield from _equal(
        "Pascal step",
        binomial(3 * n + 1, n + t + 1),
        binomial(3 * n, n + t + 1) + binomial(3 * n, n + t),
    )


def _nt_grid(n_max: int, t_max: int) -> Iterator[Params]:
    return ({"n": n, "t": t} for n in range(n_max + 1) for t in range(t_max + 1))


def verify_prop2(n_max: int) -> VerificationReport:
    """Sweep the divisibility of `2 binom(3n, n)` by `(n + 1)(2n + 1)`."""
    return _sweep(ClaimId.PROP2, {"n": (0, n_max)}, ({"n": n} for n in range(n_max + 1)), check_prop2)


def verify_prop3(n_max: int, t_max: int) -> VerificationReport:
    """Sweep the divisibility of `t binom(2n + t, t)` by `2n + 1`."""
    return _sweep(ClaimId.PROP3, {"n": (0, n_max), "t": (0, t_max)}, _nt_grid(n_max, t_max), check_prop3)


def verify_prop4(n_max: int, t_max: int) -> VerificationReport:
    """Sweep the divisibility of `binom(3n, n + t) binom(2n + t, 2n)` by `2n + 1`."""
    return _sweep(ClaimId.PROP4, {"n": (0, n_max), "t": (0, t_max)}, _nt_grid(n_max, t_max), check_prop4)


def verify_prop5(n_max: int, t_max: int) -> VerificationReport:
    """Sweep the divisibility of `binom(3n + 1, n + t + 1) binom(2n + t, 2n)` by `2n + 1`."""
    return _sweep(ClaimId.PROP5, {"n": (0, n_max), "t": (0, t_max)}, _nt_grid(n_max, t_max), check_prop5)


def verify_remark1(n_max: int, t_max: int) -> VerificationReport:
    """Sweep the divisibility of `binom(3n, n + t + 1) binom(2n + t, 2n)` by `2n + 1`."""
    return _sweep(ClaimId.REMARK1, {"n": (0, n_max), "t": (0, t_max)}, _nt_grid(n_max, t_max), check_remark1)


def n_number(n: int, j: int, t: int) -> Fraction:
    """Compute `N(n, j, t)` as an exact rational from its product formula, without assuming it is an integer."""
    sign = -1 if n & 1 else 1
    numerator = (
        sign
        * binomial(3 * n, n + t)
        * binomial(2 * n + t, t)
        * binomial(n, t)
        * binomial(t, j)
        * (2 * n * n + n + 1 - t * (n - 1))
    )
    return Fraction(numerator, (2 * n + 1) * (n + t + 1))


def n_parts(n: int, j: int, t: int) -> tuple[int, int]:
    """Compute the two integer parts `N1(n, j, t)` and `N2(n, j, t)` whose sum is `N(n, j, t)`.

    :raises IntegralityError: If one of the divisions by `2n + 1` is not exact.
    """
    sign = -1 if n & 1 else 1
    tail = binomial(n, t) * binomial(t, j)
    first = exact_div(binomial(3 * n, n + t) * binomial(2 * n + t, 2 * n), 2 * n + 1, f"N1({n},{j},{t})")
    second = exact_div(binomial(3 * n, n + t + 1) * binomial(2 * n + t, 2 * n), 2 * n + 1, f"N2({n},{j},{t})")
    return sign * first * tail, n * sign * second * tail


def check_n_decomposition(n: int, j: int) -> Iterator[Mismatch]:
    """Check that every `N(n, j, t)` with `j <= t <= n` is an integer equal to `N1 + N2`.

    Also checks that the `N(n, j, t)` rebuild `M_S(2n, j, 1)` once multiplied by `binom(2n, n)`.
    """
    total = Fraction(0)
    for t in range(j, n + 1):
        value = n_number(n, j, t)
        if value.denominator != 1:
            yield Mismatch(f"N(n,j,{t}) integral", "integer", str(value))
        first, second = n_parts(n, j, t)
        if value != first + second:
            yield Mismatch(f"N(n,j,{t}) == N1 + N2", str(value), str(first + second))
        total += value
    rebuilt = central_binomial(n) * total
    direct = msum(MSumQuery(S, 2 * n, j, 1))
    if rebuilt != direct:
        yield Mismatch("M_S(2n,j,1) == binom(2n,n) sum N", str(rebuilt), str(direct))


def verify_n_decomposition(n_max: int) -> VerificationReport:
    """Sweep the integrality and decomposition of `N(n, j, t)` for every `0 <= j <= t <= n <= n_max`."""
    return _sweep(
        ClaimId.N_INTEGRALITY,
        {"n": (0, n_max), "j": (0, n_max), "t": (0, n_max)},
        ({"n": n, "j": j} for n in range(n_max + 1) for j in range(n + 1)),
        check_n_decomposition,
    )


def check_q_lcm(n: int, m: int, a: int) -> Iterator[Mismatch]:
    """Check that `lcm(binom(a + n, a), binom(2n, n))` divides `Q(2n, m, a)`."""
    divisor = math.lcm(binomial(a + n, a), central_binomial(n))
    yield from _divides("lcm | Q(2n,m,a)", divisor, direct_sum_Q(n, m, a))


def verify_q_lcm(n_max: int, m_max: int, a_max: int) -> VerificationReport:
    """Sweep the lcm divisibility of `Q(2n, m, a)`."""
    return _sweep(
        ClaimId.Q_LCM,
        {"n": (0, n_max), "m": (1, m_max), "a": (0, a_max)},
        (
            {"n": n, "m": m, "a": a}
            for n in range(n_max + 1)
            for m in range(1, m_max + 1)
            for a in range(a_max + 1)
        ),
        check_q_lcm,
    )


# Structural identities of M sums.

def check_eq7(n: int, m: int) -> Iterator[Mismatch]:
    """Check that the sum `S(2n, m)` is the M sum `M_S(2n, 0, m - 1)`."""
    yield from _equal("S(2n,m) == M_S(2n,0,m-1)", _s_sum(n, m), msum(MSumQuery(S, 2 * n, 0, m - 1)))


def verify_eq7(n_max: int, m_max: int) -> VerificationReport:
    """Sweep the identity between `S(2n, m)` and `M_S(2n, 0, m - 1)`."""
    ranges = {"n": (0, n_max), "m": (1, m_max)}
    return _sweep(ClaimId.EQ7, ranges, _divisibility_grid(n_max, m_max), check_eq7)


def _kernel_from_params(kernel: str, a: int) -> Kernel:
    return q_kernel(a) if kernel == "Q" else S


def check_eq8(kernel: str, a: int, n: int, j: int, t: int) -> Iterator[Mismatch]:
    """Check the main recurrence of M sums at level `t`, and its even-index summation bound."""
    query = MSumQuery(_kernel_from_params(kernel, a), 2 * n, j, t)
    yield from _equal("M(2n,j,t) recurrence", recurrence_rhs(query), msum(query))
    if t == 1:
        yield from _equal("recurrence bound at even index", n - j, recurrence_bound(2 * n, j))


def _eq8_grid(n_max: int, t_max: int) -> Iterator[Params]:
    for n in range(n_max + 1):
        kernels = [("S", 0)] + [("Q", a) for a in sorted({0, 1, 2, 2 * n})]
        for kernel, a in kernels:
            for j in range(n + 1):
                for t in range(1, t_max + 1):
                    yield {"kernel": kernel, "a": a, "n": n, "j": j, "t": t}


def verify_eq8(n_max: int, t_max: int) -> VerificationReport:
    """Sweep the main M-sum recurrence for the `S` kernel and the `Q` kernels with `a` in `{0, 1, 2, 2n}`."""
    ranges = {"n": (0, n_max), "j": (0, n_max), "t": (1, t_max)}
    return _sweep(ClaimId.EQ8, ranges, _eq8_grid(n_max, t_max), check_eq8)


def check_eq9(n: int, j: int, a: int) -> Iterator[Mismatch]:
    """Check the lifting identity and the two closed forms of the `Q` M sums derived from it."""
    index = 2 * n
    q = q_kernel(a)
    yield from _equal(
        "lifted sign kernel",
        lift_identity_rhs(index, j, a, SIGN),
        msum(MSumQuery(SIGN.lifted(a), index, j, 0)),
    )
    yield from _equal("M_Q(2n,j,0;a) closed form", closed_form_MQ0(n, j, a), msum(MSumQuery(q, index, j, 0)))
    yield from _equal("M_Q(2n,j,1;a) closed form", closed_form_MQ1(n, j, a), msum(MSumQuery(q, index, j, 1)))
    if a == 1:
        yield from _equal("S1 as lifted S2", lift_identity_rhs(index, j, 1, S2), msum(MSumQuery(S1, index, j, 0)))


def verify_eq9(n_max: int) -> VerificationReport:
    """Sweep the lifting identity with `a` in `{0, 1, 2, 3, 2n}`."""
    return _sweep(
        ClaimId.EQ9,
        {"n": (0, n_max), "j": (0, n_max)},
        (
            {"n": n, "j": j, "a": a}
            for n in range(n_max + 1)
            for j in range(n + 1)
            for a in sorted({0, 1, 2, 3, 2 * n})
        ),
        check_eq9,
    )


def check_eq16(n: int, j: int) -> Iterator[Mismatch]:
    """Check that `(2n + 1)^2 M_S(2n, j, 0)` is the M sum of the `S1` kernel."""
    yield from _equal(
        "(2n+1)^2 M_S == M_S1",
        (2 * n + 1) ** 2 * msum(MSumQuery(S, 2 * n, j, 0)),
        msum(MSumQuery(S1, 2 * n, j, 0)),
    )


def verify_eq16(n_max: int) -> VerificationReport:
    """Sweep the rescaling between the `S` and `S1` kernels."""
    return _sweep(
        ClaimId.EQ16,
        {"n": (0, n_max), "j": (0, n_max)},
        ({"n": n, "j": j} for n in range(n_max + 1) for j in range(n + 1)),
        check_eq16,
    )


def check_eq20(n: int, m: int) -> Iterator[Mismatch]:
    """Check that the `S2` sum is `Q(2n, m, 2n)`, and that their M sums agree."""
    yield from _equal("S2(2n,m) == Q(2n,m,2n)", direct_sum_Q(n, m, 2 * n), direct_sum(S2, 2 * n, m))
    if m == 1:
        q = q_kernel(2 * n)
        for j in range(n + 1):
            yield from _equal(
                f"M_S2(2n,{j},0) == M_Q(2n,{j},0;2n)",
                msum(MSumQuery(q, 2 * n, j, 0)),
                msum(MSumQuery(S2, 2 * n, j, 0)),
            )


def verify_eq20(n_max: int, m_max: int) -> VerificationReport:
    """Sweep the identity between the `S2` sum and `Q(2n, m, 2n)`."""
    ranges = {"n": (0, n_max), "m": (1, m_max)}
    return _sweep(ClaimId.EQ20, ranges, _divisibility_grid(n_max, m_max), check_eq20)


# Generalized Schröder paths.

def check_theorem4(n: int, j: int) -> Iterator[Mismatch]:
    """Check that `T(n, j)` counts the Schröder paths to `(n, 2n)` above `y = 2x` with `j` east steps."""
    yield from _equal("Schr(n,2n,j,2) == T(n,j)", t_number(n, j), count_schroeder(n, 2 * n, j, 2))


def check_theorem5(n: int, m: int, j: int, l: int) -> Iterator[Mismatch]:  # noqa: E741
    """Check the closed form and recurrence of `Schr(n, m, j, l)`, or the refusal just below `m = l * n`."""
    counted = count_schroeder(n, m, j, l)
    if m < l * n:
        yield from _equal("Schr below the boundary", 0, counted)
        try:
            schr_closed_form(n, m, j, l)
        except DomainError:
            pass
        else:
            yield Mismatch("closed form refuses below the boundary", "DomainError", "a value")
        return
    yield from _equal("Schr(n,m,j,l) closed form", schr_closed_form(n, m, j, l), counted)
    recurrence = (
        count_schroeder(n - 1, m, j - 1, l) + count_schroeder(n - 1, m - 1, j, l) + count_schroeder(n, m - 1, j, l)
    )
    yield from _equal("Schr(n,m,j,l) recurrence", recurrence, counted)


def check_eq80(n: int, m: int, l: int) -> Iterator[Mismatch]:  # noqa: E741
    """Check the closed form of the Schröder path total against both ways of counting it."""
    closed = schr_total(n, m, l)
    yield from _equal("Schr(n,m,l) == sum over j", closed, sum(count_schroeder(n, m, j, l) for j in range(n + 1)))
    yield from _equal("Schr(n,m,l) == total count", closed, count_schroeder_total(n, m, l))


def verify_theorem4(n_max: int) -> VerificationReport:
    """Sweep the path interpretation of `T(n, j)` for `1 <= n <= n_max`."""
    return _sweep(
        ClaimId.THM4,
        {"n": (1, n_max), "j": (0, n_max)},
        ({"n": n, "j": j} for n in range(1, n_max + 1) for j in range(n + 1)),
        check_theorem4,
    )


def verify_theorem5(n_max: int, m_extra: int, slopes: Sequence[int]) -> VerificationReport:
    """Sweep `Schr(n, m, j, l)` for `1 <= n <= n_max`, `l * n - 1 <= m <= l * n + m_extra` and every slope."""
    return _sweep(
        ClaimId.THM5,
        {"n": (1, n_max), "m_extra": (-1, m_extra), "j": (0, n_max), "l": (min(slopes, default=0), max(slopes, default=0))},
        (
            {"n": n, "m": m, "j": j, "l": l}
            for l in slopes  # noqa: E741
            for n in range(1, n_max + 1)
            for m in range(l * n - 1, l * n + m_extra + 1)
            for j in range(n + 1)
        ),
        check_theorem5,
    )


def verify_eq80(n_max: int, m_extra: int, slopes: Sequence[int]) -> VerificationReport:
    """Sweep the Schröder path totals for `1 <= n <= n_max`, `l * n <= m <= l * n + m_extra` and every slope."""
    return _sweep(
        ClaimId.EQ80,
        {"n": (1, n_max), "m_extra": (0, m_extra), "l": (min(slopes, default=0), max(slopes, default=0))},
        (
            {"n": n, "m": m, "l": l}
            for l in slopes  # noqa: E741
            for n in range(1, n_max + 1)
            for m in range(l * n, l * n + m_extra + 1)
        ),
        check_eq80,
    )


def verify_schroeder(
    n_max: int,
    m_extra: int,
    slopes: Sequence[int],
) -> tuple[VerificationReport, VerificationReport, VerificationReport]:
    """Run the three Schröder path sweeps: the `T(n, j)` interpretation, the closed form, and the totals."""
    return (
        verify_theorem4(n_max),
        verify_theorem5(n_max, m_extra, slopes),
        verify_eq80(n_max, m_extra, slopes),
    )


@dataclass(frozen=True)
class Claim:
    """A verified statement: its identifier, what it says, how to sweep it and how to check one instance."""

    id: ClaimId
    statement: str
    run: Callable[[SweepConfig], VerificationReport]
    check: Callable[..., Iterator[Mismatch]]


CLAIMS: dict[ClaimId, Claim] = {
    claim.id: claim
    for claim in (
        Claim(
            ClaimId.THM1,
            "S(2n,1) = (-1)^n C3_n C_n (2n^2+n+1)",
            lambda c: verify_theorem1(c.theorem1_n_max),
            check_theorem1,
        ),
        Claim(
            ClaimId.THM2,
            "C3_n divides S(2n,m)",
            lambda c: verify_theorem2(c.divisibility_n_max, c.divisibility_m_max),
            check_theorem2,
        ),
        Claim(
            ClaimId.THM3,
            "binom(2n,n) divides S(2n,m)",
            lambda c: verify_theorem3(c.divisibility_n_max, c.divisibility_m_max),
            check_theorem3,
        ),
        Claim(
            ClaimId.THM4,
            "T(n,j) counts Schröder paths to (n,2n) above y=2x with j east steps",
            lambda c: verify_theorem4(c.schroeder_n_max),
            check_theorem4,
        ),
        Claim(
            ClaimId.THM5,
            "Schr(n,m,j,l) = (m-ln+1)/n binom(n,j) binom(m+j,n-1) for m >= ln",
            lambda c: verify_theorem5(c.schroeder_n_max, c.schroeder_m_extra, c.schroeder_slopes),
            check_theorem5,
        ),
        Claim(
            ClaimId.PROP1,
            "T(n,j) is an integer and equals binom(n,j) binom(2n+j,n-1)/n",
            lambda c: verify_prop1(c.prop1_n_max),
            check_prop1,
        ),
        Claim(
            ClaimId.PROP2,
            "2 binom(3n,n)/((n+1)(2n+1)) is an integer",
            lambda c: verify_prop2(c.prop_n_max),
            check_prop2,
        ),
        Claim(
            ClaimId.PROP3,
            "2n+1 divides t binom(2n+t,t)",
            lambda c: verify_prop3(c.prop_n_max, c.prop_t_max),
            check_prop3,
        ),
        Claim(
            ClaimId.PROP4,
            "2n+1 divides binom(3n,n+t) binom(2n+t,2n)",
            lambda c: verify_prop4(c.prop_n_max, c.prop_t_max),
            check_prop4,
        ),
        Claim(
            ClaimId.PROP5,
            "2n+1 divides binom(3n+1,n+t+1) binom(2n+t,2n)",
            lambda c: verify_prop5(c.prop_n_max, c.prop_t_max),
            check_prop5,
        ),
        Claim(
            ClaimId.REMARK1,
            "2n+1 divides binom(3n,n+t+1) binom(2n+t,2n)",
            lambda c: verify_remark1(c.prop_n_max, c.prop_t_max),
            check_remark1,
        ),
        Claim(
            ClaimId.Q_LCM,
            "lcm(binom(a+n,a), binom(2n,n)) divides Q(2n,m,a)",
            lambda c: verify_q_lcm(c.q_lcm_n_max, c.q_lcm_m_max, c.q_lcm_a_max),
            check_q_lcm,
        ),
        Claim(
            ClaimId.LEMMA1,
            "M_S(2n,j,0) = (-1)^n C3_n T(n,j) (2n^2+n+1-j(n-1))",
            lambda c: verify_lemma1(c.lemma1_n_max),
            check_lemma1,
        ),
        Claim(
            ClaimId.EQ7,
            "S(n,m,a) = M_S(n,0,m-1;a)",
            lambda c: verify_eq7(c.eq7_n_max, c.eq7_m_max),
            check_eq7,
        ),
        Claim(
            ClaimId.EQ8,
            "M_S(n,j,t+1;a) = binom(n,j) sum_u binom(n-j,u) M_S(n,j+u,t;a)",
            lambda c: verify_eq8(c.eq8_n_max, c.eq8_t_max),
            check_eq8,
        ),
        Claim(
            ClaimId.EQ9,
            "M_P(n,j,0;a) = binom(a+j,a) sum_l binom(n-j+l,l) binom(n-j,a-l) M_S(n,j+a-l,0;a), "
            "with the closed forms of M_Q(2n,j,0;a) and M_Q(2n,j,1;a)",
            lambda c: verify_eq9(c.eq9_n_max),
            check_eq9,
        ),
        Claim(
            ClaimId.EQ16,
            "(2n+1)^2 M_S(2n,j,0) = M_S1(2n,j,0;1)",
            lambda c: verify_eq16(c.eq16_n_max),
            check_eq16,
        ),
        Claim(
            ClaimId.EQ20,
            "S2(2n,m,1) = Q(2n,m,2n)",
            lambda c: verify_eq20(c.eq20_n_max, c.eq20_m_max),
            check_eq20,
        ),
        Claim(
            ClaimId.EQ80,
            "Schr(n,m,l) = (m-ln+1)/n sum_j binom(n,j) binom(m+j,n-1)",
            lambda c: verify_eq80(c.schroeder_n_max, c.schroeder_m_extra, c.schroeder_slopes),
            check_eq80,
        ),
        Claim(
            ClaimId.N_INTEGRALITY,
            "N(n,j,t) is an integer, equals N1+N2, and binom(2n,n) sum_t N(n,j,t) = M_S(2n,j,1)",
            lambda c: verify_n_decomposition(c.n_decomposition_n_max),
            check_n_decomposition,
        ),
    )
}


def run_claim(claim: ClaimId, config: SweepConfig) -> VerificationReport:
    """Sweep a single claim with the ranges of the given configuration."""
    return CLAIMS[claim].run(config)


def run_all(
    config: SweepConfig,
    claims: Sequence[ClaimId] | None = None,
    workers: int = 1,
    on_report: Callable[[VerificationReport], None] | None = None,
) -> list[VerificationReport]:
    """Sweep every requested claim and return the reports in claim order.

    :param config: The parameter ranges.
    :param claims: The claims to sweep, defaults to all of them.
    :param workers: The number of worker processes, `1` runs everything in the current process.
    :param on_report: A function called with each report as soon as it is ready, defaults to None.
    :return: One report per claim, ordered like :data:`CLAIMS`.
    """
    selected = [c for c in CLAIMS if claims is None or c in claims]
    reports: dict[ClaimId, VerificationReport] = {}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(run_claim, claim, config): claim for claim in selected}
            for future in as_completed(futures):
                report = future.result()
                reports[futures[future]] = report
                if on_report:
                    on_report(report)
    else:
        for claim in selected:
            report = run_claim(claim, config)
            reports[claim] = report
            if on_report:
                on_report(report)
    return [reports[claim] for claim in selected]


def reproduce(claim: ClaimId, counterexample: Counterexample, **overrides: Any) -> list[Mismatch]:  # noqa: ANN401
    """Re-evaluate the instance behind a counterexample on its own.

    :param claim: The claim the counterexample was reported for.
    :param counterexample: The counterexample to re-evaluate.
    :param overrides: Replacement closed forms, as passed to the sweep that produced the counterexample.
    :return: The mismatches found at the counterexample's parameters.
    """
    try:
        return list(CLAIMS[claim].check(**counterexample.params, **overrides))
    except ToolkitError as e:
        return [Mismatch("evaluation", "no error", f"{type(e).__name__}: {e}")]
