"""Binomial sums over integer-valued kernels and the M sums attached to them.

A sum `S(n, m, a) = sum_k binom(n, k)^m F(n, k, a)` comes with the M sums

    M_S(n, j, t; a) = binom(n - j, j) * sum_{v=0}^{n-2j} binom(n - 2j, v) binom(n, j + v)^t F(n, j + v, a)

and `S(n, m, a) = M_S(n, 0, m - 1; a)`. The kernels below are the summands of the alternating Catalan triangle
convolution `S(2n, m)`, of the sum `Q(2n, m, a)`, and of the two auxiliary sums used to evaluate `M_S(2n, j, 0)`.
"""

from dataclasses import dataclass, replace
from enum import Enum

from catalan_toolkit.common import DomainError

from .combinatorics import (
    binomial,
    catalan,
    catalan_triangle_entry,
    central_binomial,
    exact_div,
    fuss_catalan3,
    t_number,
)


class KernelName(str, Enum):
    """The kernels known to the M-sum evaluator."""

    S = "S"
    Q = "Q"
    S1 = "S1"
    S2 = "S2"
    ONE = "ONE"
    SIGN = "SIGN"


# Kernels defined at an even index 2n only.
EVEN_INDEX_KERNELS = frozenset({KernelName.S, KernelName.S1, KernelName.S2})


@dataclass(frozen=True)
class Kernel:
    """An integer-valued summand family `F(n, k, a)`.

    `a` is only read by the `Q` kernel. A non-zero `lift` multiplies the kernel by `binom(lift + k, lift) *
    binom(lift + n - k, lift)`, which turns the sum `S` into the sum `P` of the lifting identity.
    """

    name: KernelName
    a: int = 0
    lift: int = 0

    def __str__(self) -> str:
        label = self.name.value if self.name != KernelName.Q else f"Q(a={self.a})"
        return f"{label}^{self.lift}" if self.lift else label

    def lifted(self, a: int) -> "Kernel":
        """Return this kernel lifted by `a` more levels."""
        return replace(self, lift=self.lift + a)


S = Kernel(KernelName.S)
S1 = Kernel(KernelName.S1)
S2 = Kernel(KernelName.S2)
ONE = Kernel(KernelName.ONE)
SIGN = Kernel(KernelName.SIGN)


def q_kernel(a: int) -> Kernel:
    """Get the kernel `(-1)^k binom(a + k, a) binom(a + n - k, a)` of the sum `Q(n, m, a)`."""
    if a < 0:
        msg = f"the Q kernel needs a >= 0, got a={a}"
        raise DomainError(msg)
    return Kernel(KernelName.Q, a=a)


@dataclass(frozen=True)
class MSumQuery:
    """The arguments of an M sum `M_F(n, j, t; a)`.

    `n` is the upper index of the underlying sum, so the usual `M_S(2n, j, t)` is `MSumQuery(S, 2 * n, j, t)`.
    """

    kernel: Kernel
    n: int
    j: int
    t: int = 0

    def __post_init__(self) -> None:
        if self.n < 0 or self.j < 0 or self.t < 0:
            msg = f"M-sum indices must be non-negative, got n={self.n}, j={self.j}, t={self.t}"
            raise DomainError(msg)


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


def kernel_eval(kernel: Kernel, n: int, k: int) -> int:
    """Evaluate a kernel at `(n, k)`.

    :param kernel: The kernel to evaluate.
    :param n: The upper index of the sum, even for the `S`, `S1` and `S2` kernels.
    :param k: The summation index; anything outside `[0, n]` evaluates to 0.
    :raises DomainError: If `n` is negative, or odd for a kernel that is only defined at even indices.
    :return: `F(n, k, a)`.
    """
    if n < 0:
        msg = f"kernel index must be non-negative, got n={n}"
        raise DomainError(msg)
    if kernel.name in EVEN_INDEX_KERNELS and n % 2:
        msg = f"kernel {kernel.name.value} is only defined at even indices, got n={n}"
        raise DomainError(msg)
    if k < 0 or k > n:
        return 0

    match kernel.name:
        case KernelName.S:
            value = _sign(k) * catalan_triangle_entry(n, k) * catalan_triangle_entry(n, n - k)
        case KernelName.Q:
            value = _sign(k) * binomial(kernel.a + k, kernel.a) * binomial(kernel.a + n - k, kernel.a)
        case KernelName.S1:
            value = _sign(k) * (n - k + 1) * (k + 1) * binomial(n + k, n) * binomial(2 * n - k, n)
        case KernelName.S2:
            value = _sign(k) * binomial(n + k, n) * binomial(2 * n - k, n)
        case KernelName.ONE:
            value = 1
        case KernelName.SIGN:
            value = _sign(k)

    if kernel.lift:
        value *= binomial(kernel.lift + k, kernel.lift) * binomial(kernel.lift + n - k, kernel.lift)
    return value


def msum(query: MSumQuery) -> int:
    """Evaluate an M sum by direct summation.

    Indices `j` beyond `n / 2` are accepted and give 0, both through the empty sum and the vanishing leading binomial.

    :param query: The M sum to evaluate.
    :return: `M_F(n, j, t; a)`.
    """
    n, j, t = query.n, query.j, query.t
    width = n - 2 * j
    if width < 0:
        return 0
    total = sum(
        binomial(width, v) * binomial(n, j + v) ** t * kernel_eval(query.kernel, n, j + v)
        for v in range(width + 1)
    )
    return binomial(n - j, j) * total


def direct_sum(kernel: Kernel, n: int, m: int) -> int:
    """Evaluate `sum_{k=0}^{n} binom(n, k)^m F(n, k, a)` literally."""
    if m < 1:
        msg = f"the sum exponent m must be at least 1, got m={m}"
        raise DomainError(msg)
    return sum(binomial(n, k) ** m * kernel_eval(kernel, n, k) for k in range(n + 1))


def direct_sum_S(n: int, m: int) -> int:  # noqa: N802
    """Evaluate `S(2n, m) = sum_k (-1)^k binom(2n, k)^m C(2n, k) C(2n, 2n - k)` literally."""
    return direct_sum(S, 2 * n, m)


def direct_sum_Q(n: int, m: int, a: int) -> int:  # noqa: N802
    """Evaluate `Q(2n, m, a) = sum_k (-1)^k binom(2n, k)^m binom(a + k, a) binom(a + 2n - k, a)` literally."""
    return direct_sum(q_kernel(a), 2 * n, m)


def _sign_n(n: int) -> int:
    return -1 if n & 1 else 1


def closed_form_S1(n: int) -> int:  # noqa: N802
    """Compute `S(2n, 1) = (-1)^n C3_n C_n (2n^2 + n + 1)`."""
    return _sign_n(n) * fuss_catalan3(n) * catalan(n) * (2 * n * n + n + 1)


def closed_form_S1_central(n: int) -> int:  # noqa: N802
    """Compute `S(2n, 1) / binom(2n, n) = (-1)^n (2n^2 + n + 1) binom(3n, n) / ((n + 1)(2n + 1))`.

    The exact division is what makes `S(2n, 1)` a multiple of the central binomial coefficient.
    """
    if n < 0:
        msg = f"n must be non-negative, got n={n}"
        raise DomainError(msg)
    return _sign_n(n) * exact_div(
        (2 * n * n + n + 1) * binomial(3 * n, n),
        (n + 1) * (2 * n + 1),
        f"S(2*{n},1)/binom(2*{n},{n})",
    )


def closed_form_MS0(n: int, j: int) -> int:  # noqa: N802
    """Compute `M_S(2n, j, 0) = (-1)^n C3_n T(n, j) (2n^2 + n + 1 - j(n - 1))`.

    :raises DomainError: If `j` is outside `[0, n]`.
    """
    return _sign_n(n) * fuss_catalan3(n) * t_number(n, j) * (2 * n * n + n + 1 - j * (n - 1))


def closed_form_MQ0(n: int, j: int, a: int) -> int:  # noqa: N802
    """Compute `M_Q(2n, j, 0; a) = (-1)^n binom(a + n, a) binom(a + j, j) binom(a, n - j)`."""
    _require_q_domain(n, j, a)
    return _sign_n(n) * binomial(a + n, a) * binomial(a + j, j) * binomial(a, n - j)


def closed_form_MQ1(n: int, j: int, a: int) -> int:  # noqa: N802
    """Compute `M_Q(2n, j, 1; a)` as `(-1)^n binom(2n, n)` times a sum over `u = 0..n - j`."""
    _require_q_domain(n, j, a)
    total = sum(
        binomial(n, j + u) * binomial(j + u, u) * binomial(a + j + u, j + u) * binomial(a + n, 2 * n - j - u)
        for u in range(n - j + 1)
    )
    return _sign_n(n) * central_binomial(n) * total


def _require_q_domain(n: int, j: int, a: int) -> None:
    if n < 0 or j < 0 or a < 0 or j > n:
        msg = f"the Q closed forms need 0 <= j <= n and a >= 0, got n={n}, j={j}, a={a}"
        raise DomainError(msg)


def recurrence_bound(n: int, j: int) -> int:
    """Get the last summation index `floor((n - 2j) / 2)` of the main M-sum recurrence."""
    return (n - 2 * j) // 2


def recurrence_rhs(query: MSumQuery) -> int:
    """Evaluate `binom(n, j) sum_u binom(n - j, u) M(n, j + u, t - 1)`, which equals `msum(query)`.

    :param query: The M sum at level `t >= 1` whose right-hand side to evaluate.
    :raises DomainError: If `query.t` is 0.
    :return: The right-hand side of the main recurrence.
    """
    if query.t < 1:
        msg = "the main recurrence relates level t to level t - 1, so t must be at least 1"
        raise DomainError(msg)
    n, j = query.n, query.j
    if n - 2 * j < 0:
        return 0
    total = sum(
        binomial(n - j, u) * msum(replace(query, j=j + u, t=query.t - 1))
        for u in range(recurrence_bound(n, j) + 1)
    )
    return binomial(n, j) * total


def lift_identity_rhs(n: int, j: int, a: int, base_kernel: Kernel) -> int:
    """Evaluate the lifting identity's right-hand side, which equals `msum` of `base_kernel.lifted(a)` at `(n, j, 0)`.

    The right-hand side is `binom(a + j, a) sum_{l=0}^{a} binom(n - j + l, l) binom(n - j, a - l) M_S(n, j + a - l, 0)`
    with `M_S` the M sums of `base_kernel`.

    :param n: The upper index of the sum.
    :param j: The M-sum index.
    :param a: The number of lifting levels, `a >= 0`.
    :param base_kernel: The kernel `F` of the sum `S`.
    :return: The right-hand side value.
    """
    if a < 0:
        msg = f"the lift needs a >= 0, got a={a}"
        raise DomainError(msg)
    total = sum(
        binomial(n - j + l, l) * binomial(n - j, a - l) * msum(MSumQuery(base_kernel, n, j + a - l, 0))
        for l in range(a + 1)  # noqa: E741
    )
    return binomial(a + j, a) * total
