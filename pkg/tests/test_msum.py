import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalan_toolkit.common import DomainError
from catalan_toolkit.core.combinatorics import binomial, central_binomial, fuss_catalan3
from catalan_toolkit.core.msum import (
    ONE,
    S,
    S1,
    S2,
    SIGN,
    Kernel,
    KernelName,
    MSumQuery,
    closed_form_MQ0,
    closed_form_MQ1,
    closed_form_MS0,
    closed_form_S1,
    closed_form_S1_central,
    direct_sum,
    direct_sum_Q,
    direct_sum_S,
    kernel_eval,
    lift_identity_rhs,
    msum,
    q_kernel,
    recurrence_bound,
    recurrence_rhs,
)


@pytest.mark.parametrize(
    ("kernel", "n", "k", "expected"),
    [(S, 2, 1, -4), (q_kernel(1), 2, 0, 3), (S, 2, 3, 0), (S, 2, -1, 0), (ONE, 3, 2, 1), (SIGN, 3, 1, -1)],
)
def test_kernel_eval_examples(kernel: Kernel, n: int, k: int, expected: int) -> None:
    assert kernel_eval(kernel, n, k) == expected


@pytest.mark.parametrize("kernel", [S, S1, S2])
def test_even_index_kernels_reject_odd_indices(kernel: Kernel) -> None:
    with pytest.raises(DomainError, match="even indices"):
        kernel_eval(kernel, 3, 1)


def test_q_kernel_rejects_negative_parameter() -> None:
    with pytest.raises(DomainError):
        q_kernel(-1)


@given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=6), st.data())
def test_q_kernel_is_the_lifted_sign_kernel(n: int, a: int, data: st.DataObject) -> None:
    k = data.draw(st.integers(min_value=0, max_value=n))
    assert kernel_eval(SIGN.lifted(a), n, k) == kernel_eval(q_kernel(a), n, k)


@given(st.integers(min_value=0, max_value=8), st.data())
def test_s1_kernel_is_the_lifted_s2_kernel(n: int, data: st.DataObject) -> None:
    k = data.draw(st.integers(min_value=0, max_value=2 * n))
    assert kernel_eval(S2.lifted(1), 2 * n, k) == kernel_eval(S1, 2 * n, k)


def test_kernel_names() -> None:
    assert str(S) == "S"
    assert str(q_kernel(2)) == "Q(a=2)"
    assert str(SIGN.lifted(3)) == "SIGN^3"
    assert Kernel(KernelName.ONE).lifted(1).lifted(2).lift == 3


@pytest.mark.parametrize(
    ("query", "expected"),
    [
        (MSumQuery(S, 2, 1, 0), -4),
        (MSumQuery(S, 2, 0, 0), -4),
        (MSumQuery(S, 2, 0, 1), -12),
        (MSumQuery(S, 4, 2, 0), 81),
        (MSumQuery(S, 2, 2, 0), 0),
        (MSumQuery(q_kernel(1), 2, 0, 0), -2),
    ],
)
def test_msum_examples(query: MSumQuery, expected: int) -> None:
    assert msum(query) == expected


def test_msum_query_rejects_negative_indices() -> None:
    with pytest.raises(DomainError):
        MSumQuery(S, 2, -1)


@pytest.mark.parametrize(("n", "m", "expected"), [(0, 1, 1), (1, 1, -4), (2, 1, 66), (2, 2, 1152)])
def test_direct_sum_s(n: int, m: int, expected: int) -> None:
    assert direct_sum_S(n, m) == expected


def test_direct_sum_s_divisibility_example() -> None:
    value = direct_sum_S(2, 2)
    assert value % fuss_catalan3(2) == 0
    assert value % central_binomial(2) == 0


def test_direct_sum_rejects_zero_exponent() -> None:
    with pytest.raises(DomainError):
        direct_sum(S, 2, 0)


@pytest.mark.parametrize(("n", "m", "a", "expected"), [(1, 1, 0, 0), (1, 1, 1, -2)])
def test_direct_sum_q(n: int, m: int, a: int, expected: int) -> None:
    assert direct_sum_Q(n, m, a) == expected


def test_direct_sum_q_lcm_example() -> None:
    assert direct_sum_Q(1, 2, 1) % 2 == 0


@pytest.mark.parametrize(("n", "expected"), [(0, 1), (1, -4), (2, 66)])
def test_closed_form_s1(n: int, expected: int) -> None:
    assert closed_form_S1(n) == expected


@pytest.mark.parametrize("n", range(15))
def test_closed_form_s1_matches_direct_sum(n: int) -> None:
    assert closed_form_S1(n) == direct_sum_S(n, 1)
    assert closed_form_S1_central(n) * central_binomial(n) == direct_sum_S(n, 1)


@pytest.mark.parametrize(("n", "j", "expected"), [(1, 1, -4), (2, 2, 81), (0, 0, 1)])
def test_closed_form_ms0(n: int, j: int, expected: int) -> None:
    assert closed_form_MS0(n, j) == expected
    assert msum(MSumQuery(S, 2 * n, j, 0)) == expected


@pytest.mark.parametrize("n", range(8))
def test_closed_form_ms0_first_index_is_the_sum(n: int) -> None:
    assert closed_form_MS0(n, 0) == closed_form_S1(n)


def test_closed_form_ms0_domain() -> None:
    with pytest.raises(DomainError):
        closed_form_MS0(2, 3)


@pytest.mark.parametrize(("n", "j", "a", "expected"), [(1, 0, 1, -2), (2, 1, 2, 36), (3, 1, 0, 0), (2, 0, 0, 0)])
def test_closed_form_mq0(n: int, j: int, a: int, expected: int) -> None:
    assert closed_form_MQ0(n, j, a) == expected
    assert msum(MSumQuery(q_kernel(a), 2 * n, j, 0)) == expected


@pytest.mark.parametrize(("n", "j", "a"), [(1, 0, 1), (1, 1, 1), (3, 1, 2), (4, 2, 8)])
def test_closed_form_mq1(n: int, j: int, a: int) -> None:
    value = closed_form_MQ1(n, j, a)
    assert value == msum(MSumQuery(q_kernel(a), 2 * n, j, 1))
    assert value % central_binomial(n) == 0


def test_closed_form_mq1_example() -> None:
    assert closed_form_MQ1(1, 1, 1) == -8


def test_q_closed_forms_domain() -> None:
    with pytest.raises(DomainError):
        closed_form_MQ0(1, 2, 0)
    with pytest.raises(DomainError):
        closed_form_MQ1(1, 0, -1)


@pytest.mark.parametrize(
    "query",
    [MSumQuery(S, 2, 0, 1), MSumQuery(q_kernel(2), 4, 1, 1), MSumQuery(S, 6, 1, 2), MSumQuery(S, 4, 3, 1)],
)
def test_recurrence_rhs_examples(query: MSumQuery) -> None:
    assert recurrence_rhs(query) == msum(query)


@given(
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=1, max_value=3),
    st.sampled_from(["S", "Q0", "Q1", "Q2"]),
    st.data(),
)
@settings(max_examples=60)
def test_recurrence_rhs_matches_msum(n: int, t: int, kernel: str, data: st.DataObject) -> None:
    j = data.draw(st.integers(min_value=0, max_value=n))
    query = MSumQuery(S if kernel == "S" else q_kernel(int(kernel[1])), 2 * n, j, t)
    assert recurrence_rhs(query) == msum(query)


def test_recurrence_rhs_needs_a_positive_level() -> None:
    with pytest.raises(DomainError):
        recurrence_rhs(MSumQuery(S, 2, 0, 0))


def test_recurrence_bound() -> None:
    assert recurrence_bound(10, 2) == 3
    assert recurrence_bound(9, 2) == 2


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=1, max_value=4))
@settings(max_examples=40)
def test_sum_is_the_first_msum(n: int, m: int) -> None:
    assert direct_sum_S(n, m) == msum(MSumQuery(S, 2 * n, 0, m - 1))


@given(st.integers(min_value=0, max_value=7), st.data())
@settings(max_examples=40)
def test_s1_msum_rescales_s_msum(n: int, data: st.DataObject) -> None:
    j = data.draw(st.integers(min_value=0, max_value=n))
    assert (2 * n + 1) ** 2 * msum(MSumQuery(S, 2 * n, j, 0)) == msum(MSumQuery(S1, 2 * n, j, 0))


def test_lift_identity_s1_from_s2() -> None:
    assert lift_identity_rhs(2, 0, 1, S2) == msum(MSumQuery(S1, 2, 0, 0))


@pytest.mark.parametrize(("n", "j"), [(4, 0), (4, 1), (6, 2), (3, 1)])
def test_lift_identity_with_zero_lift_is_identity(n: int, j: int) -> None:
    assert lift_identity_rhs(n, j, 0, SIGN) == msum(MSumQuery(SIGN, n, j, 0))


@given(
    st.integers(min_value=0, max_value=8),
    st.integers(min_value=0, max_value=4),
    st.sampled_from([ONE, SIGN]),
    st.data(),
)
@settings(max_examples=60)
def test_lift_identity_matches_lifted_msum(n: int, a: int, base: Kernel, data: st.DataObject) -> None:
    j = data.draw(st.integers(min_value=0, max_value=n // 2))
    assert lift_identity_rhs(n, j, a, base) == msum(MSumQuery(base.lifted(a), n, j, 0))


def test_s2_sum_is_the_q_sum_at_a_equal_2n() -> None:
    for n in range(5):
        for m in range(1, 3):
            assert direct_sum(S2, 2 * n, m) == direct_sum_Q(n, m, 2 * n)


def test_lifted_one_kernel_by_brute_force() -> None:
    n = 3
    expected = sum(
        binomial(1, v) * binomial(1 + 1 + v, 1) * binomial(1 + n - 1 - v, 1) for v in range(2)
    ) * binomial(2, 1)
    assert msum(MSumQuery(ONE.lifted(1), n, 1, 0)) == expected
