from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from atomsum import oracle
from atomsum.atoms import atom_of_leader, classify
from atomsum.decompose import CASE_A, CASE_B, locate_sum, sumset_decompose
from atomsum.errors import InvalidArgument
from atomsum.numtheory import divisors
from atomsum.repcount import in_sumset, rep_count


@pytest.mark.parametrize(
    "a, b, g, m3, case, leaders",
    [
        (3, 3, 3, 20, CASE_B, (6, 12, 30, 60)),
        (3, 10, 1, 1, CASE_A, (1,)),
        (10, 10, 10, 6, CASE_B, (20, 60)),
    ],
)
def test_sums_in_z60(a, b, g, m3, case, leaders):
    dec = sumset_decompose(60, a, b)
    assert (dec.g, dec.m3_tilde, dec.case, dec.leaders) == (g, m3, case, leaders)


def test_odd_units_cover_everything():
    for n in range(1, 202, 2):
        assert list(sumset_decompose(n, 1, 1).leaders) == divisors(n)


def test_rejects_non_divisor():
    with pytest.raises(InvalidArgument):
        sumset_decompose(60, 7, 3)


def test_matches_brute_force_sumset():
    for n in range(1, 151):
        for a in divisors(n):
            for b in divisors(n):
                dec = sumset_decompose(n, a, b)
                union = sorted(x for d in dec.leaders for x in atom_of_leader(n, d))
                assert union == oracle.brute_force_sumset(n, a, b), (n, a, b)
                assert len(set(dec.leaders)) == len(dec.leaders)
                assert dec.leaders, "decomposition is never empty"


def test_case_b_only_even_reduced_elements():
    for n in range(2, 121, 2):
        for a in divisors(n):
            for b in divisors(n):
                dec = sumset_decompose(n, a, b)
                if dec.case == CASE_B:
                    assert all((x // dec.g) % 2 == 0 for x in oracle.brute_force_sumset(n, a, b))


def test_zero_membership():
    for n in range(1, 121):
        for a in divisors(n):
            for b in divisors(n):
                dec = sumset_decompose(n, a, b)
                assert dec.contains_zero == (0 in oracle.brute_force_sumset(n, a, b))
                if dec.contains_zero:
                    assert a == b


def test_locate_examples():
    assert locate_sum(60, 3, 10, 13) == 1
    assert locate_sum(60, 3, 3, 6) == 6
    assert locate_sum(60, 3, 10, 14) is None
    assert locate_sum(60, 3, 3, 0) == 60
    assert locate_sum(60, 3, 10, 0) is None


@given(st.integers(min_value=1, max_value=150), st.data())
def test_locate_consistency(n, data):
    a = data.draw(st.sampled_from(divisors(n)))
    b = data.draw(st.sampled_from(divisors(n)))
    c = data.draw(st.integers(min_value=0, max_value=n - 1))
    loc = locate_sum(n, a, b, c)
    if rep_count(n, a, b, c).count > 0:
        assert loc == gcd(c, n)
        assert loc in sumset_decompose(n, a, b).leaders
    else:
        assert loc is None
        assert not in_sumset(n, a, b, c)


def test_classify_of_sumset_agrees():
    for a, b in [(3, 3), (3, 10), (10, 10), (1, 1), (4, 6)]:
        assert classify(60, oracle.brute_force_sumset(60, a, b)) == list(sumset_decompose(60, a, b).leaders)
