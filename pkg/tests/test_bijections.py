from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from overpartitions import ClassParams, DomainError, Overpartition, Part, gordon_mark, parse_overpartition
from overpartitions.bijections import (
    BoundedPartition, DistinctPartition, beta_closed_form, chi, chi_inv, chi_weight_drop, first_dilation,
    first_reduction, phi, phi_inv, psi, psi_inv, second_dilation, second_reduction, second_reduction_applies,
)
from overpartitions.enumeration import in_U, is_in_P, is_in_Q, members_by_profile, overpartitions_of, satisfies_D

FIXTURES = Path(__file__).parent / "fixtures"
P41 = ClassParams(4, 1)


def load(name: str) -> dict:
    return json.loads((FIXTURES / name).read_text())


def from_rows(state: dict) -> Overpartition:
    lam = parse_overpartition(",".join(state["rows"].values()))
    assert lam.weight == state["weight"]
    return lam


def rows_text(lam: Overpartition) -> dict[str, str]:
    return {r: ",".join(parts) for r, parts in gordon_mark(lam).to_json()["rows"].items()}


# -- first reduction and dilation -----------------------------------------------

def test_first_reduction_chain():
    steps = load("first_reduction_chain.json")["steps"]
    lam = from_rows(steps[0])
    for want in steps[1:]:
        lam = first_reduction(lam, P41)
        assert lam.weight == want["weight"]
        assert rows_text(lam) == want["rows"]


def test_first_dilation_reverses_the_chain():
    steps = load("first_reduction_chain.json")["steps"]
    s133, s134, s135 = (from_rows(s) for s in reversed(steps))
    assert first_dilation(s133, P41, "A") == s134
    assert first_dilation(s134, P41, "B") == s135
    assert first_reduction(first_dilation(s133, P41, "A"), P41) == s133


def test_first_reduction_needs_a_plain_one_marked_part():
    alpha = from_rows(load("psi_128.json")["alpha"])
    with pytest.raises(DomainError):
        first_reduction(alpha, P41)


def test_first_dilation_on_empty_rejected():
    for kind in ("A", "B"):
        with pytest.raises(DomainError):
            first_dilation(Overpartition(), P41, kind)


# -- phi ------------------------------------------------------------------------

def test_phi_on_weight_136_example():
    data = load("phi_136.json")
    lam = from_rows(data["lambda"])
    alpha, beta = phi(lam, P41)
    assert beta.parts == tuple(data["beta"]) == beta_closed_form(lam)
    assert alpha.weight == data["alpha_weight"] and is_in_P(alpha, P41)
    assert phi_inv(alpha, beta, P41) == lam


def test_phi_fixes_p_class():
    alpha = from_rows(load("psi_128.json")["alpha"])
    out, beta = phi(alpha, P41)
    assert out == alpha and beta.parts == ()
    assert phi_inv(alpha, [], P41) == alpha


def test_phi_inverse_rejects_oversized_beta():
    alpha = from_rows(load("psi_128.json")["alpha"])
    n1 = gordon_mark(alpha).count(1)
    with pytest.raises(DomainError):
        phi_inv(alpha, [n1], P41)


def test_phi_trace_records_each_step():
    lam = from_rows(load("phi_136.json")["lambda"])
    seen = []
    phi(lam, P41, lambda label, x: seen.append(x.weight))
    assert seen == list(range(135, 126, -1))


def test_distinct_partition_validation():
    with pytest.raises(DomainError):
        DistinctPartition((2, 2), 5)
    with pytest.raises(DomainError):
        DistinctPartition((5,), 5)
    with pytest.raises(DomainError):
        BoundedPartition((1, 1, 1), 2)


# -- second reduction and psi ---------------------------------------------------

def test_second_reduction_chain():
    data = load("second_reduction_chain.json")
    alpha = from_rows(data["steps"][0])
    for want in data["steps"][1:]:
        assert second_reduction_applies(alpha, P41, data["index"])
        alpha = second_reduction(alpha, P41, data["index"])
        assert alpha.weight == want["weight"]
        assert rows_text(alpha) == want["rows"]


def test_second_dilation_reverses_the_chain():
    data = load("second_reduction_chain.json")
    states = [from_rows(s) for s in data["steps"]]
    assert second_dilation(states[2], P41, data["index"]) == states[1]
    assert second_dilation(states[1], P41, data["index"]) == states[0]


def test_psi_on_weight_128_example():
    data = load("psi_128.json")
    alpha = from_rows(data["alpha"])
    gamma, delta = psi(alpha, P41)
    assert list(delta.parts) == data["delta"]
    assert gamma.weight == data["gamma"]["weight"] == alpha.weight - sum(data["delta"])
    assert rows_text(gamma) == data["gamma"]["rows"]
    assert is_in_Q(gamma, P41)
    assert psi_inv(gamma, delta, P41) == alpha


def test_psi_fixes_q_class():
    gamma = from_rows(load("psi_128.json")["gamma"])
    out, delta = psi(gamma, P41)
    assert out == gamma and delta.parts == ()
    with pytest.raises(DomainError):
        second_reduction(gamma, P41)


# -- chi ------------------------------------------------------------------------

def test_chi_weight_drop_formula():
    p = ClassParams(3, 1)
    assert chi_weight_drop((2, 1), p) == 4
    for gamma in members_by_profile("Q", p, 12).get((2, 1), []):
        assert gamma.weight - chi(gamma, p).weight == 4


def test_chi_of_minimal_member_is_empty():
    for k in range(3, 5):
        for i in range(2, k + 1):
            cap = min(i, k - 1)
            gamma = Overpartition([Part(1, True)] + [Part(1)] * (cap - 1) + [Part(2)] * (k - 1 - cap))
            assert chi(gamma, ClassParams(k, i)) == Overpartition()
            assert chi_inv(Overpartition(), ClassParams(k, i)) == gamma


def test_chi_needs_a_nonempty_top_row():
    p = ClassParams(3, 1)
    gamma = next(g for g in members_by_profile("Q", p, 5).get((1, 0), []))
    with pytest.raises(DomainError):
        chi(gamma, p)


def test_chi_rejects_non_q_input():
    alpha = parse_overpartition(",".join(load("second_reduction_chain.json")["steps"][0]["rows"].values()))
    with pytest.raises(DomainError):
        chi(alpha, P41)


# -- exhaustive round trips (small) and random properties ------------------------

@pytest.mark.parametrize("k", [2, 3])
def test_round_trips_exhaustive(k):
    for i in range(1, k + 1):
        p = ClassParams(k, i)
        for n in range(11):
            members = [x for group in members_by_profile("U", p, n).values() for x in group]
            for lam in members:
                alpha, beta = phi(lam, p)
                assert phi_inv(alpha, beta, p) == lam
                gamma, delta = psi(alpha, p)
                assert psi_inv(gamma, delta, p) == alpha
                assert lam.weight == gamma.weight + sum(beta.parts) + sum(delta.parts)
                if gordon_mark(gamma).count(k - 1):
                    assert chi_inv(chi(gamma, p), p) == gamma


@st.composite
def u_members(draw):
    k = draw(st.integers(2, 4))
    i = draw(st.integers(1, k))
    p = ClassParams(k, i)
    n = draw(st.integers(1, 14))
    pool = [lam for lam in overpartitions_of(n) if satisfies_D(lam, p) and in_U(lam, p)]
    if not pool:
        return p, Overpartition()
    return p, draw(st.sampled_from(pool))


@settings(max_examples=150, deadline=None)
@given(u_members())
def test_composed_maps_preserve_weight_and_invert(case):
    p, lam = case
    if not lam.parts:
        return
    alpha, beta = phi(lam, p)
    gamma, delta = psi(alpha, p)
    assert is_in_P(alpha, p) and is_in_Q(gamma, p)
    profile = gordon_mark(lam).profile(p.k)
    assert gordon_mark(alpha).profile(p.k) == gordon_mark(gamma).profile(p.k) == profile
    assert all(b < profile[0] for b in beta.parts)
    assert len(delta.parts) <= profile[-1]
    assert psi_inv(gamma, delta, p) == alpha and phi_inv(alpha, beta, p) == lam
