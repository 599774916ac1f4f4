"""The symbolic Fock-space oracle: states, operators, overlaps, structure checks."""

from __future__ import annotations

import pytest

from chainbrackets.brackets import Convention, bracket
from chainbrackets.exactnum import GaussianRational, rational
from chainbrackets.fockoracle import (
    BosonOperator,
    CasimirGroup,
    FockState,
    KernelError,
    _nullspace_vector,
    apply,
    b_number_operator,
    build_chain1_state,
    build_chain2_state,
    casimir_check,
    creation_power,
    inner,
    is_exact_eigenstate,
    number_operator,
    oracle_bracket,
    pair_annihilation_b,
    pair_creation_b,
    seed_state,
    state_to_json,
    su11_commutator_check,
)
from chainbrackets.labels import LabelError, bracket_index_set


def gr(re, im=0):
    return GaussianRational.of(re, im)


def monomial(*occ):
    return FockState({tuple(occ): gr(1)})


def test_apply_number_operator():
    psi = monomial(1, 2, 0)
    assert apply(number_operator(2), psi) == psi.times(3)


def test_apply_annihilates_empty_mode():
    op = BosonOperator.single(gr(1), ann=((1, 1),))
    assert apply(op, monomial(2, 0, 1)).is_zero


def test_pair_creator_on_vacuum():
    out = apply(pair_creation_b(2), monomial(0, 0, 0))
    assert out == FockState({(0, 2, 0): gr(1), (0, 0, 2): gr(1)})


def test_inner_examples():
    vac = monomial(0, 0, 0)
    assert inner(vac, vac) == gr(1)
    two_s = apply(creation_power(0, 2), vac)
    assert inner(two_s, two_s) == gr(2)
    seed = seed_state(2, 1)
    assert inner(seed, seed) == gr(2)


def test_inner_conjugates_the_bra():
    a = monomial(1, 0, 0).scaled(gr(0, 1))
    b = monomial(1, 0, 0)
    assert inner(a, b) == gr(0, -1)
    assert inner(b, a) == gr(0, 1)


def test_seed_examples():
    assert seed_state(4, 0) == monomial(0, 0, 0, 0, 0)
    assert seed_state(2, 1) == FockState({(0, 1, 0): gr(1), (0, 0, 1): gr(0, 1)})
    assert seed_state(3, 2) == FockState(
        {(0, 2, 0, 0): gr(1), (0, 1, 1, 0): gr(0, 2), (0, 0, 2, 0): gr(-1)}
    )


def test_seed_is_killed_by_pair_annihilator_and_carries_seniority():
    for nu in (2, 3, 5):
        for tau in range(5):
            seed = seed_state(nu, tau)
            assert apply(pair_annihilation_b(nu), seed).is_zero
            assert is_exact_eigenstate(nu, seed, CasimirGroup.SO_NU, tau * (tau + nu - 2))


def test_chain1_states():
    st = build_chain1_state(2, 2, 0, 0)
    assert st.state == FockState({(2, 0, 0): gr(1)})
    assert st.norm_sq == 2
    st = build_chain1_state(2, 2, 2, 0)
    assert st.state == FockState({(0, 2, 0): gr(-1), (0, 0, 2): gr(-1)})
    assert st.norm_sq == 4
    st = build_chain1_state(2, 1, 1, 1)
    assert st.state == seed_state(2, 1)
    assert st.norm_squared() == 1


def test_chain1_eigenvalues():
    for nu in (2, 3):
        for N in range(5):
            for n in range(N + 1):
                for tau in range(n % 2, n + 1, 2):
                    st = build_chain1_state(nu, N, n, tau)
                    assert apply(number_operator(nu), st.state) == st.state.times(N)
                    assert apply(b_number_operator(nu), st.state) == st.state.times(n)
                    assert is_exact_eigenstate(
                        nu, st.state, CasimirGroup.SO_NU, tau * (tau + nu - 2)
                    )


def test_chain2_states_frozen():
    st = build_chain2_state(2, 2, 0, 0)
    assert st.state == FockState({(2, 0, 0): gr(-1), (0, 2, 0): gr(-1), (0, 0, 2): gr(-1)})
    assert st.norm_sq == 6
    st = build_chain2_state(2, 2, 2, 0)
    assert st.state == FockState(
        {(2, 0, 0): gr(1), (0, 2, 0): gr(rational(-1, 2)), (0, 0, 2): gr(rational(-1, 2))}
    )
    assert st.norm_sq == 3
    st = build_chain2_state(3, 4, 4, 4)
    assert st.state == seed_state(3, 4)


def test_chain2_casimir_triple():
    for nu in (2, 3):
        for N in range(5):
            for sigma in range(N % 2, N + 1, 2):
                for tau in range(sigma + 1):
                    for conv in Convention:
                        st = build_chain2_state(nu, N, sigma, tau, conv)
                        assert apply(number_operator(nu), st.state) == st.state.times(N)
                        assert is_exact_eigenstate(
                            nu,
                            st.state,
                            CasimirGroup.SO_NU_PLUS_ONE,
                            sigma * (sigma + nu - 1),
                            conv,
                        )
                        assert is_exact_eigenstate(
                            nu, st.state, CasimirGroup.SO_NU, tau * (tau + nu - 2), conv
                        )


def test_casimir_check_examples():
    st = build_chain2_state(2, 2, 2, 0)
    assert casimir_check(2, st.state, CasimirGroup.SO_NU_PLUS_ONE) == 6
    assert casimir_check(3, seed_state(3, 2), CasimirGroup.SO_NU) == 6
    vac = monomial(0, 0, 0)
    assert casimir_check(2, vac, CasimirGroup.SO_NU) == 0
    assert casimir_check(2, vac, CasimirGroup.SO_NU_PLUS_ONE) == 0
    with pytest.raises(LabelError):
        casimir_check(2, FockState({}), CasimirGroup.SO_NU)


def test_states_within_a_chain_are_orthogonal():
    nu, N = 2, 4
    chain1 = [
        build_chain1_state(nu, N, n, tau)
        for n in range(N + 1)
        for tau in range(n % 2, n + 1, 2)
    ]
    for i, a in enumerate(chain1):
        for b in chain1[i + 1 :]:
            assert inner(a.state, b.state).is_zero
    chain2 = [
        build_chain2_state(nu, N, sigma, tau)
        for sigma in range(N % 2, N + 1, 2)
        for tau in range(sigma + 1)
    ]
    for i, a in enumerate(chain2):
        for b in chain2[i + 1 :]:
            assert inner(a.state, b.state).is_zero


def test_oracle_bracket_examples():
    assert oracle_bracket(2, 2, 0, 0, 0) == (-1, rational(1, 3))
    assert oracle_bracket(2, 2, 2, 2, 0) == (1, rational(1, 3))
    assert oracle_bracket(4, 3, 3, 3, 3) == (1, rational(1))


def test_oracle_matches_closed_form_sample():
    for nu in (2, 3):
        for N in range(5):
            for tau in range(N + 1):
                try:
                    ns, sigmas = bracket_index_set(nu, N, tau)
                except LabelError:
                    continue
                for n in ns:
                    for sigma in sigmas:
                        for conv in Convention:
                            closed = bracket(nu, N, n, sigma, tau, conv)
                            sign, square = oracle_bracket(nu, N, n, sigma, tau, conv)
                            assert (closed.sign, closed.radicand) == (sign, square)


def test_barred_oracle_sign_rule():
    nu, N, tau = 2, 4, 0
    ns, sigmas = bracket_index_set(nu, N, tau)
    for n in ns:
        for sigma in sigmas:
            std = oracle_bracket(nu, N, n, sigma, tau, Convention.STANDARD)
            bar = oracle_bracket(nu, N, n, sigma, tau, Convention.BARRED)
            flip = -1 if ((n - tau) // 2) % 2 else 1
            assert bar == (flip * std[0], std[1])


def test_su11_commutator_examples():
    assert su11_commutator_check(2, 6)
    assert su11_commutator_check(3, 6)
    assert su11_commutator_check(5, 4)


def test_nullspace_guards():
    zero = GaussianRational.of(0)
    one = GaussianRational.of(1)
    # two zero columns: kernel is 2-dimensional, must be rejected
    z = FockState({})
    with pytest.raises(KernelError):
        _nullspace_vector([z, z])
    # independent columns: kernel is empty, must be rejected too
    a = FockState({(1, 0): one})
    b = FockState({(0, 1): one})
    with pytest.raises(KernelError):
        _nullspace_vector([a, b])
    vec = _nullspace_vector([a, a.times(-1)])
    assert vec[0] * GaussianRational.of(1) == vec[1] or vec == [one, one]


def test_invalid_labels_rejected():
    with pytest.raises(LabelError):
        build_chain1_state(2, 2, 3, 0)
    with pytest.raises(LabelError):
        build_chain2_state(2, 2, 1, 0)
    with pytest.raises(LabelError):
        oracle_bracket(3, 2, 1, 2, -1)


def test_state_to_json():
    dump = state_to_json(seed_state(2, 1))
    assert dump == [
        {"occ": [0, 0, 1], "re": "0", "im": "1"},
        {"occ": [0, 1, 0], "re": "1", "im": "0"},
    ]
