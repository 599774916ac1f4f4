"""Operator matrix elements: spherical-chain evaluation, then the two-step transform.

Matrix elements in the deformed chain are obtained by congruence with the
bracket table; every entry is certified against a direct oracle computation
with the constructed deformed states.  Only number-conserving scalar
operators are supported, so the transform is tau-diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ._backend import rational
from .brackets import Convention, as_convention, table
from .exactnum import GaussianRational, SurdSumError, SurdValue
from .fockoracle import (
    BosonOperator,
    apply,
    b_number_operator,
    build_chain2_state,
    inner,
    s_number_operator,
)
from .fockoracle import _real_part  # exactness guard shared with the oracle
from .labels import bracket_index_set

__all__ = [
    "OperatorSpec",
    "SphericalMatrix",
    "DeformedMatrix",
    "spherical_matrix",
    "boson_operator",
    "deformed_matrix",
    "deformed_matrix_oracle",
]


class OperatorSpec(Enum):
    """Built-in rotation-scalar, number-conserving operators."""

    B_NUMBER = "bnum"
    S_NUMBER = "snum"
    PAIRING = "pair"


def as_operator(value) -> OperatorSpec:
    if isinstance(value, OperatorSpec):
        return value
    return OperatorSpec(value)


@dataclass(frozen=True)
class SphericalMatrix:
    """Matrix in the oscillator chain, rows/columns indexed by n ascending."""

    nu: int
    N: int
    tau: int
    op: OperatorSpec
    ns: tuple[int, ...]
    entries: tuple[tuple[SurdValue, ...], ...]


@dataclass(frozen=True)
class DeformedMatrix:
    """Matrix in the deformed chain, rows/columns indexed by sigma ascending.

    oracle_backed lists (row, col) indices whose exact surd accumulation
    failed and whose value therefore comes from the oracle's sign/square
    protocol instead; empty for the built-in operators at desk scale.
    """

    nu: int
    N: int
    tau: int
    op: OperatorSpec
    convention: Convention
    sigmas: tuple[int, ...]
    entries: tuple[tuple[SurdValue, ...], ...]
    oracle_backed: frozenset = frozenset()


def spherical_matrix(nu: int, N: int, tau: int, op: OperatorSpec) -> SphericalMatrix:
    """Closed-form matrix in the oscillator chain.

    Number operators are diagonal.  The pairing operator moves one boson pair
    between the scalar mode and the b space, so it is tridiagonal in steps of
    two in n; its entries follow from the quasi-spin ladder action combined
    with scalar-mode counting, and carry the ladder-normalization phase.
    """
    op = as_operator(op)
    ns, _ = bracket_index_set(nu, N, tau)
    t = abs(tau)
    d = len(ns)
    zero = SurdValue.zero()
    entries = [[zero] * d for _ in range(d)]
    if op is OperatorSpec.B_NUMBER:
        for i, n in enumerate(ns):
            entries[i][i] = SurdValue.of_rational(n)
    elif op is OperatorSpec.S_NUMBER:
        for i, n in enumerate(ns):
            entries[i][i] = SurdValue.of_rational(N - n)
    else:
        for i in range(1, d):
            n = ns[i]
            radicand = rational(
                (N - n + 2) * (N - n + 1) * (n - t) * (n + t + nu - 2), 4
            )
            value = SurdValue(-1, radicand)
            entries[i - 1][i] = value
            entries[i][i - 1] = value
    return SphericalMatrix(nu, N, tau, op, ns, tuple(tuple(row) for row in entries))


def boson_operator(op: OperatorSpec, nu: int) -> BosonOperator:
    """The same operator as an explicit boson expression for the oracle route."""
    op = as_operator(op)
    if op is OperatorSpec.B_NUMBER:
        return b_number_operator(nu)
    if op is OperatorSpec.S_NUMBER:
        return s_number_operator(nu)
    half = GaussianRational(rational(1, 2), rational(0))
    up = BosonOperator(
        [(half, ((j, 2),), ((0, 2),)) for j in range(1, nu + 1)]
    )
    down = BosonOperator(
        [(half, ((0, 2),), ((j, 2),)) for j in range(1, nu + 1)]
    )
    return up + down


def _oracle_entry(states, i: int, j: int, applied) -> SurdValue:
    value = _real_part(inner(states[i].state, applied[j]))
    if not value:
        return SurdValue.zero()
    square = value * value / (states[i].norm_sq * states[j].norm_sq)
    return SurdValue(1 if value > 0 else -1, square)


def deformed_matrix_oracle(
    nu: int,
    N: int,
    tau: int,
    op: OperatorSpec,
    convention: Convention = Convention.STANDARD,
) -> DeformedMatrix:
    """Direct matrix in the deformed chain from the constructed oracle states."""
    op = as_operator(op)
    convention = as_convention(convention)
    _, sigmas = bracket_index_set(nu, N, tau)
    states = [build_chain2_state(nu, N, s, tau, convention) for s in sigmas]
    operator = boson_operator(op, nu)
    applied = [apply(operator, st.state) for st in states]
    d = len(sigmas)
    entries = tuple(
        tuple(_oracle_entry(states, i, j, applied) for j in range(d)) for i in range(d)
    )
    return DeformedMatrix(nu, N, tau, op, convention, sigmas, entries)


def deformed_matrix(
    nu: int,
    N: int,
    tau: int,
    op: OperatorSpec,
    convention: Convention = Convention.STANDARD,
) -> DeformedMatrix:
    """Two-step transform: congruence of the spherical matrix by the bracket table.

    Entries are accumulated in exact surd arithmetic.  Should a sum ever mix
    incompatible radicands, that entry falls back to the oracle value and is
    reported in oracle_backed.
    """
    op = as_operator(op)
    convention = as_convention(convention)
    sph = spherical_matrix(nu, N, tau, op)
    tab = table(nu, N, tau, convention)
    d = len(tab.sigmas)
    oracle = None
    backed = set()
    entries = []
    for i in range(d):
        row = []
        for j in range(d):
            try:
                acc = SurdValue.zero()
                for a in range(d):
                    for b in range(d):
                        s = sph.entries[a][b]
                        if s.is_zero:
                            continue
                        acc = acc + tab.entries[a][i] * s * tab.entries[b][j]
                row.append(acc)
            except SurdSumError:
                if oracle is None:
                    oracle = deformed_matrix_oracle(nu, N, tau, op, convention)
                row.append(oracle.entries[i][j])
                backed.add((i, j))
        entries.append(tuple(row))
    return DeformedMatrix(
        nu, N, tau, op, convention, tab.sigmas, tuple(entries), frozenset(backed)
    )
