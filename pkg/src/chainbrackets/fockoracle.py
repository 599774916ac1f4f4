"""Independent symbolic boson Fock-space oracle.

Both chains' basis states are constructed here from first principles: ladder
operators acting on a common seed, and exact kernel solving for the intrinsic
deformed states.  None of the closed forms from chainbrackets.brackets enter
the construction, so overlaps of these states are the ground truth against
which every closed form is certified.

All arithmetic is exact (Gaussian rationals over arbitrary-precision
integers); no floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from ._backend import rational
from .brackets import Convention, as_convention
from .exactnum import GaussianRational
from .labels import ChainILabel, ChainIILabel, LabelError, check_dimension

__all__ = [
    "KernelError",
    "CasimirGroup",
    "FockState",
    "BosonOperator",
    "NormalizedState",
    "apply",
    "inner",
    "seed_state",
    "build_chain1_state",
    "build_chain2_state",
    "oracle_bracket",
    "casimir_apply",
    "casimir_check",
    "is_exact_eigenstate",
    "su11_commutator_check",
    "state_to_json",
    "clear_caches",
]

_GR_ZERO = GaussianRational(rational(0), rational(0))
_GR_ONE = GaussianRational(rational(1), rational(0))


class KernelError(RuntimeError):
    """The pair-annihilation kernel did not come out one-dimensional: a bug."""


class CasimirGroup(Enum):
    SO_NU = "so_nu"
    SO_NU_PLUS_ONE = "so_nu_plus_one"


class FockState:
    """Finite linear combination of occupation monomials with Gaussian-rational coefficients.

    Keys are (nu+1)-tuples of occupation numbers, mode 0 being the scalar
    boson.  Monomials are unnormalized products of creation operators on the
    vacuum, so <occ|occ> = prod occ_j!.  Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {occ: c for occ, c in terms.items() if not c.is_zero}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def scaled(self, c: GaussianRational) -> "FockState":
        return FockState({occ: amp * c for occ, amp in self.terms.items()})

    def times(self, scalar) -> "FockState":
        """Scale by an exact real scalar (int or rational)."""
        return FockState({occ: amp.times(scalar) for occ, amp in self.terms.items()})

    def plus(self, other: "FockState") -> "FockState":
        out = dict(self.terms)
        for occ, amp in other.terms.items():
            prev = out.get(occ)
            out[occ] = amp if prev is None else prev + amp
        return FockState(out)

    def minus(self, other: "FockState") -> "FockState":
        return self.plus(other.times(-1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockState):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"FockState({len(self.terms)} monomials)"


class BosonOperator:
    """Sum of normal-ordered creation/annihilation monomials.

    Each term is (coeff, cre, ann) with cre/ann sparse tuples of
    (mode, power) pairs; the term acts as coeff * prod b_dag^cre * prod b^ann.
    Products of operators are evaluated by composing `apply`, never
    symbolically.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple(terms)

    @classmethod
    def single(cls, coeff: GaussianRational, cre=(), ann=()) -> "BosonOperator":
        return cls([(coeff, tuple(cre), tuple(ann))])

    def __add__(self, other: "BosonOperator") -> "BosonOperator":
        return BosonOperator(self.terms + other.terms)

    def __sub__(self, other: "BosonOperator") -> "BosonOperator":
        return self + other.scaled(GaussianRational(rational(-1), rational(0)))

    def scaled(self, c: GaussianRational) -> "BosonOperator":
        return BosonOperator([(coeff * c, cre, ann) for coeff, cre, ann in self.terms])


def apply(op: BosonOperator, psi: FockState) -> FockState:
    """Exact linear action of op on psi."""
    out: dict = {}
    for coeff, cre, ann in op.terms:
        for occ, amp in psi.terms.items():
            factor = 1
            if ann:
                ok = True
                for mode, power in ann:
                    x = occ[mode]
                    if x < power:
                        ok = False
                        break
                    for _ in range(power):
                        factor *= x
                        x -= 1
                if not ok:
                    continue
            if cre or ann:
                new = list(occ)
                for mode, power in ann:
                    new[mode] -= power
                for mode, power in cre:
                    new[mode] += power
                key = tuple(new)
            else:
                key = occ
            value = amp * coeff
            if factor != 1:
                value = value.times(factor)
            prev = out.get(key)
            out[key] = value if prev is None else prev + value
    return FockState(out)


def inner(psi: FockState, phi: FockState) -> GaussianRational:
    """Boson Fock inner product <psi|phi> with the monomial weights prod occ_j!."""
    a, b = psi.terms, phi.terms
    keys = a.keys() if len(a) <= len(b) else b.keys()
    total = _GR_ZERO
    for occ in keys:
        ca = a.get(occ)
        cb = b.get(occ)
        if ca is None or cb is None:
            continue
        weight = 1
        for x in occ:
            if x > 1:
                weight *= math.factorial(x)
        total = total + (ca.conjugate() * cb).times(weight)
    return total


# ---------------------------------------------------------------------------
# Operator constructors
# ---------------------------------------------------------------------------


def _one() -> GaussianRational:
    return GaussianRational(rational(1), rational(0))


def _i() -> GaussianRational:
    return GaussianRational(rational(0), rational(1))


def creation_power(mode: int, power: int) -> BosonOperator:
    return BosonOperator.single(_one(), cre=((mode, power),))


@lru_cache(maxsize=None)
def pair_creation_b(nu: int) -> BosonOperator:
    """Sum of squared creation operators over the nu non-scalar modes."""
    return BosonOperator([(_one(), ((j, 2),), ()) for j in range(1, nu + 1)])


@lru_cache(maxsize=None)
def pair_annihilation_b(nu: int) -> BosonOperator:
    return BosonOperator([(_one(), (), ((j, 2),)) for j in range(1, nu + 1)])


@lru_cache(maxsize=None)
def pair_creation_full(nu: int, barred: bool = False) -> BosonOperator:
    """Scalar-squared plus (standard) or minus (barred) the b-space pair creator."""
    sign = _one() if not barred else GaussianRational(rational(-1), rational(0))
    terms = [(_one(), ((0, 2),), ())]
    terms += [(sign, ((j, 2),), ()) for j in range(1, nu + 1)]
    return BosonOperator(terms)


@lru_cache(maxsize=None)
def pair_annihilation_full(nu: int, barred: bool = False) -> BosonOperator:
    sign = _one() if not barred else GaussianRational(rational(-1), rational(0))
    terms = [(_one(), (), ((0, 2),))]
    terms += [(sign, (), ((j, 2),)) for j in range(1, nu + 1)]
    return BosonOperator(terms)


@lru_cache(maxsize=None)
def number_operator(nu: int) -> BosonOperator:
    return BosonOperator([(_one(), ((j, 1),), ((j, 1),)) for j in range(nu + 1)])


@lru_cache(maxsize=None)
def b_number_operator(nu: int) -> BosonOperator:
    return BosonOperator([(_one(), ((j, 1),), ((j, 1),)) for j in range(1, nu + 1)])


@lru_cache(maxsize=None)
def s_number_operator(nu: int) -> BosonOperator:
    return BosonOperator([(_one(), ((0, 1),), ((0, 1),))])


def so_generator(nu: int, j: int, k: int) -> BosonOperator:
    """Antisymmetric generator i(b_j^dag b_k - b_k^dag b_j) for 1 <= j < k <= nu."""
    return BosonOperator(
        [
            (_i(), ((j, 1),), ((k, 1),)),
            (GaussianRational(rational(0), rational(-1)), ((k, 1),), ((j, 1),)),
        ]
    )


def d_generator(nu: int, j: int, barred: bool = False) -> BosonOperator:
    """Mixing generator between the scalar mode and b_j.

    Standard realization: i(s^dag b_j - b_j^dag s); barred: s^dag b_j + b_j^dag s.
    """
    if barred:
        return BosonOperator(
            [(_one(), ((0, 1),), ((j, 1),)), (_one(), ((j, 1),), ((0, 1),))]
        )
    return BosonOperator(
        [
            (_i(), ((0, 1),), ((j, 1),)),
            (GaussianRational(rational(0), rational(-1)), ((j, 1),), ((0, 1),)),
        ]
    )


@lru_cache(maxsize=None)
def quasispin_plus(nu: int) -> BosonOperator:
    half = GaussianRational(rational(1, 2), rational(0))
    return pair_creation_b(nu).scaled(half)


@lru_cache(maxsize=None)
def quasispin_minus(nu: int) -> BosonOperator:
    half = GaussianRational(rational(1, 2), rational(0))
    return pair_annihilation_b(nu).scaled(half)


@lru_cache(maxsize=None)
def quasispin_zero(nu: int) -> BosonOperator:
    half = GaussianRational(rational(1, 2), rational(0))
    shift = GaussianRational(rational(nu, 4), rational(0))
    return b_number_operator(nu).scaled(half) + BosonOperator.single(shift)


# ---------------------------------------------------------------------------
# State construction
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def seed_state(nu: int, tau: int) -> FockState:
    """(b_1^dag + i b_2^dag)^tau on the vacuum: the common seniority-tau seed.

    Annihilated by the b-space pair annihilator for every nu >= 2 because the
    direction vector (1, i, 0, ...) is null under the sum of squares.
    """
    check_dimension(nu)
    if tau < 0:
        raise LabelError(f"tau={tau} must be nonnegative")
    terms = {}
    for j in range(tau + 1):
        occ = [0] * (nu + 1)
        occ[1] = tau - j
        occ[2] = j
        c = math.comb(tau, j)
        re, im = ((c, 0), (0, c), (-c, 0), (0, -c))[j % 4]
        terms[tuple(occ)] = GaussianRational(rational(re), rational(im))
    return FockState(terms)


@dataclass(frozen=True)
class NormalizedState:
    """state / sqrt(norm_sq): an exactly unit-norm state in factored form.

    The raw FockState keeps Gaussian-rational coefficients (with the ladder
    phase already folded in); its exact squared norm is carried alongside so
    the pair has squared norm 1 without ever forming an irrational number.
    """

    state: FockState
    norm_sq: object

    def norm_squared(self):
        return _real_part(inner(self.state, self.state)) / self.norm_sq


def _real_part(value: GaussianRational):
    if value.im != 0:
        raise KernelError(f"expected a real inner product, got imaginary part {value.im}")
    return value.re


def _real_norm_sq(psi: FockState):
    nsq = _real_part(inner(psi, psi))
    if nsq <= 0:
        raise KernelError("state unexpectedly has nonpositive norm")
    return nsq


@lru_cache(maxsize=None)
def build_chain1_state(nu: int, N: int, n: int, tau: int) -> NormalizedState:
    """Oscillator-chain state: scalar bosons on top of the pair ladder on the seed.

    Built without any closed-form normalization: the ladder phase
    (-1)^((n-tau)/2) is applied and the exact norm is computed afterwards.
    """
    t = abs(tau)
    ChainILabel(nu, N, n, tau)
    psi = seed_state(nu, t)
    for _ in range((n - t) // 2):
        psi = apply(pair_creation_b(nu), psi)
    if N > n:
        psi = apply(creation_power(0, N - n), psi)
    if ((n - t) // 2) % 2:
        psi = psi.times(-1)
    return NormalizedState(psi, _real_norm_sq(psi))


def _nullspace_vector(images: list[FockState]) -> list[GaussianRational]:
    """The unique (up to scale) kernel vector of the column maps; exact elimination."""
    ncols = len(images)
    keys = sorted(set().union(*(im.terms.keys() for im in images)))
    rows = [[im.terms.get(k, _GR_ZERO) for im in images] for k in keys]
    pivot_of_col: dict[int, int] = {}
    rank = 0
    for col in range(ncols):
        pivot = next(
            (i for i in range(rank, len(rows)) if not rows[i][col].is_zero), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        pivot_of_col[col] = rank
        rank += 1
    free = [c for c in range(ncols) if c not in pivot_of_col]
    if len(free) != 1:
        raise KernelError(
            f"pair-annihilation kernel has dimension {len(free)}, expected 1"
        )
    f0 = free[0]
    vec = [_GR_ZERO] * ncols
    vec[f0] = _GR_ONE
    for col, r in pivot_of_col.items():
        vec[col] = -rows[r][f0]
    return vec


@lru_cache(maxsize=None)
def _chain2_intrinsic(nu: int, sigma: int, t: int, barred: bool) -> FockState:
    """Unique sigma-boson seed-built state killed by the full pair annihilator.

    Solved by exact Gaussian elimination over the span of
    (scalar^p)(pair-creator^q) seed with p + 2q = sigma - t; phase fixed so the
    coefficient of the pure scalar-power-times-seed monomial is positive.
    """
    seed = seed_state(nu, t)
    span = []
    v = seed
    span_by_q = [seed]
    for _ in range((sigma - t) // 2):
        v = apply(pair_creation_b(nu), v)
        span_by_q.append(v)
    for q, base in enumerate(span_by_q):
        p = sigma - t - 2 * q
        span.append(apply(creation_power(0, p), base) if p else base)
    vec = _nullspace_vector([apply(pair_annihilation_full(nu, barred), v) for v in span])
    if vec[0].is_zero:
        raise KernelError("kernel vector has no pure scalar-ladder component")
    scale = vec[0].inverse()
    out = FockState({})
    for c, v in zip(vec, span):
        out = out.plus(v.scaled(c * scale))
    marker = (sigma - t, t) + (0,) * (nu - 1)
    lead = out.terms[marker]
    if lead.im != 0 or lead.re <= 0:
        raise KernelError("phase fixing failed: leading coefficient not positive real")
    return out


@lru_cache(maxsize=None)
def build_chain2_state(
    nu: int, N: int, sigma: int, tau: int, convention: Convention = Convention.STANDARD
) -> NormalizedState:
    """Deformed-chain state: full pair ladder on the intrinsic kernel state.

    Independent of every closed form; the ladder phase (-1)^((N-sigma)/2) is
    applied and the exact norm computed afterwards.
    """
    convention = as_convention(convention)
    t = abs(tau)
    ChainIILabel(nu, N, sigma, tau)
    barred = convention is Convention.BARRED
    psi = _chain2_intrinsic(nu, sigma, t, barred)
    steps = (N - sigma) // 2
    for _ in range(steps):
        psi = apply(pair_creation_full(nu, barred), psi)
    if steps % 2:
        psi = psi.times(-1)
    return NormalizedState(psi, _real_norm_sq(psi))


def oracle_bracket(
    nu: int,
    N: int,
    n: int,
    sigma: int,
    tau: int,
    convention: Convention = Convention.STANDARD,
):
    """Sign and square of the overlap of the two constructed basis states.

    Returns (sign, square) with square = <1|2>^2 / (<1|1><2|2>) on the raw
    states, directly comparable to (sign, radicand) of the closed form.
    """
    one = build_chain1_state(nu, N, n, tau)
    two = build_chain2_state(nu, N, sigma, tau, as_convention(convention))
    overlap = _real_part(inner(one.state, two.state))
    if not overlap:
        return 0, rational(0)
    square = overlap * overlap / (one.norm_sq * two.norm_sq)
    return (1 if overlap > 0 else -1), square


# ---------------------------------------------------------------------------
# Casimir operators and structure checks
# ---------------------------------------------------------------------------


def _casimir_generators(
    nu: int, group: CasimirGroup, convention: Convention = Convention.STANDARD
) -> list[BosonOperator]:
    gens = [
        so_generator(nu, j, k)
        for j in range(1, nu + 1)
        for k in range(j + 1, nu + 1)
    ]
    if group is CasimirGroup.SO_NU_PLUS_ONE:
        barred = as_convention(convention) is Convention.BARRED
        gens += [d_generator(nu, j, barred) for j in range(1, nu + 1)]
    return gens


def casimir_apply(
    nu: int,
    psi: FockState,
    group: CasimirGroup,
    convention: Convention = Convention.STANDARD,
) -> FockState:
    """Quadratic Casimir (sum of squared generators) applied exactly to psi."""
    out = FockState({})
    for g in _casimir_generators(nu, group, convention):
        out = out.plus(apply(g, apply(g, psi)))
    return out


def casimir_check(
    nu: int,
    psi: FockState,
    group: CasimirGroup,
    convention: Convention = Convention.STANDARD,
):
    """Exact Rayleigh quotient <psi|C|psi> / <psi|psi>."""
    if psi.is_zero:
        raise LabelError("casimir_check needs a nonzero state")
    return _real_part(inner(psi, casimir_apply(nu, psi, group, convention))) / _real_part(
        inner(psi, psi)
    )


def is_exact_eigenstate(
    nu: int,
    psi: FockState,
    group: CasimirGroup,
    eigenvalue,
    convention: Convention = Convention.STANDARD,
) -> bool:
    """Termwise check C psi == eigenvalue * psi (exact, monomial by monomial)."""
    return casimir_apply(nu, psi, group, convention) == psi.times(rational(eigenvalue))


def _monomials(nu: int, cutoff: int):
    """All occupation tuples over nu+1 modes with total <= cutoff."""

    def rec(modes_left: int, budget: int):
        if modes_left == 1:
            for x in range(budget + 1):
                yield (x,)
            return
        for x in range(budget + 1):
            for rest in rec(modes_left - 1, budget - x):
                yield (x,) + rest

    yield from rec(nu + 1, cutoff)


def su11_commutator_check(nu: int, cutoff: int = 6) -> bool:
    """Quasi-spin commutators and pair-operator centralizer checks, symbolically.

    Verified exactly on every occupation monomial with total boson number up
    to the cutoff: [Q+, Q-] = -2 Q0, [Q0, Q+-] = +-Q+-, the b-space pair
    creator commutes with all rotation generators, and the full pair creator
    commutes with rotation and mixing generators alike.
    """
    check_dimension(nu)
    qp, qm, q0 = quasispin_plus(nu), quasispin_minus(nu), quasispin_zero(nu)
    rot = [so_generator(nu, j, k) for j in range(1, nu + 1) for k in range(j + 1, nu + 1)]
    mix = [d_generator(nu, j) for j in range(1, nu + 1)]
    pair_b = pair_creation_b(nu)
    pair_full = pair_creation_full(nu)

    def comm(a: BosonOperator, b: BosonOperator, m: FockState) -> FockState:
        return apply(a, apply(b, m)).minus(apply(b, apply(a, m)))

    for occ in _monomials(nu, cutoff):
        m = FockState({occ: _GR_ONE})
        if comm(qp, qm, m) != apply(q0, m).times(-2):
            return False
        if comm(q0, qp, m) != apply(qp, m):
            return False
        if comm(q0, qm, m) != apply(qm, m).times(-1):
            return False
        for g in rot:
            if not comm(pair_b, g, m).is_zero:
                return False
            if not comm(pair_full, g, m).is_zero:
                return False
        for g in mix:
            if not comm(pair_full, g, m).is_zero:
                return False
    return True


def state_to_json(psi: FockState) -> list[dict]:
    """JSON-able dump: one record per monomial with rational-string coefficients."""
    return [
        {"occ": list(occ), "re": str(c.re), "im": str(c.im)}
        for occ, c in sorted(psi.terms.items())
    ]


_CACHED = (
    seed_state,
    build_chain1_state,
    build_chain2_state,
    _chain2_intrinsic,
    pair_creation_b,
    pair_annihilation_b,
    pair_creation_full,
    pair_annihilation_full,
    number_operator,
    b_number_operator,
    s_number_operator,
    quasispin_plus,
    quasispin_minus,
    quasispin_zero,
)


def clear_caches() -> None:
    """Drop memoized states and operators (used when switching backends)."""
    for fn in _CACHED:
        fn.cache_clear()
