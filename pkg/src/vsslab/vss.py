"""Discrete-log commitments to polynomial coefficients and share verification.

The core identity: for commitments c_j = g**a_j mod p and a share value v
claimed to be P(k), verification accepts exactly when

    g**v == prod_j c_j ** (k**j)  (mod p)

Both sides live in the cyclic group generated by g, whose order d divides
p - 1. Exponents therefore only matter mod d, which is why verification
reduces them (sound, and keeps huge honest integer shares cheap) and why
a value that is congruent to P(k) mod d passes even though it is a
different field element. That gap is the whole vulnerability; the
hardened mode closes it by forcing every value below a prime order q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .errors import DealerMismatch, EmptyInput, ModeMismatch, TooLarge, WrongMode
from .numtheory import GroupParams, Mode
from .poly import SecretPolynomial

if TYPE_CHECKING:  # metadata only; verification never looks at it
    from .attack import ForgeryStrategy


@dataclass(frozen=True)
class CommitmentVector:
    """Public commitments c_j = g**a_j mod p, one per coefficient."""

    dealer: int
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(self.c))
        if len(self.c) < 1:
            raise ValueError("commitment vector cannot be empty")


@dataclass(frozen=True)
class Share:
    """One dealt share.

    value is unbounded in vulnerable mode (the dealer sends the exact
    integer P(k)) and lies below q in hardened mode. provenance records
    how the simulation built the share; it is bookkeeping for reports
    and tests, and no verification path reads it.
    """

    dealer: int
    recipient: int
    value: int
    provenance: "ForgeryStrategy | None" = None

    def __post_init__(self):
        if self.recipient < 1:
            raise ValueError("recipient ids start at 1")
        if self.value < 0:
            raise ValueError("share values are non-negative")

    @property
    def forged(self) -> bool:
        return self.provenance is not None


def commit(poly: SecretPolynomial, params: GroupParams) -> CommitmentVector:
    """Commit to every coefficient of poly under params.

    Raises ModeMismatch when the polynomial's field does not match the
    mode (coefficients must be in Z_p for vulnerable, Z_q for hardened).
    """
    if poly.field_modulus != params.field_modulus:
        raise ModeMismatch(
            f"polynomial over Z_{poly.field_modulus} does not fit "
            f"{params.mode.value} parameters (expected Z_{params.field_modulus})"
        )
    return CommitmentVector(
        dealer=poly.dealer,
        c=tuple(pow(params.g, a, params.p) for a in poly.coeffs),
    )


def verify_share(share: Share, commits: CommitmentVector, params: GroupParams) -> bool:
    """Check g**value against the commitment product at the share's point.

    Exponents are reduced mod d = ord(g) before exponentiating; every
    base involved lies in the subgroup generated by g, so the reduction
    never changes the outcome. Acceptance is therefore exactly the
    congruence value == P(k) (mod d).
    """
    if share.dealer != commits.dealer:
        raise DealerMismatch(
            f"share from dealer {share.dealer} checked against commitments of {commits.dealer}"
        )
    k = share.recipient
    if not 0 < k < params.p:
        raise ValueError(f"evaluation point {k} outside (0, p)")
    left = pow(params.g, share.value % params.d, params.p)
    right = 1
    k_power = 1 % params.d  # k**j mod d, starting at j = 0
    for c_j in commits.c:
        right = right * pow(c_j, k_power, params.p) % params.p
        k_power = k_power * k % params.d
    return left == right


def range_check(share: Share, params: GroupParams) -> bool:
    """Hardened-mode acceptance of the share's numeric range (value < q).

    Raises WrongMode on vulnerable parameters: exact integer shares are
    unbounded there, so no range test exists.
    """
    if params.mode is not Mode.HARDENED:
        raise WrongMode("range check only exists in hardened mode")
    return share.value < params.q


def commitment_in_group(commits: CommitmentVector, params: GroupParams) -> bool:
    """True when every entry lies in the order-d subgroup (c**d == 1 mod p)."""
    return all(pow(c_j, params.d, params.p) == 1 for c_j in commits.c)


def aggregate_public_key(all_commits, params: GroupParams) -> int:
    """Product of the constant-term commitments: the group public key.

    Equals g ** (sum of dealer secrets) mod p, and is available to every
    party before any secret is reconstructed.
    """
    all_commits = tuple(all_commits)
    if not all_commits:
        raise EmptyInput("no commitment vectors supplied")
    out = 1
    for cv in all_commits:
        out = out * cv.c[0] % params.p
    return out


# ---------------------------------------------------------------------------
# unreduced integer commitments (the storage-blowup mitigation, demo only)
# ---------------------------------------------------------------------------

# A single commitment may occupy at most 2**20 bits (128 KiB) before we
# refuse to build it. Hitting this guard is the point of the demo: the
# mitigation of committing to g**a without reduction is not storable at
# cryptographic sizes.
INTEGER_COMMITMENT_GUARD_BITS = 1 << 20

# Representative exponent magnitude for a 1024-bit prime field.
PROJECTION_EXPONENT_LOG2 = 1024


@dataclass(frozen=True)
class SizeEntry:
    """One executed row: exponent a and the measured bits of g**a."""

    exponent: int
    bit_length: int


@dataclass(frozen=True)
class ProjectedSize:
    """Formula-only row; the underlying integer is never materialized."""

    exponent_log2: int
    bit_length: int
    infeasible: bool


@dataclass(frozen=True)
class SizeReport:
    g: int
    entries: tuple[SizeEntry, ...]
    projected: ProjectedSize


def projected_bit_length(g: int, a: int) -> int:
    """floor(a * log2(g)) + 1, the bit length g**a would have.

    Computed with exact Fraction arithmetic on the float log, so for g a
    power of two (log2 exact) the result is exact: bitlen(2**a) == a + 1.
    """
    if g < 2 or a < 0:
        raise ValueError("need g >= 2 and a >= 0")
    return int(Fraction(math.log2(g)) * a) + 1


def commit_integer(poly: SecretPolynomial, g: int):
    """Commitments g**a as exact unbounded integers, plus a size report.

    Refuses (TooLarge) any coefficient where a * bitlen(g) exceeds the
    2**20-bit guard; the report always carries a projected row for a
    1024-bit-scale exponent, computed by formula and flagged infeasible
    whenever it breaks the same guard, which at that scale it always does.
    """
    if g < 2:
        raise ValueError(f"generator must be at least 2, got {g}")
    g_bits = g.bit_length()
    for a in poly.coeffs:
        if a * g_bits > INTEGER_COMMITMENT_GUARD_BITS:
            raise TooLarge(
                f"unreduced commitment for exponent {a} would need about "
                f"{a * (g_bits - 1)} bits, over the {INTEGER_COMMITMENT_GUARD_BITS}-bit guard"
            )
    values = tuple(g ** a for a in poly.coeffs)
    entries = tuple(
        SizeEntry(exponent=a, bit_length=v.bit_length())
        for a, v in zip(poly.coeffs, values)
    )
    projected_bits = projected_bit_length(g, 1 << PROJECTION_EXPONENT_LOG2)
    projected = ProjectedSize(
        exponent_log2=PROJECTION_EXPONENT_LOG2,
        bit_length=projected_bits,
        infeasible=projected_bits > INTEGER_COMMITMENT_GUARD_BITS,
    )
    return values, SizeReport(g=g, entries=entries, projected=projected)
