"""Secret polynomials, exact and modular evaluation, interpolation at zero."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateAbscissa, ModulusTooSmall, ZeroAbscissa
from .numtheory import is_prime, mod_inv
from .rng import SplitMix64


@dataclass(frozen=True)
class SecretPolynomial:
    """Dealer's polynomial; coeffs[0] is the secret being shared.

    Coefficients are canonical field elements below field_modulus
    (p for a vulnerable group, q for a hardened one).
    """

    dealer: int
    coeffs: tuple[int, ...]
    field_modulus: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.dealer < 0:
            raise ValueError("dealer id must be non-negative")
        if self.field_modulus < 2:
            raise ModulusTooSmall(f"field modulus must be at least 2, got {self.field_modulus}")
        if len(self.coeffs) < 1:
            raise ValueError("polynomial needs at least one coefficient")
        for c in self.coeffs:
            if not 0 <= c < self.field_modulus:
                raise ValueError(f"coefficient {c} outside [0, {self.field_modulus})")

    @property
    def secret(self) -> int:
        return self.coeffs[0]

    @property
    def threshold(self) -> int:
        """Number of evaluations needed to pin the polynomial down."""
        return len(self.coeffs)


def sample_polynomial(t: int, field_modulus: int, dealer: int, rng: SplitMix64) -> SecretPolynomial:
    """Uniform degree-(t-1) polynomial over Z_field_modulus.

    Each coefficient is drawn by rejection sampling, so the distribution
    is exactly uniform on [0, field_modulus).
    """
    if t < 1:
        raise ValueError(f"need at least one coefficient, got t={t}")
    if not is_prime(field_modulus):
        raise ValueError(f"field modulus {field_modulus} must be prime")
    return SecretPolynomial(
        dealer=dealer,
        coeffs=tuple(rng.randbelow(field_modulus) for _ in range(t)),
        field_modulus=field_modulus,
    )


def eval_integer(poly: SecretPolynomial, k: int) -> int:
    """Exact integer value of the polynomial at k; no reduction anywhere.

    Horner evaluation over unbounded ints. This is what a vulnerable-mode
    dealer actually transmits: the true value, not a residue.
    """
    if k < 1:
        raise ValueError(f"evaluation point must be positive, got {k}")
    acc = 0
    for c in reversed(poly.coeffs):
        acc = acc * k + c
    return acc


def eval_mod(poly: SecretPolynomial, k: int, m: int) -> int:
    """Polynomial value at k reduced mod m (equals eval_integer(poly, k) % m)."""
    if m < 2:
        raise ModulusTooSmall(f"modulus must be at least 2, got {m}")
    if k < 1:
        raise ValueError(f"evaluation point must be positive, got {k}")
    acc = 0
    for c in reversed(poly.coeffs):
        acc = (acc * k + c) % m
    return acc


def lagrange_weights(xs, m: int) -> tuple[int, ...]:
    """Lagrange weights at zero for the abscissas xs, mod m.

    weight_j = prod_{l != j} x_l * (x_l - x_j)^-1. For any polynomial of
    degree below len(xs), sum_j y_j * weight_j recovers its constant term;
    in particular the weights themselves always sum to 1 mod m.
    """
    xs = tuple(xs)
    if not xs:
        raise ValueError("need at least one abscissa")
    seen = set()
    for x in xs:
        if x == 0:
            raise ZeroAbscissa("abscissa 0 would address the secret itself")
        if not 0 < x < m:
            raise ValueError(f"abscissa {x} outside (0, {m})")
        if x in seen:
            raise DuplicateAbscissa(f"abscissa {x} appears twice")
        seen.add(x)
    weights = []
    for j, xj in enumerate(xs):
        num = 1
        den = 1
        for l, xl in enumerate(xs):
            if l == j:
                continue
            num = num * xl % m
            den = den * (xl - xj) % m
        weights.append(num * mod_inv(den, m) % m)
    return tuple(weights)


def lagrange_zero(points, m: int) -> int:
    """Interpolate (x, y) points and return the value at x = 0, mod m.

    With at least threshold-many honest points of a secret polynomial
    this is the secret; with any forged point it is whatever the forgery
    arithmetic says it is.
    """
    points = tuple(points)
    if not points:
        raise ValueError("need at least one point")
    for _, y in points:
        if not 0 <= y < m:
            raise ValueError(f"ordinate {y} outside [0, {m})")
    weights = lagrange_weights((x for x, _ in points), m)
    return sum(y * w for (_, y), w in zip(points, weights)) % m
