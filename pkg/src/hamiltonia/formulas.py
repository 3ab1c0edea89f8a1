"""Exact closed-form Hamiltonian cycle counts and bounds.

Everything that feeds a comparison is computed with Python integers or
``fractions.Fraction``; the only floats are the display-only growth-rate
bounds (`eppstein_bound`, `gebauer_bound`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import BadParameters, UndecidableAtPrecision


def iroot(x: int, k: int) -> int:
    """Floor of the real ``k``-th root of a nonnegative integer."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    # Newton iteration from an overestimate decreases monotonically to the floor
    r = 1 << -(-x.bit_length() // k)
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def ceil_root(x: int, k: int) -> int:
    r = iroot(x, k)
    return r if r ** k == x else r + 1


@dataclass(frozen=True)
class HValue:
    """``coefficient * base ** exponent`` with a rational exponent."""

    coefficient: int
    base: int
    exponent: Fraction

    def __float__(self) -> float:
        return self.coefficient * float(self.base) ** float(self.exponent)

    def power_form(self) -> tuple[int, int]:
        """``(N, q)`` with value ``N ** (1/q)`` exactly."""
        q = self.exponent.denominator
        return self.coefficient ** q * self.base ** self.exponent.numerator, q


def _check_k(k: int) -> None:
    if k < 3:
        raise BadParameters(f"k={k}: the G(n,k) family needs k >= 3")


def h_formula(n: int, k: int) -> int | HValue:
    """``(k-1)^2 * ((k-2)!)^(n/(k+1))``; an int whenever ``k+1`` divides ``n``."""
    _check_k(k)
    if n < 1:
        raise BadParameters("n must be positive")
    if n % (k + 1) == 0:
        return (k - 1) ** 2 * factorial(k - 2) ** (n // (k + 1))
    return HValue((k - 1) ** 2, factorial(k - 2), Fraction(n, k + 1))


def h_chain_form(k: int, m: int) -> int:
    """The block-by-block product ``[(k-1)!]^2 [(k-2)!]^(m-2)`` for ``m >= 2`` blocks."""
    _check_k(k)
    if m < 2:
        raise BadParameters("need m >= 2 blocks")
    return factorial(k - 1) ** 2 * factorial(k - 2) ** (m - 2)


def h_power(n: int, k: int) -> int:
    """``h(n,k) ** (k+1)`` as an exact integer."""
    _check_k(k)
    return (k - 1) ** (2 * (k + 1)) * factorial(k - 2) ** n


def ceil_h(n: int, k: int) -> int:
    """Exact ceiling of ``h(n,k)`` for any ``n >= 1``."""
    _check_k(k)
    if n < 1:
        raise BadParameters("n must be positive")
    return ceil_root(h_power(n, k), k + 1)


def below_h(count: int, n: int, k: int) -> bool:
    """Whether an integer count is strictly below ``h(n,k)``."""
    return count ** (k + 1) < h_power(n, k)


def gstar_m(n: int) -> int:
    if n < 16 or (n - 10) % 6:
        raise BadParameters(f"n={n} is not of the form 10 + 6m with m >= 1")
    return (n - 10) // 6


def gstar_count(n: int) -> int:
    return 36 * 2 ** gstar_m(n)


def conj2_power(n: int) -> int:
    """``(9 * 2^((n+2)/6)) ** 6``."""
    return 9 ** 6 * 2 ** (n + 2)


def conj2_bound_ceil(n: int) -> int:
    return ceil_root(conj2_power(n), 6)


def below_conj2(count: int, n: int) -> bool:
    return count ** 6 < conj2_power(n)


_EVEN_CHAIN = {6: (14400, 48), 8: (25401600, 1968)}


def even_chain_order(k: int, m: int) -> int:
    """Vertex count of the even-degree chain with ``m`` middle blocks."""
    return 2 * (k + 1) + m * (k + 2)


def even_chain_count(k: int, n: int) -> int:
    """Hamiltonian cycle count quoted for the even-degree chain.

    Only ``k`` in {4, 6, 8} have known coefficients; ``k = 4`` is the
    ``G*`` family.  ``m = 0`` (two end blocks only) is accepted here.
    """
    if k == 4:
        if n == 10:
            return 36
        return gstar_count(n)
    if k not in _EVEN_CHAIN:
        raise BadParameters(f"no closed form known for k={k}")
    base_n = 2 * (k + 1)
    step = k + 2
    if n < base_n or (n - base_n) % step:
        raise BadParameters(f"n={n} is not on the k={k} chain lattice {base_n} + {step}m")
    coeff, ratio = _EVEN_CHAIN[k]
    return coeff * ratio ** ((n - base_n) // step)


def complete_count(k: int) -> int:
    """Hamiltonian cycles in ``K_{k+1}``: ``k!/2``."""
    if k < 2:
        raise BadParameters("K_{k+1} needs k >= 2 for a Hamiltonian cycle")
    return factorial(k) // 2


def menage_count(k: int) -> int:
    """Hamiltonian cycles of the cocktail party graph on ``k + 2`` vertices.

    Alternating sum over ``i = 0..l`` with ``l = k/2 + 1`` of
    ``(-1)^i C(l, i) (k - i + 1)! 2^(i-1)``, evaluated as twice the sum
    and halved at the end so the ``i = 0`` term stays integral.
    """
    if k < 2 or k % 2:
        raise BadParameters(f"k={k} must be even and >= 2")
    l = k // 2 + 1
    twice = 0
    for i in range(l + 1):
        twice += (-1) ** i * comb(l, i) * factorial(k - i + 1) * 2 ** i
    assert twice % 2 == 0
    return twice // 2


def e_enclosure(bits: int) -> tuple[Fraction, Fraction]:
    """Rational ``lo < e < hi`` with ``hi - lo < 2**-bits``.

    Partial sums of ``sum 1/j!`` bound ``e`` from below; the tail after
    ``1/N!`` is below ``1/(N! * N)``.
    """
    lo = Fraction(0)
    term = Fraction(1)
    j = 0
    while True:
        lo += term
        j += 1
        term /= j
        # lo holds 1/0! .. 1/(j-1)!; the rest is below (1/j!) * (j+1)/j
        width = term * Fraction(j + 1, j)
        if j > 1 and width < Fraction(1, 2 ** bits):
            return lo, lo + width


@dataclass(frozen=True)
class BoundCheck:
    k: int
    cocktail_below: bool
    h_above: bool
    bits: int


def _decide(lt_if: bool, gt_if: bool) -> bool | None:
    if lt_if:
        return True
    if gt_if:
        return False
    return None


def singmaster_bound_check(k: int, max_bits: int = 1024) -> BoundCheck:
    """Certify both comparisons against ``(k+1)!/(2e)`` for even ``k``.

    ``cocktail_below``: ménage count < (k+1)!/(2e).
    ``h_above``: h(k+2, k) > (k+1)!/(2e), compared through
    ``h^(k+1)`` so the irrational root never appears.
    """
    if k < 4 or k % 2:
        raise BadParameters(f"k={k} must be even and >= 4")
    c = factorial(k + 1)
    cocktail = menage_count(k)
    hp = h_power(k + 2, k)
    bits = 64
    while bits <= max_bits:
        lo, hi = e_enclosure(bits)
        # X < c/(2e)  <=>  e < c/(2X)
        below = _decide(hi < Fraction(c, 2 * cocktail), lo > Fraction(c, 2 * cocktail))
        # c/(2e) ranges over [c/(2hi), c/(2lo)]
        above = _decide(hp > (Fraction(c) / (2 * lo)) ** (k + 1), hp < (Fraction(c) / (2 * hi)) ** (k + 1))
        if below is not None and above is not None:
            return BoundCheck(k, below, above, bits)
        bits *= 2
    raise UndecidableAtPrecision(f"k={k}: interval still straddles at {max_bits} bits")


def eppstein_bound(n: int) -> float:
    """``2^(n/3)``; display only."""
    return 2.0 ** (n / 3)


def gebauer_bound(n: int) -> float:
    """``1.276^n``; display only, never used in a decision."""
    return 1.276 ** n


def gebauer_base(k: int) -> int:
    if k < 3:
        raise BadParameters("k >= 3 required")
    return -(-(k - 1) // 2) * factorial(k - 1) * factorial(k - 2) * ((k + 1) // 2)


def gebauer_general(k: int, n: int) -> int | float:
    """``(ceil((k-1)/2) (k-1)! (k-2)! floor((k+1)/2))^(n/(2k))``; exact when ``2k | n``."""
    base = gebauer_base(k)
    if n % (2 * k) == 0:
        return base ** (n // (2 * k))
    return float(base) ** (n / (2 * k))
