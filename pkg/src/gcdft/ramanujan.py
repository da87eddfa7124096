"""Three independent evaluators for the Ramanujan sum c_n(m).

The sum is defined over the k <= n coprime to n of exp(2*pi*i*k*m/n); it is
real, integer valued, and even in m, so the sign convention of the exponent
does not matter (c_n(m) == c_n(-m), which the tests pin down). All evaluators
reduce m mod n first; residue 0 is handled through gcd(0, n) = n.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import OracleScaleError
from .numtheory import divisor_tuple, moebius, totient

DEFINITION_SCALE_LIMIT = 10**6
FLOAT_TOLERANCE = 1e-6


@lru_cache(maxsize=2048)
def _coprime_indices(n: int) -> np.ndarray:
    k = np.arange(1, n + 1, dtype=np.int64)
    return k[np.gcd(k, n) == 1]


def ramanujan_definition(n: int, m: int) -> complex:
    """Floating-point sum over the k coprime to n; oracle use only (n <= 10^6).

    The imaginary part of the result should vanish and the real part should
    sit within FLOAT_TOLERANCE of an integer.
    """
    if n < 1:
        raise OracleScaleError("n must be >= 1")
    if n > DEFINITION_SCALE_LIMIT:
        raise OracleScaleError(
            f"definition oracle is rated for n <= {DEFINITION_SCALE_LIMIT}, got {n}"
        )
    k = _coprime_indices(n)
    # k*m is reduced mod n in exact integer arithmetic before the angle is
    # formed, keeping the phase error at the 1e-15 level even for huge m.
    phase = (k * (m % n)) % n
    return complex(np.exp(2j * np.pi * phase / n).sum())


@lru_cache(maxsize=1 << 18)
def _von_sterneck(n: int, g: int) -> int:
    reduced = n // g
    phi_n = totient(n)
    phi_reduced = totient(reduced)
    # phi(d) divides phi(n) whenever d divides n, so this division is exact.
    quotient, remainder = divmod(phi_n, phi_reduced)
    assert remainder == 0
    return moebius(reduced) * quotient


def ramanujan_von_sterneck(n: int, m: int) -> int:
    """Exact evaluation via mu(n/g) * phi(n) / phi(n/g) with g = gcd(m, n)."""
    if n < 1:
        raise OracleScaleError("n must be >= 1")
    return _von_sterneck(n, math.gcd(m % n, n))


@lru_cache(maxsize=1 << 18)
def _kluyver(n: int, g: int) -> int:
    return sum(moebius(n // d) * d for d in divisor_tuple(g))


def ramanujan_kluyver(n: int, m: int) -> int:
    """Exact evaluation via the divisor sum of mu(n/d) * d over d | gcd(m, n)."""
    if n < 1:
        raise OracleScaleError("n must be >= 1")
    return _kluyver(n, math.gcd(m % n, n))
