"""Evaluation paths for the discrete Fourier transform of f(gcd(k, n)).

The transform sum_{k=1..n} f(gcd(k, n)) * exp(-2*pi*i*k*m/n) is computed three
independent ways:

* a brute-force floating sum (the oracle, O(n) per call),
* an exact Dirichlet convolution of f with the Ramanujan sum,
* exact prime-factor products: one specific to f = id, one for any
  multiplicative f (with a per-prime partial sum), and a fully closed
  geometric form for completely multiplicative f.

All exact paths must agree; the dispatcher can cross-check them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, InconsistencyError, OracleScaleError
from .functions import ArithmeticFunction, Kind, evaluate
from .numtheory import (
    Factorization,
    as_factorization,
    divisor_tuple,
    moebius,
    totient,
)
from .ramanujan import DEFINITION_SCALE_LIMIT, FLOAT_TOLERANCE

PATH_BRUTE_FLOAT = "brute_float"
PATH_CONVOLUTION = "convolution_exact"
PATH_CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class OrderDecomposition:
    """m written against the prime basis of n: m = u * prod(p_i^t_i) with
    gcd(u, p_i) = 1; ``exponents`` aligns with the factor list of n."""

    m: int
    u: int
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class DftReport:
    """One computed transform value plus which evaluation paths confirmed it."""

    n: Factorization
    m_reduced: int
    f_name: str
    value: int | Fraction
    paths_agreeing: frozenset[str]


def reduce_order(m: int, n: int) -> int:
    """Reduce any integer m to the representative in 1..n (residue 0 -> n)."""
    r = m % n
    return r if r else n


def decompose_order(m: int, n: int | Factorization) -> OrderDecomposition:
    """Split m >= 1 into its coprime part u and the exponents of n's primes."""
    if m < 1:
        raise DomainError("decompose_order requires m >= 1 (reduce mod n first)")
    fac = as_factorization(n)
    u = m
    exponents = []
    for p, _ in fac.factors:
        t = 0
        while u % p == 0:
            u //= p
            t += 1
        exponents.append(t)
    return OrderDecomposition(m, u, tuple(exponents))


@lru_cache(maxsize=4096)
def _gcd_buckets(n: int) -> tuple[tuple[int, ...], tuple[np.ndarray, ...]]:
    """Divisors of n and, per divisor d, the 0-based indices of k with
    gcd(k, n) = d for k = 1..n."""
    k = np.arange(1, n + 1, dtype=np.int64)
    g = np.gcd(k, n)
    divs = divisor_tuple(n)
    return divs, tuple(np.flatnonzero(g == d) for d in divs)


def dft_brute_float(f: ArithmeticFunction, n: int, m: int) -> complex:
    """Direct floating sum over k = 1..n, bucketed by d = gcd(k, n) so that f
    is evaluated once per divisor. Oracle use only (n <= 10^6)."""
    if n < 1:
        raise OracleScaleError("n must be >= 1")
    if n > DEFINITION_SCALE_LIMIT:
        raise OracleScaleError(
            f"brute-force oracle is rated for n <= {DEFINITION_SCALE_LIMIT}, got {n}"
        )
    divs, buckets = _gcd_buckets(n)
    k = np.arange(1, n + 1, dtype=np.int64)
    # exact integer reduction of k*m mod n keeps the phase error ~1e-15
    phase = (k * (m % n)) % n
    w = np.exp(-2j * np.pi * phase / n)
    total = 0j
    for d, bucket in zip(divs, buckets):
        total += float(evaluate(f, d)) * w[bucket].sum()
    return complex(total)


def dft_brute_spectrum(f: ArithmeticFunction, n: int) -> np.ndarray:
    """Float transform values for every order at once via an FFT of the
    sequence f(gcd(k, n)); entry [m % n] is the transform at order m.

    Independent of the exact paths; used for bulk float cross-checks.
    """
    if n < 1:
        raise OracleScaleError("n must be >= 1")
    if n > DEFINITION_SCALE_LIMIT:
        raise OracleScaleError(
            f"brute-force oracle is rated for n <= {DEFINITION_SCALE_LIMIT}, got {n}"
        )
    k = np.arange(n, dtype=np.int64)
    g = np.gcd(k, n)
    g[0] = n
    values = {d: float(evaluate(f, d)) for d in divisor_tuple(n)}
    a = np.vectorize(values.__getitem__, otypes=[float])(g)
    return np.fft.fft(a)


@lru_cache(maxsize=1 << 18)
def _ramanujan_exact(d: int, g: int) -> int:
    """von Sterneck value of the Ramanujan sum c_d at any order with gcd g."""
    reduced = d // g
    return moebius(reduced) * (totient(d) // totient(reduced))


def dft_exact_convolution(
    f: ArithmeticFunction, n: int | Factorization, m: int
) -> Fraction:
    """Exact transform as the Dirichlet convolution of f with the Ramanujan
    sum: sum over d | n of f(n/d) * c_d(m)."""
    fac = as_factorization(n)
    total = Fraction(0)
    for d in divisor_tuple(fac.value):
        r = _ramanujan_exact(d, math.gcd(m, d))
        if r:
            total += evaluate(f, fac.value // d) * r
    return total


def dft_closed_form_gcd(n: int | Factorization, m: int) -> int:
    """Exact transform of the gcd itself (f = id) as the prime-factor product
    prod_i [(min(t_i, s_i) + 1) * phi(p_i^s_i) + [t_i >= s_i] * p_i^(s_i-1)]."""
    fac = as_factorization(n)
    order = decompose_order(reduce_order(m, fac.value), fac)
    result = 1
    for (p, s), t in zip(fac.factors, order.exponents):
        factor = (min(t, s) + 1) * (p**s - p ** (s - 1))
        if t >= s:
            factor += p ** (s - 1)
        result *= factor
    return result


def _partial_power_sum(f: ArithmeticFunction, p: int, s: int, upto: int) -> Fraction:
    return sum(
        (p ** (b - 1) * f.prime_power(p, s - b) for b in range(1, upto + 1)),
        Fraction(0),
    )


def dft_closed_form_multiplicative(
    f: ArithmeticFunction, n: int | Factorization, m: int
) -> Fraction:
    """Exact transform of a multiplicative f as a prime-factor product with a
    short per-prime sum: each factor is
    f(p^s) + (p-1) * sum_{b=1..min(t,s)} p^(b-1) f(p^(s-b)),
    minus f(p^(s-t-1)) * p^t when t < s (the term is dropped entirely when
    t >= s, so f never sees a negative exponent)."""
    if not f.is_multiplicative:
        raise DomainError("closed form requires a multiplicative function")
    fac = as_factorization(n)
    order = decompose_order(reduce_order(m, fac.value), fac)
    result = Fraction(1)
    for (p, s), t in zip(fac.factors, order.exponents):
        term = f.prime_power(p, s)
        bound = min(t, s)
        if bound:
            term += (p - 1) * _partial_power_sum(f, p, s, bound)
        if t < s:
            term -= f.prime_power(p, s - t - 1) * p**t
        result *= term
    return result


def dft_closed_form_completely_mult(
    f: ArithmeticFunction, n: int | Factorization, m: int
) -> Fraction:
    """Exact transform of a completely multiplicative f with the per-prime sum
    collapsed into a geometric ratio:
    (p-1) * f(p^(s-1)) * (f(p^M) - p^M) / (f(p^M) - p*f(p^(M-1))), M = min(t,s).

    Whenever the ratio degenerates (f(p) = p, and generally any vanishing
    denominator) that prime falls back to the uncollapsed sum, so mixed cases
    such as f = id still evaluate; must always agree with
    :func:`dft_closed_form_multiplicative`."""
    if f.kind is not Kind.COMPLETELY_MULTIPLICATIVE:
        raise DomainError("geometric closed form requires a completely multiplicative function")
    fac = as_factorization(n)
    order = decompose_order(reduce_order(m, fac.value), fac)
    result = Fraction(1)
    for (p, s), t in zip(fac.factors, order.exponents):
        term = f.prime_power(p, s)
        if t < s:
            term -= f.prime_power(p, s - t - 1) * p**t
        if t >= 1:
            bound = min(t, s)
            denominator = f.prime_power(p, bound) - p * f.prime_power(p, bound - 1)
            if denominator == 0:
                term += (p - 1) * _partial_power_sum(f, p, s, bound)
            else:
                ratio = (f.prime_power(p, bound) - p**bound) / denominator
                term += (p - 1) * f.prime_power(p, s - 1) * ratio
        result *= term
    return result


def gcd_power_sum(f: ArithmeticFunction, n: int | Factorization) -> Fraction:
    """sum_{k=1..n} f(gcd(k, n)), i.e. the transform at order m = n, as the
    product of f(p^s) + (p-1) * sum_{b=1..s} p^(b-1) f(p^(s-b))."""
    if not f.is_multiplicative:
        raise DomainError("gcd_power_sum requires a multiplicative function")
    fac = as_factorization(n)
    result = Fraction(1)
    for p, s in fac.factors:
        result *= f.prime_power(p, s) + (p - 1) * _partial_power_sum(f, p, s, s)
    return result


def _canonical(value: Fraction | int) -> int | Fraction:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def dft_dispatch(
    f: ArithmeticFunction,
    n: int | Factorization,
    m: int,
    *,
    verify: bool = False,
    tolerance: float = FLOAT_TOLERANCE,
) -> DftReport:
    """Evaluate the transform via the best exact path for f's kind; with
    ``verify`` every evaluable path runs and exact disagreement raises
    :class:`InconsistencyError`."""
    fac = as_factorization(n)
    m_reduced = reduce_order(m, fac.value)

    if f.name == "id":
        closed: Fraction | int | None = dft_closed_form_gcd(fac, m_reduced)
        path = PATH_CLOSED_FORM
    elif f.kind is Kind.COMPLETELY_MULTIPLICATIVE:
        closed = dft_closed_form_completely_mult(f, fac, m_reduced)
        path = PATH_CLOSED_FORM
    elif f.kind is Kind.MULTIPLICATIVE:
        closed = dft_closed_form_multiplicative(f, fac, m_reduced)
        path = PATH_CLOSED_FORM
    else:
        closed = None
        path = PATH_CONVOLUTION

    if closed is not None:
        value = closed
        convolution = None
    else:
        value = convolution = dft_exact_convolution(f, fac, m_reduced)
    agreeing = {path}

    if verify:
        if convolution is None:
            convolution = dft_exact_convolution(f, fac, m_reduced)
        if closed is not None:
            if convolution != closed:
                raise InconsistencyError(
                    f"exact paths disagree for f={f.name}, n={fac.value}, "
                    f"m={m_reduced}: closed form {closed}, convolution {convolution}"
                )
            agreeing.add(PATH_CONVOLUTION)
        if fac.value <= DEFINITION_SCALE_LIMIT:
            brute = dft_brute_float(f, fac.value, m_reduced)
            if (
                abs(brute.real - float(value)) < tolerance
                and abs(brute.imag) < tolerance
            ):
                agreeing.add(PATH_BRUTE_FLOAT)
            else:
                raise InconsistencyError(
                    f"brute-force value {brute} is out of tolerance of exact "
                    f"{value} for f={f.name}, n={fac.value}, m={m_reduced}"
                )

    return DftReport(fac, m_reduced, f.name, _canonical(value), frozenset(agreeing))
