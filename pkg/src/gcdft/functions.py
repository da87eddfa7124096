"""Arithmetic functions as prime-power rules, with Dirichlet convolution,
sum functions and Moebius inversion.

Values are exact rationals (``fractions.Fraction``); integer-valued functions
simply produce Fractions with denominator 1, so ``==`` against plain ints
behaves as expected.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import Callable, Mapping

from .errors import DomainError, UndefinedValueError
from .numtheory import Factorization, as_factorization, divisors

Exact = int | Fraction


class Kind(Enum):
    MULTIPLICATIVE = "multiplicative"
    COMPLETELY_MULTIPLICATIVE = "completely-multiplicative"
    GENERAL = "general"


class ArithmeticFunction:
    """An arithmetic function defined by its values on prime powers.

    Multiplicative functions carry a ``(p, e) -> value`` rule, completely
    multiplicative ones a ``p -> value`` rule extended by f(p^e) = f(p)^e,
    and general functions a finite value table. f(1) = 1 is implied for the
    two multiplicative kinds. Instances are immutable; prime-power values
    are memoized per instance.
    """

    __slots__ = (
        "name", "kind", "_pp_rule", "_p_rule", "_table", "integer_valued",
        "_memo", "_value_memo",
    )

    def __init__(
        self,
        name: str,
        kind: Kind,
        *,
        prime_power_rule: Callable[[int, int], Exact] | None = None,
        prime_rule: Callable[[int], Exact] | None = None,
        direct_rule: Mapping[int, Exact] | None = None,
        integer_valued: bool = True,
    ):
        self.name = name
        self.kind = kind
        self._pp_rule = prime_power_rule
        self._p_rule = prime_rule
        self._table = dict(direct_rule) if direct_rule is not None else None
        self.integer_valued = integer_valued
        self._memo: dict[tuple[int, int], Fraction] = {}
        self._value_memo: dict[int, Fraction] = {}
        if kind is Kind.MULTIPLICATIVE and prime_power_rule is None:
            raise DomainError("multiplicative function needs a prime-power rule")
        if kind is Kind.COMPLETELY_MULTIPLICATIVE and prime_rule is None:
            raise DomainError("completely multiplicative function needs a prime rule")
        if kind is Kind.GENERAL and self._table is None:
            raise DomainError("general function needs a value table")

    @classmethod
    def multiplicative(
        cls, name: str, rule: Callable[[int, int], Exact], *, integer_valued: bool = True
    ) -> "ArithmeticFunction":
        return cls(name, Kind.MULTIPLICATIVE, prime_power_rule=rule, integer_valued=integer_valued)

    @classmethod
    def completely_multiplicative(
        cls, name: str, rule: Callable[[int], Exact], *, integer_valued: bool = True
    ) -> "ArithmeticFunction":
        return cls(name, Kind.COMPLETELY_MULTIPLICATIVE, prime_rule=rule, integer_valued=integer_valued)

    @classmethod
    def from_table(
        cls, name: str, table: Mapping[int, Exact], *, integer_valued: bool = True
    ) -> "ArithmeticFunction":
        return cls(name, Kind.GENERAL, direct_rule=table, integer_valued=integer_valued)

    @property
    def is_multiplicative(self) -> bool:
        return self.kind is not Kind.GENERAL

    def prime_power(self, p: int, e: int) -> Fraction:
        """f(p^e) for e >= 0; f(p^0) = 1 by convention."""
        if e < 0:
            raise DomainError(f"{self.name}(p^{e}): negative exponent")
        if e == 0:
            return Fraction(1)
        key = (p, e)
        value = self._memo.get(key)
        if value is None:
            if self.kind is Kind.MULTIPLICATIVE:
                value = Fraction(self._pp_rule(p, e))
            elif self.kind is Kind.COMPLETELY_MULTIPLICATIVE:
                value = Fraction(self._p_rule(p)) ** e
            else:
                return self(p**e)
            self._memo[key] = value
        return value

    def __call__(self, n: int | Factorization) -> Fraction:
        return evaluate(self, n)

    def __repr__(self) -> str:
        return f"ArithmeticFunction({self.name!r}, {self.kind.value})"


def evaluate(f: ArithmeticFunction, n: int | Factorization) -> Fraction:
    """f(n), computed from prime-power values for multiplicative kinds."""
    if f.kind is Kind.GENERAL:
        value = int(n)
        table = f._table
        if value not in table:
            raise UndefinedValueError(f"{f.name} has no rule for {value}")
        return Fraction(table[value])
    value = int(n)
    cached = f._value_memo.get(value)
    if cached is not None:
        return cached
    fac = as_factorization(n)
    result = Fraction(1)
    for p, s in fac.factors:
        result *= f.prime_power(p, s)
    f._value_memo[value] = result
    return result


def dirichlet_convolve(
    f: ArithmeticFunction, g: ArithmeticFunction, n: int | Factorization
) -> Fraction:
    """(f * g)(n) = sum over divisors d of n of f(n/d) * g(d), exactly."""
    fac = as_factorization(n)
    total = Fraction(0)
    for d in divisors(fac):
        total += evaluate(f, fac.value // d) * evaluate(g, d)
    return total


def sum_function(t: ArithmeticFunction, n: int | Factorization) -> Fraction:
    """The sum function (1 * t)(n), i.e. the divisor sum of t."""
    fac = as_factorization(n)
    total = Fraction(0)
    for d in divisors(fac):
        total += evaluate(t, d)
    return total


def sum_function_product(t: ArithmeticFunction, n: int | Factorization) -> Fraction:
    """Sum function of a multiplicative t via the per-prime geometric-style
    product prod_i [1 + t(p_i) + ... + t(p_i^(s_i))]; must agree with
    :func:`sum_function` whenever t is multiplicative.
    """
    if not t.is_multiplicative:
        raise DomainError("product form requires a multiplicative function")
    fac = as_factorization(n)
    result = Fraction(1)
    for p, s in fac.factors:
        result *= sum(t.prime_power(p, e) for e in range(s + 1))
    return result


def sum_function_of(t: ArithmeticFunction) -> ArithmeticFunction:
    """The sum function of a multiplicative t as a multiplicative function."""
    if not t.is_multiplicative:
        raise DomainError("sum_function_of requires a multiplicative function")
    return ArithmeticFunction.multiplicative(
        f"S[{t.name}]",
        lambda p, e: sum(t.prime_power(p, j) for j in range(e + 1)),
        integer_valued=t.integer_valued,
    )


def moebius_invert(f: ArithmeticFunction, n: int | Factorization) -> Fraction:
    """(f * mu)(n) for multiplicative f, via the prime-factor product
    prod_i [f(p_i^(s_i)) - f(p_i^(s_i - 1))]; the empty product at n = 1 is 1.

    Applied to a sum function S^t this recovers t.
    """
    if not f.is_multiplicative:
        raise DomainError("moebius_invert requires a multiplicative function")
    fac = as_factorization(n)
    result = Fraction(1)
    for p, s in fac.factors:
        result *= f.prime_power(p, s) - f.prime_power(p, s - 1)
    return result


# --- built-in catalog ------------------------------------------------------

ONE = ArithmeticFunction.completely_multiplicative("1", lambda p: 1)
ID = ArithmeticFunction.completely_multiplicative("id", lambda p: p)
PHI = ArithmeticFunction.multiplicative("phi", lambda p, e: p**e - p ** (e - 1))
MU = ArithmeticFunction.multiplicative("mu", lambda p, e: -1 if e == 1 else 0)
TAU = ArithmeticFunction.multiplicative("tau", lambda p, e: e + 1)
SIGMA = ArithmeticFunction.multiplicative(
    "sigma", lambda p, e: (p ** (e + 1) - 1) // (p - 1)
)
LIOUVILLE = ArithmeticFunction.completely_multiplicative("lambda", lambda p: -1)


def id_power(k: int) -> ArithmeticFunction:
    """id_k(n) = n^k; completely multiplicative. Negative k yields rationals."""
    if k == 0:
        return ONE
    if k == 1:
        return ID
    return ArithmeticFunction.completely_multiplicative(
        f"id_{k}",
        lambda p: p**k if k > 0 else Fraction(1, p**-k),
        integer_valued=k > 0,
    )


def jordan_function(k: int) -> ArithmeticFunction:
    """J_k as a multiplicative function; jordan_function(1) is phi."""
    if k < 1:
        raise DomainError("jordan_function requires k >= 1")
    if k == 1:
        return PHI
    return ArithmeticFunction.multiplicative(
        f"J_{k}", lambda p, e: p ** (k * e) - p ** (k * (e - 1))
    )


_CATALOG: dict[str, ArithmeticFunction] = {
    "1": ONE,
    "one": ONE,
    "id": ID,
    "phi": PHI,
    "mu": MU,
    "tau": TAU,
    "sigma": SIGMA,
    "lambda": LIOUVILLE,
    "liouville": LIOUVILLE,
}

_ID_K = re.compile(r"id_(-?\d+)$")
_J_K = re.compile(r"J_(\d+)$")


def get_function(name: str) -> ArithmeticFunction:
    """Look up a catalog function by name; id_<k> and J_<k> take a parameter."""
    if name in _CATALOG:
        return _CATALOG[name]
    m = _ID_K.match(name)
    if m:
        return id_power(int(m.group(1)))
    m = _J_K.match(name)
    if m:
        return jordan_function(int(m.group(1)))
    raise UndefinedValueError(f"unknown arithmetic function {name!r}")


def catalog_names() -> list[str]:
    """Canonical names accepted by :func:`get_function` (parametrized families
    are shown with a sample parameter)."""
    return ["1", "id", "id_2", "id_3", "phi", "mu", "tau", "sigma", "lambda", "J_2", "J_3"]
