"""Identity sweeps: every closed form is replayed against the independent
evaluation paths over configurable (f, n, m) grids.

Each check yields Failure records instead of raising, so a sweep reports the
full damage; the CLI maps a nonempty failure list to exit code 2. A named
fault can be injected into one path to prove the harness actually bites.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import DomainError
from .functions import ArithmeticFunction, Kind, get_function
from .numtheory import divisors, totient
from .ramanujan import (
    FLOAT_TOLERANCE,
    ramanujan_definition,
    ramanujan_kluyver,
    ramanujan_von_sterneck,
)
from .transform import (
    dft_brute_spectrum,
    dft_closed_form_completely_mult,
    dft_closed_form_gcd,
    dft_closed_form_multiplicative,
    dft_exact_convolution,
    reduce_order,
)

M_POLICIES = ("all", "divisors", "sample")

# named perturbations for harness sensitivity tests; each flips one path
FAULTS: dict[str, Callable[[Fraction, str], Fraction]] = {
    "negate-closed-form": lambda v, path: -v if path == "closed" else v,
    "offset-convolution": lambda v, path: v + 1 if path == "convolution" else v,
}


@dataclass(frozen=True)
class SweepConfig:
    n_max: int
    m_policy: str = "all"
    sample_count: int = 20
    functions: tuple[str, ...] = ("id",)
    tolerance_float: float = FLOAT_TOLERANCE
    seed: int = 0
    fault: str | None = None

    def __post_init__(self):
        if self.n_max < 1:
            raise DomainError("n_max must be >= 1")
        if self.m_policy not in M_POLICIES:
            raise DomainError(f"m_policy must be one of {M_POLICIES}")
        if self.m_policy == "sample" and self.sample_count < 1:
            raise DomainError("sample count must be >= 1")
        if self.fault is not None and self.fault not in FAULTS:
            raise DomainError(f"unknown fault {self.fault!r}; choose from {sorted(FAULTS)}")


@dataclass(frozen=True)
class Failure:
    identity: str
    f_name: str
    n: int
    m: int
    expected: str
    got: str


@dataclass
class SweepReport:
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    by_identity: dict[str, list[int]] = field(default_factory=dict)

    def record(self, identity: str, failure: Failure | None) -> None:
        counts = self.by_identity.setdefault(identity, [0, 0])
        counts[0] += 1
        self.checks += 1
        if failure is not None:
            counts[1] += 1
            self.failures.append(failure)

    @property
    def passed(self) -> bool:
        return not self.failures


def orders_for(n: int, policy: str, count: int, rng: random.Random) -> list[int]:
    """Deterministic m grid for a given n under the configured policy."""
    if policy == "all":
        return list(range(1, n + 1))
    if policy == "divisors":
        return divisors(n)
    picks = min(count, n)
    return sorted(rng.sample(range(1, n + 1), picks))


def _perturb(value: Fraction, path: str, fault: str | None) -> Fraction:
    if fault is None:
        return value
    return FAULTS[fault](value, path)


def _closed_form(f: ArithmeticFunction, n: int, m: int) -> Fraction | None:
    if f.name == "id":
        return Fraction(dft_closed_form_gcd(n, m))
    if f.kind is Kind.COMPLETELY_MULTIPLICATIVE:
        return dft_closed_form_completely_mult(f, n, m)
    if f.kind is Kind.MULTIPLICATIVE:
        return dft_closed_form_multiplicative(f, n, m)
    return None


def check_path_equivalence(
    f: ArithmeticFunction,
    n_values: Iterable[int],
    policy: str = "all",
    sample_count: int = 20,
    tolerance: float = FLOAT_TOLERANCE,
    seed: int = 0,
    fault: str | None = None,
    float_check: bool = True,
) -> Iterator[tuple[str, Failure | None]]:
    """Convolution vs closed form (exact) and vs the FFT spectrum (float)."""
    rng = random.Random(seed)
    for n in n_values:
        spectrum = dft_brute_spectrum(f, n) if float_check else None
        for m in orders_for(n, policy, sample_count, rng):
            convolution = _perturb(dft_exact_convolution(f, n, m), "convolution", fault)
            closed = _closed_form(f, n, m)
            if closed is not None:
                closed = _perturb(closed, "closed", fault)
                failure = None
                if closed != convolution:
                    failure = Failure(
                        "path-equivalence-exact", f.name, n, m,
                        str(convolution), str(closed),
                    )
                yield "path-equivalence-exact", failure
            if spectrum is not None:
                approx = spectrum[m % n]
                target = closed if closed is not None else convolution
                failure = None
                if (
                    abs(approx.real - float(target)) >= tolerance
                    or abs(approx.imag) >= tolerance
                ):
                    failure = Failure(
                        "path-equivalence-float", f.name, n, m,
                        str(target), repr(complex(approx)),
                    )
                yield "path-equivalence-float", failure
            if f.integer_valued:
                failure = None
                if convolution.denominator != 1:
                    failure = Failure(
                        "integrality", f.name, n, m, "integer", str(convolution)
                    )
                yield "integrality", failure


def check_closed_form_pair(
    f: ArithmeticFunction,
    n_values: Iterable[int],
    policy: str = "all",
    sample_count: int = 20,
    seed: int = 0,
) -> Iterator[tuple[str, Failure | None]]:
    """Geometric closed form vs per-prime-sum closed form (and the id-only
    product vs the general multiplicative one when f = id)."""
    rng = random.Random(seed)
    for n in n_values:
        for m in orders_for(n, policy, sample_count, rng):
            general = dft_closed_form_multiplicative(f, n, m)
            if f.name == "id":
                identity = "gcd-form-vs-multiplicative-form"
                other = Fraction(dft_closed_form_gcd(n, m))
            elif f.kind is Kind.COMPLETELY_MULTIPLICATIVE:
                identity = "geometric-form-vs-multiplicative-form"
                other = dft_closed_form_completely_mult(f, n, m)
            else:
                continue
            failure = None
            if other != general:
                failure = Failure(identity, f.name, n, m, str(general), str(other))
            yield identity, failure


def check_gcd_dependence(
    f: ArithmeticFunction,
    n_values: Iterable[int],
    m_span: int = 3,
) -> Iterator[tuple[str, Failure | None]]:
    """Transform value at order m equals the value at order gcd(m, n)."""
    for n in n_values:
        for m in range(1, m_span * n + 1):
            g = math.gcd(m, n)
            left = _closed_form(f, n, reduce_order(m, n))
            right = _closed_form(f, n, g)
            failure = None
            if left != right:
                failure = Failure("gcd-dependence", f.name, n, m, str(right), str(left))
            yield "gcd-dependence", failure


def check_multiplicativity(
    f: ArithmeticFunction,
    pair_max: int,
    extra_orders: int = 3,
    seed: int = 0,
) -> Iterator[tuple[str, Failure | None]]:
    """Transform at uv equals the product of the transforms at coprime u, v.

    Orders cover every divisor of uv (hence every distinct gcd class) plus a
    few seeded non-divisors.
    """
    rng = random.Random(seed)
    for u in range(1, pair_max + 1):
        for v in range(u + 1, pair_max + 1):
            if math.gcd(u, v) != 1:
                continue
            n = u * v
            orders = divisors(n)
            orders += [rng.randrange(1, n + 1) for _ in range(extra_orders)]
            for m in orders:
                combined = _closed_form(f, n, reduce_order(m, n))
                split = _closed_form(f, u, reduce_order(m, u)) * _closed_form(
                    f, v, reduce_order(m, v)
                )
                failure = None
                if combined != split:
                    failure = Failure(
                        "multiplicativity", f.name, n, m, str(split), str(combined)
                    )
                yield "multiplicativity", failure


def check_coprime_order_totient(n_values: Iterable[int]) -> Iterator[tuple[str, Failure | None]]:
    """At orders coprime to n the gcd transform collapses to the totient."""
    for n in n_values:
        phi = totient(n)
        for m in range(1, n + 1):
            if math.gcd(m, n) != 1:
                continue
            value = dft_closed_form_gcd(n, m)
            failure = None
            if value != phi:
                failure = Failure("coprime-order-totient", "id", n, m, str(phi), str(value))
            yield "coprime-order-totient", failure


def check_ramanujan_agreement(
    n_values: Iterable[int],
    float_limit: int = 500,
    tolerance: float = FLOAT_TOLERANCE,
) -> Iterator[tuple[str, Failure | None]]:
    """The two exact Ramanujan evaluators agree everywhere; the floating
    definition agrees (rounded) up to the float_limit."""
    for n in n_values:
        for m in range(1, n + 1):
            exact = ramanujan_von_sterneck(n, m)
            other = ramanujan_kluyver(n, m)
            failure = None
            if exact != other:
                failure = Failure(
                    "ramanujan-exact-agreement", "-", n, m, str(exact), str(other)
                )
            yield "ramanujan-exact-agreement", failure
            if n <= float_limit:
                approx = ramanujan_definition(n, m)
                failure = None
                if (
                    abs(approx.real - exact) >= tolerance
                    or abs(approx.imag) >= tolerance
                ):
                    failure = Failure(
                        "ramanujan-float-agreement", "-", n, m, str(exact), repr(approx)
                    )
                yield "ramanujan-float-agreement", failure


def run_verification(config: SweepConfig) -> SweepReport:
    """Run every identity sweep implied by the config and collect failures."""
    report = SweepReport()
    n_values = range(1, config.n_max + 1)
    functions = [get_function(name) for name in config.functions]

    for identity, failure in check_ramanujan_agreement(
        n_values, float_limit=min(config.n_max, 500), tolerance=config.tolerance_float
    ):
        report.record(identity, failure)

    for f in functions:
        for identity, failure in check_path_equivalence(
            f,
            n_values,
            policy=config.m_policy,
            sample_count=config.sample_count,
            tolerance=config.tolerance_float,
            seed=config.seed,
            fault=config.fault,
        ):
            report.record(identity, failure)
        if f.is_multiplicative:
            for identity, failure in check_closed_form_pair(
                f,
                n_values,
                policy=config.m_policy,
                sample_count=config.sample_count,
                seed=config.seed,
            ):
                report.record(identity, failure)
            for identity, failure in check_gcd_dependence(f, n_values):
                report.record(identity, failure)
            for identity, failure in check_multiplicativity(
                f, pair_max=min(100, config.n_max), seed=config.seed
            ):
                report.record(identity, failure)

    for identity, failure in check_coprime_order_totient(n_values):
        report.record(identity, failure)

    return report


def render_report(report: SweepReport, config: SweepConfig, fmt: str = "text") -> str:
    if fmt == "text":
        lines = [
            f"verification sweep: n <= {config.n_max}, m policy {config.m_policy}, "
            f"functions {', '.join(config.functions)}"
        ]
        for identity, (checks, failed) in sorted(report.by_identity.items()):
            status = "ok" if failed == 0 else "FAIL"
            lines.append(f"  {status:4} {identity}: {checks - failed}/{checks} passed")
        if report.failures:
            first = report.failures[0]
            lines.append(
                f"first counterexample: {first.identity} at f={first.f_name}, "
                f"n={first.n}, m={first.m}: expected {first.expected}, got {first.got}"
            )
        lines.append(
            f"total: {report.checks} checks, {len(report.failures)} failures"
        )
        return "\n".join(lines)
    if fmt == "json":
        return json.dumps(
            {
                "n_max": config.n_max,
                "m_policy": config.m_policy,
                "functions": list(config.functions),
                "checks": report.checks,
                "failures": [vars(f) for f in report.failures[:100]],
                "by_identity": {
                    k: {"checks": v[0], "failures": v[1]}
                    for k, v in report.by_identity.items()
                },
                "passed": report.passed,
            },
            indent=2,
        )
    if fmt == "csv":
        lines = ["identity,checks,failures"]
        lines += [
            f"{identity},{counts[0]},{counts[1]}"
            for identity, counts in sorted(report.by_identity.items())
        ]
        return "\n".join(lines)
    raise DomainError(f"unknown report format {fmt!r}")
