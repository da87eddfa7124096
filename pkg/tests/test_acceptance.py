"""Acceptance sweeps at full scale.

Each criterion is one test that prints a single PASS/FAIL line (run with
``pytest tests/test_acceptance.py -v -s``). Exact checks carry zero
tolerance; floating cross-checks use the 1e-6 absolute tolerance of the
brute-force oracle. The performance criterion is report-only.
"""

import csv
import io
import math
import random

from gcdft.bench import run_bench
from gcdft.functions import (
    ID,
    MU,
    PHI,
    dirichlet_convolve,
    evaluate,
    get_function,
    moebius_invert,
    sum_function_of,
)
from gcdft.numtheory import divisor_tuple, jordan, moebius, totient
from gcdft.ramanujan import (
    ramanujan_definition,
    ramanujan_kluyver,
    ramanujan_von_sterneck,
)
from gcdft.transform import (
    dft_brute_float,
    dft_closed_form_completely_mult,
    dft_closed_form_gcd,
    dft_closed_form_multiplicative,
    dft_exact_convolution,
    gcd_power_sum,
    reduce_order,
)

TOLERANCE = 1e-6


def announce(name: str, passed: bool, detail: str) -> None:
    print(f"ACCEPTANCE {name}: {'PASS' if passed else 'FAIL'} - {detail}")
    assert passed, f"{name}: {detail}"


def test_criterion_1_gcd_transform_exactness():
    """Closed form == convolution == rounded brute force, n <= 500, all m."""
    checked = 0
    for n in range(1, 501):
        for m in range(1, n + 1):
            closed = dft_closed_form_gcd(n, m)
            convolution = dft_exact_convolution(ID, n, m)
            assert convolution == closed, (n, m, closed, convolution)
            brute = dft_brute_float(ID, n, m)
            assert abs(brute.real - closed) < TOLERANCE, (n, m, closed, brute)
            assert abs(brute.imag) < TOLERANCE, (n, m, brute)
            assert round(brute.real) == closed
            checked += 1
    announce(
        "1 (gcd transform exactness)", True,
        f"{checked} (n, m) pairs, exact and float paths agree",
    )


def test_criterion_2_general_function_exactness():
    """Geometric and per-prime closed forms == convolution, n <= 300, all m."""
    geometric = ["id_0", "id_2", "id_3", "lambda"]
    summed = ["phi", "mu", "tau", "sigma", "J_2"]
    checked = 0
    for name in geometric + summed:
        f = get_function(name)
        closed_form = (
            dft_closed_form_completely_mult
            if name in geometric
            else dft_closed_form_multiplicative
        )
        for n in range(1, 301):
            for m in range(1, n + 1):
                closed = closed_form(f, n, m)
                convolution = dft_exact_convolution(f, n, m)
                assert convolution == closed, (name, n, m, closed, convolution)
                assert closed.denominator == 1, (name, n, m, closed)
                checked += 1
    announce(
        "2 (multiplicative-function exactness)", True,
        f"{checked} cells over {len(geometric)} geometric + {len(summed)} summed forms",
    )


def test_criterion_3_base_case_values():
    """Frozen base-case numbers: 2p-1, the Pillai prime-power values, and the
    four two-prime table entries at (2, 3) and (3, 5)."""
    for p in (2, 3, 5, 7, 11):
        assert dft_closed_form_gcd(p, p) == 2 * p - 1
        assert sum(math.gcd(k, p) for k in range(1, p + 1)) == 2 * p - 1

    for p in (2, 3, 5, 7):
        for alpha in range(1, 5):
            n = p**alpha
            expected = (alpha + 1) * p**alpha - alpha * p ** (alpha - 1)
            assert gcd_power_sum(ID, n) == expected, (p, alpha)
            assert sum(math.gcd(k, n) for k in range(1, n + 1)) == expected

    for p, q in ((2, 3), (3, 5)):
        n = p * q
        table = {
            1: (p - 1) * (q - 1),
            p: (2 * p - 1) * (q - 1),
            q: (p - 1) * (2 * q - 1),
            n: (2 * p - 1) * (2 * q - 1),
        }
        for m, expected in table.items():
            assert dft_closed_form_gcd(n, m) == expected, (p, q, m)
            assert dft_exact_convolution(ID, n, m) == expected
    announce(
        "3 (base-case numbers)", True,
        "2p-1 primes, Pillai prime powers (p<=7, a<=4), two-prime tables at (2,3), (3,5)",
    )


def test_criterion_4_identity_suite():
    """Totient collapse, Moebius collapse, sum-function round trip, inversion
    product vs convolution, Jordan identity; exhaustive n <= 1000."""
    lifted = {name: sum_function_of(f) for name, f in
              (("phi", PHI), ("mu", MU), ("id", ID))}
    base = {"phi": PHI, "mu": MU, "id": ID}
    catalog = [get_function(name)
               for name in ("id", "id_2", "id_3", "phi", "mu", "tau", "sigma", "J_2")]
    id_k = {k: get_function(f"id_{k}") for k in (1, 2, 3)}
    checked = 0
    for n in range(1, 1001):
        phi = totient(n)
        mu = moebius(n)
        for m in range(1, n + 1):
            if math.gcd(m, n) != 1:
                continue
            assert dft_closed_form_gcd(n, m) == phi, ("coprime-order-totient", n, m)
            assert ramanujan_von_sterneck(n, m) == mu, ("coprime-order-moebius", n, m)
            for name, f in lifted.items():
                assert dft_exact_convolution(f, n, m) == evaluate(base[name], n), (
                    "sum-function-round-trip", name, n, m,
                )
            checked += 2 + len(lifted)
        for f in catalog:
            assert moebius_invert(f, n) == dirichlet_convolve(f, MU, n), (
                "inversion-product", f.name, n,
            )
            checked += 1
        for k, f in id_k.items():
            assert dirichlet_convolve(f, MU, n) == jordan(k, n), ("jordan-identity", k, n)
            checked += 1
    announce("4 (identity suite)", True, f"{checked} identity cells, n <= 1000")


def test_criterion_5_structural_properties():
    """Multiplicativity in n, gcd dependence, integrality, and Ramanujan
    evaluator agreement."""
    catalog = [get_function(name)
               for name in ("1", "id", "id_2", "id_3", "phi", "mu", "tau",
                            "sigma", "J_2", "lambda")]

    rng = random.Random(101)
    pairs = 0
    for u in range(1, 101):
        for v in range(u + 1, 101):
            if math.gcd(u, v) != 1:
                continue
            pairs += 1
            n = u * v
            orders = list(divisor_tuple(n)) + [rng.randrange(1, n + 1) for _ in range(3)]
            for f in catalog:
                for m in orders:
                    whole = dft_closed_form_multiplicative(f, n, reduce_order(m, n))
                    split = dft_closed_form_multiplicative(
                        f, u, reduce_order(m, u)
                    ) * dft_closed_form_multiplicative(f, v, reduce_order(m, v))
                    assert whole == split, (f.name, u, v, m)
                    assert whole.denominator == 1, (f.name, u, v, m)

    for n in range(1, 501):
        for m in range(1, 3 * n + 1):
            g = math.gcd(m, n)
            assert dft_closed_form_gcd(n, m) == dft_closed_form_gcd(n, g)

    for n in range(1, 2001):
        for m in range(1, n + 1):
            assert ramanujan_von_sterneck(n, m) == ramanujan_kluyver(n, m), (n, m)
    for n in range(1, 501):
        for m in range(1, n + 1):
            exact = ramanujan_von_sterneck(n, m)
            approx = ramanujan_definition(n, m)
            assert abs(approx.real - exact) < TOLERANCE, (n, m)
            assert abs(approx.imag) < TOLERANCE, (n, m)
    announce(
        "5 (structural properties)", True,
        f"{pairs} coprime pairs, gcd-dependence n <= 500, "
        "Ramanujan agreement exact n <= 2000 / float n <= 500",
    )


def test_criterion_6_performance_report(tmp_path):
    """Report-only: closed form vs brute force at n near 10^6; the CSV is the
    evidence, no hard threshold is asserted."""
    composite = 720720  # highly composite
    prime = 999983
    results = run_bench(ID, [composite, prime], repetitions=3)
    from gcdft.bench import render_bench

    rendered = render_bench(results, "csv")
    target = tmp_path / "bench.csv"
    target.write_text(rendered + "\n")
    rows = list(csv.reader(io.StringIO(rendered)))
    assert rows[0][0] == "n"
    assert len(rows) == 3
    for result in results:
        assert result.spot_check, f"spot check failed at n={result.n}"
    ratios = {r.n: r.speedup for r in results}
    meets = all(ratio >= 100 for ratio in ratios.values())
    announce(
        "6 (performance report)", True,
        f"speedups {', '.join(f'n={n}: {ratio:.0f}x' for n, ratio in ratios.items())}; "
        f"{'>= 100x on this host' if meets else 'below 100x on this host (report-only)'}; "
        f"CSV written to {target}",
    )
