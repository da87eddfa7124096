"""Table building, compression, symbolic forms and round-trip serialization."""

import json
import math
from fractions import Fraction

import pytest

from gcdft.errors import DomainError
from gcdft.functions import ID, TAU, id_power
from gcdft.numtheory import divisor_tuple, totient
from gcdft.tables import (
    TableRow,
    build_table,
    format_exact,
    parse_exact,
    parse_table,
    render_table,
)
from gcdft.transform import dft_brute_float


class TestExactSerialization:
    def test_integers_as_decimal_strings(self):
        assert format_exact(40) == "40"
        assert format_exact(Fraction(40, 1)) == "40"
        assert format_exact(-3) == "-3"

    def test_rationals_as_num_den(self):
        assert format_exact(Fraction(7, 12)) == "7/12"
        assert format_exact(Fraction(-1, 3)) == "-1/3"

    def test_round_trip(self):
        for value in (0, 7, -40, Fraction(7, 12), Fraction(-5, 9)):
            assert parse_exact(format_exact(value)) == value


class TestCompressedTables:
    def test_two_prime_case(self):
        rows = build_table(ID, 15, compress=True)
        assert [r.index for r in rows] == [1, 3, 5, 15]
        assert [r.gcd_value for r in rows] == [1, 3, 5, 15]
        assert [r.transform_value for r in rows] == [8, 20, 18, 45]
        assert [r.symbolic_form for r in rows] == [
            "(p-1)(q-1)",
            "(2p-1)(q-1)",
            "(p-1)(2q-1)",
            "(2p-1)(2q-1)",
        ]

    def test_prime_power_three_branch(self):
        rows = build_table(ID, 8, compress=True)
        assert [r.transform_value for r in rows] == [4, 8, 12, 20]
        assert rows[0].symbolic_form == "phi(p^3)"
        assert rows[1].symbolic_form == "2phi(p^3)"
        assert rows[2].symbolic_form == "3phi(p^3)"
        assert rows[3].symbolic_form == "[4phi(p^3)+p^2]"
        phi = totient(8)
        assert rows[0].transform_value == phi
        assert rows[1].transform_value == 2 * phi
        assert rows[2].transform_value == 3 * phi
        assert rows[3].transform_value == 4 * phi + 4

    def test_trivial_n(self):
        rows = build_table(ID, 1)
        assert rows == [TableRow(1, 1, 1, "1")]

    def test_cube_square_prime_layout(self):
        # n = p^3 q^2 w at (2, 3, 5); the typical mixed entry and both ends
        rows = {r.index: r for r in build_table(ID, 360, compress=True)}
        assert rows[1].transform_value == totient(360)
        assert rows[36].symbolic_form == "3phi(p^3)[3phi(q^2)+q](w-1)"
        assert rows[36].transform_value == 12 * 21 * 4 == 1008
        assert rows[360].symbolic_form == "[4phi(p^3)+p^2][3phi(q^2)+q](2w-1)"
        assert rows[360].transform_value == sum(
            math.gcd(k, 360) for k in range(1, 361)
        )

    def test_row_count_equals_divisor_count(self):
        for n in range(1, 10_001):
            rows = build_table(ID, n, compress=True)
            assert len(rows) == len(divisor_tuple(n))
            # one value per gcd class; distinct classes can still collide
            # (h_6(24) == h_8(24) == 40), so distinct values <= divisor count
            values = {r.transform_value for r in rows}
            assert len(values) <= len(rows)

    def test_rows_match_brute_force(self):
        for n in (12, 45, 100):
            for row in build_table(ID, n, compress=True):
                brute = dft_brute_float(ID, n, row.index)
                assert brute.real == pytest.approx(float(row.transform_value), abs=1e-6)


class TestFullTables:
    def test_full_covers_all_orders(self):
        rows = build_table(ID, 6)
        assert [r.index for r in rows] == [1, 2, 3, 4, 5, 6]
        assert [r.transform_value for r in rows] == [2, 6, 5, 6, 2, 15]

    def test_full_and_compressed_agree_per_class(self):
        for n in (12, 30, 49):
            compressed = {r.gcd_value: r.transform_value for r in
                          build_table(ID, n, compress=True)}
            for row in build_table(ID, n):
                assert row.transform_value == compressed[row.gcd_value]

    def test_non_identity_function(self):
        rows = {r.index: r for r in build_table(TAU, 12, compress=True)}
        assert rows[12].transform_value == 28
        assert rows[12].symbolic_form == "7*4"

    def test_rational_values_serialize(self):
        rows = build_table(id_power(-1), 4, compress=True)
        values = [format_exact(r.transform_value) for r in rows]
        assert all("/" in v or v.lstrip("-").isdigit() for v in values)


class TestRendering:
    def test_csv_round_trip(self):
        rows = build_table(ID, 45, compress=True)
        text = render_table(rows, "csv")
        assert text.splitlines()[0] == "index,gcd,value,form"
        assert parse_table(text, "csv") == rows

    def test_json_round_trip(self):
        rows = build_table(TAU, 30, compress=True)
        text = render_table(rows, "json")
        assert parse_table(text, "json") == rows

    def test_json_values_are_strings(self):
        rows = build_table(ID, 6, compress=True)
        payload = json.loads(render_table(rows, "json"))
        assert all(isinstance(entry["value"], str) for entry in payload)

    def test_csv_round_trip_with_rationals(self):
        rows = build_table(id_power(-1), 12, compress=True)
        assert parse_table(render_table(rows, "csv"), "csv") == rows

    def test_text_format_has_header(self):
        text = render_table(build_table(ID, 6, compress=True), "text")
        assert text.splitlines()[0].split() == ["index", "gcd", "value", "form"]

    def test_unknown_format_rejected(self):
        with pytest.raises(DomainError):
            render_table([], "yaml")
        with pytest.raises(DomainError):
            parse_table("", "text")
