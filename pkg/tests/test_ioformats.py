import json
import random

import pytest

from brodmann.errors import ParseError
from brodmann.ioformats import (
    ideal_to_json,
    ideal_to_text,
    load_ideal,
    load_system,
    monomial_str,
    parse_ideal_json,
    parse_ideal_text,
    parse_system_json,
    parse_system_text,
    prime_str,
    system_to_json,
    system_to_text,
)
from brodmann.monomials import minimize, unit_ideal, zero_ideal
from brodmann.polyhedra import ConstraintSystem

from conftest import random_ideal


class TestMonomialStrings:
    def test_monomial_str(self):
        assert monomial_str((2, 0, 1)) == "x1^2 x3"
        assert monomial_str((0, 0)) == "1"
        assert monomial_str((1, 1)) == "x1 x2"

    def test_prime_str(self):
        assert prime_str((1, 3)) == "{x1,x3}"
        assert prime_str((2,)) == "{x2}"


class TestIdealText:
    def test_parse_basic(self):
        I = parse_ideal_text("vars: 2\nx1^3 x2\nx2^4\n")
        assert I == minimize([(3, 1), (0, 4)], 2)

    def test_parse_normalizes(self):
        # divisible and duplicate generators collapse
        I = parse_ideal_text("vars: 2\nx1\nx1^2\nx1\n")
        assert I == minimize([(1, 0)], 2)

    def test_parse_comments_and_blank_lines(self):
        text = "# a comment\nvars: 2\n\nx1^2  # trailing\n"
        assert parse_ideal_text(text) == minimize([(2, 0)], 2)

    def test_zero_and_unit_forms(self):
        assert parse_ideal_text("vars: 3\n") == zero_ideal(3)
        assert parse_ideal_text("vars: 3\n1\n") == unit_ideal(3)
        assert parse_ideal_text(ideal_to_text(zero_ideal(3))) == zero_ideal(3)
        assert parse_ideal_text(ideal_to_text(unit_ideal(3))) == unit_ideal(3)

    def test_repeated_variable_tokens_accumulate(self):
        assert parse_ideal_text("vars: 2\nx1 x1 x2\n") == minimize([(2, 1)], 2)

    @pytest.mark.parametrize(
        "bad",
        [
            "x1^2\n",  # missing header
            "vars: 0\nx1\n",
            "vars: 2\nx3\n",  # out-of-range variable
            "vars: 2\nx1^-1\n",
            "vars: 2\ny2\n",
            "vars: 2\nx1^\n",
        ],
    )
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            parse_ideal_text(bad)

    def test_parse_error_carries_location(self):
        with pytest.raises(ParseError) as info:
            parse_ideal_text("vars: 2\nx1\nbogus!\n", source="demo.txt")
        assert "demo.txt:3" in str(info.value)

    def test_round_trip_on_random_ideals(self):
        rng = random.Random(707)
        for _ in range(40):
            I = random_ideal(rng)
            assert parse_ideal_text(ideal_to_text(I)) == I
            assert parse_ideal_json(ideal_to_json(I)) == I


class TestIdealJson:
    def test_parse_json(self):
        I = parse_ideal_json('{"r": 2, "generators": [[3, 1], [0, 4]]}')
        assert I == minimize([(3, 1), (0, 4)], 2)

    @pytest.mark.parametrize(
        "bad",
        [
            "not json",
            "[]",
            '{"r": 2}',
            '{"r": 2, "generators": [[1]]}',
            '{"r": 2, "generators": [[1, -1]]}',
            '{"r": "2", "generators": []}',
        ],
    )
    def test_json_errors(self, bad):
        with pytest.raises(ParseError):
            parse_ideal_json(bad)


class TestSystemFormats:
    def test_parse_text(self):
        sys_ = parse_system_text("vars: 2\n2 -1 >= 0\n0 1 >= 3\n")
        assert sys_.e == 2
        assert sys_.rows == ((2, -1), (0, 1))
        assert sys_.rhs == (0, 3)
        assert sys_.labels is None

    def test_labels_round_trip(self):
        sys_ = ConstraintSystem(2, ((1, -1),), (0,), ("z", "y1"))
        again = parse_system_text(system_to_text(sys_))
        assert again == sys_
        again_json = parse_system_json(system_to_json(sys_))
        assert again_json == sys_

    def test_json_tolerates_extra_keys(self):
        obj = {"e": 2, "rows": [[1, 0]], "rhs": [0], "mode": "ED1"}
        sys_ = parse_system_json(json.dumps(obj))
        assert sys_.e == 2

    @pytest.mark.parametrize(
        "bad",
        [
            "2 -1 >= 0\n",  # missing header
            "vars: 2\n2 -1 0 >= 0\n",  # arity
            "vars: 2\n2 -1 <= 0\n",
            "vars: 2\n2 x >= 0\n",
            "vars: 2\nlabels: a\n1 0 >= 0\n",  # label count
        ],
    )
    def test_system_parse_errors(self, bad):
        with pytest.raises(ParseError):
            parse_system_text(bad)

    def test_round_trip_random_systems(self):
        rng = random.Random(808)
        for _ in range(30):
            e = rng.randint(1, 4)
            k = rng.randint(0, 4)
            rows = tuple(
                tuple(rng.randint(-5, 5) for _ in range(e)) for _ in range(k)
            )
            rhs = tuple(rng.randint(-5, 5) for _ in range(k))
            sys_ = ConstraintSystem(e, rows, rhs)
            assert parse_system_text(system_to_text(sys_)) == sys_
            assert parse_system_json(system_to_json(sys_)) == sys_


class TestFileLoading:
    def test_load_ideal_sniffs_json(self, tmp_path):
        p = tmp_path / "ideal.json"
        p.write_text('{"r": 2, "generators": [[1, 0]]}')
        assert load_ideal(p) == minimize([(1, 0)], 2)
        q = tmp_path / "ideal.txt"
        q.write_text("vars: 2\nx1\n")
        assert load_ideal(q) == minimize([(1, 0)], 2)

    def test_load_system(self, tmp_path):
        p = tmp_path / "sys.txt"
        p.write_text("vars: 2\n1 -1 >= 0\n")
        assert load_system(p).rows == ((1, -1),)

    def test_load_missing_file_is_parse_error(self, tmp_path):
        with pytest.raises(ParseError):
            load_ideal(tmp_path / "absent.txt")
