import pytest

from qlattice import (MotzkinPath, QPoly, down_count, down_height_product,
                      enumerate_paths, motzkin_number, parse_path, path_weight,
                      poly_eval)


def motzkin_oracle(n):
    """Independent convolution recurrence for the path counts."""
    m = [1]
    for i in range(n):
        m.append(m[i] + sum(m[k] * m[i - 1 - k] for k in range(i)))
    return m[n]


def height_product_oracle(steps):
    out, h = 1, 0
    for ch in steps:
        if ch == "U":
            h += 1
        elif ch == "D":
            out *= h
            h -= 1
    return out


def test_parse_valid_paths():
    p = parse_path("UHDHUUHDD")
    assert p.down_count == 3
    assert len(p) == 9
    assert parse_path("").steps == ""
    assert str(parse_path("UHD")) == "UHD"


def test_parse_errors():
    with pytest.raises(ValueError, match="below the axis"):
        parse_path("DU")
    with pytest.raises(ValueError, match="ends at height"):
        parse_path("UU")
    with pytest.raises(ValueError, match="invalid step"):
        parse_path("UXD")


def test_enumeration_n3_exact_order():
    assert [p.steps for p in enumerate_paths(3)] == ["HHH", "HUD", "UDH", "UHD"]


def test_enumeration_counts():
    expected = [1, 1, 2, 4, 9, 21, 51, 127, 323]
    for n in range(9):
        assert motzkin_number(n) == expected[n] == motzkin_oracle(n)
    for n in range(7):
        assert sum(1 for _ in enumerate_paths(n)) == expected[n]
    assert [p.steps for p in enumerate_paths(0)] == [""]


def test_weight_frozen_examples():
    assert path_weight(parse_path("UHDHUUHDD")) == QPoly((0, 0, 0, 0, 1, 1))
    assert path_weight(parse_path("HHH")) == QPoly.one()
    assert path_weight(parse_path("UHUDHD")) == QPoly((0, 0, 0, 1, 1))


def test_weight_at_one_is_product_of_down_heights():
    for n in range(7):
        for p in enumerate_paths(n):
            expected = height_product_oracle(p.steps)
            assert poly_eval(path_weight(p), 1) == expected
            assert down_height_product(p) == expected


def test_down_count_examples():
    assert down_count(parse_path("UHDHUUHDD")) == 3
    assert down_count(parse_path("HHH")) == 0
    assert down_count(parse_path("UUDHUDHD")) == 3


def test_heights_and_step_balance():
    for n in range(7):
        for p in enumerate_paths(n):
            assert p.steps.count("U") == p.steps.count("D") == p.down_count
            h = 0
            for i, ch in enumerate(p.steps, start=1):
                h += {"U": 1, "D": -1, "H": 0}[ch]
                assert p.heights[i] == h
            assert p.heights[0] == 0 and p.heights[n] == 0


def test_path_equality_and_hash():
    assert parse_path("UHD") == MotzkinPath("UHD")
    assert len({parse_path("UHD"), MotzkinPath("UHD")}) == 1
    assert parse_path("UHD") != parse_path("UDH")
