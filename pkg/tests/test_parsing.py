import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from germlab.parsing import (
    CorpusError,
    GermSpec,
    InvariantReport,
    ParseError,
    format_poly,
    parse_corpus,
    parse_poly,
    read_corpus,
)
from germlab.polyring import Polynomial

from conftest import polynomials

XY = ["x", "y"]
XYZ = ["x", "y", "z"]


def test_parse_simple():
    assert parse_poly("x^3 + y^2", XY) == Polynomial({(3, 0): 1, (0, 2): 1}, 2)


def test_parse_malgrange_n3():
    f = parse_poly("(x*y*z)^2 + x^8 + y^8 + z^8", XYZ)
    assert f == Polynomial({(2, 2, 2): 1, (8, 0, 0): 1, (0, 8, 0): 1, (0, 0, 8): 1}, 3)


def test_parse_rational_coefficient():
    f = parse_poly("2/3*x^2 - x*y", XY)
    assert f.coeff((2, 0)) == Fraction(2, 3)
    assert f.coeff((1, 1)) == -1


@pytest.mark.parametrize("src,expected", [
    ("-x^2", {(2, 0): -1}),
    ("x^2^2", {(4, 0): 1}),
    ("-(x+y)^2", {(2, 0): -1, (1, 1): -2, (0, 2): -1}),
    ("x - -y", {(1, 0): 1, (0, 1): 1}),
    ("+x*3", {(1, 0): 3}),
])
def test_precedence(src, expected):
    assert parse_poly(src, XY) == Polynomial(expected, 2)


@pytest.mark.parametrize("src,col", [
    ("2x", 2),
    ("x y", 3),
    ("x^-1", 3),
    ("x^y", 3),
    ("x/2", 2),
    ("x + ", 5),
    ("(x", 3),
    ("x $ y", 3),
])
def test_syntax_errors_report_position(src, col):
    with pytest.raises(ParseError) as err:
        parse_poly(src, XY)
    assert err.value.column == col
    assert err.value.line == 1


def test_error_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_poly("x +\n 2 z", XYZ)
    assert (err.value.line, err.value.column) == (2, 4)


def test_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable 'z'"):
        parse_poly("x + z", XY)


def test_format_examples():
    assert format_poly(parse_poly("x^3+y^2", XY), XY) == "x^3 + y^2"
    assert format_poly(Polynomial.zero(2), XY) == "0"
    assert format_poly(parse_poly("-x", XY), XY) == "-x"
    assert format_poly(parse_poly("1 - 2/3*x*y", XY), XY) == "-2/3*x*y + 1"


@settings(max_examples=100, deadline=None)
@given(polynomials())
def test_round_trip(p):
    names = XYZ[:p.n]
    assert parse_poly(format_poly(p, names), names) == p


def test_read_corpus_entry(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text('# comment\n{"name":"A2","vars":["x","y"],"poly":"x^3+y^2","expected":{"mu":2,"tau":2}}\n')
    (spec,) = read_corpus(path)
    assert spec.name == "A2" and spec.vars == ("x", "y")
    assert spec.expected == {"mu": 2, "tau": 2}
    assert spec.parse() == parse_poly("x^3+y^2", XY)


def test_read_empty_corpus(tmp_path):
    path = tmp_path / "empty.jsonl"
    path.write_text("")
    assert read_corpus(path) == []


def test_unknown_field_is_named():
    with pytest.raises(CorpusError, match="line 2: unknown field 'colour'"):
        parse_corpus('{"name":"a","vars":["x"],"poly":"x^2"}\n'
                     '{"name":"b","vars":["x"],"poly":"x^2","colour":"red"}\n')


@pytest.mark.parametrize("line,msg", [
    ('{"name":"a","vars":["x"],"poly":"x^2+1"}', "vanish at the origin"),
    ('{"name":"a","vars":["x","x"],"poly":"x^2"}', "duplicate"),
    ('{"name":"a","vars":["x"]}', "missing field 'poly'"),
    ('{"name":"a","vars":["x"],"poly":"2x"}', "implicit multiplication"),
    ('{"name":"a","vars":["x"],"poly":"x^2","expected":{"milnor":1}}', "expected.milnor"),
    ('not json', "line 1"),
])
def test_corpus_errors(line, msg):
    with pytest.raises(CorpusError, match=msg):
        parse_corpus(line)


def test_bundled_corpus_loads(corpus):
    assert len(corpus) >= 30
    names = [s.name for s in corpus]
    assert len(set(names)) == len(names)
    for spec in corpus:
        assert GermSpec.from_dict(spec.to_dict()) == spec


def test_report_json_is_canonical():
    rep = InvariantReport(name="g", n=2, status="OK", mu=13, tau=12, ratio=Fraction(13, 12),
                          f_pow_checks={1: False, 2: True}, newton={"volumes": {"2": Fraction(12)}})
    a = rep.to_json()
    b = InvariantReport(**{**rep.__dict__}).to_json()
    assert a == b
    data = json.loads(a)
    assert data["ratio"] == "13/12"
    assert data["newton"]["volumes"]["2"] == "12/1"
    assert list(data) == sorted(data)
    assert "sectional" not in data
