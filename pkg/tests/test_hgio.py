import numpy as np
import pytest
from hypothesis import given, settings

from hyperspec import format_hg, laplacian, parse_hg, read_hg, write_hg
from hyperspec.errors import ParseError
from hyperspec.families import bowtie
from hyperspec.hgio import format_matrix, parse_matrix

from conftest import hypergraphs

BOWTIE_TEXT = """# two triples sharing a vertex
p hg 5 2
e 1 2 3
e 3 4 5   # trailing comment
"""


def test_parse_bowtie():
    assert parse_hg(BOWTIE_TEXT) == bowtie()


@pytest.mark.parametrize("text, line, fragment", [
    ("p hg 3\ne 1 2\n", 1, "header"),
    ("p hg 3 2\ne 1 2\ne 2 1\n", 3, "duplicate"),
    ("p hg 3 1\ne 1 4\n", 2, "outside 1..3"),
    ("p hg 3 1\nx 1 2\n", 2, "unknown line type"),
    ("e 1 2\n", 1, "before"),
    ("p hg 3 1\ne 1\n", 2, "at least 2"),
    ("p hg 3 1\ne 1 a\n", 2, "integers"),
    ("p hg 3 1\np hg 3 1\n", 2, "second header"),
])
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ParseError) as info:
        parse_hg(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_edge_count_mismatch():
    with pytest.raises(ParseError, match="announces 2 edges, found 1"):
        parse_hg("p hg 3 2\ne 1 2\n")


def test_missing_header():
    with pytest.raises(ParseError, match="missing"):
        parse_hg("# nothing\n")


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_round_trip(g):
    assert parse_hg(format_hg(g, comment="round trip")) == g


def test_file_round_trip(tmp_path):
    path = tmp_path / "t.hg"
    write_hg(bowtie(), str(path))
    assert read_hg(str(path)) == bowtie()
    with open(path) as fh:
        assert read_hg(fh) == bowtie()


def test_matrix_round_trip_is_exact():
    L = laplacian(bowtie()) / 7.0
    assert np.array_equal(parse_matrix(format_matrix(L)), L)
