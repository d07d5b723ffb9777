import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alphatough import (
    FormatError,
    complete,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
    path,
    star,
)
from alphatough.formats import read_graph6_lines

from conftest import from_nx, random_graph, to_nx


def hand_decode(code: str) -> tuple[int, set[tuple[int, int]]]:
    """Independent small-n decoder: expand every character to 6 bits, read column-wise."""
    n = ord(code[0]) - 63
    bits = "".join(format(ord(ch) - 63, "06b") for ch in code[1:])
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.add((i, j))
            k += 1
    return n, edges


def test_decode_example():
    g = parse_graph6(b"D?{")
    n, edges = hand_decode("D?{")
    assert g.n == n == 5
    assert set(g.edges()) == edges == {(0, 4), (1, 4), (2, 4), (3, 4)}


def test_emit_trivial_graph():
    assert emit_graph6(complete(1)) == b"@"


def test_empty_input_rejected():
    with pytest.raises(FormatError):
        parse_graph6(b"")


def test_header_and_newline_accepted():
    assert parse_graph6(b">>graph6<<D?{\n") == parse_graph6("D?{")


@pytest.mark.parametrize("bad", [b"D?", b"D?{?", b"D?|", b"D?\x7f", b"D \x3f", b"~?"])
def test_malformed_rejected(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


@pytest.mark.parametrize("n", range(1, 13))
def test_roundtrip_random(n):
    rng = np.random.default_rng(n)
    for _ in range(1000):
        g = random_graph(rng, n, rng.uniform(0, 1))
        code = emit_graph6(g)
        assert parse_graph6(code) == g
        assert emit_graph6(parse_graph6(code)) == code


@pytest.mark.parametrize("n", [1, 2, 5, 13, 62, 63, 70, 130])
def test_matches_networkx_encoder(n):
    rng = np.random.default_rng(1000 + n)
    g = random_graph(rng, n, 0.4)
    expected = nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert emit_graph6(g) == expected
    assert from_nx(nx.from_graph6_bytes(expected)) == parse_graph6(expected)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 20), st.data())
def test_canonical_strings_roundtrip(n, data):
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    pad = 6 * nbytes - nbits
    body = [data.draw(st.integers(0, 63)) for _ in range(nbytes)]
    if body:
        body[-1] &= ~((1 << pad) - 1) & 63
    code = bytes([n + 63] + [b + 63 for b in body])
    assert emit_graph6(parse_graph6(code)) == code


def test_read_lines_skips_blanks():
    text = [b"D?{\n", b"\n", b"@\n"]
    gs = list(read_graph6_lines(text))
    assert [g.n for g in gs] == [5, 1]


def test_edge_list_path():
    g = parse_edge_list("3\n0 1\n1 2")
    assert g == path(3)


def test_edge_list_errors():
    with pytest.raises(FormatError, match="self-loop"):
        parse_edge_list("2\n0 0")
    with pytest.raises(FormatError, match="duplicate"):
        parse_edge_list("4\n0 1\n0 1")
    with pytest.raises(FormatError, match="range"):
        parse_edge_list("3\n0 3")
    with pytest.raises(FormatError):
        parse_edge_list("")
    with pytest.raises(FormatError):
        parse_edge_list("x\n0 1")


def test_edge_list_roundtrip():
    g = star(4)
    text = emit_edge_list(g)
    assert text == "5\n0 1\n0 2\n0 3\n0 4\n"
    assert parse_edge_list(text) == g
    assert emit_edge_list(parse_edge_list(text)) == text
