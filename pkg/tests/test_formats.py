import random

import pytest

from certigraph import (
    CutWitness,
    GcdTriple,
    Graph,
    LengthMismatchError,
    ParseError,
    WellformednessError,
    parse_connectivity_witness,
    parse_gcd_line,
    parse_graph,
    parse_matching_witness,
    parse_sp_witness,
    serialize_connectivity_witness,
    serialize_gcd,
    serialize_graph,
    serialize_matching_witness,
    serialize_sp_witness,
    solve_connectivity,
    solve_gcd,
    solve_max_matching,
    solve_shortest_paths,
)

from conftest import DATA
from helpers import random_digraph, random_loopless_graph, random_multigraph


def test_golden_graph_files_match_fixtures(demo_graph, zero_cycle_graph, zero_cycle_cost, twelve_graph):
    g, cost = parse_graph((DATA / "connected_5v.graph").read_text())
    assert (g, cost) == (demo_graph, None)
    g, cost = parse_graph((DATA / "sp_zero_cycle.graph").read_text())
    assert (g, cost) == (zero_cycle_graph, zero_cycle_cost)
    g, cost = parse_graph((DATA / "matching_12v.graph").read_text())
    assert (g, cost) == (twelve_graph, None)


def test_golden_witness_files_match_fixtures(
    demo_graph, demo_tree, zero_cycle_graph, zero_cycle_cost, zero_cycle_witness,
    twelve_graph, twelve_witness,
):
    w = parse_connectivity_witness((DATA / "connected_5v.tree").read_text(), demo_graph)
    assert w == demo_tree
    w = parse_sp_witness(
        (DATA / "sp_zero_cycle.sp").read_text(), zero_cycle_graph, zero_cycle_cost
    )
    assert w == zero_cycle_witness
    w = parse_matching_witness((DATA / "matching_12v.matching").read_text(), twelve_graph)
    assert w == twelve_witness
    assert parse_gcd_line((DATA / "gcd_example.gcd").read_text()) == GcdTriple(12, 8, 4, 1, -1)


def test_graph_round_trip():
    rng = random.Random(18)
    for _ in range(60):
        g = random_multigraph(rng, rng.randint(0, 8), 12)
        assert parse_graph(serialize_graph(g)) == (g, None)
        g2, cost = random_digraph(rng, rng.randint(1, 8), 12, 9)
        # With zero edges there is no cost column to observe, so parsing
        # reports None; otherwise the costs survive the round trip.
        expected = cost if g2.num_edges else None
        assert parse_graph(serialize_graph(g2, cost)) == (g2, expected)


def test_witness_round_trips():
    rng = random.Random(19)
    for _ in range(40):
        g = random_multigraph(rng, rng.randint(1, 8), 12)
        w = solve_connectivity(g).witness
        assert parse_connectivity_witness(serialize_connectivity_witness(w), g) == w
        gd, cost = random_digraph(rng, rng.randint(1, 8), 12, 5)
        sw = solve_shortest_paths(gd, cost, 0).witness
        assert parse_sp_witness(serialize_sp_witness(sw), gd, cost) == sw
        gl = random_loopless_graph(rng, rng.randint(0, 8), 10)
        mw = solve_max_matching(gl).witness
        assert parse_matching_witness(serialize_matching_witness(mw), gl) == mw
    t = GcdTriple(240, 46, 2, -9, 47)
    assert parse_gcd_line(serialize_gcd(t)) == t


def test_cut_round_trip():
    g = Graph(4, [(0, 1), (2, 3)])
    w = CutWitness(frozenset({0, 1}))
    text = serialize_connectivity_witness(w)
    assert text == "cut 2\n0\n1\n"
    assert parse_connectivity_witness(text, g) == w


def test_serialized_forms_are_trailing_newline_terminated(demo_graph):
    assert serialize_graph(demo_graph).endswith("1 1\n")
    assert not serialize_graph(demo_graph).endswith("\n\n")


def test_tolerates_trailing_blank_lines(demo_graph, demo_tree):
    text = serialize_connectivity_witness(demo_tree) + "\n  \n"
    assert parse_connectivity_witness(text, demo_graph) == demo_tree


def test_rejects_interior_blank_line():
    with pytest.raises(ParseError, match="blank line"):
        parse_graph("graph 2 1\n\n0 1\n")


def test_rejects_bad_tag_and_counts():
    with pytest.raises(ParseError):
        parse_graph("digraph 2 1\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph("graph 2\n")
    with pytest.raises(LengthMismatchError):
        parse_graph("graph 2 2\n0 1\n")
    with pytest.raises(LengthMismatchError):
        parse_graph("graph 2 0\n0 1\n")
    with pytest.raises(ParseError, match="empty file"):
        parse_graph("")


def test_rejects_mixed_arity():
    with pytest.raises(ParseError, match="mixed"):
        parse_graph("graph 2 2\n0 1 5\n1 0\n")
    with pytest.raises(ParseError, match="mixed"):
        parse_graph("graph 2 2\n0 1\n1 0 5\n")


def test_rejects_negative_and_garbage_tokens():
    with pytest.raises(ParseError):
        parse_graph("graph 2 1\n0 -1\n")
    with pytest.raises(ParseError):
        parse_graph("graph 2 1\n0 x\n")
    with pytest.raises(ParseError):
        parse_graph("graph 2 1\n0 1 -3\n")
    with pytest.raises(ParseError):
        parse_gcd_line("gcd 12 8 -4 1 -1\n")
    with pytest.raises(ParseError):
        parse_gcd_line("gcd 12 8 4 1\n")
    with pytest.raises(ParseError):
        parse_gcd_line("gcd 12 8 4 1 -1\ngcd 1 1 1 1 0\n")
    # Signed tokens still have to be integers.
    with pytest.raises(ParseError):
        parse_gcd_line("gcd 12 8 4 - 1\n")


def test_endpoint_out_of_range_is_wellformedness_error():
    with pytest.raises(WellformednessError):
        parse_graph("graph 2 1\n0 2\n")


def test_sp_witness_parse_errors(zero_cycle_graph, zero_cycle_cost):
    with pytest.raises(ParseError):
        parse_sp_witness("sp 0\n0 0\n", zero_cycle_graph, zero_cycle_cost)
    with pytest.raises(LengthMismatchError):
        parse_sp_witness("sp 0\n0 0 -\n", zero_cycle_graph, zero_cycle_cost)
    with pytest.raises(ParseError):
        parse_sp_witness(
            "sp 0\n0 0 -\n1 1 0\n1 1 1\n1 2 3\ninf INF -\n",
            zero_cycle_graph,
            zero_cycle_cost,
        )


def test_matching_witness_parse_errors(twelve_graph):
    with pytest.raises(ParseError):
        parse_matching_witness("matching 1\n0 1\n" + "0 " * 12 + "\n", twelve_graph)
    with pytest.raises(LengthMismatchError):
        parse_matching_witness("matching 0\n0 0 0\n", twelve_graph)
    with pytest.raises(LengthMismatchError, match="labels"):
        parse_matching_witness("matching 0\n0 0 0 0\n", twelve_graph)


def test_matching_witness_empty_vertex_set():
    g = Graph(0, [])
    text = "matching 0\n"
    w = parse_matching_witness(text, g)
    assert w.matching == Graph(0, []) and w.edge_map == () and w.osc == ()
    assert serialize_matching_witness(w) == text


def test_tree_witness_needs_one_row_per_vertex(demo_graph):
    with pytest.raises(LengthMismatchError):
        parse_connectivity_witness("tree 0\n- 0\n", demo_graph)
    with pytest.raises(ParseError):
        parse_connectivity_witness("tree 0\n- 0 7\n" + "- 1\n" * 4, demo_graph)


def test_parse_then_serialize_is_identity_on_golden_files():
    text = (DATA / "connected_5v.graph").read_text()
    g, cost = parse_graph(text)
    assert serialize_graph(g, cost) == text
    text = (DATA / "sp_zero_cycle.graph").read_text()
    g, cost = parse_graph(text)
    assert serialize_graph(g, cost) == text
    sp_text = (DATA / "sp_zero_cycle.sp").read_text()
    assert serialize_sp_witness(parse_sp_witness(sp_text, g, cost)) == sp_text
    text = (DATA / "connected_5v.tree").read_text()
    g5, _ = parse_graph((DATA / "connected_5v.graph").read_text())
    assert serialize_connectivity_witness(parse_connectivity_witness(text, g5)) == text
    text = (DATA / "matching_12v.matching").read_text()
    g12, _ = parse_graph((DATA / "matching_12v.graph").read_text())
    assert serialize_matching_witness(parse_matching_witness(text, g12)) == text
    text = (DATA / "gcd_example.gcd").read_text()
    assert serialize_gcd(parse_gcd_line(text)) == text


def test_gcd_solver_round_trips_through_text():
    res = solve_gcd(240, 46)
    s, t = res.witness
    line = serialize_gcd(GcdTriple(240, 46, res.output, s, t))
    assert line == "gcd 240 46 2 -9 47\n"
    assert parse_gcd_line(line) == GcdTriple(240, 46, 2, -9, 47)
