from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordkit.digraphs import Digraph, Edge
from ordkit.edgerings import BipartiteGraph, SimpleGraph
from ordkit.errors import OrdkitError
from ordkit.relations import Preorder, Relation, closure
from ordkit.textio import (
    ParseError,
    document_text,
    parse_bipartite,
    parse_digraph,
    parse_document,
    parse_graph,
    parse_int_tuples,
    parse_matrices,
    parse_matrix,
    parse_monomials,
    parse_preorder,
    parse_topology,
    render_bipartite,
    render_digraph,
    render_graph,
    render_int_tuples,
    render_matrix,
    render_monomials,
    render_preorder,
    render_topology,
    render_hasse,
)
from ordkit.topology import from_preorder


names_st = st.lists(
    st.from_regex(r"[a-z][a-z0-9]{0,3}", fullmatch=True), min_size=1, max_size=5, unique=True
)

preorder_with_names = names_st.flatmap(
    lambda names: st.tuples(
        st.just(tuple(names)),
        st.tuples(*([st.integers(0, (1 << len(names)) - 1)] * len(names))).map(
            lambda rows: closure(Relation(len(names), rows))
        ),
    )
)


class TestPreorderGrammar:
    def test_two_chain(self):
        p, names = parse_preorder("n=2; pairs: v<=w")
        assert p == Preorder.chain(2) and names == ("v", "w")

    def test_default_names_for_three_points(self):
        p, names = parse_preorder("n=3; pairs: x<=y, y<=x")
        assert names == ("x", "y", "z")
        assert p.le(0, 1) and p.le(1, 0) and not p.le(0, 2)

    def test_unknown_point_name(self):
        with pytest.raises(ParseError, match="unknown point name 'u'"):
            parse_preorder("n=2; pairs: v<=u")

    def test_explicit_points_header(self):
        p, names = parse_preorder("n=2; points: hi,lo; pairs: lo<=hi")
        assert names == ("hi", "lo") and p.le(1, 0)

    def test_closure_applied_by_default(self):
        p, _ = parse_preorder("n=3; pairs: x<=y, y<=z")
        assert p.le(0, 2)

    def test_strict_mode_reports_missing_pair(self):
        with pytest.raises(OrdkitError, match="missing pair"):
            parse_preorder("n=2; pairs: v<=w", close=False)

    def test_strict_mode_accepts_closed_input(self):
        text = "n=2; pairs: v<=v, w<=w, v<=w"
        p, _ = parse_preorder(text, close=False)
        assert p == Preorder.chain(2)

    @settings(max_examples=80)
    @given(preorder_with_names)
    def test_round_trip(self, case):
        names, p = case
        assert parse_preorder(render_preorder(p, names)) == (p, names)


class TestMonomialGrammar:
    def test_basic_generators(self):
        vectors, names = parse_monomials("x^2, x*y, y^3")
        assert names == ("x", "y")
        assert vectors == [(2, 0), (1, 1), (0, 3)]

    def test_three_variable_ideal(self):
        vectors, names = parse_monomials("x, y^2, y*z, z^3")
        assert names == ("x", "y", "z")
        assert vectors == [(1, 0, 0), (0, 2, 0), (0, 1, 1), (0, 0, 3)]

    def test_double_caret_reports_column(self):
        with pytest.raises(ParseError, match="column 3"):
            parse_monomials("x^^2")

    def test_vars_header_fixes_order(self):
        vectors, names = parse_monomials("vars: z,y,x; x*y")
        assert names == ("z", "y", "x")
        assert vectors == [(0, 1, 1)]

    def test_vars_header_rejects_duplicates(self):
        with pytest.raises(ParseError, match="duplicate variable"):
            parse_monomials("vars: x,x; x")

    def test_vars_header_rejects_unknown_names(self):
        with pytest.raises(ParseError, match="not in vars header"):
            parse_monomials("vars: x,y; x*w")

    def test_unit_generator_and_repeats(self):
        vectors, names = parse_monomials("1, x*x")
        assert vectors == [(0,), (2,)]

    def test_zero_ideal_with_header(self):
        vectors, names = parse_monomials("vars: x,y;")
        assert vectors == [] and names == ("x", "y")

    @settings(max_examples=80)
    @given(
        names_st,
        st.data(),
    )
    def test_round_trip(self, names, data):
        n = len(names)
        vectors = data.draw(
            st.lists(st.tuples(*([st.integers(0, 4)] * n)), min_size=0, max_size=4)
        )
        text = render_monomials(vectors, names)
        assert parse_monomials(text) == (list(vectors), tuple(names))


class TestDigraphGrammar:
    def test_parallel_arrow_digraph(self):
        q, names = parse_digraph("n=3; edges: a->b:e, a->b:f, b->c:g, a->c:h")
        assert names == ("a", "b", "c")
        assert [e.label for e in q.edges] == ["e", "f", "g", "h"]

    def test_labels_autogenerated(self):
        q, _ = parse_digraph("n=2; edges: a->b, a->b")
        assert [e.label for e in q.edges] == ["e0", "e1"]

    def test_bare_count_with_edge_lines(self):
        q, names = parse_digraph("3\na->b:e\nb->c:g\n")
        assert names == ("a", "b", "c")
        assert [e.label for e in q.edges] == ["e", "g"]

    def test_round_trip(self):
        q = Digraph(3, (Edge(0, 1, "e"), Edge(0, 1, "f"), Edge(1, 2, "g")))
        names = ("a", "b", "c")
        assert parse_digraph(render_digraph(q, names)) == (q, names)


class TestGraphGrammar:
    def test_bare_edge_list(self):
        g = parse_graph("a-b, b-c, c-d")
        assert g.vertices == ("a", "b", "c", "d")
        assert g.edges == ((0, 1), (1, 2), (2, 3))

    def test_points_header_allows_isolated_vertices(self):
        g = parse_graph("points: a,b,c; edges: a-b")
        assert g.vertices == ("a", "b", "c") and g.edges == ((0, 1),)

    def test_loop_rejected(self):
        with pytest.raises(ParseError, match="loop"):
            parse_graph("a-a")

    def test_round_trip(self):
        g = SimpleGraph(("a", "b", "c"), ((0, 1), (0, 2)))
        assert parse_graph(render_graph(g)) == g


class TestBipartiteGrammar:
    def test_parts_and_edges(self):
        g = parse_bipartite("A: a,c | B: b,d | edges: a-b, b-c, c-d")
        assert g.a_names == ("a", "c") and g.b_names == ("b", "d")
        assert g.relation == (0b01, 0b11)

    def test_edge_within_one_side_rejected(self):
        with pytest.raises(ParseError, match="does not join"):
            parse_bipartite("A: a,c | B: b,d | edges: a-c")

    def test_round_trip(self):
        g = BipartiteGraph(("a", "c"), ("b", "d"), (0b01, 0b11))
        assert parse_bipartite(render_bipartite(g)) == g


class TestMatrixGrammar:
    def test_rational_entries(self):
        g = parse_matrix("1,0; 1/2,3")
        assert g.entries[1][0] == Fraction(1, 2)

    def test_bad_literal(self):
        with pytest.raises(ParseError, match="bad rational"):
            parse_matrix("1,x; 0,1")

    def test_non_square_rejected(self):
        with pytest.raises(ParseError, match="square"):
            parse_matrix("1,0,0; 0,1,0")

    def test_many_round_trip(self):
        mats = parse_matrices("1,0;0,1 | 1,1/3;0,2")
        assert len(mats) == 2
        for m in mats:
            assert parse_matrix(render_matrix(m)) == m


class TestTopologyGrammar:
    def test_opens_parse_and_validate(self):
        t, names = parse_topology("points: v,w; opens: {}, {w}, {v,w}")
        assert t.opens == (0, 2, 3) and names == ("v", "w")

    def test_axiom_violation_is_domain_error(self):
        with pytest.raises(OrdkitError, match="union"):
            parse_topology("points: a,b,c; opens: {}, {a}, {b}, {a,b,c}")

    def test_unknown_point(self):
        with pytest.raises(ParseError, match="unknown point"):
            parse_topology("points: a,b; opens: {}, {c}, {a,b}")

    def test_round_trip(self):
        for p in [Preorder.chain(3), Preorder.discrete(2), Preorder.coarse(2)]:
            t = from_preorder(p)
            names = tuple(f"p{i}" for i in range(p.n))
            assert parse_topology(render_topology(t, names)) == (t, names)


class TestIntTuples:
    def test_parse(self):
        assert parse_int_tuples("1,2; 0,3") == [(1, 2), (0, 3)]

    def test_round_trip(self):
        values = [(0, 1, 5), (2, 2, 2)]
        assert parse_int_tuples(render_int_tuples(values)) == values

    def test_bad_token(self):
        with pytest.raises(ParseError, match="bad integer"):
            parse_int_tuples("1,a")


class TestDiagrams:
    def test_two_chain_hasse(self):
        out = render_hasse(Preorder.chain(2), ("v", "w"))
        assert '"v" -> "w";' in out and "rankdir=BT" in out

    def test_coarse_pair_is_single_bubble_node(self):
        out = render_hasse(Preorder.coarse(2), ("v", "w"))
        assert '"v,w";' in out and "->" not in out

    def test_bubble_under_singleton(self):
        p = Preorder.from_pairs(3, [(0, 1), (1, 0), (0, 2)])
        out = render_hasse(p, ("x", "y", "z"))
        assert '"x,y" -> "z";' in out

    def test_three_chain_has_covers_only(self):
        out = render_hasse(Preorder.chain(3), ("a", "b", "c"))
        assert '"a" -> "b";' in out and '"b" -> "c";' in out
        assert '"a" -> "c";' not in out


class TestDocuments:
    def test_byte_identical_round_trip(self):
        doc = {"kind": "preorder", "n": 2, "points": ["v", "w"], "pairs": [["v", "w"]]}
        text = document_text(doc)
        assert document_text(parse_document(text)) == text

    def test_canonical_key_order(self):
        assert document_text({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'

    @settings(max_examples=50)
    @given(
        st.recursive(
            st.one_of(st.integers(), st.text(max_size=8), st.booleans()),
            lambda inner: st.one_of(
                st.lists(inner, max_size=4),
                st.dictionaries(st.text(max_size=6), inner, max_size=4),
            ),
            max_leaves=20,
        )
    )
    def test_round_trip_any_document(self, doc):
        text = document_text(doc)
        assert document_text(parse_document(text)) == text
