import pytest

from isolation import (
    ANY_CYCLE,
    DIAMOND,
    K1,
    K2,
    P3,
    UnsupportedFamilyError,
    book,
    book_graph,
    canonical_form,
    circulant_graph,
    clique,
    complete_bipartite_graph,
    complete_graph,
    contains_pattern,
    custom,
    cycle_graph,
    diamond_graph,
    enumerate_copies,
    extremal_witness_15,
    is_connected,
    make_named,
    parse_family,
    path_graph,
    star,
    verify_y_properties,
    y_graph,
)
from oracles import disjoint_union


# --- family parsing ---------------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("diamond", DIAMOND),
    ("k1", K1),
    ("k2", K2),
    ("K:2", K2),
    ("p3", P3),
    ("anycycle", ANY_CYCLE),
    ("k:4", clique(4)),
    ("star:2", star(2)),
    ("book:3", book(3)),
])
def test_parse_family(text, expected):
    assert parse_family(text) == expected


def test_parse_family_custom_compares_up_to_isomorphism():
    f = parse_family("custom:C}")
    assert f == custom(diamond_graph())


@pytest.mark.parametrize("text", ["widget", "k:x", "star:", "custom:!!"])
def test_parse_family_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_family(text)


def test_family_validation():
    with pytest.raises(ValueError):
        clique(2)
    with pytest.raises(ValueError):
        book(0)
    with pytest.raises(ValueError):
        custom(disjoint_union([path_graph(2), path_graph(2)]))
    with pytest.raises(ValueError):
        custom(path_graph(9))


# --- containment ------------------------------------------------------------

def test_contains_diamond_examples():
    assert contains_pattern(complete_graph(4), DIAMOND)
    assert not contains_pattern(cycle_graph(5), DIAMOND)
    assert contains_pattern(y_graph(), DIAMOND)


def test_contains_fast_path_families():
    p4 = path_graph(4)
    assert contains_pattern(p4, K1) and contains_pattern(p4, K2)
    assert contains_pattern(p4, P3)
    assert not contains_pattern(complete_graph(1), K2)
    assert not contains_pattern(path_graph(2), P3)
    assert contains_pattern(complete_bipartite_graph(1, 3), star(2))
    assert not contains_pattern(cycle_graph(6), star(2))
    assert contains_pattern(cycle_graph(3), ANY_CYCLE)
    assert not contains_pattern(path_graph(6), ANY_CYCLE)


def test_copies_k4_diamond_single_support():
    # every choice of shared edge lands on the same 4-vertex support
    assert enumerate_copies(complete_graph(4), DIAMOND) == [0b1111]


def test_copies_diamond_itself():
    assert enumerate_copies(diamond_graph(), DIAMOND) == [0b1111]


def test_copies_c5_diamond_empty():
    assert enumerate_copies(cycle_graph(5), DIAMOND) == []


def test_copies_anycycle_unsupported():
    with pytest.raises(UnsupportedFamilyError):
        enumerate_copies(cycle_graph(4), ANY_CYCLE)


def test_copies_supports_have_expected_sizes():
    g = complete_graph(5)
    assert all(m.bit_count() == 3 for m in enumerate_copies(g, P3))
    assert all(m.bit_count() == 4 for m in enumerate_copies(g, clique(4)))
    assert all(m.bit_count() == 4 for m in enumerate_copies(g, star(2)))
    assert all(m.bit_count() == 5 for m in enumerate_copies(g, book(3)))


def test_diamond_fast_path_matches_backtracking(census):
    needle = custom(diamond_graph())
    for n in range(1, 8):
        for g in census[n]:
            assert contains_pattern(g, DIAMOND) == contains_pattern(g, needle)


def test_contains_iff_copies_nonempty(census):
    families = [K1, K2, P3, DIAMOND, clique(3), clique(4), star(1), star(2),
                book(2), book(3), custom(path_graph(4)), custom(cycle_graph(4))]
    for n in range(1, 9):
        for g in census[n]:
            for f in families:
                assert contains_pattern(g, f) == bool(enumerate_copies(g, f))


# --- named graphs -----------------------------------------------------------

def test_diamond_shape():
    g = diamond_graph()
    degs = sorted(g.adj[v].bit_count() for v in range(4))
    assert g.n == 4 and g.edge_count() == 5 and degs == [2, 2, 3, 3]


def test_book_two_pages_is_the_diamond():
    assert canonical_form(book_graph(2)) == canonical_form(diamond_graph())


def test_named_constructors_basic_shapes():
    assert path_graph(1).n == 1
    assert cycle_graph(3).edge_count() == 3
    assert complete_bipartite_graph(2, 3).edge_count() == 6
    assert circulant_graph(9, (1, 2)).edge_count() == 18
    assert circulant_graph(6, (3,)).edge_count() == 3  # antipodal matching


def test_named_constructor_validation():
    with pytest.raises(ValueError):
        path_graph(0)
    with pytest.raises(ValueError):
        cycle_graph(2)
    with pytest.raises(ValueError):
        complete_bipartite_graph(2, 0)
    with pytest.raises(ValueError):
        circulant_graph(9, (5,))
    with pytest.raises(ValueError):
        circulant_graph(9, ())


def test_make_named_specs():
    assert make_named("diamond") == diamond_graph()
    assert make_named("Y") == y_graph()
    assert make_named("h15") == extremal_witness_15()
    assert make_named("path:5") == path_graph(5)
    assert make_named("complete_bipartite:2,3") == complete_bipartite_graph(2, 3)
    assert make_named("circulant:9:1,2") == y_graph()
    for bad in ("widget", "path:zero", "circulant:9", "path"):
        with pytest.raises(ValueError):
            make_named(bad)


def test_y_properties_hold_for_y():
    assert verify_y_properties(y_graph()).all_ok


def test_y_properties_fail_for_k4_connectivity():
    rep = verify_y_properties(complete_graph(4))
    assert not rep.connectivity_is_4
    assert not rep.all_ok


def test_y_properties_fail_for_c9_regularity():
    rep = verify_y_properties(cycle_graph(9))
    assert not rep.four_regular


def test_h15_shape_gates():
    g = extremal_witness_15()
    assert g.n == 15 and is_connected(g)
    # three vertex-disjoint diamond gadgets
    copies = enumerate_copies(g, DIAMOND)
    assert len(copies) == 3
    union = 0
    for c in copies:
        assert not (union & c)
        union |= c


def test_copy_supports_contain_the_pattern():
    from isolation import induced_subgraph

    g = y_graph()
    for m in enumerate_copies(g, DIAMOND):
        sub, _ = induced_subgraph(g, m)
        assert contains_pattern(sub, DIAMOND)
        assert m.bit_count() == 4
