from fractions import Fraction

from carpetcut.adjacency import cells_intersection_class, neighbor_table, position_neighbor
from carpetcut.core import Direction, Point, words
from carpetcut.presets import resolve
from carpetcut.radix import Cardinality
from oracles import subdivision_meets, subdivision_meets_any_level

S, M, E = Cardinality.SINGLETON, Cardinality.MULTIPLE, Cardinality.EMPTY


def test_sierpinski_table():
    table = neighbor_table(resolve("sierpinski"))
    assert len(table) == 8
    for d, c in table.items():
        assert c.tag is (S if d.is_corner else M)


def test_goodcp_right_edge():
    assert neighbor_table(resolve("goodcp"))[Direction.RIGHT].tag is M


def test_diag3_table():
    table = neighbor_table(resolve("diag3"))
    for d, c in table.items():
        if not d.is_corner:
            assert c.tag is E
    assert table[Direction.UP_RIGHT].tag is S
    assert table[Direction.DOWN_LEFT].tag is S
    assert table[Direction.UP_LEFT].tag is E
    assert table[Direction.DOWN_RIGHT].tag is E


def test_cell_classes():
    spec = resolve("goodcp")
    assert cells_intersection_class(spec, ((0, 0),), ((1, 0),)).tag is M
    c = cells_intersection_class(spec, ((0, 1),), ((1, 0),))
    assert c.tag is S and c.point == Point(Fraction(1, 3), Fraction(1, 3))
    assert cells_intersection_class(spec, ((0, 0),), ((1, 0), (1, 0))).tag is E


def test_position_neighbor():
    spec = resolve("goodcp")
    assert position_neighbor(spec, ((1, 0),), Direction.LEFT) == ((0, 0),)
    assert position_neighbor(spec, ((0, 0),), Direction.LEFT) is None
    assert position_neighbor(resolve("diag3"), ((1, 1),), Direction.RIGHT) is None


def test_classes_match_subdivision(small_corpus):
    for spec in small_corpus[:12]:
        for i in words(spec, 2):
            for j in words(spec, 2):
                if i >= j:
                    continue
                got = cells_intersection_class(spec, i, j).tag is not E
                assert got == subdivision_meets(spec, i, j, depth=6), (spec, i, j)


def test_first_level_cell_misses_repeated_digit_cell(presets, small_corpus):
    # a level-1 cell never meets the level-2 cell ii of a different digit i
    for spec in list(presets.values())[:5] + small_corpus[:10]:
        for (j,) in words(spec, 1):
            for (i,) in words(spec, 1):
                if i != j:
                    assert cells_intersection_class(spec, (j,), (i, i)).tag is E
                    assert not subdivision_meets_any_level(spec, (j,), (i, i), depth=5)
