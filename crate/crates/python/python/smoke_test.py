"""Smoke test for the toric_puzzle_py extension module."""

import json

import toric_puzzle_py as tp


def main():
    hexagon = tp.SimplicialComplex.ngon(6)
    assert (hexagon.m, hexagon.n, hexagon.picard) == (6, 2, 4)
    assert len(hexagon.minimal_non_faces()) == 9
    assert hexagon.is_seed()
    again = tp.SimplicialComplex.from_json(hexagon.to_json())
    assert again.facets == hexagon.facets

    maps = tp.characteristic_maps(hexagon)
    assert len(maps) == 11
    lam1 = tp.CharMatrix([[1, 0, 1, 0, 1, 0], [0, 1, 0, 1, 0, 1]])
    assert lam1.is_characteristic(hexagon)
    assert lam1.canonical() in maps

    d = tp.diagram(hexagon)
    assert len(d) == 11
    assert len(d.edges) == 54
    i1 = d.index_of(lam1)
    i4 = d.index_of(tp.CharMatrix([[1, 0, 1, 1, 0, 1], [0, 1, 1, 0, 1, 1]]))
    near4 = {b for a, b, _ in d.edges if a == i4} | {a for a, b, _ in d.edges if b == i4}
    assert len(near4) == 3
    assert all(len(d.colors_between(i4, x)) == 2 for x in near4)
    assert d.colors_between(i1, i4) == []
    assert d.to_dot().startswith("graph")
    assert set(json.loads(d.to_json())) == {"classes", "edges", "squares"}

    puzzles = d.puzzles([2, 3, 1, 1, 1, 1])
    assert len(puzzles) == 119 == d.count_puzzles([2, 3, 1, 1, 1, 1])
    for p in puzzles[:20]:
        assert d.is_realizable(p)
        assert d.is_realizable_by_squares(p)
        assert d.is_realizable_by_subcubes(p)
    prism = tp.Puzzle([2, 3, 1, 1, 1, 1], puzzles[0].assignment)
    assert prism == puzzles[0]
    assert len(prism.as_dict()) == 6

    assert tp.crosscheck(tp.SimplicialComplex.ngon(5), [2, 2, 1, 1, 1]) == (13, 13)

    c74 = tp.SimplicialComplex.cyclic(4, 7)
    assert len(tp.characteristic_maps(c74)) == 2
    assert tp.diagram(c74).edges == []

    try:
        tp.SimplicialComplex(3, [[1, 2], [3]])
    except ValueError as e:
        assert "not pure" in str(e)
    else:
        raise AssertionError("non-pure complex accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
