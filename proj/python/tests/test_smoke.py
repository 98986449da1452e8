import pytest

import hypergrowth as hg


def test_sequences():
    assert [hg.g_sequence(n) for n in range(1, 12)] == [1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41]
    assert hg.sequence("G", 11) == 41
    assert hg.sequence("F", 8) == 21
    assert hg.sequence("Gk", 6, 2) == 13
    assert hg.g_sequence(200) > 2**64  # big integers come back as Python ints


def test_coloring_roundtrip():
    c = hg.Coloring(3, 2, 5)
    c[[2, 3, 5]] = 1
    assert c[[2, 3, 5]] == 1
    assert c.edge_count == 10
    again = hg.parse_coloring(str(c))
    assert again == c
    assert hg.restrict(c, [2, 3, 5]).colors() == [1]


def test_contains():
    small = hg.Coloring(3, 2, 3, 1)
    host = hg.make_wealthy("W2.1", 2)
    assert hg.contains(small, host) is not None
    assert hg.contains(small, hg.Coloring(3, 2, 6)) is None


def test_wealthy():
    w = hg.is_wealthy(hg.make_wealthy("W2.1", 2), "W2.1", 2)
    assert w["variant"] == "swap:0,rev:00,perm:123"
    assert w["base_sets"] == [[1, 2], [3, 4], [5]]
    assert "W4.1" in hg.families()
    with pytest.raises(hg.Error):
        hg.make_wealthy("W9", 2)


def test_growth():
    assert hg.growth("builtin:S,k=3", 11) == [1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41]
    assert hg.growth("builtin:lineartight,k=3", 6)[2:] == [2, 3, 4, 5]
    with pytest.raises(ValueError):
        hg.growth("nothing", 3)


def test_verify_subset():
    results = hg.verify("1,10")
    assert [r["id"] for r in results] == [1, 10]
    assert all(r["pass"] for r in results)
