"""Layer extraction: the three methods must produce one partition."""

import random

import pytest

from paretokd import CostCounter, deb_layers, peel_layers, points_from_rows

import oracles


def test_known_sample_partition():
    pts = points_from_rows(oracles.SAMPLE_2D)
    expected = ((1, 3, 6, 7), (0, 4), (5,), (2,))
    assert peel_layers(pts).layers == expected
    assert peel_layers(pts, engine="naive").layers == expected
    assert deb_layers(pts).layers == expected


def test_chain_gives_singletons():
    pts = points_from_rows([(1, 1), (2, 2), (3, 3)])
    for part in (peel_layers(pts), peel_layers(pts, engine="naive"), deb_layers(pts)):
        assert part.layers == ((2,), (1,), (0,))
        assert part.depth == 3


def test_antichain_gives_single_layer():
    pts = points_from_rows([(i, 20 - i) for i in range(20)])
    for part in (peel_layers(pts), peel_layers(pts, engine="naive"), deb_layers(pts)):
        assert part.layers == (tuple(range(20)),)


def test_duplicates_share_a_layer():
    pts = points_from_rows([(2, 2), (1, 1), (2, 2)])
    for part in (peel_layers(pts), peel_layers(pts, engine="naive"), deb_layers(pts)):
        assert part.layers == ((0, 2), (1,))


def test_methods_agree_with_oracle():
    rng = random.Random(1717)
    for trial in range(25):
        n = rng.randint(1, 120)
        d = rng.randint(2, 5)
        if trial % 2:
            rows = [[rng.random() for _ in range(d)] for _ in range(n)]
        else:
            rows = [[rng.randint(0, 3) for _ in range(d)] for _ in range(n)]
        pts = points_from_rows(rows)
        want = oracles.layer_partition([tuple(r) for r in rows])
        assert peel_layers(pts).layers == want
        assert peel_layers(pts, engine="naive").layers == want
        assert deb_layers(pts).layers == want


def test_layers_partition_every_index_once():
    rng = random.Random(99)
    rows = [[rng.randint(0, 4) for _ in range(3)] for _ in range(60)]
    part = peel_layers(points_from_rows(rows))
    flat = [i for layer in part.layers for i in layer]
    assert sorted(flat) == list(range(60))


def test_layer_of_lookup():
    part = peel_layers(points_from_rows(oracles.SAMPLE_2D))
    assert part.layer_of(1) == 1
    assert part.layer_of(5) == 3
    assert part.layer_of(2) == 4
    with pytest.raises(KeyError):
        part.layer_of(99)


def test_unknown_engine_rejected():
    pts = points_from_rows([(1, 2)])
    with pytest.raises(ValueError, match="unknown engine"):
        peel_layers(pts, engine="sort")


def test_counters_accumulate_across_rounds():
    pts = points_from_rows(oracles.SAMPLE_2D)
    c1, c2 = CostCounter(), CostCounter()
    peel_layers(pts, counter=c1)
    deb_layers(pts, counter=c2)
    assert c1.scalar_comparisons > 0 and c1.dominated_calls > 0
    assert c2.scalar_comparisons > 0 and c2.dominated_calls == 0  # no tree
