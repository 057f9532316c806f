"""Named constructions, exhaustive enumeration and seeded generation."""

from __future__ import annotations

from collections import Counter

import pytest

import msdkit as mk

KNOWN_COUNTS = {1: 1, 2: 1, 3: 5, 4: 58, 5: 1069}


def test_directed_cycle():
    assert mk.directed_cycle(5).arcs == ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))
    assert mk.directed_cycle(2) == mk.build(2, [(0, 1), (1, 0)])
    with pytest.raises(mk.GraphError, match="at least 2"):
        mk.directed_cycle(1)


def test_enumeration_counts(corpus5):
    assert Counter(d.n for d in corpus5) == KNOWN_COUNTS


def test_enumeration_order_three_frozen():
    got = [g.arcs for g in mk.enumerate_msds(3)]
    assert got == [
        ((0, 1), (1, 2), (2, 0)),
        ((0, 2), (1, 0), (2, 1)),
        ((0, 1), (0, 2), (1, 0), (2, 0)),
        ((0, 1), (1, 0), (1, 2), (2, 1)),
        ((0, 2), (1, 2), (2, 0), (2, 1)),
    ]


def test_enumeration_is_canonical_and_duplicate_free(corpus5):
    by_n: dict[int, list[mk.Digraph]] = {}
    for d in corpus5:
        by_n.setdefault(d.n, []).append(d)
    for graphs in by_n.values():
        keys = [(d.m, d.arcs) for d in graphs]
        assert keys == sorted(keys)
        assert len(set(graphs)) == len(graphs)


def test_enumeration_members_are_msds(corpus4):
    for d in corpus4:
        assert mk.check_msd(d).is_msd
    assert mk.directed_cycle(4) in set(corpus4)


def test_enumeration_rejects_bad_order():
    with pytest.raises(mk.GraphError, match="positive"):
        list(mk.enumerate_msds(0))
    with pytest.raises(mk.GraphError, match="random_msd"):
        list(mk.enumerate_msds(6))


def test_random_msd_is_deterministic_and_minimal():
    for seed in range(20):
        cfg = mk.GeneratorConfig(seed=seed, target_order=9)
        a = mk.random_msd(cfg)
        b = mk.random_msd(cfg)
        assert a == b
        assert a.n == 9
        assert mk.check_msd(a).is_msd


def test_random_msd_small_orders():
    assert mk.random_msd(mk.GeneratorConfig(seed=0, target_order=2)) == mk.directed_cycle(2)
    with pytest.raises(mk.GraphError, match="at least 2"):
        mk.random_msd(mk.GeneratorConfig(seed=0, target_order=1))


def test_random_strong_digraph():
    for seed in range(20):
        cfg = mk.GeneratorConfig(seed=seed, target_order=7)
        a = mk.random_strong_digraph(cfg)
        assert a == mk.random_strong_digraph(cfg)
        assert a.n == 7
        assert mk.is_strongly_connected(a)
    plain = mk.random_strong_digraph(mk.GeneratorConfig(seed=1, target_order=7), extra_arcs=0)
    extra = mk.random_strong_digraph(mk.GeneratorConfig(seed=1, target_order=7), extra_arcs=5)
    assert extra.m >= plain.m
    assert set(plain.arcs) <= set(extra.arcs)


def test_generator_config_is_frozen():
    cfg = mk.GeneratorConfig(seed=0, target_order=5)
    assert cfg.max_attempts == 1000
    with pytest.raises(AttributeError):
        cfg.seed = 1
