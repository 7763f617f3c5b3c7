"""Smoke tests for the python bindings."""

import pytest

import hajos_ga as hg


def test_digraph_basics():
    k3 = hg.complete_symmetric(3)
    assert k3.order == 3
    assert k3.arc_count == 6
    pc = hg.pair_counts(k3)
    assert (pc.asymmetric_arcs, pc.digons, pc.non_adjacent_pairs) == (0, 3, 0)

    c5 = hg.symmetric_cycle(5)
    assert hg.pair_counts(c5).digons == 5
    assert hg.parse_digraph(hg.serialize_digraph(c5)) == c5
    assert "dir=both" in hg.to_dot(c5)


def test_operations():
    joined = hg.hajos_join(
        hg.directed_cycle(3), hg.ArcRef(2, 0), hg.directed_cycle(3), hg.ArcRef(0, 1)
    )
    assert joined.order == 5
    assert joined.arc_count == 5
    assert hg.is_isomorphic(joined, hg.directed_cycle(5))

    with pytest.raises(ValueError):
        hg.identify(hg.symmetric_cycle(5), 0, 1)


def test_fitness_and_oracle():
    fb = hg.fitness(hg.complete_symmetric(3))
    assert fb.total == 17
    assert hg.fitness(hg.symmetric_cycle(5)).is_zero()
    assert hg.dichromatic_number(hg.symmetric_cycle(5)) == 3
    assert hg.dichromatic_number(hg.directed_cycle(5)) == 2
    assert hg.is_r_critical(hg.symmetric_cycle(5), 3)


def test_paper_script_replay():
    script = hg.paper_script()
    ops = hg.op_count(script)
    assert (ops.joins, ops.identifications, ops.total) == (4, 12, 16)
    replayed = hg.replay_script(script)
    assert hg.fitness(replayed).is_zero()
    assert hg.is_isomorphic(replayed, hg.symmetric_cycle(5))
    assert hg.parse_script(hg.serialize_script(script)) == script


def test_ga_run_is_deterministic():
    cfg = hg.GaConfig()
    cfg.pop_size = 10
    cfg.seed = 7
    cfg.max_generations = 30
    cfg.stats_interval = 10
    a = hg.run_ga(cfg)
    b = hg.run_ga(cfg)
    assert a.generations_used == b.generations_used
    rows_a = [hg.stats_csv_row(r) for r in a.stats]
    rows_b = [hg.stats_csv_row(r) for r in b.stats]
    assert rows_a == rows_b
    assert a.stats[0].best_fitness == 17.0
    assert a.solved == b.solved
