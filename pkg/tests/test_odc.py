import numpy as np
import pytest

from ddw import (
    Individual,
    InvalidInputError,
    InvalidStateError,
    odc_collect,
    odc_merge,
    odc_probe_blackbox,
    template_fitness,
)
from ddw.fitness import FitnessReport
from tests.conftest import make_dataset


def evaluated(channels, dataset):
    ind = Individual(channels={ch: np.asarray(v, float) for ch, v in channels.items()})
    ind.report = template_fitness(ind, dataset)
    return ind


def bb_individual(values, objective):
    ind = Individual(channels={"x": np.asarray(values, float)})
    ind.report = FitnessReport(fitness=float(objective(ind.channels["x"])), per_dim_quality={})
    return ind


class TestOdcMerge:
    def test_merge_with_self_is_identity(self):
        base = Individual(channels={"c": np.array([1.0, 2.0])})
        q = {"c": np.array([3.0, 4.0])}
        out = odc_merge(base, base, q, q)
        assert list(out.channels["c"]) == [1.0, 2.0]

    def test_equal_length_per_dim_winners(self):
        base = Individual(channels={"c": np.array([0.0, 5.0])})
        other = Individual(channels={"c": np.array([0.0, 5.0])})
        out = odc_merge(base, other, {"c": np.array([0.0, 9.0])}, {"c": np.array([9.0, 0.0])})
        assert list(out.channels["c"]) == [0.0, 5.0]

    def test_dtw_merge_takes_all_other(self):
        base = Individual(channels={"c": np.array([1.0, 1.0])})
        other = Individual(channels={"c": np.array([7.0, 7.0, 7.0])})
        out = odc_merge(
            base, other, {"c": np.array([4.0, 4.0])}, {"c": np.array([0.0, 0.0, 0.0])}
        )
        assert list(out.channels["c"]) == [7.0, 7.0]

    def test_tie_keeps_base(self):
        base = Individual(channels={"c": np.array([1.0])})
        other = Individual(channels={"c": np.array([9.0])})
        out = odc_merge(base, other, {"c": np.array([2.0])}, {"c": np.array([2.0])})
        assert list(out.channels["c"]) == [1.0]

    def test_output_keeps_base_lengths(self):
        rng = np.random.default_rng(0)
        base = Individual(channels={"c": rng.normal(size=4)})
        other = Individual(channels={"c": rng.normal(size=6)})
        out = odc_merge(
            base, other, {"c": rng.random(4)}, {"c": rng.random(6)}
        )
        assert out.channels["c"].shape[0] == 4

    def test_missing_quality_raises(self):
        base = Individual(channels={"c": np.zeros(2)})
        with pytest.raises(InvalidStateError):
            odc_merge(base, base, None, {"c": np.zeros(2)})

    def test_trace_records_winning_choices(self):
        rng = np.random.default_rng(1)
        trace = []
        base = Individual(channels={"c": rng.normal(size=5)})
        other = Individual(channels={"c": rng.normal(size=7)})
        odc_merge(
            base,
            other,
            {"c": rng.random(5)},
            {"c": rng.random(7)},
            trace=trace,
        )
        assert len(trace) == 5
        for _, _, _, chosen, rival in trace:
            assert chosen <= rival


class TestOdcCollect:
    def test_single_member(self, tiny_dataset):
        x = evaluated({"a": [0.0, 1.0, 2.0, 1.0], "b": [5.0, 4.0, 3.0, 4.0]}, tiny_dataset)
        d = odc_collect([x], tiny_dataset)
        assert d.fitness == x.fitness
        for ch in x.channels:
            assert np.array_equal(d.channels[ch], x.channels[ch])

    def test_two_identical_members(self, tiny_dataset):
        x1 = evaluated({"a": [0.0, 1.0, 2.0, 1.0], "b": [5.0, 4.0, 3.0, 4.0]}, tiny_dataset)
        x2 = evaluated({"a": [0.0, 1.0, 2.0, 1.0], "b": [5.0, 4.0, 3.0, 4.0]}, tiny_dataset)
        d = odc_collect([x1, x2], tiny_dataset)
        for ch in x1.channels:
            assert np.array_equal(d.channels[ch], x1.channels[ch])

    def test_better_dimension_is_collected(self):
        # one channel, cycles pin the optimum at (0, 0); base is wrong at
        # dim 1, partner is right there
        ds = make_dataset({"c": [[0.0, 0.0], [0.0, 0.0]]})
        base = evaluated({"c": [0.0, 3.0]}, ds)
        partner = evaluated({"c": [2.0, 0.0]}, ds)
        d = odc_collect([base, partner], ds)
        assert list(d.channels["c"]) == [0.0, 0.0]
        assert d.fitness == 0.0

    def test_lengths_follow_best(self, tiny_dataset):
        best = evaluated(
            {"a": [0.0, 1.0, 2.0, 1.0], "b": [5.0, 4.0, 3.0, 4.0]}, tiny_dataset
        )
        other = evaluated(
            {"a": [0.0, 1.0, 2.0, 2.0, 1.0], "b": [5.0, 4.0, 3.0, 3.0, 4.0]}, tiny_dataset
        )
        d = odc_collect([best, other], tiny_dataset)
        assert d.channel_lengths() == best.channel_lengths()

    def test_result_is_evaluated(self, tiny_dataset):
        x = evaluated({"a": [0.0, 1.0, 2.0, 1.0], "b": [5.0, 4.0, 3.0, 4.0]}, tiny_dataset)
        d = odc_collect([x], tiny_dataset)
        assert d.report is not None and d.report.has_quality

    def test_empty_part_a(self, tiny_dataset):
        with pytest.raises(InvalidInputError):
            odc_collect([], tiny_dataset)


class TestOdcProbe:
    def test_single_member_unchanged(self):
        sphere = lambda v: float(np.sum(v * v))
        x = bb_individual([1.0, 1.0], sphere)
        out = odc_probe_blackbox([x], sphere)
        assert list(out.channels["x"]) == [1.0, 1.0]
        assert out.fitness == 2.0

    def test_probe_improves_first_coordinate(self):
        sphere = lambda v: float(np.sum(v * v))
        best = bb_individual([1.0, 1.0], sphere)
        other = bb_individual([0.0, 3.0], sphere)
        out = odc_probe_blackbox([best, other], sphere)
        assert list(out.channels["x"]) == [0.0, 1.0]
        assert out.fitness == 1.0

    def test_constant_objective_unchanged(self):
        const = lambda v: 7.0
        best = bb_individual([1.0, 2.0], const)
        other = bb_individual([5.0, 6.0], const)
        out = odc_probe_blackbox([best, other], const)
        assert list(out.channels["x"]) == [1.0, 2.0]

    def test_never_worse_than_best(self):
        rng = np.random.default_rng(0)
        rosen = lambda v: float(
            np.sum(100.0 * (v[1:] - v[:-1] ** 2) ** 2 + (v[:-1] - 1) ** 2)
        )
        for _ in range(20):
            members = [bb_individual(rng.normal(size=4), rosen) for _ in range(4)]
            members.sort(key=lambda m: m.fitness)
            out = odc_probe_blackbox(members, rosen)
            assert out.fitness <= members[0].fitness


class TestMergeInvariantRandomized:
    def test_chosen_quality_never_exceeds_rival(self, tiny_dataset):
        rng = np.random.default_rng(99)
        names = tiny_dataset.channel_names
        for _ in range(100):
            la, lb = int(rng.integers(3, 7)), int(rng.integers(3, 7))
            base = Individual(channels={ch: rng.normal(size=la) for ch in names})
            other = Individual(channels={ch: rng.normal(size=lb) for ch in names})
            bq = {ch: rng.random(la) for ch in names}
            oq = {ch: rng.random(lb) for ch in names}
            trace = []
            odc_merge(base, other, bq, oq, trace=trace)
            assert trace, "merge recorded no choices"
            for _, _, _, chosen, rival in trace:
                assert chosen <= rival
