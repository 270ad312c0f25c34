import hypothesis.strategies as hs
import numpy as np
import pytest
from hypothesis import given, settings

from ddw import (
    ConfigError,
    DimRange,
    InvalidInputError,
    average_reference,
    channel_bounds,
    init_population,
    modal_dimension,
    resize_series,
)
from tests.conftest import make_dataset


class TestModalDimension:
    def test_plain_mode(self):
        ds = make_dataset({"c": [[0] * 59, [0] * 60, [0] * 60, [0] * 61]})
        assert modal_dimension(ds) == (60, 2)

    def test_tie_takes_smallest(self):
        ds = make_dataset({"c": [[0] * 59, [0] * 59, [0] * 60, [0] * 60]})
        assert modal_dimension(ds) == (59, 2)

    def test_singleton(self):
        ds = make_dataset({"c": [[0] * 42]})
        assert modal_dimension(ds) == (42, 1)


class TestAverageReference:
    def test_direct_mean(self):
        ds = make_dataset({"c": [[0, 2], [2, 4]]})
        assert list(average_reference(ds, "c")) == [1.0, 3.0]

    def test_single_modal_cycle_verbatim(self):
        ds = make_dataset({"c": [[1, 2, 3]]})
        assert list(average_reference(ds, "c")) == [1.0, 2.0, 3.0]

    def test_modal_filter_excludes_other_lengths(self):
        ds = make_dataset({"c": [[0, 0], [0, 0], [5, 5, 5]]})
        assert list(average_reference(ds, "c")) == [0.0, 0.0]

    def test_unknown_channel(self):
        ds = make_dataset({"c": [[0, 0]]})
        with pytest.raises(InvalidInputError):
            average_reference(ds, "nope")

    def test_within_modal_envelope(self):
        rng = np.random.default_rng(0)
        ds = make_dataset({"c": [list(rng.normal(size=6)) for _ in range(5)]})
        avg = average_reference(ds, "c")
        b = channel_bounds(ds)["c"]
        assert np.all(avg >= b.env_min) and np.all(avg <= b.env_max)


class TestChannelBounds:
    def test_global_spans_all_cycles(self):
        ds = make_dataset({"c": [[0, 1], [0, 1], [-5, 9, 2]]})
        b = channel_bounds(ds)["c"]
        assert b.global_min == -5.0
        assert b.global_max == 9.0
        # envelope only over the two modal (length 2) cycles
        assert list(b.env_min) == [0.0, 1.0]
        assert list(b.env_max) == [0.0, 1.0]


class TestResizeSeries:
    def test_shrink_random_is_single_deletion(self):
        rng = np.random.default_rng(0)
        outcomes = set()
        for seed in range(30):
            out = resize_series([0, 2, 4], 2, mode="random", rng=np.random.default_rng(seed))
            outcomes.add(tuple(out))
        assert outcomes <= {(2.0, 4.0), (0.0, 4.0), (0.0, 2.0)}
        assert len(outcomes) > 1

    def test_grow_random_inserts_midpoint(self):
        out = resize_series([0, 2], 3, mode="random", rng=np.random.default_rng(0))
        assert list(out) == [0.0, 1.0, 2.0]

    def test_worst_deletes_max_quality(self):
        out = resize_series([0, 2, 4], 2, mode="worst", quality=[0, 9, 0])
        assert list(out) == [0.0, 4.0]

    def test_worst_grow_near_max_quality(self):
        out = resize_series([0.0, 4.0, 8.0], 4, mode="worst", quality=[0, 9, 0])
        assert list(out) == [0.0, 4.0, 6.0, 8.0]

    def test_worst_grow_at_right_edge(self):
        out = resize_series([0.0, 4.0], 3, mode="worst", quality=[0, 9])
        assert list(out) == [0.0, 2.0, 4.0]

    def test_length_exact_and_step_count(self):
        rng = np.random.default_rng(4)
        for _ in range(50):
            n = int(rng.integers(1, 12))
            target = int(rng.integers(1, 12))
            s = rng.normal(size=n)
            out = resize_series(s, target, mode="random", rng=rng)
            assert out.shape[0] == target

    @given(
        hs.lists(hs.floats(min_value=-100, max_value=100), min_size=1, max_size=10),
        hs.integers(min_value=1, max_value=10),
        hs.integers(min_value=0, max_value=2**31 - 1),
    )
    @settings(max_examples=150, deadline=None)
    def test_grown_values_stay_in_hull(self, vals, target, seed):
        out = resize_series(vals, target, mode="random", rng=np.random.default_rng(seed))
        assert out.shape[0] == target
        assert np.all(out >= min(vals)) and np.all(out <= max(vals))

    def test_out_of_range_target(self):
        with pytest.raises(InvalidInputError):
            resize_series([1, 2, 3], 5, mode="random",
                          rng=np.random.default_rng(0), dim_range=DimRange(2, 4))

    def test_worst_needs_matching_quality(self):
        with pytest.raises(InvalidInputError):
            resize_series([1, 2, 3], 2, mode="worst", quality=[1, 2])

    def test_unknown_mode(self):
        with pytest.raises(InvalidInputError):
            resize_series([1, 2], 1, mode="sideways", rng=np.random.default_rng(0))


class TestInitPopulation:
    def test_zero_width_envelope_degenerates(self):
        # identical modal cycles and dim_range collapsed to one length
        ds = make_dataset({"c": [[1.0, 2.0, 3.0], [1.0, 2.0, 3.0]]})
        pop = init_population(ds, 4, np.random.default_rng(0))
        for ind in pop:
            assert list(ind.channels["c"]) == [1.0, 2.0, 3.0]

    def test_lengths_within_range(self, tiny_dataset):
        pop = init_population(tiny_dataset, 12, np.random.default_rng(1))
        dr = tiny_dataset.dim_range
        for ind in pop:
            for v in ind.channels.values():
                assert dr.min <= v.shape[0] <= dr.max

    def test_values_within_global_bounds(self, tiny_dataset):
        pop = init_population(tiny_dataset, 12, np.random.default_rng(2))
        bounds = channel_bounds(tiny_dataset)
        for ind in pop:
            for ch, v in ind.channels.items():
                assert np.all(v >= bounds[ch].global_min - 1e-12)
                assert np.all(v <= bounds[ch].global_max + 1e-12)

    def test_fixed_seed_reproducible(self, tiny_dataset):
        p1 = init_population(tiny_dataset, 8, np.random.default_rng(42))
        p2 = init_population(tiny_dataset, 8, np.random.default_rng(42))
        for a, b in zip(p1, p2):
            for ch in a.channels:
                assert np.array_equal(a.channels[ch], b.channels[ch])

    def test_population_floor(self, tiny_dataset):
        with pytest.raises(ConfigError):
            init_population(tiny_dataset, 3, np.random.default_rng(0))


class TestDatasetValidation:
    def test_mismatched_channel_lengths_rejected(self):
        from ddw import Cycle, ReferenceDataset

        with pytest.raises(InvalidInputError):
            ReferenceDataset.from_cycles(
                [Cycle(channels={"a": np.zeros(3), "b": np.zeros(4)})]
            )

    def test_empty_rejected(self):
        from ddw import ReferenceDataset

        with pytest.raises(InvalidInputError):
            ReferenceDataset.from_cycles([])

    def test_dim_range_observed(self, tiny_dataset):
        assert tiny_dataset.dim_range == DimRange(4, 5)
