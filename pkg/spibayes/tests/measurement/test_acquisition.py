import numpy as np
import pytest
from spibayes.exceptions import DimensionMismatchError
from spibayes.measurement import (FourierAcquisition, Part, PatternAcquisition, build_schedule,
                                  measure_batch, measure_sequence)
from spibayes.tests.utils import naive_dft


def oracle_sequence(image, schedule):
    values = []
    for sample in schedule:
        coefficient = naive_dft(image.tolist(), sample.fu, sample.fv)
        values.append(coefficient.real if sample.part is Part.REAL else coefficient.imag)
    return np.array(values)


class TestMeasureSequence:
    def test_zero_object(self):
        schedule = build_schedule(64, 64, 200)
        np.testing.assert_array_equal(measure_sequence(np.zeros((64, 64)), schedule),
                                      np.zeros(200))

    def test_ones_object_dc(self):
        schedule = build_schedule(64, 64, 1)
        np.testing.assert_allclose(measure_sequence(np.ones((64, 64)), schedule), [4096.0])

    @pytest.mark.parametrize("size", [4, 8, 16])
    def test_matches_double_sum_dft(self, size):
        rng = np.random.default_rng(size)
        schedule = build_schedule(size, size, size * size)
        count = {4: 20, 8: 20, 16: 10}[size]
        for _ in range(count):
            image = rng.random((size, size))
            expected = oracle_sequence(image, schedule)
            got = measure_sequence(image, schedule)
            np.testing.assert_allclose(got, expected, rtol=1e-9, atol=1e-9 * size * size)

    def test_matches_pattern_inner_products(self):
        rng = np.random.default_rng(8)
        image = rng.random((8, 8))
        schedule = build_schedule(8, 8, 64)
        np.testing.assert_allclose(measure_sequence(image, schedule),
                                   PatternAcquisition(schedule).measure(image), atol=1e-10)

    def test_linearity(self):
        rng = np.random.default_rng(21)
        schedule = build_schedule(16, 16, 256)
        for _ in range(5):
            o1, o2 = rng.random((2, 16, 16))
            a, b = rng.normal(size=2)
            combined = measure_sequence(a * o1 + b * o2, schedule)
            separate = a * measure_sequence(o1, schedule) + b * measure_sequence(o2, schedule)
            np.testing.assert_allclose(combined, separate, rtol=1e-9, atol=1e-9)

    def test_deterministic(self):
        image = np.random.default_rng(0).random((16, 16))
        schedule = build_schedule(16, 16, 100)
        np.testing.assert_array_equal(measure_sequence(image, schedule),
                                      measure_sequence(image, schedule))

    def test_prefix_of_longer_schedule(self):
        image = np.random.default_rng(1).random((16, 16))
        short = measure_sequence(image, build_schedule(16, 16, 13))
        long = measure_sequence(image, build_schedule(16, 16, 200))
        np.testing.assert_array_equal(short, long[:13])

    @pytest.mark.parametrize("shape", [(8, 16), (16, 8), (16,), (1, 16, 16)])
    def test_dimension_mismatch(self, shape):
        with pytest.raises(DimensionMismatchError):
            measure_sequence(np.zeros(shape), build_schedule(16, 16, 5))


class TestMeasureBatch:
    @pytest.fixture
    def images(self):
        return np.random.default_rng(4).random((37, 8, 8))

    def test_rows_match_single_measurements(self, images):
        schedule = build_schedule(8, 8, 40)
        batch = measure_batch(images, schedule)
        assert batch.shape == (37, 40)
        for image, row in zip(images, batch):
            np.testing.assert_allclose(row, measure_sequence(image, schedule), atol=1e-12)

    @pytest.mark.parametrize("acquisition", ["fourier", "pattern"])
    def test_workers_do_not_change_result(self, images, acquisition):
        schedule = build_schedule(8, 8, 64)
        single = measure_batch(images, schedule, acquisition=acquisition, chunk_size=5)
        threaded = measure_batch(images, schedule, acquisition=acquisition, workers=4,
                                 chunk_size=5)
        np.testing.assert_array_equal(single, threaded)

    def test_pattern_agrees_with_fourier(self, images):
        schedule = build_schedule(8, 8, 64)
        np.testing.assert_allclose(measure_batch(images, schedule, acquisition="pattern"),
                                   measure_batch(images, schedule), atol=1e-10)

    def test_unknown_acquisition(self, images):
        with pytest.raises(ValueError):
            measure_batch(images, build_schedule(8, 8, 4), acquisition="hadamard")

    def test_two_dimensional_input_rejected(self):
        with pytest.raises(DimensionMismatchError):
            measure_batch(np.zeros((8, 8)), build_schedule(8, 8, 4))

    @pytest.mark.parametrize("workers", [1, 2, 4])
    def test_chunk_error_is_raised(self, workers):
        class FailingAcquisition(FourierAcquisition):
            def _measure_chunk(self, images):
                if images[0, 0, 0] < 0:
                    raise MemoryError("chunk too large")
                return super()._measure_chunk(images)

        images = np.random.default_rng(5).random((20, 8, 8))
        images[10, 0, 0] = -1
        acquisition = FailingAcquisition(build_schedule(8, 8, 3), workers=workers,
                                         chunk_size=5)
        with pytest.raises(MemoryError):
            acquisition.measure_batch(images)

    def test_empty_batch(self):
        out = measure_batch(np.zeros((0, 8, 8)), build_schedule(8, 8, 4))
        assert out.shape == (0, 4)


class TestAcquisitionSettings:
    @pytest.mark.parametrize("acquisition_class", [FourierAcquisition, PatternAcquisition])
    @pytest.mark.parametrize(
        "kwargs,error",
        [
            ({"workers": 0}, ValueError),
            ({"workers": 1.5}, TypeError),
            ({"chunk_size": 0}, ValueError),
            ({"chunk_size": "10"}, TypeError)
        ]
    )
    def test_bad_settings(self, acquisition_class, kwargs, error):
        with pytest.raises(error):
            acquisition_class(build_schedule(8, 8, 4), **kwargs)

    def test_pattern_matrix_is_cached(self):
        acquisition = PatternAcquisition(build_schedule(8, 8, 10))
        assert acquisition.patterns is acquisition.patterns
        assert acquisition.patterns.shape == (10, 64)
