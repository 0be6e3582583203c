import numpy as np
import pytest
from spibayes.exceptions import DimensionMismatchError
from spibayes.measurement import (assemble_spectrum, build_schedule, measure_sequence,
                                  reconstruct, reconstruction_correlation)


class TestReconstruct:
    def test_zero_measurements(self):
        schedule = build_schedule(16, 16, 13)
        np.testing.assert_array_equal(reconstruct(np.zeros(13), schedule), np.zeros((16, 16)))

    def test_full_sampling_round_trip(self):
        rng = np.random.default_rng(2)
        schedule = build_schedule(16, 16, 256)
        for _ in range(20):
            image = rng.random((16, 16))
            measurements = measure_sequence(image, schedule)
            assert np.max(np.abs(reconstruct(measurements, schedule) - image)) < 1e-9
            residue = np.fft.ifft2(assemble_spectrum(measurements, schedule)).imag
            assert np.max(np.abs(residue)) < 1e-9

    def test_rectangular_round_trip(self):
        image = np.random.default_rng(9).random((6, 10))
        schedule = build_schedule(10, 6, 60)
        np.testing.assert_allclose(reconstruct(measure_sequence(image, schedule), schedule),
                                   image, atol=1e-9)

    def test_full_spectrum_matches_fft(self):
        image = np.random.default_rng(6).random((8, 8))
        schedule = build_schedule(8, 8, 64)
        np.testing.assert_allclose(assemble_spectrum(measure_sequence(image, schedule),
                                                     schedule),
                                   np.fft.fft2(image), atol=1e-10)

    def test_partial_spectrum_is_conjugate_symmetric(self):
        image = np.random.default_rng(7).random((16, 16))
        schedule = build_schedule(16, 16, 13)
        spectrum = assemble_spectrum(measure_sequence(image, schedule), schedule)
        mirrored = np.conj(np.roll(spectrum[::-1, ::-1], 1, axis=(0, 1)))
        np.testing.assert_allclose(spectrum, mirrored)
        assert np.count_nonzero(spectrum) == 1 + 2 * 6

    def test_dc_only_gives_mean(self):
        image = np.random.default_rng(3).random((16, 16))
        schedule = build_schedule(16, 16, 1)
        recon = reconstruct(measure_sequence(image, schedule), schedule)
        np.testing.assert_allclose(recon, np.full((16, 16), image.mean()))

    @pytest.mark.parametrize("length", [12, 14])
    def test_length_mismatch(self, length):
        with pytest.raises(DimensionMismatchError):
            reconstruct(np.zeros(length), build_schedule(16, 16, 13))

    def test_more_illuminations_reconstruct_better(self):
        image = np.zeros((32, 32))
        image[8:24, 14:18] = 1
        correlations = []
        for count in (13, 200, 1024):
            schedule = build_schedule(32, 32, count)
            recon = reconstruct(measure_sequence(image, schedule), schedule)
            correlations.append(reconstruction_correlation(image, recon))
        assert correlations[0] < correlations[1] < correlations[2]
        assert correlations[2] == pytest.approx(1.0)


class TestCorrelation:
    def test_identical(self):
        image = np.random.default_rng(0).random((8, 8))
        assert reconstruction_correlation(image, image) == pytest.approx(1.0)

    def test_negated(self):
        image = np.random.default_rng(0).random((8, 8))
        assert reconstruction_correlation(image, -image) == pytest.approx(-1.0)

    def test_constant_image(self):
        assert reconstruction_correlation(np.ones((4, 4)), np.eye(4)) == 0.0

    def test_size_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            reconstruction_correlation(np.ones((4, 4)), np.ones((4, 5)))
