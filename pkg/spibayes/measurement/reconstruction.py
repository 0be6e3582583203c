import logging

import numpy as np

from spibayes.exceptions import DimensionMismatchError


def assemble_spectrum(measurements, schedule):
    """Place measured real and imaginary parts into a conjugate-symmetric spectrum.

    Unmeasured parts stay zero. Every measured coefficient is mirrored as its complex
    conjugate to ``(-fu mod width, -fv mod height)``; self-conjugate bins keep a zero
    imaginary part.

    Args:
        measurements (array_like): Intensity sequence, one value per schedule entry.
        schedule (spibayes.measurement.SamplingSchedule): Schedule that produced it.

    Returns:
        numpy.ndarray: Complex array of shape ``(height, width)`` indexed ``[fv, fu]``.

    Raises:
        DimensionMismatchError: If the lengths disagree.
    """
    measurements = np.asarray(measurements, dtype=np.float64)
    if measurements.shape != (len(schedule),):
        raise DimensionMismatchError(
            "Expected {length} measurements for the schedule. Given shape {shape}.".format(
                length=len(schedule), shape=measurements.shape))
    height, width = schedule.height, schedule.width
    rows, cols, imag = schedule.index_arrays()

    real_part = np.zeros((height, width))
    imag_part = np.zeros((height, width))
    real_part[rows[~imag], cols[~imag]] = measurements[~imag]
    imag_part[rows[imag], cols[imag]] = measurements[imag]
    spectrum = real_part + 1j * imag_part

    mirror = spectrum.copy()
    mirror[(-rows) % height, (-cols) % width] = np.conj(spectrum[rows, cols])
    # self-conjugate bins were only ever given a real part, so the mirror leaves them real
    return mirror


def reconstruct(measurements, schedule):
    """Reconstruct an object image from a (partial) intensity sequence.

    Applies the inverse DFT with ``1 / (width * height)`` normalisation to the spectrum
    from :func:`assemble_spectrum` and returns its real part.

    Args:
        measurements (array_like): Intensity sequence, one value per schedule entry.
        schedule (spibayes.measurement.SamplingSchedule): Schedule that produced it.

    Returns:
        numpy.ndarray: Float image of shape ``(height, width)``.
    """
    image = np.fft.ifft2(assemble_spectrum(measurements, schedule))
    logging.debug("Reconstruction imaginary residue {residue:.3e}".format(
        residue=float(np.max(np.abs(image.imag)))))
    return image.real


def reconstruction_correlation(original, reconstruction):
    """Pearson correlation between an object and its reconstruction.

    Returns:
        float: Correlation in ``[-1, 1]``; 0.0 when either image is constant.
    """
    a = np.asarray(original, dtype=np.float64).ravel()
    b = np.asarray(reconstruction, dtype=np.float64).ravel()
    if a.shape != b.shape:
        raise DimensionMismatchError("Images differ in size: {a} and {b}.".format(
            a=a.size, b=b.size))
    a = a - a.mean()
    b = b - b.mean()
    norm = np.sqrt(np.dot(a, a) * np.dot(b, b))
    if norm == 0:
        return 0.0
    return float(np.dot(a, b) / norm)
