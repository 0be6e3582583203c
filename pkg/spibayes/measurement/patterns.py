import numpy as np

from spibayes.measurement.schedule import (FrequencySample, Part, check_dimensions,
                                           validate_sample)


def _phase(width, height, fu, fv):
    """Phase ``2*pi*(fu*x/width + fv*y/height)`` on a (height, width) grid."""
    x = np.arange(width, dtype=np.float64)
    y = np.arange(height, dtype=np.float64)[:, np.newaxis]
    return 2 * np.pi * (fu * x / width + fv * y / height)


def generate_pattern(width, height, sample):
    """Illumination pattern for one scheduled sample.

    The real-part pattern is ``cos(phase)`` and the imaginary-part pattern is
    ``-sin(phase)``, so that summing ``object * pattern`` over all pixels gives the real or
    imaginary part of the forward DFT with kernel ``exp(-i*phase)``. Values are signed.

    Args:
        width (int): Pattern width in pixels.
        height (int): Pattern height in pixels.
        sample (FrequencySample): Sample to render.

    Returns:
        numpy.ndarray: Float array of shape ``(height, width)``; ``pattern[y, x]``.

    Raises:
        ScheduleConsistencyError: If ``sample`` is not valid for the grid.
    """
    check_dimensions(width, height)
    sample = FrequencySample(*sample)
    validate_sample(width, height, sample)
    phase = _phase(width, height, sample.fu, sample.fv)
    if sample.part is Part.REAL:
        return np.cos(phase)
    return -np.sin(phase)


def pattern_matrix(schedule):
    """Stack every pattern of ``schedule`` as one row of a matrix.

    Returns:
        numpy.ndarray: Shape ``(len(schedule), height * width)``.
    """
    return np.stack([generate_pattern(schedule.width, schedule.height, s).ravel()
                     for s in schedule])


def dft_coefficient(image, fu, fv):
    """Evaluate one discrete Fourier coefficient by direct summation.

    Computes ``sum over x, y of image[y, x] * exp(-2j*pi*(fu*x/width + fv*y/height))``
    without any FFT, so it can serve as an independent check of acquisition.
    Frequencies are taken modulo the image dimensions.

    Args:
        image (numpy.ndarray): Non-empty 2-D array indexed ``[y, x]``.
        fu (int): Horizontal frequency.
        fv (int): Vertical frequency.

    Returns:
        tuple: ``(real part, imaginary part)`` as floats.
    """
    image = np.asarray(image, dtype=np.float64)
    if image.ndim != 2 or image.size == 0:
        raise ValueError("Image must be a non-empty 2-D array. Given shape {shape}.".format(
            shape=image.shape))
    height, width = image.shape
    phase = _phase(width, height, fu % width, fv % height)
    return (float(np.sum(image * np.cos(phase))),
            float(-np.sum(image * np.sin(phase))))
