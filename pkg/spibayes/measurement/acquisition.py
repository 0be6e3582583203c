"""Simulated single-pixel acquisition of object images."""
import logging
from abc import ABC, abstractmethod
from queue import Empty, Queue
from threading import Thread

import numpy as np

from spibayes.exceptions import DimensionMismatchError
from spibayes.measurement.patterns import pattern_matrix
from spibayes.utils import batch


class AbstractAcquisition(ABC):
    """Abstract base class for single-pixel acquisition back-ends.

    Args:
        schedule (spibayes.measurement.SamplingSchedule): Illuminations to record.
        workers (int, optional): Number of threads used by ``measure_batch``. Defaults to 1.
        chunk_size (int, optional): Images handed to a worker at a time. Defaults to 256.
    """

    def __init__(self, schedule, workers=1, chunk_size=256):
        self._schedule = schedule
        self.workers = workers
        self.chunk_size = chunk_size

    @property
    def schedule(self):
        """``spibayes.measurement.SamplingSchedule``: Illuminations recorded per image."""
        return self._schedule

    @property
    def workers(self):
        """int: Number of measuring threads."""
        return self._workers

    @workers.setter
    def workers(self, value):
        if not isinstance(value, int):
            raise TypeError("Workers must be int. Given type {0}.".format(type(value)))
        elif value < 1:
            raise ValueError("Workers must be positive integer. Given {0}.".format(value))
        self._workers = value

    @property
    def chunk_size(self):
        """int: Number of images measured per work item."""
        return self._chunk_size

    @chunk_size.setter
    def chunk_size(self, value):
        if not isinstance(value, int):
            raise TypeError("Chunk size must be int. Given type {0}.".format(type(value)))
        elif value < 1:
            raise ValueError("Chunk size must be positive integer.")
        self._chunk_size = value

    @abstractmethod
    def _measure_chunk(self, images):
        """Measure a 3-D stack of images.

        Args:
            images (numpy.ndarray): Shape ``(n, height, width)``.

        Returns:
            numpy.ndarray: Shape ``(n, len(schedule))``.
        """
        pass  # pragma: no cover

    def _check_images(self, images, ndim):
        images = np.asarray(images, dtype=np.float64)
        expected = (self.schedule.height, self.schedule.width)
        if images.ndim != ndim or images.shape[-2:] != expected:
            raise DimensionMismatchError(
                "Expected {ndim}-D images ending in shape {expected}. Given {shape}.".format(
                    ndim=ndim, expected=expected, shape=images.shape))
        return images

    def measure(self, image):
        """Record the intensity sequence of one object.

        Args:
            image (numpy.ndarray): Object of shape ``(height, width)``.

        Returns:
            numpy.ndarray: One detector value per scheduled illumination.

        Raises:
            DimensionMismatchError: If the image does not match the schedule dimensions.
        """
        image = self._check_images(image, ndim=2)
        return self._measure_chunk(image[np.newaxis])[0]

    @staticmethod
    def _do_measure(q, images, out, measure_chunk, errors):
        """Measure chunks pulled from the queue into their slice of ``out``.

        Args:
            q (queue.Queue): Queue of slices into ``images``.
            images (numpy.ndarray): Stack being measured.
            out (numpy.ndarray): Preallocated result; each slice is written by one worker.
            measure_chunk (callable): Back-end measuring function.
            errors (list): Exceptions raised by the back-end, re-raised by the caller.
        """
        while True:
            try:
                chunk = q.get_nowait()
            except Empty:
                return
            try:
                out[chunk] = measure_chunk(images[chunk])
                logging.debug("Measured images {start}-{stop}".format(start=chunk.start,
                                                                      stop=chunk.stop))
            except Exception as e:
                logging.error("Failed to measure images {start}-{stop}: {err}".format(
                    start=chunk.start, stop=chunk.stop, err=e))
                errors.append(e)
            finally:
                q.task_done()

    def measure_batch(self, images):
        """Record the intensity sequences of a stack of objects.

        Args:
            images (numpy.ndarray): Objects of shape ``(n, height, width)``.

        Returns:
            numpy.ndarray: Shape ``(n, len(schedule))``, row ``i`` measuring ``images[i]``.

        Raises:
            DimensionMismatchError: If the images do not match the schedule dimensions.
            Exception: The first error raised while measuring a chunk, re-raised once every
                worker has stopped.
        """
        images = self._check_images(images, ndim=3)
        out = np.empty((images.shape[0], len(self.schedule)), dtype=np.float64)
        chunks = list(batch(images.shape[0], self.chunk_size))
        if self.workers == 1 or len(chunks) <= 1:
            for chunk in chunks:
                out[chunk] = self._measure_chunk(images[chunk])
            return out

        measure_queue = Queue(maxsize=len(chunks))
        for chunk in chunks:
            measure_queue.put_nowait(chunk)
        errors = []
        threads = [Thread(target=self._do_measure,
                          args=(measure_queue, images, out, self._measure_chunk, errors))
                   for _ in range(min(self.workers, len(chunks)))]
        for worker in threads:
            worker.start()
        for worker in threads:
            worker.join()
        if errors:
            raise errors[0]
        return out


class FourierAcquisition(AbstractAcquisition):
    """Acquisition through one FFT per object.

    Each image's spectrum is computed with ``numpy.fft.fft2`` and the scheduled real or
    imaginary parts are picked out. This is mathematically identical to projecting the
    patterns and much faster for long schedules.
    """

    def _measure_chunk(self, images):
        rows, cols, imag = self.schedule.index_arrays()
        coefficients = np.fft.fft2(images)[:, rows, cols]
        return np.where(imag, coefficients.imag, coefficients.real)


class PatternAcquisition(AbstractAcquisition):
    """Acquisition by explicit pattern/object inner products.

    Simulates the single-pixel detector literally: every scheduled pattern is rendered
    once and kept as a ``(len(schedule), height * width)`` matrix, so memory grows with the
    schedule length.
    """

    def __init__(self, schedule, workers=1, chunk_size=256):
        super().__init__(schedule, workers=workers, chunk_size=chunk_size)
        self._patterns = None

    @property
    def patterns(self):
        """numpy.ndarray: One flattened pattern per row."""
        if self._patterns is None:
            self._patterns = pattern_matrix(self.schedule)
        return self._patterns

    def _measure_chunk(self, images):
        return images.reshape(images.shape[0], -1) @ self.patterns.T


ACQUISITIONS = {
    "fourier": FourierAcquisition,
    "pattern": PatternAcquisition,
}


def measure_sequence(image, schedule):
    """Record the single-pixel intensity sequence of ``image`` under ``schedule``.

    ``values[t]`` is the sum over all pixels of ``image * pattern_t``.

    Args:
        image (numpy.ndarray): Object of shape ``(height, width)``.
        schedule (spibayes.measurement.SamplingSchedule): Illuminations to record.

    Returns:
        numpy.ndarray: One value per scheduled illumination.

    Raises:
        DimensionMismatchError: If the image does not match the schedule dimensions.
    """
    return FourierAcquisition(schedule).measure(image)


def measure_batch(images, schedule, acquisition="fourier", workers=1, chunk_size=256):
    """Record intensity sequences of a stack of objects.

    Args:
        images (numpy.ndarray): Objects of shape ``(n, height, width)``.
        schedule (spibayes.measurement.SamplingSchedule): Illuminations to record.
        acquisition (str, optional): ``"fourier"`` or ``"pattern"``. Defaults to ``"fourier"``.
        workers (int, optional): Measuring threads. Defaults to 1.
        chunk_size (int, optional): Images per work item. Defaults to 256.

    Returns:
        numpy.ndarray: Shape ``(n, len(schedule))``.
    """
    try:
        acquisition_class = ACQUISITIONS[acquisition]
    except KeyError:
        raise ValueError("Acquisition must be one of {names}. Given {given!r}.".format(
            names=sorted(ACQUISITIONS), given=acquisition))
    return acquisition_class(schedule, workers=workers, chunk_size=chunk_size).measure_batch(
        images)
