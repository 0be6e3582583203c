import functools
from collections import namedtuple
from enum import Enum

import numpy as np

from spibayes.exceptions import (ScheduleConsistencyError, ScheduleRangeError,
                                 UnsupportedDimensionError)
from spibayes.utils import sampling_ratio


class Part(Enum):
    """Which half of a complex Fourier coefficient an illumination records.

    ``REAL`` uses the cosine pattern and ``IMAG`` the negated sine pattern.
    """

    REAL = 're'
    IMAG = 'im'


FrequencySample = namedtuple("FrequencySample", ["fu", "fv", "part"])
FrequencySample.__doc__ = """One scheduled illumination.

Attributes:
    fu (int): Signed cycles across the image width, in ``[-width/2, width/2)``.
    fv (int): Signed cycles across the image height, in ``[-height/2, height/2)``.
    part (Part): Real or imaginary part of the coefficient at ``(fu, fv)``.
"""


def check_dimensions(width, height):
    """Ensure image dimensions can be scheduled.

    Args:
        width (int): Image width in pixels.
        height (int): Image height in pixels.

    Raises:
        TypeError: If either dimension is not an int.
        UnsupportedDimensionError: If either dimension is not positive and even.
    """
    for name, value in (("width", width), ("height", height)):
        if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
            raise TypeError("{name} must be int. Given type {type}.".format(
                name=name, type=type(value)))
        if value < 2 or value % 2:
            raise UnsupportedDimensionError(
                "{name} must be a positive even number of pixels. Given {value}.".format(
                    name=name, value=value))


def is_self_conjugate(width, height, fu, fv):
    """Whether ``(fu, fv)`` is its own conjugate mirror on a ``width`` x ``height`` grid.

    DC and the half-band bins are the only such frequencies; their imaginary part
    is identically zero for real images.
    """
    return (-fu) % width == fu % width and (-fv) % height == fv % height


def is_canonical(width, height, fu, fv):
    """Whether ``(fu, fv)`` is the representative kept from its conjugate pair.

    Bins with ``fv > 0`` are kept. The rows ``fv == 0`` and ``fv == -height/2`` map onto
    themselves under conjugation, so inside them ``fu >= 0`` or ``fu == -width/2`` is kept.
    """
    if fv == 0 or fv == -(height // 2):
        return fu >= 0 or fu == -(width // 2)
    return fv > 0


def validate_sample(width, height, sample):
    """Check that ``sample`` is a schedulable illumination for the grid.

    Args:
        width (int): Image width in pixels.
        height (int): Image height in pixels.
        sample (FrequencySample): Sample to check.

    Raises:
        ScheduleConsistencyError: If the frequency is out of range, is not the canonical
            member of its conjugate pair, or asks for the imaginary part of a
            self-conjugate frequency.
    """
    fu, fv, part = sample
    if not isinstance(part, Part):
        raise ScheduleConsistencyError("Part must be a Part enum. Given {part!r}.".format(
            part=part))
    if not (-(width // 2) <= fu < width // 2 and -(height // 2) <= fv < height // 2):
        raise ScheduleConsistencyError(
            "Frequency ({fu}, {fv}) is outside a {w}x{h} grid.".format(
                fu=fu, fv=fv, w=width, h=height))
    if not is_canonical(width, height, fu, fv):
        raise ScheduleConsistencyError(
            "Frequency ({fu}, {fv}) is the conjugate mirror of a scheduled frequency.".format(
                fu=fu, fv=fv))
    if part is Part.IMAG and is_self_conjugate(width, height, fu, fv):
        raise ScheduleConsistencyError(
            "Frequency ({fu}, {fv}) is self-conjugate and has no imaginary part.".format(
                fu=fu, fv=fv))


@functools.lru_cache()
def _full_schedule(width, height):
    """All ``width * height`` samples of a grid in low-to-high frequency order.

    Uses ``functools.lru_cache`` since every shorter schedule is a prefix of this one.
    """
    fu, fv = np.meshgrid(np.arange(-(width // 2), width // 2),
                         np.arange(-(height // 2), height // 2))
    fu, fv = fu.ravel(), fv.ravel()
    axis_row = (fv == 0) | (fv == -(height // 2))
    keep = np.where(axis_row, (fu >= 0) | (fu == -(width // 2)), fv > 0)
    fu, fv = fu[keep], fv[keep]
    # lexsort keys run from least to most significant
    order = np.lexsort((fu, fv, fu ** 2 + fv ** 2))

    samples = []
    for u, v in zip(fu[order].tolist(), fv[order].tolist()):
        samples.append(FrequencySample(u, v, Part.REAL))
        if not is_self_conjugate(width, height, u, v):
            samples.append(FrequencySample(u, v, Part.IMAG))
    return tuple(samples)


class SamplingSchedule:
    """Ordered illumination schedule for a ``width`` x ``height`` object.

    Args:
        width (int): Image width in pixels. Must be even.
        height (int): Image height in pixels. Must be even.
        samples (iterable of FrequencySample): Illuminations in acquisition order.
        validate (bool, optional): Check every sample and reject duplicates.
            Defaults to True.

    Schedules are immutable. Use :func:`build_schedule` to get the standard
    low-to-high frequency ordering.
    """

    def __init__(self, width, height, samples, validate=True):
        check_dimensions(width, height)
        samples = tuple(FrequencySample(*s) for s in samples)
        if validate:
            for sample in samples:
                validate_sample(width, height, sample)
            if len(set(samples)) != len(samples):
                raise ScheduleConsistencyError("Schedule contains duplicate samples.")
        self._width = int(width)
        self._height = int(height)
        self._samples = samples
        self._arrays = None

    @property
    def width(self):
        """int: Image width the schedule applies to."""
        return self._width

    @property
    def height(self):
        """int: Image height the schedule applies to."""
        return self._height

    @property
    def samples(self):
        """tuple of FrequencySample: Illuminations in acquisition order."""
        return self._samples

    @property
    def sampling_ratio(self):
        """float: Schedule length over the pixel count."""
        return sampling_ratio(len(self), self.width, self.height)

    def index_arrays(self):
        """Array view of the schedule for vectorised indexing.

        Returns:
            tuple: ``(rows, cols, imag)`` where ``rows = fv mod height``,
                ``cols = fu mod width`` and ``imag`` is a boolean mask of
                imaginary-part samples.
        """
        if self._arrays is None:
            fu = np.array([s.fu for s in self._samples], dtype=np.intp)
            fv = np.array([s.fv for s in self._samples], dtype=np.intp)
            imag = np.array([s.part is Part.IMAG for s in self._samples], dtype=bool)
            self._arrays = (fv % self.height, fu % self.width, imag)
        return self._arrays

    def prefix(self, n):
        """First ``n`` samples as a new schedule.

        Raises:
            ScheduleRangeError: If ``n`` is not in ``[1, len(self)]``.
        """
        if not 1 <= n <= len(self):
            raise ScheduleRangeError("Prefix length must be in [1, {length}]. Given {n}.".format(
                length=len(self), n=n))
        return SamplingSchedule(self.width, self.height, self._samples[:n], validate=False)

    def __len__(self):
        return len(self._samples)

    def __iter__(self):
        return iter(self._samples)

    def __getitem__(self, item):
        return self._samples[item]

    def __eq__(self, other):
        if not isinstance(other, SamplingSchedule):
            return NotImplemented
        return (self.width, self.height, self.samples) == (other.width, other.height,
                                                           other.samples)

    def __hash__(self):
        return hash((self.width, self.height, self.samples))

    def __repr__(self):
        return "SamplingSchedule(width={w}, height={h}, length={n})".format(
            w=self.width, h=self.height, n=len(self))


def build_schedule(width, height, count):
    """Build the low-to-high frequency schedule of ``count`` illuminations.

    Canonical frequencies are sorted by ``fu**2 + fv**2``, then ``fv``, then ``fu``.
    Each contributes its real part followed by its imaginary part (real part only for
    self-conjugate frequencies), and the sequence is cut after ``count`` entries. A shorter
    schedule is always a prefix of a longer one, and the full schedule has exactly
    ``width * height`` entries.

    Args:
        width (int): Image width in pixels. Must be even.
        height (int): Image height in pixels. Must be even.
        count (int): Number of illuminations, between 1 and ``width * height``.

    Returns:
        SamplingSchedule: The schedule.

    Raises:
        UnsupportedDimensionError: If a dimension is odd or not positive.
        ScheduleRangeError: If ``count`` is outside ``[1, width * height]``.
    """
    check_dimensions(width, height)
    if not isinstance(count, (int, np.integer)) or isinstance(count, bool):
        raise TypeError("Count must be int. Given type {type}.".format(type=type(count)))
    if not 1 <= count <= width * height:
        raise ScheduleRangeError(
            "Count must be in between 1 and {full} (inclusive). Given {count}.".format(
                full=width * height, count=count))
    return SamplingSchedule(width, height, _full_schedule(int(width), int(height))[:count],
                            validate=False)
