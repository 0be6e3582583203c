import re

import numpy as np

_HEADER = re.compile(rb"^P5\s+(\d+)\s+(\d+)\s+(\d+)\s")


def to_gray8(image):
    """Min-max normalise an image to 0-255.

    Constant images map to all zeros.

    Returns:
        numpy.ndarray: ``uint8`` array of the same shape.
    """
    image = np.asarray(image, dtype=np.float64)
    low, high = image.min(), image.max()
    if high == low:
        return np.zeros(image.shape, dtype=np.uint8)
    return np.rint((image - low) / (high - low) * 255).astype(np.uint8)


def write_pgm(path, image):
    """Write an image as 8-bit binary PGM (P5), min-max normalised per image.

    Args:
        path (str): Output file.
        image (numpy.ndarray): 2-D array indexed ``[y, x]``.
    """
    pixels = to_gray8(image)
    if pixels.ndim != 2:
        raise ValueError("PGM images must be 2-D. Given shape {0}.".format(pixels.shape))
    height, width = pixels.shape
    with open(path, "wb") as f:
        f.write("P5\n{width} {height}\n255\n".format(width=width, height=height).encode("ascii"))
        f.write(pixels.tobytes())


def read_pgm(path):
    """Read an 8-bit binary PGM (P5) written by :func:`write_pgm`.

    Returns:
        numpy.ndarray: ``uint8`` array of shape ``(height, width)``.
    """
    with open(path, "rb") as f:
        data = f.read()
    match = _HEADER.match(data)
    if match is None:
        raise ValueError("{file} is not a binary PGM file.".format(file=path))
    width, height, maxval = (int(g) for g in match.groups())
    if maxval > 255:
        raise ValueError("Only 8-bit PGM files are supported.")
    pixels = np.frombuffer(data, dtype=np.uint8, offset=match.end())
    return pixels.reshape(height, width)
