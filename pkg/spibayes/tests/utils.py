import os

import numpy as np


def datapath(*args):
    """Get the path to a data file.

    Returns:
        path including ``spibayes/tests/data``.
    """
    base_path = os.path.join(os.path.dirname(__file__), 'data')
    return os.path.join(base_path, *args)


def synthetic_digits(n, seed, rows=28, cols=28):
    """Digit-like uint8 images whose ink mass grows with the label.

    Label ``k`` is a bright bar ``2 * (k + 1)`` pixels tall and 3 wide at a slightly jittered
    position, on a faint noisy background. Labels cycle through 0-9.

    Returns:
        tuple: ``(pixels, labels)`` with shapes ``(n, rows, cols)`` and ``(n,)``.
    """
    rng = np.random.default_rng(seed)
    labels = np.arange(n) % 10
    pixels = rng.integers(0, 20, size=(n, rows, cols))
    for index, label in enumerate(labels):
        top = 3 + rng.integers(0, 3)
        left = 10 + rng.integers(0, 5)
        pixels[index, top:top + 2 * (label + 1), left:left + 3] = 255
    return pixels.astype(np.uint8), labels.astype(np.uint8)


def naive_dft(image, fu, fv):
    """Textbook double-sum DFT coefficient, one pixel at a time."""
    import cmath
    height, width = len(image), len(image[0])
    total = 0j
    for y in range(height):
        for x in range(width):
            total += image[y][x] * cmath.exp(-2j * cmath.pi * (fu * x / width + fv * y / height))
    return total
