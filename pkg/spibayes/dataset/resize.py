import numpy as np


def _source_coordinates(src_size, dst_size):
    """Pixel-centre aligned sample positions and blend weights along one axis."""
    coords = (np.arange(dst_size) + 0.5) * (src_size / dst_size) - 0.5
    coords = np.clip(coords, 0, src_size - 1)
    lower = np.floor(coords).astype(np.intp)
    upper = np.minimum(lower + 1, src_size - 1)
    return lower, upper, coords - lower


def resize_bilinear(src, dst_w, dst_h):
    """Resize an image (or a stack of images) by bilinear interpolation.

    Destination pixel ``i`` samples source coordinate ``(i + 0.5) * src / dst - 0.5``,
    clamped to the valid range. Interpolation is written as ``a + w * (b - a)`` so constant
    images stay exactly constant and identical sizes return the input unchanged.

    Args:
        src (numpy.ndarray): Image of shape ``(height, width)`` or stack ``(n, height, width)``.
        dst_w (int): Output width, at least 1.
        dst_h (int): Output height, at least 1.

    Returns:
        numpy.ndarray: Float array with the last two axes ``(dst_h, dst_w)``.
    """
    src = np.asarray(src, dtype=np.float64)
    if src.ndim not in (2, 3) or src.shape[-1] == 0 or src.shape[-2] == 0:
        raise ValueError("Source must be a non-empty image or image stack. Given {0}.".format(
            src.shape))
    if dst_w < 1 or dst_h < 1:
        raise ValueError("Output size must be at least 1x1. Given {w}x{h}.".format(
            w=dst_w, h=dst_h))
    src_h, src_w = src.shape[-2:]
    y0, y1, wy = _source_coordinates(src_h, dst_h)
    x0, x1, wx = _source_coordinates(src_w, dst_w)
    wy = wy[:, np.newaxis]

    top = src[..., y0, :]
    bottom = src[..., y1, :]
    rows = top + wy * (bottom - top)
    left = rows[..., x0]
    right = rows[..., x1]
    return left + wx * (right - left)
