import os


def make_path(path, **kwargs):
    """Make directory if it does not exist yet.

    Args:
        path (str): Path to be made if it doesn't exist.
        **kwargs: Keyword arguments to pass to ``os.makedirs``.

    Raises:
        OSError: If there is a problem making the path.

    Returns:
        None
    """
    if not os.path.exists(path):
        os.makedirs(path, **kwargs)


def batch(length, n):
    """Split ``range(length)`` into consecutive slices of at most ``n`` items.

    Args:
        length (int): Total number of items.
        n (int): Maximum size of each slice.

    Yields:
        slice: Slice covering the next chunk.
    """
    for ndx in range(0, length, n):
        yield slice(ndx, min(ndx + n, length))


def sampling_ratio(count, width, height):
    """Fraction of the full-sampling measurement count used by ``count`` illuminations.

    Args:
        count (int): Number of illuminations.
        width (int): Image width in pixels.
        height (int): Image height in pixels.

    Returns:
        float: ``count / (width * height)``.
    """
    return count / (width * height)
