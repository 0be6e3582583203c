import logging
from collections import namedtuple

import numpy as np

from spibayes.dataset.idx import NUM_DIGITS, parse_idx_images, parse_idx_labels
from spibayes.dataset.resize import resize_bilinear
from spibayes.exceptions import DimensionMismatchError, InsufficientDataError
from spibayes.utils import batch

LabeledImage = namedtuple("LabeledImage", ["image", "label"])


class Dataset:
    """Labelled object images ready for acquisition.

    Args:
        images (numpy.ndarray): Float array of shape ``(n, size, size)`` with values in [0, 1].
        labels (numpy.ndarray): ``n`` digit labels.
    """

    def __init__(self, images, labels):
        images = np.asarray(images, dtype=np.float64)
        labels = np.asarray(labels, dtype=np.intp)
        if images.ndim != 3 or labels.shape != (images.shape[0],):
            raise DimensionMismatchError(
                "Images {images} and labels {labels} do not pair up.".format(
                    images=images.shape, labels=labels.shape))
        self._images = images
        self._labels = labels

    @property
    def images(self):
        """numpy.ndarray: Stack of object images."""
        return self._images

    @property
    def labels(self):
        """numpy.ndarray: Digit label of each image."""
        return self._labels

    @property
    def num_classes(self):
        """int: Number of digit classes."""
        return NUM_DIGITS

    def class_counts(self):
        """numpy.ndarray: Number of images per digit."""
        return np.bincount(self._labels, minlength=self.num_classes)

    def __len__(self):
        return self._images.shape[0]

    def __getitem__(self, index):
        return LabeledImage(self._images[index], int(self._labels[index]))

    def __iter__(self):
        for index in range(len(self)):
            yield self[index]


def prepare_dataset(image_bytes, label_bytes, take, target=64, chunk_size=1000):
    """Parse IDX files and turn the first ``take`` digits into ``target`` x ``target`` objects.

    Records are taken in file order. Pixel bytes are divided by 255 and resized with
    :func:`spibayes.dataset.resize_bilinear`.

    Args:
        image_bytes (bytes): Raw IDX image file.
        label_bytes (bytes): Raw IDX label file.
        take (int): Number of leading records to use.
        target (int, optional): Output side length. Defaults to 64.
        chunk_size (int, optional): Images resized at a time. Defaults to 1000.

    Returns:
        Dataset: ``take`` labelled images with pixels in [0, 1].

    Raises:
        DimensionMismatchError: If image and label counts differ.
        InsufficientDataError: If ``take`` is not in ``[1, count]``.
    """
    raw = parse_idx_images(image_bytes)
    labels = parse_idx_labels(label_bytes)
    if labels.size != raw.count:
        raise DimensionMismatchError("{images} images but {labels} labels.".format(
            images=raw.count, labels=labels.size))
    if not isinstance(take, int) or not 1 <= take <= raw.count:
        raise InsufficientDataError(
            "Take must be in between 1 and {count} (inclusive). Given {take}.".format(
                count=raw.count, take=take))

    images = np.empty((take, target, target))
    for chunk in batch(take, chunk_size):
        resized = resize_bilinear(raw.pixels[chunk] / 255.0, target, target)
        images[chunk] = np.clip(resized, 0.0, 1.0)
    logging.info("Prepared {take} images at {size}x{size}".format(take=take, size=target))
    return Dataset(images, labels[:take])
