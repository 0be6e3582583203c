import gzip
import os

import pytest
from spibayes.dataset import RawIdxSet, serialize_idx_images, serialize_idx_labels
from spibayes.experiment import ExperimentConfig
from spibayes.tests.utils import synthetic_digits


@pytest.fixture(scope="session")
def tmp_data_directory(tmpdir_factory):
    return str(tmpdir_factory.mktemp("tmp_data"))


def _write_idx(directory, prefix, n, seed, compress=False):
    pixels, labels = synthetic_digits(n, seed)
    raw = RawIdxSet(n, pixels.shape[1], pixels.shape[2], pixels)
    suffix = ".gz" if compress else ""
    opener = gzip.open if compress else open
    images_path = os.path.join(directory, "{0}-images-idx3-ubyte{1}".format(prefix, suffix))
    labels_path = os.path.join(directory, "{0}-labels-idx1-ubyte{1}".format(prefix, suffix))
    with opener(images_path, "wb") as f:
        f.write(serialize_idx_images(raw))
    with opener(labels_path, "wb") as f:
        f.write(serialize_idx_labels(labels))
    return images_path, labels_path


@pytest.fixture(scope="session")
def synthetic_idx_files(tmpdir_factory):
    """Synthetic training (gzip-compressed) and test IDX files.

    Returns:
        dict: Paths keyed by ``train_images``, ``train_labels``, ``test_images`` and
            ``test_labels``.
    """
    directory = str(tmpdir_factory.mktemp("idx"))
    train_images, train_labels = _write_idx(directory, "train", 300, seed=1, compress=True)
    test_images, test_labels = _write_idx(directory, "t10k", 60, seed=2)
    return {
        "train_images": train_images,
        "train_labels": train_labels,
        "test_images": test_images,
        "test_labels": test_labels,
    }


@pytest.fixture
def synthetic_config(synthetic_idx_files, tmp_path):
    """Small, fast experiment configuration on the synthetic files."""
    return ExperimentConfig(train_count=200,
                            test_count=40,
                            image_size=32,
                            illumination_counts=[1, 5, 13, 20],
                            out_csv=str(tmp_path / "accuracy.csv"),
                            dump_n=6,
                            **synthetic_idx_files)


@pytest.fixture(scope="session")
def mnist_files():
    """Official MNIST files from ``SPIBAYES_MNIST_DIR``; skips when not available."""
    directory = os.environ.get("SPIBAYES_MNIST_DIR")
    if not directory:
        pytest.skip("SPIBAYES_MNIST_DIR is not set.")
    names = {
        "train_images": "train-images-idx3-ubyte",
        "train_labels": "train-labels-idx1-ubyte",
        "test_images": "t10k-images-idx3-ubyte",
        "test_labels": "t10k-labels-idx1-ubyte",
    }
    files = {}
    for key, name in names.items():
        for candidate in (name, name + ".gz"):
            path = os.path.join(directory, candidate)
            if os.path.exists(path):
                files[key] = path
                break
        else:
            pytest.skip("{0} not found in SPIBAYES_MNIST_DIR.".format(name))
    return files
