import os

from spibayes.measurement.acquisition import ACQUISITIONS

DEFAULT_ILLUMINATION_COUNTS = tuple(range(1, 21)) + tuple(range(25, 201, 5))


def _check_int(name, value, minimum=1):
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError("{name} must be int. Given type {type}.".format(name=name,
                                                                       type=type(value)))
    if value < minimum:
        raise ValueError("{name} must be at least {minimum}. Given {value}.".format(
            name=name, minimum=minimum, value=value))
    return value


def _check_path(name, value, optional=False):
    if value is None and optional:
        return None
    if not isinstance(value, (str, os.PathLike)):
        raise TypeError("{name} must be a path. Given type {type}.".format(name=name,
                                                                          type=type(value)))
    return value


class ExperimentConfig:
    """Settings for an accuracy-versus-illuminations run.

    Args:
        train_images (str): IDX image file for training (may be gzip-compressed).
        train_labels (str): IDX label file for training.
        test_images (str): IDX image file for testing.
        test_labels (str): IDX label file for testing.
        train_count (int, optional): Leading training records to use. Defaults to 9000.
        test_count (int, optional): Leading test records to use. Defaults to 500.
        image_size (int, optional): Side length objects are resized to. Must be even.
            Defaults to 64.
        illumination_counts (list of int, optional): Strictly ascending illumination counts
            to evaluate, each at most ``image_size ** 2``. Defaults to 1-20, then every 5 up
            to 200.
        smoothing (float, optional): Relative variance smoothing. Defaults to 1e-9.
        out_csv (str, optional): Where the accuracy curve is written. Defaults to
            ``accuracy.csv``.
        dump_dir (str, optional): Directory for reconstruction dumps. Defaults to None
            (no dump).
        dump_n (int, optional): Number of test objects to dump. Defaults to 15.
        dump_illuminations (int, optional): Illuminations used for dumped reconstructions.
            Defaults to 13.
        acquisition (str, optional): ``"fourier"`` or ``"pattern"``. Defaults to ``"fourier"``.
        workers (int, optional): Measuring threads. Defaults to 1.
        model_out (str, optional): Where the fitted model is saved as JSON. Defaults to None.
    """

    def __init__(self,
                 train_images,
                 train_labels,
                 test_images,
                 test_labels,
                 train_count=9000,
                 test_count=500,
                 image_size=64,
                 illumination_counts=DEFAULT_ILLUMINATION_COUNTS,
                 smoothing=1e-9,
                 out_csv="accuracy.csv",
                 dump_dir=None,
                 dump_n=15,
                 dump_illuminations=13,
                 acquisition="fourier",
                 workers=1,
                 model_out=None):
        self.train_images = _check_path("train_images", train_images)
        self.train_labels = _check_path("train_labels", train_labels)
        self.test_images = _check_path("test_images", test_images)
        self.test_labels = _check_path("test_labels", test_labels)
        self.train_count = train_count
        self.test_count = test_count
        # Leave image_size before the illumination setters
        self._illumination_counts = None
        self._dump_illuminations = None
        self.image_size = image_size
        self.illumination_counts = illumination_counts
        self.smoothing = smoothing
        self.out_csv = _check_path("out_csv", out_csv, optional=True)
        self.dump_dir = _check_path("dump_dir", dump_dir, optional=True)
        self.dump_n = dump_n
        self.dump_illuminations = dump_illuminations
        self.acquisition = acquisition
        self.workers = workers
        self.model_out = _check_path("model_out", model_out, optional=True)

    @property
    def train_count(self):
        """int: Number of leading training records used."""
        return self._train_count

    @train_count.setter
    def train_count(self, value):
        self._train_count = _check_int("Train count", value)

    @property
    def test_count(self):
        """int: Number of leading test records used."""
        return self._test_count

    @test_count.setter
    def test_count(self, value):
        self._test_count = _check_int("Test count", value)

    @property
    def image_size(self):
        """int: Side length of the resized objects."""
        return self._image_size

    @image_size.setter
    def image_size(self, value):
        _check_int("Image size", value, minimum=2)
        if value % 2:
            raise ValueError("Image size must be even. Given {0}.".format(value))
        previous = getattr(self, "_image_size", None)
        self._image_size = value
        try:
            if self._illumination_counts is not None:
                self.illumination_counts = self._illumination_counts
            if self._dump_illuminations is not None:
                self.dump_illuminations = self._dump_illuminations
        except ValueError:
            self._image_size = previous
            raise

    @property
    def full_sampling(self):
        """int: Illuminations needed for the whole spectrum, ``image_size ** 2``."""
        return self.image_size ** 2

    @property
    def illumination_counts(self):
        """tuple of int: Strictly ascending illumination counts to evaluate."""
        return self._illumination_counts

    @illumination_counts.setter
    def illumination_counts(self, value):
        counts = tuple(value)
        if not counts:
            raise ValueError("At least one illumination count is required.")
        for count in counts:
            _check_int("Illumination count", count)
            if count > self.full_sampling:
                raise ValueError("Illumination count {count} exceeds {full}.".format(
                    count=count, full=self.full_sampling))
        if any(a >= b for a, b in zip(counts, counts[1:])):
            raise ValueError("Illumination counts must be strictly ascending.")
        self._illumination_counts = counts

    @property
    def smoothing(self):
        """float: Relative variance smoothing."""
        return self._smoothing

    @smoothing.setter
    def smoothing(self, value):
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise TypeError("Smoothing must be int or float. Given type {0}".format(type(value)))
        elif value < 0:
            raise ValueError("Smoothing must be non-negative. Given {0}.".format(value))
        self._smoothing = float(value)

    @property
    def dump_n(self):
        """int: Number of test objects dumped as PGM."""
        return self._dump_n

    @dump_n.setter
    def dump_n(self, value):
        _check_int("Dump count", value)
        if self.dump_dir is not None and value > self.test_count:
            raise ValueError("Dump count {n} exceeds test count {test}.".format(
                n=value, test=self.test_count))
        self._dump_n = value

    @property
    def dump_illuminations(self):
        """int: Illuminations used for dumped reconstructions."""
        return self._dump_illuminations

    @dump_illuminations.setter
    def dump_illuminations(self, value):
        _check_int("Dump illuminations", value)
        if value > self.full_sampling:
            raise ValueError("Dump illuminations {count} exceeds {full}.".format(
                count=value, full=self.full_sampling))
        self._dump_illuminations = value

    @property
    def acquisition(self):
        """str: Name of the acquisition back-end."""
        return self._acquisition

    @acquisition.setter
    def acquisition(self, value):
        if value not in ACQUISITIONS:
            raise ValueError("Acquisition must be one of {names}. Given {value!r}.".format(
                names=sorted(ACQUISITIONS), value=value))
        self._acquisition = value

    @property
    def workers(self):
        """int: Measuring threads."""
        return self._workers

    @workers.setter
    def workers(self, value):
        self._workers = _check_int("Workers", value)

    @property
    def max_illuminations(self):
        """int: Longest schedule any part of the run needs."""
        longest = self.illumination_counts[-1]
        if self.dump_dir is not None:
            longest = max(longest, self.dump_illuminations)
        return longest
