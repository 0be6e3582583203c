import logging
import os
import time

import numpy as np

from spibayes.classifier import classify_batch, fit, save_model
from spibayes.dataset import prepare_dataset, read_idx_bytes
from spibayes.experiment.pgm import write_pgm
from spibayes.experiment.report import CurvePoint, ExperimentReport, QualityPoint
from spibayes.measurement import (build_schedule, measure_batch, reconstruct,
                                  reconstruction_correlation)
from spibayes.utils import make_path, sampling_ratio

MANIFEST_NAME = "manifest.tsv"


class Experiment:
    """Ingest, measure, fit and evaluate once for a given configuration.

    Every stage is computed on first use and cached. Training and test objects are measured
    once with the longest schedule the run needs, and the model is fitted once on those full
    sequences; shorter illumination counts classify with sequence prefixes, which gives the
    same result as refitting because features are independent given the class.

    Args:
        config (spibayes.experiment.ExperimentConfig): Run settings.
    """

    def __init__(self, config):
        self._config = config
        self._train_set = None
        self._test_set = None
        self._schedule = None
        self._train_vectors = None
        self._test_vectors = None
        self._model = None

    @property
    def config(self):
        """``spibayes.experiment.ExperimentConfig``: Run settings."""
        return self._config

    def _load(self, images_path, labels_path, take):
        return prepare_dataset(read_idx_bytes(images_path), read_idx_bytes(labels_path),
                               take=take, target=self.config.image_size)

    def get_train_set(self, update_cache=False):
        """``spibayes.dataset.Dataset``: Prepared training objects."""
        if self._train_set is None or update_cache:
            self._train_set = self._load(self.config.train_images, self.config.train_labels,
                                         self.config.train_count)
        return self._train_set

    def get_test_set(self, update_cache=False):
        """``spibayes.dataset.Dataset``: Prepared test objects."""
        if self._test_set is None or update_cache:
            self._test_set = self._load(self.config.test_images, self.config.test_labels,
                                        self.config.test_count)
        return self._test_set

    def get_schedule(self, length=None):
        """Schedule covering at least ``length`` illuminations.

        Growing the schedule drops cached measurements and the model, since both depend on
        the sequence length.

        Args:
            length (int, optional): Minimum length. Defaults to the config's longest count.

        Returns:
            spibayes.measurement.SamplingSchedule: The cached schedule.
        """
        needed = max(length or 0, self.config.max_illuminations)
        if self._schedule is None or len(self._schedule) < needed:
            size = self.config.image_size
            self._schedule = build_schedule(size, size, needed)
            self._train_vectors = self._test_vectors = self._model = None
            logging.info("Schedule of {n} illuminations ({ratio:.4f} sampling ratio)".format(
                n=needed, ratio=self._schedule.sampling_ratio))
        return self._schedule

    def _measure(self, dataset, length):
        return measure_batch(dataset.images, self.get_schedule(length),
                             acquisition=self.config.acquisition,
                             workers=self.config.workers)

    def get_train_vectors(self, length=None):
        """numpy.ndarray: Intensity sequences of the training objects."""
        self.get_schedule(length)
        if self._train_vectors is None:
            self._train_vectors = self._measure(self.get_train_set(), length)
        return self._train_vectors

    def get_test_vectors(self, length=None):
        """numpy.ndarray: Intensity sequences of the test objects."""
        self.get_schedule(length)
        if self._test_vectors is None:
            self._test_vectors = self._measure(self.get_test_set(), length)
        return self._test_vectors

    def get_model(self, length=None):
        """``spibayes.classifier.NaiveBayesModel``: Model fitted on full training sequences."""
        vectors = self.get_train_vectors(length)
        if self._model is None:
            train = self.get_train_set()
            self._model = fit(vectors, train.labels, train.num_classes,
                              smoothing=self.config.smoothing)
            if self.config.model_out is not None:
                save_model(self._model, self.config.model_out)
        return self._model

    def run_curve(self):
        """Evaluate test accuracy at every configured illumination count.

        Returns:
            ExperimentReport: Accuracy and sampling ratio per count, with confusion
                matrices and the wall-clock time of the run.
        """
        start = time.monotonic()
        model = self.get_model()
        vectors = self.get_test_vectors()
        labels = self.get_test_set().labels
        num_classes = model.num_classes
        size = self.config.image_size

        points = []
        confusions = {}
        for count in self.config.illumination_counts:
            predicted = classify_batch(vectors, model, count)
            accuracy = float(np.mean(predicted == labels))
            confusions[count] = np.bincount(labels * num_classes + predicted,
                                            minlength=num_classes ** 2).reshape(
                                                num_classes, num_classes)
            points.append(CurvePoint(count, sampling_ratio(count, size, size), accuracy))
            logging.info("{count} illuminations: accuracy {accuracy:.4f}".format(
                count=count, accuracy=accuracy))
        return ExperimentReport(points, time.monotonic() - start, confusions)

    def dump_reconstructions(self, illuminations, n_images, directory,
                             file_pattern="{index:03d}_{kind}.pgm"):
        """Write originals and reconstructions of the first test objects as PGM.

        Also writes ``manifest.tsv`` with one tab-separated row per object:
        original file, reconstruction file, true label and predicted label.

        Args:
            illuminations (int): Number of illuminations used to reconstruct and classify.
            n_images (int): Number of leading test objects to dump.
            directory (str): Output directory, created if needed.
            file_pattern (str, optional): Format string for file names. Valid keys are
                ``index`` and ``kind`` (``original`` or ``recon<illuminations>``).

        Returns:
            list of tuple: Manifest rows.
        """
        if not 1 <= n_images <= self.config.test_count:
            raise ValueError("Number of images must be in between 1 and {test}. "
                             "Given {n}.".format(test=self.config.test_count, n=n_images))
        model = self.get_model(illuminations)
        vectors = self.get_test_vectors(illuminations)
        schedule = self.get_schedule(illuminations).prefix(illuminations)
        test = self.get_test_set()
        predicted = classify_batch(vectors[:n_images], model, illuminations)

        make_path(directory)
        rows = []
        for index in range(n_images):
            original_name = file_pattern.format(index=index, kind="original")
            recon_name = file_pattern.format(index=index,
                                             kind="recon{0}".format(illuminations))
            write_pgm(os.path.join(directory, original_name), test.images[index])
            write_pgm(os.path.join(directory, recon_name),
                      reconstruct(vectors[index, :illuminations], schedule))
            rows.append((original_name, recon_name, int(test.labels[index]),
                         int(predicted[index])))

        with open(os.path.join(directory, MANIFEST_NAME), "w", encoding="utf-8",
                  newline="") as f:
            f.write("original\treconstruction\tlabel\tpredicted\n")
            for row in rows:
                f.write("\t".join(str(field) for field in row) + "\n")
        logging.info("Dumped {n} reconstructions at {t} illuminations into {dir}".format(
            n=n_images, t=illuminations, dir=directory))
        return rows

    def quality_sweep(self, counts=None, n_images=None):
        """Mean correlation between test objects and their reconstructions.

        Only the first ``n_images`` test objects are measured, with their own schedule, so
        long schedules stay cheap.

        Args:
            counts (list of int, optional): Ascending illumination counts. Defaults to the
                configured counts.
            n_images (int, optional): Number of leading test objects. Defaults to ``dump_n``.

        Returns:
            list of QualityPoint: One entry per count.

        Raises:
            ValueError: If ``counts`` is empty or ``n_images`` is outside
                ``[1, test_count]``.
        """
        counts = list(self.config.illumination_counts if counts is None else counts)
        if n_images is None:
            n_images = self.config.dump_n
        if not counts:
            raise ValueError("At least one illumination count is required.")
        if not 1 <= n_images <= self.config.test_count:
            raise ValueError("Number of images must be in between 1 and {test}. "
                             "Given {n}.".format(test=self.config.test_count, n=n_images))
        images = self.get_test_set().images[:n_images]
        size = self.config.image_size
        schedule = build_schedule(size, size, max(counts))
        vectors = measure_batch(images, schedule, acquisition=self.config.acquisition,
                                workers=self.config.workers)

        points = []
        for count in counts:
            prefix = schedule.prefix(count)
            correlations = [reconstruction_correlation(image, reconstruct(vector[:count],
                                                                          prefix))
                            for image, vector in zip(images, vectors)]
            points.append(QualityPoint(count, sampling_ratio(count, size, size),
                                       float(np.mean(correlations))))
        return points


def run_curve_experiment(config):
    """Run the accuracy-versus-illuminations sweep for ``config``.

    Returns:
        ExperimentReport: One row per configured illumination count.
    """
    return Experiment(config).run_curve()


def dump_reconstructions(config, count_t, n_images):
    """Dump ``n_images`` originals and ``count_t``-illumination reconstructions.

    Files go to ``config.dump_dir``.

    Returns:
        list of tuple: Manifest rows.
    """
    if config.dump_dir is None:
        raise ValueError("No dump directory configured.")
    return Experiment(config).dump_reconstructions(count_t, n_images, config.dump_dir)


def run_quality_sweep(config):
    """Reconstruction fidelity per configured illumination count.

    Returns:
        list of QualityPoint: One entry per count.
    """
    return Experiment(config).quality_sweep()
