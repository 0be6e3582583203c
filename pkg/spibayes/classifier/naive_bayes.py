import json
import logging
import math
from collections import namedtuple

import numpy as np
from scipy.special import logsumexp

from spibayes.exceptions import (DimensionMismatchError, FeatureRangeError,
                                 InsufficientDataError)

#: Variance floor used when a feature has zero variance in every class.
VARIANCE_FLOOR = 1e-12

_LOG_SQRT_2PI = 0.5 * math.log(2 * math.pi)

GaussianParams = namedtuple("GaussianParams", ["mean", "stddev"])


def gaussian_log_pdf(x, params):
    """Log density of a normal distribution.

    Args:
        x (float): Observed intensity.
        params (GaussianParams): Mean and (positive) standard deviation.

    Returns:
        float: ``-0.5*ln(2*pi) - ln(sigma) - (x - mu)**2 / (2*sigma**2)``.
    """
    mean, stddev = params
    if not stddev > 0:
        raise ValueError("Standard deviation must be positive. Given {0}.".format(stddev))
    return -_LOG_SQRT_2PI - math.log(stddev) - (x - mean) ** 2 / (2 * stddev ** 2)


def _log_likelihood(x, mean, variance):
    """Elementwise Gaussian log density parameterised by variance."""
    return -_LOG_SQRT_2PI - 0.5 * np.log(variance) - (x - mean) ** 2 / (2 * variance)


def _column_sums(values):
    """Exactly rounded column sums.

    ``math.fsum`` makes each feature's statistics independent of how many other
    features are fitted alongside it.
    """
    return np.array([math.fsum(column) for column in values.T.tolist()])


class NaiveBayesModel:
    """Fitted Gaussian naive Bayes model over single-pixel intensity features.

    Args:
        log_priors (array_like): ``K`` natural-log class priors.
        means (array_like): ``K x N`` per-class, per-feature means.
        variances (array_like): ``K x N`` per-class, per-feature variances, all positive.

    Raises:
        DimensionMismatchError: If the arrays disagree in shape.
        ValueError: If priors do not sum to one or a variance is not positive.
    """

    def __init__(self, log_priors, means, variances):
        log_priors = np.array(log_priors, dtype=np.float64)
        means = np.array(means, dtype=np.float64)
        variances = np.array(variances, dtype=np.float64)
        if log_priors.ndim != 1 or means.ndim != 2 or means.shape != variances.shape \
                or means.shape[0] != log_priors.shape[0]:
            raise DimensionMismatchError(
                "Shapes do not match: priors {p}, means {m}, variances {v}.".format(
                    p=log_priors.shape, m=means.shape, v=variances.shape))
        if abs(np.exp(log_priors).sum() - 1) > 1e-12:
            raise ValueError("Class priors must sum to one.")
        if not np.all(variances > 0):
            raise ValueError("Every variance must be positive.")
        for arr in (log_priors, means, variances):
            arr.setflags(write=False)
        self._log_priors = log_priors
        self._means = means
        self._variances = variances

    @property
    def num_classes(self):
        """int: Number of classes ``K``."""
        return self._means.shape[0]

    @property
    def num_features(self):
        """int: Number of features ``N``."""
        return self._means.shape[1]

    @property
    def log_priors(self):
        """numpy.ndarray: Read-only ``K`` log priors."""
        return self._log_priors

    @property
    def means(self):
        """numpy.ndarray: Read-only ``K x N`` means."""
        return self._means

    @property
    def variances(self):
        """numpy.ndarray: Read-only ``K x N`` smoothed variances."""
        return self._variances

    @property
    def stddevs(self):
        """numpy.ndarray: ``K x N`` standard deviations."""
        return np.sqrt(self._variances)

    def params(self, label, feature):
        """Gaussian parameters of one feature for one class.

        Returns:
            GaussianParams: Mean and standard deviation.
        """
        return GaussianParams(float(self._means[label, feature]),
                              math.sqrt(self._variances[label, feature]))

    def truncate(self, length):
        """Model restricted to the first ``length`` features.

        Features are independent given the class, so this equals fitting on the
        truncated vectors.
        """
        self._check_length(length)
        return NaiveBayesModel(self._log_priors, self._means[:, :length],
                               self._variances[:, :length])

    def _check_length(self, length):
        if not 1 <= length <= self.num_features:
            raise FeatureRangeError(
                "Feature count must be in between 1 and {n} (inclusive). Given {t}.".format(
                    n=self.num_features, t=length))

    def joint_log_likelihood(self, vectors, length=None):
        """Unnormalised log posterior of every class for a batch of vectors.

        Args:
            vectors (numpy.ndarray): Shape ``(n, t)`` with ``t >= length``.
            length (int, optional): Number of leading features to use. Defaults to ``t``.

        Returns:
            numpy.ndarray: Shape ``(n, K)``.
        """
        vectors = np.asarray(vectors, dtype=np.float64)
        if vectors.ndim != 2:
            raise DimensionMismatchError("Vectors must be 2-D. Given shape {0}.".format(
                vectors.shape))
        if length is None:
            length = vectors.shape[1]
        self._check_length(length)
        if vectors.shape[1] < length:
            raise FeatureRangeError("Vectors have {have} features, {want} requested.".format(
                have=vectors.shape[1], want=length))
        vectors = vectors[:, :length]
        scores = np.empty((vectors.shape[0], self.num_classes))
        for label in range(self.num_classes):
            ll = _log_likelihood(vectors, self._means[label, :length],
                                 self._variances[label, :length])
            scores[:, label] = self._log_priors[label] + ll.sum(axis=1)
        return scores

    def to_dict(self):
        """JSON-serialisable representation."""
        return {
            "num_classes": self.num_classes,
            "num_features": self.num_features,
            "log_priors": self._log_priors.tolist(),
            "means": self._means.tolist(),
            "variances": self._variances.tolist(),
        }

    @classmethod
    def from_dict(cls, data):
        """Inverse of :meth:`to_dict`.

        Raises:
            DimensionMismatchError: If the declared sizes disagree with the arrays.
        """
        model = cls(data["log_priors"], data["means"], data["variances"])
        if (model.num_classes, model.num_features) != (data["num_classes"],
                                                       data["num_features"]):
            raise DimensionMismatchError("Declared model size does not match its arrays.")
        return model

    def __repr__(self):
        return "NaiveBayesModel(num_classes={k}, num_features={n})".format(
            k=self.num_classes, n=self.num_features)


class Posterior:
    """Classification result for one intensity sequence.

    Attributes:
        log_scores (numpy.ndarray): Unnormalised log posterior per class.
        predicted (int): Index of the largest score, lowest index on ties.
    """

    def __init__(self, log_scores):
        self.log_scores = np.asarray(log_scores, dtype=np.float64)
        self.predicted = int(np.argmax(self.log_scores))

    @property
    def probabilities(self):
        """numpy.ndarray: Scores normalised to sum to one."""
        return np.exp(self.log_scores - logsumexp(self.log_scores))

    def __repr__(self):
        return "Posterior(predicted={0})".format(self.predicted)


def fit(vectors, labels, num_classes, smoothing=1e-9):
    """Fit per-feature, per-class Gaussians to labelled intensity sequences.

    For each class and feature the mean and population variance are taken over that
    class's samples. Each variance is then increased by ``smoothing`` times the largest
    variance of the same feature across classes (``VARIANCE_FLOOR`` when that is zero).
    Priors are class proportions.

    Args:
        vectors (array_like): ``n x N`` intensity sequences.
        labels (array_like): ``n`` class indices in ``[0, num_classes)``.
        num_classes (int): Number of classes ``K``; at least 2.
        smoothing (float, optional): Relative variance smoothing. Defaults to 1e-9.

    Returns:
        NaiveBayesModel: The fitted model.

    Raises:
        DimensionMismatchError: If vectors are ragged or labels have a different count.
        InsufficientDataError: If there are no vectors or a class has no samples.
        ValueError: If ``num_classes < 2``, a label is out of range or smoothing is negative.
    """
    if not isinstance(num_classes, (int, np.integer)) or num_classes < 2:
        raise ValueError("Number of classes must be an integer of at least 2. Given {0}.".format(
            num_classes))
    if not smoothing >= 0:
        raise ValueError("Smoothing must be non-negative. Given {0}.".format(smoothing))
    try:
        vectors = np.asarray(vectors, dtype=np.float64)
    except ValueError:
        raise DimensionMismatchError("Measurement vectors must all have the same length.")
    if vectors.size == 0:
        raise InsufficientDataError("Cannot fit a model without training vectors.")
    if vectors.ndim != 2:
        raise DimensionMismatchError("Vectors must form a 2-D array. Given shape {0}.".format(
            vectors.shape))
    labels = np.asarray(labels)
    if labels.shape != (vectors.shape[0],):
        raise DimensionMismatchError("Expected {n} labels. Given shape {shape}.".format(
            n=vectors.shape[0], shape=labels.shape))
    if not np.issubdtype(labels.dtype, np.integer) or labels.min() < 0 \
            or labels.max() >= num_classes:
        raise ValueError("Labels must be integers in [0, {k}).".format(k=num_classes))

    counts = np.bincount(labels, minlength=num_classes)
    empty = np.flatnonzero(counts == 0)
    if empty.size:
        raise InsufficientDataError("No training samples for classes {0}.".format(
            empty.tolist()))

    means = np.empty((num_classes, vectors.shape[1]))
    variances = np.empty((num_classes, vectors.shape[1]))
    for label in range(num_classes):
        members = vectors[labels == label]
        means[label] = _column_sums(members) / counts[label]
        variances[label] = _column_sums((members - means[label]) ** 2) / counts[label]

    reference = variances.max(axis=0)
    epsilon = smoothing * reference
    epsilon[~(reference > 0)] = VARIANCE_FLOOR
    variances += epsilon

    logging.info("Fitted {k} classes on {n} vectors of {t} features".format(
        k=num_classes, n=vectors.shape[0], t=vectors.shape[1]))
    return NaiveBayesModel(np.log(counts / vectors.shape[0]), means, variances)


def classify(vector, model, length=None):
    """Classify one intensity sequence by maximum log posterior.

    Args:
        vector (array_like): Intensity sequence; only its first ``length`` values are used.
        model (NaiveBayesModel): Fitted model with at least ``length`` features.
        length (int, optional): Prefix length ``t``. Defaults to ``len(vector)``.

    Returns:
        Posterior: Scores and predicted label.

    Raises:
        FeatureRangeError: If ``t`` is 0 or exceeds the model's feature count.
    """
    vector = np.asarray(vector, dtype=np.float64)
    if vector.ndim != 1:
        raise DimensionMismatchError("Vector must be 1-D. Given shape {0}.".format(
            vector.shape))
    return Posterior(model.joint_log_likelihood(vector[np.newaxis], length=length)[0])


def classify_batch(vectors, model, length=None):
    """Predicted labels for many intensity sequences.

    Gives the same labels as calling :func:`classify` on each row.

    Returns:
        numpy.ndarray: One predicted class index per row.
    """
    return np.argmax(model.joint_log_likelihood(vectors, length=length), axis=1)


def save_model(model, path):
    """Write ``model`` as an indented, key-sorted JSON document."""
    with open(path, "w", encoding="utf8") as f:
        f.write(json.dumps(model.to_dict(), indent=2, sort_keys=True))
    logging.info("Model written into {}".format(path))


def load_model(path):
    """Read a model written by :func:`save_model`."""
    with open(path, encoding="utf8") as f:
        return NaiveBayesModel.from_dict(json.load(f))
