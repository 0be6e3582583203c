import csv
import logging
from collections import namedtuple

CURVE_HEADER = ("illuminations", "sampling_ratio", "accuracy")
QUALITY_HEADER = ("illuminations", "sampling_ratio", "mean_correlation")

CurvePoint = namedtuple("CurvePoint", ["illuminations", "sampling_ratio", "accuracy"])
QualityPoint = namedtuple("QualityPoint",
                          ["illuminations", "sampling_ratio", "mean_correlation"])


class ExperimentReport:
    """Classification accuracy per illumination count.

    Args:
        points (iterable of CurvePoint): One entry per evaluated illumination count.
        elapsed_seconds (float, optional): Wall-clock time of the run. Defaults to 0.
        confusions (dict, optional): Confusion matrix per illumination count, rows being
            true labels and columns predicted labels. Defaults to None.
    """

    def __init__(self, points, elapsed_seconds=0.0, confusions=None):
        self._points = tuple(CurvePoint(*p) for p in points)
        self.elapsed_seconds = elapsed_seconds
        self._confusions = dict(confusions or {})

    @property
    def points(self):
        """tuple of CurvePoint: Curve entries in ascending illumination order."""
        return self._points

    def accuracy_at(self, illuminations):
        """Accuracy recorded for ``illuminations``.

        Raises:
            KeyError: If that count was not evaluated.
        """
        for point in self._points:
            if point.illuminations == illuminations:
                return point.accuracy
        raise KeyError(illuminations)

    def confusion(self, illuminations):
        """numpy.ndarray: Confusion matrix for ``illuminations``."""
        return self._confusions[illuminations]

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __repr__(self):
        return "ExperimentReport(points={n}, elapsed_seconds={s:.1f})".format(
            n=len(self), s=self.elapsed_seconds)


def _write_rows(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    logging.info("Wrote {n} rows into {path}".format(n=len(rows), path=path))


def write_curve_csv(report, path):
    """Write the accuracy curve as CSV.

    The header is ``illuminations,sampling_ratio,accuracy``; ratio and accuracy have four
    decimal places and lines end in LF.

    Args:
        report (ExperimentReport): Non-empty report.
        path (str): Output file.

    Raises:
        ValueError: If the report is empty.
        OSError: If the file cannot be written.
    """
    if len(report) == 0:
        raise ValueError("Cannot write an empty report.")
    _write_rows(path, CURVE_HEADER,
                [(p.illuminations, "{:.4f}".format(p.sampling_ratio), "{:.4f}".format(p.accuracy))
                 for p in report])


def read_curve_csv(path):
    """Read a curve written by :func:`write_curve_csv`.

    Returns:
        ExperimentReport: Report holding the parsed rows.
    """
    with open(path, encoding="utf-8", newline="") as f:
        reader = csv.reader(f)
        header = next(reader)
        if tuple(header) != CURVE_HEADER:
            raise ValueError("Unexpected header {0}.".format(header))
        return ExperimentReport(CurvePoint(int(t), float(ratio), float(acc))
                                for t, ratio, acc in reader)


def write_quality_csv(points, path):
    """Write reconstruction fidelity per illumination count as CSV.

    The header is ``illuminations,sampling_ratio,mean_correlation``.
    """
    points = list(points)
    if not points:
        raise ValueError("Cannot write an empty quality sweep.")
    _write_rows(path, QUALITY_HEADER,
                [(p.illuminations, "{:.4f}".format(p.sampling_ratio),
                  "{:.4f}".format(p.mean_correlation)) for p in points])
