import logging

import click

from spibayes.experiment import (DEFAULT_ILLUMINATION_COUNTS, Experiment, ExperimentConfig,
                                 write_curve_csv, write_quality_csv)
from spibayes.measurement import build_schedule
from spibayes.measurement.acquisition import ACQUISITIONS

PATH_FLAGS = ("train_images", "train_labels", "test_images", "test_labels")


@click.group()
@click.option('-v', '--verbose', is_flag=True, help='Log progress at INFO level.')
def cli(verbose):
    r"""Fourier single-pixel acquisition and naive Bayes digit classification.

    \f

    Args:
        verbose (bool): Whether to log progress.

    Returns:
        None
    """
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format="%(asctime)s %(levelname)s %(message)s")


def parse_counts(ctx, param, value):
    r"""Transforms a comma separated list like ``13,50`` into a tuple of ints.

    Args:
        ctx (click.core.Context): Click context.
        param (click.core.Parameter): Parameter being parsed.
        value (Union[str, NoneType]): Raw flag value.

    Returns:
        Tuple of strictly ascending ints, or None if no value was given.

    Raises:
        click.BadParameter: If the list is malformed or not strictly ascending.
    """
    if value is None:
        return None
    try:
        counts = tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter("Expected comma separated integers, got {0!r}.".format(value))
    if any(count < 1 for count in counts):
        raise click.BadParameter("Illumination counts must be positive.")
    if any(a >= b for a, b in zip(counts, counts[1:])):
        raise click.BadParameter("Illumination counts must be strictly ascending.")
    return counts


def data_options(f):
    """Options shared by every command that reads the IDX files."""
    options = [
        click.option('--train-images', help='IDX training image file (.gz allowed).'),
        click.option('--train-labels', help='IDX training label file (.gz allowed).'),
        click.option('--test-images', help='IDX test image file (.gz allowed).'),
        click.option('--test-labels', help='IDX test label file (.gz allowed).'),
        click.option('--train-count', type=int, default=9000, show_default=True,
                     help='Number of leading training records to use.'),
        click.option('--test-count', type=int, default=500, show_default=True,
                     help='Number of leading test records to use.'),
        click.option('--size', type=int, default=64, show_default=True,
                     help='Side length objects are resized to (even).'),
        click.option('--counts', callback=parse_counts,
                     help="""Comma separated, strictly ascending illumination counts.
                     Defaults to 1-20, then every 5 up to 200."""),
        click.option('--acquisition', type=click.Choice(sorted(ACQUISITIONS)),
                     default='fourier', show_default=True,
                     help='FFT-based acquisition or explicit pattern inner products.'),
        click.option('--workers', type=int, default=1, show_default=True,
                     help='Threads used to measure objects.'),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def build_config(params):
    """Build an ``ExperimentConfig`` from parsed flags.

    Args:
        params (dict): Parameters of a click context.

    Returns:
        ExperimentConfig: Validated configuration.

    Raises:
        click.UsageError: If file flags are missing or a value is out of range.
    """
    missing = ["--" + name.replace("_", "-") for name in PATH_FLAGS if params.get(name) is None]
    if missing:
        raise click.UsageError("Missing options: {0}.".format(", ".join(missing)))
    kwargs = {
        "train_count": params["train_count"],
        "test_count": params["test_count"],
        "image_size": params["size"],
        "illumination_counts": params["counts"] or DEFAULT_ILLUMINATION_COUNTS,
        "acquisition": params["acquisition"],
        "workers": params["workers"],
    }
    for key in ("smoothing", "out_csv", "dump_dir", "dump_n", "model_out"):
        if params.get(key) is not None:
            kwargs[key] = params[key]
    if params.get("dump_t") is not None:
        kwargs["dump_illuminations"] = params["dump_t"]
    try:
        return ExperimentConfig(*(params[name] for name in PATH_FLAGS), **kwargs)
    except (TypeError, ValueError) as e:
        raise click.UsageError(str(e))


@cli.command()
@data_options
@click.option('--smoothing', type=float, default=1e-9, show_default=True,
              help='Variance smoothing relative to the largest variance of each feature.')
@click.option('--out-csv', default='accuracy.csv', show_default=True,
              help='Where the accuracy curve is written.')
@click.option('--dump-dir', help='Directory for PGM reconstruction dumps. Skipped if not given.')
@click.option('--dump-n', type=int, default=15, show_default=True,
              help='Number of test objects to dump.')
@click.option('--dump-t', type=int, default=13, show_default=True,
              help='Illuminations used for dumped reconstructions.')
@click.option('--model-out', help='Save the fitted model as JSON.')
def curve(**params):
    r"""Classification accuracy versus number of illuminations.

    Run ``spibayes curve --help`` for info.

    \f

    Args:
        params: Parsed flags, see ``build_config``.

    Returns:
        None
    """
    config = build_config(params)
    experiment = Experiment(config)
    try:
        report = experiment.run_curve()
        write_curve_csv(report, config.out_csv)
        if config.dump_dir is not None:
            experiment.dump_reconstructions(config.dump_illuminations, config.dump_n,
                                            config.dump_dir)
    except (ValueError, OSError) as e:
        raise click.ClickException(str(e))
    click.echo("Wrote {n} points to {path} in {s:.1f}s".format(
        n=len(report), path=config.out_csv, s=report.elapsed_seconds))


@cli.command()
@data_options
@click.option('--out-csv', default='quality.csv', show_default=True,
              help='Where the reconstruction quality sweep is written.')
@click.option('-n', '--n-images', type=int, default=15, show_default=True,
              help='Number of leading test objects to reconstruct.')
def quality(out_csv, n_images, **params):
    r"""Reconstruction fidelity versus number of illuminations.

    \f

    Args:
        out_csv (str): Output CSV path.
        n_images (int): Number of leading test objects to reconstruct.
        params: Data flags, see ``build_config``.

    Returns:
        None
    """
    config = build_config(params)
    try:
        points = Experiment(config).quality_sweep(n_images=n_images)
        write_quality_csv(points, out_csv)
    except (ValueError, OSError) as e:
        raise click.ClickException(str(e))
    click.echo("Wrote {n} points to {path}".format(n=len(points), path=out_csv))


@cli.command()
@click.option('--size', type=int, default=64, show_default=True,
              help='Side length of the (square) object.')
@click.option('-n', '--count', type=int, default=13, show_default=True,
              help='Number of illuminations to list.')
def schedule(size, count):
    """Print the first scheduled illuminations as ``fu,fv,part`` lines."""
    try:
        samples = build_schedule(size, size, count)
    except (TypeError, ValueError) as e:
        raise click.UsageError(str(e))
    for sample in samples:
        click.echo("{fu},{fv},{part}".format(fu=sample.fu, fv=sample.fv,
                                              part=sample.part.value))


def parse_cli(argv):
    """Parse ``curve`` flags into an ``ExperimentConfig`` without running anything.

    Args:
        argv (list of str): Command line arguments after ``spibayes curve``.

    Returns:
        ExperimentConfig: Validated configuration.

    Raises:
        click.UsageError: On unknown flags, malformed values or missing file flags.
    """
    ctx = curve.make_context("curve", list(argv))
    return build_config(ctx.params)
