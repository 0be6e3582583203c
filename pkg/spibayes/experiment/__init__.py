from spibayes.experiment.config import (DEFAULT_ILLUMINATION_COUNTS,  # noqa:F401
                                        ExperimentConfig)
from spibayes.experiment.pgm import read_pgm, write_pgm  # noqa:F401
from spibayes.experiment.report import (CurvePoint, ExperimentReport,  # noqa:F401
                                        QualityPoint, read_curve_csv, write_curve_csv,
                                        write_quality_csv)
from spibayes.experiment.runner import (Experiment, dump_reconstructions,  # noqa:F401
                                        run_curve_experiment, run_quality_sweep)
