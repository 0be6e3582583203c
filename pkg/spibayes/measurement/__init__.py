from spibayes.measurement.acquisition import (AbstractAcquisition,  # noqa:F401
                                              FourierAcquisition, PatternAcquisition,
                                              measure_batch, measure_sequence)
from spibayes.measurement.patterns import dft_coefficient, generate_pattern  # noqa:F401
from spibayes.measurement.reconstruction import (assemble_spectrum,  # noqa:F401
                                                 reconstruct, reconstruction_correlation)
from spibayes.measurement.schedule import (FrequencySample, Part,  # noqa:F401
                                           SamplingSchedule, build_schedule,
                                           is_self_conjugate, validate_sample)
