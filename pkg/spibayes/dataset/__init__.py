from spibayes.dataset.idx import (RawIdxSet, parse_idx_images,  # noqa:F401
                                  parse_idx_labels, read_idx_bytes, serialize_idx_images,
                                  serialize_idx_labels)
from spibayes.dataset.prepare import Dataset, LabeledImage, prepare_dataset  # noqa:F401
from spibayes.dataset.resize import resize_bilinear  # noqa:F401
