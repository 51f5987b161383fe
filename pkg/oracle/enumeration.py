"""
Exact accuracy moments under the flip model by visiting every flip vector.
"""

import math
from itertools import product
from typing import Tuple

from config.logging_conf import get_logger
from config.settings import NUMERICS
from metrics.classification import accuracy_with_flipped_labels
from metrics.models import ClassificationDataset
from utils.errors import ValidationError

logger = get_logger(__name__)


def enumerate_flip_moments(ds: ClassificationDataset) -> Tuple[float, float, int]:
    """Probability-weighted mean and variance of accuracy over all 2^M flip vectors.

    A vector with k kept labels has probability p^k q^(M-k).
    Returns (expected, variance, n_vectors).
    """
    m = ds.size
    if m > NUMERICS.max_enumeration_size:
        raise ValidationError(
            f"exhaustive enumeration is limited to {NUMERICS.max_enumeration_size} observations, got {m}"
        )
    model = ds.flip_model
    weighted = []
    for bits in product((1, 0), repeat=m):
        kept = sum(bits)
        weight = model.p ** kept * model.q ** (m - kept)
        weighted.append((weight, accuracy_with_flipped_labels(ds, bits)))

    expected = math.fsum(w * a for w, a in weighted)
    variance = math.fsum(w * (a - expected) ** 2 for w, a in weighted)
    logger.debug("enumerated %d flip vectors for M=%d", len(weighted), m)
    return expected, variance, len(weighted)
