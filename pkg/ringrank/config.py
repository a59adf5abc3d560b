# -*- coding: utf-8 -*-
"""A module containing configuration defaults and their resolution.

Constants:
    DEFAULT_MAX_RING_SIZE: The default cap on rings handled by brute force.
    DEFAULT_NILPOTENCY_CAP: The default cap for elementwise nilpotency.
    DEFAULT_HILBERT_CAP: The default number of Hilbert values computed by e_p.
    HILBERT_STABLE_RUN: The number of equal consecutive Hilbert values that
        declares the multiplicity stable.
    MAX_RING_SIZE_ENV: The environment variable that overrides the ring cap.

Functions:
    max_ring_size: Resolve the ring size cap from an override, the
        environment, or the default.
"""

from __future__ import unicode_literals

from typing import Optional  # noqa: F401 pylint: disable=unused-import
import logging
import os

from .errors import SchemaError
from .validation import RingSizeCap


__all__ = (
    "DEFAULT_MAX_RING_SIZE",
    "DEFAULT_NILPOTENCY_CAP",
    "DEFAULT_HILBERT_CAP",
    "HILBERT_STABLE_RUN",
    "MAX_RING_SIZE_ENV",
    "max_ring_size",
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_RING_SIZE = 4096
DEFAULT_NILPOTENCY_CAP = 4096
DEFAULT_HILBERT_CAP = 24
HILBERT_STABLE_RUN = 3
MAX_RING_SIZE_ENV = "RINGRANK_MAX_RING_SIZE"


def max_ring_size(override=None):
    # type: (Optional[int]) -> int
    """Return the ring size cap used by brute-force operations.

    Args:
        override: An explicit cap, typically from the command line or a job
            document. It takes precedence over the environment.

    Returns:
        The override if given, else the value of RINGRANK_MAX_RING_SIZE if
        set, else DEFAULT_MAX_RING_SIZE.

    Raises:
        SchemaError: Raised when the override or the environment value is not
            a positive integer.
    """
    if override is not None:
        return RingSizeCap(override)
    raw = os.environ.get(MAX_RING_SIZE_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_MAX_RING_SIZE
    try:
        value = int(raw.strip())
    except ValueError:
        raise SchemaError(
            "{} must be a positive integer, not {!r}.".format(
                MAX_RING_SIZE_ENV, raw
            )
        )
    logger.debug("ring size cap %d taken from %s", value, MAX_RING_SIZE_ENV)
    return RingSizeCap(value)
