# -*- coding: utf-8 -*-
# pragma pylint: disable=wildcard-import
"""Contains all ringrank classes and functions."""

from __future__ import unicode_literals

from .errors import *  # noqa: F401
from .validation import *  # noqa: F401
from .records import *  # noqa: F401
from .config import *  # noqa: F401
from .latcore import *  # noqa: F401
from .orders import *  # noqa: F401
from .finring import *  # noqa: F401
from .invariants import *  # noqa: F401
from .constructions import *  # noqa: F401
from .corpus import *  # noqa: F401
from .schema import *  # noqa: F401
