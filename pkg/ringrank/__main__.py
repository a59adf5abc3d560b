# -*- coding: utf-8 -*-
"""Run the ringrank command line with python -m ringrank."""

from __future__ import absolute_import

import sys

from .cli import main


if __name__ == "__main__":
    sys.exit(main())
