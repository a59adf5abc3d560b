# -*- coding: utf-8 -*-
"""The primary test package."""
