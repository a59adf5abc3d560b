# -*- coding: utf-8 -*-
"""Tests for validated parameter types."""

from __future__ import unicode_literals

from typing import Any
import os.path
import pathlib
import uuid

import pytest

from ringrank.errors import (
    BadDegree,
    InputError,
    NotPrime,
    SchemaError,
    UnitOrZeroX,
)
from ringrank import validation


def test_bounded_type():
    """Test the bounded type object."""
    with pytest.raises(TypeError):
        BoundedInt = validation.Bounded[int]
    with pytest.raises(TypeError):
        BoundedInt = validation.Bounded[int, 10:20, lambda x: x, None]
    BoundedInt = validation.Bounded[int, 10:20]
    with pytest.raises(ValueError):
        BoundedInt(5)
    assert BoundedInt(10) == 10
    assert BoundedInt(15) == 15
    assert BoundedInt(20) == 20
    with pytest.raises(ValueError):
        BoundedInt(25)
    BoundedStr = validation.Bounded[str, 1:5, len]
    with pytest.raises(ValueError):
        BoundedStr("")
    assert BoundedStr("abc") == "abc"
    with pytest.raises(ValueError):
        BoundedStr("abcdef")
    assert str(BoundedInt) == "ringrank.validation.Bounded[int, 10:20]"
    assert validation.Bounded[Any, 10:20](15) == 15
    assert validation.Bounded[int, 10:](15) == 15


def test_bounded_coercion():
    """Test that only exact decimal strings are converted to integers."""
    BoundedInt = validation.Bounded[int, 1:]
    assert BoundedInt("12") == 12
    assert BoundedInt(" 7 ") == 7
    with pytest.raises(ValueError):
        BoundedInt("1.5")
    with pytest.raises(ValueError):
        BoundedInt(2.0)
    with pytest.raises(ValueError):
        BoundedInt(True)


def test_bounded_error_class():
    """Test that a sliced exception class is raised on failure."""
    Small = validation.Bounded[int, :3, SchemaError]
    assert Small(3) == 3
    with pytest.raises(SchemaError):
        Small(4)
    with pytest.raises(SchemaError):
        Small("four")


def test_validation_type():
    """Test that the validation type validates content."""
    ValidFile = validation.Valid[os.path.isfile]
    assert ValidFile(__file__) == __file__
    Even = validation.Valid[int, lambda n: n % 2 == 0]
    assert Even(4) == 4
    with pytest.raises(ValueError):
        Even(3)
    with pytest.raises(TypeError):
        validation.Valid[int, int, int]


def test_prime():
    """Test the Prime type."""
    assert validation.Prime(7) == 7
    assert validation.Prime("7") == 7
    with pytest.raises(NotPrime):
        validation.Prime(8)
    with pytest.raises(NotPrime):
        validation.Prime(1)
    with pytest.raises(NotPrime):
        validation.Prime(True)
    assert issubclass(NotPrime, ValueError)
    assert repr(validation.Prime) == "ringrank.validation.Prime"


def test_parameter_aliases():
    """Test the errors raised by the parameter types."""
    assert validation.Degree(2) == 2
    with pytest.raises(BadDegree):
        validation.Degree(1)
    assert validation.Positive(1) == 1
    with pytest.raises(ValueError):
        validation.Positive(0)
    with pytest.raises(SchemaError):
        validation.RingSizeCap(0)
    assert validation.NonUnitInteger(-6) == -6
    for x in (0, 1, -1):
        with pytest.raises(UnitOrZeroX):
            validation.NonUnitInteger(x)
    assert issubclass(UnitOrZeroX, InputError)


def test_job_file():
    """Test that job files must exist."""
    assert validation.JobFile(__file__) == pathlib.Path(__file__)
    with pytest.raises(SchemaError):
        validation.JobFile(str(uuid.uuid4()))
    with pytest.raises(SchemaError):
        validation.JobFile(os.path.dirname(__file__))


def test_uninstantiable():
    """Test that an uninstantiable class cannot be instantiated."""

    class TestClass(metaclass=validation.Uninstantiable):
        pass

    with pytest.raises(TypeError):
        TestClass()
    with pytest.raises(TypeError):
        validation.Bounded()


def test_isinstance():
    """Test that instances of sliced type are instances of validation type."""
    Exponent = validation.Bounded[int, 0:150]
    assert isinstance(25, Exponent) is True
    assert isinstance(-5, Exponent) is False
    assert isinstance(200, Exponent) is False
    assert isinstance("25", Exponent) is False
    assert isinstance(5, validation.Prime) is True
    assert isinstance(6, validation.Prime) is False
