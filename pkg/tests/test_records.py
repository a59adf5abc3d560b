# -*- coding: utf-8 -*-
"""Tests for frozen typed records."""

from __future__ import unicode_literals

from typing import Callable, Dict, List, Optional, Tuple, Union

import pytest

from ringrank.records import Record, matches
from ringrank.validation import Prime


def test_record():
    """Simple test to verify basic Record functionality."""

    class X(Record):
        x: str

    x = X("initial")
    assert isinstance(x.x, str)
    assert x.x == "initial"
    with pytest.raises(AttributeError):
        x.x = "hello"
    with pytest.raises(TypeError):
        X(5)
    with pytest.raises(TypeError):
        X()


def test_record_with_default():
    """Test that a Record uses a default value."""

    class X(Record):
        x: int = 5

    assert X().x == 5
    assert X(7).x == 7


def test_none_default_is_optional():
    """Verify that a None default makes a field optional."""

    class X(Record):
        x: int = None

    assert X().x is None
    assert X(3).x == 3
    with pytest.raises(TypeError):
        X("not an integer")


def test_bool_is_not_int():
    """Test that booleans do not pass as integer fields."""

    class X(Record):
        x: int

    with pytest.raises(TypeError):
        X(True)


def test_validated_field():
    """Test that validated types work as annotations."""

    class X(Record):
        p: Prime

    assert X(5).p == 5
    with pytest.raises(TypeError):
        X(6)


def test_init_arguments():
    """Test the argument errors of the generated __init__."""

    class X(Record):
        a: int
        b: int
        c: int = 0

    assert X(1, b=2) == X(1, 2, 0)
    with pytest.raises(TypeError) as info:
        X()
    assert "missing 2 required arguments: 'a' and 'b'" in str(info.value)
    with pytest.raises(TypeError):
        X(1, 2, 3, 4)
    with pytest.raises(TypeError):
        X(1, a=1, b=2)
    with pytest.raises(TypeError):
        X(1, 2, d=4)


def test_comparisons_and_hash():
    """Test equality, ordering and hashing of records."""

    class X(Record):
        a: int
        b: str = ""

    assert X(1) == X(1, "")
    assert X(1) != X(2)
    assert X(1) < X(2)
    assert X(2, "b") > X(2, "a")
    assert X(1) <= X(1)
    assert X(3) >= X(1)
    assert len({X(1), X(1), X(2)}) == 2
    assert repr(X(1, "b")) == "X(a=1, b='b')"
    assert X(1).replace(b="c") == X(1, "c")


def test_inherited_fields():
    """Test that subclasses extend the fields of their bases."""

    class Base(Record):
        a: int

    class Child(Base):
        b: int = 2

    child = Child(1)
    assert (child.a, child.b) == (1, 2)
    assert repr(child) == "Child(a=1, b=2)"


def test_constants_and_methods_are_not_fields():
    """Test that upper-case and private attributes stay plain."""

    class X(Record):
        LIMIT: int = 3
        _cache: Dict[int, int] = {}
        a: int

    assert X(1).a == 1
    assert X.LIMIT == 3


def test_single_letter_upper_case_fields():
    """Test that one-letter capital names are fields, not constants."""

    class X(Record):
        LIMIT: int = 3
        U: int
        V: int
        U_inverse: int = 0

    x = X(U=1, V=2)
    assert (x.U, x.V, x.U_inverse) == (1, 2, 0)
    assert repr(x) == "X(U=1, V=2, U_inverse=0)"
    with pytest.raises(AttributeError):
        x.U = 5
    with pytest.raises(TypeError):
        X(U=1, V=2, LIMIT=4)


def test_matches():
    """Test type hint matching."""
    assert matches((1, 2), Tuple[int, ...])
    assert not matches((1, "2"), Tuple[int, ...])
    assert matches((1, "2"), Tuple[int, str])
    assert not matches([1], Tuple[int])
    assert matches([1, 2], List[int])
    assert not matches("ab", List[str])
    assert matches({"a": 1}, Dict[str, int])
    assert matches(None, Optional[int])
    assert matches("a", Union[int, str])
    assert matches(len, Callable)
    assert not matches(3, Callable)
    assert not matches(False, int)
