# -*- coding: utf-8 -*-
"""A module containing the base class for immutable typed records.

Reports, job documents and catalog entries are records: classes whose
annotated, public, non-constant attributes become type-checked properties
that can be assigned exactly once. A default __init__ is generated from the
annotations; annotated attributes with a class-level default are optional.

Classes:
    Record: A frozen record that checks the type of every field, implements
        the comparison operators, hash and a readable repr.

Functions:
    matches: Determine if a value matches a type hint.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    Any,
    Callable,
    Dict,
    List,
    Tuple,
    Union,
)
import collections.abc
import typing


__all__ = ("Record", "matches")


_MISSING = object()


def matches(value, hint):
    # type: (Any, Any) -> bool
    """Determine if a value matches a type hint.

    Supports Any, Optional and Union, the parameterized List, Tuple,
    Sequence and Dict hints, plain classes, and the validated types of
    ringrank.validation.

    Args:
        value: The value to test.
        hint: A class or a typing hint.

    Returns:
        True if the value is an instance of the hint.
    """
    if hint is Any:
        return True
    origin = typing.get_origin(hint)
    args = typing.get_args(hint)
    if origin is Union:
        return any(matches(value, arg) for arg in args)
    if origin in (list, collections.abc.Sequence):
        if not isinstance(value, origin) or isinstance(value, str):
            return False
        return not args or all(matches(item, args[0]) for item in value)
    if origin is tuple:
        if not isinstance(value, tuple):
            return False
        if not args:
            return True
        if len(args) == 2 and args[1] is Ellipsis:
            return all(matches(item, args[0]) for item in value)
        return len(value) == len(args) and all(
            matches(item, arg) for item, arg in zip(value, args)
        )
    if origin is dict:
        if not isinstance(value, dict):
            return False
        if not args:
            return True
        return all(
            matches(k, args[0]) and matches(v, args[1])
            for k, v in value.items()
        )
    if origin is not None:
        return isinstance(value, origin)
    if hint is type(None):
        return value is None
    if hint is int and isinstance(value, bool):
        return False
    return isinstance(value, hint)


def _get_type_name(type_):
    # type: (Any) -> str
    """Return a displayable name for the type.

    Args:
        type_: A class object or a typing hint.

    Returns:
        A string value describing the class name that can be used in a
        natural language sentence.
    """
    name = repr(type_)
    if name.startswith("<"):
        name = getattr(type_, "__qualname__", getattr(type_, "__name__", ""))
    return name.rsplit(".", 1)[-1] or repr(type_)


def _is_propertyable(attrs, annotations, attr):
    # type: (Dict[str, Any], Dict[str, Any], str) -> bool
    """Determine if an annotated attribute becomes a record field.

    Args:
        attrs: The attribute dict of the class being created.
        annotations: A mapping of all defined annotations for the class.
        attr: The attribute to test.

    Returns:
        True if the attribute is annotated, public, not a constant and not a
        method. Constants are upper-case names longer than one character, so
        matrix fields such as U and V stay fields.
    """
    return (
        attr in annotations
        and not attr.startswith("_")
        and not (attr.isupper() and len(attr) > 1)
        and not callable(attrs.get(attr))
    )


def _get_fget(attr, private_attr, type_):
    # type: (str, str, Any) -> Callable[[Any], Any]
    """Create a property getter method for an attribute."""

    def _fget(self):
        """Get attribute from self without revealing the private name."""
        try:
            return vars(self)[private_attr]
        except KeyError:
            raise AttributeError(
                "'{}' object has no attribute '{}'".format(
                    _get_type_name(type_), attr
                )
            )

    return _fget


def _get_fset(attr, private_attr, type_):
    # type: (str, str, Any) -> Callable[[Any, Any], None]
    """Create a property setter that assigns a matching value once.

    Args:
        attr: The name of the attribute to set.
        private_attr: The name of the attribute that stores the data.
        type_: The annotated type defining what values can be stored.

    Returns:
        A method that takes self and a value and stores that value on self
        in the private attribute iff the value matches type_ and the field
        has not been assigned yet.
    """

    def _fset(self, value):
        """Set the value on self iff it is the first, well-typed assignment.

        Raises:
            TypeError: Raised when the value does not match type_.
            AttributeError: Raised when the field was already assigned.
        """
        if private_attr in vars(self):
            raise AttributeError(
                "Cannot reassign field '{}' of a frozen {}.".format(
                    attr, type(self).__name__
                )
            )
        if not matches(value, type_):
            raise TypeError(
                "Cannot assign value of type {} to field '{}' of type "
                "{}.".format(
                    _get_type_name(type(value)), attr, _get_type_name(type_)
                )
            )
        vars(self)[private_attr] = value

    return _fset


class _RecordMeta(type):
    """A metaclass that reads annotations from a class definition."""

    def __new__(mcs, name, bases, attrs, **kwargs):
        # type: (type, str, Tuple[type, ...], Dict[str, Any], **Any) -> type
        """Create a class whose annotated attributes are frozen properties.

        Args:
            mcs: The metaclass.
            name: The name of the class to create.
            bases: The base classes for the new class.
            attrs: The attributes for the new class from the definition.

        Returns:
            A new class with annotated, public, non-constant, non-method
            attributes replaced by properties that validate against the
            annotated type. Field order follows the base classes first.
        """
        annotations = attrs.get("__annotations__", {})
        fields = []  # type: List[str]
        defaults = {}  # type: Dict[str, Any]
        for base in bases:
            for field in getattr(base, "_rr__fields", ()):
                if field not in fields:
                    fields.append(field)
            defaults.update(getattr(base, "_rr__defaults", {}))
        typed_attrs = dict(attrs)
        for attr, type_ in annotations.items():
            if not _is_propertyable(attrs, annotations, attr):
                continue
            if attr in attrs:
                default = attrs[attr]
                defaults[attr] = default
                if default is None:
                    type_ = typing.Optional[type_]
            private_attr = "_rr__{}".format(attr)
            typed_attrs[attr] = property(
                _get_fget(attr, private_attr, type_),
                _get_fset(attr, private_attr, type_),
            )
            if attr not in fields:
                fields.append(attr)
        typed_attrs["_rr__fields"] = tuple(fields)
        typed_attrs["_rr__defaults"] = defaults
        return super(_RecordMeta, mcs).__new__(
            mcs, name, bases, typed_attrs, **kwargs
        )


class Record(metaclass=_RecordMeta):
    """A base class to create frozen, typed instance attrs from annotations.

    For every class attribute that is annotated, public, and not constant in
    the subclasses, this base class generates a property that enforces the
    type of the value and allows a single assignment. A default __init__
    takes the fields as positional or keyword arguments; fields without a
    class-level default are required.

    >>> class Point(Record):
    ...     x: int
    ...     y: int = 0
    ...
    >>> Point(1)
    Point(x=1, y=0)
    >>> Point(1).x = 2
    Traceback (most recent call last):
        ...
    AttributeError: Cannot reassign field 'x' of a frozen Point.
    """

    def __init__(self, *args, **kwargs):
        """Set all fields according to their annotation status."""
        super(Record, self).__init__()
        fields = self._rr__fields
        if len(args) > len(fields):
            raise TypeError(
                "__init__() takes {} positional arguments but {} were "
                "given".format(len(fields), len(args))
            )
        for attr, value in zip(fields, args):
            if attr in kwargs:
                raise TypeError(
                    "__init__() got multiple values for argument '{}'".format(
                        attr
                    )
                )
            kwargs[attr] = value
        unknown = [attr for attr in kwargs if attr not in fields]
        if unknown:
            raise TypeError(
                "__init__() got an unexpected keyword argument '{}'".format(
                    unknown[0]
                )
            )
        missing = [
            attr
            for attr in fields
            if attr not in kwargs and attr not in self._rr__defaults
        ]
        if missing:
            num_missing = len(missing)
            if num_missing > 1:
                names = ", ".join("'{}'".format(m) for m in missing[:-1])
                if num_missing > 2:
                    names += ","
                names += " and '{}'".format(missing[-1])
            else:
                names = "'{}'".format(missing[0])
            raise TypeError(
                "__init__() missing {} required argument{}: {}".format(
                    num_missing, "s" if num_missing > 1 else "", names
                )
            )
        for attr in fields:
            value = kwargs.get(attr, _MISSING)
            if value is _MISSING:
                value = self._rr__defaults[attr]
            setattr(self, attr, value)

    def replace(self, **changes):
        # type: (**Any) -> Record
        """Return a copy of the record with some fields replaced."""
        values = {attr: getattr(self, attr) for attr in self._rr__fields}
        values.update(changes)
        return type(self)(**values)

    def _rr__values(self):
        # type: () -> Tuple[Any, ...]
        """Return a tuple of field values used for comparisons."""
        return tuple(getattr(self, attr) for attr in self._rr__fields)

    def __repr__(self):
        # type: () -> str
        """Return a Python readable representation of the record."""
        return "{}({})".format(
            self.__class__.__name__,
            ", ".join(
                "{}={!r}".format(attr, getattr(self, attr))
                for attr in self._rr__fields
            ),
        )

    def __eq__(self, other):
        """Test if two records of the same class are equal.

        If the objects are not of the same class, Python will default to
        comparison-by-ID.
        """
        if other.__class__ is not self.__class__:
            return NotImplemented
        return self._rr__values() == other._rr__values()

    def __ne__(self, other):
        """Test if two records of the same class are not equal."""
        if other.__class__ is not self.__class__:
            return NotImplemented
        return not self == other

    def __lt__(self, other):
        """Test if self is less than a record of the same class."""
        if other.__class__ is not self.__class__:
            return NotImplemented
        return self._rr__values() < other._rr__values()

    def __le__(self, other):
        """Test if self is less than or equal a record of the same class."""
        if other.__class__ is not self.__class__:
            return NotImplemented
        return self == other or self < other

    def __gt__(self, other):
        """Test if self is greater than a record of the same class."""
        if other.__class__ is not self.__class__:
            return NotImplemented
        return not self <= other

    def __ge__(self, other):
        """Test if self is greater than or equal a record of the same class."""
        if other.__class__ is not self.__class__:
            return NotImplemented
        return not self < other

    def __hash__(self):
        """Generate a hash for the record based on its fields."""
        return hash(self._rr__values())
