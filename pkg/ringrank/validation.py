# -*- coding: utf-8 -*-
# pragma pylint: disable=bad-mcs-method-argument,bad-mcs-classmethod-argument
"""A module containing sliceable types that validate parameters.

Slicing one of the base types creates a new callable type. Calling it with a
value returns the value, coerced from a decimal string where that is exact,
or raises the error named in the slice. The created types also answer
isinstance checks, so they can be used as record annotations.

Classes:
    Uninstantiable: A metaclass that causes a class to be uninstantiable.
    Bounded: A sliceable type that checks a value against inclusive bounds.
    Valid: A sliceable type that checks a value against a predicate.

Types:
    Prime: A prime integer; raises NotPrime.
    Degree: An integer of at least 2; raises BadDegree.
    Positive: An integer of at least 1; raises ValueError.
    RingSizeCap: An integer of at least 1; raises SchemaError.
    NonUnitInteger: An integer other than 0, 1 and -1; raises UnitOrZeroX.
    JobFile: A path to an existing file; raises SchemaError.
"""

from __future__ import absolute_import
from __future__ import unicode_literals

from typing import (  # noqa: F401 pylint: disable=unused-import
    Any,
    Callable,
    Optional,
    Tuple,
    Type,
)
import os.path
import pathlib

from sympy import isprime

from .errors import BadDegree, NotPrime, SchemaError, UnitOrZeroX


__all__ = (
    "Uninstantiable",
    "Bounded",
    "Valid",
    "Prime",
    "Degree",
    "Positive",
    "RingSizeCap",
    "NonUnitInteger",
    "JobFile",
)


class Uninstantiable(type):
    """A metaclass that disallows instantiation."""

    def __call__(cls, *args, **kwargs):
        # type: (*Any, **Any) -> None
        """Do not allow the class to be instantiated."""
        raise TypeError("Type {} cannot be instantiated.".format(cls.__name__))


class _ValidationMeta(type):
    """A metaclass that handles custom type checks and reprs."""

    __class_repr__ = None  # type: Optional[str]
    __type__ = object  # type: type

    def __repr__(cls):
        # type: () -> str
        """Return a custom string for the type repr if defined."""
        if cls.__class_repr__:
            return cls.__class_repr__
        return super(_ValidationMeta, cls).__repr__()

    def __instancecheck__(cls, other):
        # type: (Any) -> bool
        """Determine if an instance is of the sliced type and valid.

        Args:
            other: The instance to test.

        Returns:
            True if the object is already of the sliced type and passes the
            validation of the created class; strings that would be coerced
            are not instances.
        """
        if not _is_exact_instance(other, cls.__type__):
            return False
        try:
            cls(other)
        except (TypeError, ValueError):
            return False
        return True


def _is_exact_instance(value, type_):
    # type: (Any, type) -> bool
    """Return True if value is of type_, refusing bools posing as ints."""
    if type_ is Any:
        return True
    if type_ is int and isinstance(value, bool):
        return False
    return isinstance(value, type_)


def _coerce(type_, value, error):
    # type: (type, Any, Type[Exception]) -> Any
    """Return value as an instance of type_ when that is exact.

    Decimal strings are accepted for integers and strings are accepted for
    paths; nothing else is converted.

    Args:
        type_: The type the value must have.
        value: The value to check or convert.
        error: The exception class to raise on failure.

    Returns:
        The value, converted if necessary.
    """
    if _is_exact_instance(value, type_):
        return value
    if type_ is int and isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    if type_ is pathlib.Path and isinstance(value, str):
        return pathlib.Path(value)
    raise error(
        "Expected a value of type {}, not {!r}.".format(
            _get_fullname(type_), value
        )
    )


def _get_fullname(obj):
    # type: (Any) -> str
    """Get the full name of an object including the module.

    Args:
        obj: An object.

    Returns:
        The full class name of the object.
    """
    if obj is Any:
        return "Any"
    if not hasattr(obj, "__name__"):
        obj = obj.__class__
    if obj.__module__ in ("builtins", "__builtin__"):
        return obj.__name__
    return "{}.{}".format(obj.__module__, obj.__name__)


def _is_error_class(obj):
    # type: (Any) -> bool
    """Return True if obj can be raised as a validation error."""
    return isinstance(obj, type) and issubclass(obj, Exception)


class _BoundedMeta(Uninstantiable):
    """A metaclass that adds slicing to a class that creates new classes."""

    def __getitem__(cls, args):
        # type: (tuple) -> type
        """Create a new type that validates values against the arguments.

        Args:
            args: A tuple with two to four elements: a type, a slice of the
                inclusive minimum and maximum allowed values, optionally a
                function applied to values before comparing them against the
                bounds, and optionally the exception class to raise.
        """
        type_, bound, keyfunc, error = cls._get_args(args)
        keyfunc_name = _get_fullname(keyfunc)
        identity = cls._identity

        class _ValidatedValue(metaclass=_ValidationMeta):
            """A type whose instantiation validates and returns its value."""

            def __new__(kls, __value):
                # type: (Type[_ValidatedValue], Any) -> Any
                """Return __value after validating it.

                Args:
                    __value: A value of the sliced type, or a string that
                        converts exactly to one.
                """
                value = _coerce(type_, __value, error)
                cmp_val = keyfunc(value)
                if bound.start is not None or bound.stop is not None:
                    if bound.start is not None and cmp_val < bound.start:
                        if keyfunc is not identity:
                            raise error(
                                "The value of {}({}) [{}] is below the minimum"
                                " allowed value of {}.".format(
                                    keyfunc_name,
                                    repr(value),
                                    repr(cmp_val),
                                    bound.start,
                                )
                            )
                        raise error(
                            "The value {} is below the minimum allowed value "
                            "of {}.".format(repr(value), bound.start)
                        )
                    if bound.stop is not None and cmp_val > bound.stop:
                        if keyfunc is not identity:
                            raise error(
                                "The value of {}({}) [{}] is above the maximum"
                                " allowed value of {}.".format(
                                    keyfunc_name,
                                    repr(value),
                                    repr(cmp_val),
                                    bound.stop,
                                )
                            )
                        raise error(
                            "The value {} is above the maximum allowed value "
                            "of {}.".format(repr(value), bound.stop)
                        )
                elif not cmp_val:
                    raise error(
                        "{}({}) is False".format(keyfunc_name, repr(value))
                    )
                return value

        _ValidatedValue.__type__ = type_
        _ValidatedValue.__class_repr__ = cls._get_class_repr(
            type_, bound, keyfunc, keyfunc_name
        )
        return _ValidatedValue

    def _get_args(cls, args):
        # type: (tuple) -> Tuple[Any, slice, Callable, Type[Exception]]
        """Return the parameters necessary to validate values.

        Args:
            args: A tuple with two to four elements: a type, a slice, an
                optional key function and an optional exception class.

        Returns:
            A tuple with four elements: a type, a slice, a function to apply
            to values and the exception class to raise. If no function was
            specified, the identity function is returned; if no exception
            class was specified, ValueError is returned.
        """
        if not isinstance(args, tuple) or not 2 <= len(args) <= 4:
            raise TypeError(
                "{}[...] takes two to four arguments.".format(cls.__name__)
            )
        type_, bound = args[:2]
        keyfunc = cls._identity  # type: Callable[[Any], Any]
        error = ValueError  # type: Type[Exception]
        for extra in args[2:]:
            if _is_error_class(extra):
                error = extra
            elif callable(extra):
                keyfunc = extra
            else:
                raise TypeError(
                    "{}[...] got an argument that is neither a function nor "
                    "an exception class: {!r}".format(cls.__name__, extra)
                )
        if not isinstance(bound, slice):
            bound = slice(bound)
        return type_, bound, keyfunc, error

    def _get_class_repr(cls, type_, bound, keyfunc, keyfunc_name):
        # type: (Any, slice, Callable, str) -> str
        """Return a class representation using the slice parameters.

        Args:
            type_: The type the class was sliced with.
            bound: The boundaries specified for the values of type_.
            keyfunc: The comparison function used to check the value
                boundaries.
            keyfunc_name: The name of keyfunc.

        Returns:
            A string representing the class.
        """
        if keyfunc is not cls._identity:
            return "{}.{}[{}, {}, {}]".format(
                cls.__module__,
                cls.__name__,
                _get_fullname(type_),
                cls._get_bound_repr(bound),
                keyfunc_name,
            )
        return "{}.{}[{}, {}]".format(
            cls.__module__,
            cls.__name__,
            _get_fullname(type_),
            cls._get_bound_repr(bound),
        )

    @staticmethod
    def _get_bound_repr(bound):
        # type: (slice) -> str
        """Return a string representation of a boundary slice."""
        start = "" if bound.start is None else bound.start
        stop = "" if bound.stop is None else bound.stop
        return "{}:{}".format(start, stop)

    @staticmethod
    def _identity(obj):
        # type: (Any) -> Any
        """Return the given object."""
        return obj


class Bounded(metaclass=_BoundedMeta):
    """A type that creates a bounded version of a type when sliced.

    Bounded can be sliced with two to four elements: a type, a slice of the
    inclusive minimum and maximum values, optionally a function to apply to
    values before comparing against the bounds, and optionally the exception
    class to raise.

    >>> Bounded[int, 2:](3)
    3
    >>> Bounded[int, 2:]("5")
    5
    >>> Bounded[int, 2:, BadDegree](1)
    Traceback (most recent call last):
        ...
    ringrank.errors.BadDegree: The value 1 is below the minimum allowed ...
    """


class _ValidationBoundedMeta(_BoundedMeta):
    """A metaclass that binds a type to a validation predicate."""

    def _get_args(cls, args):
        # type: (Any) -> Tuple[Any, slice, Callable, Type[Exception]]
        """Return the parameters necessary to validate values.

        Args:
            args: A predicate, or a tuple of a type and a predicate, or a
                tuple of a type, a predicate and an exception class.

        Returns:
            A tuple with four elements: a type, an empty slice, the predicate
            and the exception class. If no type was passed, it defaults to
            Any.
        """
        if isinstance(args, tuple):
            if len(args) == 2:
                return super(_ValidationBoundedMeta, cls)._get_args(
                    (args[0], None, args[1])
                )
            if len(args) == 3 and _is_error_class(args[2]):
                return super(_ValidationBoundedMeta, cls)._get_args(
                    (args[0], None, args[1], args[2])
                )
            raise TypeError(
                "{}[...] takes one to three arguments.".format(cls.__name__)
            )
        return super(_ValidationBoundedMeta, cls)._get_args((Any, None, args))

    def _get_class_repr(cls, type_, bound, keyfunc, keyfunc_name):
        # type: (Any, slice, Callable, str) -> str
        """Return a class representation using the slice parameters."""
        if type_ is not Any:
            return "{}.{}[{}, {}]".format(
                cls.__module__,
                cls.__name__,
                _get_fullname(type_),
                keyfunc_name,
            )
        return "{}.{}[{}]".format(cls.__module__, cls.__name__, keyfunc_name)


class Valid(metaclass=_ValidationBoundedMeta):
    """A type that creates a type that is validated against a function.

    Valid can be sliced with one to three parameters: an optional type to
    check the given value against, a validation predicate, and an optional
    exception class.

    >>> Valid[int, lambda n: n % 2 == 0](4)
    4
    """


def _alias(name, new_type):
    # type: (str, type) -> type
    """Give a created type a short repr under this module."""
    setattr(new_type, "__class_repr__", "{}.{}".format(__name__, name))
    return new_type


def is_prime(value):
    # type: (int) -> bool
    """Determine if an integer is a prime number."""
    return bool(isprime(value))


def is_nonunit(value):
    # type: (int) -> bool
    """Determine if an integer is neither zero nor a unit of Z."""
    return value not in (0, 1, -1)


def is_file(path):
    # type: (pathlib.Path) -> bool
    """Determine if a Path is a file on the file system."""
    return os.path.isfile(os.path.abspath(os.path.expanduser(str(path))))


Prime = _alias("Prime", Valid[int, is_prime, NotPrime])
Degree = _alias("Degree", Bounded[int, 2:, BadDegree])
Positive = _alias("Positive", Bounded[int, 1:])
RingSizeCap = _alias("RingSizeCap", Bounded[int, 1:, SchemaError])
NonUnitInteger = _alias("NonUnitInteger", Valid[int, is_nonunit, UnitOrZeroX])
JobFile = _alias("JobFile", Valid[pathlib.Path, is_file, SchemaError])
