from __future__ import annotations

import inspect
import math
import numbers
from collections.abc import Callable
from typing import Self

from attrs import NOTHING

from ._errors import ValidatorError
from .intervals import NumberLine


def _as_int(value):
    if isinstance(value, numbers.Integral) and not isinstance(value, bool):
        return int(value)
    return value


def _as_float(value):
    if isinstance(value, numbers.Real) and not isinstance(value, bool):
        return float(value)
    return value


class BaseChecker:
    def __init__(
        self,
        default=NOTHING,
        number_line=NOTHING,
        types=NOTHING,
        converter=NOTHING,
        validators=NOTHING,
    ):
        """
        Parameters
        ----------
        default: any
            The default value of the attribute. Must be hashable.
        number_line: NumberLine
            The number line that the value must be on.
        types: tuple[type, ...] | type
            The types that the value must be.
        converter: Callable[[any], any]
            A function that converts the value before it is checked.
        validators: tuple[Callable[[any], Exception | None], ...] | Callable[[any], Exception | None]
            Functions returning an exception describing what is wrong with a value, or None when it is fine.

        Raises
        ------
        TypeError
            If one of the parameters has the wrong type.
        ValueError
            If `number_line` is empty.
        """
        if isinstance(types, type):
            types = (types,)
        if callable(validators) and not isinstance(validators, tuple):
            validators = (validators,)
        if (number_line is not NOTHING) and not isinstance(number_line, NumberLine):
            msg = f"`number_line` must be a NumberLine, not {type(number_line).__name__}"
            raise TypeError(msg)
        if (converter is not NOTHING) and not isinstance(converter, Callable):
            msg = f"`converter` must be callable, not {type(converter).__name__}"
            raise TypeError(msg)
        if (number_line is not NOTHING) and not number_line:
            msg = "Number line is empty"
            raise ValueError(msg)

        self._default = default
        self._number_line = number_line
        self._types = types
        self._converter = converter
        self._validators = validators

    def __add__(self, other: Self) -> Self:
        if not isinstance(other, self.__class__):
            msg = f"Cannot add {type(other)} to {self.__class__}"
            raise TypeError(msg)

        def add_values(a, b, name):
            if a is not NOTHING:
                if b is not NOTHING:
                    msg = f"Cannot add two {name}"
                    raise ValueError(msg)
                return a
            return b

        def add_tuples(a, b):
            if a is NOTHING:
                return b
            if b is NOTHING:
                return a
            return a + b

        if self._number_line is NOTHING or other._number_line is NOTHING:
            number_line = add_values(self._number_line, other._number_line, "number lines")
        else:
            number_line = self._number_line & other._number_line

        return self.__class__(
            default=add_values(self._default, other._default, "default values"),
            number_line=number_line,
            types=add_tuples(self._types, other._types),
            converter=add_values(self._converter, other._converter, "converters"),
            validators=add_tuples(self._validators, other._validators),
        )

    def _check_type(self, value):
        if (self._types is not NOTHING) and not isinstance(value, self._types):
            if len(self._types) == 1:
                msg = f"Value ({value}) must be of type {self._types[0].__name__}, found {type(value).__name__}"
            else:
                names = ", ".join(t.__name__ for t in self._types)
                msg = f"Value ({value}) must be one of the following types: ({names}), found {type(value).__name__}"
            return TypeError(msg)
        return None

    def _check_number_line(self, value):
        if self._number_line is NOTHING:
            return None
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            # The type check reports this one.
            return None
        return self._number_line.return_raise_check(value)

    def _check_validators(self, value):
        if self._validators is NOTHING:
            return None
        errors = []
        for validator in self._validators:
            try:
                error = validator(value)
            except Exception as e:  # noqa: BLE001
                msg = f"Validator named {validator.__name__} raised an exception: {e}"
                error = ValueError(msg)
            if error is not None:
                errors.append(error)
        if errors:
            return ValidatorError("Value did not pass all validators", errors)
        return None

    def _validate(self, value, name):
        errs = [
            err
            for err in (self._check_type(value), self._check_number_line(value), self._check_validators(value))
            if err is not None
        ]
        if errs:
            msg = f"{name} has incorrect value: {value}"
            raise ValidatorError(msg, errs)

    def _convert(self, value):
        if self._converter is NOTHING:
            return value
        return self._converter(value)

    def __repr__(self):
        return (
            f"{self.__class__.__name__}(Default={self._default}, NumberLine={self._number_line}, "
            f"Types={self._types}, Converter={self._converter}, Validators={self._validators})"
        )

    @classmethod
    def is_int(cls, **kwargs) -> Self:
        """
        Generate checker to check if the value is an int. Integral numbers such as numpy integers are converted.

        Returns
        -------
        Self
            A new instance of the class with the given checks and other parameters applied
        """
        return cls(types=(int,), converter=_as_int, **kwargs)

    @classmethod
    def is_float(cls, **kwargs) -> Self:
        """
        Generate checker to check if the value is a float. Ints and other real numbers are converted.

        Returns
        -------
        Self
            A new instance of the class with the given checks and other parameters applied
        """
        return cls(types=(float,), converter=_as_float, **kwargs)

    @classmethod
    def finite(cls, **kwargs) -> Self:
        def is_finite(value):
            if isinstance(value, (int, float)) and not math.isfinite(value):
                return ValueError(f"{value} should be finite")
            return None

        return cls(validators=(is_finite,), **kwargs)

    @classmethod
    def finite_float(cls, **kwargs) -> Self:
        return cls.is_float(**kwargs) + cls.finite()

    @classmethod
    def positive(cls, include_zero: bool, **kwargs) -> Self:
        """
        Generate checker to check if the value is positive.

        Parameters
        ----------
        include_zero: bool
            Whether zero passes the check.

        Returns
        -------
        Self
            A new instance of the class with the given checks and other parameters applied
        """
        return cls(number_line=NumberLine.positive(include_zero), **kwargs)

    @classmethod
    def positive_float(cls, include_zero: bool, **kwargs) -> Self:
        return cls.positive(include_zero, **kwargs) + cls.finite_float()

    @classmethod
    def positive_int(cls, include_zero: bool, **kwargs) -> Self:
        return cls.positive(include_zero, **kwargs) + cls.is_int()

    @classmethod
    def at_least_int(cls, minimum: int, **kwargs) -> Self:
        return cls(number_line=NumberLine.bigger_than_float(minimum), **kwargs) + cls.is_int()

    @classmethod
    def non_zero(cls, **kwargs) -> Self:
        return cls(number_line=NumberLine.non_zero(), **kwargs)

    @classmethod
    def non_zero_float(cls, **kwargs) -> Self:
        """
        Generate checker to check if the value is a finite float different from zero.

        Returns
        -------
        Self
            A new instance of the class with the given checks and other parameters applied
        """
        return cls.non_zero(**kwargs) + cls.finite_float()

    @classmethod
    def one_of(cls, options: tuple, **kwargs) -> Self:
        def is_option(value):
            if value not in options:
                return ValueError(f"Value ({value}) must be one of the following: {options}")
            return None

        return cls(validators=(is_option,), **kwargs)


class _DirectCallMeta(type):
    """
    Metaclass that lets the Validator generator functions be called with two extra trailing arguments, `value` and
    `name`, to validate directly without keeping a Validator instance around.
    """

    def __new__(cls, name, bases, dct):
        new_class = super().__new__(cls, name, bases, dct)
        for attribute in dir(new_class):
            if attribute.startswith("_"):
                continue
            func = getattr(new_class, attribute)
            if inspect.ismethod(func):
                setattr(new_class, attribute, _DirectCallMeta._combine_call(func))
        return new_class

    @staticmethod
    def _combine_call(func):
        parameters = [
            p for p in inspect.signature(func).parameters.values() if p.kind not in (p.VAR_KEYWORD, p.VAR_POSITIONAL)
        ]
        num_parameters = len(parameters)

        def call(_cls, *args, **kwargs):
            if "value" in kwargs and "name" in kwargs:
                value, name = kwargs.pop("value"), kwargs.pop("name")
                return func(*args, **kwargs)(value, name)
            if len(args) + len(kwargs) > num_parameters:
                return func(*args[:-2], **kwargs)(*args[-2:])
            return func(*args, **kwargs)

        call.__name__ = func.__name__
        call.__doc__ = func.__doc__
        return classmethod(call)


class Validator(BaseChecker, metaclass=_DirectCallMeta):
    def __call__(self, value, name):
        """
        Convert and validate `value`, returning the converted value.

        Raises
        ------
        ValidatorError
        """
        value = self._convert(value)
        self._validate(value, name)
        return value


class Descriptor(BaseChecker):
    """
    Checked attribute for (frozen) dataclasses. Values are converted, validated and then stored on the instance under
    a private name.
    """

    def __set_name__(self, owner, name):
        if self._default is not NOTHING:
            self._validate(self._convert(self._default), f"Default value for `{name}`")
        self.owner = owner
        self.name = name
        self.private_name = f"_{name}"

    def __get__(self, instance, owner=None):
        if instance is None:
            return self
        return getattr(instance, self.private_name)

    def __set__(self, instance, value):
        if value is self:
            # The dataclass passes the descriptor itself when the argument was omitted.
            if self._default is NOTHING:
                msg = f"{type(instance).__name__}() missing required argument: '{self.name}'"
                raise TypeError(msg)
            value = self._default
        value = self._convert(value)
        self._validate(value, self.name)
        object.__setattr__(instance, self.private_name, value)
