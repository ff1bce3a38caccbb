from dataclasses import dataclass

import numpy as np
from pytest import raises

from paraboloids import Descriptor, Validator, ValidatorError
from paraboloids.intervals import NumberLine


@dataclass(frozen=True)
class Tester:
    value: float = Descriptor.positive_float(include_zero=True)
    value2: int = Descriptor.is_int()
    value3: float = Descriptor.non_zero_float(default=1.5)


def test_validator():
    with raises(ValidatorError) as e:
        Validator.positive(include_zero=True)(-1, "test")
    assert isinstance(e.value.exceptions[0], ValueError)

    with raises(ValidatorError) as e:
        Validator.is_int()(1.46, "test")
    assert isinstance(e.value.exceptions[0], TypeError)

    assert Validator.is_int()(np.int64(3), "test") == 3
    assert isinstance(Validator.positive_float(include_zero=True)(1, "test"), float)
    Validator.positive_float(include_zero=True)(0.0, "test")


def test_direct_call():
    assert Validator.positive(True, 42, "somenumber") == 42
    with raises(ValidatorError) as e:
        Validator.positive(False, 0, "somenumber")
    assert str(e.value.exceptions[0]) == "0 should be bigger than 0"

    assert Validator.is_int(3, "n") == 3
    assert Validator.one_of(("c", "tilde"), "c", "space") == "c"
    with raises(ValidatorError):
        Validator.one_of(("c", "tilde"), "x", "space")
    with raises(ValidatorError):
        Validator.at_least_int(2, 1, "grid")


def test_combined_checks():
    with raises(ValidatorError) as e:
        Validator.non_zero_float()(0.0, "alpha")
    assert e.value.message == "alpha has incorrect value: 0.0"
    assert str(e.value.exceptions[0]) == "0.0 should not be equal to 0"

    with raises(ValidatorError):
        Validator.non_zero_float()(float("inf"), "alpha")
    with raises(ValidatorError):
        Validator.positive_float(False)(float("nan"), "beta")
    with raises(ValidatorError) as e:
        Validator.positive_float(False)("1.0", "beta")
    assert isinstance(e.value.exceptions[0], TypeError)

    ratio = Validator(number_line=NumberLine.include_from_floats(0, 1, False, False))
    assert ratio(0.5, "ratio") == 0.5
    with raises(ValidatorError):
        ratio(1.0, "ratio")

    with raises(ValueError, match="Number line is empty"):
        Validator.positive(False) + Validator(number_line=NumberLine.include_from_floats(end=-1))


def test_descriptor():
    with raises(ValidatorError) as e:
        Tester(value=-1.0, value2=1)
    assert isinstance(e.value.exceptions[0], ValueError)

    with raises(ValidatorError) as e:
        Tester(value=1.0, value2=1.46)
    assert isinstance(e.value.exceptions[0], TypeError)

    tester = Tester(value=0, value2=1)
    assert tester.value == 0.0
    assert isinstance(tester.value, float)
    assert tester.value2 == 1
    assert tester.value3 == 1.5
    assert tester == Tester(value=0.0, value2=1, value3=1.5)

    with raises(TypeError, match="missing required argument: 'value2'"):
        Tester(value=1.0)

    with raises(ValidatorError) as e:

        @dataclass
        class Tester2:
            value: int = Descriptor.is_int(default=1.5)

    assert isinstance(e.value.exceptions[0], TypeError)


if __name__ == "__main__":
    test_validator()
    test_direct_call()
    test_descriptor()
