from __future__ import annotations

import math


class Bound:
    value: float
    inclusive: bool

    def __init__(self, value, inclusive):
        """
        One end of an interval on the real line.

        Attributes
        ----------
        value: float | int
            The position of the bound.
        inclusive: bool
            Whether the position itself belongs to the interval. Infinite bounds are always stored as inclusive, so
            that infinity compares equal to infinity.
        """
        if math.isinf(value):
            inclusive = True
        self.value = value
        self.inclusive = inclusive

    @staticmethod
    def infinity() -> Bound:
        return Bound(math.inf, True)

    @staticmethod
    def minus_infinity() -> Bound:
        return Bound(-math.inf, True)

    def __eq__(self, other: Bound | float) -> bool:
        if isinstance(other, Bound):
            return (self.value == other.value) and (self.inclusive == other.inclusive)
        if isinstance(other, (int, float)):
            return self.inclusive and self.value == other
        return NotImplemented

    def __le__(self, other: float) -> bool:
        if isinstance(other, (int, float)):
            return self.value < other or self == other
        return NotImplemented

    def __ge__(self, other: float) -> bool:
        if isinstance(other, (int, float)):
            return self.value > other or self == other
        return NotImplemented

    def __repr__(self):
        return f"Bound({self.value}, {self.inclusive})"


MinusInfinity = Bound.minus_infinity()
Infinity = Bound.infinity()


class Range:
    def __init__(self, lower: Bound, upper: Bound):
        """
        A connected set of reals between two bounds.

        Raises
        ------
        ValueError
            If the range would be empty.
        """
        if (lower.value > upper.value) or (
            lower.value == upper.value and not (lower.inclusive and upper.inclusive)
        ):
            msg = f"Lower bound ({lower.value}) must lie below upper bound ({upper.value})"
            raise ValueError(msg)
        self.lower = lower
        self.upper = upper

    def __contains__(self, item: float) -> bool:
        return (self.lower <= item) and (self.upper >= item)

    def __and__(self, other: Range) -> Range | None:
        """Intersection of two ranges, None when they do not overlap."""
        if not isinstance(other, Range):
            return NotImplemented

        def pick(a: Bound, b: Bound, larger: bool) -> Bound:
            if a.value == b.value:
                return Bound(a.value, a.inclusive and b.inclusive)
            if (a.value > b.value) == larger:
                return a
            return b

        lower = pick(self.lower, other.lower, larger=True)
        upper = pick(self.upper, other.upper, larger=False)
        try:
            return Range(lower, upper)
        except ValueError:
            return None

    def __eq__(self, other: Range) -> bool:
        if not isinstance(other, Range):
            return NotImplemented
        return self.lower == other.lower and self.upper == other.upper

    def __repr__(self):
        return f"Range({self.lower}, {self.upper})"

    def __str__(self):
        lower = "[" if self.lower.inclusive and self.lower.value != MinusInfinity.value else "]"
        upper = "]" if self.upper.inclusive and self.upper.value != Infinity.value else "["
        return f"{lower}{self.lower.value}, {self.upper.value}{upper}"


FullRange = Range(MinusInfinity, Infinity)


class NumberLine:
    def __init__(self, ranges: list[Range] | Range = FullRange):
        """
        A union of ranges. A value is on the number line when it lies in any of the ranges.

        Parameters
        ----------
        ranges:
            The ranges which constitute the number line. Empty ranges are not representable; an empty list gives the
            empty number line.
        """
        if isinstance(ranges, Range):
            self.ranges = [ranges]
        elif isinstance(ranges, (list, tuple)):
            self.ranges = sorted(ranges, key=lambda r: (r.lower.value, not r.lower.inclusive))
        else:
            msg = f"`NumberLine` can only be created with `Range` or a list of `Range`, not {type(ranges).__name__}"
            raise TypeError(msg)

    def check(self, value: float) -> bool:
        """
        Check if a value is on the number line.

        Raises
        ------
        TypeError
            If the value is not an int or a float.
        """
        if not isinstance(value, (int, float)):
            msg = f"Cannot check for type {type(value).__name__} in NumberLine, only int and float are allowed"
            raise TypeError(msg)
        return any(value in range_ for range_ in self.ranges)

    __contains__ = check

    def return_raise_check(self, value) -> ValueError | None:
        """
        Return (not raise) a ValueError describing why the value is not on the number line, or None.

        Returns
        -------
        ValueError | None
        """
        if self.check(value):
            return None
        if not self.ranges:
            return ValueError(f"{value} cannot be on an empty number line")
        if len(self.ranges) == 1:
            only = self.ranges[0]
            if only.lower == MinusInfinity:
                or_equal = "or equal to " if only.upper.inclusive else ""
                return ValueError(f"{value} should be smaller than {or_equal}{only.upper.value}")
            if only.upper == Infinity:
                or_equal = "or equal to " if only.lower.inclusive else ""
                return ValueError(f"{value} should be bigger than {or_equal}{only.lower.value}")
            return ValueError(f"{value} should be in the range {only}")
        if self._is_punctured():
            return ValueError(f"{value} should not be equal to {self.ranges[0].upper.value}")
        return ValueError(f"{value} should be in: {self}")

    def _is_punctured(self) -> bool:
        # The real line with a single point removed.
        if len(self.ranges) != 2:
            return False
        left, right = self.ranges
        return (
            left.lower == MinusInfinity
            and right.upper == Infinity
            and left.upper.value == right.lower.value
            and not left.upper.inclusive
            and not right.lower.inclusive
        )

    def __and__(self, other: NumberLine) -> NumberLine:
        if not isinstance(other, NumberLine):
            return NotImplemented
        overlaps = [a & b for a in self.ranges for b in other.ranges]
        return NumberLine([r for r in overlaps if r is not None])

    def __bool__(self) -> bool:
        return bool(self.ranges)

    def __repr__(self):
        return f"NumberLine({self.ranges})"

    def __str__(self):
        return f"NumberLine({', '.join(str(range_) for range_ in self.ranges)})"

    @staticmethod
    def include_from_floats(start=-math.inf, end=math.inf, start_inclusive=True, end_inclusive=True):
        """
        Create a number line including all values between `start` and `end`.

        Parameters
        ----------
        start: int | float
        end: int | float
        start_inclusive: bool
        end_inclusive: bool

        Returns
        -------
        NumberLine
        """
        return NumberLine(Range(Bound(start, start_inclusive), Bound(end, end_inclusive)))

    @staticmethod
    def exclude_from_floats(start, end, start_inclusive=True, end_inclusive=True):
        """
        Create a number line excluding all values between `start` and `end`. With `start == end` and both flags set,
        a single point is removed.

        Parameters
        ----------
        start: int | float
        end: int | float
        start_inclusive: bool
            Whether `start` itself is excluded.
        end_inclusive: bool
            Whether `end` itself is excluded.

        Returns
        -------
        NumberLine
        """
        left = Range(MinusInfinity, Bound(start, not start_inclusive))
        right = Range(Bound(end, not end_inclusive), Infinity)
        return NumberLine([left, right])

    @staticmethod
    def bigger_than_float(value: float, inclusive=True):
        return NumberLine.include_from_floats(start=value, start_inclusive=inclusive)

    @staticmethod
    def positive(include_zero=True):
        """
        Create a number line including all positive values.

        Parameters
        ----------
        include_zero: bool
            Whether to include zero.

        Returns
        -------
        NumberLine
        """
        return NumberLine.bigger_than_float(0, include_zero)

    @staticmethod
    def non_zero():
        return NumberLine.exclude_from_floats(0, 0, True, True)


# Admissible multipliers for the non-degenerate projection case.
MULTIPLIER_INTERVAL = NumberLine.include_from_floats(-1.0, 1.0, start_inclusive=False, end_inclusive=False)
