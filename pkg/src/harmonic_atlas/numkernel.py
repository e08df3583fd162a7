"""Exact arithmetic kernel: Gaussian rationals and truncated Taylor series.

Everything in this module is exact.  Coefficients live in Q(i), complex
numbers whose real and imaginary parts are arbitrary-precision rationals
(`fractions.Fraction`).  A :class:`Series` keeps coefficients c0..cN for a
fixed truncation order N; arithmetic never extends the trustworthy range,
so mixed-order operands truncate to the minimum order.  Floating point
enters only through the explicit ``complex()`` conversions used by callers
that sample values numerically.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ZeroConstantTerm

__all__ = ["GaussRational", "Series", "gauss"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class GaussRational:
    """Exact complex number with rational real and imaginary parts.

    Instances are immutable by convention: no method mutates ``re``/``im``
    after construction, so values can be shared freely across threads.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        return GaussRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = GaussRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure -----------------------------------------------------

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|self|^2, exact."""
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def literal(self) -> str:
        """Exact text form: ``p/q``, ``r/s i`` or ``p/q+r/s i``."""
        def frac_str(f: Fraction) -> str:
            return str(f)

        if self.im == 0:
            return frac_str(self.re)
        imag = f"{frac_str(abs(self.im))} i" if abs(self.im) != 1 else "i"
        sign = "-" if self.im < 0 else ""
        if self.re == 0:
            return sign + imag
        joiner = "-" if self.im < 0 else "+"
        return f"{frac_str(self.re)}{joiner}{imag}"

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"


def gauss(x) -> GaussRational:
    """Coerce an int, Fraction or GaussRational to GaussRational."""
    if isinstance(x, GaussRational):
        return x
    return GaussRational(_frac(x))


_ZERO = GaussRational(0)
_ONE = GaussRational(1)


class Series:
    """Truncated Taylor series c0 + c1 z + ... + cN z^N over Q(i).

    The order N is ``len(coeffs) - 1``.  Results of binary operations
    carry the minimum of the operand orders; nothing ever silently
    extends the range a result is exact on.  Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = [gauss(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1]
            cs += [_ZERO] * (order + 1 - len(cs))
        elif not cs:
            raise ValueError("empty coefficients without explicit order")
        self.coeffs = tuple(cs)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([_ONE], order=order)

    @classmethod
    def var(cls, order: int) -> "Series":
        """The series of z itself."""
        return cls([_ZERO, _ONE], order=order)

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls([gauss(c)], order=order)

    # -- basics ----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> GaussRational:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient index {n} outside order {self.order}")
        return self.coeffs[n]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def all_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("truncate cannot extend the order")
        return Series(self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def prefix_equal(self, other: "Series", upto: int) -> bool:
        """Exact coefficient equality for indices 0..upto."""
        if upto > self.order or upto > other.order:
            raise ValueError("prefix longer than an operand's order")
        return self.coeffs[: upto + 1] == other.coeffs[: upto + 1]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return Series([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)])

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = _ZERO
            for j in range(k + 1):
                if j <= self.order and k - j <= other.order:
                    acc = acc + a[j] * b[k - j]
            out.append(acc)
        return Series(out)

    __rmul__ = __mul__

    def scale(self, c) -> "Series":
        c = gauss(c)
        return Series([c * x for x in self.coeffs])

    def reciprocal(self) -> "Series":
        """Multiplicative inverse up to the series order.

        Uses the triangular recurrence d0 = 1/c0,
        dn = -(sum_{k=1..n} ck d(n-k)) / c0.
        """
        c0 = self.coeffs[0]
        if c0.is_zero:
            raise ZeroConstantTerm("reciprocal of a series with zero constant term")
        inv0 = _ONE / c0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = _ZERO
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-acc * inv0)
        return Series(out)

    def derivative(self) -> "Series":
        """Termwise d/dz; the order drops by one (a constant stays order 0)."""
        if self.order == 0:
            return Series.zero(0)
        return Series([self.coeffs[n] * n for n in range(1, self.order + 1)])

    def antiderivative(self) -> "Series":
        """Termwise integral from 0; constant term 0, order grows by one.

        Any information the operand lacked above its own order is simply
        absent from the result's top coefficient; callers that need order
        N in the result should provide an integrand of order N-1.
        """
        out = [_ZERO]
        for n, c in enumerate(self.coeffs):
            out.append(c / (n + 1))
        return Series(out)

    def compose_linear(self, c) -> "Series":
        """Substitute z -> c*z: coefficient n picks up a factor c^n."""
        c = gauss(c)
        out = []
        power = _ONE
        for coeff in self.coeffs:
            out.append(power * coeff)
            power = power * c
        return Series(out)

    # -- numeric evaluation -------------------------------------------------

    def eval(self, z):
        """Horner evaluation at a complex scalar or numpy array."""
        acc = 0j if not hasattr(z, "shape") else z * 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 7 else ""
        return f"Series([{shown}{more}], order={self.order})"
