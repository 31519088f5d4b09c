"""First-order dual numbers over the complex field, for forward-mode derivatives.

A ``Dual(v, e)`` represents v + e*eps with eps^2 = 0.  Kinematic quantities
built from a dual spectral parameter carry their u-derivative along, which is
how transfer matrices and R-matrices are differentiated without step-size
tuning.  ``DualOp`` is the operator-valued analogue: a (value, derivative)
pair of sparse operators with the Leibniz product rule.
"""
from __future__ import annotations

import cmath


class Dual:
    """Complex dual number v + e*eps used for first-order differentiation."""

    __slots__ = ("v", "e")

    def __init__(self, v, e=0j):
        self.v = complex(v)
        self.e = complex(e)

    def __repr__(self):
        return f"Dual({self.v!r}, {self.e!r})"

    def __add__(self, o):
        if isinstance(o, Dual):
            return Dual(self.v + o.v, self.e + o.e)
        return Dual(self.v + o, self.e)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.v, -self.e)

    def __sub__(self, o):
        if isinstance(o, Dual):
            return Dual(self.v - o.v, self.e - o.e)
        return Dual(self.v - o, self.e)

    def __rsub__(self, o):
        return Dual(o - self.v, -self.e)

    def __mul__(self, o):
        if isinstance(o, Dual):
            return Dual(self.v * o.v, self.v * o.e + self.e * o.v)
        return Dual(self.v * o, self.e * o)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, Dual):
            return Dual(self.v / o.v, (self.e * o.v - self.v * o.e) / (o.v * o.v))
        return Dual(self.v / o, self.e / o)

    def __rtruediv__(self, o):
        # o / self with o plain
        return Dual(o / self.v, -o * self.e / (self.v * self.v))

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("dual powers are integer only")
        if n == 0:
            return Dual(1.0)
        out = self
        for _ in range(abs(n) - 1):
            out = out * self
        return out if n > 0 else 1.0 / out

    def __abs__(self):
        return abs(self.v)


def dval(x):
    """Value part of a scalar that may or may not be dual."""
    return x.v if isinstance(x, Dual) else complex(x)


def deps(x):
    """Derivative part of a scalar; zero for plain numbers."""
    return x.e if isinstance(x, Dual) else 0j


def dsqrt(x):
    """Principal square root, dual-aware."""
    if isinstance(x, Dual):
        s = cmath.sqrt(x.v)
        return Dual(s, x.e / (2.0 * s))
    return cmath.sqrt(complex(x))


class DualOp:
    """Pair (value, derivative) of operators with Leibniz composition.

    Components are any objects supporting +, -, scalar * and @ (FockOp in
    practice).  Mixing with a plain operator treats it as derivative zero.
    """

    __slots__ = ("val", "eps")

    def __init__(self, val, eps):
        self.val = val
        self.eps = eps

    def __add__(self, o):
        if isinstance(o, DualOp):
            return DualOp(self.val + o.val, self.eps + o.eps)
        return DualOp(self.val + o, self.eps)

    __radd__ = __add__

    def __sub__(self, o):
        if isinstance(o, DualOp):
            return DualOp(self.val - o.val, self.eps - o.eps)
        return DualOp(self.val - o, self.eps)

    def __matmul__(self, o):
        if isinstance(o, DualOp):
            return DualOp(self.val @ o.val, self.val @ o.eps + self.eps @ o.val)
        return DualOp(self.val @ o, self.eps @ o)

    def __rmatmul__(self, o):
        return DualOp(o @ self.val, o @ self.eps)

    def __mul__(self, s):
        if isinstance(s, Dual):
            return DualOp(self.val * s.v, self.val * s.e + self.eps * s.v)
        return DualOp(self.val * s, self.eps * s)

    __rmul__ = __mul__
