"""Hand-rolled forward-mode automatic differentiation.

Two number types are provided:

``Dual``
    value plus a gradient vector; one pass yields all first partials.
``HyperDual``
    value plus two first-order slots and one mixed second-order slot;
    one pass per index pair yields an exact Hessian entry.

The module-level math functions (``sqrt``, ``exp``, ``atan2``, ...) accept
plain floats as well, so the same scalar pipeline can be evaluated with or
without derivative tracking.
"""

from __future__ import annotations

import math

import numpy as np


class Dual:
    """First-order dual number with a vector-valued derivative part."""

    __slots__ = ("val", "grad")

    def __init__(self, val: float, grad):
        self.val = float(val)
        self.grad = np.asarray(grad, dtype=float)

    @classmethod
    def seed(cls, values, i: int) -> "Dual":
        """Variable number for coordinate ``i`` of the point ``values``."""
        g = np.zeros(len(values))
        g[i] = 1.0
        return cls(values[i], g)

    def _lift(self, other) -> "Dual":
        if isinstance(other, Dual):
            return other
        return Dual(other, np.zeros_like(self.grad))

    def __add__(self, other):
        o = self._lift(other)
        return Dual(self.val + o.val, self.grad + o.grad)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.val, -self.grad)

    def __sub__(self, other):
        o = self._lift(other)
        return Dual(self.val - o.val, self.grad - o.grad)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        return Dual(self.val * o.val, self.val * o.grad + o.val * self.grad)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        inv = 1.0 / o.val
        return Dual(self.val * inv, (self.grad - self.val * inv * o.grad) * inv)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def chain(self, f: float, fprime: float) -> "Dual":
        """Apply a univariate function with value ``f`` and slope ``fprime``."""
        return Dual(f, fprime * self.grad)

    def __repr__(self):
        return f"Dual({self.val}, {self.grad})"


class HyperDual:
    """Second-order number tracking two directions and their mixed partial."""

    __slots__ = ("val", "d1", "d2", "d12")

    def __init__(self, val, d1=0.0, d2=0.0, d12=0.0):
        self.val = float(val)
        self.d1 = float(d1)
        self.d2 = float(d2)
        self.d12 = float(d12)

    @staticmethod
    def _lift(other) -> "HyperDual":
        if isinstance(other, HyperDual):
            return other
        return HyperDual(other)

    def __add__(self, other):
        o = self._lift(other)
        return HyperDual(self.val + o.val, self.d1 + o.d1, self.d2 + o.d2, self.d12 + o.d12)

    __radd__ = __add__

    def __neg__(self):
        return HyperDual(-self.val, -self.d1, -self.d2, -self.d12)

    def __sub__(self, other):
        o = self._lift(other)
        return HyperDual(self.val - o.val, self.d1 - o.d1, self.d2 - o.d2, self.d12 - o.d12)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        return HyperDual(
            self.val * o.val,
            self.d1 * o.val + self.val * o.d1,
            self.d2 * o.val + self.val * o.d2,
            self.d12 * o.val + self.val * o.d12 + self.d1 * o.d2 + self.d2 * o.d1,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return self * o._reciprocal()

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def _reciprocal(self):
        inv = 1.0 / self.val
        return self.chain(inv, -inv * inv, 2.0 * inv * inv * inv)

    def chain(self, f: float, fp: float, fpp: float) -> "HyperDual":
        """Apply a univariate function given value and two derivatives."""
        return HyperDual(
            f,
            fp * self.d1,
            fp * self.d2,
            fp * self.d12 + fpp * self.d1 * self.d2,
        )

    def __repr__(self):
        return f"HyperDual({self.val}, {self.d1}, {self.d2}, {self.d12})"


def _apply(x, f, fp, fpp):
    if isinstance(x, HyperDual):
        return x.chain(f(x.val), fp(x.val), fpp(x.val))
    if isinstance(x, Dual):
        return x.chain(f(x.val), fp(x.val))
    return f(x)


def sqrt(x):
    return _apply(
        x, math.sqrt, lambda v: 0.5 / math.sqrt(v), lambda v: -0.25 / v ** 1.5
    )


def exp(x):
    return _apply(x, math.exp, math.exp, math.exp)


def log(x):
    return _apply(x, math.log, lambda v: 1.0 / v, lambda v: -1.0 / (v * v))


def sin(x):
    return _apply(x, math.sin, math.cos, lambda v: -math.sin(v))


def cos(x):
    return _apply(x, math.cos, lambda v: -math.sin(v), lambda v: -math.cos(v))


def sinh(x):
    return _apply(x, math.sinh, math.cosh, math.sinh)


def cosh(x):
    return _apply(x, math.cosh, math.sinh, math.cosh)


def value(x) -> float:
    """Plain float value of a float, Dual or HyperDual."""
    if isinstance(x, (Dual, HyperDual)):
        return x.val
    return float(x)


def atan2(n, d):
    """Two-argument arctangent with derivative propagation in both slots."""
    if not isinstance(n, (Dual, HyperDual)) and not isinstance(d, (Dual, HyperDual)):
        return math.atan2(n, d)
    nv, dv = value(n), value(d)
    s = nv * nv + dv * dv
    v = math.atan2(nv, dv)
    fn = dv / s
    fd = -nv / s
    if isinstance(n, Dual) or isinstance(d, Dual):
        ng = n.grad if isinstance(n, Dual) else np.zeros_like(d.grad)
        dg = d.grad if isinstance(d, Dual) else np.zeros_like(n.grad)
        return Dual(v, fn * ng + fd * dg)
    n = HyperDual._lift(n)
    d = HyperDual._lift(d)
    fnn = -2.0 * nv * dv / (s * s)
    fdd = 2.0 * nv * dv / (s * s)
    fnd = (nv * nv - dv * dv) / (s * s)
    return HyperDual(
        v,
        fn * n.d1 + fd * d.d1,
        fn * n.d2 + fd * d.d2,
        fn * n.d12
        + fd * d.d12
        + fnn * n.d1 * n.d2
        + fnd * (n.d1 * d.d2 + n.d2 * d.d1)
        + fdd * d.d1 * d.d2,
    )


def gradient(func, x):
    """Gradient of ``func`` at point ``x`` (sequence of floats) via duals."""
    x = np.asarray(x, dtype=float)
    seeds = [Dual.seed(x, i) for i in range(len(x))]
    out = func(*seeds)
    return value(out), np.array(out.grad, dtype=float)


def hessian(func, x):
    """Value, gradient and exact Hessian of ``func`` via hyper-duals."""
    x = np.asarray(x, dtype=float)
    n = len(x)
    grad = np.zeros(n)
    hess = np.zeros((n, n))
    val = None
    for i in range(n):
        for j in range(i, n):
            args = [
                HyperDual(x[k], 1.0 if k == i else 0.0, 1.0 if k == j else 0.0)
                for k in range(n)
            ]
            out = func(*args)
            val = out.val
            grad[i] = out.d1
            hess[i, j] = hess[j, i] = out.d12
    return val, grad, hess
