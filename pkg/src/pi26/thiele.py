"""Thiele continued-fraction interpolation.

The interpolant through (x_1, y_1), ..., (x_N, y_N) is

    b_0 + (x - x_1) / (b_1 + (x - x_2) / (b_2 + ... + (x - x_{N-1}) / b_{N-1}))

The default fit uses inverted differences over Fractions, so the result is
exact. Passing ``digits`` instead runs the classical reciprocal-difference
table in fixed-precision decimal arithmetic, which is how a 50-digit
computer-algebra session would produce the coefficients; the two agree to
roughly ``digits - 5`` places on the data used here.

For display, the two innermost levels are folded into an affine tail:
``b_{N-2} + (x - x_{N-1}) / b_{N-1} == c_{N-1} + K*x`` with ``K = 1/b_{N-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence


class ThieleError(ValueError):
    pass


class BreakdownError(ThieleError):
    def __init__(self, level: int, nodes: Sequence):
        self.level = level
        self.nodes = tuple(nodes)
        super().__init__(f"inverted-difference breakdown at level {level}, nodes {list(map(str, self.nodes))}")


class PoleError(ThieleError, ZeroDivisionError):
    def __init__(self, x):
        self.x = x
        super().__init__(f"interpolant has a pole at x = {x}")


class FoldError(ThieleError):
    pass


def _as_number(v, digits):
    if digits is None:
        return Fraction(v)
    if isinstance(v, Fraction):
        return Decimal(v.numerator) / Decimal(v.denominator)
    return +Decimal(v)


@dataclass(frozen=True)
class ThieleInterpolant:
    nodes: tuple
    levels: tuple
    digits: int | None = None

    def __post_init__(self):
        if len(self.nodes) < 2 or not 1 <= len(self.levels) <= len(self.nodes):
            raise ThieleError("need at least two nodes and at most one level per node")

    def __call__(self, x):
        return eval_thiele(self, x)

    @property
    def folded(self) -> tuple[list, object]:
        return folded_coefficients(self)


def inverted_difference_levels(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """phi_k = (x_i - x_{k-1}) / (phi_{k-1}(x_i) - b_{k-1}), column by column.

    If every remaining cell of a column would divide by zero, the levels so
    far already interpolate all points and the fraction terminates early.
    A zero denominator in only some cells is a breakdown.
    """
    n = len(xs)
    levels = []
    col = list(ys)  # col[i] holds the current inverted difference for node i (i >= k)
    for k in range(n):
        levels.append(col[k])
        rest = range(k + 1, n)
        zero = [i for i in rest if col[i] == col[k]]
        if zero and len(zero) == len(rest):
            break
        if zero:
            raise BreakdownError(k + 1, list(xs[: k + 1]) + [xs[zero[0]]])
        for i in rest:
            col[i] = (xs[i] - xs[k]) / (col[i] - col[k])
    return levels


def reciprocal_difference_levels(xs: Sequence, ys: Sequence) -> list:
    """Thiele levels from the reciprocal-difference table rho.

    rho_0(x_i) = y_i, rho_1(x_i, x_{i+1}) = (x_i - x_{i+1}) / (y_i - y_{i+1}),
    rho_k(x_i..x_{i+k}) = (x_i - x_{i+k}) / (rho_{k-1}(x_i..) - rho_{k-1}(x_{i+1}..))
                          + rho_{k-2}(x_{i+1}..x_{i+k-1}),
    and b_k = rho_k(x_1..x_{k+1}) - rho_{k-2}(x_1..x_{k-1}).
    Works for any field type; with Decimal it runs in the ambient context.
    """
    n = len(xs)
    prev2 = None
    prev = list(ys)
    firsts = [prev[0]]
    for k in range(1, n):
        cur = []
        for i in range(n - k):
            den = prev[i] - prev[i + 1]
            if den == 0:
                raise BreakdownError(k, xs[i : i + k + 1])
            v = (xs[i] - xs[i + k]) / den
            if prev2 is not None:
                v = v + prev2[i + 1]
            cur.append(v)
        prev2, prev = prev, cur
        firsts.append(cur[0])
    levels = [firsts[0]]
    if n > 1:
        levels.append(firsts[1])
    for k in range(2, n):
        levels.append(firsts[k] - firsts[k - 2])
    return levels


def fit_thiele(points: Iterable[tuple], digits: int | None = None) -> ThieleInterpolant:
    pts = list(points)
    if len(pts) < 2:
        raise ThieleError("need at least two points")
    if len(set(Fraction(x) for x, _ in pts)) != len(pts):
        raise ThieleError("duplicate nodes")
    if digits is None:
        xs = [Fraction(x) for x, _ in pts]
        ys = [Fraction(y) for _, y in pts]
        return ThieleInterpolant(tuple(xs), tuple(inverted_difference_levels(xs, ys)))
    with localcontext() as ctx:
        ctx.prec = digits
        xs = [_as_number(x, digits) for x, _ in pts]
        ys = [_as_number(y, digits) for _, y in pts]
        levels = reciprocal_difference_levels(xs, ys)
    return ThieleInterpolant(tuple(xs), tuple(levels), digits)


def _eval_levels(nodes, levels, x):
    # innermost out; None stands for an infinite partial value
    v = levels[-1]
    for k in range(len(levels) - 2, -1, -1):
        num = x - nodes[k]
        if v is None:
            v = levels[k]
        elif v == 0:
            if num == 0:
                raise PoleError(x)
            v = None
        else:
            v = levels[k] + num / v
    if v is None:
        raise PoleError(x)
    return v


def eval_thiele(t: ThieleInterpolant, x):
    if t.digits is None:
        return _eval_levels(t.nodes, t.levels, Fraction(x))
    with localcontext() as ctx:
        ctx.prec = t.digits
        return _eval_levels(t.nodes, t.levels, _as_number(x, t.digits))


def folded_coefficients(t: ThieleInterpolant) -> tuple[list, object]:
    """Return ``([c_1, ..., c_{N-1}], K)``; see the module docstring."""
    b, xs = t.levels, t.nodes
    if len(b) < 2:
        raise FoldError("a constant interpolant has no affine tail to fold")
    if b[-1] == 0:
        raise FoldError(f"innermost level is zero; unfolded levels: {[str(v) for v in b]}")
    with localcontext() as ctx:
        if t.digits is not None:
            ctx.prec = t.digits
        K = 1 / b[-1] if t.digits is not None else Fraction(1) / b[-1]
        tail = b[-2] - xs[len(b) - 2] * K
    return list(b[:-2]) + [tail], K


def eval_folded(cs: Sequence, K, nodes: Sequence, x):
    """Evaluate c_1 + (x - x_1)/(c_2 + ... (x - x_{N-2})/(c_{N-1} + K*x))."""
    x = Fraction(x) if isinstance(K, Fraction) else x
    v = cs[-1] + K * x
    return _eval_levels(list(nodes[: len(cs) - 1]), list(cs[:-1]) + [v], x)
