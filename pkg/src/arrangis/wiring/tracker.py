"""Wiring diagram of an arrangement along a piecewise-linear path in the x-line.

Strands are ordered by the real part of y.  Every crossing time is the root
of a linear equation in the path parameter and is computed exactly; floats
only pre-filter which pairs can cross on a segment.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction
from typing import Sequence

from ..algebra import CyclotomicNumber, real_part, sign_im, sign_re
from ..geometry import AffineLine, Arrangement, GenericityError, ProjectionFrame
from .braids import OVER_UPPER, BraidWord
from .diagram import Braid, Singular, WiringDiagram

K = CyclotomicNumber

# -1: the strand with the smaller imaginary part of y passes over (calibrated
# so that the MacLane arrangement with zeta = exp(2 pi i/3) gives zeta^2).
IM_OVER_SIGN = -1

_SLACK = 1e-6


def _cmp_re(a: K, b: K) -> int:
    return sign_re(a - b)


def _step(gaps: Sequence[K]) -> Fraction:
    """Rational h with 3h below every gap (exactly)."""
    smallest = min((g.to_complex().real for g in gaps), default=1.0)
    h = Fraction(max(smallest, 1e-9) / 4).limit_denominator(10**6)
    while h > 0 and any(sign_re(g - 3 * h) <= 0 for g in gaps):
        h /= 2
    return h


def _base_point(lines: Sequence[AffineLine], x1: K) -> K:
    """Real x_0 left of x_1 and of every real-axis crossing of two strands,
    so that nothing happens between x = -infinity and x_0."""
    x0 = real_part(x1)
    for li, lj in itertools.combinations(lines, 2):
        dm = real_part(li.slope - lj.slope)
        if dm.is_zero():
            continue
        t = -real_part(li.intercept - lj.intercept) / dm
        if sign_re(t - x0) < 0:
            x0 = t
    return x0 - 1


def _crossings(lines: Sequence[AffineLine], a: K, b: K, skip: frozenset[str]) -> list:
    """(t, label_i, label_j, D(t)) for strand pairs whose real parts swap on
    the open segment a -> b, where D(t) = y_i - y_j at the crossing."""
    fa, fb = a.to_complex(), b.to_complex()
    out = []
    for li, lj in itertools.combinations(lines, 2):
        if li.label in skip and lj.label in skip:
            continue
        dm = li.slope - lj.slope
        dc = li.intercept - lj.intercept
        fdm, fdc = dm.to_complex(), dc.to_complex()
        r0f = (fdm * fa + fdc).real
        r1f = (fdm * (fb - fa)).real
        if abs(r1f) > _SLACK:
            tf = -r0f / r1f
            if tf < -_SLACK or tf > 1 + _SLACK:
                continue
        elif abs(r0f) > _SLACK:
            continue
        d0 = dm * a + dc
        d1 = dm * (b - a)
        if sign_re(d1) == 0:
            if sign_re(d0) == 0:
                raise GenericityError(f"strands {li.label} and {lj.label} share a real part along a segment")
            continue
        t = -real_part(d0) / real_part(d1)
        lo, hi = sign_re(t), sign_re(t - 1)
        if lo < 0 or hi > 0:
            continue
        if lo == 0 or hi == 0:
            raise GenericityError(f"strands {li.label} and {lj.label} cross at a path vertex")
        diff = d0 + t * d1
        if sign_im(diff) == 0:
            raise GenericityError(f"strands {li.label} and {lj.label} meet off the singular fibers")
        out.append((t, li.label, lj.label, diff))
    out.sort(key=functools.cmp_to_key(lambda p, q: _cmp_re(p[0], q[0])))
    for p, q in zip(out, out[1:]):
        if _cmp_re(p[0], q[0]) == 0:
            raise GenericityError("simultaneous crossings")
    return out


def _start_order(lines: Sequence[AffineLine], x0: K) -> list[str]:
    ys = {l.label: l.at(x0) for l in lines}
    order = sorted(ys, key=functools.cmp_to_key(lambda p, q: _cmp_re(ys[p], ys[q])))
    for p, q in zip(order, order[1:]):
        if _cmp_re(ys[p], ys[q]) == 0:
            raise GenericityError(f"strands {p} and {q} start with equal real parts")
    return order


def compute_wiring(arr: Arrangement, frame: ProjectionFrame) -> WiringDiagram:
    """Wiring diagram over the path x_0 -> x_1 -> ... -> x_k that runs
    horizontally through each singular value x_u."""
    lines = frame.lines
    n = len(lines)
    order_k = arr.order
    points = frame.points
    if not points:
        return WiringDiagram(n, tuple(_start_order(lines, K(order_k))), ())
    xs = [p.x for p in points]
    h = _step([b - a for a, b in zip(xs, xs[1:])])
    if h <= 0:
        raise GenericityError("singular values too close to separate")
    x0 = _base_point(lines, xs[0])
    order = _start_order(lines, x0)
    labels = tuple(order)
    events: list = []
    letters: list[int] = []

    def run(a: K, b: K, skip: frozenset[str]) -> None:
        for _, li, lj, diff in _crossings(lines, a, b, skip):
            pi, pj = order.index(li), order.index(lj)
            if abs(pi - pj) != 1:
                raise GenericityError(f"strands {li} and {lj} cross while not adjacent")
            lower = min(pi, pj)
            upper_minus_lower = diff if order[lower + 1] == li else -diff
            upper_over = IM_OVER_SIGN * sign_im(upper_minus_lower) > 0
            letters.append((lower + 1) if upper_over == OVER_UPPER else -(lower + 1))
            order[lower], order[lower + 1] = order[lower + 1], order[lower]

    def flush() -> None:
        if letters:
            events.append(Braid(BraidWord(n, tuple(letters))))
            letters.clear()

    prev = x0
    for u, p in enumerate(points):
        block = frozenset(p.lines)
        run(prev, p.x - h, frozenset())
        run(p.x - h, p.x, block)
        flush()
        pos = sorted(order.index(l) for l in p.lines)
        if pos[-1] - pos[0] != len(pos) - 1:
            raise GenericityError(f"strands through {p.point} are not consecutive")
        slopes = [real_part(frame.line(l).slope) for l in p.lines]
        if any(sign_re(s - t) == 0 for s, t in itertools.combinations(slopes, 2)):
            raise GenericityError(f"strands through {p.point} leave with equal real slope")
        events.append(Singular(p.point, pos[0] + 1, pos[-1] + 1))
        order[pos[0]:pos[-1] + 1] = reversed(order[pos[0]:pos[-1] + 1])
        run(p.x, p.x + h, block)
        prev = p.x + h
    flush()
    diagram = WiringDiagram(n, labels, tuple(events))
    if list(diagram.final_labels) != _start_order(lines, prev):
        raise GenericityError("strand bookkeeping disagrees with the end fiber")
    return diagram
