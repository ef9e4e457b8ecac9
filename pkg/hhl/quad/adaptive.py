# -*- coding: utf-8 -*-
# hhl - Hausdorff operators on the Heisenberg group, checked numerically
# Copyright(C) 2026, The hhl developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
Adaptive one dimensional quadrature and the radial reduction

    int_{a < |x|_h < b} g(|x|_h) dx = omega_Q int_a^b g(rho) rho^(Q-1) drho.

The radial integral is computed in u = ln rho. A finite middle part (split at
the breakpoints of the profile) is integrated with adaptive composite
Gauss-Legendre; improper ends are summed over dyadic shells in rho, and a
ratio test on successive shells decides between convergence and divergence.
"""

import heapq
import math

import numpy as np
from numpy.polynomial import legendre

from hhl import defs
from hhl.model.fields import RadialProfile
from hhl.utils.exceptions import DivergenceError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


_nodes, _weights = legendre.leggauss(defs.gauss_points)


def _gauss(func, a, b):
    half = (b - a) / 2
    x = (a + b) / 2 + half * _nodes
    values = np.asarray(func(x), dtype=float)
    return half * float(np.dot(_weights, values))


def _panel(func, a, b, whole=None):
    if whole is None:
        whole = _gauss(func, a, b)
    m = (a + b) / 2
    left = _gauss(func, a, m)
    right = _gauss(func, m, b)
    return left + right, abs(left + right - whole), left, right


def integrate_1d(func, a, b, rel_tol=defs.quad_rel_tol,
                 abs_tol=defs.quad_abs_tol, max_panels=defs.quad_max_panels):
    '''Adaptive composite Gauss-Legendre on a finite interval.

    func must accept numpy arrays. The panel with the largest error estimate
    (|two halves - whole|) is split until the summed error meets
    max(abs_tol, rel_tol |value|).

    :return: (value, error estimate)
    :raises DivergenceError: if the budget of panels is exhausted
    '''
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ParameterError(_('integrate_1d needs finite bounds'))
    if a == b:
        return 0.0, 0.0
    if a > b:
        value, err = integrate_1d(func, b, a, rel_tol, abs_tol, max_panels)
        return -value, err

    value, err, left, right = _panel(func, a, b)
    if not math.isfinite(value):
        raise DivergenceError(_('integrand is not finite on [%g, %g]') % (a, b),
                              partial=value, witness=a)

    # heap of (-err, a, b, value, err, left, right)
    heap = [(-err, a, b, value, err, left, right)]
    total = value
    total_err = err
    panels = 1
    while total_err > max(abs_tol, rel_tol * abs(total)):
        if panels >= max_panels:
            raise DivergenceError(
                _('quadrature did not converge on [%(a)g, %(b)g] within '
                  '%(n)i panels') % {'a': a, 'b': b, 'n': max_panels},
                partial=total, witness=heap[0][1])
        item = heapq.heappop(heap)
        total -= item[3]
        total_err -= item[4]
        pa, pb = item[1], item[2]
        m = (pa + pb) / 2
        for lo, hi, whole in ((pa, m, item[5]), (m, pb, item[6])):
            v, e, l, r = _panel(func, lo, hi, whole)
            if not math.isfinite(v):
                raise DivergenceError(
                    _('integrand is not finite on [%g, %g]') % (lo, hi),
                    partial=total, witness=lo)
            heapq.heappush(heap, (-e, lo, hi, v, e, l, r))
            total += v
            total_err += e
        panels += 1

    heap.sort(key=lambda p: p[1])
    return math.fsum(p[3] for p in heap), math.fsum(p[4] for p in heap)


def _tail(c, previous, q):
    '''Geometric remainder after the shell c; zero if the shells change sign.'''
    if c * previous < 0:
        return 0.0
    return c * q / (1 - q)


def _shell_series(shell, edge, rel_tol, abs_tol):
    '''Sum shell(k), k = 0, 1, ... with the dyadic ratio test.

    :param edge: function k -> radius of the outer edge of shell k (witness)
    :return: (value, error)
    '''
    total = 0.0
    err = 0.0
    previous = None
    ratios = []
    slow = 0
    zeros = 0
    for k in range(defs.max_shells):
        c, e = shell(k)
        if not math.isfinite(c):
            raise DivergenceError(_('integrand is not finite near %g') % edge(k),
                                  partial=total, witness=edge(k))
        total += c
        err += e

        if c == 0:
            zeros += 1
            previous = None
            if zeros >= defs.ratio_window:
                return total, err
            continue
        zeros = 0

        if previous is not None:
            q = abs(c / previous)
            ratios.append(q)
            slow = slow + 1 if q >= defs.ratio_threshold else 0
            if slow >= defs.ratio_window:
                raise DivergenceError(
                    _('dyadic shells do not decay (ratio %(q).4f) near '
                      'radius %(r)g') % {'q': q, 'r': edge(k)},
                    partial=total, witness=edge(k))

            if len(ratios) >= defs.ratio_lookback:
                q_max = max(ratios[-defs.ratio_lookback:])
                if q_max < defs.ratio_threshold:
                    tail = _tail(c, previous, q_max)
                    if abs(tail) <= max(abs_tol, rel_tol * abs(total)):
                        return total + tail, err + abs(tail)
        previous = c

    # Out of shells while still decaying: accept with the geometric tail
    if ratios and max(ratios[-defs.ratio_lookback:]) < defs.ratio_threshold:
        q_max = max(ratios[-defs.ratio_lookback:])
        tail = _tail(previous, previous, q_max) if previous is not None else 0.0
        return total + tail, err + abs(tail)
    raise DivergenceError(_('no convergence after %i dyadic shells') %
                          defs.max_shells, partial=total,
                          witness=edge(defs.max_shells - 1))


def _integrate_log(h, u0, u1, rel_tol, abs_tol):
    '''integrate_1d in u = ln rho, reporting the witness as a radius.'''
    try:
        return integrate_1d(h, u0, u1, rel_tol, abs_tol)
    except DivergenceError as exc:
        raise DivergenceError(str(exc), partial=exc.partial,
                              witness=math.exp(exc.witness))


def integrate_radial(g, dim, a=0.0, b=math.inf, rel_tol=defs.quad_rel_tol,
                     abs_tol=defs.quad_abs_tol, degree=0):
    '''omega_Q int_a^b g(rho) rho^(degree + Q - 1) drho.

    With degree = -Q a kernel g(rho) rho^-Q is integrated without forming
    rho^-Q, which overflows for rho below about 1e-77.

    :param g: RadialProfile (or plain vectorised callable of rho)
    :param degree: extra power of rho, applied in log space; the hint of g
        does not include it
    :return: (value, error estimate)
    :raises DivergenceError: with the partial value and the radius where the
        verdict was made
    '''
    if not isinstance(g, RadialProfile):
        g = RadialProfile(g)
    if a < 0 or not a <= b:
        raise ParameterError(_('requires 0 <= a <= b'))
    Q = dim.Q
    omega = dim.omega_Q

    lo, hi = g.restricted(float(a), float(b))
    if not lo < hi:
        return 0.0, 0.0

    hint = g.singular_exponent_hint
    if lo == 0 and hint is not None and hint + degree <= -Q:
        raise DivergenceError(
            _('g(rho) ~ rho^%(s)g is not integrable at 0 (needs > -%(Q)i)') %
            {'s': hint + degree, 'Q': Q}, partial=math.inf, witness=0.0)

    def h(u):
        rho = np.exp(u)
        with np.errstate(over='ignore', invalid='ignore'):
            return g(rho) * np.exp((Q + degree) * u)

    inner = [p for p in g.breakpoints if lo < p < hi]
    anchors = inner + [1.0] if lo < 1.0 < hi else inner
    core_lo = lo if lo > 0 else (min(anchors) if anchors else min(1.0, hi))
    core_hi = hi if math.isfinite(hi) else (max(anchors) if anchors
                                            else max(1.0, core_lo))

    value = 0.0
    err = 0.0

    if core_lo < core_hi:
        cuts = [core_lo] + [p for p in inner if core_lo < p < core_hi] + [core_hi]
        for left, right in zip(cuts[:-1], cuts[1:]):
            v, e = _integrate_log(h, math.log(left), math.log(right),
                                  rel_tol, abs_tol)
            value += v
            err += e

    w = defs.shell_width
    if lo == 0:
        u0 = math.log(core_lo)
        try:
            v, e = _shell_series(
                lambda k: _integrate_log(h, u0 - (k + 1) * w, u0 - k * w,
                                         rel_tol, abs_tol),
                lambda k: math.exp(u0 - (k + 1) * w), rel_tol, abs_tol)
        except DivergenceError as exc:
            raise DivergenceError(str(exc), partial=omega * (value + exc.partial),
                                  witness=exc.witness)
        value += v
        err += e

    if not math.isfinite(hi):
        u1 = math.log(core_hi)
        try:
            v, e = _shell_series(
                lambda k: _integrate_log(h, u1 + k * w, u1 + (k + 1) * w,
                                         rel_tol, abs_tol),
                lambda k: math.exp(u1 + (k + 1) * w), rel_tol, abs_tol)
        except DivergenceError as exc:
            raise DivergenceError(str(exc), partial=omega * (value + exc.partial),
                                  witness=exc.witness)
        value += v
        err += e

    return omega * value, omega * err
