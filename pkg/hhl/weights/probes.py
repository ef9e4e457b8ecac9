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
Family restricted probes of weight conditions.

All conditions quantify over every ball; the probes only visit a finite
family and therefore certify lower bounds of the true constants. Central
balls use closed forms. Other balls use one stratified sample per ball, and
every average is self normalised (divided by the sampled measure of the
ball), so that the averages of w and of its powers share the same random
points.
"""

import math
import threading

import numpy as np

from hhl import defs
from hhl import log
from hhl import quad
from hhl.model import heisenberg
from hhl.model.heisenberg import BallSpec
from hhl.model.results import ApProbeReport
from hhl.utils import parallel
from hhl.utils.exceptions import DivergenceError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


def default_family(dim):
    '''63 balls: 9 centres (the origin and |c| in {1/2, 1, 2, 4} along a
    horizontal and the vertical axis) times radii 2^k, k = -3..3.'''
    centres = [np.zeros(dim.coords)]
    for c in defs.family_center_radii:
        horizontal = np.zeros(dim.coords)
        horizontal[0] = c
        vertical = np.zeros(dim.coords)
        vertical[-1] = c * c
        centres.extend([horizontal, vertical])

    family = list()
    for centre in centres:
        for k in defs.family_radius_exponents:
            family.append(BallSpec(tuple(centre), 2.0 ** k))
    return family


def _nearest_on_ray(B):
    '''Deterministic probe point of B close to the origin.

    The origin if it lies in B, otherwise the first point of the dilation
    orbit t -> delta_t(c) (t in [0, 1]) that enters B, found by bisection.
    '''
    centre = B.center_array
    if B.contains_origin():
        return np.zeros_like(centre)
    lo, hi = 0.0, 1.0
    for i in range(60):
        mid = (lo + hi) / 2
        if mid > 0 and B.contains(heisenberg.dilate(mid, centre)):
            hi = mid
        else:
            lo = mid
    return heisenberg.dilate(hi, centre)


class _BallAverages(object):
    '''Averages over one ball, shared between several powers of w.'''

    def __init__(self, w, B, cfg):
        self.w = w
        self.B = B
        self.central = B.is_central
        if not self.central:
            self.sample = quad.sample_region(B, w.dim, cfg)
            self.volume = float(np.sum(self.sample.weights))
            self.values = w(self.sample.points)

    def _singular(self, t):
        '''True if w^t is not integrable on B.'''
        w = self.w
        if w.kind != 'power' or w.alpha * t > -w.dim.Q:
            return False
        return self.B.contains_origin()

    def average(self, t=1.0):
        '''avg_B w^t'''
        if self._singular(t):
            return math.inf
        if self.central:
            return (self.w.power(t).central_mass(self.B.radius) /
                    self.B.measure())
        with np.errstate(divide='ignore', over='ignore'):
            powered = self.values ** t
        return float(np.sum(self.sample.weights * powered)) / self.volume

    def infimum(self):
        if self.central:
            return self.w.central_infimum(self.B.radius)
        probe = float(self.w(_nearest_on_ray(self.B)))
        return min(float(np.min(self.values)), probe)


def _ap_ratio(w, p, B, cfg):
    averages = _BallAverages(w, B, cfg)
    avg = averages.average()
    if p == 1:
        inf = averages.infimum()
        if inf <= 0:
            return math.inf
        ratio = avg / inf
    else:
        dual = averages.average(-1.0 / (p - 1))
        ratio = avg * dual ** (p - 1)
    if not ratio < defs.weight_overflow:
        return math.inf
    return ratio


def _max_report(p, family, ratios):
    best = 0
    for i, ratio in enumerate(ratios):
        if ratio > ratios[best]:
            best = i
    return ApProbeReport(p, ratios[best], family[best], len(family), ratios)


def _run(func, family, cfg, label):
    log.progressbar.start(len(family), label)
    lock = threading.Lock()
    done = [0]

    def job(B):
        res = func(B)
        with lock:
            done[0] += 1
            log.progressbar.update(done[0])
        return res

    return parallel.ordered_map(job, family, cfg.threads)


def ap_probe(w, p, family=None, cfg=None):
    '''Largest A_p ratio over the family.

    p > 1: (avg_B w)(avg_B w^(-1/(p-1)))^(p-1); p = 1: avg_B w / essinf_B w.
    A non integrable power of w on a ball gives +inf with that ball as
    witness.
    '''
    if p < 1:
        raise ParameterError(_('A_p requires p >= 1, got %g') % p)
    if cfg is None:
        cfg = quad.McConfig()
    if family is None:
        family = default_family(w.dim)
    family = list(family)
    if not family:
        raise ParameterError(_('the ball family is empty'))

    ratios = _run(lambda B: _ap_ratio(w, p, B, cfg), family, cfg, 'A_p')
    return _max_report(p, family, ratios)


def _rh_ratio(w, r, B, cfg):
    averages = _BallAverages(w, B, cfg)
    upper = averages.average(r)
    if not math.isfinite(upper):
        return math.inf
    ratio = upper ** (1.0 / r) / averages.average()
    return ratio if ratio < defs.weight_overflow else math.inf


def reverse_holder_probe(w, r, family=None, cfg=None, report=False):
    '''max over the family of (avg_B w^r)^(1/r) / avg_B w.

    :param report: return the full :py:class:`ApProbeReport` (p holds r)
        instead of the maximum
    '''
    if not r > 1:
        raise ParameterError(_('reverse Hoelder requires r > 1'))
    if cfg is None:
        cfg = quad.McConfig()
    if family is None:
        family = default_family(w.dim)
    family = list(family)

    ratios = _run(lambda B: _rh_ratio(w, r, B, cfg), family, cfg, 'RH_r')
    res = _max_report(r, family, ratios)
    if report:
        return res
    return res.max_ratio


def power_weight_sandwich_check(alpha, p, delta, dim=None, radii=(0.5, 1.0, 2.0),
                                shrink=defs.sandwich_shrink):
    '''Check C1 (|E|/|B|)^p <= w(E)/w(B) <= C2 (|E|/|B|)^((delta-1)/delta)
    for E = B(0, s r), B = B(0, r).

    C1 and C2 are calibrated on the first radius and the first shrink
    factor, then the envelopes are tested on all others. For power weights
    the lower envelope holds iff alpha <= Q(p - 1), the upper one iff
    delta <= r_w.
    '''
    from . import WeightSpec

    if dim is None:
        dim = heisenberg.HeisDim()
    if not delta > 1:
        raise ParameterError(_('requires delta > 1'))
    w = WeightSpec('power', alpha, dim).validate()
    Q = dim.Q
    upper_exp = (delta - 1) / delta
    tol = 1e-12

    C1 = C2 = None
    for r in radii:
        B = BallSpec.central(dim, r)
        for s in shrink:
            E = BallSpec.central(dim, s * r)
            ratio = w.central_mass(E.radius) / w.central_mass(B.radius)
            size = (s * r) ** Q / r ** Q
            if C1 is None:
                C1 = ratio / size ** p
                C2 = ratio / size ** upper_exp
                continue
            if C1 * size ** p > ratio * (1 + tol):
                return False
            if ratio > C2 * size ** upper_exp * (1 + tol):
                return False
    return True


def doubling_probe(w, p, family=None, factors=defs.doubling_factors, cfg=None):
    '''max of w(B(c, L R)) / (L^(Qp) w(B(c, R))) over the family and L.'''
    if cfg is None:
        cfg = quad.McConfig()
    if family is None:
        family = default_family(w.dim)
    family = list(family)
    Q = w.dim.Q

    from . import ball_mass

    def job(B):
        base = ball_mass(w, B, cfg)
        worst = 0.0
        for factor in factors:
            big = BallSpec(B.center, B.radius * factor)
            worst = max(worst, ball_mass(w, big, cfg) / (factor ** (Q * p) * base))
        return worst

    ratios = _run(job, family, cfg, 'doubling')
    return _max_report(p, family, ratios)


def average_domination_check(f, w, p, radii=None):
    '''avg_B |f| <= C (w(B)^-1 int_B |f|^p w)^(1/p) on central balls.

    f and w must be radial. Returns (C, table) where C is the largest
    ratio of the two sides and table holds (r, ratio, 0) rows.
    '''
    if f.profile is None:
        raise ParameterError(_('the domination check needs a radial f'))
    if radii is None:
        radii = [2.0 ** k for k in range(defs.radius_k_min,
                                          defs.radius_k_max + 1)]
    dim = w.dim
    g = f.profile

    def absolute(rho):
        return np.abs(g(rho))

    def weighted(rho):
        return np.abs(g(rho)) ** p * w.radial(rho)

    table = list()
    for r in radii:
        B = BallSpec.central(dim, r)
        lhs = quad.integrate_radial(quad.RadialProfile(
            absolute, g.singular_exponent_hint, g.breakpoints, g.support),
            dim, 0.0, r)[0] / B.measure()
        mass = w.central_mass(r)
        hint = None
        if g.singular_exponent_hint is not None and w.kind == 'power':
            hint = g.singular_exponent_hint * p + w.alpha
        try:
            inner = quad.integrate_radial(quad.RadialProfile(
                weighted, hint, tuple(g.breakpoints) + (1.0,), g.support),
                dim, 0.0, r)[0]
        except DivergenceError:
            inner = math.inf
        rhs = (inner / mass) ** (1.0 / p)
        if rhs == 0:
            ratio = 0.0 if lhs == 0 else math.inf
        else:
            ratio = lhs / rhs
        table.append((r, ratio, 0.0))
    return max(row[1] for row in table), table
